//! The forbidden-configuration library and subgraph detection.
//!
//! Each pattern is an abstract graph transcribed from the corresponding
//! figure; containment is plain (not necessarily induced) subgraph
//! isomorphism. Filled dots drawn on a segment crossing are transcribed as
//! subdividing vertices of both segments. The `dump` output exists so the
//! transcriptions can be audited.

use std::collections::BTreeSet;

use crate::graph::{cycle_edges, CycleError, SimpleGraph};
use crate::TheoremId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PatternId {
    Fig1A,
    Fig1B,
    Fig1C,
    Fig2A,
    Fig2B,
    Fig2C,
    Fig3A,
    Fig3B,
    Fig4A,
    Fig4B,
}

impl PatternId {
    pub fn all() -> [PatternId; 10] {
        [
            PatternId::Fig1A,
            PatternId::Fig1B,
            PatternId::Fig1C,
            PatternId::Fig2A,
            PatternId::Fig2B,
            PatternId::Fig2C,
            PatternId::Fig3A,
            PatternId::Fig3B,
            PatternId::Fig4A,
            PatternId::Fig4B,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            PatternId::Fig1A => "FIG1_A",
            PatternId::Fig1B => "FIG1_B",
            PatternId::Fig1C => "FIG1_C",
            PatternId::Fig2A => "FIG2_A",
            PatternId::Fig2B => "FIG2_B",
            PatternId::Fig2C => "FIG2_C",
            PatternId::Fig3A => "FIG3_A",
            PatternId::Fig3B => "FIG3_B",
            PatternId::Fig4A => "FIG4_A",
            PatternId::Fig4B => "FIG4_B",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConfigPattern {
    pub id: PatternId,
    pub graph: SimpleGraph,
    pub description: &'static str,
}

/// The built-in pattern library.
pub fn pattern(id: PatternId) -> ConfigPattern {
    let (n, edges, description): (usize, &[(usize, usize)], &'static str) = match id {
        PatternId::Fig1A => (
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)],
            "house: a 4-cycle sharing an edge with a triangle",
        ),
        PatternId::Fig1B => (
            8,
            &[
                (0, 5), (5, 7), (7, 4), (4, 6), (6, 1), (1, 2), (2, 3), (3, 0),
                (0, 4), (4, 1), (4, 5),
            ],
            "5-cycle with triangles on two incident edges and a third triangle stacked at the apex",
        ),
        PatternId::Fig1C => (
            8,
            &[
                (0, 7), (7, 5), (5, 4), (4, 6), (6, 1), (1, 2), (2, 3), (3, 0),
                (5, 0), (0, 4), (4, 1),
            ],
            "5-cycle with triangles on two incident edges and a third triangle stacked at the base",
        ),
        PatternId::Fig2A => (
            4,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)],
            "4-cycle with a chord: two triangles sharing an edge",
        ),
        PatternId::Fig2B => (
            6,
            &[(0, 1), (1, 5), (5, 0), (5, 3), (3, 2), (2, 5), (0, 4), (4, 3)],
            "bowtie plus a 4-cycle through the shared vertex",
        ),
        PatternId::Fig2C => (
            8,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0),
                (0, 2), (2, 5), (5, 7),
            ],
            "4-cycle adjacent to two triangles and a 4-cycle",
        ),
        PatternId::Fig3A => (
            5,
            &[(0, 1), (1, 4), (4, 3), (3, 2), (2, 4), (4, 0)],
            "bowtie: two triangles sharing exactly one vertex",
        ),
        PatternId::Fig3B => (
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (3, 0), (0, 4)],
            "4-cycle and two edge-sharing triangles through one vertex",
        ),
        PatternId::Fig4A => (
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)],
            "house: a 4-cycle sharing an edge with a triangle",
        ),
        PatternId::Fig4B => (
            7,
            &[(0, 5), (5, 4), (4, 6), (6, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 1)],
            "5-cycle with a triangle on each of two incident edges",
        ),
    };
    ConfigPattern { id, graph: SimpleGraph::from_edges(n, edges), description }
}

pub fn library() -> Vec<ConfigPattern> {
    PatternId::all().into_iter().map(pattern).collect()
}

/// Auditable dump of the pattern library.
pub fn dump() -> String {
    let mut out = String::new();
    for p in library() {
        let edges: Vec<String> = p
            .graph
            .edges()
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        out.push_str(&format!(
            "{} vertices={} edges: {}  # {}\n",
            p.id.name(),
            p.graph.n(),
            edges.join(" "),
            p.description
        ));
    }
    out
}

/// An injective edge-preserving embedding of a pattern into a host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub pattern: PatternId,
    /// `mapping[p]` is the host vertex for pattern vertex `p`.
    pub mapping: Vec<usize>,
}

/// Finds the deterministic first subgraph embedding of `pattern` in `host`,
/// if any. Backtracking over a connectivity-first vertex order with degree
/// pruning.
pub fn contains(host: &SimpleGraph, pat: &ConfigPattern) -> Option<Witness> {
    find_embedding(host, &pat.graph).map(|mapping| Witness { pattern: pat.id, mapping })
}

pub fn find_embedding(host: &SimpleGraph, pattern: &SimpleGraph) -> Option<Vec<usize>> {
    let pn = pattern.n();
    if pn == 0 {
        return Some(Vec::new());
    }
    if pn > host.n() {
        return None;
    }
    // Matching order: max degree first, then most-ordered-neighbors.
    let mut order: Vec<usize> = Vec::with_capacity(pn);
    let mut placed = vec![false; pn];
    let first = (0..pn).max_by_key(|&p| (pattern.degree(p), std::cmp::Reverse(p))).unwrap();
    order.push(first);
    placed[first] = true;
    while order.len() < pn {
        let next = (0..pn)
            .filter(|&p| !placed[p])
            .max_by_key(|&p| {
                let anchored = pattern.neighbors(p).iter().filter(|&&q| placed[q]).count();
                (anchored, pattern.degree(p), std::cmp::Reverse(p))
            })
            .unwrap();
        order.push(next);
        placed[next] = true;
    }

    let mut mapping = vec![usize::MAX; pn];
    let mut used = vec![false; host.n()];
    fn rec(
        host: &SimpleGraph,
        pattern: &SimpleGraph,
        order: &[usize],
        pos: usize,
        mapping: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let p = order[pos];
        let anchors: Vec<usize> = pattern
            .neighbors(p)
            .iter()
            .copied()
            .filter(|&q| mapping[q] != usize::MAX)
            .collect();
        // Candidates: neighbors of the first anchor, or every host vertex.
        let candidates: Vec<usize> = match anchors.first() {
            Some(&a) => host.neighbors(mapping[a]).to_vec(),
            None => (0..host.n()).collect(),
        };
        for h in candidates {
            if used[h] || host.degree(h) < pattern.degree(p) {
                continue;
            }
            if anchors.iter().any(|&q| !host.has_edge(h, mapping[q])) {
                continue;
            }
            mapping[p] = h;
            used[h] = true;
            if rec(host, pattern, order, pos + 1, mapping, used) {
                return true;
            }
            mapping[p] = usize::MAX;
            used[h] = false;
        }
        false
    }
    if rec(host, pattern, &order, 0, &mut mapping, &mut used) {
        Some(mapping)
    } else {
        None
    }
}

/// A 4-cycle sharing edges with two distinct triangles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LlWitness {
    pub four_cycle: Vec<usize>,
    pub triangles: (Vec<usize>, Vec<usize>),
}

#[derive(Debug, Clone)]
pub struct FilterReport {
    pub theorem: TheoremId,
    pub pass: bool,
    pub witnesses: Vec<Witness>,
    pub ll_witness: Option<LlWitness>,
}

fn patterns_for(theorem: TheoremId) -> Vec<PatternId> {
    match theorem {
        TheoremId::MrThree => vec![PatternId::Fig1A, PatternId::Fig1B, PatternId::Fig1C],
        TheoremId::Mra => vec![PatternId::Fig2A, PatternId::Fig2B, PatternId::Fig2C],
        TheoremId::Mrb => vec![PatternId::Fig3A, PatternId::Fig3B],
        TheoremId::Mrc => vec![PatternId::Fig4A, PatternId::Fig4B],
        TheoremId::Ll => vec![],
    }
}

/// Checks the theorem's hypothesis on the abstract graph: no forbidden
/// configuration occurs as a subgraph. LL uses the cycle-level predicate
/// "no 4-cycle adjacent to two triangles" instead of a pattern list.
pub fn hypothesis_filter(g: &SimpleGraph, theorem: TheoremId) -> Result<FilterReport, CycleError> {
    let mut witnesses = Vec::new();
    for id in patterns_for(theorem) {
        if let Some(w) = contains(g, &pattern(id)) {
            witnesses.push(w);
        }
    }
    let ll_witness = if theorem == TheoremId::Ll {
        four_cycle_adjacent_to_two_triangles(g)?
    } else {
        None
    };
    Ok(FilterReport {
        theorem,
        pass: witnesses.is_empty() && ll_witness.is_none(),
        witnesses,
        ll_witness,
    })
}

#[derive(Debug, Clone, Default)]
pub struct GenericPredicates {
    pub adjacent_triangles: Option<(Vec<usize>, Vec<usize>)>,
    pub intersecting_triangles: Option<(Vec<usize>, Vec<usize>)>,
    pub triangle_adjacent_to_4cycle: Option<(Vec<usize>, Vec<usize>)>,
    pub four_cycle_adjacent_to_two_triangles: Option<LlWitness>,
}

/// Cycle-level predicates over all 3- and 4-cycles.
pub fn generic_predicates(g: &SimpleGraph) -> Result<GenericPredicates, CycleError> {
    let cycles = g.enumerate_cycles(4)?;
    let triangles: Vec<&Vec<usize>> = cycles.iter().filter(|c| c.len() == 3).collect();
    let quads: Vec<&Vec<usize>> = cycles.iter().filter(|c| c.len() == 4).collect();

    let mut out = GenericPredicates::default();
    'adj: for (i, t1) in triangles.iter().enumerate() {
        for t2 in &triangles[i + 1..] {
            if crate::graph::cycles_share_edge(t1, t2) {
                out.adjacent_triangles = Some(((*t1).clone(), (*t2).clone()));
                break 'adj;
            }
        }
    }
    'int: for (i, t1) in triangles.iter().enumerate() {
        for t2 in &triangles[i + 1..] {
            if crate::graph::cycles_share_vertex(t1, t2) {
                out.intersecting_triangles = Some(((*t1).clone(), (*t2).clone()));
                break 'int;
            }
        }
    }
    'tq: for t in &triangles {
        for q in &quads {
            if crate::graph::cycles_share_edge(t, q) {
                out.triangle_adjacent_to_4cycle = Some(((*t).clone(), (*q).clone()));
                break 'tq;
            }
        }
    }
    out.four_cycle_adjacent_to_two_triangles = ll_from_cycles(&triangles, &quads);
    Ok(out)
}

/// The LL(Liu-Li) predicate: some 4-cycle shares an edge with each of two
/// distinct triangles.
pub fn four_cycle_adjacent_to_two_triangles(
    g: &SimpleGraph,
) -> Result<Option<LlWitness>, CycleError> {
    let cycles = g.enumerate_cycles(4)?;
    let triangles: Vec<&Vec<usize>> = cycles.iter().filter(|c| c.len() == 3).collect();
    let quads: Vec<&Vec<usize>> = cycles.iter().filter(|c| c.len() == 4).collect();
    Ok(ll_from_cycles(&triangles, &quads))
}

fn ll_from_cycles(triangles: &[&Vec<usize>], quads: &[&Vec<usize>]) -> Option<LlWitness> {
    for q in quads {
        let q_edges: BTreeSet<(usize, usize)> = cycle_edges(q).collect();
        let adj: Vec<&&Vec<usize>> = triangles
            .iter()
            .filter(|t| cycle_edges(t).any(|e| q_edges.contains(&e)))
            .collect();
        if adj.len() >= 2 {
            return Some(LlWitness {
                four_cycle: (*q).clone(),
                triangles: ((*adj[0]).clone(), (*adj[1]).clone()),
            });
        }
    }
    None
}
