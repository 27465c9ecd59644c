//! Exact M-coloring search and adversarial DP-chromatic numbers.
//!
//! The search is plain backtracking with forward checking: assigning a color
//! removes its matched partners from the neighbors' candidate sets. Variable
//! order is smallest-candidate-set first with ties by vertex id, values
//! ascending, so outcomes and statistics are deterministic.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::cover::{
    validate_mcoloring, Color, ListAssignment, MColoring, MatchingAssignment,
};
use crate::exec;
use crate::graph::SimpleGraph;
use crate::TheoremId;

/// Default node-expansion cap. Exhaustion is reported separately from
/// `NoExtension`; the theorems predict extensions, so hitting the budget is a
/// test-failure signal rather than a mathematical claim.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Candidate sets are 32-bit masks, so color symbols must stay below this.
pub const MAX_COLOR: Color = 32;

#[derive(Debug, Clone)]
pub struct SearchProblem<'a> {
    pub graph: &'a SimpleGraph,
    pub lists: &'a ListAssignment,
    pub matching: &'a MatchingAssignment,
    pub precolored: Vec<(usize, Color)>,
    pub budget: u64,
}

impl<'a> SearchProblem<'a> {
    pub fn new(
        graph: &'a SimpleGraph,
        lists: &'a ListAssignment,
        matching: &'a MatchingAssignment,
    ) -> SearchProblem<'a> {
        SearchProblem { graph, lists, matching, precolored: Vec::new(), budget: DEFAULT_BUDGET }
    }

    pub fn with_precolored(mut self, precolored: Vec<(usize, Color)>) -> SearchProblem<'a> {
        self.precolored = precolored;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> SearchProblem<'a> {
        self.budget = budget;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStatus {
    Extended(MColoring),
    NoExtension,
    BudgetExhausted,
}

impl SearchStatus {
    pub fn label(&self) -> &'static str {
        match self {
            SearchStatus::Extended(_) => "extended",
            SearchStatus::NoExtension => "no-extension",
            SearchStatus::BudgetExhausted => "budget-exhausted",
        }
    }

    pub fn is_extended(&self) -> bool {
        matches!(self, SearchStatus::Extended(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    pub nodes: u64,
    pub max_depth: usize,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub stats: SearchStats,
}

/// One line of the documented outcome record format.
pub fn outcome_record(instance_id: &str, outcome: &SearchOutcome) -> String {
    format!(
        "result {} {} nodes={} depth={}",
        instance_id,
        outcome.status.label(),
        outcome.stats.nodes,
        outcome.stats.max_depth
    )
}

struct Searcher<'a> {
    graph: &'a SimpleGraph,
    /// partner[v][i][c-1]: color at neighbor i of v matched with (v, c), or 0.
    partner: Vec<Vec<Vec<Color>>>,
    cand: Vec<u32>,
    colors: Vec<Color>,
    assigned: Vec<bool>,
    nodes: u64,
    budget: u64,
    max_depth: usize,
    depth: usize,
}

enum Searched {
    Found,
    Exhausted,
    OutOfBudget,
}

impl<'a> Searcher<'a> {
    fn run(&mut self) -> Searched {
        let next = (0..self.graph.n())
            .filter(|&v| !self.assigned[v])
            .min_by_key(|&v| (self.cand[v].count_ones(), v));
        let v = match next {
            Some(v) => v,
            None => return Searched::Found,
        };
        let mut avail = self.cand[v];
        while avail != 0 {
            let bit = avail.trailing_zeros();
            avail &= avail - 1;
            let c = bit + 1;
            self.nodes += 1;
            if self.nodes > self.budget {
                return Searched::OutOfBudget;
            }
            let mut trail: Vec<(usize, u32)> = Vec::new();
            if self.assign(v, c, &mut trail) {
                self.depth += 1;
                self.max_depth = self.max_depth.max(self.depth);
                match self.run() {
                    Searched::Found => return Searched::Found,
                    Searched::OutOfBudget => return Searched::OutOfBudget,
                    Searched::Exhausted => {}
                }
                self.depth -= 1;
            }
            self.undo(v, &trail);
        }
        Searched::Exhausted
    }

    /// Assigns and forward-checks; returns false (leaving the trail for the
    /// caller to undo) when some neighbor's candidate set empties.
    fn assign(&mut self, v: usize, c: Color, trail: &mut Vec<(usize, u32)>) -> bool {
        self.assigned[v] = true;
        self.colors[v] = c;
        for (i, &u) in self.graph.neighbors(v).iter().enumerate() {
            if self.assigned[u] {
                continue;
            }
            let p = self.partner[v][i][(c - 1) as usize];
            if p == 0 {
                continue;
            }
            let mask = 1u32 << (p - 1);
            if self.cand[u] & mask != 0 {
                self.cand[u] &= !mask;
                trail.push((u, mask));
                if self.cand[u] == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn undo(&mut self, v: usize, trail: &[(usize, u32)]) {
        self.assigned[v] = false;
        self.colors[v] = 0;
        for &(u, mask) in trail {
            self.cand[u] |= mask;
        }
    }
}

/// Complete backtracking search for an M-coloring extending the precolored
/// set. `NoExtension` is only returned after exhausting the space.
pub fn find_mcoloring(p: &SearchProblem) -> SearchOutcome {
    let start = Instant::now();
    let g = p.graph;
    let n = g.n();
    let mut cand = vec![0u32; n];
    for v in 0..n {
        for &c in p.lists.list(v) {
            assert!(c >= 1 && c < MAX_COLOR, "color {c} outside supported range");
            cand[v] |= 1 << (c - 1);
        }
    }
    let partner: Vec<Vec<Vec<Color>>> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .map(|&u| {
                    let mut tab = vec![0u32; 32];
                    for &c in p.lists.list(v) {
                        if let Some(pc) = p.matching.partner(v, c, u) {
                            tab[(c - 1) as usize] = pc;
                        }
                    }
                    tab
                })
                .collect()
        })
        .collect();

    let mut s = Searcher {
        graph: g,
        partner,
        cand,
        colors: vec![0; n],
        assigned: vec![false; n],
        nodes: 0,
        budget: p.budget,
        max_depth: 0,
        depth: 0,
    };

    // Seed the precoloring. A matched pair inside it can never extend.
    let mut dead = false;
    for &(v, c) in &p.precolored {
        if !p.lists.contains(v, c) {
            dead = true;
            break;
        }
        for &(u, cu) in &p.precolored {
            if u != v && g.has_edge(v, u) && p.matching.is_matched(v, c, u, cu) {
                dead = true;
            }
        }
    }
    if !dead {
        let mut trail = Vec::new();
        for &(v, c) in &p.precolored {
            if s.assigned[v] {
                dead = s.colors[v] != c;
                if dead {
                    break;
                }
                continue;
            }
            if s.cand[v] & (1 << (c - 1)) == 0 || !s.assign(v, c, &mut trail) {
                dead = true;
                break;
            }
            s.depth += 1;
        }
        s.max_depth = s.max_depth.max(s.depth);
    }

    let status = if dead {
        SearchStatus::NoExtension
    } else {
        match s.run() {
            Searched::Found => {
                let coloring = MColoring { colors: s.colors.clone() };
                validate_mcoloring(g, p.lists, p.matching, &coloring)
                    .expect("search produced an invalid coloring");
                for &(v, c) in &p.precolored {
                    assert_eq!(coloring.colors[v], c, "search changed a precolored vertex");
                }
                SearchStatus::Extended(coloring)
            }
            Searched::Exhausted => SearchStatus::NoExtension,
            Searched::OutOfBudget => SearchStatus::BudgetExhausted,
        }
    };
    SearchOutcome {
        status,
        stats: SearchStats { nodes: s.nodes, max_depth: s.max_depth, elapsed: start.elapsed() },
    }
}

/// The shape of the precolored set in the extension theorems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrecoloredSet {
    SingleVertex(usize),
    /// Vertex sequence of a cycle; consecutive vertices (and last-first)
    /// must be adjacent.
    Cycle(Vec<usize>),
}

impl PrecoloredSet {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            PrecoloredSet::SingleVertex(v) => vec![*v],
            PrecoloredSet::Cycle(c) => c.clone(),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtendError {
    #[error("theorem {theorem} does not accept this S: {reason}")]
    BadS { theorem: TheoremId, reason: String },
    #[error("precoloring violates a constraint inside S: {reason}")]
    BadPrecoloring { reason: String },
}

/// Validates the theorem's S-shape and precoloring, then searches.
pub fn extend_precolored(
    g: &SimpleGraph,
    lists: &ListAssignment,
    m: &MatchingAssignment,
    s: &PrecoloredSet,
    phi: &[(usize, Color)],
    theorem: TheoremId,
    budget: u64,
) -> Result<SearchOutcome, ExtendError> {
    let bad_s = |reason: String| ExtendError::BadS { theorem, reason };
    let bound = theorem
        .cycle_bound()
        .ok_or_else(|| bad_s("theorem has no extension form".into()))?;
    match s {
        PrecoloredSet::SingleVertex(v) => {
            if !theorem.allows_single_vertex() {
                return Err(bad_s("single-vertex S not allowed".into()));
            }
            if *v >= g.n() {
                return Err(bad_s(format!("vertex {v} out of range")));
            }
        }
        PrecoloredSet::Cycle(cycle) => {
            if cycle.len() < 3 || cycle.len() > bound {
                return Err(bad_s(format!(
                    "cycle length {} outside 3..={bound}",
                    cycle.len()
                )));
            }
            let distinct: BTreeSet<usize> = cycle.iter().copied().collect();
            if distinct.len() != cycle.len() {
                return Err(bad_s("cycle repeats a vertex".into()));
            }
            for i in 0..cycle.len() {
                let u = cycle[i];
                let v = cycle[(i + 1) % cycle.len()];
                if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                    return Err(bad_s(format!("{u}-{v} is not an edge")));
                }
            }
        }
    }

    let s_vertices = s.vertices();
    let s_set: BTreeSet<usize> = s_vertices.iter().copied().collect();
    let phi_vertices: BTreeSet<usize> = phi.iter().map(|&(v, _)| v).collect();
    if phi_vertices != s_set || phi.len() != s_set.len() {
        return Err(ExtendError::BadPrecoloring {
            reason: "precoloring must cover exactly the vertices of S".into(),
        });
    }
    for &(v, c) in phi {
        if !lists.contains(v, c) {
            return Err(ExtendError::BadPrecoloring {
                reason: format!("color {c} not in the list of {v}"),
            });
        }
    }
    // All edges inside S count, chords included.
    for &(u, cu) in phi {
        for &(v, cv) in phi {
            if u < v && g.has_edge(u, v) && m.is_matched(u, cu, v, cv) {
                return Err(ExtendError::BadPrecoloring {
                    reason: format!("matched pair ({cu},{cv}) on edge {u}-{v}"),
                });
            }
        }
    }

    let problem = SearchProblem::new(g, lists, m)
        .with_precolored(phi.to_vec())
        .with_budget(budget);
    Ok(find_mcoloring(&problem))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChiDpError {
    #[error("graph too large for adversarial enumeration: {reason}")]
    TooLarge { reason: String },
    #[error("search budget exhausted during enumeration")]
    BudgetExhausted,
    #[error("chi_DP exceeds k_max = {k_max}")]
    Unresolved { k_max: u32 },
}

#[derive(Debug, Clone, Copy)]
pub struct ChiDpGuard {
    pub max_edges: usize,
    pub max_k: u32,
    pub max_assignments: u64,
}

impl Default for ChiDpGuard {
    fn default() -> ChiDpGuard {
        ChiDpGuard { max_edges: 12, max_k: 4, max_assignments: 2_000_000 }
    }
}

#[derive(Debug, Clone)]
pub struct ChiDpResult {
    pub chi: u32,
    /// An uncolorable full assignment at `chi - 1` (absent when `chi == 1`).
    pub hard_assignment: Option<MatchingAssignment>,
}

/// Smallest k such that every full k-matching assignment admits an
/// M-coloring, plus a witness assignment for k-1. Only perfect matchings are
/// enumerated: removing pairs from a matching only enlarges the set of
/// colorings, so partial assignments are never harder.
///
/// With `symmetry_reduction`, a spanning forest is pinned to the identity
/// (straightening renames any assignment into this form without changing
/// colorability), shrinking the enumeration from `(k!)^E` to
/// `(k!)^(E-V+components)`.
pub fn adversarial_chi_dp(
    g: &SimpleGraph,
    k_max: u32,
    symmetry_reduction: bool,
) -> Result<ChiDpResult, ChiDpError> {
    chi_dp_impl(g, k_max, symmetry_reduction, ChiDpGuard::default(), false)
}

/// Sequential twin of [`adversarial_chi_dp`] for benchmarking.
pub fn adversarial_chi_dp_seq(
    g: &SimpleGraph,
    k_max: u32,
    symmetry_reduction: bool,
) -> Result<ChiDpResult, ChiDpError> {
    chi_dp_impl(g, k_max, symmetry_reduction, ChiDpGuard::default(), true)
}

/// As [`adversarial_chi_dp`] with an explicit guard.
pub fn adversarial_chi_dp_guarded(
    g: &SimpleGraph,
    k_max: u32,
    symmetry_reduction: bool,
    guard: ChiDpGuard,
) -> Result<ChiDpResult, ChiDpError> {
    chi_dp_impl(g, k_max, symmetry_reduction, guard, false)
}

fn chi_dp_impl(
    g: &SimpleGraph,
    k_max: u32,
    symmetry_reduction: bool,
    guard: ChiDpGuard,
    force_seq: bool,
) -> Result<ChiDpResult, ChiDpError> {
    if g.num_edges() > guard.max_edges {
        return Err(ChiDpError::TooLarge {
            reason: format!("{} edges exceeds guard {}", g.num_edges(), guard.max_edges),
        });
    }
    if k_max > guard.max_k {
        return Err(ChiDpError::TooLarge {
            reason: format!("k_max {k_max} exceeds guard {}", guard.max_k),
        });
    }

    let (free_edges, tree_edges) = if symmetry_reduction {
        spanning_forest_split(g)
    } else {
        (g.edges().to_vec(), Vec::new())
    };

    let mut witness: Option<MatchingAssignment> = None;
    for k in 1..=k_max {
        let perms = permutations(k);
        let base = perms.len() as u64;
        let count = base
            .checked_pow(free_edges.len() as u32)
            .filter(|&c| c <= guard.max_assignments)
            .ok_or_else(|| ChiDpError::TooLarge {
                reason: format!(
                    "(k!)^{} assignments at k={k} exceeds cap {}",
                    free_edges.len(),
                    guard.max_assignments
                ),
            })?;

        let lists = ListAssignment::uniform(g.n(), k);
        let decode = |idx: usize| -> MatchingAssignment {
            let mut m = MatchingAssignment::new();
            for &(u, v) in &tree_edges {
                m.set_pairs(u, v, (1..=k).map(|c| (c, c)).collect());
            }
            let mut rest = idx as u64;
            for &(u, v) in &free_edges {
                let p = &perms[(rest % base) as usize];
                rest /= base;
                m.set_pairs(u, v, (1..=k).zip(p.iter().copied()).collect());
            }
            m
        };
        let uncolorable = |idx: usize| -> bool {
            let m = decode(idx);
            let problem = SearchProblem::new(g, &lists, &m);
            matches!(find_mcoloring(&problem).status, SearchStatus::NoExtension)
        };

        let first_hard = if force_seq {
            exec::find_first_index_seq(count as usize, uncolorable)
        } else {
            exec::find_first_index(count as usize, uncolorable)
        };
        match first_hard {
            None => return Ok(ChiDpResult { chi: k, hard_assignment: witness }),
            Some(idx) => witness = Some(decode(idx)),
        }
    }
    Err(ChiDpError::Unresolved { k_max })
}

fn spanning_forest_split(g: &SimpleGraph) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut tree: BTreeSet<(usize, usize)> = BTreeSet::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    tree.insert((v.min(w), v.max(w)));
                    queue.push_back(w);
                }
            }
        }
    }
    let free: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| !tree.contains(e))
        .collect();
    (free, tree.into_iter().collect())
}

fn permutations(k: u32) -> Vec<Vec<Color>> {
    let mut out = Vec::new();
    let mut current: Vec<Color> = Vec::new();
    let mut used = vec![false; k as usize];
    fn rec(k: u32, current: &mut Vec<Color>, used: &mut [bool], out: &mut Vec<Vec<Color>>) {
        if current.len() == k as usize {
            out.push(current.clone());
            return;
        }
        for c in 1..=k {
            if !used[(c - 1) as usize] {
                used[(c - 1) as usize] = true;
                current.push(c);
                rec(k, current, used, out);
                current.pop();
                used[(c - 1) as usize] = false;
            }
        }
    }
    rec(k, &mut current, &mut used, &mut out);
    out
}
