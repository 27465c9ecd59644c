//! Covers for DP-coloring: list assignments, per-edge matchings, M-colorings,
//! straightening, and the vertex-identification reduction.
//!
//! For each edge `uv` the matching pairs colors of `u` with colors of `v`;
//! the cover is the graph on all (vertex, color) pairs whose edges are those
//! matchings. An M-coloring picks one color per vertex hitting no matched
//! pair. Matchings may be partial or empty.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::SimpleGraph;

pub type Color = u32;

/// Per-vertex color lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<Color>>) -> ListAssignment {
        let lists = lists
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        ListAssignment { lists }
    }

    /// Every list equal to `{1..k}`.
    pub fn uniform(n: usize, k: u32) -> ListAssignment {
        ListAssignment { lists: vec![(1..=k).collect(); n] }
    }

    pub fn n(&self) -> usize {
        self.lists.len()
    }

    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn contains(&self, v: usize, c: Color) -> bool {
        self.lists[v].binary_search(&c).is_ok()
    }

    /// `Some(k)` when every list is exactly `{1..k}`.
    pub fn uniform_k(&self) -> Option<u32> {
        let k = self.lists.first()?.len() as u32;
        for l in &self.lists {
            if l.len() as u32 != k || l.iter().zip(1..=k).any(|(&c, want)| c != want) {
                return None;
            }
        }
        Some(k)
    }
}

/// A matching assignment: for each edge, a matching between the endpoint
/// lists, stored as explicit `(color at min endpoint, color at max endpoint)`
/// pairs. Absent edges have empty matchings.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MatchingAssignment {
    matchings: BTreeMap<(usize, usize), Vec<(Color, Color)>>,
}

impl MatchingAssignment {
    pub fn new() -> MatchingAssignment {
        MatchingAssignment::default()
    }

    fn key(u: usize, v: usize) -> (usize, usize) {
        (u.min(v), u.max(v))
    }

    /// Sets the matching for edge `u-v`; pairs are `(color at u, color at v)`.
    pub fn set_pairs(&mut self, u: usize, v: usize, pairs: Vec<(Color, Color)>) {
        let mut stored: Vec<(Color, Color)> = if u <= v {
            pairs
        } else {
            pairs.into_iter().map(|(a, b)| (b, a)).collect()
        };
        stored.sort_unstable();
        stored.dedup();
        if stored.is_empty() {
            self.matchings.remove(&Self::key(u, v));
        } else {
            self.matchings.insert(Self::key(u, v), stored);
        }
    }

    /// Pairs for edge `u-v`, oriented as `(color at u, color at v)`.
    pub fn pairs(&self, u: usize, v: usize) -> Vec<(Color, Color)> {
        match self.matchings.get(&Self::key(u, v)) {
            None => Vec::new(),
            Some(ps) if u <= v => ps.clone(),
            Some(ps) => ps.iter().map(|&(a, b)| (b, a)).collect(),
        }
    }

    /// The color at `v` matched with `(u, cu)`, if any.
    pub fn partner(&self, u: usize, cu: Color, v: usize) -> Option<Color> {
        let ps = self.matchings.get(&Self::key(u, v))?;
        if u <= v {
            ps.iter().find(|&&(a, _)| a == cu).map(|&(_, b)| b)
        } else {
            ps.iter().find(|&&(_, b)| b == cu).map(|&(a, _)| a)
        }
    }

    /// `(u, cu)-(v, cv)` is a matched pair.
    pub fn is_matched(&self, u: usize, cu: Color, v: usize, cv: Color) -> bool {
        self.partner(u, cu, v) == Some(cv)
    }

    /// Edges carrying at least one pair, normalized ascending.
    pub fn edges_with_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.matchings.keys().copied()
    }

    pub fn total_pairs(&self) -> usize {
        self.matchings.values().map(Vec::len).sum()
    }

    /// Applies per-vertex renamings: pair `(cu, cv)` becomes
    /// `(rho[u][cu], rho[v][cv])`.
    pub fn rename(&self, rho: &[Vec<Color>]) -> MatchingAssignment {
        let mut out = MatchingAssignment::new();
        for (&(u, v), ps) in &self.matchings {
            let pairs = ps
                .iter()
                .map(|&(a, b)| (rho[u][(a - 1) as usize], rho[v][(b - 1) as usize]))
                .collect();
            out.set_pairs(u, v, pairs);
        }
        out
    }

    /// Keeps only edges present in `keep` (normalized pairs).
    pub fn restrict(&self, keep: &BTreeSet<(usize, usize)>) -> MatchingAssignment {
        let mut out = MatchingAssignment::new();
        for (&(u, v), ps) in &self.matchings {
            if keep.contains(&(u, v)) {
                out.matchings.insert((u, v), ps.clone());
            }
        }
        out
    }
}

/// A full M-coloring: one color per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MColoring {
    pub colors: Vec<Color>,
}

impl MColoring {
    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }
}

/// A closed walk `w_0 w_1 ... w_m` with `w_m = w_0`, consecutive
/// vertices adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedWalk {
    vertices: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WalkError {
    #[error("closed walk must revisit its start and have length >= 3")]
    TooShort,
    #[error("walk step {u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },
}

impl ClosedWalk {
    /// `vertices` lists the walk without the repeated endpoint; the closing
    /// step back to `vertices[0]` is implicit.
    pub fn new(g: &SimpleGraph, vertices: Vec<usize>) -> Result<ClosedWalk, WalkError> {
        if vertices.len() < 3 {
            return Err(WalkError::TooShort);
        }
        for i in 0..vertices.len() {
            let u = vertices[i];
            let v = vertices[(i + 1) % vertices.len()];
            if !g.has_edge(u, v) {
                return Err(WalkError::NotAnEdge { u, v });
            }
        }
        Ok(ClosedWalk { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Directed steps including the closing one.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertices.len())
            .map(move |i| (self.vertices[i], self.vertices[(i + 1) % self.vertices.len()]))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverError {
    #[error("edge {u}-{v}: color {color} of vertex {vertex} appears in two pairs")]
    NotAMatching { u: usize, v: usize, vertex: usize, color: Color },
    #[error("edge {u}-{v}: pair uses color {color} outside the list of {vertex}")]
    ColorOutsideList { u: usize, v: usize, vertex: usize, color: Color },
    #[error("matching given for {u}-{v}, which is not an edge")]
    UnknownEdge { u: usize, v: usize },
}

/// Vertex/edge counts of the cover graph H.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverStats {
    pub cover_vertices: usize,
    pub cover_edges: usize,
}

/// Checks conditions (C1)/(C2): each per-edge pair set is a matching using
/// only listed colors, and every matched edge exists in the host graph.
pub fn validate_cover(
    g: &SimpleGraph,
    lists: &ListAssignment,
    m: &MatchingAssignment,
) -> Result<CoverStats, CoverError> {
    for (u, v) in m.edges_with_pairs() {
        if !g.has_edge(u, v) {
            return Err(CoverError::UnknownEdge { u, v });
        }
        let pairs = m.pairs(u, v);
        let mut seen_u = BTreeSet::new();
        let mut seen_v = BTreeSet::new();
        for (cu, cv) in pairs {
            if !lists.contains(u, cu) {
                return Err(CoverError::ColorOutsideList { u, v, vertex: u, color: cu });
            }
            if !lists.contains(v, cv) {
                return Err(CoverError::ColorOutsideList { u, v, vertex: v, color: cv });
            }
            if !seen_u.insert(cu) {
                return Err(CoverError::NotAMatching { u, v, vertex: u, color: cu });
            }
            if !seen_v.insert(cv) {
                return Err(CoverError::NotAMatching { u, v, vertex: v, color: cv });
            }
        }
    }
    Ok(CoverStats {
        cover_vertices: (0..lists.n()).map(|v| lists.list(v).len()).sum(),
        cover_edges: m.total_pairs(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeFlags {
    /// Every matched pair joins equal colors (vacuously true when empty).
    pub is_straight: bool,
    /// The matching is a perfect matching between the two lists.
    pub is_full: bool,
}

/// Straight/full flags for one edge.
pub fn edge_predicates(
    g: &SimpleGraph,
    lists: &ListAssignment,
    m: &MatchingAssignment,
    u: usize,
    v: usize,
) -> Result<EdgeFlags, CoverError> {
    if !g.has_edge(u, v) {
        return Err(CoverError::UnknownEdge { u, v });
    }
    let pairs = m.pairs(u, v);
    let is_straight = pairs.iter().all(|&(a, b)| a == b);
    let lu = lists.list(u).len();
    let lv = lists.list(v).len();
    let is_full = lu == lv && pairs.len() == lu && lu > 0;
    Ok(EdgeFlags { is_straight, is_full })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Consistency {
    Consistent,
    /// A chain of matched pairs around the walk starting and ending at the
    /// same vertex with different colors; one color per walk position.
    Inconsistent { chain: Vec<Color> },
}

impl Consistency {
    pub fn is_consistent(&self) -> bool {
        matches!(self, Consistency::Consistent)
    }
}

/// Follows every chain of matched pairs around the closed walk. Matchings
/// force each chain, so there are at most `|L(w_0)|` of them.
pub fn consistency_on_walk(
    lists: &ListAssignment,
    m: &MatchingAssignment,
    walk: &ClosedWalk,
) -> Consistency {
    let start = walk.vertices()[0];
    for &c0 in lists.list(start) {
        let mut chain = vec![c0];
        let mut c = c0;
        let mut alive = true;
        for (u, v) in walk.steps() {
            match m.partner(u, c, v) {
                Some(next) => {
                    chain.push(next);
                    c = next;
                }
                None => {
                    alive = false;
                    break;
                }
            }
        }
        if alive && c != c0 {
            return Consistency::Inconsistent { chain };
        }
    }
    Consistency::Consistent
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleDefect {
    /// An edge on the cycle whose matching is not a perfect matching.
    NonFullEdge { u: usize, v: usize },
    /// A chain around the cycle returning with a different color.
    Inconsistent { chain: Vec<Color> },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StraightenError {
    #[error("straightening requires every list to equal {{1..k}}")]
    NonUniformLists,
    #[error("subgraph edge {u}-{v} is not an edge of the host graph")]
    UnknownEdge { u: usize, v: usize },
    #[error("cycle {cycle:?} violates the straightening precondition")]
    PreconditionViolated { cycle: Vec<usize>, defect: CycleDefect },
}

/// Result of straightening: the renamed assignment plus the per-vertex color
/// permutations (`renaming[v][c-1]` is the new name of color `c` at `v`), so
/// colorings transfer bijectively between the two assignments.
#[derive(Debug, Clone)]
pub struct Straightened {
    pub matching: MatchingAssignment,
    pub renaming: Vec<Vec<Color>>,
}

/// Renames colors vertex-by-vertex so that every edge of the subgraph `h`
/// becomes straight. Succeeds whenever every cycle of `h` is consistent and
/// full; on failure reports a violating cycle of `h`.
pub fn straighten(
    g: &SimpleGraph,
    lists: &ListAssignment,
    m: &MatchingAssignment,
    h_edges: &[(usize, usize)],
) -> Result<Straightened, StraightenError> {
    let k = lists.uniform_k().ok_or(StraightenError::NonUniformLists)? as usize;
    let n = g.n();
    let mut h_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in h_edges {
        if u >= n || v >= n || !g.has_edge(u, v) {
            return Err(StraightenError::UnknownEdge { u, v });
        }
        h_adj[u].push(v);
        h_adj[v].push(u);
    }
    for a in &mut h_adj {
        a.sort_unstable();
        a.dedup();
    }

    let identity: Vec<Color> = (1..=k as u32).collect();
    let mut rho: Vec<Vec<Color>> = vec![identity; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut visited = vec![false; n];

    for root in 0..n {
        if visited[root] || h_adj[root].is_empty() {
            continue;
        }
        visited[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in &h_adj[u] {
                if visited[v] {
                    continue;
                }
                visited[v] = true;
                parent[v] = Some(u);
                // Choose rho_v so that edge u-v becomes straight, then fill
                // the unmatched colors ascending.
                let mut new_rho = vec![0u32; k];
                let mut used = vec![false; k];
                for (cu, cv) in m.pairs(u, v) {
                    let target = rho[u][(cu - 1) as usize];
                    new_rho[(cv - 1) as usize] = target;
                    used[(target - 1) as usize] = true;
                }
                let mut free = (1..=k as u32).filter(|&c| !used[(c - 1) as usize]);
                for slot in new_rho.iter_mut() {
                    if *slot == 0 {
                        *slot = free.next().expect("renaming is a permutation");
                    }
                }
                rho[v] = new_rho;
                queue.push_back(v);
            }
        }
    }

    let renamed = m.rename(&rho);
    // Tree edges are straight by construction; a violated non-tree edge
    // certifies a bad fundamental cycle.
    for &(u, v) in h_edges {
        let all_straight = renamed.pairs(u, v).iter().all(|&(a, b)| a == b);
        if all_straight {
            continue;
        }
        let cycle = fundamental_cycle(&parent, u, v);
        let defect = diagnose_cycle(g, lists, m, &cycle);
        return Err(StraightenError::PreconditionViolated { cycle, defect });
    }
    Ok(Straightened { matching: renamed, renaming: rho })
}

fn fundamental_cycle(parent: &[Option<usize>], u: usize, v: usize) -> Vec<usize> {
    let path_to_root = |mut x: usize| {
        let mut p = vec![x];
        while let Some(q) = parent[x] {
            p.push(q);
            x = q;
        }
        p
    };
    let pu = path_to_root(u);
    let pv = path_to_root(v);
    let in_pu: BTreeSet<usize> = pu.iter().copied().collect();
    let lca = *pv.iter().find(|x| in_pu.contains(x)).expect("same tree");
    let mut cycle: Vec<usize> = pu.iter().take_while(|&&x| x != lca).copied().collect();
    cycle.push(lca);
    let down: Vec<usize> = pv.into_iter().take_while(|&x| x != lca).collect();
    cycle.extend(down.into_iter().rev());
    cycle
}

fn diagnose_cycle(
    g: &SimpleGraph,
    lists: &ListAssignment,
    m: &MatchingAssignment,
    cycle: &[usize],
) -> CycleDefect {
    for i in 0..cycle.len() {
        let u = cycle[i];
        let v = cycle[(i + 1) % cycle.len()];
        let flags = edge_predicates(g, lists, m, u, v).expect("cycle edge exists");
        if !flags.is_full {
            return CycleDefect::NonFullEdge { u: u.min(v), v: u.max(v) };
        }
    }
    let walk = ClosedWalk::new(g, cycle.to_vec()).expect("cycle is a closed walk");
    match consistency_on_walk(lists, m, &walk) {
        Consistency::Inconsistent { chain } => CycleDefect::Inconsistent { chain },
        Consistency::Consistent => {
            unreachable!("non-straight fundamental cycle with full edges must be inconsistent")
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdentifyError {
    #[error("vertex {0} is in the removed set")]
    RemovedEndpoint(usize),
    #[error("identifying {u} and {v} would create a loop")]
    LoopCreated { u: usize, v: usize },
    #[error("matchings of {u}-{x} and {v}-{x} conflict at color {color} of the merged vertex")]
    MatchingConflict { u: usize, v: usize, x: usize, color: Color },
}

/// Result of deleting `removed` and identifying two vertices.
#[derive(Debug, Clone)]
pub struct Identified {
    pub graph: SimpleGraph,
    pub matching: MatchingAssignment,
    /// Old vertex id to new id; removed vertices map to `None`, and both
    /// identified vertices map to [`Identified::merged`].
    pub old_to_new: Vec<Option<usize>>,
    pub merged: usize,
}

/// Deletes `removed`, then merges `u` and `v` into one vertex carrying the
/// union of both neighborhoods; every surviving edge keeps its matching with
/// colors unchanged. Shared neighbors whose two matchings do not union into a
/// matching are reported, never silently merged.
pub fn identify(
    g: &SimpleGraph,
    m: &MatchingAssignment,
    removed: &BTreeSet<usize>,
    u: usize,
    v: usize,
) -> Result<Identified, IdentifyError> {
    assert!(u != v && u < g.n() && v < g.n(), "identify endpoints must be distinct vertices");
    for &x in [u, v].iter() {
        if removed.contains(&x) {
            return Err(IdentifyError::RemovedEndpoint(x));
        }
    }
    if g.has_edge(u, v) {
        return Err(IdentifyError::LoopCreated { u, v });
    }

    let mut old_to_new: Vec<Option<usize>> = vec![None; g.n()];
    let mut new_to_old: Vec<usize> = Vec::new();
    for x in 0..g.n() {
        if removed.contains(&x) || x == v {
            continue;
        }
        old_to_new[x] = Some(new_to_old.len());
        new_to_old.push(x);
    }
    let next = new_to_old.len();
    let merged = old_to_new[u].unwrap();
    old_to_new[v] = Some(merged);

    let mut edge_pairs: BTreeMap<(usize, usize), Vec<(Color, Color)>> = BTreeMap::new();
    for &(a, b) in g.edges() {
        let (na, nb) = match (old_to_new[a], old_to_new[b]) {
            (Some(na), Some(nb)) => (na, nb),
            _ => continue,
        };
        debug_assert_ne!(na, nb);
        let pairs = m.pairs(a, b);
        let (key, oriented): ((usize, usize), Vec<(Color, Color)>) = if na < nb {
            ((na, nb), pairs)
        } else {
            ((nb, na), pairs.into_iter().map(|(x, y)| (y, x)).collect())
        };
        edge_pairs.entry(key).or_default().extend(oriented);
    }

    let mut matching = MatchingAssignment::new();
    let mut edges = Vec::new();
    for ((a, b), mut pairs) in edge_pairs {
        edges.push((a, b));
        pairs.sort_unstable();
        pairs.dedup();
        let mut seen_a = BTreeSet::new();
        let mut seen_b = BTreeSet::new();
        for &(ca, cb) in &pairs {
            if !seen_a.insert(ca) {
                let x = if a == merged { b } else { a };
                return Err(IdentifyError::MatchingConflict { u, v, x: new_to_old[x], color: ca });
            }
            if !seen_b.insert(cb) {
                let x = if b == merged { a } else { b };
                return Err(IdentifyError::MatchingConflict { u, v, x: new_to_old[x], color: cb });
            }
        }
        matching.set_pairs(a, b, pairs);
    }
    let graph = SimpleGraph::from_edges(next, &edges);
    Ok(Identified { graph, matching, old_to_new, merged })
}

/// Identity matchings: `(u,c)-(v,c)` for every color shared by the endpoint
/// lists. With uniform lists `{1..k}` this encodes proper k-coloring.
pub fn encode_list_coloring(g: &SimpleGraph, lists: &ListAssignment) -> MatchingAssignment {
    let mut m = MatchingAssignment::new();
    for &(u, v) in g.edges() {
        let pairs: Vec<(Color, Color)> = lists
            .list(u)
            .iter()
            .filter(|&&c| lists.contains(v, c))
            .map(|&c| (c, c))
            .collect();
        m.set_pairs(u, v, pairs);
    }
    m
}

/// Identity matchings on uniform lists `{1..k}`.
pub fn encode_proper_coloring(g: &SimpleGraph, k: u32) -> (ListAssignment, MatchingAssignment) {
    let lists = ListAssignment::uniform(g.n(), k);
    let m = encode_list_coloring(g, &lists);
    (lists, m)
}

/// How random assignments are drawn.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AssignmentProfile {
    /// A uniformly random permutation of `{1..k}` on every edge.
    FullRandomPerfect,
    /// Identity everywhere; each edge independently replaced by a random
    /// permutation with the given probability.
    IdentityWithTwists(f64),
    /// A random permutation per edge, keeping each pair independently with
    /// the given probability.
    Sparse(f64),
}

impl AssignmentProfile {
    pub fn name(&self) -> String {
        match self {
            AssignmentProfile::FullRandomPerfect => "full-random-perfect".into(),
            AssignmentProfile::IdentityWithTwists(p) => format!("identity-with-twists({p})"),
            AssignmentProfile::Sparse(p) => format!("sparse({p})"),
        }
    }
}

/// Draws a k-matching assignment for `g`, deterministically in `seed`.
pub fn random_assignment(
    g: &SimpleGraph,
    k: u32,
    seed: u64,
    profile: AssignmentProfile,
) -> MatchingAssignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = MatchingAssignment::new();
    for &(u, v) in g.edges() {
        let pairs = match profile {
            AssignmentProfile::FullRandomPerfect => permutation_pairs(&mut rng, k),
            AssignmentProfile::IdentityWithTwists(p) => {
                if rng.gen_bool(p.clamp(0.0, 1.0)) {
                    permutation_pairs(&mut rng, k)
                } else {
                    (1..=k).map(|c| (c, c)).collect()
                }
            }
            AssignmentProfile::Sparse(p) => {
                let p = p.clamp(0.0, 1.0);
                permutation_pairs(&mut rng, k)
                    .into_iter()
                    .filter(|_| rng.gen_bool(p))
                    .collect()
            }
        };
        m.set_pairs(u, v, pairs);
    }
    m
}

fn permutation_pairs(rng: &mut ChaCha8Rng, k: u32) -> Vec<(Color, Color)> {
    let mut image: Vec<Color> = (1..=k).collect();
    image.shuffle(rng);
    (1..=k).zip(image).collect()
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("vertex {vertex} colored {color}, outside its list")]
    OutsideList { vertex: usize, color: Color },
    #[error("edge {u}-{v}: chosen pair ({cu},{cv}) is matched")]
    MatchedPair { u: usize, v: usize, cu: Color, cv: Color },
    #[error("coloring covers {got} vertices, graph has {want}")]
    WrongLength { got: usize, want: usize },
}

/// Checks the M-coloring invariants: one listed color per vertex and no
/// matched pair chosen across any edge.
pub fn validate_mcoloring(
    g: &SimpleGraph,
    lists: &ListAssignment,
    m: &MatchingAssignment,
    coloring: &MColoring,
) -> Result<(), ColoringError> {
    if coloring.colors.len() != g.n() {
        return Err(ColoringError::WrongLength { got: coloring.colors.len(), want: g.n() });
    }
    for v in 0..g.n() {
        if !lists.contains(v, coloring.colors[v]) {
            return Err(ColoringError::OutsideList { vertex: v, color: coloring.colors[v] });
        }
    }
    for &(u, v) in g.edges() {
        let (cu, cv) = (coloring.colors[u], coloring.colors[v]);
        if m.is_matched(u, cu, v, cv) {
            return Err(ColoringError::MatchedPair { u, v, cu, cv });
        }
    }
    Ok(())
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CovParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
}

/// A parsed `cover v1` file, in file labels (not graph indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CovFile {
    pub k: u32,
    pub entries: Vec<(u32, u32, Vec<(Color, Color)>)>,
}

impl CovFile {
    /// Resolves file labels against a label table, yielding uniform `{1..k}`
    /// lists and the matching assignment.
    pub fn resolve(&self, labels: &[u32]) -> Result<(ListAssignment, MatchingAssignment), String> {
        let index: BTreeMap<u32, usize> =
            labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut m = MatchingAssignment::new();
        for (lu, lv, pairs) in &self.entries {
            let &u = index.get(lu).ok_or_else(|| format!("unknown vertex label {lu}"))?;
            let &v = index.get(lv).ok_or_else(|| format!("unknown vertex label {lv}"))?;
            m.set_pairs(u, v, pairs.clone());
        }
        Ok((ListAssignment::uniform(labels.len(), self.k), m))
    }
}

/// Parses the `cover v1` text format:
/// `m <u> <v> : c1-c2, c3-c4, ...`, omitted edges empty.
pub fn parse_cov(text: &str) -> Result<CovFile, CovParseError> {
    let mut k: Option<u32> = None;
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let stripped = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let tokens: Vec<&str> = stripped.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match tokens[0] {
            "cover" => {
                if tokens.len() != 3 || tokens[1] != "v1" || !tokens[2].starts_with("k=") {
                    return Err(CovParseError::Syntax {
                        line,
                        msg: "expected `cover v1 k=<k>`".into(),
                    });
                }
                k = Some(tokens[2][2..].parse().map_err(|_| CovParseError::Syntax {
                    line,
                    msg: "bad k".into(),
                })?);
            }
            "m" => {
                if tokens.len() < 4 || tokens[3] != ":" {
                    return Err(CovParseError::Syntax {
                        line,
                        msg: "expected `m <u> <v> : c1-c2, ...`".into(),
                    });
                }
                let bad = |what: &str| CovParseError::Syntax { line, msg: format!("bad {what}") };
                let u: u32 = tokens[1].parse().map_err(|_| bad("vertex id"))?;
                let v: u32 = tokens[2].parse().map_err(|_| bad("vertex id"))?;
                let rest = tokens[4..].join(" ");
                let mut pairs = Vec::new();
                for chunk in rest.split(',') {
                    let chunk = chunk.trim();
                    if chunk.is_empty() {
                        continue;
                    }
                    let (a, b) = chunk.split_once('-').ok_or_else(|| bad("pair"))?;
                    let ca: Color = a.trim().parse().map_err(|_| bad("pair color"))?;
                    let cb: Color = b.trim().parse().map_err(|_| bad("pair color"))?;
                    pairs.push((ca, cb));
                }
                entries.push((u, v, pairs));
            }
            other => {
                return Err(CovParseError::Syntax {
                    line,
                    msg: format!("unknown directive `{other}`"),
                });
            }
        }
    }
    let k = k.ok_or(CovParseError::Syntax { line: 0, msg: "missing `cover v1 k=` header".into() })?;
    Ok(CovFile { k, entries })
}

/// Serializes a matching assignment in the `cover v1` format using the given
/// vertex labels.
pub fn write_cov(m: &MatchingAssignment, labels: &[u32], k: u32) -> String {
    let mut out = format!("cover v1 k={k}\n");
    for (u, v) in m.edges_with_pairs() {
        let pairs: Vec<String> = m
            .pairs(u, v)
            .into_iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect();
        out.push_str(&format!(
            "m {} {} : {}\n",
            labels[u],
            labels[v],
            pairs.join(", ")
        ));
    }
    out
}
