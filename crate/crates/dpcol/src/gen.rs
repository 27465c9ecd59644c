//! Instance generators: named library graphs, random plane triangulations
//! with deletions, and outer-cycle instances grown to satisfy a theorem's
//! hypothesis filter.
//!
//! Growth works on an explicit rotation system through three face-local
//! primitives (hub split, path vertex, chord), each of which keeps the
//! embedding valid; every intermediate state is rebuilt and Euler-checked.
//! Deleting edges never creates a forbidden configuration, so filter repair
//! deletes one witness edge at a time until the filter passes.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::SimpleGraph;
use crate::patterns;
use crate::plane_graph::{BuildError, PlaneGraph};
use crate::TheoremId;

pub const MAX_GENERATED_VERTICES: usize = 24;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("unknown named graph `{0}`")]
    UnknownName(String),
    #[error("requested size {0} exceeds the generator guard {MAX_GENERATED_VERTICES}")]
    TooLarge(usize),
    #[error("generation failed after {attempts} attempts: {reason}")]
    GenerationFailed { attempts: usize, reason: String },
    #[error("internal build error: {0}")]
    Build(#[from] BuildError),
}

#[derive(Debug, Clone, PartialEq)]
pub enum GenProfile {
    /// Library graphs: c<n>, w<n>, prism<n>, k4, bowtie, house, theta,
    /// antiprism5, sinkpatch.
    Named(String),
    /// Random plane triangulation grown by face splits, then random inner
    /// edge deletions.
    Triangulation { n: usize, deletions: usize },
    /// Outer cycle of the given length with random internal structure; when
    /// a theorem is set, the result passes its hypothesis filter.
    OuterCycle { outer_len: usize, target_n: usize, theorem: Option<TheoremId> },
}

/// Deterministic in `(profile, seed)`.
pub fn generate(profile: &GenProfile, seed: u64) -> Result<PlaneGraph, GenError> {
    match profile {
        GenProfile::Named(name) => named(name),
        GenProfile::Triangulation { n, deletions } => triangulation(*n, *deletions, seed),
        GenProfile::OuterCycle { outer_len, target_n, theorem } => {
            outer_cycle_instance(*outer_len, *target_n, *theorem, seed)
        }
    }
}

pub fn named(name: &str) -> Result<PlaneGraph, GenError> {
    let unknown = || GenError::UnknownName(name.to_string());
    if let Some(rest) = name.strip_prefix('c') {
        if let Ok(n) = rest.parse::<usize>() {
            if n < 3 {
                return Err(unknown());
            }
            let rot = (0..n).map(|i| vec![(i + n - 1) % n, (i + 1) % n]).collect();
            return Ok(PlaneGraph::build(rot, None)?);
        }
    }
    if let Some(rest) = name.strip_prefix('w') {
        if let Ok(n) = rest.parse::<usize>() {
            if n < 3 {
                return Err(unknown());
            }
            return Ok(wheel(n)?);
        }
    }
    if let Some(rest) = name.strip_prefix("prism") {
        if let Ok(n) = rest.parse::<usize>() {
            if n < 3 {
                return Err(unknown());
            }
            return Ok(prism(n)?);
        }
    }
    match name {
        "k4" => {
            let rot = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![2, 0, 1]];
            Ok(PlaneGraph::build(rot, Some(&[0, 2, 1]))?)
        }
        "bowtie" => {
            let rot = vec![vec![4, 1], vec![0, 4], vec![4, 3], vec![2, 4], vec![1, 0, 3, 2]];
            Ok(PlaneGraph::build(rot, Some(&[1, 0, 4, 3, 2, 4]))?)
        }
        "house" => {
            let rot = vec![vec![3, 1, 4], vec![0, 2, 4], vec![1, 3], vec![2, 0], vec![0, 1]];
            Ok(PlaneGraph::build(rot, Some(&[4, 0, 3, 2, 1]))?)
        }
        "theta" => {
            let rot = vec![
                vec![5, 6, 1],
                vec![0, 2],
                vec![1, 3],
                vec![2, 6, 4],
                vec![3, 5],
                vec![4, 0],
                vec![0, 3],
            ];
            Ok(PlaneGraph::build(rot, Some(&[0, 1, 2, 3, 4, 5]))?)
        }
        "antiprism5" => Ok(antiprism5()?),
        "sinkpatch" => Ok(sinkpatch()?),
        _ => Err(unknown()),
    }
}

fn wheel(n: usize) -> Result<PlaneGraph, BuildError> {
    let mut rot: Vec<Vec<usize>> = (0..n).map(|i| vec![(i + n - 1) % n, n, (i + 1) % n]).collect();
    rot.push((0..n).rev().collect());
    let outer: Vec<usize> = (0..n).collect();
    PlaneGraph::build(rot, Some(&outer))
}

fn prism(n: usize) -> Result<PlaneGraph, BuildError> {
    // Vertices: outer ring 0..n, inner ring n..2n.
    let a = |i: usize| i % n;
    let b = |i: usize| n + i % n;
    let mut rot: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        rot.push(vec![a(i + n - 1), b(i), a(i + 1)]);
    }
    for i in 0..n {
        rot.push(vec![b(i + 1), a(i), b(i + n - 1)]);
    }
    let outer: Vec<usize> = (0..n).collect();
    PlaneGraph::build(rot, Some(&outer))
}

/// Pentagonal antiprism: inner pentagon 0..5, outer pentagon 5..10. With the
/// outer pentagon as outer face, the inner pentagon is a sink whose five
/// sources all lie on the outer cycle.
fn antiprism5() -> Result<PlaneGraph, BuildError> {
    let a = |i: usize| i % 5;
    let b = |i: usize| 5 + i % 5;
    let mut rot: Vec<Vec<usize>> = Vec::new();
    for i in 0..5 {
        rot.push(vec![a(i + 4), b(i + 4), b(i), a(i + 1)]);
    }
    for i in 0..5 {
        rot.push(vec![b(i + 1), a(i + 1), a(i), b(i + 4)]);
    }
    let outer: Vec<usize> = (5..10).collect();
    PlaneGraph::build(rot, Some(&outer))
}

/// Three pentagonal rings (inner 0..5, middle 5..10, outer 10..15) with
/// antiprism bands between them; the outer face is one outer-band triangle,
/// so the inner pentagon is a sink with exactly one source on the boundary.
fn sinkpatch() -> Result<PlaneGraph, BuildError> {
    let v = |i: usize| i % 5;
    let x = |i: usize| 5 + i % 5;
    let y = |i: usize| 10 + i % 5;
    let mut rot: Vec<Vec<usize>> = Vec::new();
    for i in 0..5 {
        rot.push(vec![v(i + 4), x(i + 4), x(i), v(i + 1)]);
    }
    for i in 0..5 {
        rot.push(vec![v(i), x(i + 4), y(i + 4), y(i), x(i + 1), v(i + 1)]);
    }
    for i in 0..5 {
        rot.push(vec![y(i + 1), x(i + 1), x(i), y(i + 4)]);
    }
    PlaneGraph::build(rot, Some(&[y(0), y(1), x(1)]))
}

/// Rotation-system editor behind the random generators, also usable to build
/// exact patches programmatically. Every mutation is face-local; `build`
/// re-traces and Euler-checks the whole system.
pub struct Grower {
    rot: Vec<Vec<usize>>,
    outer_walk: Vec<usize>,
}

impl Grower {
    /// A bare cycle whose bounded side is the single inner face.
    pub fn outer_cycle(k: usize) -> Grower {
        let rot = (0..k).map(|i| vec![(i + k - 1) % k, (i + 1) % k]).collect();
        // With rot [prev, next], tracing from (1, 0) walks the reversed cycle.
        let mut outer_walk = vec![1, 0];
        outer_walk.extend((2..k).rev());
        Grower { rot, outer_walk }
    }

    pub fn triangle() -> Grower {
        Grower { rot: vec![vec![1, 2], vec![2, 0], vec![0, 1]], outer_walk: vec![0, 2, 1] }
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn build(&self) -> Result<PlaneGraph, BuildError> {
        PlaneGraph::build(self.rot.clone(), Some(&self.outer_walk))
    }

    fn insert_after(&mut self, at: usize, anchor: usize, value: usize) {
        let pos = self.rot[at].iter().position(|&w| w == anchor).expect("anchor in rotation");
        self.rot[at].insert(pos + 1, value);
    }

    /// New vertex joined to every corner of the face walk.
    pub fn split_face_hub(&mut self, walk: &[usize]) -> usize {
        let v = self.n();
        let d = walk.len();
        let mut rv = vec![walk[0]];
        rv.extend(walk[1..].iter().rev());
        self.rot.push(rv);
        for i in 0..d {
            self.insert_after(walk[i], walk[(i + d - 1) % d], v);
        }
        v
    }

    /// New vertex inside the face joined to corners `i` and `j` (i != j).
    /// With `j == i + 1` this glues a triangle onto one face edge.
    pub fn split_face_path(&mut self, walk: &[usize], i: usize, j: usize) -> usize {
        let v = self.n();
        let d = walk.len();
        self.rot.push(vec![walk[j], walk[i]]);
        self.insert_after(walk[i], walk[(i + d - 1) % d], v);
        self.insert_after(walk[j], walk[(j + d - 1) % d], v);
        v
    }

    /// Chord between corners `i` and `j` through the face.
    pub fn add_chord(&mut self, walk: &[usize], i: usize, j: usize) {
        let d = walk.len();
        self.insert_after(walk[i], walk[(i + d - 1) % d], walk[j]);
        self.insert_after(walk[j], walk[(j + d - 1) % d], walk[i]);
    }

    pub fn delete_edge(&mut self, u: usize, v: usize) {
        self.rot[u].retain(|&w| w != v);
        self.rot[v].retain(|&w| w != u);
    }
}

fn triangulation(n: usize, deletions: usize, seed: u64) -> Result<PlaneGraph, GenError> {
    if n > MAX_GENERATED_VERTICES {
        return Err(GenError::TooLarge(n));
    }
    if n < 3 {
        return Err(GenError::GenerationFailed {
            attempts: 0,
            reason: "triangulations need at least 3 vertices".into(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut grower = Grower::triangle();
    while grower.n() < n {
        let pg = grower.build()?;
        let faces: Vec<Vec<usize>> = inner_faces(&pg);
        let walk = faces[rng.gen_range(0..faces.len())].clone();
        grower.split_face_hub(&walk);
    }
    for _ in 0..deletions {
        let pg = grower.build()?;
        if !delete_random_inner_edge(&mut grower, &pg, &mut rng) {
            break;
        }
    }
    Ok(grower.build()?)
}

/// Walks of all non-outer faces.
pub fn inner_faces(pg: &PlaneGraph) -> Vec<Vec<usize>> {
    (0..pg.num_faces())
        .filter(|&f| f != pg.outer_face())
        .map(|f| pg.face(f).walk.clone())
        .collect()
}

fn delete_random_inner_edge(grower: &mut Grower, pg: &PlaneGraph, rng: &mut ChaCha8Rng) -> bool {
    let bridges = pg.graph().bridges();
    let candidates: Vec<(usize, usize)> = pg
        .graph()
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !pg.is_outer_edge(u, v) && !bridges.contains(&(u, v)))
        .collect();
    match candidates.choose(rng) {
        Some(&(u, v)) => {
            grower.delete_edge(u, v);
            true
        }
        None => false,
    }
}

/// Operation mix for growing interiors, weighted per theorem so that the
/// repair pass has little to delete.
fn op_weights(theorem: Option<TheoremId>) -> [u32; 4] {
    // [chord, path-vertex, glued-triangle, hub]
    match theorem {
        Some(TheoremId::Mra) => [40, 45, 5, 10],
        Some(TheoremId::Mrb) => [30, 30, 20, 20],
        Some(TheoremId::Mrc) => [40, 40, 10, 10],
        Some(TheoremId::MrThree) | Some(TheoremId::Ll) => [35, 40, 15, 10],
        None => [25, 30, 20, 25],
    }
}

fn outer_cycle_instance(
    outer_len: usize,
    target_n: usize,
    theorem: Option<TheoremId>,
    seed: u64,
) -> Result<PlaneGraph, GenError> {
    if target_n > MAX_GENERATED_VERTICES {
        return Err(GenError::TooLarge(target_n));
    }
    if outer_len < 3 || target_n <= outer_len {
        return Err(GenError::GenerationFailed {
            attempts: 0,
            reason: format!("need 3 <= outer ({outer_len}) < target ({target_n})"),
        });
    }
    const ATTEMPTS: usize = 40;
    for attempt in 0..ATTEMPTS {
        let attempt_seed = seed
            .wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add(attempt as u64);
        match grow_attempt(outer_len, target_n, theorem, attempt_seed) {
            Ok(pg) => return Ok(pg),
            Err(_) => continue,
        }
    }
    Err(GenError::GenerationFailed {
        attempts: ATTEMPTS,
        reason: format!("no {theorem:?}-clean instance with outer {outer_len}, n={target_n}"),
    })
}

fn grow_attempt(
    outer_len: usize,
    target_n: usize,
    theorem: Option<TheoremId>,
    seed: u64,
) -> Result<PlaneGraph, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut grower = Grower::outer_cycle(outer_len);
    let weights = op_weights(theorem);
    let total: u32 = weights.iter().sum();
    let mut ops_budget = 4 * target_n;

    while grower.n() < target_n && ops_budget > 0 {
        ops_budget -= 1;
        let pg = grower.build()?;
        let faces = inner_faces(&pg);
        let walk = faces[rng.gen_range(0..faces.len())].clone();
        let d = walk.len();
        let mut roll = rng.gen_range(0..total);
        let mut op = 0;
        for (idx, w) in weights.iter().enumerate() {
            if roll < *w {
                op = idx;
                break;
            }
            roll -= w;
        }
        match op {
            0 => {
                // Chord: needs two distinct, non-neighboring corners, no
                // existing edge, and not both on the outer cycle.
                if d < 4 {
                    continue;
                }
                let i = rng.gen_range(0..d);
                let j = (i + rng.gen_range(2..d - 1)) % d;
                let (u, v) = (walk[i], walk[j]);
                if u == v
                    || pg.graph().has_edge(u, v)
                    || (pg.is_outer_vertex(u) && pg.is_outer_vertex(v))
                {
                    continue;
                }
                grower.add_chord(&walk, i, j);
            }
            1 => {
                // Degree-2 vertex strung across the face.
                if d < 4 {
                    continue;
                }
                let i = rng.gen_range(0..d);
                let j = (i + rng.gen_range(2..d - 1)) % d;
                if walk[i] == walk[j] {
                    continue;
                }
                grower.split_face_path(&walk, i, j);
            }
            2 => {
                // Triangle glued onto one face edge.
                let i = rng.gen_range(0..d);
                let j = (i + 1) % d;
                if walk[i] == walk[j] {
                    continue;
                }
                grower.split_face_path(&walk, i, j);
            }
            _ => {
                grower.split_face_hub(&walk);
            }
        }
    }

    // A couple of random deletions for face-shape variety.
    for _ in 0..rng.gen_range(0..3u32) {
        let pg = grower.build()?;
        if pg.n() > grower.outer_walk.len() + 1 {
            delete_random_inner_edge(&mut grower, &pg, &mut rng);
        }
    }

    let pg = repair_to_filter(grower, theorem)?;
    if pg.n() <= outer_len {
        return Err(GenError::GenerationFailed {
            attempts: 1,
            reason: "no internal vertices left".into(),
        });
    }
    Ok(pg)
}

/// Deletes one witness edge at a time until the hypothesis filter passes.
/// Deleting edges can only remove subgraphs, so this terminates.
fn repair_to_filter(
    mut grower: Grower,
    theorem: Option<TheoremId>,
) -> Result<PlaneGraph, GenError> {
    let theorem = match theorem {
        Some(t) => t,
        None => return Ok(grower.build()?),
    };
    loop {
        let pg = grower.build()?;
        let report = patterns::hypothesis_filter(pg.graph(), theorem).map_err(|e| {
            GenError::GenerationFailed { attempts: 1, reason: format!("cycle cap: {e}") }
        })?;
        if report.pass {
            return Ok(pg);
        }
        let mut candidate_edges: Vec<(usize, usize)> = Vec::new();
        for w in &report.witnesses {
            let pat = patterns::pattern(w.pattern);
            for &(a, b) in pat.graph.edges() {
                let (u, v) = (w.mapping[a], w.mapping[b]);
                candidate_edges.push((u.min(v), u.max(v)));
            }
        }
        if let Some(ll) = &report.ll_witness {
            for cyc in [&ll.four_cycle, &ll.triangles.0, &ll.triangles.1] {
                candidate_edges.extend(crate::graph::cycle_edges(cyc));
            }
        }
        let bridges = pg.graph().bridges();
        let deletable = candidate_edges
            .into_iter()
            .find(|&(u, v)| !pg.is_outer_edge(u, v) && !bridges.contains(&(u, v)));
        match deletable {
            Some((u, v)) => grower.delete_edge(u, v),
            None => {
                return Err(GenError::GenerationFailed {
                    attempts: 1,
                    reason: "witness uses only outer or bridge edges".into(),
                })
            }
        }
    }
}

/// Library of small fixed graphs plus generated ones, used as shared corpora
/// by tests and campaigns.
pub fn named_library() -> Vec<(&'static str, PlaneGraph)> {
    let names = [
        "c3", "c4", "c5", "c6", "c7", "k4", "w4", "w5", "w6", "bowtie", "house", "theta",
        "prism3", "prism4", "prism5", "antiprism5", "sinkpatch",
    ];
    names
        .into_iter()
        .map(|n| (n, named(n).expect("library graph builds")))
        .collect()
}

/// Samples a uniformly random simple abstract graph (for oracle comparisons).
pub fn random_abstract_graph(n: usize, edge_prob: f64, seed: u64) -> SimpleGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(n, &edges)
}
