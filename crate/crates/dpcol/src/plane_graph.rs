//! Combinatorial plane graphs: rotation systems, face tracing, and the
//! vertex/face classifications used by the discharging rule systems.
//!
//! A plane graph is given by a rotation system (counterclockwise neighbor
//! order at every vertex). Faces are always derived by tracing the rotation
//! system, never supplied by the caller, and one traced face is designated
//! as the outer face.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::graph::{CycleError, SimpleGraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("vertex {vertex} has a loop or repeated neighbor in its rotation")]
    LoopOrParallelEdge { vertex: usize },
    #[error("edge {u}-{v} appears in the rotation of {u} but not of {v}")]
    AsymmetricRotation { u: usize, v: usize },
    #[error("input graph is not connected")]
    DisconnectedInput,
    #[error("rotation system is not planar: V={verts} E={edges} F={faces}")]
    NonPlanarRotation { verts: usize, edges: usize, faces: usize },
    #[error("outer face hint does not match any traced face")]
    BadOuterHint,
    #[error("graph has no vertices")]
    EmptyGraph,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QueryError {
    #[error("unknown face or vertex id")]
    UnknownId,
}

/// A facial walk. `walk[i] -> walk[i+1]` (cyclically) are the directed edges
/// on this face; the face degree is the walk length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub walk: Vec<usize>,
}

impl Face {
    pub fn degree(&self) -> usize {
        if self.walk.len() < 2 {
            0
        } else {
            self.walk.len()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceKind {
    Outer,
    Inner,
}

/// Per-face classification relative to the designated outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceClass {
    pub face: usize,
    pub kind: FaceKind,
    /// Number of vertices shared with the outer cycle (`T_k` for 3-faces).
    pub common_outer_vertices: usize,
    /// No common vertex with the outer cycle.
    pub is_internal: bool,
    /// Internal 3-face incident with a vertex of degree 4 that lies on
    /// exactly one triangular face.
    pub is_special: bool,
    /// Inner face sharing at least one vertex with the outer face.
    pub in_n: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClass {
    pub vertex: usize,
    pub is_internal: bool,
    /// Number of distinct incident triangular faces (`4_k` for 4-vertices).
    pub incident_triangle_count: usize,
}

/// An internal 5-face with vertex degrees (4,4,4,4,4+) whose five edges all
/// border 3-faces, together with the apex vertices of those 3-faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sink {
    pub face: usize,
    /// `(source vertex, smallest witnessing 3-face)`, sorted by vertex.
    pub sources: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub vertices: Vec<VertexClass>,
    pub faces: Vec<FaceClass>,
    /// Edges touching the outer cycle that are not outer-cycle edges.
    pub special_edges: Vec<(usize, usize)>,
    pub sinks: Vec<Sink>,
}

impl Classification {
    pub fn face(&self, f: usize) -> &FaceClass {
        &self.faces[f]
    }

    pub fn vertex(&self, v: usize) -> &VertexClass {
        &self.vertices[v]
    }

    pub fn is_special_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.special_edges.binary_search(&key).is_ok()
    }
}

/// A simple cycle with the vertex sets strictly inside and outside of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleRegion {
    pub cycle: Vec<usize>,
    pub interior: Vec<usize>,
    pub exterior: Vec<usize>,
}

impl CycleRegion {
    pub fn is_separating(&self) -> bool {
        !self.interior.is_empty() && !self.exterior.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct PlaneGraph {
    rotation: Vec<Vec<usize>>,
    graph: SimpleGraph,
    faces: Vec<Face>,
    outer: usize,
    /// face id of the directed edge `(v, rotation[v][i])`, parallel to `rotation`.
    face_at_slot: Vec<Vec<usize>>,
    /// position of `u` in `rotation[v]`.
    rot_pos: Vec<HashMap<usize, usize>>,
    face_vertex_sets: Vec<Vec<usize>>,
    face_edge_sets: Vec<BTreeSet<(usize, usize)>>,
    outer_vertices: BTreeSet<usize>,
    outer_edges: BTreeSet<(usize, usize)>,
    labels: Vec<u32>,
}

impl PlaneGraph {
    /// Builds a plane graph from per-vertex counterclockwise neighbor orders.
    ///
    /// Faces are derived by face tracing and Euler's formula is checked; a
    /// rotation system of positive genus is rejected. The outer face is taken
    /// from `outer_hint` (a facial walk, matched up to rotation and
    /// reflection) or defaults to a maximum-degree face.
    pub fn build(
        rotation: Vec<Vec<usize>>,
        outer_hint: Option<&[usize]>,
    ) -> Result<PlaneGraph, BuildError> {
        let n = rotation.len();
        if n == 0 {
            return Err(BuildError::EmptyGraph);
        }
        for (v, nbrs) in rotation.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for &w in nbrs {
                if w == v || w >= n || !seen.insert(w) {
                    return Err(BuildError::LoopOrParallelEdge { vertex: v });
                }
            }
        }
        for (v, nbrs) in rotation.iter().enumerate() {
            for &w in nbrs {
                if !rotation[w].contains(&v) {
                    return Err(BuildError::AsymmetricRotation { u: v, v: w });
                }
            }
        }

        let mut edges = Vec::new();
        for (v, nbrs) in rotation.iter().enumerate() {
            for &w in nbrs {
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        let graph = SimpleGraph::from_edges(n, &edges);
        if !graph.is_connected() {
            return Err(BuildError::DisconnectedInput);
        }

        let rot_pos: Vec<HashMap<usize, usize>> = rotation
            .iter()
            .map(|nbrs| nbrs.iter().enumerate().map(|(i, &w)| (w, i)).collect())
            .collect();

        // Face tracing: the successor of directed edge (u, v) is (v, w) where
        // w follows u in the rotation at v.
        let mut face_at_slot: Vec<Vec<usize>> =
            rotation.iter().map(|nbrs| vec![usize::MAX; nbrs.len()]).collect();
        let mut faces: Vec<Face> = Vec::new();
        for v0 in 0..n {
            for i0 in 0..rotation[v0].len() {
                if face_at_slot[v0][i0] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut walk = Vec::new();
                let (mut u, mut i) = (v0, i0);
                loop {
                    face_at_slot[u][i] = id;
                    walk.push(u);
                    let v = rotation[u][i];
                    let j = rot_pos[v][&u];
                    let next = (j + 1) % rotation[v].len();
                    u = v;
                    i = next;
                    if u == v0 && i == i0 {
                        break;
                    }
                }
                faces.push(Face { walk });
            }
        }
        if faces.is_empty() {
            // Edgeless singleton: the whole plane is the one face.
            faces.push(Face { walk: vec![0] });
        }

        let num_edges = graph.num_edges();
        if n as i64 - num_edges as i64 + faces.len() as i64 != 2 {
            return Err(BuildError::NonPlanarRotation {
                verts: n,
                edges: num_edges,
                faces: faces.len(),
            });
        }

        // Deterministic face ids: sort by the smallest directed edge on the walk.
        let mut order: Vec<usize> = (0..faces.len()).collect();
        let min_key = |f: &Face| -> (usize, usize) {
            if f.walk.len() < 2 {
                return (0, 0);
            }
            (0..f.walk.len())
                .map(|i| (f.walk[i], f.walk[(i + 1) % f.walk.len()]))
                .min()
                .unwrap()
        };
        order.sort_by_key(|&id| min_key(&faces[id]));
        let mut renumber = vec![0usize; faces.len()];
        for (new, &old) in order.iter().enumerate() {
            renumber[old] = new;
        }
        let mut sorted_faces = vec![Face { walk: vec![] }; faces.len()];
        for (old, face) in faces.into_iter().enumerate() {
            sorted_faces[renumber[old]] = face;
        }
        for slots in &mut face_at_slot {
            for s in slots.iter_mut() {
                *s = renumber[*s];
            }
        }
        let faces = sorted_faces;

        let outer = match outer_hint {
            Some(hint) => faces
                .iter()
                .position(|f| walks_match_cyclically(&f.walk, hint))
                .ok_or(BuildError::BadOuterHint)?,
            None => {
                let max_deg = faces.iter().map(Face::degree).max().unwrap();
                faces.iter().position(|f| f.degree() == max_deg).unwrap()
            }
        };

        let face_vertex_sets: Vec<Vec<usize>> = faces
            .iter()
            .map(|f| {
                let mut vs: Vec<usize> = f.walk.clone();
                vs.sort_unstable();
                vs.dedup();
                vs
            })
            .collect();
        let face_edge_sets: Vec<BTreeSet<(usize, usize)>> = faces
            .iter()
            .map(|f| {
                if f.walk.len() < 2 {
                    return BTreeSet::new();
                }
                (0..f.walk.len())
                    .map(|i| {
                        let a = f.walk[i];
                        let b = f.walk[(i + 1) % f.walk.len()];
                        (a.min(b), a.max(b))
                    })
                    .collect()
            })
            .collect();
        let outer_vertices: BTreeSet<usize> = if n == 1 {
            [0].into_iter().collect()
        } else {
            face_vertex_sets[outer].iter().copied().collect()
        };
        let outer_edges = face_edge_sets[outer].clone();
        let labels = (0..n as u32).collect();

        Ok(PlaneGraph {
            rotation,
            graph,
            faces,
            outer,
            face_at_slot,
            rot_pos,
            face_vertex_sets,
            face_edge_sets,
            outer_vertices,
            outer_edges,
            labels,
        })
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn num_edges(&self) -> usize {
        self.graph.num_edges()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// The underlying abstract simple graph.
    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotation_table(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn outer_face(&self) -> usize {
        self.outer
    }

    pub fn face(&self, f: usize) -> &Face {
        &self.faces[f]
    }

    pub fn face_degree(&self, f: usize) -> usize {
        self.faces[f].degree()
    }

    /// Distinct vertices on the face boundary, ascending.
    pub fn face_vertices(&self, f: usize) -> &[usize] {
        &self.face_vertex_sets[f]
    }

    pub fn face_edges(&self, f: usize) -> &BTreeSet<(usize, usize)> {
        &self.face_edge_sets[f]
    }

    /// Vertices on the outer face walk.
    pub fn outer_vertices(&self) -> &BTreeSet<usize> {
        &self.outer_vertices
    }

    pub fn is_outer_vertex(&self, v: usize) -> bool {
        self.outer_vertices.contains(&v)
    }

    /// A vertex is internal when it is not incident with the outer face.
    pub fn is_internal_vertex(&self, v: usize) -> bool {
        !self.outer_vertices.contains(&v)
    }

    pub fn is_outer_edge(&self, u: usize, v: usize) -> bool {
        self.outer_edges.contains(&(u.min(v), u.max(v)))
    }

    /// The face lying on the left of the directed edge `u -> v`.
    pub fn face_of_directed(&self, u: usize, v: usize) -> Option<usize> {
        let i = *self.rot_pos[u].get(&v)?;
        Some(self.face_at_slot[u][i])
    }

    /// Both sides of an undirected edge: `(face of u->v, face of v->u)`.
    pub fn faces_of_edge(&self, u: usize, v: usize) -> Option<(usize, usize)> {
        Some((self.face_of_directed(u, v)?, self.face_of_directed(v, u)?))
    }

    /// Incident faces at the corners of `v`, one per rotation slot.
    pub fn faces_at(&self, v: usize) -> &[usize] {
        &self.face_at_slot[v]
    }

    /// Distinct incident faces of `v`, ascending.
    pub fn distinct_faces_at(&self, v: usize) -> Vec<usize> {
        let mut fs = self.face_at_slot[v].clone();
        fs.sort_unstable();
        fs.dedup();
        fs
    }

    pub fn faces_share_edge(&self, f1: usize, f2: usize) -> Result<bool, QueryError> {
        if f1 >= self.faces.len() || f2 >= self.faces.len() {
            return Err(QueryError::UnknownId);
        }
        if f1 == f2 {
            return Ok(false);
        }
        Ok(self.face_edge_sets[f1]
            .iter()
            .any(|e| self.face_edge_sets[f2].contains(e)))
    }

    pub fn cycles_intersect(&self, c1: &[usize], c2: &[usize]) -> Result<bool, QueryError> {
        for &v in c1.iter().chain(c2) {
            if v >= self.n() {
                return Err(QueryError::UnknownId);
            }
        }
        Ok(crate::graph::cycles_share_vertex(c1, c2))
    }

    pub fn edge_on_face(&self, edge: (usize, usize), f: usize) -> Result<bool, QueryError> {
        let (u, v) = edge;
        if f >= self.faces.len() || u >= self.n() || v >= self.n() {
            return Err(QueryError::UnknownId);
        }
        Ok(self.face_edge_sets[f].contains(&(u.min(v), u.max(v))))
    }

    /// Distinct triangular faces incident with `v`.
    pub fn incident_triangle_count(&self, v: usize) -> usize {
        self.distinct_faces_at(v)
            .into_iter()
            .filter(|&f| self.face_degree(f) == 3)
            .count()
    }

    /// Classifies every vertex and face, and collects special edges and sinks.
    pub fn classify(&self) -> Classification {
        let n = self.n();
        let vertices: Vec<VertexClass> = (0..n)
            .map(|v| VertexClass {
                vertex: v,
                is_internal: self.is_internal_vertex(v),
                incident_triangle_count: self.incident_triangle_count(v),
            })
            .collect();

        let is_4_1 = |v: usize| {
            self.degree(v) == 4 && vertices[v].incident_triangle_count == 1
        };

        let faces: Vec<FaceClass> = (0..self.faces.len())
            .map(|f| {
                let kind = if f == self.outer { FaceKind::Outer } else { FaceKind::Inner };
                let common = self.face_vertex_sets[f]
                    .iter()
                    .filter(|v| self.outer_vertices.contains(v))
                    .count();
                let is_internal = kind == FaceKind::Inner && common == 0;
                let is_special = is_internal
                    && self.face_degree(f) == 3
                    && self.face_vertex_sets[f].iter().any(|&v| is_4_1(v));
                FaceClass {
                    face: f,
                    kind,
                    common_outer_vertices: common,
                    is_internal,
                    is_special,
                    in_n: kind == FaceKind::Inner && common >= 1,
                }
            })
            .collect();

        let mut special_edges: Vec<(usize, usize)> = self
            .graph
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| {
                (self.outer_vertices.contains(&u) || self.outer_vertices.contains(&v))
                    && !self.is_outer_edge(u, v)
            })
            .collect();
        special_edges.sort_unstable();

        let sinks = self.find_sinks();

        Classification { vertices, faces, special_edges, sinks }
    }

    fn find_sinks(&self) -> Vec<Sink> {
        let mut sinks = Vec::new();
        for f in 0..self.faces.len() {
            if f == self.outer || self.face_degree(f) != 5 {
                continue;
            }
            let walk = &self.faces[f].walk;
            if self.face_vertex_sets[f].len() != 5 {
                continue;
            }
            if self.face_vertex_sets[f]
                .iter()
                .any(|v| self.outer_vertices.contains(v))
            {
                continue;
            }
            let degs: Vec<usize> = walk.iter().map(|&v| self.degree(v)).collect();
            if degs.iter().any(|&d| d < 4) || degs.iter().filter(|&&d| d == 4).count() < 4 {
                continue;
            }
            let mut adjacent_triangles = BTreeSet::new();
            let mut ok = true;
            for i in 0..5 {
                let a = walk[i];
                let b = walk[(i + 1) % 5];
                let other = match self.face_of_directed(b, a) {
                    Some(t) if t != f && self.face_degree(t) == 3 => t,
                    _ => {
                        ok = false;
                        break;
                    }
                };
                adjacent_triangles.insert(other);
            }
            if !ok || adjacent_triangles.len() != 5 {
                continue;
            }
            let face_vs: BTreeSet<usize> = self.face_vertex_sets[f].iter().copied().collect();
            let mut sources: BTreeMap<usize, usize> = BTreeMap::new();
            for &t in &adjacent_triangles {
                for &x in &self.face_vertex_sets[t] {
                    if !face_vs.contains(&x) {
                        let entry = sources.entry(x).or_insert(t);
                        *entry = (*entry).min(t);
                    }
                }
            }
            sinks.push(Sink { face: f, sources: sources.into_iter().collect() });
        }
        sinks
    }

    /// All sink faces with their related sources.
    pub fn sinks_and_sources(&self) -> Vec<Sink> {
        self.find_sinks()
    }

    /// Interior/exterior vertex sets of a simple cycle, determined by which
    /// side of the cycle each face lies on.
    pub fn cycle_region(&self, cycle: &[usize]) -> CycleRegion {
        let cycle_edges: BTreeSet<(usize, usize)> = crate::graph::cycle_edges(cycle).collect();
        // Faces form exactly two sides: flood-fill over shared non-cycle edges.
        let nf = self.faces.len();
        let mut side = vec![usize::MAX; nf];
        let mut next_side = 0;
        for start in 0..nf {
            if side[start] != usize::MAX {
                continue;
            }
            let s = next_side;
            next_side += 1;
            let mut stack = vec![start];
            side[start] = s;
            while let Some(f) = stack.pop() {
                for &(u, v) in &self.face_edge_sets[f] {
                    if cycle_edges.contains(&(u, v)) {
                        continue;
                    }
                    let (a, b) = self.faces_of_edge(u, v).unwrap();
                    for g in [a, b] {
                        if side[g] == usize::MAX {
                            side[g] = s;
                            stack.push(g);
                        }
                    }
                }
            }
        }
        let outer_side = side[self.outer];
        let on_cycle: BTreeSet<usize> = cycle.iter().copied().collect();
        let mut interior = BTreeSet::new();
        let mut exterior = BTreeSet::new();
        for f in 0..nf {
            let bucket = if side[f] == outer_side { &mut exterior } else { &mut interior };
            for &v in &self.face_vertex_sets[f] {
                if !on_cycle.contains(&v) {
                    bucket.insert(v);
                }
            }
        }
        CycleRegion {
            cycle: cycle.to_vec(),
            interior: interior.into_iter().collect(),
            exterior: exterior.into_iter().collect(),
        }
    }

    /// All separating cycles with length in `lo..=hi`.
    pub fn separating_cycles(&self, lo: usize, hi: usize) -> Result<Vec<CycleRegion>, CycleError> {
        let cycles = self.graph.enumerate_cycles(hi)?;
        Ok(cycles
            .into_iter()
            .filter(|c| c.len() >= lo)
            .map(|c| self.cycle_region(&c))
            .filter(CycleRegion::is_separating)
            .collect())
    }

    /// Simple cycles of the underlying abstract graph, via [`SimpleGraph::enumerate_cycles`].
    pub fn enumerate_cycles(&self, max_len: usize) -> Result<Vec<Vec<usize>>, CycleError> {
        self.graph.enumerate_cycles(max_len)
    }

    /// Canonical encoding of the embedded graph together with its outer face.
    /// Two plane graphs get equal encodings iff some isomorphism maps one
    /// rotation system to the other (up to reflection) preserving the outer face.
    pub fn canonical_form(&self) -> Vec<u32> {
        let mut best: Option<Vec<u32>> = None;
        for v in 0..self.n() {
            for i in 0..self.rotation[v].len() {
                for mirror in [false, true] {
                    let enc = self.encode_from(v, i, mirror);
                    if best.as_ref().map_or(true, |b| enc < *b) {
                        best = Some(enc);
                    }
                }
            }
        }
        best.unwrap_or_else(|| vec![0])
    }

    fn encode_from(&self, root: usize, slot: usize, mirror: bool) -> Vec<u32> {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut order: Vec<usize> = Vec::with_capacity(n);
        // Entry edge per vertex: the neighbor from which it was first reached.
        let mut entry = vec![usize::MAX; n];
        label[root] = 0;
        order.push(root);
        entry[root] = self.rotation[root][slot];
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in self.rotation_from(v, entry[v], mirror) {
                if label[w] == usize::MAX {
                    label[w] = order.len();
                    entry[w] = v;
                    order.push(w);
                }
            }
        }
        let mut enc: Vec<u32> = Vec::new();
        for &v in &order {
            for w in self.rotation_from(v, entry[v], mirror) {
                enc.push(label[w] as u32);
            }
            enc.push(u32::MAX);
        }
        // Append the outer walk, cyclically normalized in the traversal labels.
        let walk: Vec<u32> = self.faces[self.outer]
            .walk
            .iter()
            .map(|&v| label[v] as u32)
            .collect();
        enc.extend(normalize_cyclic(&walk));
        enc
    }

    /// Rotation of `v` starting at neighbor `from`, forward or mirrored.
    fn rotation_from(&self, v: usize, from: usize, mirror: bool) -> Vec<usize> {
        let nbrs = &self.rotation[v];
        let d = nbrs.len();
        if d == 0 {
            return Vec::new();
        }
        let start = self.rot_pos[v].get(&from).copied().unwrap_or(0);
        (0..d)
            .map(|k| {
                let i = if mirror { (start + d - k % d) % d } else { (start + k) % d };
                nbrs[i]
            })
            .collect()
    }

    /// 64-bit hash of [`canonical_form`](Self::canonical_form), used to detect
    /// duplicate instances across seeds.
    pub fn instance_hash(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.canonical_form().hash(&mut h);
        h.finish()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn set_labels(&mut self, labels: Vec<u32>) {
        assert_eq!(labels.len(), self.n());
        self.labels = labels;
    }

    /// Serializes to the `planegraph v1` text format.
    pub fn to_pg_string(&self) -> String {
        let mut out = format!("planegraph v1 n={}\n", self.n());
        for v in 0..self.n() {
            let nbrs: Vec<String> = self.rotation[v]
                .iter()
                .map(|&w| self.labels[w].to_string())
                .collect();
            out.push_str(&format!("v {} : {}\n", self.labels[v], nbrs.join(" ")));
        }
        let walk: Vec<String> = self.faces[self.outer]
            .walk
            .iter()
            .map(|&v| self.labels[v].to_string())
            .collect();
        out.push_str(&format!("outer : {}\n", walk.join(" ")));
        out
    }
}

fn normalize_cyclic(walk: &[u32]) -> Vec<u32> {
    if walk.is_empty() {
        return Vec::new();
    }
    let d = walk.len();
    let mut best: Option<Vec<u32>> = None;
    for rev in [false, true] {
        let seq: Vec<u32> = if rev {
            walk.iter().rev().copied().collect()
        } else {
            walk.to_vec()
        };
        for r in 0..d {
            let cand: Vec<u32> = (0..d).map(|i| seq[(r + i) % d]).collect();
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

fn walks_match_cyclically(walk: &[usize], hint: &[usize]) -> bool {
    if walk.len() != hint.len() || walk.is_empty() {
        return false;
    }
    let d = walk.len();
    for rev in [false, true] {
        let seq: Vec<usize> = if rev {
            hint.iter().rev().copied().collect()
        } else {
            hint.to_vec()
        };
        for r in 0..d {
            if (0..d).all(|i| walk[i] == seq[(r + i) % d]) {
                return true;
            }
        }
    }
    false
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PgParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("vertex count mismatch: header says {expected}, found {found}")]
    VertexCount { expected: usize, found: usize },
    #[error("unknown vertex label {0}")]
    UnknownLabel(u32),
    #[error(transparent)]
    Build(#[from] BuildError),
}

/// Parses the `planegraph v1` text format. Vertex labels are arbitrary
/// distinct small integers; they are renumbered densely in ascending order.
pub fn parse_pg(text: &str) -> Result<PlaneGraph, PgParseError> {
    let mut expected_n: Option<usize> = None;
    let mut rows: Vec<(u32, Vec<u32>)> = Vec::new();
    let mut outer: Option<Vec<u32>> = None;
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
            "planegraph" => {
                if tokens.len() != 3 || tokens[1] != "v1" || !tokens[2].starts_with("n=") {
                    return Err(PgParseError::Syntax {
                        line,
                        msg: "expected `planegraph v1 n=<V>`".into(),
                    });
                }
                expected_n = Some(tokens[2][2..].parse().map_err(|_| PgParseError::Syntax {
                    line,
                    msg: "bad vertex count".into(),
                })?);
            }
            "v" => {
                if tokens.len() < 3 || tokens[2] != ":" {
                    return Err(PgParseError::Syntax {
                        line,
                        msg: "expected `v <id> : <neighbors>`".into(),
                    });
                }
                let id: u32 = tokens[1].parse().map_err(|_| PgParseError::Syntax {
                    line,
                    msg: "bad vertex id".into(),
                })?;
                let nbrs: Result<Vec<u32>, _> = tokens[3..].iter().map(|t| t.parse()).collect();
                let nbrs = nbrs.map_err(|_| PgParseError::Syntax {
                    line,
                    msg: "bad neighbor id".into(),
                })?;
                rows.push((id, nbrs));
            }
            "outer" => {
                if tokens.len() < 2 || tokens[1] != ":" {
                    return Err(PgParseError::Syntax {
                        line,
                        msg: "expected `outer : <vertex cycle>`".into(),
                    });
                }
                let walk: Result<Vec<u32>, _> = tokens[2..].iter().map(|t| t.parse()).collect();
                outer = Some(walk.map_err(|_| PgParseError::Syntax {
                    line,
                    msg: "bad vertex id in outer walk".into(),
                })?);
            }
            other => {
                return Err(PgParseError::Syntax {
                    line,
                    msg: format!("unknown directive `{other}`"),
                });
            }
        }
    }
    if let Some(n) = expected_n {
        if n != rows.len() {
            return Err(PgParseError::VertexCount { expected: n, found: rows.len() });
        }
    }
    let mut labels: Vec<u32> = rows.iter().map(|(id, _)| *id).collect();
    labels.sort_unstable();
    labels.dedup();
    if labels.len() != rows.len() {
        return Err(PgParseError::Syntax { line: 0, msg: "duplicate vertex id".into() });
    }
    let index: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let lookup = |l: u32| index.get(&l).copied().ok_or(PgParseError::UnknownLabel(l));
    let mut rotation = vec![Vec::new(); labels.len()];
    for (id, nbrs) in &rows {
        let v = lookup(*id)?;
        rotation[v] = nbrs.iter().map(|&w| lookup(w)).collect::<Result<_, _>>()?;
    }
    let hint: Option<Vec<usize>> = match &outer {
        Some(walk) => Some(walk.iter().map(|&l| lookup(l)).collect::<Result<_, _>>()?),
        None => None,
    };
    let mut pg = PlaneGraph::build(rotation, hint.as_deref())?;
    pg.set_labels(labels);
    Ok(pg)
}
