//! Crafted plane graphs exhibiting the specific vertex/face cases of the
//! final-charge analyses, plus small shared helpers. Each builder documents
//! the planted element; tests assert its classification before trusting the
//! ledger value.

#![allow(dead_code)]

use dpcol::gen::{inner_faces, Grower};
use dpcol::plane_graph::PlaneGraph;

/// Position of `v` in a face walk.
pub fn pos(walk: &[usize], v: usize) -> usize {
    walk.iter().position(|&x| x == v).expect("vertex on walk")
}

/// Positions `(i, i+1)` such that the walk traverses edge `a-b` (either
/// direction).
pub fn edge_pos(walk: &[usize], a: usize, b: usize) -> (usize, usize) {
    let d = walk.len();
    for i in 0..d {
        let j = (i + 1) % d;
        if (walk[i] == a && walk[j] == b) || (walk[i] == b && walk[j] == a) {
            return (i, j);
        }
    }
    panic!("edge {a}-{b} not on walk {walk:?}");
}

/// The inner face whose distinct vertex set is exactly `vertices` (sorted).
pub fn inner_face_with_vertices(pg: &PlaneGraph, vertices: &[usize]) -> usize {
    let mut want = vertices.to_vec();
    want.sort_unstable();
    (0..pg.num_faces())
        .find(|&f| f != pg.outer_face() && pg.face_vertices(f) == want.as_slice())
        .unwrap_or_else(|| panic!("no inner face on {want:?}"))
}

fn walk_of(pg: &PlaneGraph, vertices: &[usize]) -> Vec<usize> {
    pg.face(inner_face_with_vertices(pg, vertices)).walk.clone()
}

/// Hexagon with an internal 4-vertex (id 6) lying on exactly two triangular
/// faces, for the `2 - 2x1 = 0` case.
pub fn patch_4_2_vertex() -> (PlaneGraph, usize) {
    let mut g = Grower::outer_cycle(6);
    let pg = g.build().unwrap();
    let w = walk_of(&pg, &[0, 1, 2, 3, 4, 5]);
    let (i, j) = edge_pos(&w, 0, 1);
    g.split_face_path(&w, i, j); // vertex 6, triangle 0-1-6
    let pg = g.build().unwrap();
    let w = walk_of(&pg, &[0, 1, 2, 3, 4, 5, 6]);
    let (i, j) = edge_pos(&w, 0, 6);
    g.split_face_path(&w, i, j); // vertex 7, triangle 0-6-7
    let pg = g.build().unwrap();
    let w = walk_of(&pg, &[0, 1, 2, 3, 4, 5, 6, 7]);
    g.split_face_path(&w, pos(&w, 6), pos(&w, 3)); // vertex 8 on 6 and 3
    (g.build().unwrap(), 6)
}

/// Hexagon with an internal 4-vertex (id 6) whose single triangle shares two
/// vertices with the outer cycle, and whose three other faces are 5-faces,
/// for the `2 - 1 - 1/2 - 2x(1/4) = 0` case (and the MRC 4_1 case).
pub fn patch_4_1_t2_vertex() -> (PlaneGraph, usize) {
    let mut g = Grower::outer_cycle(6);
    let pg = g.build().unwrap();
    let w = walk_of(&pg, &[0, 1, 2, 3, 4, 5]);
    let (i, j) = edge_pos(&w, 0, 1);
    g.split_face_path(&w, i, j); // vertex 6, triangle 0-1-6
    let pg = g.build().unwrap();
    let w = walk_of(&pg, &[0, 1, 2, 3, 4, 5, 6]);
    g.split_face_path(&w, pos(&w, 6), pos(&w, 3)); // vertex 7
    let pg = g.build().unwrap();
    let w = walk_of(&pg, &[0, 3, 4, 5, 6, 7]);
    g.split_face_path(&w, pos(&w, 6), pos(&w, 4)); // vertex 8
    (g.build().unwrap(), 6)
}

/// 14-vertex patch with an internal special 3-face {6,7,8}: vertex 6 is an
/// internal 4-vertex on exactly one triangle, 7 and 8 are internal
/// 5-vertices, for `-3 + 1/2 + 2x(5/4) = 0`.
pub fn patch_special_face() -> (PlaneGraph, [usize; 3]) {
    let mut g = Grower::outer_cycle(6);
    let pg = g.build().unwrap();
    let w = walk_of(&pg, &[0, 1, 2, 3, 4, 5]);
    g.split_face_path(&w, pos(&w, 0), pos(&w, 2)); // 6
    let pg = g.build().unwrap();
    let w = walk_of(&pg, &[0, 2, 3, 4, 5, 6]);
    g.split_face_path(&w, pos(&w, 6), pos(&w, 3)); // 7
    let pg = g.build().unwrap();
    let w = walk_of(&pg, &[0, 3, 4, 5, 6, 7]);
    let (i, j) = edge_pos(&w, 6, 7);
    g.split_face_path(&w, i, j); // 8, triangle 6-7-8
    let pg = g.build().unwrap();
    let w = walk_of(&pg, &[0, 3, 4, 5, 6, 7, 8]);
    g.split_face_path(&w, pos(&w, 7), pos(&w, 4)); // 9
    let pg = g.build().unwrap();
    let w = walk_of(&pg, &[0, 4, 5, 6, 7, 8, 9]);
    g.split_face_path(&w, pos(&w, 5), pos(&w, 7)); // 10
    let pg = g.build().unwrap();
    let w = walk_of(&pg, &[0, 5, 6, 7, 8, 10]);
    g.split_face_path(&w, pos(&w, 0), pos(&w, 8)); // 11
    let pg = g.build().unwrap();
    let w = walk_of(&pg, &[0, 5, 7, 8, 10, 11]);
    g.split_face_path(&w, pos(&w, 10), pos(&w, 8)); // 12
    let pg = g.build().unwrap();
    let w = walk_of(&pg, &[0, 5, 8, 10, 11, 12]);
    g.split_face_path(&w, pos(&w, 8), pos(&w, 0)); // 13
    (g.build().unwrap(), [6, 7, 8])
}

/// 20-vertex patch whose inner pentagon {0..4} is a sink receiving exactly
/// four source payments, for `-1 + 4x(1/4) = 0`. Vertices 0-4 are the
/// pentagon, 5-9 the apexes (source 5 has degree 4 and pays nothing), 10-19
/// the outer decagon.
pub fn patch_sink_exact() -> (PlaneGraph, Vec<usize>) {
    let v = |i: usize| i % 5;
    let x = |i: usize| 5 + i % 5;
    let u = |j: usize| 10 + j % 10;
    let mut rot: Vec<Vec<usize>> = Vec::new();
    for i in 0..5 {
        rot.push(vec![v(i + 4), x(i + 4), x(i), v(i + 1)]);
    }
    rot.push(vec![u(0), u(1), v(1), v(0)]); // x_0, degree 4
    for i in 1..5 {
        rot.push(vec![u(2 * i), u(2 * i + 1), u(2 * i + 2), v(i + 1), v(i)]);
    }
    for j in 0..10usize {
        if j == 2 {
            rot.push(vec![u(1), u(3), x(1)]);
        } else if j % 2 == 0 {
            let i = j / 2;
            rot.push(vec![x(i + 4), u(j + 9), u(j + 1), x(i)]);
        } else {
            let i = (j - 1) / 2;
            rot.push(vec![u(j + 9), u(j + 1), x(i)]);
        }
    }
    let outer: Vec<usize> = (10..20).collect();
    let pg = PlaneGraph::build(rot, Some(&outer)).unwrap();
    (pg, (0..5).collect())
}

/// 16-vertex patch with an internal 5-face {6..10} carrying exactly two
/// 4_2-vertices (6 and 7), so exactly three incident vertices pay 1/2,
/// for the `-1 + 3x(1/2) > 0` case.
pub fn patch_internal_five_face() -> (PlaneGraph, Vec<usize>) {
    let rot = vec![
        vec![1, 12, 5],
        vec![2, 11, 0],
        vec![1, 3, 14, 13],
        vec![2, 4, 9],
        vec![5, 9, 3],
        vec![0, 15, 4],
        vec![11, 7, 10, 12],
        vec![11, 13, 8, 6],
        vec![7, 13, 14, 9],
        vec![10, 8, 3, 4],
        vec![12, 6, 9, 15],
        vec![1, 7, 6],
        vec![0, 6, 10],
        vec![2, 8, 7],
        vec![2, 8],
        vec![10, 5],
    ];
    let pg = PlaneGraph::build(rot, Some(&[0, 1, 2, 3, 4, 5])).unwrap();
    (pg, vec![6, 7, 8, 9, 10])
}

/// 9-vertex patch with an internal 5-vertex (id 6) on exactly two 3-faces
/// and three 4+-faces, realizing the `3/2 (deg - 5) = 0` equality.
pub fn patch_internal_five_vertex() -> (PlaneGraph, usize) {
    let rot = vec![
        vec![1, 6, 5],
        vec![2, 6, 0],
        vec![1, 3, 6],
        vec![7, 2, 4],
        vec![5, 8, 3],
        vec![0, 4],
        vec![0, 1, 2, 7, 8],
        vec![3, 6],
        vec![6, 4],
    ];
    let pg = PlaneGraph::build(rot, Some(&[0, 1, 2, 3, 4, 5])).unwrap();
    (pg, 6)
}
