//! Slow, independent reference implementations used to cross-check the fast
//! paths. Nothing here shares code with the implementations it checks:
//! colorings are enumerated as raw assignment vectors, subgraph containment
//! tries injections in plain vertex order, and cycle sides are determined by
//! local rotation arcs rather than face tracing.

use std::collections::BTreeSet;

use crate::cover::{Color, ListAssignment, MatchingAssignment};
use crate::graph::SimpleGraph;
use crate::plane_graph::PlaneGraph;

/// Enumerates every assignment in the list product and keeps the valid
/// M-colorings. Exponential; callers keep instances tiny.
pub fn all_mcolorings(
    g: &SimpleGraph,
    lists: &ListAssignment,
    m: &MatchingAssignment,
) -> Vec<Vec<Color>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fn rec(
        g: &SimpleGraph,
        lists: &ListAssignment,
        m: &MatchingAssignment,
        v: usize,
        current: &mut Vec<Color>,
        out: &mut Vec<Vec<Color>>,
    ) {
        if v == g.n() {
            out.push(current.clone());
            return;
        }
        'colors: for &c in lists.list(v) {
            for &u in g.neighbors(v) {
                if u < v && m.is_matched(v, c, u, current[u]) {
                    continue 'colors;
                }
            }
            current[v] = c;
            rec(g, lists, m, v + 1, current, out);
        }
    }
    rec(g, lists, m, 0, &mut current, &mut out);
    out
}

pub fn count_mcolorings(g: &SimpleGraph, lists: &ListAssignment, m: &MatchingAssignment) -> u64 {
    all_mcolorings(g, lists, m).len() as u64
}

pub fn has_mcoloring(g: &SimpleGraph, lists: &ListAssignment, m: &MatchingAssignment) -> bool {
    !all_mcolorings(g, lists, m).is_empty()
}

/// Subgraph containment by trying injections in plain pattern-id order.
pub fn contains_by_injections(host: &SimpleGraph, pattern: &SimpleGraph) -> bool {
    if pattern.n() > host.n() {
        return false;
    }
    let mut mapping = vec![usize::MAX; pattern.n()];
    let mut used = vec![false; host.n()];
    fn rec(
        host: &SimpleGraph,
        pattern: &SimpleGraph,
        p: usize,
        mapping: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if p == pattern.n() {
            return true;
        }
        for h in 0..host.n() {
            if used[h] {
                continue;
            }
            let ok = pattern
                .neighbors(p)
                .iter()
                .filter(|&&q| q < p)
                .all(|&q| host.has_edge(h, mapping[q]));
            if !ok {
                continue;
            }
            mapping[p] = h;
            used[h] = true;
            if rec(host, pattern, p + 1, mapping, used) {
                return true;
            }
            mapping[p] = usize::MAX;
            used[h] = false;
        }
        false
    }
    rec(host, pattern, 0, &mut mapping, &mut used)
}

/// Separating-cycle oracle working from rotation arcs instead of face
/// tracing: at each cycle vertex the non-cycle edges split into the two arcs
/// between the cycle edges; flooding from each arc (never through cycle
/// vertices) yields the two open regions.
pub fn is_separating_by_regions(g: &PlaneGraph, cycle: &[usize]) -> bool {
    let (inside, outside) = region_vertices(g, cycle);
    !inside.is_empty() && !outside.is_empty()
}

/// The two open regions of a cycle, as vertex sets. The labeling of which
/// side is "first" is arbitrary but deterministic.
pub fn region_vertices(g: &PlaneGraph, cycle: &[usize]) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let m = cycle.len();
    let on_cycle: BTreeSet<usize> = cycle.iter().copied().collect();
    let mut side_a_seeds: BTreeSet<usize> = BTreeSet::new();
    let mut side_b_seeds: BTreeSet<usize> = BTreeSet::new();
    for i in 0..m {
        let prev = cycle[(i + m - 1) % m];
        let v = cycle[i];
        let next = cycle[(i + 1) % m];
        let rot = g.rotation(v);
        let d = rot.len();
        let p_next = rot.iter().position(|&w| w == next).unwrap();
        // Walk the rotation from `next` to `prev`; everything strictly
        // between lands on one side, the remaining arc on the other.
        let mut k = (p_next + 1) % d;
        let mut bucket = &mut side_a_seeds;
        while rot[k] != next {
            if rot[k] == prev {
                bucket = &mut side_b_seeds;
            } else if !on_cycle.contains(&rot[k]) {
                bucket.insert(rot[k]);
            }
            k = (k + 1) % d;
        }
    }
    let flood = |seeds: &BTreeSet<usize>| -> BTreeSet<usize> {
        let mut seen = seeds.clone();
        let mut stack: Vec<usize> = seeds.iter().copied().collect();
        while let Some(v) = stack.pop() {
            for &w in g.graph().neighbors(v) {
                if !on_cycle.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    };
    (flood(&side_a_seeds), flood(&side_b_seeds))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::encode_proper_coloring;

    #[test]
    fn k4_proper_coloring_count() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let (lists, m) = encode_proper_coloring(&g, 4);
        assert_eq!(count_mcolorings(&g, &lists, &m), 24);
        let (l3, m3) = encode_proper_coloring(&g, 3);
        assert_eq!(count_mcolorings(&g, &l3, &m3), 0);
    }

    #[test]
    fn injection_oracle_finds_triangle() {
        let host = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]);
        let tri = SimpleGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(contains_by_injections(&host, &tri));
        let c4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(!contains_by_injections(&c4, &tri));
    }

    #[test]
    fn region_oracle_on_wheel_with_tail() {
        let rot = vec![
            vec![5, 6, 1, 7],
            vec![0, 6, 2, 7],
            vec![1, 6, 3],
            vec![2, 6, 4],
            vec![3, 6, 5],
            vec![4, 6, 0],
            vec![5, 4, 3, 2, 1, 0],
            vec![0, 1],
        ];
        let g = PlaneGraph::build(rot, Some(&[0, 5, 4, 3, 2, 1, 7])).unwrap();
        assert!(is_separating_by_regions(&g, &[0, 1, 2, 3, 4, 5]));
        assert!(!is_separating_by_regions(&g, &[0, 1, 6]));
    }
}
