//! Abstract (embedding-free) simple graphs and simple-cycle enumeration.

use std::collections::BTreeSet;

use thiserror::Error;

/// Guard on simple-cycle enumeration length; longer requests must go through
/// [`SimpleGraph::enumerate_cycles_capped`].
pub const MAX_CYCLE_LEN: usize = 8;

/// Default cap on the number of cycles reported before bailing out.
pub const DEFAULT_CYCLE_CAP: usize = 200_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("cycle length {requested} exceeds the guard {guard}")]
    LengthGuard { requested: usize, guard: usize },
    #[error("cycle count exceeded the cap of {cap}")]
    LimitExceeded { cap: usize },
}

/// Undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list. Duplicate edges and loops are rejected
    /// by panic; callers construct from validated sources.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            assert!(u != v, "loop edge {u}-{v}");
            assert!(u < n && v < n, "edge {u}-{v} out of range (n={n})");
            let key = (u.min(v), u.max(v));
            assert!(seen.insert(key), "duplicate edge {u}-{v}");
            adj[u].push(v);
            adj[v].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        let edges = seen.into_iter().collect();
        SimpleGraph { adj, edges }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges normalized as `(min, max)`, ascending.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n()
    }

    /// BFS distance from `src` to `dst`, `None` if unreachable.
    pub fn distance(&self, src: usize, dst: usize) -> Option<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = std::collections::VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            if v == dst {
                return Some(dist[v]);
            }
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Bridge edges (normalized), found by the usual low-link DFS.
    pub fn bridges(&self) -> BTreeSet<(usize, usize)> {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![usize::MAX; n];
        let mut out = BTreeSet::new();
        let mut timer = 0usize;
        // Iterative DFS; (vertex, parent, neighbor index).
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, usize::MAX, 0));
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[v].len() {
                    let w = self.adj[v][*idx];
                    *idx += 1;
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, v, 0));
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (p, _, _)) = stack.last_mut() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out.insert((p.min(v), p.max(v)));
                        }
                    }
                }
            }
        }
        out
    }

    /// All simple cycles of length at most `max_len`, each reported once up to
    /// rotation and reflection, in a deterministic order.
    ///
    /// The canonical representative starts at the cycle's smallest vertex and
    /// runs toward its smaller neighbor on the cycle.
    pub fn enumerate_cycles(&self, max_len: usize) -> Result<Vec<Vec<usize>>, CycleError> {
        if max_len > MAX_CYCLE_LEN {
            return Err(CycleError::LengthGuard {
                requested: max_len,
                guard: MAX_CYCLE_LEN,
            });
        }
        self.enumerate_cycles_capped(max_len, DEFAULT_CYCLE_CAP)
    }

    /// As [`enumerate_cycles`](Self::enumerate_cycles) with an explicit count cap
    /// and no length guard.
    pub fn enumerate_cycles_capped(
        &self,
        max_len: usize,
        cap: usize,
    ) -> Result<Vec<Vec<usize>>, CycleError> {
        let mut out = Vec::new();
        if max_len < 3 {
            return Ok(out);
        }
        let n = self.n();
        let mut on_path = vec![false; n];
        let mut path: Vec<usize> = Vec::new();
        for start in 0..n {
            path.clear();
            path.push(start);
            on_path[start] = true;
            self.cycle_dfs(start, start, max_len, cap, &mut path, &mut on_path, &mut out)?;
            on_path[start] = false;
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    fn cycle_dfs(
        &self,
        start: usize,
        v: usize,
        max_len: usize,
        cap: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) -> Result<(), CycleError> {
        for &w in &self.adj[v] {
            if w == start && path.len() >= 3 {
                // Report each cycle once: the second vertex must beat the last.
                if path[1] < path[path.len() - 1] {
                    if out.len() >= cap {
                        return Err(CycleError::LimitExceeded { cap });
                    }
                    out.push(path.clone());
                }
            } else if w > start && !on_path[w] && path.len() < max_len {
                path.push(w);
                on_path[w] = true;
                self.cycle_dfs(start, w, max_len, cap, path, on_path, out)?;
                on_path[w] = false;
                path.pop();
            }
        }
        Ok(())
    }
}

/// True when the two cycles (vertex sequences) share at least one undirected edge.
pub fn cycles_share_edge(a: &[usize], b: &[usize]) -> bool {
    let edges_a: BTreeSet<(usize, usize)> = cycle_edges(a).collect();
    cycle_edges(b).any(|e| edges_a.contains(&e))
}

/// True when the two cycles share at least one vertex.
pub fn cycles_share_vertex(a: &[usize], b: &[usize]) -> bool {
    let set: BTreeSet<usize> = a.iter().copied().collect();
    b.iter().any(|v| set.contains(v))
}

/// Normalized undirected edges of a cycle given as a vertex sequence.
pub fn cycle_edges(cycle: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..cycle.len()).map(move |i| {
        let u = cycle[i];
        let v = cycle[(i + 1) % cycle.len()];
        (u.min(v), u.max(v))
    })
}
