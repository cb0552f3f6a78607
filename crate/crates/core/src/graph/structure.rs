use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::{Graph, Vertex};

/// Outcome of minimum-degree elimination.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegeneracyResult {
    pub k: usize,
    /// Vertices in the order they were eliminated.
    pub ordering: Vec<Vertex>,
}

impl Graph {
    /// Exact degeneracy by repeatedly deleting a minimum-degree vertex,
    /// smallest index first among ties.
    pub fn degeneracy(&self) -> DegeneracyResult {
        let mut degree = self.degrees();
        let mut queue: BTreeSet<(usize, Vertex)> = degree.iter().enumerate().map(|(v, &d)| (d, v)).collect();
        let mut gone = vec![false; self.n];
        let mut ordering = Vec::with_capacity(self.n);
        let mut k = 0;
        while let Some((d, v)) = queue.pop_first() {
            k = k.max(d);
            gone[v] = true;
            ordering.push(v);
            for &(w, _) in self.neighbors(v) {
                if !gone[w] {
                    queue.remove(&(degree[w], w));
                    degree[w] -= 1;
                    queue.insert((degree[w], w));
                }
            }
        }
        DegeneracyResult { k, ordering }
    }

    /// `Some(d)` when every vertex has degree `d`; `None` for irregular or vertex-less graphs.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency.iter().all(|l| l.len() == first).then_some(first)
    }

    /// Two-coloring by BFS.
    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                let here = side[v].unwrap();
                for &(w, _) in self.neighbors(v) {
                    match side[w] {
                        None => {
                            side[w] = Some(!here);
                            queue.push_back(w);
                        }
                        Some(s) if s == here => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn has_triangle(&self) -> bool {
        self.edges().any(|(_, u, v)| {
            let (a, b) = (self.neighbors(u), self.neighbors(v));
            // sorted merge for a common neighbor
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].0.cmp(&b[j].0) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return true,
                }
            }
            false
        })
    }

    /// Exhaustive search for a 5-cycle. Each cycle is found from its smallest vertex.
    pub fn has_five_cycle(&self) -> bool {
        (0..self.n).any(|s| {
            let mut path = [s; 5];
            self.extend_path(s, &mut path, 1)
        })
    }

    fn extend_path(&self, start: Vertex, path: &mut [Vertex; 5], len: usize) -> bool {
        let last = path[len - 1];
        for &(w, _) in self.neighbors(last) {
            if w <= start || path[..len].contains(&w) {
                continue;
            }
            path[len] = w;
            if len == 4 {
                if self.has_edge(w, start) {
                    return true;
                }
            } else if self.extend_path(start, path, len + 1) {
                return true;
            }
        }
        false
    }

    /// No cycle of length 3 and none of length 5.
    pub fn is_c3c5_free(&self) -> bool {
        self.is_bipartite() || (!self.has_triangle() && !self.has_five_cycle())
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.clear();
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in self.neighbors(v) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}
