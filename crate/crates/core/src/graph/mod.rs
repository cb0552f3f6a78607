//! Simple undirected graphs with stable edge identifiers.
//!
//! Vertices are `0..n`. Every edge gets the [`EdgeId`] of its position in the
//! edge list it was built from, and keeps that id in every subgraph obtained
//! by removing edges. Removal never renumbers anything, so conflict sets taken
//! in a graph and in any of its edge-deleted subgraphs can be compared by id.

mod conflict;
mod edge_set;
mod io;
mod structure;

use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use conflict::MatchingViolation;
pub use edge_set::EdgeSet;
pub use io::{parse_edge_list, read_edge_list, write_edge_list};
pub use structure::DegeneracyResult;

pub type Vertex = usize;

/// Position of an edge in the edge list of the graph it was built from.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// How [`Graph::build_with`] treats a pair that was already seen.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub enum DuplicatePolicy {
    #[default]
    Reject,
    /// Keep the first occurrence. Later copies are dropped and do not consume an id.
    Merge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Every edge of the original graph as `(u, v)` with `u < v`.
    edges: Arc<[(Vertex, Vertex)]>,
    present: FixedBitSet,
    /// Present edges only, sorted by neighbor.
    adjacency: Vec<Vec<(Vertex, EdgeId)>>,
    m: usize,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, out-of-range endpoints and duplicate pairs.
    pub fn build(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Graph> {
        Self::build_with(n, pairs, DuplicatePolicy::Reject)
    }

    pub fn build_with(n: usize, pairs: &[(Vertex, Vertex)], policy: DuplicatePolicy) -> Result<Graph> {
        let mut adjacency: Vec<Vec<(Vertex, EdgeId)>> = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            // Adjacency is sorted at the end, so a linear probe is the simplest
            // duplicate test that does not need a second index.
            if adjacency[u].iter().any(|&(w, _)| w == v) {
                match policy {
                    DuplicatePolicy::Reject => return Err(Error::DuplicateEdge(u, v)),
                    DuplicatePolicy::Merge => continue,
                }
            }
            let id = EdgeId(edges.len());
            edges.push((u, v));
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let m = edges.len();
        let mut present = FixedBitSet::with_capacity(m);
        present.insert_range(..);
        Ok(Graph { n, edges: edges.into(), present, adjacency, m })
    }

    /// A graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph { n, edges: Arc::from(Vec::new()), present: FixedBitSet::new(), adjacency: vec![Vec::new(); n], m: 0 }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of present edges.
    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of edges of the original graph, i.e. the bound on every `EdgeId`.
    #[inline]
    pub fn edge_capacity(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn is_present(&self, e: EdgeId) -> bool {
        e.0 < self.edges.len() && self.present.contains(e.0)
    }

    /// Endpoints `(u, v)` with `u < v`. Works for removed edges too.
    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e.0]
    }

    /// Present edges in increasing id order.
    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.present.ones().map(EdgeId)
    }

    /// Present edges as `(id, u, v)` in increasing id order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, Vertex, Vertex)> + '_ {
        self.edge_ids().map(move |e| {
            let (u, v) = self.edges[e.0];
            (e, u, v)
        })
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let list = self.adjacency.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| list[i].1)
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// An empty [`EdgeSet`] sized for this graph's ids.
    pub fn new_edge_set(&self) -> EdgeSet {
        EdgeSet::with_capacity(self.edge_capacity())
    }

    /// All present edges.
    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet::from_bits(self.present.clone())
    }

    /// `G - E`: same vertex set, the given edges removed, surviving ids unchanged.
    pub fn without_edges(&self, removed: &EdgeSet) -> Graph {
        let mut g = self.clone();
        g.remove_edges_in_place(removed.iter());
        g
    }

    pub(crate) fn remove_edges_in_place(&mut self, removed: impl IntoIterator<Item = EdgeId>) {
        let mut touched = Vec::new();
        for e in removed {
            if self.is_present(e) {
                self.present.set(e.0, false);
                self.m -= 1;
                let (u, v) = self.edges[e.0];
                touched.push(u);
                touched.push(v);
            }
        }
        touched.sort_unstable();
        touched.dedup();
        for v in touched {
            let present = &self.present;
            self.adjacency[v].retain(|&(_, e)| present.contains(e.0));
        }
    }

    pub(crate) fn require_present(&self, e: EdgeId) -> Result<()> {
        if self.is_present(e) {
            Ok(())
        } else {
            Err(Error::AbsentEdge(e))
        }
    }
}
