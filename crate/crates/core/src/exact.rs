//! Exact maximum induced matching by branch and bound.
//!
//! Induced matchings of `G` are the independent sets of the conflict graph on
//! `E(G)` (edges adjacent when one lies in the other's conflict set). The
//! search branches on a candidate of maximum conflict degree, include branch
//! first, and prunes with
//!
//! * `|current| + |candidates|`,
//! * a greedy clique cover of the candidates (one pick per clique at most),
//! * `m / (2d − 1)` when the graph is `d`-regular.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, Graph};
use crate::greedy::{greedy_f, Threshold};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactResult {
    pub optimum: usize,
    pub witness: EdgeSet,
    pub nodes_explored: u64,
    /// The search stopped early; `optimum` is only the best size found.
    pub budget_exhausted: bool,
}

/// `⌊m / (2d − 1)⌋`, an upper bound on induced matchings of a `d`-regular graph.
pub fn upper_bound_regular(m: usize, d: usize) -> Result<usize> {
    if d == 0 {
        return Err(Error::InvalidParameter("degree d must be at least 1".into()));
    }
    Ok(m / (2 * d - 1))
}

struct Search {
    /// Closed neighborhoods in the conflict graph, over compact indices.
    closed: Vec<FixedBitSet>,
    current: Vec<usize>,
    best: Vec<usize>,
    cap: usize,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl Search {
    fn run(&mut self, candidates: FixedBitSet) {
        if self.exhausted {
            return;
        }
        if self.nodes >= self.budget {
            self.exhausted = true;
            return;
        }
        self.nodes += 1;
        if self.current.len() > self.best.len() {
            self.best.clone_from(&self.current);
        }
        if self.best.len() >= self.cap {
            return;
        }
        let count = candidates.count_ones(..);
        if count == 0 || self.current.len() + count <= self.best.len() {
            return;
        }
        if self.current.len() + self.clique_cover(&candidates) <= self.best.len() {
            return;
        }

        let pivot = candidates
            .ones()
            .map(|v| (self.closed[v].intersection_count(&candidates), std::cmp::Reverse(v)))
            .max()
            .map(|(_, std::cmp::Reverse(v))| v)
            .expect("candidates are nonempty");

        let mut with = candidates.clone();
        with.difference_with(&self.closed[pivot]);
        self.current.push(pivot);
        self.run(with);
        self.current.pop();

        let mut without = candidates;
        without.set(pivot, false);
        self.run(without);
    }

    /// Number of cliques in a first-fit clique cover of `candidates`.
    fn clique_cover(&self, candidates: &FixedBitSet) -> usize {
        // Each clique is tracked by the common closed neighborhood of its members.
        let mut commons: Vec<FixedBitSet> = Vec::new();
        'next: for v in candidates.ones() {
            for common in &mut commons {
                if common.contains(v) {
                    common.intersect_with(&self.closed[v]);
                    continue 'next;
                }
            }
            let mut common = self.closed[v].clone();
            common.intersect_with(candidates);
            commons.push(common);
        }
        commons.len()
    }
}

/// Maximum induced matching of `g`, or the best one found within `node_budget`
/// search nodes (a budget of zero is treated as one).
pub fn exact_induced_matching(g: &Graph, node_budget: u64) -> ExactResult {
    let ids: Vec<EdgeId> = g.edge_ids().collect();
    let mut index = vec![usize::MAX; g.edge_capacity()];
    for (i, e) in ids.iter().enumerate() {
        index[e.0] = i;
    }
    let closed: Vec<FixedBitSet> = ids
        .iter()
        .map(|&e| {
            let mut row = FixedBitSet::with_capacity(ids.len());
            for f in g.conflict_ids(e).expect("edge is present") {
                row.insert(index[f.0]);
            }
            row
        })
        .collect();

    let seed = greedy_f(g, Threshold::integer(u64::MAX));
    let cap = match g.regular_degree() {
        Some(d) if d > 0 => upper_bound_regular(ids.len(), d).expect("d is positive"),
        _ => ids.len(),
    };
    let mut search = Search {
        closed,
        current: Vec::new(),
        best: seed.matching.iter().map(|e| index[e.0]).collect(),
        cap,
        nodes: 0,
        budget: node_budget.max(1),
        exhausted: false,
    };
    let mut all = FixedBitSet::with_capacity(ids.len());
    all.insert_range(..);
    search.run(all);

    let witness = EdgeSet::from_ids(g.edge_capacity(), search.best.iter().map(|&i| ids[i]));
    ExactResult { optimum: witness.len(), witness, nodes_explored: search.nodes, budget_exhausted: search.exhausted }
}
