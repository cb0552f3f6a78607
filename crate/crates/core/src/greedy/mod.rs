//! Greedy and local-search constructions of induced matchings.
//!
//! Every routine here keeps edge ids of the input graph, so the sets they
//! return can be checked directly against the original graph.

mod approx_bip;
mod coloring;
mod degenerate;
mod local_search;
mod threshold;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::{EdgeId, EdgeSet, Graph};

pub use approx_bip::{approx_bip, ApproxBip, ApproxBipFlags};
pub use coloring::{greedy_strong_coloring, StrongColoring};
pub use degenerate::{degenerate_greedy, find_cheap_edge, DegenerateGreedy};
pub use local_search::{is_local_search_fixpoint, local_search};
pub use threshold::Threshold;

/// One round of the greedy loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GreedyStep {
    pub edge: EdgeId,
    /// Conflict set of `edge` in the graph the round started from.
    pub removed: EdgeSet,
    pub conflict_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyTrace {
    pub steps: Vec<GreedyStep>,
    pub residual: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Greedy {
    pub matching: EdgeSet,
    pub trace: GreedyTrace,
}

impl Greedy {
    pub fn residual(&self) -> &Graph {
        &self.trace.residual
    }

    pub fn removed_count(&self) -> usize {
        self.trace.steps.iter().map(|s| s.removed.len()).sum()
    }
}

/// Repeatedly takes a cheapest edge while its conflict size is at most `f`,
/// then deletes its conflict set.
///
/// Among edges of minimum current conflict size the smallest id wins. After a
/// deletion only edges whose conflict sets could have shrunk are recounted:
/// those that were in the conflict set of some deleted edge.
pub fn greedy_f(g: &Graph, f: Threshold) -> Greedy {
    let mut work = g.clone();
    let mut size = vec![0usize; g.edge_capacity()];
    let mut queue: BTreeSet<(usize, EdgeId)> = BTreeSet::new();
    let mut buf = Vec::new();
    for e in g.edge_ids() {
        g.collect_conflicts(e, &mut buf);
        size[e.0] = buf.len();
        queue.insert((buf.len(), e));
    }

    let mut matching = g.new_edge_set();
    let mut steps = Vec::new();
    let mut removed_ids = Vec::new();
    let mut dirty = g.new_edge_set();
    while let Some(&(c, e)) = queue.first() {
        if !f.admits(c) {
            break;
        }
        work.collect_conflicts(e, &mut removed_ids);
        let removed = EdgeSet::from_ids(g.edge_capacity(), removed_ids.iter().copied());

        dirty.clear();
        for &r in &removed_ids {
            work.collect_conflicts(r, &mut buf);
            dirty.extend(buf.iter().copied());
        }
        dirty.difference_with(&removed);

        for &r in &removed_ids {
            queue.remove(&(size[r.0], r));
        }
        work.remove_edges_in_place(removed_ids.iter().copied());
        for h in dirty.iter() {
            queue.remove(&(size[h.0], h));
            work.collect_conflicts(h, &mut buf);
            size[h.0] = buf.len();
            queue.insert((buf.len(), h));
        }

        matching.insert(e);
        steps.push(GreedyStep { edge: e, removed, conflict_size: c });
    }
    Greedy { matching, trace: GreedyTrace { steps, residual: work } }
}

/// [`greedy_f`] with every conflict size recounted from scratch each round.
/// Slow; kept as a cross-check for the incremental bookkeeping.
pub fn greedy_f_full_recompute(g: &Graph, f: Threshold) -> Greedy {
    let mut work = g.clone();
    let mut matching = g.new_edge_set();
    let mut steps = Vec::new();
    loop {
        let cheapest = work.edge_ids().map(|e| (work.conflict_size(e).expect("edge is present"), e)).min();
        let Some((c, e)) = cheapest.filter(|&(c, _)| f.admits(c)) else {
            break;
        };
        let removed = work.conflict_set(e).expect("edge is present");
        work = work.without_edges(&removed);
        matching.insert(e);
        steps.push(GreedyStep { edge: e, removed, conflict_size: c });
    }
    Greedy { matching, trace: GreedyTrace { steps, residual: work } }
}
