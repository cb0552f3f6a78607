use super::{greedy_f, Greedy, Threshold};
use crate::bounds::cheap_edge_cap;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, Graph};

fn check_hypotheses(g: &Graph, k: usize, d: usize) -> Result<()> {
    if k >= d {
        return Err(Error::Precondition(format!("need k < d, got k = {k}, d = {d}")));
    }
    let max_degree = g.max_degree();
    if max_degree > d {
        return Err(Error::Precondition(format!("maximum degree {max_degree} exceeds d = {d}")));
    }
    let actual = g.degeneracy().k;
    if actual > k {
        return Err(Error::Precondition(format!("graph is {actual}-degenerate, not {k}-degenerate")));
    }
    Ok(())
}

/// An edge whose conflict set has at most `(3k − 1)d − k(k + 1) + 1` edges,
/// in a nonempty `k`-degenerate graph of maximum degree at most `d > k`.
///
/// Returns the globally cheapest edge (smallest id among ties).
pub fn find_cheap_edge(g: &Graph, k: usize, d: usize) -> Result<EdgeId> {
    if g.m() == 0 {
        return Err(Error::EmptyGraph);
    }
    check_hypotheses(g, k, d)?;
    let (c, e) =
        g.edge_ids().map(|e| (g.conflict_size(e).expect("edge is present"), e)).min().expect("graph has an edge");
    let cap = cheap_edge_cap(k as u64, d as u64);
    if c as u64 > cap {
        return Err(Error::Internal(format!("cheapest edge {e} has conflict size {c} > {cap}")));
    }
    Ok(e)
}

#[derive(Clone, Debug)]
pub struct DegenerateGreedy {
    pub matching: EdgeSet,
    pub k: usize,
    pub d: usize,
    pub threshold: Threshold,
    pub greedy: Greedy,
}

/// Greedy with threshold `(3k − 1)d − k(k + 1) + 1` on a `k`-degenerate graph
/// of maximum degree at most `d > k`. Every subgraph stays `k`-degenerate, so a
/// cheap edge always exists and the residual graph must come out edgeless.
///
/// `k` must be at least the degeneracy of `g` and `d` at least its maximum
/// degree; both are re-derived from `g` and checked.
pub fn degenerate_greedy(g: &Graph, k: usize, d: usize) -> Result<DegenerateGreedy> {
    check_hypotheses(g, k, d)?;
    let threshold = Threshold::degenerate(k as u64, d as u64);
    let greedy = greedy_f(g, threshold);
    let left = greedy.residual().m();
    if left > 0 {
        return Err(Error::Internal(format!("{left} edges survived the degenerate greedy")));
    }
    Ok(DegenerateGreedy { matching: greedy.matching.clone(), k, d, threshold, greedy })
}
