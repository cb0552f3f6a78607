use serde::Serialize;

use super::{greedy_f, local_search, Greedy, Threshold};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};

/// Which hypotheses of the size and ratio guarantees the input satisfied.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApproxBipFlags {
    /// Every vertex has degree exactly `d`.
    pub regular: bool,
    pub c3c5_free: bool,
    /// `d ≥ 3`.
    pub d_ok: bool,
    /// Maximum degree at most `d`.
    pub max_degree_ok: bool,
}

impl ApproxBipFlags {
    pub fn of(g: &Graph, d: usize) -> ApproxBipFlags {
        ApproxBipFlags {
            regular: g.regular_degree() == Some(d),
            c3c5_free: g.is_c3c5_free(),
            d_ok: d >= 3,
            max_degree_ok: g.max_degree() <= d,
        }
    }

    /// Hypotheses of the size guarantee `12m/(17d²)`; regularity is not needed.
    pub fn size_guarantee(&self) -> bool {
        self.c3c5_free && self.d_ok && self.max_degree_ok
    }

    /// Hypotheses of the approximation ratio.
    pub fn ratio_guarantee(&self) -> bool {
        self.size_guarantee() && self.regular
    }
}

#[derive(Clone, Debug)]
pub struct ApproxBip {
    /// `M ∪ M'`.
    pub matching: EdgeSet,
    pub d: usize,
    pub threshold: Threshold,
    /// The greedy phase `(M, G')`.
    pub greedy: Greedy,
    /// `M'`, local search on the residual graph.
    pub local: EdgeSet,
    pub flags: ApproxBipFlags,
}

impl ApproxBip {
    pub fn residual(&self) -> &Graph {
        self.greedy.residual()
    }
}

/// Greedy with threshold `17d²/12`, then local search on what is left.
///
/// Runs on any graph; `flags` records which guarantee hypotheses held.
pub fn approx_bip(g: &Graph, d: usize) -> Result<ApproxBip> {
    if d == 0 {
        return Err(Error::InvalidParameter("degree d must be at least 1".into()));
    }
    let threshold = Threshold::approx_bip(d as u64);
    let greedy = greedy_f(g, threshold);
    let local = local_search(greedy.residual());
    let mut matching = greedy.matching.clone();
    matching.union_with(&local);
    Ok(ApproxBip { matching, d, threshold, greedy, local, flags: ApproxBipFlags::of(g, d) })
}
