//! JSON reports for single algorithm runs.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use super::checks;
use super::BoundCheck;
use crate::error::{Error, Result};
use crate::exact::exact_induced_matching;
use crate::graph::{EdgeId, EdgeSet, Graph, Vertex};
use crate::greedy::{
    approx_bip, degenerate_greedy, find_cheap_edge, greedy_f, greedy_strong_coloring, local_search, Greedy, Threshold,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchedEdge {
    pub id: EdgeId,
    pub u: Vertex,
    pub v: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub edge: EdgeId,
    pub conflict_size: usize,
    pub removed: EdgeSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceReport {
    pub steps: Vec<TraceStep>,
    pub residual_edges: Vec<EdgeId>,
}

impl TraceReport {
    fn of(greedy: &Greedy) -> TraceReport {
        TraceReport {
            steps: greedy
                .trace
                .steps
                .iter()
                .map(|s| TraceStep { edge: s.edge, conflict_size: s.conflict_size, removed: s.removed.clone() })
                .collect(),
            residual_edges: greedy.residual().edge_ids().collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringSummary {
    pub num_colors: usize,
    pub colors: Vec<Option<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactStats {
    pub nodes_explored: u64,
    pub budget_exhausted: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlgorithmReport {
    pub algorithm: String,
    pub params: BTreeMap<String, Value>,
    pub matching: Vec<MatchedEdge>,
    pub size: usize,
    pub bounds: Vec<BoundCheck>,
    pub preconditions: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<ColoringSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceReport>,
}

impl AlgorithmReport {
    fn new(algorithm: &str, g: &Graph, matching: &EdgeSet) -> AlgorithmReport {
        AlgorithmReport {
            algorithm: algorithm.to_string(),
            params: BTreeMap::new(),
            matching: matching
                .iter()
                .map(|id| {
                    let (u, v) = g.endpoints(id);
                    MatchedEdge { id, u, v }
                })
                .collect(),
            size: matching.len(),
            bounds: Vec::new(),
            preconditions: BTreeMap::new(),
            coloring: None,
            exact: None,
            trace: None,
        }
    }

    fn param(mut self, key: &str, value: Value) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    fn precondition(&mut self, key: &str, holds: bool) {
        self.preconditions.insert(key.to_string(), holds);
    }
}

/// Which algorithm to run and with which parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RunRequest {
    Greedy {
        f: Threshold,
    },
    LocalSearch,
    /// `d` defaults to the maximum degree.
    ApproxBip {
        d: Option<usize>,
    },
    /// `k` defaults to the degeneracy, `d` to the maximum degree.
    Degenerate {
        k: Option<usize>,
        d: Option<usize>,
    },
    Coloring,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunOutcome {
    pub report: AlgorithmReport,
    /// A hypothesis of the algorithm's guarantee failed; the result is still a valid induced matching.
    pub guarantees_void: bool,
}

pub fn run_algorithm(g: &Graph, request: &RunRequest, with_trace: bool) -> Result<RunOutcome> {
    let outcome = match *request {
        RunRequest::Greedy { f } => {
            let out = greedy_f(g, f);
            let mut report = AlgorithmReport::new("greedy", g, &out.matching).param("f", json!(f.to_string()));
            report.bounds = vec![
                checks::induced(g, "greedy", &out.matching),
                checks::greedy_fraction(g, "greedy", &out, f),
                checks::residual_floor("greedy", &out, f),
            ];
            if with_trace {
                report.trace = Some(TraceReport::of(&out));
            }
            RunOutcome { report, guarantees_void: false }
        }
        RunRequest::LocalSearch => {
            let out = local_search(g);
            let mut report = AlgorithmReport::new("local-search", g, &out);
            report.bounds =
                vec![checks::induced(g, "local-search", &out), checks::regular_upper(g, "local-search", out.len())];
            RunOutcome { report, guarantees_void: false }
        }
        RunRequest::ApproxBip { d } => {
            let d = d.unwrap_or_else(|| g.max_degree());
            let out = approx_bip(g, d)?;
            let mut report = AlgorithmReport::new("approx-bip", g, &out.matching)
                .param("d", json!(d))
                .param("f", json!(out.threshold.to_string()))
                .param("greedy_size", json!(out.greedy.matching.len()))
                .param("local_size", json!(out.local.len()));
            report.precondition("regular", out.flags.regular);
            report.precondition("c3c5_free", out.flags.c3c5_free);
            report.precondition("d_ok", out.flags.d_ok);
            report.precondition("max_degree_ok", out.flags.max_degree_ok);
            report.bounds = checks::approx_bip(g, "approx-bip", &out);
            if with_trace {
                report.trace = Some(TraceReport::of(&out.greedy));
            }
            RunOutcome { report, guarantees_void: !out.flags.ratio_guarantee() }
        }
        RunRequest::Degenerate { k, d } => {
            let actual_k = g.degeneracy().k;
            let k = k.unwrap_or(actual_k);
            let d = d.unwrap_or_else(|| g.max_degree());
            match degenerate_greedy(g, k, d) {
                Ok(out) => {
                    let cheap = if g.m() > 0 { Some(find_cheap_edge(g, k, d)?) } else { None };
                    let mut report = degenerate_report(g, k, d, actual_k, &out.greedy, out.threshold, with_trace);
                    report.bounds = checks::degenerate(g, "degenerate", &out, cheap);
                    RunOutcome { report, guarantees_void: false }
                }
                Err(Error::Precondition(_)) => {
                    // Run the same greedy anyway; the result is valid, only the guarantee is gone.
                    let f = Threshold::degenerate(k as u64, d as u64);
                    let out = greedy_f(g, f);
                    let mut report = degenerate_report(g, k, d, actual_k, &out, f, with_trace);
                    report.bounds = vec![
                        checks::induced(g, "degenerate", &out.matching),
                        checks::greedy_fraction(g, "degenerate", &out, f),
                    ];
                    RunOutcome { report, guarantees_void: true }
                }
                Err(e) => return Err(e),
            }
        }
        RunRequest::Coloring => {
            let col = greedy_strong_coloring(g);
            // largest class, lowest color among ties
            let largest = col
                .classes()
                .into_iter()
                .enumerate()
                .max_by_key(|(i, c)| (c.len(), std::cmp::Reverse(*i)))
                .map_or_else(|| g.new_edge_set(), |(_, c)| c);
            let mut report = AlgorithmReport::new("coloring", g, &largest);
            report.bounds = checks::coloring(g, "coloring", &col);
            report.coloring = Some(ColoringSummary { num_colors: col.num_colors, colors: col.colors });
            RunOutcome { report, guarantees_void: false }
        }
    };
    Ok(outcome)
}

fn degenerate_report(
    g: &Graph,
    k: usize,
    d: usize,
    actual_k: usize,
    greedy: &Greedy,
    f: Threshold,
    with_trace: bool,
) -> AlgorithmReport {
    let mut report = AlgorithmReport::new("degenerate", g, &greedy.matching)
        .param("k", json!(k))
        .param("d", json!(d))
        .param("f", json!(f.to_string()));
    report.precondition("k_lt_d", k < d);
    report.precondition("max_degree_ok", g.max_degree() <= d);
    report.precondition("k_degenerate", actual_k <= k);
    if with_trace {
        report.trace = Some(TraceReport::of(greedy));
    }
    report
}

/// Exact optimum report; `algorithm` is `"exact"`.
pub fn run_exact(g: &Graph, node_budget: u64) -> AlgorithmReport {
    let res = exact_induced_matching(g, node_budget);
    let mut report = AlgorithmReport::new("exact", g, &res.witness).param("node_budget", json!(node_budget));
    report.bounds = vec![checks::induced(g, "exact", &res.witness), checks::regular_upper(g, "exact", res.optimum)];
    report.exact = Some(ExactStats { nodes_explored: res.nodes_explored, budget_exhausted: res.budget_exhausted });
    report
}
