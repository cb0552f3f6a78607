use std::time::Instant;

use num_rational::Ratio;
use serde::{Deserialize, Serialize, Serializer};

use super::checks;
use super::{inputs, BoundCheck, BoundKind};
use crate::bounds::{self, Rational};
use crate::exact::{exact_induced_matching, DEFAULT_NODE_BUDGET};
use crate::graph::{EdgeSet, Graph};
use crate::greedy::{
    approx_bip, degenerate_greedy, find_cheap_edge, greedy_f, greedy_strong_coloring, is_local_search_fixpoint,
    local_search, Threshold,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    /// Greedy with threshold `2d² − 2d + 1`.
    GreedyTrivial,
    LocalSearch,
    ApproxBip,
    Degenerate,
    Coloring,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::GreedyTrivial,
        Algorithm::LocalSearch,
        Algorithm::ApproxBip,
        Algorithm::Degenerate,
        Algorithm::Coloring,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::GreedyTrivial => "greedy-trivial",
            Algorithm::LocalSearch => "local-search",
            Algorithm::ApproxBip => "approx-bip",
            Algorithm::Degenerate => "degenerate",
            Algorithm::Coloring => "coloring",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub algorithms: Vec<Algorithm>,
    /// The exact oracle runs only when `m` is at most this.
    pub oracle_max_m: usize,
    pub node_budget: u64,
    /// Degree parameter for the degree-dependent bounds; defaults to the maximum degree.
    pub degree: Option<usize>,
    /// The exhaustive local-search fixpoint re-scan runs only when `m` is at most this.
    pub fixpoint_max_m: usize,
    /// Record wall-clock milliseconds. Off by default so reports are reproducible byte for byte.
    pub timings: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            algorithms: Algorithm::ALL.to_vec(),
            oracle_max_m: 40,
            node_budget: DEFAULT_NODE_BUDGET,
            degree: None,
            fixpoint_max_m: 200,
            timings: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgorithmRun {
    pub alg: String,
    pub size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colors: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactSummary {
    pub optimum: usize,
    pub nodes_explored: u64,
    pub budget_exhausted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioEntry {
    pub alg: String,
    #[serde(serialize_with = "ser_ratio")]
    pub exact_over_alg: Rational,
    pub decimal: String,
}

fn ser_ratio<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub instance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub regular_degree: Option<usize>,
    pub degeneracy: usize,
    pub c3c5_free: bool,
    /// Degree parameter the bounds were evaluated with.
    pub d: usize,
    pub algorithms: Vec<AlgorithmRun>,
    pub exact: Option<ExactSummary>,
    pub ratios: Vec<RatioEntry>,
    pub checks: Vec<BoundCheck>,
}

impl BoundReport {
    pub fn failures(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| c.failed())
    }

    pub fn all_pass(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn size_of(&self, alg: &str) -> Option<usize> {
        self.algorithms.iter().find(|a| a.alg == alg).map(|a| a.size)
    }

    pub fn checks_named<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a BoundCheck> + 'a {
        self.checks.iter().filter(move |c| c.name == name)
    }
}

fn timed<T>(enabled: bool, f: impl FnOnce() -> T) -> (T, Option<u64>) {
    let start = Instant::now();
    let out = f();
    (out, enabled.then(|| start.elapsed().as_millis() as u64))
}

/// Runs the configured algorithms on `g` and evaluates every applicable bound.
pub fn verify_instance(instance: &str, g: &Graph, cfg: &VerifyConfig) -> BoundReport {
    let max_degree = g.max_degree();
    let d = cfg.degree.unwrap_or(max_degree);
    let degeneracy = g.degeneracy().k;
    let mut runs: Vec<AlgorithmRun> = Vec::new();
    let mut checks: Vec<BoundCheck> = Vec::new();

    for &alg in &cfg.algorithms {
        let name = alg.name();
        match alg {
            Algorithm::GreedyTrivial => {
                let f = Threshold::trivial(d as u64);
                let (out, millis) = timed(cfg.timings, || greedy_f(g, f));
                checks.push(checks::induced(g, name, &out.matching));
                checks.push(checks::greedy_fraction(g, name, &out, f));
                checks.extend(checks::trivial_greedy(g, name, &out, d));
                checks.push(checks::regular_upper(g, name, out.matching.len()));
                runs.push(AlgorithmRun { alg: name.into(), size: out.matching.len(), colors: None, millis });
            }
            Algorithm::LocalSearch => {
                let (out, millis) = timed(cfg.timings, || local_search(g));
                checks.push(checks::induced(g, name, &out));
                if g.m() <= cfg.fixpoint_max_m {
                    let ok = is_local_search_fixpoint(g, &out) as u64;
                    checks.push(BoundCheck::new(
                        name,
                        "local_search_fixpoint",
                        BoundKind::Lower,
                        inputs(&[]),
                        Ratio::from_integer(1),
                        Ratio::from_integer(ok),
                    ));
                } else {
                    checks.push(BoundCheck::skipped(
                        name,
                        "local_search_fixpoint",
                        BoundKind::Lower,
                        "instance above fixpoint re-scan limit",
                    ));
                }
                checks.push(checks::regular_upper(g, name, out.len()));
                runs.push(AlgorithmRun { alg: name.into(), size: out.len(), colors: None, millis });
            }
            Algorithm::ApproxBip => {
                if d == 0 {
                    checks.push(BoundCheck::skipped(name, "approx_bip_size", BoundKind::Lower, "d = 0"));
                    continue;
                }
                let (out, millis) = timed(cfg.timings, || approx_bip(g, d).expect("d is positive"));
                checks.extend(checks::approx_bip(g, name, &out));
                runs.push(AlgorithmRun { alg: name.into(), size: out.matching.len(), colors: None, millis });
            }
            Algorithm::Degenerate => {
                if degeneracy >= d || max_degree > d {
                    let reason = format!("needs k < d and maximum degree ≤ d (k = {degeneracy}, d = {d})");
                    checks.push(BoundCheck::skipped(name, "degenerate_size", BoundKind::Lower, reason));
                    continue;
                }
                let (out, millis) = timed(cfg.timings, || degenerate_greedy(g, degeneracy, d));
                match out {
                    Ok(out) => {
                        let cheap = (g.m() > 0).then(|| find_cheap_edge(g, degeneracy, d)).transpose();
                        match cheap {
                            Ok(cheap) => checks.extend(checks::degenerate(g, name, &out, cheap)),
                            Err(e) => checks.push(failed(name, "cheap_edge_cap", e.to_string())),
                        }
                        runs.push(AlgorithmRun { alg: name.into(), size: out.matching.len(), colors: None, millis });
                    }
                    Err(e) => checks.push(failed(name, "degenerate_residual_empty", e.to_string())),
                }
            }
            Algorithm::Coloring => {
                let (col, millis) = timed(cfg.timings, || greedy_strong_coloring(g));
                checks.extend(checks::coloring(g, name, &col));
                let largest = col.classes().iter().map(EdgeSet::len).max().unwrap_or(0);
                runs.push(AlgorithmRun { alg: name.into(), size: largest, colors: Some(col.num_colors), millis });
            }
        }
    }

    let mut exact = None;
    let mut ratios = Vec::new();
    if g.m() <= cfg.oracle_max_m {
        let (res, millis) = timed(cfg.timings, || exact_induced_matching(g, cfg.node_budget));
        checks.push(checks::induced(g, "exact", &res.witness));
        checks.push(checks::regular_upper(g, "exact", res.optimum));
        if !res.budget_exhausted {
            let opt = res.optimum;
            for run in &runs {
                checks.push(BoundCheck::new(
                    &run.alg,
                    "exact_dominates",
                    BoundKind::Upper,
                    inputs(&[("optimum", opt as u64)]),
                    Ratio::from_integer(opt as u64),
                    Ratio::from_integer(run.size as u64),
                ));
                if run.size > 0 {
                    let ratio = Ratio::new(opt as u64, run.size as u64);
                    ratios.push(RatioEntry {
                        alg: run.alg.clone(),
                        exact_over_alg: ratio,
                        decimal: bounds::decimal(ratio),
                    });
                }
            }
            if let Some(run) = runs.iter().find(|r| r.alg == Algorithm::ApproxBip.name()) {
                checks.push(ratio_check(g, d, opt, run.size));
            }
        }
        exact = Some(ExactSummary {
            optimum: res.optimum,
            nodes_explored: res.nodes_explored,
            budget_exhausted: res.budget_exhausted,
            millis,
        });
    }

    BoundReport {
        instance: instance.to_string(),
        family: None,
        n: g.n(),
        m: g.m(),
        max_degree,
        regular_degree: g.regular_degree(),
        degeneracy,
        c3c5_free: g.is_c3c5_free(),
        d,
        algorithms: runs,
        exact,
        ratios,
        checks,
    }
}

fn failed(alg: &str, name: &str, reason: String) -> BoundCheck {
    BoundCheck { status: super::CheckStatus::Fail, ..BoundCheck::skipped(alg, name, BoundKind::Upper, reason) }
}

/// `optimum / |approx_bip| ≤ 17d/24 + 17d/(48d − 24)` on {C3,C5}-free `d`-regular graphs with `d ≥ 3`.
fn ratio_check(g: &Graph, d: usize, optimum: usize, size: usize) -> BoundCheck {
    let alg = Algorithm::ApproxBip.name();
    let applicable = d >= 3 && g.regular_degree() == Some(d) && g.is_c3c5_free();
    if !applicable {
        return BoundCheck::skipped(
            alg,
            "approx_ratio",
            BoundKind::Upper,
            "needs a {C3,C5}-free d-regular graph with d ≥ 3",
        );
    }
    if size == 0 {
        // a d-regular graph with d ≥ 3 has edges, and the pipeline always returns one
        return failed(alg, "approx_ratio", "empty output on a nonempty graph".into());
    }
    BoundCheck::new(
        alg,
        "approx_ratio",
        BoundKind::Upper,
        inputs(&[("d", d as u64), ("optimum", optimum as u64), ("size", size as u64)]),
        bounds::approx_bip_ratio(d as u64),
        Ratio::new(optimum as u64, size as u64),
    )
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrivateConflictHypotheses {
    pub c3c5_free: bool,
    pub max_degree_ok: bool,
    pub d_ok: bool,
    /// Every residual edge has conflict size above `17d²/12`.
    pub min_conflict_ok: bool,
}

impl PrivateConflictHypotheses {
    pub fn all(&self) -> bool {
        self.c3c5_free && self.max_degree_ok && self.d_ok && self.min_conflict_ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrivateConflictCheck {
    pub hypotheses: PrivateConflictHypotheses,
    /// One check per edge of the local-search output; empty when a hypothesis fails.
    pub checks: Vec<BoundCheck>,
}

impl PrivateConflictCheck {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(BoundCheck::passed)
    }
}

/// For a residual graph of the bipartite pipeline and its local-search output,
/// checks `pc(M', e) ≤ 5d²/6 + 1` for every `e ∈ M'`, i.e. `6·pc ≤ 5d² + 6`.
pub fn verify_private_conflict_cap(residual: &Graph, d: usize, local: &EdgeSet) -> PrivateConflictCheck {
    let floor = Threshold::approx_bip(d as u64);
    let hypotheses = PrivateConflictHypotheses {
        c3c5_free: residual.is_c3c5_free(),
        max_degree_ok: residual.max_degree() <= d,
        d_ok: d >= 3,
        min_conflict_ok: residual
            .edge_ids()
            .all(|e| !floor.admits(residual.conflict_size(e).expect("edge is present"))),
    };
    if !hypotheses.all() {
        return PrivateConflictCheck { hypotheses, checks: Vec::new() };
    }
    let cap = bounds::private_conflict_cap(d as u64);
    let checks = local
        .iter()
        .map(|e| {
            let pc = match residual.private_conflicts(local, e) {
                Ok(set) => set.len() as u64,
                Err(err) => return failed("approx-bip", "private_conflict_cap", err.to_string()),
            };
            BoundCheck::new(
                "approx-bip",
                "private_conflict_cap",
                BoundKind::Upper,
                inputs(&[("d", d as u64), ("edge", e.0 as u64)]),
                cap,
                Ratio::from_integer(pc),
            )
        })
        .collect();
    PrivateConflictCheck { hypotheses, checks }
}
