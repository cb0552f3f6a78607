//! Bound verification, reports and corpus benchmarks.
//!
//! Every [`BoundCheck`] carries the raw inputs it was computed from, the
//! required value and the achieved value as exact rationals. Pass/fail is a
//! rational comparison.

mod bench;
mod checks;
mod report;
mod verify;

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::bounds::Rational;

pub use bench::{
    run_benchmark, AggregateRow, BenchConfig, BenchResult, InstanceError, InstanceSource, Manifest, ManifestEntry,
};
pub use report::{
    run_algorithm, run_exact, AlgorithmReport, ExactStats, MatchedEdge, RunOutcome, RunRequest, TraceReport,
};
pub use verify::{
    verify_instance, verify_private_conflict_cap, Algorithm, AlgorithmRun, BoundReport, ExactSummary,
    PrivateConflictCheck, PrivateConflictHypotheses, RatioEntry, VerifyConfig,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// achieved ≥ required
    Lower,
    /// achieved > required
    StrictLower,
    /// achieved ≤ required
    Upper,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub alg: String,
    pub name: String,
    pub kind: BoundKind,
    pub inputs: BTreeMap<String, u64>,
    #[serde(serialize_with = "ser_rational")]
    pub required: Option<Rational>,
    #[serde(serialize_with = "ser_rational")]
    pub achieved: Option<Rational>,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

fn ser_rational<S: Serializer>(x: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => s.collect_str(x),
        None => s.serialize_none(),
    }
}

pub(crate) fn inputs(pairs: &[(&str, u64)]) -> BTreeMap<String, u64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

impl BoundCheck {
    pub fn new(
        alg: &str,
        name: &str,
        kind: BoundKind,
        inputs: BTreeMap<String, u64>,
        required: Rational,
        achieved: Rational,
    ) -> BoundCheck {
        let ok = match kind {
            BoundKind::Lower => achieved >= required,
            BoundKind::StrictLower => achieved > required,
            BoundKind::Upper => achieved <= required,
        };
        BoundCheck {
            alg: alg.to_string(),
            name: name.to_string(),
            kind,
            inputs,
            required: Some(required),
            achieved: Some(achieved),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            reason: None,
        }
    }

    pub fn skipped(alg: &str, name: &str, kind: BoundKind, reason: impl Into<String>) -> BoundCheck {
        BoundCheck {
            alg: alg.to_string(),
            name: name.to_string(),
            kind,
            inputs: BTreeMap::new(),
            required: None,
            achieved: None,
            status: CheckStatus::Skipped,
            reason: Some(reason.into()),
        }
    }

    /// A check that holds because there is nothing to check.
    pub fn vacuous(alg: &str, name: &str, kind: BoundKind, reason: impl Into<String>) -> BoundCheck {
        BoundCheck { status: CheckStatus::Pass, ..BoundCheck::skipped(alg, name, kind, reason) }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}
