//! Corpus benchmarks: a manifest of instances in, per-instance reports plus
//! per-family aggregates out.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::verify::{verify_instance, BoundReport, VerifyConfig};
use super::CheckStatus;
use crate::bounds::{self, Rational};
use crate::error::{Error, Result};
use crate::generators::GenSpec;
use crate::graph::{read_edge_list, Graph};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub instances: Vec<ManifestEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    #[serde(flatten)]
    pub source: InstanceSource,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InstanceSource {
    Generated { spec: GenSpec },
    File { file: PathBuf },
}

impl Manifest {
    pub fn load(path: impl AsRef<Path>) -> Result<Manifest> {
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let text = serde_json::to_string_pretty(self).expect("manifest serializes");
        std::fs::write(path, text + "\n")?;
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct BenchConfig {
    pub verify: VerifyConfig,
    /// Worker threads; `None` lets rayon decide.
    pub threads: Option<usize>,
    /// Relative instance files resolve against this directory.
    pub base_dir: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceError {
    pub instance: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AggregateRow {
    pub family: String,
    pub alg: String,
    pub instances: usize,
    /// Smallest and mean `optimum / size` over instances where the oracle finished.
    pub min_ratio: Option<String>,
    pub mean_ratio: Option<String>,
    pub checks_pass: usize,
    pub checks_fail: usize,
    pub checks_skipped: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BenchResult {
    pub reports: Vec<BoundReport>,
    pub errors: Vec<InstanceError>,
    pub aggregates: Vec<AggregateRow>,
}

fn load(entry: &ManifestEntry, base: Option<&Path>) -> Result<(Graph, String)> {
    match &entry.source {
        InstanceSource::Generated { spec } => Ok((spec.generate()?, spec.family().to_string())),
        InstanceSource::File { file } => {
            let path = match base {
                Some(base) if file.is_relative() => base.join(file),
                _ => file.clone(),
            };
            Ok((read_edge_list(path)?, "file".to_string()))
        }
    }
}

/// Verifies every manifest instance. Output order follows the manifest,
/// whatever order the workers finish in. Instances that fail to load are
/// listed in `errors` and the run continues.
pub fn run_benchmark(manifest: &Manifest, cfg: &BenchConfig) -> Result<BenchResult> {
    let work = || -> Vec<std::result::Result<BoundReport, InstanceError>> {
        manifest
            .instances
            .par_iter()
            .enumerate()
            .map(|(i, entry)| {
                let id = entry.id.clone().unwrap_or_else(|| format!("inst-{i:04}"));
                match load(entry, cfg.base_dir.as_deref()) {
                    Ok((g, family)) => {
                        let mut report = verify_instance(&id, &g, &cfg.verify);
                        report.family = Some(family);
                        Ok(report)
                    }
                    Err(e) => Err(InstanceError { instance: id, message: e.to_string() }),
                }
            })
            .collect()
    };
    let outcomes = match cfg.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?
            .install(work),
        None => work(),
    };

    let mut result = BenchResult::default();
    for outcome in outcomes {
        match outcome {
            Ok(r) => result.reports.push(r),
            Err(e) => result.errors.push(e),
        }
    }
    result.aggregates = aggregate(&result.reports, cfg.verify.timings);
    Ok(result)
}

fn aggregate(reports: &[BoundReport], timings: bool) -> Vec<AggregateRow> {
    #[derive(Default)]
    struct Acc {
        instances: usize,
        ratios: Vec<Rational>,
        pass: usize,
        fail: usize,
        skipped: usize,
        millis: u64,
    }
    let mut groups: BTreeMap<(String, String), Acc> = BTreeMap::new();
    for r in reports {
        let family = r.family.clone().unwrap_or_default();
        for run in &r.algorithms {
            let acc = groups.entry((family.clone(), run.alg.clone())).or_default();
            acc.instances += 1;
            acc.millis += run.millis.unwrap_or(0);
            if let Some(ratio) = r.ratios.iter().find(|x| x.alg == run.alg) {
                acc.ratios.push(ratio.exact_over_alg);
            }
            for c in r.checks.iter().filter(|c| c.alg == run.alg) {
                match c.status {
                    CheckStatus::Pass => acc.pass += 1,
                    CheckStatus::Fail => acc.fail += 1,
                    CheckStatus::Skipped => acc.skipped += 1,
                }
            }
        }
    }
    groups
        .into_iter()
        .map(|((family, alg), acc)| {
            let min = acc.ratios.iter().min().copied();
            let mean = (!acc.ratios.is_empty()).then(|| {
                acc.ratios.iter().fold(Ratio::from_integer(0), |s, &x| s + x)
                    / Ratio::from_integer(acc.ratios.len() as u64)
            });
            AggregateRow {
                family,
                alg,
                instances: acc.instances,
                min_ratio: min.map(bounds::decimal),
                mean_ratio: mean.map(bounds::decimal),
                checks_pass: acc.pass,
                checks_fail: acc.fail,
                checks_skipped: acc.skipped,
                millis: timings.then_some(acc.millis),
            }
        })
        .collect()
}

pub const CSV_HEADER: [&str; 13] = [
    "instance",
    "n",
    "m",
    "d_or_irregular",
    "k",
    "alg",
    "size",
    "exact",
    "bound_name",
    "required",
    "achieved",
    "pass",
    "millis",
];

impl BenchResult {
    /// One row per bound check, plus one `load_error` row per unreadable instance.
    pub fn write_csv(&self, out: impl Write) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(CSV_HEADER).map_err(io)?;
        let opt = |x: Option<String>| x.unwrap_or_default();
        for r in &self.reports {
            let d = r.regular_degree.map_or_else(|| "irregular".to_string(), |d| d.to_string());
            let exact = r.exact.as_ref().map(|e| e.optimum.to_string());
            for c in &r.checks {
                let run = r.algorithms.iter().find(|a| a.alg == c.alg);
                let (size, millis) = if c.alg == "exact" {
                    (exact.clone(), r.exact.as_ref().and_then(|e| e.millis))
                } else {
                    (run.map(|a| a.size.to_string()), run.and_then(|a| a.millis))
                };
                w.write_record([
                    r.instance.clone(),
                    r.n.to_string(),
                    r.m.to_string(),
                    d.clone(),
                    r.degeneracy.to_string(),
                    c.alg.clone(),
                    opt(size),
                    opt(exact.clone()),
                    c.name.clone(),
                    opt(c.required.map(|x| x.to_string())),
                    opt(c.achieved.map(|x| x.to_string())),
                    c.status.as_str().to_string(),
                    opt(millis.map(|x| x.to_string())),
                ])
                .map_err(io)?;
            }
        }
        for e in &self.errors {
            let mut row = vec![String::new(); CSV_HEADER.len()];
            row[0] = e.instance.clone();
            row[8] = "load_error".into();
            row[11] = "error".into();
            w.write_record(&row).map_err(io)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("bench result serializes")
    }

    pub fn failed_checks(&self) -> usize {
        self.reports.iter().map(|r| r.failures().count()).sum()
    }
}
