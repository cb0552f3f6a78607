use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use imatch::exact::DEFAULT_NODE_BUDGET;
use imatch::generators::GenSpec;
use imatch::graph::read_edge_list;
use imatch::greedy::Threshold;
use imatch::harness::{
    run_algorithm, run_benchmark, run_exact, verify_instance, Algorithm, BenchConfig, InstanceSource, Manifest,
    ManifestEntry, RunRequest, VerifyConfig,
};
use imatch::{Error, Graph};

const EXIT_INPUT: u8 = 2;
const EXIT_GUARANTEE_VOID: u8 = 3;
const EXIT_BUDGET: u8 = 4;
/// A bound check failed; a bug in an algorithm or a bound.
const EXIT_CHECK_FAILED: u8 = 1;

#[derive(Parser)]
#[command(name = "imk", version, about = "Approximate and exact maximum induced matchings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance as an edge-list file.
    Gen(GenArgs),
    /// Run one approximation algorithm and print its JSON report.
    Run(RunArgs),
    /// Compute the exact optimum by branch and bound.
    Exact(ExactArgs),
    /// Run algorithms on one graph and check every applicable bound.
    Verify(VerifyArgs),
    /// Verify every instance of a manifest and write a results table.
    Bench(BenchArgs),
}

#[derive(Copy, Clone, ValueEnum)]
enum Family {
    Regular,
    BipartiteRegular,
    KDegenerate,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, conflicts_with = "named", required_unless_present = "named")]
    family: Option<Family>,
    /// Named fixture, e.g. petersen, heawood, cycle(5), hypercube(3).
    #[arg(long)]
    named: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    n_side: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; the edge list goes to stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Append the instance to this manifest, creating it if needed.
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Manifest entry id; defaults to the output file stem.
    #[arg(long, requires = "manifest")]
    id: Option<String>,
}

#[derive(Copy, Clone, ValueEnum)]
enum Alg {
    Greedy,
    LocalSearch,
    ApproxBip,
    Degenerate,
    Coloring,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    alg: Alg,
    /// Greedy threshold as `num/den` or an integer.
    #[arg(long, required_if_eq("alg", "greedy"))]
    f: Option<Threshold>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Include the per-step greedy trace.
    #[arg(long)]
    trace: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
    file: PathBuf,
}

#[derive(Args)]
struct ExactArgs {
    file: PathBuf,
    /// Maximum number of search nodes.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    file: PathBuf,
    /// Run every algorithm.
    #[arg(long, conflicts_with = "alg")]
    all: bool,
    /// Algorithm to run; repeatable.
    #[arg(long, value_parser = parse_algorithm)]
    alg: Vec<Algorithm>,
    /// Run the exact oracle only up to this many edges.
    #[arg(long, default_value_t = 40)]
    oracle_max_m: usize,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Degree parameter for the bounds; defaults to the maximum degree.
    #[arg(long)]
    d: Option<usize>,
    /// Record wall-clock times.
    #[arg(long)]
    timings: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    manifest: PathBuf,
    /// CSV output file; CSV goes to stdout when neither --csv nor --json is given.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Full JSON results file.
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long, default_value_t = 40)]
    oracle_max_m: usize,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    #[arg(long)]
    timings: bool,
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    Algorithm::ALL.into_iter().find(|a| a.name() == s).ok_or_else(|| {
        let names: Vec<&str> = Algorithm::ALL.iter().map(Algorithm::name).collect();
        format!("expected one of {}", names.join(", "))
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Run(a) => cmd_run(a),
        Command::Exact(a) => cmd_exact(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            let internal = matches!(err.downcast_ref::<Error>(), Some(Error::Internal(_)));
            ExitCode::from(if internal { 1 } else { EXIT_INPUT })
        }
    }
}

fn emit(output: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(out.flush()?)
        }
    }
}

fn with_newline(json: serde_json::Result<String>) -> String {
    json.expect("reports serialize") + "\n"
}

fn load(path: &Path) -> anyhow::Result<Graph> {
    read_edge_list(path).with_context(|| format!("reading {}", path.display()))
}

fn need(value: Option<usize>, flag: &str, family: &str) -> anyhow::Result<usize> {
    match value {
        Some(v) => Ok(v),
        None => bail!(Error::InvalidParameter(format!("--{flag} is required for {family}"))),
    }
}

fn cmd_gen(a: GenArgs) -> anyhow::Result<u8> {
    let spec = match (a.named, a.family) {
        (Some(name), _) => GenSpec::Named { name },
        (None, Some(Family::Regular)) => {
            GenSpec::Regular { n: need(a.n, "n", "regular")?, d: need(a.d, "d", "regular")?, seed: a.seed }
        }
        (None, Some(Family::BipartiteRegular)) => GenSpec::BipartiteRegular {
            n_side: need(a.n_side, "n-side", "bipartite-regular")?,
            d: need(a.d, "d", "bipartite-regular")?,
            seed: a.seed,
        },
        (None, Some(Family::KDegenerate)) => GenSpec::KDegenerate {
            n: need(a.n, "n", "k-degenerate")?,
            k: need(a.k, "k", "k-degenerate")?,
            d: need(a.d, "d", "k-degenerate")?,
            seed: a.seed,
        },
        (None, None) => unreachable!("clap requires --family or --named"),
    };
    let g = spec.generate()?;
    emit(a.output.as_deref(), &g.to_edge_list())?;
    eprintln!("{}: n = {}, m = {}, max degree = {}", spec.family(), g.n(), g.m(), g.max_degree());

    if let Some(path) = a.manifest {
        let mut manifest = if path.exists() { Manifest::load(&path)? } else { Manifest::default() };
        let id =
            a.id.or_else(|| a.output.as_ref().and_then(|o| o.file_stem()).map(|s| s.to_string_lossy().into_owned()));
        manifest.instances.push(ManifestEntry { id, source: InstanceSource::Generated { spec } });
        manifest.save(&path)?;
    }
    Ok(0)
}

fn cmd_run(a: RunArgs) -> anyhow::Result<u8> {
    let g = load(&a.file)?;
    let request = match a.alg {
        Alg::Greedy => RunRequest::Greedy { f: a.f.expect("clap requires --f for greedy") },
        Alg::LocalSearch => RunRequest::LocalSearch,
        Alg::ApproxBip => RunRequest::ApproxBip { d: a.d },
        Alg::Degenerate => RunRequest::Degenerate { k: a.k, d: a.d },
        Alg::Coloring => RunRequest::Coloring,
    };
    let out = run_algorithm(&g, &request, a.trace)?;
    emit(a.output.as_deref(), &with_newline(serde_json::to_string_pretty(&out.report)))?;

    let report = &out.report;
    let failed = report.bounds.iter().filter(|c| c.failed()).count();
    eprintln!("{}: size {} on n = {}, m = {}; {failed} failed checks", report.algorithm, report.size, g.n(), g.m());
    if out.guarantees_void {
        let broken: Vec<&str> =
            report.preconditions.iter().filter(|(_, &ok)| !ok).map(|(name, _)| name.as_str()).collect();
        eprintln!("warning: guarantee void, unmet preconditions: {}", broken.join(", "));
        return Ok(EXIT_GUARANTEE_VOID);
    }
    Ok(if failed > 0 { EXIT_CHECK_FAILED } else { 0 })
}

fn cmd_exact(a: ExactArgs) -> anyhow::Result<u8> {
    let g = load(&a.file)?;
    let report = run_exact(&g, a.budget);
    emit(a.output.as_deref(), &with_newline(serde_json::to_string_pretty(&report)))?;
    let stats = report.exact.as_ref().expect("exact report carries stats");
    if stats.budget_exhausted {
        eprintln!("budget of {} nodes exhausted; best found {}", a.budget, report.size);
        return Ok(EXIT_BUDGET);
    }
    eprintln!("optimum {} ({} nodes)", report.size, stats.nodes_explored);
    Ok(0)
}

fn cmd_verify(a: VerifyArgs) -> anyhow::Result<u8> {
    let g = load(&a.file)?;
    let algorithms = if a.all || a.alg.is_empty() { Algorithm::ALL.to_vec() } else { a.alg };
    let cfg = VerifyConfig {
        algorithms,
        oracle_max_m: a.oracle_max_m,
        node_budget: a.budget,
        degree: a.d,
        timings: a.timings,
        ..VerifyConfig::default()
    };
    let instance = a.file.file_stem().map_or_else(|| "graph".into(), |s| s.to_string_lossy().into_owned());
    let report = verify_instance(&instance, &g, &cfg);
    emit(a.output.as_deref(), &with_newline(serde_json::to_string_pretty(&report)))?;

    let (mut pass, mut skipped) = (0, 0);
    for c in &report.checks {
        if c.passed() {
            pass += 1;
        } else if !c.failed() {
            skipped += 1;
        }
    }
    let failures: Vec<_> = report.failures().collect();
    eprintln!("{instance}: {pass} passed, {} failed, {skipped} skipped", failures.len());
    for c in &failures {
        eprintln!("  FAIL {} {}", c.alg, c.name);
    }
    if !failures.is_empty() {
        return Ok(EXIT_CHECK_FAILED);
    }
    if report.exact.as_ref().is_some_and(|e| e.budget_exhausted) {
        eprintln!("exact oracle budget exhausted");
        return Ok(EXIT_BUDGET);
    }
    Ok(0)
}

fn cmd_bench(a: BenchArgs) -> anyhow::Result<u8> {
    let manifest = Manifest::load(&a.manifest).with_context(|| format!("reading {}", a.manifest.display()))?;
    let threads = match std::env::var("IMK_THREADS") {
        Ok(v) => Some(v.trim().parse::<usize>().with_context(|| format!("IMK_THREADS = {v:?}"))?),
        Err(_) => None,
    };
    let cfg = BenchConfig {
        verify: VerifyConfig {
            oracle_max_m: a.oracle_max_m,
            node_budget: a.budget,
            timings: a.timings,
            ..VerifyConfig::default()
        },
        threads,
        base_dir: a.manifest.parent().map(Path::to_path_buf),
    };
    let result = run_benchmark(&manifest, &cfg)?;

    if let Some(path) = &a.json {
        fs::write(path, result.to_json() + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    match &a.csv {
        Some(path) => {
            let file = fs::File::create(path).with_context(|| format!("writing {}", path.display()))?;
            result.write_csv(io::BufWriter::new(file))?;
        }
        None if a.json.is_none() => result.write_csv(io::stdout().lock())?,
        None => {}
    }

    for row in &result.aggregates {
        eprintln!(
            "{:<18} {:<15} n={:<4} min ratio {:<9} pass {} fail {} skip {}",
            row.family,
            row.alg,
            row.instances,
            row.min_ratio.as_deref().unwrap_or("-"),
            row.checks_pass,
            row.checks_fail,
            row.checks_skipped
        );
    }
    for e in &result.errors {
        eprintln!("error: {}: {}", e.instance, e.message);
    }
    let exhausted = result.reports.iter().any(|r| r.exact.as_ref().is_some_and(|e| e.budget_exhausted));
    Ok(if result.failed_checks() > 0 {
        EXIT_CHECK_FAILED
    } else if !result.errors.is_empty() {
        EXIT_INPUT
    } else if exhausted {
        EXIT_BUDGET
    } else {
        0
    })
}
