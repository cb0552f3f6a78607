//! Acceptance suite. Runs every criterion, prints one line each, and exits
//! non-zero if any criterion fails. Built with `harness = false` so the
//! lines always appear in `cargo test` output.

mod common;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use imatch::bounds;
use imatch::exact::{exact_induced_matching, DEFAULT_NODE_BUDGET};
use imatch::generators::{gen_bipartite_regular, gen_k_degenerate};
use imatch::greedy::{approx_bip, degenerate_greedy, find_cheap_edge, greedy_f, greedy_strong_coloring, Threshold};
use imatch::{EdgeId, Graph};
use num_rational::Ratio;
use rand::Rng;

struct Outcome {
    ok: bool,
    detail: String,
    /// Deterministic transcript of every trial, compared across repeated runs.
    log: String,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome { ok: true, detail: String::new(), log: String::new() }
    }

    fn require(&mut self, cond: bool, what: impl FnOnce() -> String) {
        if !cond && self.ok {
            self.ok = false;
            self.detail = what();
        }
        self.ok &= cond;
    }
}

fn oracle_fixtures() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let names = (2..=8)
        .map(|n| format!("path({n})"))
        .chain((3..=12).map(|n| format!("cycle({n})")))
        .chain((1..=6).map(|d| format!("star({d})")))
        .chain(["complete(4)", "complete_bipartite(3,3)", "complete_bipartite(2,4)", "hypercube(3)"].map(String::from));
    for name in names {
        out.push((name.clone(), named(&name)));
    }
    let mut r = rng(1);
    for i in 0..12 {
        let n = r.gen_range(4..=9);
        out.push((format!("random-{i}"), random_small(n, 12, &mut r)));
    }
    out
}

fn oracle_equivalence() -> Outcome {
    let mut o = Outcome::new();
    let fixtures = oracle_fixtures();
    o.require(fixtures.len() >= 30, || format!("only {} fixtures", fixtures.len()));
    for (name, g) in &fixtures {
        o.require(g.m() <= 12, || format!("{name} has m = {}", g.m()));
        let res = exact_induced_matching(g, DEFAULT_NODE_BUDGET);
        let brute = brute_force_optimum(g);
        o.require(!res.budget_exhausted && res.optimum == brute, || {
            format!("{name}: oracle {} vs enumeration {brute}", res.optimum)
        });
        o.require(induced_by_definition(g, &res.witness.to_vec()), || format!("{name}: witness not induced"));
    }
    if o.ok {
        o.detail = format!("{} fixtures agree", fixtures.len());
    }
    o
}

fn check_invariance(o: &mut Outcome, trial: usize, g: &Graph, picks: &[EdgeId]) {
    let mut cur = g.clone();
    let mut chosen = Vec::new();
    for &e in picks {
        if !cur.is_present(e) {
            continue;
        }
        chosen.push(e);
        cur = cur.remove_conflicts(e).unwrap();
        let alive: BTreeSet<EdgeId> = cur.edge_ids().collect();
        for x in cur.edge_ids() {
            let here: BTreeSet<EdgeId> = cur.conflict_set(x).unwrap().iter().collect();
            let there: BTreeSet<EdgeId> = conflict_set_by_line_graph(g, x).intersection(&alive).copied().collect();
            o.require(here == there, || format!("trial {trial}: conflict set of {x} changed"));
        }
    }
    o.require(induced_by_definition(g, &chosen), || format!("trial {trial}: chosen edges not induced"));
    let _ = writeln!(o.log, "{trial} {} {} {:?}", g.n(), g.m(), chosen.iter().map(|e| e.0).collect::<Vec<_>>());
}

fn conflict_invariance() -> Outcome {
    let mut o = Outcome::new();
    let mut r = rng(2);
    for trial in 0..200 {
        let n = r.gen_range(5..=14);
        let d = r.gen_range(2..=5);
        let g = random_bounded_degree(n, d, 3 * n, &mut r);
        let picks: Vec<EdgeId> = if trial % 2 == 0 {
            // arbitrary removal order
            let mut ids: Vec<EdgeId> = g.edge_ids().collect();
            for i in (1..ids.len()).rev() {
                ids.swap(i, r.gen_range(0..=i));
            }
            ids
        } else {
            let f = Threshold::integer(r.gen_range(1..=30));
            greedy_f(&g, f).trace.steps.iter().map(|s| s.edge).collect()
        };
        check_invariance(&mut o, trial, &g, &picks);
    }
    if o.ok {
        o.detail = "200 trials".into();
    }
    o
}

fn trivial_greedy() -> Outcome {
    let mut o = Outcome::new();
    let mut r = rng(3);
    for trial in 0..100 {
        let d = 3 + trial % 3;
        let n = r.gen_range(8..=40);
        let g = random_bounded_degree(n, d, 4 * n, &mut r);
        let f = bounds::max_conflict_size(d as u64);
        let out = greedy_f(&g, Threshold::integer(f));
        let need = ceil_div(g.m() as u64, f);
        o.require(out.residual().m() == 0, || format!("trial {trial}: residual has {} edges", out.residual().m()));
        o.require(out.matching.len() as u64 >= need, || {
            format!("trial {trial}: |M| = {} < {need}", out.matching.len())
        });
        o.require(induced_by_definition(&g, &out.matching.to_vec()), || format!("trial {trial}: not induced"));
        let _ = writeln!(o.log, "{trial} d={d} m={} size={} need={need}", g.m(), out.matching.len());
    }
    if o.ok {
        o.detail = "100 trials, d in {3,4,5}".into();
    }
    o
}

fn degenerate_suite() -> Outcome {
    let mut o = Outcome::new();
    let mut r = rng(4);
    for trial in 0..100 {
        let k = 1 + trial % 3;
        let d = r.gen_range(k + 1..=6);
        let n = r.gen_range(6..=60);
        let g = gen_k_degenerate(n, k, d, trial as u64).unwrap();
        let kg = g.degeneracy().k;
        o.require(kg <= k && g.max_degree() <= d, || format!("trial {trial}: generator broke its caps"));
        let out = degenerate_greedy(&g, kg, d).unwrap();
        let f = bounds::cheap_edge_cap(kg as u64, d as u64);
        let need = ceil_div(g.m() as u64, f);
        o.require(out.greedy.residual().m() == 0, || format!("trial {trial}: residual nonempty"));
        o.require(out.matching.len() as u64 >= need, || {
            format!("trial {trial}: |M| = {} < {need}", out.matching.len())
        });
        o.require(induced_by_definition(&g, &out.matching.to_vec()), || format!("trial {trial}: not induced"));
        let e = find_cheap_edge(&g, kg, d).unwrap();
        let c = conflict_set_by_line_graph(&g, e).len() as u64;
        o.require(c <= f, || format!("trial {trial}: cheap edge has c = {c} > {f}"));
        let _ = writeln!(
            o.log,
            "{trial} k={kg} d={d} m={} size={} need={need} cheap={} c={c}",
            g.m(),
            out.matching.len(),
            e.0
        );
    }
    if o.ok {
        o.detail = "100 trials, k in {1,2,3}, k < d <= 6".into();
    }
    o
}

/// Residual graphs and local-search outputs from the bipartite suite, for the private-conflict check.
type Harvest = Vec<(Graph, Vec<EdgeId>)>;

fn bipartite_suite() -> (Outcome, Harvest) {
    let mut o = Outcome::new();
    let mut harvest = Vec::new();
    let d = 3u64;
    let cap = bounds::approx_bip_ratio(d);
    let (mut oracle_runs, mut worst) = (0, Ratio::from_integer(0));
    for trial in 0..100u64 {
        let n_side = 4 + (trial as usize % 13);
        let g = gen_bipartite_regular(n_side, 3, trial).unwrap();
        let out = approx_bip(&g, 3).unwrap();
        let size = out.matching.len() as u64;
        let need = ceil_div(12 * g.m() as u64, 17 * d * d);
        o.require(induced_by_definition(&g, &out.matching.to_vec()), || format!("trial {trial}: not induced"));
        o.require(size >= need, || format!("trial {trial}: |M| = {size} < {need}"));
        let mut line = format!("{trial} n_side={n_side} m={} size={size} need={need}", g.m());
        if g.m() <= 40 {
            let res = exact_induced_matching(&g, DEFAULT_NODE_BUDGET);
            o.require(!res.budget_exhausted, || format!("trial {trial}: oracle budget exhausted"));
            let ratio = Ratio::new(res.optimum as u64, size.max(1));
            o.require(size > 0 && ratio <= cap, || format!("trial {trial}: ratio {ratio} > {cap}"));
            worst = worst.max(ratio);
            oracle_runs += 1;
            let _ = write!(line, " opt={} ratio={ratio}", res.optimum);
        }
        let _ = writeln!(o.log, "{line}");
        harvest.push((out.residual().clone(), out.local.to_vec()));
    }
    if o.ok {
        o.detail = format!(
            "100 instances, {oracle_runs} with oracle, worst ratio {} <= {}",
            bounds::decimal(worst),
            bounds::decimal(cap)
        );
    }
    (o, harvest)
}

/// At d = 3 a residual edge needs c = 13, the maximum, so residuals are
/// nonempty only on components without 4-cycles, which the 100 corpus
/// instances rarely contain. Scanning further seeds of the same family finds
/// such components; Heawood is one by construction.
fn girth_six_residuals() -> Harvest {
    let mut harvest = Vec::new();
    let heawood = named("heawood");
    let out = approx_bip(&heawood, 3).unwrap();
    harvest.push((out.residual().clone(), out.local.to_vec()));
    for n_side in [10, 12, 14, 16] {
        let mut found = 0;
        for seed in 0..3000 {
            let g = gen_bipartite_regular(n_side, 3, seed).unwrap();
            let out = approx_bip(&g, 3).unwrap();
            if out.residual().m() > 0 {
                harvest.push((out.residual().clone(), out.local.to_vec()));
                found += 1;
                if found == 3 {
                    break;
                }
            }
        }
    }
    harvest
}

fn private_conflict_suite(harvest: &Harvest) -> Outcome {
    let corpus = check_private_conflicts(harvest);
    let extra = check_private_conflicts(&girth_six_residuals());
    let mut o = Outcome::new();
    o.require(corpus.ok, || format!("corpus: {}", corpus.detail));
    o.require(extra.ok, || format!("girth-6 supplement: {}", extra.detail));
    o.log = corpus.log + &extra.log;
    if o.ok {
        o.detail = format!("corpus: {}; girth-6 supplement: {}", corpus.detail, extra.detail);
    }
    o
}

fn check_private_conflicts(harvest: &Harvest) -> Outcome {
    let mut o = Outcome::new();
    let d = 3u64;
    let floor = Threshold::approx_bip(d);
    let (mut residuals, mut edges, mut worst) = (0, 0, 0u64);
    for (i, (residual, local)) in harvest.iter().enumerate() {
        let conflict: Vec<(EdgeId, BTreeSet<EdgeId>)> =
            residual.edge_ids().map(|e| (e, conflict_set_by_line_graph(residual, e))).collect();
        if conflict.is_empty() || !conflict.iter().all(|(_, c)| !floor.admits(c.len())) {
            let _ = writeln!(o.log, "{i} skipped m={}", residual.m());
            continue;
        }
        residuals += 1;
        let lookup = |e: EdgeId| &conflict.iter().find(|(x, _)| *x == e).unwrap().1;
        let matching = of(residual, local);
        for &e in local {
            let others: BTreeSet<EdgeId> =
                local.iter().filter(|&&f| f != e).flat_map(|&f| lookup(f).iter().copied()).collect();
            let pc = lookup(e).difference(&others).count() as u64;
            let lib = residual.private_conflicts(&matching, e).unwrap().len() as u64;
            o.require(pc == lib, || format!("residual {i}: library pc {lib} vs oracle {pc}"));
            o.require(6 * pc <= 5 * d * d + 6, || format!("residual {i}: pc = {pc} exceeds 5d²/6 + 1"));
            worst = worst.max(pc);
            edges += 1;
        }
        let _ = writeln!(o.log, "{i} m={} local={} worst={worst}", residual.m(), local.len());
    }
    if o.ok {
        o.detail = format!("{residuals} nonempty residuals, {edges} edges, max pc {worst} <= 8");
    }
    o
}

fn coloring_suite() -> Outcome {
    let mut o = Outcome::new();
    let mut r = rng(7);
    for trial in 0..100 {
        let d = 3 + trial % 3;
        let n = r.gen_range(6..=40);
        let g = random_bounded_degree(n, d, 4 * n, &mut r);
        let col = greedy_strong_coloring(&g);
        let cap = bounds::max_conflict_size(d as u64) as usize;
        o.require(col.num_colors <= cap, || format!("trial {trial}: {} colors > {cap}", col.num_colors));
        let classes = col.classes();
        let mut seen = BTreeSet::new();
        let mut total = 0;
        for class in &classes {
            total += class.len();
            seen.extend(class.iter());
            o.require(induced_by_definition(&g, &class.to_vec()), || format!("trial {trial}: class not induced"));
        }
        o.require(total == g.m() && seen == g.edge_ids().collect(), || {
            format!("trial {trial}: classes do not partition E")
        });
        let _ = writeln!(o.log, "{trial} d={d} m={} colors={}", g.m(), col.num_colors);
    }
    if o.ok {
        o.detail = "100 graphs, d in {3,4,5}".into();
    }
    o
}

fn known_values() -> Outcome {
    let mut o = Outcome::new();
    let cases = [("cycle(5)", 1), ("path(4)", 1), ("hypercube(3)", 2), ("complete_bipartite(3,3)", 1), ("petersen", 3)];
    for (name, expected) in cases {
        let g = named(name);
        let brute = brute_force_optimum(&g);
        let exact = exact_induced_matching(&g, DEFAULT_NODE_BUDGET).optimum;
        o.require(brute == expected && exact == expected, || {
            format!("{name}: enumeration {brute}, oracle {exact}, expected {expected}")
        });
    }
    if o.ok {
        o.detail = "C5=1 P4=1 Q3=2 K33=1 Petersen=3".into();
    }
    o
}

fn suites_two_to_seven() -> Vec<(usize, &'static str, Outcome, Duration)> {
    let timed = |f: &dyn Fn() -> Outcome| {
        let start = Instant::now();
        let out = f();
        (out, start.elapsed())
    };
    let (c2, t2) = timed(&conflict_invariance);
    let (c3, t3) = timed(&trivial_greedy);
    let (c4, t4) = timed(&degenerate_suite);
    let start = Instant::now();
    let (c5, harvest) = bipartite_suite();
    let t5 = start.elapsed();
    let (c6, t6) = timed(&|| private_conflict_suite(&harvest));
    let (c7, t7) = timed(&coloring_suite);
    vec![
        (2, "conflict invariance under greedy removal", c2, t2),
        (3, "trivial greedy empties the graph with m/f size", c3, t3),
        (4, "degenerate greedy size and cheap edge", c4, t4),
        (5, "bipartite pipeline size and ratio", c5, t5),
        (6, "private conflict cap on residuals", c6, t6),
        (7, "strong coloring", c7, t7),
    ]
}

fn main() -> ExitCode {
    let limits = [10, 30, 60, 60, 300, 60, 30, 5];
    let mut results: Vec<(usize, String, bool, String, Duration)> = Vec::new();

    let start = Instant::now();
    let c1 = oracle_equivalence();
    results.push((1, "oracle equals enumeration".into(), c1.ok, c1.detail, start.elapsed()));

    let first = suites_two_to_seven();
    let mut logs = Vec::new();
    for (id, name, out, took) in first {
        logs.push(out.log.clone());
        results.push((id, name.into(), out.ok, out.detail, took));
    }

    let start = Instant::now();
    let c8 = known_values();
    results.push((8, "known values".into(), c8.ok, c8.detail, start.elapsed()));

    let start = Instant::now();
    let second: Vec<String> = suites_two_to_seven().into_iter().map(|(_, _, out, _)| out.log).collect();
    let identical = logs == second;
    let bytes: usize = logs.iter().map(String::len).sum();
    let detail = if identical {
        format!("suites 2-7 transcripts identical ({bytes} bytes)")
    } else {
        "transcripts differ".into()
    };
    results.push((9, "determinism".into(), identical, detail, start.elapsed()));

    let mut all = true;
    for (id, name, ok, detail, took) in &results {
        let limit = limits.get(id - 1).map(|&s| Duration::from_secs(s));
        let in_time = limit.is_none_or(|l| *took <= l);
        let pass = *ok && in_time;
        all &= pass;
        let timing = match limit {
            Some(l) if !in_time => format!("{:.2}s over the {}s limit", took.as_secs_f64(), l.as_secs()),
            _ => format!("{:.2}s", took.as_secs_f64()),
        };
        println!("criterion {id} [{}] {name}: {detail} ({timing})", if pass { "PASS" } else { "FAIL" });
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
