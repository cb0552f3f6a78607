//! Bound checks shared by instance verification and single-run reports.

use num_rational::Ratio;

use super::{inputs, BoundCheck, BoundKind};
use crate::bounds::{self, Rational};
use crate::graph::{EdgeId, EdgeSet, Graph};
use crate::greedy::{ApproxBip, DegenerateGreedy, Greedy, StrongColoring, Threshold};

fn int(x: usize) -> Rational {
    Ratio::from_integer(x as u64)
}

pub(crate) fn induced(g: &Graph, alg: &str, matching: &EdgeSet) -> BoundCheck {
    let ok = g.is_induced_matching(matching) as usize;
    BoundCheck::new(alg, "induced_matching", BoundKind::Lower, inputs(&[]), int(1), int(ok))
}

/// `|M| ≥ (m − m') / f`: each pick removes at most `f` edges.
pub(crate) fn greedy_fraction(g: &Graph, alg: &str, greedy: &Greedy, f: Threshold) -> BoundCheck {
    let removed = (g.m() - greedy.residual().m()) as u64;
    let required = if f.numer() == 0 { Ratio::from_integer(0) } else { Ratio::new(removed, 1) / f.as_ratio() };
    BoundCheck::new(
        alg,
        "greedy_fraction",
        BoundKind::Lower,
        inputs(&[("removed", removed), ("f_num", f.numer()), ("f_den", f.denom())]),
        required,
        int(greedy.matching.len()),
    )
}

/// Every residual edge has conflict size above `f`.
pub(crate) fn residual_floor(alg: &str, greedy: &Greedy, f: Threshold) -> BoundCheck {
    let residual = greedy.residual();
    let min = residual.edge_ids().map(|e| residual.conflict_size(e).expect("edge is present")).min();
    match min {
        None => BoundCheck::vacuous(alg, "residual_conflict_floor", BoundKind::StrictLower, "residual has no edges"),
        Some(c) => BoundCheck::new(
            alg,
            "residual_conflict_floor",
            BoundKind::StrictLower,
            inputs(&[("f_num", f.numer()), ("f_den", f.denom())]),
            f.as_ratio(),
            int(c),
        ),
    }
}

/// Greedy with `f = 2d² − 2d + 1` consumes every edge and keeps at least `m / f` of them.
pub(crate) fn trivial_greedy(g: &Graph, alg: &str, greedy: &Greedy, d: usize) -> Vec<BoundCheck> {
    let (m, d64) = (g.m() as u64, d as u64);
    if g.max_degree() > d {
        return vec![BoundCheck::skipped(alg, "trivial_greedy_size", BoundKind::Lower, "maximum degree exceeds d")];
    }
    vec![
        BoundCheck::new(
            alg,
            "trivial_greedy_empties",
            BoundKind::Upper,
            inputs(&[("d", d64)]),
            int(0),
            int(greedy.residual().m()),
        ),
        BoundCheck::new(
            alg,
            "trivial_greedy_size",
            BoundKind::Lower,
            inputs(&[("m", m), ("d", d64)]),
            bounds::trivial_greedy_size(m, d64),
            int(greedy.matching.len()),
        ),
    ]
}

pub(crate) fn regular_upper(g: &Graph, alg: &str, size: usize) -> BoundCheck {
    match g.regular_degree() {
        Some(d) if d > 0 => {
            let (m, d) = (g.m() as u64, d as u64);
            BoundCheck::new(
                alg,
                "regular_upper_bound",
                BoundKind::Upper,
                inputs(&[("m", m), ("d", d)]),
                bounds::regular_upper(m, d),
                int(size),
            )
        }
        _ => BoundCheck::skipped(alg, "regular_upper_bound", BoundKind::Upper, "graph is not regular with d ≥ 1"),
    }
}

pub(crate) fn approx_bip(g: &Graph, alg: &str, out: &ApproxBip) -> Vec<BoundCheck> {
    let (m, d) = (g.m() as u64, out.d as u64);
    let mut checks = vec![
        induced(g, alg, &out.matching),
        greedy_fraction(g, alg, &out.greedy, out.threshold),
        residual_floor(alg, &out.greedy, out.threshold),
    ];
    if out.flags.size_guarantee() {
        checks.push(BoundCheck::new(
            alg,
            "approx_bip_size",
            BoundKind::Lower,
            inputs(&[("m", m), ("d", d)]),
            bounds::approx_bip_size(m, d),
            int(out.matching.len()),
        ));
        let residual = out.residual();
        let mr = residual.m() as u64;
        checks.push(BoundCheck::new(
            alg,
            "residual_local_search_size",
            BoundKind::Lower,
            inputs(&[("m_residual", mr), ("d", d)]),
            bounds::residual_local_search_size(mr, d),
            int(out.local.len()),
        ));
        checks.push(private_conflict_summary(alg, residual, out.d, &out.local));
    } else {
        let reason = "needs a {C3,C5}-free graph of maximum degree at most d with d ≥ 3";
        for name in ["approx_bip_size", "residual_local_search_size"] {
            checks.push(BoundCheck::skipped(alg, name, BoundKind::Lower, reason));
        }
        checks.push(BoundCheck::skipped(alg, "private_conflict_cap", BoundKind::Upper, reason));
    }
    checks.push(regular_upper(g, alg, out.matching.len()));
    checks
}

/// Largest private conflict count over the local-search edges, against `5d²/6 + 1`.
pub(crate) fn private_conflict_summary(alg: &str, residual: &Graph, d: usize, local: &EdgeSet) -> BoundCheck {
    let outcome = super::verify_private_conflict_cap(residual, d, local);
    if !outcome.hypotheses.all() {
        return BoundCheck::skipped(alg, "private_conflict_cap", BoundKind::Upper, "residual hypotheses do not hold");
    }
    let worst = outcome.checks.iter().filter_map(|c| c.achieved).max();
    match worst {
        None => BoundCheck::vacuous(alg, "private_conflict_cap", BoundKind::Upper, "local search output is empty"),
        Some(worst) => BoundCheck::new(
            alg,
            "private_conflict_cap",
            BoundKind::Upper,
            inputs(&[("d", d as u64), ("edges", local.len() as u64)]),
            bounds::private_conflict_cap(d as u64),
            worst,
        ),
    }
}

pub(crate) fn degenerate(g: &Graph, alg: &str, out: &DegenerateGreedy, cheap: Option<EdgeId>) -> Vec<BoundCheck> {
    let (m, k, d) = (g.m() as u64, out.k as u64, out.d as u64);
    let mut checks = vec![
        induced(g, alg, &out.matching),
        BoundCheck::new(
            alg,
            "degenerate_residual_empty",
            BoundKind::Upper,
            inputs(&[]),
            int(0),
            int(out.greedy.residual().m()),
        ),
        BoundCheck::new(
            alg,
            "degenerate_size",
            BoundKind::Lower,
            inputs(&[("m", m), ("k", k), ("d", d)]),
            bounds::degenerate_size(m, k, d),
            int(out.matching.len()),
        ),
    ];
    match cheap {
        Some(e) => checks.push(BoundCheck::new(
            alg,
            "cheap_edge_cap",
            BoundKind::Upper,
            inputs(&[("k", k), ("d", d)]),
            Ratio::from_integer(bounds::cheap_edge_cap(k, d)),
            int(g.conflict_size(e).expect("cheap edge is present")),
        )),
        None => checks.push(BoundCheck::vacuous(alg, "cheap_edge_cap", BoundKind::Upper, "graph has no edges")),
    }
    checks
}

pub(crate) fn coloring(g: &Graph, alg: &str, col: &StrongColoring) -> Vec<BoundCheck> {
    let d = g.max_degree() as u64;
    let classes = col.classes();
    let mut union = g.new_edge_set();
    let mut total = 0;
    let mut all_induced = true;
    for class in &classes {
        total += class.len();
        union.union_with(class);
        all_induced &= g.is_induced_matching(class);
    }
    let partition = total == g.m() && union == g.edge_set();
    vec![
        BoundCheck::new(
            alg,
            "strong_coloring_colors",
            BoundKind::Upper,
            inputs(&[("d", d)]),
            Ratio::from_integer(bounds::max_conflict_size(d)),
            int(col.num_colors),
        ),
        BoundCheck::new(
            alg,
            "strong_coloring_classes",
            BoundKind::Lower,
            inputs(&[]),
            int(1),
            int((partition && all_induced) as usize),
        ),
    ]
}
