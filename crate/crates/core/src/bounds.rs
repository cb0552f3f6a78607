//! Closed-form guarantees as exact rationals.
//!
//! Everything here takes raw counts (`m`, `d`, `k`) and returns a
//! [`Rational`]; pass/fail decisions compare rationals, never floats.

use num_rational::Ratio;

pub type Rational = Ratio<u64>;

fn r(n: u64, d: u64) -> Rational {
    Ratio::new(n, d)
}

fn int(n: u64) -> Rational {
    Ratio::from_integer(n)
}

/// `2d² − 2d + 1`: the largest possible conflict set when the maximum degree is `d`,
/// and the number of colors the greedy strong coloring may need.
pub fn max_conflict_size(d: u64) -> u64 {
    if d == 0 {
        // an isolated edge still conflicts with itself
        1
    } else {
        2 * d * d - 2 * d + 1
    }
}

/// Size guaranteed by the unrestricted greedy: `m / (2d² − 2d + 1)`.
pub fn trivial_greedy_size(m: u64, d: u64) -> Rational {
    r(m, max_conflict_size(d))
}

/// Threshold used by the bipartite pipeline's greedy phase: `17d²/12`.
pub fn approx_bip_threshold(d: u64) -> Rational {
    r(17 * d * d, 12)
}

/// Size guaranteed by the bipartite pipeline: `12m / (17d²)`.
pub fn approx_bip_size(m: u64, d: u64) -> Rational {
    r(12 * m, (17 * d * d).max(1))
}

/// Size guaranteed for local search on a residual graph: `m' / (17d²/12 − d + 1)`.
pub fn residual_local_search_size(m_residual: u64, d: u64) -> Rational {
    // 17d²/12 − d + 1 = (17d² − 12d + 12) / 12, positive for every d
    r(12 * m_residual, 17 * d * d - 12 * d + 12)
}

/// Cap on private conflicts of a local-search edge in a residual graph: `5d²/6 + 1`.
pub fn private_conflict_cap(d: u64) -> Rational {
    r(5 * d * d + 6, 6)
}

/// Upper bound on any induced matching of a `d`-regular graph: `m / (2d − 1)`.
pub fn regular_upper(m: u64, d: u64) -> Rational {
    r(m, (2 * d).max(2) - 1)
}

/// Performance ratio of the bipartite pipeline: `17d/24 + 17d/(48d − 24)`.
pub fn approx_bip_ratio(d: u64) -> Rational {
    let d = d.max(1);
    r(17 * d, 24) + r(17 * d, 48 * d - 24)
}

/// Conflict-size cap for a cheap edge in a `k`-degenerate graph of maximum degree `d`:
/// `(3k − 1)d − k(k + 1) + 1`. Saturates at zero for degenerate inputs such as `k = 0`.
pub fn cheap_edge_cap(k: u64, d: u64) -> u64 {
    let value = (3 * k as i128 - 1) * d as i128 - (k * (k + 1)) as i128 + 1;
    value.max(0) as u64
}

/// Size guaranteed for `k`-degenerate graphs: `m / ((3k − 1)d − k(k + 1) + 1)`.
pub fn degenerate_size(m: u64, k: u64, d: u64) -> Rational {
    r(m, cheap_edge_cap(k, d).max(1))
}

/// Smallest integer not below `x`.
pub fn ceil(x: Rational) -> u64 {
    x.ceil().to_integer()
}

/// `x` rendered with six decimal places, rounded half up.
pub fn decimal(x: Rational) -> String {
    let scaled = x * int(1_000_000);
    let rounded = (scaled + r(1, 2)).floor().to_integer();
    format!("{}.{:06}", rounded / 1_000_000, rounded % 1_000_000)
}
