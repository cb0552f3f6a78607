use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::bounds;
use crate::error::{Error, Result};

/// Non-negative rational cut-off on conflict sizes.
///
/// `admits(c)` is decided as `c · den ≤ num` in 128-bit integers.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Threshold(Ratio<u64>);

impl Threshold {
    pub fn new(numerator: u64, denominator: u64) -> Result<Threshold> {
        if denominator == 0 {
            return Err(Error::InvalidParameter("threshold denominator must be at least 1".into()));
        }
        Ok(Threshold(Ratio::new(numerator, denominator)))
    }

    pub fn integer(value: u64) -> Threshold {
        Threshold(Ratio::from_integer(value))
    }

    pub fn from_ratio(value: Ratio<u64>) -> Threshold {
        Threshold(value)
    }

    /// `17d²/12`, the greedy phase of the bipartite pipeline.
    pub fn approx_bip(d: u64) -> Threshold {
        Threshold(bounds::approx_bip_threshold(d))
    }

    /// `2d² − 2d + 1`, large enough that greedy consumes every edge.
    pub fn trivial(d: u64) -> Threshold {
        Threshold::integer(bounds::max_conflict_size(d))
    }

    /// `(3k − 1)d − k(k + 1) + 1`.
    pub fn degenerate(k: u64, d: u64) -> Threshold {
        Threshold::integer(bounds::cheap_edge_cap(k, d))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn as_ratio(&self) -> Ratio<u64> {
        self.0
    }

    #[inline]
    pub fn admits(&self, conflict_size: usize) -> bool {
        conflict_size as u128 * self.denom() as u128 <= self.numer() as u128
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Threshold {
    type Err = Error;

    /// Accepts `"num/den"` or a plain integer.
    fn from_str(s: &str) -> Result<Threshold> {
        let bad = || Error::InvalidParameter(format!("threshold {s:?} is not \"num/den\" or an integer"));
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n = n.trim().parse().map_err(|_| bad())?;
                let d = d.trim().parse().map_err(|_| bad())?;
                Threshold::new(n, d)
            }
            None => Ok(Threshold::integer(s.parse().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for Threshold {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
