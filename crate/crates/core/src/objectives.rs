//! Scores and comparison keys for every member of the p-norm family.
//!
//! A committee is judged only through its [`DistanceHistogram`]. For finite
//! `p` the objective is `(Σ_d ν_d d^p)^(1/p)`; the limits `p -> 0` and
//! `p -> inf` and the minimax rule each get their own key so that no caller
//! has to pass an extreme `p`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigUint;

use crate::error::Error;
use crate::histogram::DistanceHistogram;

/// Relative gap under which two finite-p scores are re-examined exactly.
pub const RELATIVE_TOLERANCE: f64 = 1e-12;

/// Largest integer `p` for which near-ties are settled with exact integer power sums.
pub const EXACT_POWER_LIMIT: f64 = 64.0;

/// Which member of the family to optimize.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Objective {
    /// Minimize the p-norm for a finite `p > 0`.
    PNorm(f64),
    /// The `p -> 0` limit: maximize the number of voters at distance zero.
    PZero,
    /// The large-finite-`p` limit: lexicographically minimize the histogram
    /// from the largest distance downward (maximum coverage).
    MaxCover,
    /// Minimize the largest distance.
    MiniMax,
}

impl Objective {
    pub fn validate(&self) -> Result<(), Error> {
        match *self {
            Objective::PNorm(p) => check_p(p),
            _ => Ok(()),
        }
    }

    /// Comparison key for a committee with histogram `hist`.
    ///
    /// `scale` must be the same for every committee being compared; the
    /// profile's maximum attainable distance keeps `(d / scale)^p` in `[0, 1]`.
    pub fn key(&self, hist: &DistanceHistogram, scale: u32) -> Result<ComparisonKey, Error> {
        Ok(match *self {
            Objective::PNorm(p) => {
                check_p(p)?;
                ComparisonKey::FinitePNorm {
                    p,
                    scale,
                    scaled_sum: scaled_power_sum(hist, p, scale),
                    histogram: hist.clone(),
                }
            }
            Objective::PZero => ComparisonKey::PZeroLimit {
                away: hist.total() - hist.count(0),
            },
            Objective::MaxCover => ComparisonKey::MaxDistanceLex {
                histogram: hist.clone(),
            },
            Objective::MiniMax => ComparisonKey::MiniMax {
                max_distance: hist.max_distance().unwrap_or(0),
            },
        })
    }
}

/// Totally ordered summary of one committee under one objective. Smaller is better.
#[derive(Debug, Clone, PartialEq)]
pub enum ComparisonKey {
    /// `Σ ν_d (d / D)^p` for a committee-independent `D`, plus the histogram
    /// for tie resolution.
    FinitePNorm {
        p: f64,
        scale: u32,
        scaled_sum: f64,
        histogram: DistanceHistogram,
    },
    /// `m - ν_0`.
    PZeroLimit { away: u64 },
    /// Compared from the largest distance downward.
    MaxDistanceLex { histogram: DistanceHistogram },
    /// Largest distance with `ν_d > 0`.
    MiniMax { max_distance: u32 },
}

/// Result of [`compare`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Comparison {
    pub ordering: Ordering,
    /// Set when two different histograms scored within the floating-point
    /// tolerance and the verdict could not be confirmed exactly.
    pub near_tie: bool,
}

impl Comparison {
    fn exact(ordering: Ordering) -> Self {
        Comparison {
            ordering,
            near_tie: false,
        }
    }
}

/// Orders two keys of the same kind; `Less` means `a` is the better committee.
pub fn compare(a: &ComparisonKey, b: &ComparisonKey) -> Result<Comparison, Error> {
    use ComparisonKey::*;
    match (a, b) {
        (
            FinitePNorm {
                p,
                scale,
                scaled_sum: sa,
                histogram: ha,
            },
            FinitePNorm {
                p: pb,
                scale: scale_b,
                scaled_sum: sb,
                histogram: hb,
            },
        ) => {
            if p != pb || scale != scale_b {
                return Err(Error::VariantMismatch);
            }
            Ok(compare_finite(*p, *scale, (*sa, ha), (*sb, hb)))
        }
        (PZeroLimit { away: x }, PZeroLimit { away: y }) => Ok(Comparison::exact(x.cmp(y))),
        (MaxDistanceLex { histogram: ha }, MaxDistanceLex { histogram: hb }) => {
            Ok(Comparison::exact(compare_from_top(ha, hb)))
        }
        (MiniMax { max_distance: x }, MiniMax { max_distance: y }) => {
            Ok(Comparison::exact(x.cmp(y)))
        }
        _ => Err(Error::VariantMismatch),
    }
}

fn compare_finite(
    p: f64,
    scale: u32,
    (sa, ha): (f64, &DistanceHistogram),
    (sb, hb): (f64, &DistanceHistogram),
) -> Comparison {
    if !within_tolerance(sa, sb) {
        return Comparison::exact(sa.total_cmp(&sb));
    }
    if ha == hb {
        return Comparison::exact(Ordering::Equal);
    }
    if libm::trunc(p) == p && p <= EXACT_POWER_LIMIT {
        let ordering = exact_power_sum(ha, p as u32).cmp(&exact_power_sum(hb, p as u32));
        return Comparison {
            ordering,
            // Different histograms with identical exact sums are a genuine tie
            // that still deserves a mention.
            near_tie: ordering == Ordering::Equal,
        };
    }
    // Sum the integer difference of the histograms so that shared cells
    // cancel exactly instead of swamping the cells that differ.
    let scale = f64::from(scale.max(1));
    let distances = ha
        .iter()
        .chain(hb.iter())
        .map(|(d, _)| d)
        .filter(|&d| d > 0);
    let mut seen: Vec<u32> = distances.collect();
    seen.sort_unstable();
    seen.dedup();
    let (mut diff, mut magnitude) = (0.0f64, 0.0f64);
    for d in seen {
        let delta = ha.count(d) as f64 - hb.count(d) as f64;
        let term = delta * libm::exp(p * libm::log(f64::from(d) / scale));
        diff += term;
        magnitude += term.abs();
    }
    if diff.abs() > RELATIVE_TOLERANCE * magnitude {
        return Comparison::exact(diff.total_cmp(&0.0));
    }
    Comparison {
        ordering: sa.total_cmp(&sb),
        near_tie: true,
    }
}

fn within_tolerance(a: f64, b: f64) -> bool {
    (a - b).abs() <= RELATIVE_TOLERANCE * a.abs().max(b.abs())
}

/// Lexicographic comparison of `ν_d` from the largest distance down; fewer
/// voters far away is better.
fn compare_from_top(a: &DistanceHistogram, b: &DistanceHistogram) -> Ordering {
    let mut ia = a.iter().rev().peekable();
    let mut ib = b.iter().rev().peekable();
    loop {
        match (ia.peek().copied(), ib.peek().copied()) {
            (None, None) => return Ordering::Equal,
            // Remaining mass at a larger distance loses.
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some((da, ca)), Some((db, cb))) => {
                if da != db {
                    return da.cmp(&db);
                }
                if ca != cb {
                    return ca.cmp(&cb);
                }
                ia.next();
                ib.next();
            }
        }
    }
}

fn check_p(p: f64) -> Result<(), Error> {
    if p.is_finite() && p > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidP)
    }
}

/// `Σ ν_d (d / scale)^p`, order-equivalent to the power sum and free of overflow.
pub fn scaled_power_sum(hist: &DistanceHistogram, p: f64, scale: u32) -> f64 {
    let scale = f64::from(scale.max(1));
    hist.iter()
        .filter(|&(d, _)| d > 0)
        .map(|(d, c)| c as f64 * libm::exp(p * libm::log(f64::from(d) / scale)))
        .sum()
}

/// `ln Σ ν_d d^p`, summed in the log domain; `-inf` when every voter is at distance 0.
pub fn log_power_sum(hist: &DistanceHistogram, p: f64) -> Result<f64, Error> {
    check_p(p)?;
    let terms: Vec<f64> = hist
        .iter()
        .filter(|&(d, _)| d > 0)
        .map(|(d, c)| libm::log(c as f64) + p * libm::log(f64::from(d)))
        .collect();
    Ok(log_sum_exp(&terms))
}

fn log_sum_exp(terms: &[f64]) -> f64 {
    let peak = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if peak == f64::NEG_INFINITY {
        return peak;
    }
    peak + libm::log(terms.iter().map(|t| libm::exp(t - peak)).sum::<f64>())
}

/// `(Σ_d ν_d d^p)^(1/p)`.
pub fn pnorm_score(hist: &DistanceHistogram, p: f64) -> Result<f64, Error> {
    Ok(libm::exp(log_power_sum(hist, p)? / p))
}

/// `Σ_d ν_d d^p`, the p-norm raised to the power `p`. Bounded as `p -> 0`,
/// which makes it the natural report for small `p`. May overflow to `inf`
/// for large `p`; [`log_power_sum`] never does.
pub fn power_sum(hist: &DistanceHistogram, p: f64) -> Result<f64, Error> {
    Ok(libm::exp(log_power_sum(hist, p)?))
}

/// `Σ ν_d d^p` in exact integer arithmetic.
pub fn exact_power_sum(hist: &DistanceHistogram, p: u32) -> BigUint {
    hist.iter()
        .map(|(d, c)| BigUint::from(d).pow(p) * BigUint::from(c))
        .sum()
}
