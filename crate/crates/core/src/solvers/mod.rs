//! Election procedures built on the objectives: exhaustive search under any
//! objective, the analytic minisum shortcut, exact and greedy maximum
//! coverage, and the multi-`p` sweep used for reporting.
//!
//! Every procedure returns all optimal committees in canonical order.

mod cover;
mod exact;
mod minisum;
mod sweep;

pub use cover::{elect_greedy_cover, elect_max_cover};
pub use exact::{elect_exact, elect_p_zero};
pub use minisum::elect_minisum;
pub use sweep::{sweep, ReportMode, SweepMatrix, SweepRow};

use crate::ballot::BallotProfile;
use crate::committee::binomial;
use crate::error::Error;

/// Default cap on the number of committees any exhaustive method may examine.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest `C(n, k)` (or number of tied minisum committees) to enumerate.
    pub enumeration_limit: u64,
    /// Keep a row for every committee in [`crate::ElectionResult::scores`].
    pub keep_scores: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            enumeration_limit: DEFAULT_ENUMERATION_LIMIT,
            keep_scores: false,
        }
    }
}

impl SolverConfig {
    pub fn with_scores(mut self) -> Self {
        self.keep_scores = true;
        self
    }
}

pub(crate) fn check_k(profile: &BallotProfile, k: usize) -> Result<(), Error> {
    let n = profile.candidates();
    if k < 1 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    Ok(())
}

pub(crate) fn check_enumerable(n: usize, k: usize, config: &SolverConfig) -> Result<(), Error> {
    let committees = binomial(n, k);
    match committees {
        Some(c) if c <= config.enumeration_limit => Ok(()),
        _ => Err(Error::TooLarge {
            committees,
            limit: config.enumeration_limit,
        }),
    }
}
