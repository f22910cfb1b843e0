//! Committee elections that minimize the p-norm of the vector of distances
//! between a committee and the ballots.
//!
//! A committee of `k` members is chosen from `n` candidates. Every candidate
//! committee is encoded as a vector (0/1 for approval ballots, ±1 for ternary
//! ballots) and compared with each ballot under the L1 metric. The distances
//! are summarized as a [`DistanceHistogram`], and the histogram is scored by
//! one member of a single family of objectives:
//!
//! * `p = 1` is minisum (seat the `k` most approved candidates),
//! * finite `p > 1` trades approvals against disapprovals,
//! * large finite `p` is maximum coverage,
//! * `p -> 0` maximizes the number of voters whose ballot equals the committee,
//! * `p = inf` is minimax.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the
//! command-line front end live in the `pnorm-vote` crate.
//!
//! ```
//! use pnorm_committee::{BallotProfile, CandidateRoster, Mode, Objective, SolverConfig};
//! use pnorm_committee::solvers::elect_exact;
//!
//! let roster = CandidateRoster::new(["A1", "A2", "B1", "B2"]).unwrap();
//! let pairs: [(&[usize], u64); 6] = [
//!     (&[0, 1], 500), (&[0, 2], 100), (&[0, 3], 10),
//!     (&[1, 2], 20), (&[1, 3], 20), (&[2, 3], 350),
//! ];
//! let raw = pairs.iter().map(|(approved, w)| {
//!     let mut v = [0i8; 4];
//!     approved.iter().for_each(|&i| v[i] = 1);
//!     (v.to_vec(), *w)
//! });
//! let profile = BallotProfile::from_raw(roster, raw, Mode::Binary, Some(2)).unwrap();
//! let result = elect_exact(&profile, 2, Objective::PNorm(2.0), &SolverConfig::default()).unwrap();
//! assert_eq!(profile.roster().committee_names(&result.winners[0].committee), ["A1", "B1"]);
//! ```
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod ballot;
pub mod committee;
pub mod error;
pub mod histogram;
pub mod metrics;
pub mod objectives;
pub mod result;
pub mod roster;
pub mod solvers;

pub use ballot::{Ballot, BallotProfile, Mode, Opinion};
pub use committee::{binomial, enumerate_committees, Committee, Committees};
pub use error::Error;
pub use histogram::DistanceHistogram;
pub use objectives::{compare, pnorm_score, power_sum, Comparison, ComparisonKey, Objective};
pub use result::{ElectionResult, Method, ScoredCommittee, Warning};
pub use roster::CandidateRoster;
pub use solvers::{ReportMode, SolverConfig, SweepMatrix, DEFAULT_ENUMERATION_LIMIT};
