use alloc::vec::Vec;
use core::fmt;

use crate::committee::Committee;
use crate::histogram::DistanceHistogram;

/// The rule that produced an [`ElectionResult`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Method {
    /// Exact p-norm minimization for a finite `p`.
    PNorm(f64),
    /// Top-k by approvals (net approvals in ternary mode).
    Minisum,
    MiniMax,
    /// Exact maximum coverage (the large-`p` limit).
    MaxCover,
    /// Greedy maximum coverage.
    Greedy,
    /// The `p -> 0` limit: approval-set maximization.
    PZero,
}

impl Method {
    /// Short name used on the command line and in serialized output.
    pub fn name(&self) -> &'static str {
        match self {
            Method::PNorm(_) => "pnorm",
            Method::Minisum => "minisum",
            Method::MiniMax => "minimax",
            Method::MaxCover => "maxcover",
            Method::Greedy => "greedy",
            Method::PZero => "p0",
        }
    }

    pub fn p(&self) -> Option<f64> {
        match *self {
            Method::PNorm(p) => Some(p),
            Method::Minisum => Some(1.0),
            _ => None,
        }
    }

    /// What [`ScoredCommittee::value`] measures for this method.
    pub fn value_label(&self) -> &'static str {
        match self {
            Method::PNorm(_) => "p-norm",
            Method::Minisum => "distance sum",
            Method::MiniMax => "max distance",
            Method::MaxCover | Method::Greedy => "uncovered voters",
            Method::PZero => "voters away from committee",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::PNorm(p) => write!(f, "pnorm@{p}"),
            other => f.write_str(other.name()),
        }
    }
}

/// A committee with its distance histogram and the method's objective value.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoredCommittee {
    pub committee: Committee,
    pub histogram: DistanceHistogram,
    /// The objective value; see [`Method::value_label`]. Smaller is better.
    pub value: f64,
    /// Voters with an approved candidate seated or a rejected candidate left out.
    pub coverage: u64,
}

/// Things worth telling the user that do not change the outcome.
#[derive(Debug, Clone, PartialEq)]
pub enum Warning {
    /// Two committees with different histograms scored within floating-point
    /// tolerance and the verdict rests on the floating-point comparison (or
    /// is an exact tie between different histograms).
    NearTie { first: Committee, second: Committee },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::NearTie { first, second } => write!(
                f,
                "committees {first} and {second} have different distance histograms but scores within tolerance"
            ),
        }
    }
}

/// Outcome of one election.
#[derive(Debug, Clone, PartialEq)]
pub struct ElectionResult {
    pub method: Method,
    pub k: usize,
    /// Every optimal committee, in canonical order. Never empty.
    pub winners: Vec<ScoredCommittee>,
    /// Every committee examined, in canonical order, when requested.
    pub scores: Option<Vec<ScoredCommittee>>,
    pub warnings: Vec<Warning>,
}

impl ElectionResult {
    pub fn tie(&self) -> bool {
        self.winners.len() > 1
    }

    pub fn winner_committees(&self) -> impl Iterator<Item = &Committee> {
        self.winners.iter().map(|w| &w.committee)
    }

    /// The first winner in canonical order, for callers that need exactly one.
    pub fn first_winner(&self) -> &ScoredCommittee {
        &self.winners[0]
    }
}
