use alloc::string::String;
use core::fmt;

/// Everything that can go wrong while building profiles or running an election.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    EmptyRoster,
    /// Candidate names must be non-empty, contain no whitespace or `:`,
    /// and must not start with `+` or `-`.
    InvalidName(String),
    DuplicateCandidate(String),
    WrongLength {
        expected: usize,
        found: usize,
    },
    /// A ballot weight below one.
    NegativeWeight,
    /// An opinion value outside {-1, 0, 1}.
    InvalidOpinion(i64),
    BudgetViolation {
        expected: usize,
        found: usize,
    },
    /// A rejection (-1) in a binary profile.
    ModeViolation {
        candidate: usize,
    },
    InvalidBudget(usize),
    EmptyProfile,
    WeightOverflow,
    /// A ternary ballot handed to a binary-only distance.
    ModeMismatch,
    InvalidCommittee,
    InvalidK {
        k: usize,
        n: usize,
    },
    /// The number of committees to examine exceeds the enumeration limit.
    TooLarge {
        committees: Option<u64>,
        limit: u64,
    },
    InvalidP,
    EmptyParameterList,
    VariantMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyRoster => write!(f, "the candidate roster is empty"),
            Error::InvalidName(name) => write!(f, "invalid candidate name {name:?}"),
            Error::DuplicateCandidate(name) => write!(f, "duplicate candidate {name:?}"),
            Error::WrongLength { expected, found } => {
                write!(f, "ballot has {found} entries, expected {expected}")
            }
            Error::NegativeWeight => write!(f, "ballot weights must be at least 1"),
            Error::InvalidOpinion(v) => write!(f, "opinion {v} is not one of -1, 0, 1"),
            Error::BudgetViolation { expected, found } => write!(
                f,
                "ballot expresses {found} opinions but the opinion budget is {expected}"
            ),
            Error::ModeViolation { candidate } => write!(
                f,
                "rejection of candidate #{candidate} in a binary profile"
            ),
            Error::InvalidBudget(b) => write!(f, "opinion budget {b} is out of range"),
            Error::EmptyProfile => write!(f, "the profile contains no ballots"),
            Error::WeightOverflow => write!(f, "total ballot weight overflows"),
            Error::ModeMismatch => write!(f, "ternary ballot passed to a binary distance"),
            Error::InvalidCommittee => write!(f, "committee members are out of range or repeated"),
            Error::InvalidK { k, n } => write!(f, "committee size {k} is not in 1..={n}"),
            Error::TooLarge { committees, limit } => match committees {
                Some(c) => write!(
                    f,
                    "{c} committees exceed the enumeration limit of {limit}; use the greedy method"
                ),
                None => write!(
                    f,
                    "the number of committees exceeds the enumeration limit of {limit}; use the greedy method"
                ),
            },
            Error::InvalidP => write!(f, "p must be a positive finite number"),
            Error::EmptyParameterList => write!(f, "at least one value of p is required"),
            Error::VariantMismatch => write!(f, "comparison keys of different kinds"),
        }
    }
}

impl core::error::Error for Error {}
