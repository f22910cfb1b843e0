//! File formats, result writers and the command-line front end for
//! [`pnorm_committee`].
//!
//! Three ballot formats are understood, see [`formats`]; results can be
//! written as an aligned text table, CSV or JSON, see [`report`].

pub mod cli;
pub mod formats;
pub mod report;

pub use formats::{parse_ballots, write_profile, BallotFormat, IoError};
pub use report::OutputFormat;
