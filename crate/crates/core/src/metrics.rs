//! Distances between ballots and committees.
//!
//! Both metrics are the L1 distance `Σ |c_i - b_i|`; they differ only in how
//! the committee is encoded (0/1 against approval ballots, ±1 against
//! ternary ballots). All distances are exact integers.

use alloc::vec::Vec;

use crate::ballot::{Ballot, BallotProfile, Mode, Opinion};
use crate::committee::Committee;
use crate::error::Error;
use crate::histogram::DistanceHistogram;

fn check_length(ballot: &Ballot, committee: &Committee) -> Result<(), Error> {
    let (expected, found) = (committee.candidates(), ballot.opinions().len());
    if expected != found {
        return Err(Error::WrongLength { expected, found });
    }
    Ok(())
}

/// Hamming distance between an approval ballot and the committee's 0/1 vector.
pub fn hamming_distance(ballot: &Ballot, committee: &Committee) -> Result<u32, Error> {
    check_length(ballot, committee)?;
    if ballot.has_rejections() {
        return Err(Error::ModeMismatch);
    }
    Ok(ballot
        .opinions()
        .iter()
        .zip(committee.membership())
        .filter(|&(&o, seated)| (o == Opinion::Approve) != seated)
        .count() as u32)
}

/// L1 distance between a ternary ballot and the committee's ±1 vector.
pub fn ternary_distance(ballot: &Ballot, committee: &Committee) -> Result<u32, Error> {
    check_length(ballot, committee)?;
    Ok(ballot
        .opinions()
        .iter()
        .zip(committee.ternary_encoding())
        .map(|(o, c)| (c - o.value()).unsigned_abs() as u32)
        .sum())
}

/// Distance under the metric that belongs to `mode`.
pub fn distance(mode: Mode, ballot: &Ballot, committee: &Committee) -> Result<u32, Error> {
    match mode {
        Mode::Binary => hamming_distance(ballot, committee),
        Mode::Ternary => ternary_distance(ballot, committee),
    }
}

/// Weighted count of voters at each distance from `committee`.
pub fn distance_histogram(
    profile: &BallotProfile,
    committee: &Committee,
) -> Result<DistanceHistogram, Error> {
    let n = profile.candidates();
    if committee.candidates() != n {
        return Err(Error::WrongLength {
            expected: n,
            found: committee.candidates(),
        });
    }
    let index = ProfileIndex::new(profile);
    let mut seated = alloc::vec![false; n];
    committee.members().iter().for_each(|&i| seated[i] = true);
    Ok(index.histogram(&seated, committee.size()))
}

/// Sparse view of a profile used for evaluating many committees.
///
/// With `A` the approved set, `R` the rejected set and `C` the committee:
/// binary distance is `|A| + k - 2|A ∩ C|`; ternary distance is
/// `(n - |A| - |R|) + 2 (|A \ C| + |R ∩ C|)`.
#[derive(Debug, Clone)]
pub(crate) struct ProfileIndex {
    mode: Mode,
    n: usize,
    ballots: Vec<SparseBallot>,
}

#[derive(Debug, Clone)]
struct SparseBallot {
    approved: Vec<usize>,
    rejected: Vec<usize>,
    weight: u64,
}

impl ProfileIndex {
    pub(crate) fn new(profile: &BallotProfile) -> Self {
        let ballots = profile
            .ballots()
            .iter()
            .map(|b| SparseBallot {
                approved: b.approved().collect(),
                rejected: b.rejected().collect(),
                weight: b.weight(),
            })
            .collect();
        ProfileIndex {
            mode: profile.mode(),
            n: profile.candidates(),
            ballots,
        }
    }

    fn distance(&self, ballot: &SparseBallot, seated: &[bool], k: usize) -> u32 {
        let approved_in = ballot.approved.iter().filter(|&&i| seated[i]).count();
        match self.mode {
            Mode::Binary => (ballot.approved.len() + k - 2 * approved_in) as u32,
            Mode::Ternary => {
                let rejected_in = ballot.rejected.iter().filter(|&&i| seated[i]).count();
                let neutral = self.n - ballot.approved.len() - ballot.rejected.len();
                let approved_out = ballot.approved.len() - approved_in;
                (neutral + 2 * (approved_out + rejected_in)) as u32
            }
        }
    }

    /// Histogram for the committee whose membership flags are `seated`.
    pub(crate) fn histogram(&self, seated: &[bool], k: usize) -> DistanceHistogram {
        let mut h = DistanceHistogram::new();
        for b in &self.ballots {
            h.add(self.distance(b, seated, k), b.weight);
        }
        h
    }
}
