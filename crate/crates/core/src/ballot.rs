use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::committee::Committee;
use crate::error::Error;
use crate::roster::CandidateRoster;

/// A voter's stance on one candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Opinion {
    Reject,
    #[default]
    Neutral,
    Approve,
}

impl Opinion {
    pub fn value(self) -> i8 {
        match self {
            Opinion::Reject => -1,
            Opinion::Neutral => 0,
            Opinion::Approve => 1,
        }
    }

    pub fn from_value(v: i64) -> Result<Self, Error> {
        match v {
            -1 => Ok(Opinion::Reject),
            0 => Ok(Opinion::Neutral),
            1 => Ok(Opinion::Approve),
            other => Err(Error::InvalidOpinion(other)),
        }
    }
}

/// Approval (0/1) or ternary (-1/0/+1) voting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Binary,
    Ternary,
}

/// One distinct opinion vector together with the number of voters who cast it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ballot {
    opinions: Vec<Opinion>,
    weight: u64,
}

impl Ballot {
    pub fn new(opinions: Vec<Opinion>, weight: u64) -> Result<Self, Error> {
        if weight < 1 {
            return Err(Error::NegativeWeight);
        }
        Ok(Ballot { opinions, weight })
    }

    /// Builds a ballot from integer entries in {-1, 0, 1}.
    pub fn from_values(values: &[i8], weight: u64) -> Result<Self, Error> {
        let opinions = values
            .iter()
            .map(|&v| Opinion::from_value(v.into()))
            .collect::<Result<Vec<_>, _>>()?;
        Ballot::new(opinions, weight)
    }

    pub fn opinions(&self) -> &[Opinion] {
        &self.opinions
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn values(&self) -> Vec<i8> {
        self.opinions.iter().map(|o| o.value()).collect()
    }

    /// Number of non-neutral entries.
    pub fn opinion_count(&self) -> usize {
        self.opinions
            .iter()
            .filter(|&&o| o != Opinion::Neutral)
            .count()
    }

    pub fn has_rejections(&self) -> bool {
        self.opinions.contains(&Opinion::Reject)
    }

    pub fn approved(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices_of(Opinion::Approve)
    }

    pub fn rejected(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices_of(Opinion::Reject)
    }

    fn indices_of(&self, wanted: Opinion) -> impl Iterator<Item = usize> + '_ {
        self.opinions
            .iter()
            .enumerate()
            .filter(move |(_, &o)| o == wanted)
            .map(|(i, _)| i)
    }
}

/// Weighted, deduplicated ballots over a roster.
///
/// Ballots keep the order in which their opinion vectors first appeared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallotProfile {
    roster: CandidateRoster,
    ballots: Vec<Ballot>,
    voters: u64,
    mode: Mode,
    opinion_budget: Option<usize>,
}

impl BallotProfile {
    /// Validates the ballots and merges identical opinion vectors by summing
    /// their weights.
    pub fn build(
        roster: CandidateRoster,
        raw: impl IntoIterator<Item = Ballot>,
        mode: Mode,
        opinion_budget: Option<usize>,
    ) -> Result<Self, Error> {
        let n = roster.len();
        if let Some(b) = opinion_budget {
            if b < 1 || b > n {
                return Err(Error::InvalidBudget(b));
            }
        }
        let mut ballots: Vec<Ballot> = Vec::new();
        let mut seen: BTreeMap<Vec<Opinion>, usize> = BTreeMap::new();
        let mut voters: u64 = 0;
        for ballot in raw {
            if ballot.opinions.len() != n {
                return Err(Error::WrongLength {
                    expected: n,
                    found: ballot.opinions.len(),
                });
            }
            if mode == Mode::Binary {
                if let Some(candidate) = ballot.rejected().next() {
                    return Err(Error::ModeViolation { candidate });
                }
            }
            if let Some(expected) = opinion_budget {
                let found = ballot.opinion_count();
                if found != expected {
                    return Err(Error::BudgetViolation { expected, found });
                }
            }
            voters = voters
                .checked_add(ballot.weight)
                .ok_or(Error::WeightOverflow)?;
            match seen.get(&ballot.opinions) {
                Some(&at) => ballots[at].weight += ballot.weight,
                None => {
                    seen.insert(ballot.opinions.clone(), ballots.len());
                    ballots.push(ballot);
                }
            }
        }
        if ballots.is_empty() {
            return Err(Error::EmptyProfile);
        }
        Ok(BallotProfile {
            roster,
            ballots,
            voters,
            mode,
            opinion_budget,
        })
    }

    /// [`BallotProfile::build`] from `(entries, weight)` pairs with entries in {-1, 0, 1}.
    pub fn from_raw<V>(
        roster: CandidateRoster,
        raw: impl IntoIterator<Item = (V, u64)>,
        mode: Mode,
        opinion_budget: Option<usize>,
    ) -> Result<Self, Error>
    where
        V: AsRef<[i8]>,
    {
        let ballots = raw
            .into_iter()
            .map(|(v, w)| Ballot::from_values(v.as_ref(), w))
            .collect::<Result<Vec<_>, _>>()?;
        BallotProfile::build(roster, ballots, mode, opinion_budget)
    }

    pub fn roster(&self) -> &CandidateRoster {
        &self.roster
    }

    pub fn ballots(&self) -> &[Ballot] {
        &self.ballots
    }

    /// Total number of voters `m`.
    pub fn voters(&self) -> u64 {
        self.voters
    }

    pub fn candidates(&self) -> usize {
        self.roster.len()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn opinion_budget(&self) -> Option<usize> {
        self.opinion_budget
    }

    /// The same ballots with every weight multiplied by `factor`.
    pub fn scaled(&self, factor: u64) -> Result<Self, Error> {
        if factor < 1 {
            return Err(Error::NegativeWeight);
        }
        let mut out = self.clone();
        for b in &mut out.ballots {
            b.weight = b.weight.checked_mul(factor).ok_or(Error::WeightOverflow)?;
        }
        out.voters = self
            .voters
            .checked_mul(factor)
            .ok_or(Error::WeightOverflow)?;
        Ok(out)
    }

    /// Upper bound on the distance between any ballot and any `k`-member committee.
    ///
    /// Budgeted profiles use the tight bound (`2k` for approval ballots with a
    /// budget of `k`, `n + k` for ternary ballots with a budget of `k`);
    /// otherwise `n` for approval ballots and `2n` for ternary ones. It does
    /// not depend on the committee, so scaling distances by it preserves the
    /// order of power sums.
    pub fn max_attainable_distance(&self, k: usize) -> u32 {
        let n = self.candidates();
        let bound = match (self.mode, self.opinion_budget) {
            (Mode::Binary, Some(b)) => (b + k).min(n),
            (Mode::Binary, None) => n,
            (Mode::Ternary, Some(b)) => n + b,
            (Mode::Ternary, None) => 2 * n,
        };
        bound.max(1) as u32
    }

    /// Approvals per candidate (`a_i`).
    pub fn approval_counts(&self) -> Vec<u64> {
        let mut counts = alloc::vec![0u64; self.candidates()];
        for b in &self.ballots {
            b.approved().for_each(|i| counts[i] += b.weight);
        }
        counts
    }

    /// Rejections per candidate (`r_i`).
    pub fn rejection_counts(&self) -> Vec<u64> {
        let mut counts = alloc::vec![0u64; self.candidates()];
        for b in &self.ballots {
            b.rejected().for_each(|i| counts[i] += b.weight);
        }
        counts
    }

    /// Net approvals `a_i - r_i` per candidate.
    pub fn net_approvals(&self) -> Vec<i64> {
        self.approval_counts()
            .into_iter()
            .zip(self.rejection_counts())
            .map(|(a, r)| a as i64 - r as i64)
            .collect()
    }

    /// Number of voters covered by `committee`.
    ///
    /// A voter is covered when one of their approved candidates is seated or,
    /// in ternary mode, when one of their rejected candidates is left out.
    pub fn coverage(&self, committee: &Committee) -> u64 {
        self.ballots
            .iter()
            .filter(|b| is_covered(b, committee))
            .map(|b| b.weight)
            .sum()
    }
}

pub(crate) fn is_covered(ballot: &Ballot, committee: &Committee) -> bool {
    ballot.approved().any(|i| committee.contains(i))
        || ballot.rejected().any(|i| !committee.contains(i))
}
