use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{check_enumerable, check_k, SolverConfig};
use crate::ballot::BallotProfile;
use crate::committee::{enumerate_committees, Committee};
use crate::error::Error;
use crate::histogram::DistanceHistogram;
use crate::metrics::ProfileIndex;
use crate::objectives::{compare, pnorm_score, ComparisonKey, Objective};
use crate::result::{ElectionResult, Method, ScoredCommittee, Warning};

/// Evaluates every `k`-member committee and keeps all that minimize `objective`.
pub fn elect_exact(
    profile: &BallotProfile,
    k: usize,
    objective: Objective,
    config: &SolverConfig,
) -> Result<ElectionResult, Error> {
    check_k(profile, k)?;
    objective.validate()?;
    check_enumerable(profile.candidates(), k, config)?;

    let n = profile.candidates();
    let index = ProfileIndex::new(profile);
    let scale = profile.max_attainable_distance(k);
    let mut best: Vec<(Committee, DistanceHistogram, ComparisonKey)> = Vec::new();
    let mut near_ties: Vec<(Committee, Committee)> = Vec::new();
    let mut rows = Vec::new();

    for committee in enumerate_committees(n, k)? {
        let mut seated = vec![false; n];
        committee.members().iter().for_each(|&i| seated[i] = true);
        let hist = index.histogram(&seated, k);
        let key = objective.key(&hist, scale)?;
        if config.keep_scores {
            rows.push(score(profile, objective, committee.clone(), hist.clone())?);
        }
        let verdict = match best.first() {
            None => Ordering::Less,
            Some((incumbent, _, best_key)) => {
                let cmp = compare(&key, best_key)?;
                if cmp.near_tie {
                    near_ties.push((incumbent.clone(), committee.clone()));
                }
                cmp.ordering
            }
        };
        match verdict {
            Ordering::Less => {
                best.clear();
                best.push((committee, hist, key));
            }
            Ordering::Equal => best.push((committee, hist, key)),
            Ordering::Greater => {}
        }
    }

    let winners = best
        .into_iter()
        .map(|(c, h, _)| score(profile, objective, c, h))
        .collect::<Result<Vec<_>, _>>()?;
    let warnings = relevant_near_ties(near_ties, &winners);
    Ok(ElectionResult {
        method: method_for(objective),
        k,
        winners,
        scores: config.keep_scores.then_some(rows),
        warnings,
    })
}

/// Approval-set maximization: the `p -> 0` limit of the p-norm rule, which
/// seats the committee exactly matching the most ballots.
pub fn elect_p_zero(
    profile: &BallotProfile,
    k: usize,
    config: &SolverConfig,
) -> Result<ElectionResult, Error> {
    elect_exact(profile, k, Objective::PZero, config)
}

fn method_for(objective: Objective) -> Method {
    match objective {
        Objective::PNorm(p) => Method::PNorm(p),
        Objective::PZero => Method::PZero,
        Objective::MaxCover => Method::MaxCover,
        Objective::MiniMax => Method::MiniMax,
    }
}

/// The objective's reported value for one committee.
pub(crate) fn objective_value(
    objective: Objective,
    hist: &DistanceHistogram,
    coverage: u64,
) -> Result<f64, Error> {
    Ok(match objective {
        Objective::PNorm(p) => pnorm_score(hist, p)?,
        Objective::PZero => (hist.total() - hist.count(0)) as f64,
        Objective::MaxCover => (hist.total() - coverage) as f64,
        Objective::MiniMax => f64::from(hist.max_distance().unwrap_or(0)),
    })
}

pub(crate) fn score(
    profile: &BallotProfile,
    objective: Objective,
    committee: Committee,
    histogram: DistanceHistogram,
) -> Result<ScoredCommittee, Error> {
    let coverage = profile.coverage(&committee);
    Ok(ScoredCommittee {
        value: objective_value(objective, &histogram, coverage)?,
        committee,
        histogram,
        coverage,
    })
}

fn relevant_near_ties(
    pairs: Vec<(Committee, Committee)>,
    winners: &[ScoredCommittee],
) -> Vec<Warning> {
    let is_winner = |c: &Committee| winners.iter().any(|w| &w.committee == c);
    let mut out: Vec<Warning> = Vec::new();
    for (first, second) in pairs {
        if !(is_winner(&first) || is_winner(&second)) {
            continue;
        }
        let w = Warning::NearTie { first, second };
        if !out.contains(&w) {
            out.push(w);
        }
    }
    out
}
