use alloc::vec;
use alloc::vec::Vec;

use super::{check_k, SolverConfig};
use crate::ballot::{BallotProfile, Mode};
use crate::committee::{binomial, enumerate_committees, Committee};
use crate::error::Error;
use crate::metrics::distance_histogram;
use crate::result::{ElectionResult, Method, ScoredCommittee};

/// Minisum without enumeration.
///
/// The sum of distances equals a constant minus `2 Σ_{i in C} s_i`, where
/// `s_i` is the approval count `a_i` (binary) or the net approval
/// `a_i - r_i` (ternary). So the optimal committees are exactly the `k`
/// highest-scoring candidates, with every way of filling the last seats from
/// a tie at the `k`-th score. The number of such committees is bounded by the
/// enumeration limit.
pub fn elect_minisum(
    profile: &BallotProfile,
    k: usize,
    config: &SolverConfig,
) -> Result<ElectionResult, Error> {
    check_k(profile, k)?;
    let n = profile.candidates();
    let scores: Vec<i64> = match profile.mode() {
        Mode::Binary => profile
            .approval_counts()
            .iter()
            .map(|&a| a as i64)
            .collect(),
        Mode::Ternary => profile.net_approvals(),
    };
    let mut ranked: Vec<usize> = (0..n).collect();
    ranked.sort_by(|&a, &b| scores[b].cmp(&scores[a]).then(a.cmp(&b)));
    let cutoff = scores[ranked[k - 1]];
    let sure: Vec<usize> = ranked
        .iter()
        .copied()
        .filter(|&i| scores[i] > cutoff)
        .collect();
    let tied: Vec<usize> = ranked
        .iter()
        .copied()
        .filter(|&i| scores[i] == cutoff)
        .collect();
    let open = k - sure.len();

    let count = binomial(tied.len(), open);
    match count {
        Some(c) if c <= config.enumeration_limit => {}
        _ => {
            return Err(Error::TooLarge {
                committees: count,
                limit: config.enumeration_limit,
            })
        }
    }

    let fills: Vec<Vec<usize>> = if open == 0 {
        vec![Vec::new()]
    } else {
        enumerate_committees(tied.len(), open)?
            .map(|pick| pick.members().iter().map(|&j| tied[j]).collect())
            .collect()
    };
    let mut winners = fills
        .into_iter()
        .map(|fill| {
            let mut members = sure.clone();
            members.extend(fill);
            let committee = Committee::new(members, n)?;
            let histogram = distance_histogram(profile, &committee)?;
            Ok(ScoredCommittee {
                value: histogram.distance_sum() as f64,
                coverage: profile.coverage(&committee),
                committee,
                histogram,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    winners.sort_by(|a, b| a.committee.cmp(&b.committee));

    Ok(ElectionResult {
        method: Method::Minisum,
        k,
        winners,
        scores: None,
        warnings: Vec::new(),
    })
}
