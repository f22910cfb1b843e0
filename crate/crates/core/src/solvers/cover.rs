use alloc::vec;
use alloc::vec::Vec;

use super::exact::score;
use super::{check_k, elect_exact, SolverConfig};
use crate::ballot::{BallotProfile, Mode};
use crate::committee::Committee;
use crate::error::Error;
use crate::metrics::distance_histogram;
use crate::objectives::Objective;
use crate::result::{ElectionResult, Method};

/// Exact maximum coverage: the committees with the fewest voters at the
/// largest distance, ties broken at the next distance down, and so on.
///
/// This is the order the p-norm induces for every sufficiently large finite
/// `p`. Each winner carries its covered-voter count.
pub fn elect_max_cover(
    profile: &BallotProfile,
    k: usize,
    config: &SolverConfig,
) -> Result<ElectionResult, Error> {
    elect_exact(profile, k, Objective::MaxCover, config)
}

/// Greedy maximum coverage for instances too large to enumerate.
///
/// Each round seats the candidate with the largest marginal coverage,
/// evaluating coverage as if the seats filled so far were the whole
/// committee. Ties go to the candidate with more approvals (net approvals in
/// ternary mode), then to the lower index.
///
/// For approval ballots coverage is monotone and submodular, so the result
/// covers at least `1 - 1/e` of the optimum. In ternary mode seating a
/// candidate can uncover voters who rejected them, so gains may be negative
/// and the guarantee does not carry over.
pub fn elect_greedy_cover(profile: &BallotProfile, k: usize) -> Result<ElectionResult, Error> {
    check_k(profile, k)?;
    let n = profile.candidates();
    let ballots = profile.ballots();
    let tie_score: Vec<i64> = match profile.mode() {
        Mode::Binary => profile
            .approval_counts()
            .iter()
            .map(|&a| a as i64)
            .collect(),
        Mode::Ternary => profile.net_approvals(),
    };

    // Ballots that mention each candidate; only those can change coverage.
    let mut mentions: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (bi, b) in ballots.iter().enumerate() {
        b.approved()
            .chain(b.rejected())
            .for_each(|c| mentions[c].push(bi));
    }
    let approved: Vec<Vec<usize>> = ballots.iter().map(|b| b.approved().collect()).collect();
    let rejected: Vec<Vec<usize>> = ballots.iter().map(|b| b.rejected().collect()).collect();
    let covered = |bi: usize, seated: &[bool]| {
        approved[bi].iter().any(|&c| seated[c]) || rejected[bi].iter().any(|&c| !seated[c])
    };

    let mut seated = vec![false; n];
    for _ in 0..k {
        let mut pick: Option<(i128, i64, usize)> = None;
        for c in 0..n {
            if seated[c] {
                continue;
            }
            let mut gain: i128 = 0;
            for &bi in &mentions[c] {
                let before = covered(bi, &seated);
                seated[c] = true;
                let after = covered(bi, &seated);
                seated[c] = false;
                gain += (i128::from(after) - i128::from(before)) * i128::from(ballots[bi].weight());
            }
            let better = match pick {
                None => true,
                Some((g, s, _)) => gain > g || (gain == g && tie_score[c] > s),
            };
            if better {
                pick = Some((gain, tie_score[c], c));
            }
        }
        let (_, _, c) = pick.expect("k <= n leaves an unseated candidate");
        seated[c] = true;
    }

    let members = (0..n).filter(|&c| seated[c]).collect();
    let committee = Committee::new(members, n)?;
    let histogram = distance_histogram(profile, &committee)?;
    let winner = score(profile, Objective::MaxCover, committee, histogram)?;
    Ok(ElectionResult {
        method: Method::Greedy,
        k,
        winners: vec![winner],
        scores: None,
        warnings: Vec::new(),
    })
}
