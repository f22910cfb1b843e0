#![allow(dead_code)]

use pnorm_committee::{BallotProfile, CandidateRoster, Committee, Mode};

pub const PAIRS: [[usize; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];

fn pair_profile(weights: [u64; 6]) -> BallotProfile {
    let roster = CandidateRoster::new(["A1", "A2", "B1", "B2"]).unwrap();
    let raw = PAIRS.iter().zip(weights).map(|(pair, w)| {
        let mut v = vec![0i8; 4];
        pair.iter().for_each(|&i| v[i] = 1);
        (v, w)
    });
    BallotProfile::from_raw(roster, raw, Mode::Binary, Some(2)).unwrap()
}

/// Six pair-ballots over A1, A2, B1, B2; m = 1000.
pub fn table4() -> BallotProfile {
    pair_profile([500, 100, 10, 20, 20, 350])
}

pub fn table7() -> BallotProfile {
    pair_profile([300, 250, 150, 40, 60, 200])
}

/// Table 4 with the 500 {A1, A2} voters approving A1 and rejecting B1.
pub fn table9() -> BallotProfile {
    let roster = CandidateRoster::new(["A1", "A2", "B1", "B2"]).unwrap();
    let raw = [
        (vec![1i8, 0, -1, 0], 500u64),
        (vec![1, 0, 1, 0], 100),
        (vec![1, 0, 0, 1], 10),
        (vec![0, 1, 1, 0], 20),
        (vec![0, 1, 0, 1], 20),
        (vec![0, 0, 1, 1], 350),
    ];
    BallotProfile::from_raw(roster, raw, Mode::Ternary, Some(2)).unwrap()
}

pub fn table3() -> BallotProfile {
    let roster = CandidateRoster::new(["A", "B", "C", "D", "E"]).unwrap();
    let raw = [
        ([1i8, 1, 0, 0, 1], 1u64),
        ([1, 1, 0, 0, 0], 1),
        ([1, 1, 1, 1, 0], 1),
        ([0, 0, 1, 1, 1], 1),
    ];
    BallotProfile::from_raw(roster, raw, Mode::Binary, None).unwrap()
}

/// 998 voters for {A1, A2}, one for {A1, B2}, one for {B1, B2}.
pub fn swing() -> BallotProfile {
    pair_profile_sparse(&[([0, 1], 998), ([0, 3], 1), ([2, 3], 1)])
}

fn pair_profile_sparse(groups: &[([usize; 2], u64)]) -> BallotProfile {
    let roster = CandidateRoster::new(["A1", "A2", "B1", "B2"]).unwrap();
    let raw = groups.iter().map(|(pair, w)| {
        let mut v = vec![0i8; 4];
        pair.iter().for_each(|&i| v[i] = 1);
        (v, *w)
    });
    BallotProfile::from_raw(roster, raw, Mode::Binary, Some(2)).unwrap()
}

pub fn named(profile: &BallotProfile, names: &[&str]) -> Committee {
    let members = names
        .iter()
        .map(|n| profile.roster().index_of(n).unwrap())
        .collect();
    Committee::new(members, profile.candidates()).unwrap()
}

pub fn names<'a>(profile: &'a BallotProfile, c: &Committee) -> Vec<&'a str> {
    profile.roster().committee_names(c)
}
