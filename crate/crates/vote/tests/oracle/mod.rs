//! Brute-force reference computations for tests.
//!
//! Everything here works on plain `(entries, weight)` rows and explicit
//! committee encodings; nothing calls into the solver or metric code.
#![allow(dead_code)]

use std::collections::BTreeMap;

use pnorm_committee::{BallotProfile, Mode};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

#[derive(Debug, Clone)]
pub struct Rows {
    pub n: usize,
    pub ternary: bool,
    pub ballots: Vec<(Vec<i8>, u64)>,
}

impl Rows {
    pub fn of(profile: &BallotProfile) -> Self {
        Rows {
            n: profile.candidates(),
            ternary: profile.mode() == Mode::Ternary,
            ballots: profile
                .ballots()
                .iter()
                .map(|b| (b.values(), b.weight()))
                .collect(),
        }
    }

    pub fn voters(&self) -> u64 {
        self.ballots.iter().map(|(_, w)| w).sum()
    }
}

/// All k-subsets of 0..n, sorted lexicographically, via bitmasks.
pub fn committees(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

pub fn encode(members: &[usize], n: usize, ternary: bool) -> Vec<i8> {
    (0..n)
        .map(|i| match (members.contains(&i), ternary) {
            (true, _) => 1,
            (false, false) => 0,
            (false, true) => -1,
        })
        .collect()
}

pub fn l1(ballot: &[i8], encoding: &[i8]) -> u32 {
    ballot
        .iter()
        .zip(encoding)
        .map(|(&b, &c)| (i32::from(c) - i32::from(b)).unsigned_abs())
        .sum()
}

pub fn histogram(rows: &Rows, members: &[usize]) -> BTreeMap<u32, u64> {
    let enc = encode(members, rows.n, rows.ternary);
    let mut h = BTreeMap::new();
    for (b, w) in &rows.ballots {
        *h.entry(l1(b, &enc)).or_insert(0) += w;
    }
    h
}

pub fn distances(rows: &Rows, members: &[usize]) -> Vec<u32> {
    let enc = encode(members, rows.n, rows.ternary);
    rows.ballots
        .iter()
        .flat_map(|(b, w)| std::iter::repeat_n(l1(b, &enc), *w as usize))
        .collect()
}

/// Σ ν_d d^p in exact integers.
pub fn int_power_sum(h: &BTreeMap<u32, u64>, p: u32) -> u128 {
    h.iter()
        .map(|(&d, &c)| u128::from(d).pow(p) * u128::from(c))
        .sum()
}

pub fn coverage(rows: &Rows, members: &[usize]) -> u64 {
    rows.ballots
        .iter()
        .filter(|(b, _)| {
            b.iter().enumerate().any(|(i, &v)| {
                (v == 1 && members.contains(&i)) || (v == -1 && !members.contains(&i))
            })
        })
        .map(|(_, w)| w)
        .sum()
}

/// Committees minimizing `key`, in canonical order.
pub fn argmin<K: Ord>(cands: &[Vec<usize>], key: impl Fn(&[usize]) -> K) -> Vec<Vec<usize>> {
    let keys: Vec<K> = cands.iter().map(|c| key(c)).collect();
    let best = keys.iter().min().expect("at least one committee");
    cands
        .iter()
        .zip(&keys)
        .filter(|(_, k)| *k == best)
        .map(|(c, _)| c.clone())
        .collect()
}

/// A random small profile: n ≤ 8, k ≤ 3, m ≤ 50. Half the profiles give
/// every voter exactly k opinions.
pub fn random_rows(rng: &mut StdRng, ternary: bool) -> (Rows, usize, Option<usize>) {
    let n = rng.gen_range(2..=8);
    let k = rng.gen_range(1..=n.min(3));
    let budgeted = rng.gen_bool(0.5);
    let groups = rng.gen_range(1..=8);
    let mut ballots = Vec::new();
    let mut m = 0;
    for _ in 0..groups {
        let w = rng.gen_range(1..=12u64).min(50 - m);
        if w == 0 {
            break;
        }
        m += w;
        let mut v = vec![0i8; n];
        if budgeted {
            let mut idx: Vec<usize> = (0..n).collect();
            idx.shuffle(rng);
            for &i in &idx[..k] {
                v[i] = if ternary && rng.gen_bool(0.5) { -1 } else { 1 };
            }
        } else {
            for x in v.iter_mut() {
                *x = if ternary {
                    rng.gen_range(-1..=1)
                } else {
                    rng.gen_range(0..=1)
                };
            }
        }
        ballots.push((v, w));
    }
    (
        Rows {
            n,
            ternary,
            ballots,
        },
        k,
        budgeted.then_some(k),
    )
}
