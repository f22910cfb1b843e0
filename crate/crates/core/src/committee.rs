use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// A set of `k` distinct candidate indices out of `n`, kept sorted.
///
/// Committees order lexicographically by their sorted member indices. That
/// order is the canonical tie-break order used everywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Committee {
    members: Vec<usize>,
    n: usize,
}

impl Committee {
    /// Builds a committee from member indices in any order.
    pub fn new(mut members: Vec<usize>, n: usize) -> Result<Self, Error> {
        members.sort_unstable();
        let distinct = members.windows(2).all(|w| w[0] < w[1]);
        let in_range = members.last().is_none_or(|&m| m < n);
        if members.is_empty() || !distinct || !in_range {
            return Err(Error::InvalidCommittee);
        }
        Ok(Committee { members, n })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Number of candidates the committee was drawn from.
    pub fn candidates(&self) -> usize {
        self.n
    }

    pub fn contains(&self, candidate: usize) -> bool {
        self.members.binary_search(&candidate).is_ok()
    }

    /// `c_i = 1` for members, `0` otherwise.
    pub fn binary_encoding(&self) -> Vec<i8> {
        self.membership().map(i8::from).collect()
    }

    /// `c_i = 1` for members, `-1` otherwise.
    pub fn ternary_encoding(&self) -> Vec<i8> {
        self.membership().map(|m| if m { 1 } else { -1 }).collect()
    }

    /// Membership flag for every candidate index.
    pub fn membership(&self) -> impl Iterator<Item = bool> + '_ {
        let mut seats = self.members.iter().peekable();
        (0..self.n).map(move |i| seats.next_if_eq(&&i).is_some())
    }
}

impl fmt::Display for Committee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

/// `C(n, k)`, or `None` if it does not fit in a `u64`.
pub fn binomial(n: usize, k: usize) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k) as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = acc.checked_mul(n as u128 - i)? / (i + 1);
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Every `k`-subset of `0..n` in lexicographic order of sorted indices.
#[derive(Debug, Clone)]
pub struct Committees {
    n: usize,
    current: Option<Vec<usize>>,
}

/// Streams all `C(n, k)` committees in canonical order.
pub fn enumerate_committees(n: usize, k: usize) -> Result<Committees, Error> {
    if k < 1 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    Ok(Committees {
        n,
        current: Some((0..k).collect()),
    })
}

impl Iterator for Committees {
    type Item = Committee;

    fn next(&mut self) -> Option<Committee> {
        let current = self.current.as_mut()?;
        let out = Committee {
            members: current.clone(),
            n: self.n,
        };
        // Advance: find the rightmost index that can still move right.
        let k = current.len();
        match (0..k).rev().find(|&i| current[i] < self.n - k + i) {
            Some(i) => {
                current[i] += 1;
                for j in i + 1..k {
                    current[j] = current[j - 1] + 1;
                }
            }
            None => self.current = None,
        }
        Some(out)
    }
}
