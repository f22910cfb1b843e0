use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{check_enumerable, check_k, SolverConfig};
use crate::ballot::BallotProfile;
use crate::committee::{enumerate_committees, Committee};
use crate::error::Error;
use crate::histogram::DistanceHistogram;
use crate::metrics::ProfileIndex;
use crate::objectives::{compare, log_power_sum, Objective};
use crate::result::Warning;

/// What each sweep cell holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportMode {
    /// `(Σ ν_d d^p)^(1/p)`.
    Norm,
    /// `Σ ν_d d^p`, the norm raised to the power `p`; bounded as `p -> 0`.
    PowerSum,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub committee: Committee,
    pub histogram: DistanceHistogram,
    /// One value per `p`.
    pub cells: Vec<f64>,
    /// Natural logarithm of each cell; finite even where the cell overflows.
    pub log_cells: Vec<f64>,
}

/// Scores of every committee for several values of `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepMatrix {
    pub k: usize,
    pub ps: Vec<f64>,
    pub report: ReportMode,
    /// One row per committee, canonical order.
    pub rows: Vec<SweepRow>,
    /// For each `p`, the indices of the rows that minimize it.
    pub minimizers: Vec<Vec<usize>>,
    pub warnings: Vec<Warning>,
}

impl SweepMatrix {
    pub fn is_minimizer(&self, row: usize, column: usize) -> bool {
        self.minimizers[column].contains(&row)
    }
}

/// Scores every `k`-member committee at every `p` in `ps`.
pub fn sweep(
    profile: &BallotProfile,
    k: usize,
    ps: &[f64],
    report: ReportMode,
    config: &SolverConfig,
) -> Result<SweepMatrix, Error> {
    check_k(profile, k)?;
    if ps.is_empty() {
        return Err(Error::EmptyParameterList);
    }
    for &p in ps {
        Objective::PNorm(p).validate()?;
    }
    check_enumerable(profile.candidates(), k, config)?;

    let n = profile.candidates();
    let index = ProfileIndex::new(profile);
    let scale = profile.max_attainable_distance(k);
    let mut rows = Vec::new();
    for committee in enumerate_committees(n, k)? {
        let mut seated = vec![false; n];
        committee.members().iter().for_each(|&i| seated[i] = true);
        let histogram = index.histogram(&seated, k);
        let mut cells = Vec::with_capacity(ps.len());
        let mut log_cells = Vec::with_capacity(ps.len());
        for &p in ps {
            let lps = log_power_sum(&histogram, p)?;
            let log = match report {
                ReportMode::Norm => lps / p,
                ReportMode::PowerSum => lps,
            };
            cells.push(libm::exp(log));
            log_cells.push(log);
        }
        rows.push(SweepRow {
            committee,
            histogram,
            cells,
            log_cells,
        });
    }

    let mut minimizers = Vec::with_capacity(ps.len());
    let mut warnings: Vec<Warning> = Vec::new();
    for &p in ps {
        let objective = Objective::PNorm(p);
        let keys = rows
            .iter()
            .map(|r| objective.key(&r.histogram, scale))
            .collect::<Result<Vec<_>, _>>()?;
        let mut best: Vec<usize> = Vec::new();
        for (i, key) in keys.iter().enumerate() {
            let Some(&lead) = best.first() else {
                best.push(i);
                continue;
            };
            let cmp = compare(key, &keys[lead])?;
            if cmp.near_tie {
                let w = Warning::NearTie {
                    first: rows[lead].committee.clone(),
                    second: rows[i].committee.clone(),
                };
                if !warnings.contains(&w) {
                    warnings.push(w);
                }
            }
            match cmp.ordering {
                Ordering::Less => best = vec![i],
                Ordering::Equal => best.push(i),
                Ordering::Greater => {}
            }
        }
        minimizers.push(best);
    }

    Ok(SweepMatrix {
        k,
        ps: ps.to_vec(),
        report,
        rows,
        minimizers,
        warnings,
    })
}
