use alloc::collections::BTreeMap;

/// Number of voters `ν_d` at each distance `d` from one committee.
///
/// Only non-zero counts are stored, so two histograms are equal exactly when
/// every `ν_d` agrees.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DistanceHistogram {
    counts: BTreeMap<u32, u64>,
    total: u64,
}

impl DistanceHistogram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_counts(counts: impl IntoIterator<Item = (u32, u64)>) -> Self {
        let mut h = Self::new();
        for (d, c) in counts {
            h.add(d, c);
        }
        h
    }

    pub fn add(&mut self, distance: u32, count: u64) {
        if count > 0 {
            *self.counts.entry(distance).or_insert(0) += count;
            self.total += count;
        }
    }

    /// `ν_d`.
    pub fn count(&self, distance: u32) -> u64 {
        self.counts.get(&distance).copied().unwrap_or(0)
    }

    /// Total number of voters `m`.
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn max_distance(&self) -> Option<u32> {
        self.counts.keys().next_back().copied()
    }

    /// `(d, ν_d)` pairs with `ν_d > 0`, increasing in `d`.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (u32, u64)> + '_ {
        self.counts.iter().map(|(&d, &c)| (d, c))
    }

    /// `Σ ν_d · d`, the 1-norm of the distance vector.
    pub fn distance_sum(&self) -> u64 {
        self.iter().map(|(d, c)| u64::from(d) * c).sum()
    }

    /// Every weight multiplied by `factor`.
    pub fn scaled(&self, factor: u64) -> Self {
        Self::from_counts(self.iter().map(|(d, c)| (d, c * factor)))
    }
}
