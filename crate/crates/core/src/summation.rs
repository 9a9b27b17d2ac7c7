//! Compensated accumulation for order-stable reductions.

/// Neumaier-compensated running sum.
///
/// Keeps the accumulated rounding error in a separate compensation term so
/// that long reductions stay accurate to a few ulps regardless of term
/// ordering.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }

    pub fn sum_iter<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
        let mut acc = Self::new();
        for v in iter {
            acc.add(v);
        }
        acc.value()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancellation_lost_by_naive_sum() {
        // 1 + 1e100 - 1e100 leaves the small term only in the compensation.
        let terms = [1.0, 1e100, 1.0, -1e100];
        assert_eq!(CompensatedSum::sum_iter(terms.iter().copied()), 2.0);
        let naive: f64 = terms.iter().sum();
        assert_eq!(naive, 0.0);
    }

    #[test]
    fn ordering_changes_result_by_at_most_ulps() {
        let forward: Vec<f64> = (1..=10_000).map(|i| 1.0 / i as f64).collect();
        let mut reversed = forward.clone();
        reversed.reverse();
        let a = CompensatedSum::sum_iter(forward);
        let b = CompensatedSum::sum_iter(reversed);
        assert!((a - b).abs() <= 1e-15 * a.abs());
    }
}
