//! Observed-order estimation for refinement studies.

/// Outcome of a refinement study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConvergenceEstimate {
    /// Mean log2 error-reduction rate per refinement doubling.
    Order(f64),
    /// Errors sit at the rounding floor on some level, so no algebraic
    /// order is measurable.
    Saturated,
}

impl ConvergenceEstimate {
    pub fn order(&self) -> Option<f64> {
        match self {
            Self::Order(p) => Some(*p),
            Self::Saturated => None,
        }
    }

    pub fn is_saturated(&self) -> bool {
        matches!(self, Self::Saturated)
    }
}

/// log2 reduction rate between successive errors of a doubling study.
pub fn observed_orders(errors: &[f64]) -> Vec<f64> {
    errors.windows(2).map(|w| (w[0] / w[1]).log2()).collect()
}

/// Mean observed order, or `Saturated` when any level's error is at or
/// below the given floor.
pub fn estimate_order(errors: &[f64], floor: f64) -> ConvergenceEstimate {
    if errors.len() < 2 || errors.iter().any(|e| *e <= floor) {
        return ConvergenceEstimate::Saturated;
    }
    let orders = observed_orders(errors);
    let mean = orders.iter().sum::<f64>() / orders.len() as f64;
    ConvergenceEstimate::Order(mean)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_second_order_sequence() {
        let errors = [1e-2, 2.5e-3, 6.25e-4, 1.5625e-4];
        match estimate_order(&errors, 1e-13) {
            ConvergenceEstimate::Order(p) => assert!((p - 2.0).abs() < 1e-12),
            ConvergenceEstimate::Saturated => panic!("unexpected saturation"),
        }
    }

    #[test]
    fn floor_reports_saturation() {
        let errors = [1e-15, 2e-16, 3e-16];
        assert!(estimate_order(&errors, 1e-13).is_saturated());
    }

    #[test]
    fn too_few_levels_reports_saturation() {
        assert!(estimate_order(&[1e-3], 1e-13).is_saturated());
    }
}
