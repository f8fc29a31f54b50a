use crate::error::{Error, Result};

/// Cost threshold with an optional absolute slack.
///
/// A cost `c` is admitted when `c <= gamma + tolerance`. The tolerance is zero
/// unless set explicitly; it exists for log-scaled inputs where exact ties
/// can be lost to rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Budget {
    gamma: f64,
    tolerance: f64,
}

impl Budget {
    pub fn new(gamma: f64) -> Result<Self> {
        if !gamma.is_finite() || gamma < 0.0 {
            return Err(Error::InvalidThreshold(gamma));
        }
        Ok(Budget {
            gamma,
            tolerance: 0.0,
        })
    }

    pub fn with_tolerance(self, tolerance: f64) -> Result<Self> {
        if !tolerance.is_finite() || tolerance < 0.0 {
            return Err(Error::InvalidTolerance(tolerance));
        }
        Ok(Budget { tolerance, ..self })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    #[inline]
    pub fn admits(&self, cost: f64) -> bool {
        cost <= self.gamma + self.tolerance
    }

    /// Negation of [`Budget::admits`]; an infinite cost always exceeds.
    #[inline]
    pub fn exceeded_by(&self, cost: f64) -> bool {
        !self.admits(cost)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_negative_and_nan() {
        assert!(Budget::new(-0.5).is_err());
        assert!(Budget::new(f64::NAN).is_err());
        assert!(Budget::new(f64::INFINITY).is_err());
        assert!(Budget::new(0.0).unwrap().with_tolerance(-1.0).is_err());
    }

    #[test]
    fn infinity_always_exceeds() {
        let b = Budget::new(1e300).unwrap();
        assert!(b.exceeded_by(f64::INFINITY));
        assert!(b.exceeded_by(f64::INFINITY + 1.0));
        assert!(b.admits(1e300));
    }

    #[test]
    fn tolerance_widens_the_bound() {
        let b = Budget::new(1.0).unwrap();
        assert!(b.exceeded_by(1.0 + 1e-12));
        let b = b.with_tolerance(1e-9).unwrap();
        assert!(b.admits(1.0 + 1e-12));
        assert!(b.exceeded_by(1.0 + 1e-6));
    }
}
