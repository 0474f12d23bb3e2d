//! Feasible box: per-dimension lower/upper bounds.

use crate::error::{Error, Result};

/// Axis-aligned box of feasible positions.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchSpace {
    lb: Vec<f64>,
    ub: Vec<f64>,
}

impl SearchSpace {
    /// Builds a space from per-dimension bounds. Every `lb[i]` must be
    /// strictly below `ub[i]` and the bounds must be finite and non-empty.
    pub fn new(lb: Vec<f64>, ub: Vec<f64>) -> Result<Self> {
        if lb.is_empty() {
            return Err(Error::InvalidSpace("dimension must be at least 1".into()));
        }
        if lb.len() != ub.len() {
            return Err(Error::InvalidSpace(format!(
                "bound lengths differ: {} vs {}",
                lb.len(),
                ub.len()
            )));
        }
        for (i, (&lo, &hi)) in lb.iter().zip(&ub).enumerate() {
            if !lo.is_finite() || !hi.is_finite() {
                return Err(Error::InvalidSpace(format!(
                    "non-finite bound in dimension {i}"
                )));
            }
            if lo >= hi {
                return Err(Error::InvalidSpace(format!(
                    "lb[{i}] = {lo} must be below ub[{i}] = {hi}"
                )));
            }
        }
        Ok(Self { lb, ub })
    }

    /// Same scalar bounds replicated across `dim` dimensions.
    pub fn uniform(dim: usize, lb: f64, ub: f64) -> Result<Self> {
        Self::new(vec![lb; dim], vec![ub; dim])
    }

    pub fn dim(&self) -> usize {
        self.lb.len()
    }

    pub fn lb(&self) -> &[f64] {
        &self.lb
    }

    pub fn ub(&self) -> &[f64] {
        &self.ub
    }

    /// Box width `ub[d] - lb[d]`.
    pub fn width(&self, d: usize) -> f64 {
        self.ub[d] - self.lb[d]
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(self.lb.iter().zip(&self.ub))
                .all(|(&v, (&lo, &hi))| v >= lo && v <= hi)
    }

    /// Clips each component of `x` into its bound interval, in place.
    ///
    /// Panics if `x` has the wrong length.
    pub fn clamp(&self, x: &mut [f64]) {
        assert_eq!(
            x.len(),
            self.dim(),
            "position length {} does not match space dimension {}",
            x.len(),
            self.dim()
        );
        for (v, (&lo, &hi)) in x.iter_mut().zip(self.lb.iter().zip(&self.ub)) {
            *v = v.clamp(lo, hi);
        }
    }
}

/// Returns a copy of `position` with every component clipped into the box.
///
/// Components already inside pass through unchanged. Panics if the position
/// length does not match the space dimension.
pub fn clamp_to_bounds(position: &[f64], space: &SearchSpace) -> Vec<f64> {
    let mut out = position.to_vec();
    space.clamp(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clip_to_upper_bound() {
        let space = SearchSpace::uniform(1, -1.0, 1.0).unwrap();
        assert_eq!(clamp_to_bounds(&[5.0], &space), vec![1.0]);
    }

    #[test]
    fn identity_inside_box() {
        let space = SearchSpace::uniform(1, -1.0, 1.0).unwrap();
        assert_eq!(clamp_to_bounds(&[0.3], &space), vec![0.3]);
    }

    #[test]
    fn clip_lower_pass_through() {
        let space = SearchSpace::uniform(2, -1.0, 1.0).unwrap();
        assert_eq!(clamp_to_bounds(&[-2.5, 0.5], &space), vec![-1.0, 0.5]);
    }

    #[test]
    #[should_panic(expected = "does not match space dimension")]
    fn dimension_mismatch_is_a_contract_violation() {
        let space = SearchSpace::uniform(2, -1.0, 1.0).unwrap();
        clamp_to_bounds(&[0.0], &space);
    }

    #[test]
    fn rejects_degenerate_bounds() {
        assert!(SearchSpace::new(vec![1.0], vec![1.0]).is_err());
        assert!(SearchSpace::new(vec![2.0], vec![1.0]).is_err());
        assert!(SearchSpace::new(vec![], vec![]).is_err());
        assert!(SearchSpace::new(vec![0.0], vec![f64::INFINITY]).is_err());
    }

    #[test]
    fn contains_checks_dim_and_bounds() {
        let space = SearchSpace::uniform(2, 0.0, 1.0).unwrap();
        assert!(space.contains(&[0.0, 1.0]));
        assert!(!space.contains(&[0.5]));
        assert!(!space.contains(&[0.5, 1.5]));
    }
}
