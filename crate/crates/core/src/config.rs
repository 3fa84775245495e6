use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Numerical policy shared by every evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalConfig {
    /// Target error, relative to `max(|value|, 1)`.
    pub target_rel_error: f64,
    /// Budget for any single series.
    pub max_terms: usize,
    /// Number of Bernoulli correction terms in Euler–Maclaurin tails.
    pub em_bernoulli_terms: usize,
    /// Minimum real part of the shifted argument before asymptotic
    /// expansions are applied.
    pub shift_threshold: f64,
    /// Radius of the Cauchy circle used for Taylor coefficients.
    pub contour_radius: f64,
    /// Number of trapezoid nodes on the Cauchy circle.
    pub contour_nodes: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            target_rel_error: 1e-12,
            max_terms: 1_000_000,
            em_bernoulli_terms: 12,
            shift_threshold: 12.0,
            contour_radius: 0.5,
            contour_nodes: 64,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.target_rel_error > 0.0 && self.target_rel_error.is_finite()) {
            return Err(Error::param("target_rel_error must be positive"));
        }
        if self.max_terms == 0 {
            return Err(Error::param("max_terms must be positive"));
        }
        // B_{2p+2} is needed for the error estimate of a p-term tail.
        if self.em_bernoulli_terms == 0
            || 2 * self.em_bernoulli_terms + 2 > crate::num::MAX_BERNOULLI
        {
            return Err(Error::param(format!(
                "em_bernoulli_terms must lie in 1..={}",
                crate::num::MAX_BERNOULLI / 2 - 1
            )));
        }
        if !(self.shift_threshold > 0.0 && self.shift_threshold.is_finite()) {
            return Err(Error::param("shift_threshold must be positive"));
        }
        if !(self.contour_radius > 0.0 && self.contour_radius < 1.0) {
            return Err(Error::param("contour_radius must lie in (0, 1)"));
        }
        if self.contour_nodes == 0 {
            return Err(Error::param("contour_nodes must be positive"));
        }
        Ok(())
    }

    /// Absolute tolerance that an error estimate must meet for `value`.
    pub fn tolerance_for(&self, magnitude: f64) -> f64 {
        self.target_rel_error * magnitude.max(1.0)
    }

    pub fn accepts(&self, error_estimate: f64, magnitude: f64) -> bool {
        error_estimate <= self.tolerance_for(magnitude)
    }
}
