//! Numerical kernels shared by the zeta, gamma and product modules.

mod altsum;
mod bernoulli;
pub(crate) mod cmath;
mod contour;
mod richardson;

pub use altsum::{alt_sum, paired_partial_sums};
pub(crate) use bernoulli::bernoulli_cache;
pub use bernoulli::{bernoulli_numbers, MAX_BERNOULLI};
pub use cmath::NeumaierSum;
pub use contour::{contour_taylor_coeffs, contour_taylor_coeffs_with_error, ContourCoeffs};
pub use richardson::{richardson_extrapolate, richardson_extrapolate_at, richardson_with_error};
