//! Alternating Hurwitz zeta functions, the modified gamma function and
//! zeta-regularized alternating products.
//!
//! The crate is organised bottom-up:
//!
//! * [`num`] holds the numerical kernels: Bernoulli numbers, accelerated
//!   alternating summation, Richardson extrapolation and Cauchy-integral
//!   Taylor coefficients.
//! * [`zeta`] evaluates ζ(s,z), ζ(s), η(s) and the alternating ζ_E(s,z).
//! * [`gamma`] provides classical ψ and log Γ plus the modified ψ̃, ψ̃⁽ⁿ⁾,
//!   Γ̃ and the modified Stieltjes constants γ̃_k(z).
//! * [`product`] computes Λ*(s), its derivative at zero and the regularized
//!   product ∏ {∏_j (m+z_j)}^{(−1)^m}.
//! * [`verify`] compares both sides of the product identities and emits
//!   [`VerificationReport`]s.
//!
//! All scalars are [`Complex64`]; every series evaluation returns a
//! [`SeriesResult`] carrying its own error estimate.

pub mod config;
pub mod error;
pub mod gamma;
pub mod num;
pub mod product;
pub mod series;
pub mod verify;
pub mod zeta;

pub use num_complex::Complex64;

pub use config::EvalConfig;
pub use error::{Error, Result};
pub use gamma::{
    classical_digamma, classical_log_gamma, gamma_tilde, log_gamma_tilde, mod_euler_const,
    mod_stieltjes, psi_tilde, psi_tilde_n, GammaTildeRoute, ModStieltjesResult,
};
pub use num::{
    alt_sum, bernoulli_numbers, contour_taylor_coeffs, richardson_extrapolate,
    richardson_extrapolate_at,
};
pub use product::{
    geometric_mean_oracle, geometric_mean_oracle_extrapolated, lambda_star, lambda_star_deriv_zero,
    lambda_star_deriv_zero_with, mizuno_rhs, reg_alt_product, roots_of_unity, wallis_extrapolated,
    wallis_partial, Cutoff, ProductSpec, TailMethod,
};
pub use series::{Method, SeriesResult};
pub use verify::{
    classical_lerch_check, kurokawa_wakayama, mizuno_sweep, verify_lerch, verify_lerch_qi,
    verify_mizuno, verify_wallis, Identity, SweepCase, SweepOutcome, VerificationReport,
};
pub use zeta::{
    alt_hurwitz_zeta, dirichlet_eta, eta_prime_zero, hurwitz_zeta, hurwitz_zeta_s_derivative,
    riemann_zeta, AltZetaMethod,
};
