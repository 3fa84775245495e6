//! Classical ψ and log Γ, and the modified digamma/gamma family.
//!
//! The modified functions are
//!
//! * ψ̃(z) = −ψ(z) + ψ(z/2) + log 2 = −ζ_E(1,z),
//! * ψ̃⁽ⁿ⁾(z) = (−1)^{n+1} n! ζ_E(n+1, z),
//! * Γ̃ with d/dz log Γ̃ = ψ̃ and Γ̃(1) = π/2,
//! * γ̃_k(z), the Taylor data of ζ_E(s,z) at s = 1.
//!
//! Integrating ψ̃ gives log Γ̃(z) = (z − 2) log 2 + 2 log Γ(z/2) − log Γ(z);
//! the constant −2 log 2 is fixed by Γ̃(1) = π/2. This closed form is the
//! fast route. The product route sums the Weierstrass-type factors
//! (e^{−z/m}(1 + z/m))^{(−1)^{m+1}} in pairs and extrapolates; the series
//! route accelerates the equivalent alternating log series directly.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::num::cmath::{compensated_sum, is_nonpositive_integer, log1p_minus_id};
use crate::num::{
    alt_sum, bernoulli_cache, contour_taylor_coeffs_with_error, paired_partial_sums,
    richardson_with_error,
};
use crate::series::{Method, SeriesResult};
use crate::zeta::{alt_hurwitz_zeta, AltZetaMethod, SHIFT_POLE_TOL};

/// Shift threshold and number of Bernoulli terms for the classical
/// asymptotic expansions.
const CLASSICAL_SHIFT: f64 = 12.0;
const CLASSICAL_TERMS: usize = 12;

/// Factor pairs used by the product route unless a count is given.
pub const DEFAULT_PRODUCT_PAIRS: usize = 10_000;

/// Largest derivative order accepted by [`psi_tilde_n`].
pub const MAX_PSI_ORDER: usize = 12;
/// Largest index accepted by [`mod_stieltjes`].
pub const MAX_STIELTJES_INDEX: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GammaTildeRoute {
    /// 2^{z−2} Γ(z/2)² / Γ(z)
    ClosedForm,
    /// Paired Weierstrass-type product with Richardson extrapolation.
    WeierstrassProduct,
    /// Accelerated alternating log series.
    LogSeries,
}

impl GammaTildeRoute {
    pub const ALL: [GammaTildeRoute; 3] = [
        GammaTildeRoute::ClosedForm,
        GammaTildeRoute::WeierstrassProduct,
        GammaTildeRoute::LogSeries,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GammaTildeRoute::ClosedForm => "closed_form",
            GammaTildeRoute::WeierstrassProduct => "weierstrass_product",
            GammaTildeRoute::LogSeries => "log_series",
        }
    }
}

impl std::str::FromStr for GammaTildeRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" | "closed_form" | "closed-form" => Ok(GammaTildeRoute::ClosedForm),
            "product" | "weierstrass_product" | "weierstrass-product" => {
                Ok(GammaTildeRoute::WeierstrassProduct)
            }
            "series" | "log_series" | "log-series" => Ok(GammaTildeRoute::LogSeries),
            other => Err(Error::param(format!("unknown gamma-tilde route '{other}'"))),
        }
    }
}

/// γ̃_k(z) with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModStieltjesResult {
    pub k: usize,
    pub z: Complex64,
    pub value: Complex64,
    pub error_estimate: f64,
}

fn check_pole(z: Complex64) -> Result<()> {
    crate::zeta::check_shift(z)
}

fn classical_shift(z: Complex64) -> usize {
    (CLASSICAL_SHIFT - z.re).ceil().max(0.0) as usize
}

/// Digamma ψ(z) by upward recurrence and the asymptotic series
/// ψ(w) ~ log w − 1/(2w) − Σ B_{2k}/(2k w^{2k}).
pub fn classical_digamma(z: Complex64) -> Result<Complex64> {
    check_pole(z)?;
    let bern = bernoulli_cache();
    let n = classical_shift(z);
    let head = compensated_sum((0..n).map(|m| (z + m as f64).inv()));
    let w = z + n as f64;
    let inv_w2 = (w * w).inv();
    let mut power = inv_w2;
    let mut series = Complex64::new(0.0, 0.0);
    for k in 1..=CLASSICAL_TERMS {
        series += power * (bern[2 * k] / (2 * k) as f64);
        power *= inv_w2;
    }
    Ok(w.ln() - 0.5 / w - series - head)
}

/// Principal log Γ(z) by upward recurrence and Stirling's series.
pub fn classical_log_gamma(z: Complex64) -> Result<Complex64> {
    check_pole(z)?;
    let bern = bernoulli_cache();
    let n = classical_shift(z);
    let head = compensated_sum((0..n).map(|m| (z + m as f64).ln()));
    let w = z + n as f64;
    let inv_w = w.inv();
    let inv_w2 = inv_w * inv_w;
    let mut power = inv_w;
    let mut series = Complex64::new(0.0, 0.0);
    for k in 1..=CLASSICAL_TERMS {
        series += power * (bern[2 * k] / ((2 * k) * (2 * k - 1)) as f64);
        power *= inv_w2;
    }
    let stirling = (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + series;
    Ok(stirling - head)
}

/// ψ̃(z) = −ψ(z) + ψ(z/2) + log 2.
pub fn psi_tilde(z: Complex64) -> Result<Complex64> {
    check_pole(z)?;
    Ok(-classical_digamma(z)? + classical_digamma(z * 0.5)? + LN_2)
}

/// ψ̃⁽ⁿ⁾(z) = (−1)^{n+1} n! ζ_E(n+1, z).
pub fn psi_tilde_n(n: usize, z: Complex64, cfg: &EvalConfig) -> Result<SeriesResult> {
    if n > MAX_PSI_ORDER {
        return Err(Error::param(format!(
            "derivative order {n} exceeds {MAX_PSI_ORDER}"
        )));
    }
    check_pole(z)?;
    let factorial: f64 = (1..=n).map(|k| k as f64).product();
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    let zeta = alt_hurwitz_zeta(
        Complex64::new((n + 1) as f64, 0.0),
        z,
        AltZetaMethod::Split,
        cfg,
    )?;
    Ok(zeta.map(|v| v * (sign * factorial), factorial))
}

/// γ̃₀ = ½ + ½ Σ_{j≥1} (−1)^{j+1} / (j(j+1)).
pub fn mod_euler_const(cfg: &EvalConfig) -> Result<SeriesResult> {
    cfg.validate()?;
    let sum = alt_sum(
        |j| {
            let jf = j as f64;
            let t = 1.0 / (jf * (jf + 1.0));
            Complex64::new(if j % 2 == 1 { t } else { -t }, 0.0)
        },
        1,
        cfg,
    );
    Ok(sum.map(|v| 0.5 + 0.5 * v, 0.5))
}

/// (−1)^{m+1} (log(1 + z/m) − z/m)
fn weierstrass_log_factor(z: Complex64, m: u64) -> Complex64 {
    let t = log1p_minus_id(z / m as f64);
    if m % 2 == 1 {
        t
    } else {
        -t
    }
}

/// log Γ̃(z) along the chosen route.
pub fn log_gamma_tilde(
    z: Complex64,
    route: GammaTildeRoute,
    cfg: &EvalConfig,
) -> Result<SeriesResult> {
    cfg.validate()?;
    check_pole(z)?;
    match route {
        GammaTildeRoute::ClosedForm => {
            let half = 2.0 * classical_log_gamma(z * 0.5)?;
            let full = classical_log_gamma(z)?;
            let linear = (z - 2.0) * LN_2;
            let value = linear + half - full;
            let scale = linear.norm() + half.norm() + full.norm();
            Ok(SeriesResult {
                value,
                error_estimate: 16.0 * f64::EPSILON * scale,
                terms_used: 2 * (CLASSICAL_TERMS + classical_shift(z)),
                method: Method::Direct,
                converged: true,
            })
        }
        GammaTildeRoute::WeierstrassProduct => {
            log_gamma_tilde_product(z, DEFAULT_PRODUCT_PAIRS, cfg)
        }
        GammaTildeRoute::LogSeries => {
            let euler = mod_euler_const(cfg)?;
            let tail = alt_sum(|m| weierstrass_log_factor(z, m), 1, cfg);
            let value = -z.ln() + euler.value * z + tail.value;
            let error_estimate = tail.error_estimate + euler.error_estimate * z.norm();
            Ok(SeriesResult {
                value,
                error_estimate,
                terms_used: tail.terms_used,
                method: Method::Paired,
                converged: tail.converged && euler.converged,
            })
        }
    }
}

/// Product route with an explicit number of factor pairs. Partial sums of
/// the paired log factors are taken at pairs/8, pairs/4, pairs/2 and pairs
/// and extrapolated in powers of 1/pairs.
pub fn log_gamma_tilde_product(
    z: Complex64,
    pairs: usize,
    cfg: &EvalConfig,
) -> Result<SeriesResult> {
    cfg.validate()?;
    check_pole(z)?;
    if pairs < 8 {
        return Err(Error::param(format!(
            "product route needs at least 8 pairs, got {pairs}"
        )));
    }
    let checkpoints = [pairs / 8, pairs / 4, pairs / 2, pairs];
    let partials = paired_partial_sums(|m| weierstrass_log_factor(z, m), 1, &checkpoints);
    let points: Vec<(f64, Complex64)> = checkpoints
        .iter()
        .zip(&partials)
        .map(|(&p, &v)| (p as f64, v))
        .collect();
    let (limit, extrapolation_error) = richardson_with_error(&points, 3)?;
    let euler = mod_euler_const(cfg)?;
    let value = -z.ln() + euler.value * z + limit;
    let error_estimate = extrapolation_error + euler.error_estimate * z.norm();
    Ok(SeriesResult {
        value,
        error_estimate,
        terms_used: 2 * pairs,
        method: Method::Richardson,
        converged: cfg.accepts(error_estimate, value.norm()),
    })
}

/// Γ̃(z) along the chosen route; log-space evaluation, exponentiated last.
pub fn gamma_tilde(z: Complex64, route: GammaTildeRoute, cfg: &EvalConfig) -> Result<SeriesResult> {
    log_gamma_tilde(z, route, cfg).map(SeriesResult::exp)
}

/// γ̃_k(z) = (−1)^k k! a_k, where a_k are the Taylor coefficients of
/// ζ_E(s,z) about s = 1.
pub fn mod_stieltjes(k: usize, z: Complex64, cfg: &EvalConfig) -> Result<ModStieltjesResult> {
    cfg.validate()?;
    if k > MAX_STIELTJES_INDEX {
        return Err(Error::param(format!(
            "Stieltjes index {k} exceeds {MAX_STIELTJES_INDEX}"
        )));
    }
    check_pole(z)?;
    let mut worst = 0.0f64;
    let coeffs = contour_taylor_coeffs_with_error(
        |s| {
            let r = alt_hurwitz_zeta(s, z, AltZetaMethod::Split, cfg)?;
            worst = worst.max(r.error_estimate);
            Ok(r.value)
        },
        Complex64::new(1.0, 0.0),
        cfg.contour_radius,
        k,
        cfg.contour_nodes,
    )?;
    let factorial: f64 = (1..=k).map(|i| i as f64).product();
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let error = coeffs.errors[k] + worst / cfg.contour_radius.powi(k as i32);
    Ok(ModStieltjesResult {
        k,
        z,
        value: coeffs.coeffs[k] * (sign * factorial),
        error_estimate: error * factorial,
    })
}

/// Whether z lies where Γ̃ is validated (Re z > 0).
pub fn in_validated_domain(z: Complex64) -> bool {
    z.re > 0.0 && !is_nonpositive_integer(z, SHIFT_POLE_TOL)
}
