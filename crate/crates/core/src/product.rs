//! Zeta-regularized alternating products.
//!
//! For shifts z_1..z_n the alternating product ∏_{m≥0} ∏_j (m + z_j)^{(−1)^m}
//! is assigned the value exp(Λ*′(0)), where
//! Λ*(s) = Σ_{m≥0} (−1)^{m+1} ∏_j (m + z_j)^{−s}.
//! Λ*′(0) is assembled from four pieces around a cutoff c:
//!
//! * T1, the finite head −Σ_{m≤c} (−1)^{m+1} Σ_j log(m + z_j);
//! * T2, Σ_{m=1}^{c} (−1)^{m+1} Σ_j (log m + z_j/m);
//! * T3, the tail −Σ_j Σ_{m>c} (−1)^{m+1} (log(1 + z_j/m) − z_j/m);
//! * T4, n·½ log(π/2) − (Σ_j z_j)·γ̃₀.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::gamma::{log_gamma_tilde, mod_euler_const, GammaTildeRoute};
use crate::num::cmath::{compensated_sum, is_nonpositive_integer, log1p_minus_id, NeumaierSum};
use crate::num::{alt_sum, richardson_with_error};
use crate::series::{Method, SeriesResult};
use crate::zeta::SHIFT_POLE_TOL;

const MIN_AUTO_CUTOFF: usize = 10;
/// Upper bound on the number of power-sum terms in the T3 expansion.
const MAX_TAIL_POWERS: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cutoff {
    /// max(10, ⌈2·max_j |z_j|⌉)
    Auto,
    Explicit(usize),
}

/// Shifts z_1..z_n of an alternating product, with the cutoff rule.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProductSpec {
    shifts: Vec<Complex64>,
    cutoff: Cutoff,
}

impl ProductSpec {
    pub fn new(shifts: Vec<Complex64>) -> Result<Self> {
        if shifts.is_empty() {
            return Err(Error::param("a product needs at least one shift"));
        }
        for z in &shifts {
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(Error::param(format!("shift {z} is not finite")));
            }
            if is_nonpositive_integer(*z, SHIFT_POLE_TOL) {
                return Err(Error::domain(format!(
                    "shift {z} is a non-positive integer"
                )));
            }
        }
        Ok(ProductSpec {
            shifts,
            cutoff: Cutoff::Auto,
        })
    }

    pub fn with_cutoff(mut self, cutoff: Cutoff) -> Result<Self> {
        if let Cutoff::Explicit(c) = cutoff {
            if c == 0 {
                return Err(Error::param("cutoff must be a positive integer"));
            }
            let ratio = self.max_abs_shift() / (c as f64 + 1.0);
            if ratio >= 1.0 {
                return Err(Error::param(format!(
                    "cutoff {c} too small: max |z_j|/(c+1) = {ratio} must be below 1"
                )));
            }
        }
        self.cutoff = cutoff;
        Ok(self)
    }

    pub fn shifts(&self) -> &[Complex64] {
        &self.shifts
    }

    pub fn cutoff(&self) -> Cutoff {
        self.cutoff
    }

    pub fn n(&self) -> usize {
        self.shifts.len()
    }

    fn max_abs_shift(&self) -> f64 {
        self.shifts.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn resolved_cutoff(&self) -> usize {
        match self.cutoff {
            Cutoff::Explicit(c) => c,
            Cutoff::Auto => MIN_AUTO_CUTOFF.max((2.0 * self.max_abs_shift()).ceil() as usize),
        }
    }

    /// Shifts of both specs, with the automatic cutoff.
    pub fn concat(&self, other: &ProductSpec) -> Result<ProductSpec> {
        let mut shifts = self.shifts.clone();
        shifts.extend_from_slice(&other.shifts);
        ProductSpec::new(shifts)
    }

    /// All shifts have positive real part.
    pub fn in_validated_domain(&self) -> bool {
        self.shifts.iter().all(|z| z.re > 0.0)
    }

    /// Some log(m + z_j) in the finite head has a non-positive real argument,
    /// where the principal branch choice matters.
    pub fn branch_flag(&self) -> bool {
        let c = self.resolved_cutoff();
        self.shifts
            .iter()
            .any(|z| (0..=c).any(|m| m as f64 + z.re <= 0.0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TailMethod {
    /// Power-sum expansion with alternating zeta tails.
    EtaExpansion,
    /// Accelerated direct summation of the tail logs.
    PairedDirect,
}

impl TailMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            TailMethod::EtaExpansion => "eta_expansion",
            TailMethod::PairedDirect => "paired_direct",
        }
    }
}

impl std::str::FromStr for TailMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eta" | "eta_expansion" | "eta-expansion" => Ok(TailMethod::EtaExpansion),
            "paired" | "direct" | "paired_direct" | "paired-direct" => Ok(TailMethod::PairedDirect),
            other => Err(Error::param(format!("unknown tail method '{other}'"))),
        }
    }
}

/// Λ*′(0) with its decomposition.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LambdaDerivative {
    pub total: SeriesResult,
    /// T1..T4
    pub pieces: [Complex64; 4],
    pub cutoff: usize,
    pub tail_method: TailMethod,
    pub tail_terms: usize,
    pub branch_flag: bool,
}

/// Λ*(s) for Re s > 0 by accelerated summation.
pub fn lambda_star(s: Complex64, spec: &ProductSpec, cfg: &EvalConfig) -> Result<SeriesResult> {
    cfg.validate()?;
    if s.re <= 0.0 {
        return Err(Error::domain("Λ*(s) by summation needs Re(s) > 0"));
    }
    let shifts = spec.shifts();
    Ok(alt_sum(
        |m| {
            let log_sum: Complex64 = shifts.iter().map(|z| (z + m as f64).ln()).sum();
            let t = (-s * log_sum).exp();
            if m % 2 == 0 {
                -t
            } else {
                t
            }
        },
        0,
        cfg,
    ))
}

/// Λ*′(0) using the power-sum tail.
pub fn lambda_star_deriv_zero(spec: &ProductSpec, cfg: &EvalConfig) -> Result<SeriesResult> {
    lambda_star_deriv_zero_with(spec, cfg, TailMethod::EtaExpansion).map(|d| d.total)
}

pub fn lambda_star_deriv_zero_with(
    spec: &ProductSpec,
    cfg: &EvalConfig,
    method: TailMethod,
) -> Result<LambdaDerivative> {
    cfg.validate()?;
    let c = spec.resolved_cutoff();
    let shifts = spec.shifts();
    let n = shifts.len() as f64;
    let sum_z: Complex64 = shifts.iter().sum();

    let t1 = compensated_sum((0..=c).flat_map(|m| {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        shifts.iter().map(move |z| (z + m as f64).ln() * sign)
    }));

    let mut alt_log = NeumaierSum::new();
    let mut alt_harmonic = NeumaierSum::new();
    for m in 1..=c {
        let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
        alt_log.add(Complex64::new(sign * (m as f64).ln(), 0.0));
        alt_harmonic.add(Complex64::new(sign / m as f64, 0.0));
    }
    let t2 = alt_log.value() * n + sum_z * alt_harmonic.value();

    let tail = match method {
        TailMethod::EtaExpansion => tail_eta_expansion(shifts, c, cfg)?,
        TailMethod::PairedDirect => tail_paired_direct(shifts, c, cfg),
    };
    let t3 = tail.value;

    let euler = mod_euler_const(cfg)?;
    let t4 = Complex64::new(n * 0.5 * (PI / 2.0).ln(), 0.0) - sum_z * euler.value;

    let value = t1 + t2 + t3 + t4;
    let rounding =
        8.0 * f64::EPSILON * (t1.norm() + t2.norm() + t3.norm() + t4.norm() + n * (c as f64 + 1.0));
    let error_estimate = tail.error_estimate + euler.error_estimate * sum_z.norm() + rounding;
    Ok(LambdaDerivative {
        total: SeriesResult {
            value,
            error_estimate,
            terms_used: (c + 1) + tail.terms_used,
            method: tail.method,
            converged: tail.converged && euler.converged,
        },
        pieces: [t1, t2, t3, t4],
        cutoff: c,
        tail_method: method,
        tail_terms: tail.terms_used,
        branch_flag: spec.branch_flag(),
    })
}

/// T3 = −(−1)^c Σ_{k≥2} (−1)^{k+1}/k · ρ_k · Σ_j (z_j/(c+1))^k with the scaled
/// tails ρ_k = Σ_{i≥0} (−1)^i (1 + i/(c+1))^{−k}, so the alternating tail
/// Σ_{m>c} (−1)^{m+1} m^{−k} equals (−1)^c (c+1)^{−k} ρ_k without cancellation.
fn tail_eta_expansion(shifts: &[Complex64], c: usize, cfg: &EvalConfig) -> Result<SeriesResult> {
    let scale = c as f64 + 1.0;
    let w: Vec<Complex64> = shifts.iter().map(|z| z / scale).collect();
    let q = w.iter().map(|x| x.norm()).fold(0.0, f64::max);
    if q >= 1.0 {
        return Err(Error::param("cutoff too small for the power-sum tail"));
    }
    let n = shifts.len() as f64;
    let budget = cfg.target_rel_error * 1e-2;
    let mut powers = w.clone();
    let mut acc = NeumaierSum::new();
    let mut error = 0.0;
    let mut terms = 0usize;
    let mut converged = true;
    let mut k = 2usize;
    loop {
        for (p, x) in powers.iter_mut().zip(&w) {
            *p *= x;
        }
        let remainder_bound = n * q.powi(k as i32) / (k as f64 * (1.0 - q));
        if remainder_bound <= budget || q == 0.0 {
            error += remainder_bound;
            break;
        }
        if k > MAX_TAIL_POWERS {
            error += remainder_bound;
            converged = false;
            break;
        }
        let rho = scaled_alt_tail(k, scale, cfg);
        terms += rho.terms_used;
        converged &= rho.converged;
        let power_sum: Complex64 = powers.iter().sum();
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let coeff = power_sum * (sign / k as f64);
        acc.add(coeff * rho.value);
        error += coeff.norm() * rho.error_estimate;
        k += 1;
    }
    let sign_c = if c.is_multiple_of(2) { 1.0 } else { -1.0 };
    let value = -acc.value() * sign_c;
    Ok(SeriesResult {
        value,
        error_estimate: error,
        terms_used: terms,
        method: Method::EtaExpansion,
        converged: converged && cfg.accepts(error, value.norm()),
    })
}

/// ρ_k = Σ_{i≥0} (−1)^i (1 + i/scale)^{−k}
fn scaled_alt_tail(k: usize, scale: f64, cfg: &EvalConfig) -> SeriesResult {
    let kf = k as f64;
    alt_sum(
        |i| {
            let t = (-kf * (i as f64 / scale).ln_1p()).exp();
            Complex64::new(if i % 2 == 0 { t } else { -t }, 0.0)
        },
        0,
        cfg,
    )
}

/// T3 = −Σ_{m>c} (−1)^{m+1} Σ_j (log(1 + z_j/m) − z_j/m), summed directly.
fn tail_paired_direct(shifts: &[Complex64], c: usize, cfg: &EvalConfig) -> SeriesResult {
    let r = alt_sum(
        |m| {
            let t: Complex64 = shifts.iter().map(|z| log1p_minus_id(z / m as f64)).sum();
            if m % 2 == 1 {
                -t
            } else {
                t
            }
        },
        c as u64 + 1,
        cfg,
    );
    SeriesResult {
        method: Method::Paired,
        ..r
    }
}

/// The regularized alternating product exp(Λ*′(0)).
pub fn reg_alt_product(spec: &ProductSpec, cfg: &EvalConfig) -> Result<SeriesResult> {
    lambda_star_deriv_zero(spec, cfg).map(SeriesResult::exp)
}

/// (π/2)^{n/2} / ∏_j Γ̃(z_j), evaluated in log space.
pub fn mizuno_rhs(spec: &ProductSpec, cfg: &EvalConfig) -> Result<SeriesResult> {
    let mut acc = NeumaierSum::new();
    let mut error = 0.0;
    let mut terms = 0;
    for z in spec.shifts() {
        let lg = log_gamma_tilde(*z, GammaTildeRoute::ClosedForm, cfg)?;
        acc.add(-lg.value);
        error += lg.error_estimate;
        terms += lg.terms_used;
    }
    let n = spec.n() as f64;
    let log_value = acc.value() + 0.5 * n * (PI / 2.0).ln();
    Ok(SeriesResult {
        value: log_value,
        error_estimate: error,
        terms_used: terms,
        method: Method::Direct,
        converged: true,
    }
    .exp())
}

/// e^{2πij/n}, j = 0..n−1.
pub fn roots_of_unity(n: usize) -> Result<Vec<Complex64>> {
    if n == 0 {
        return Err(Error::param("roots of unity need n ≥ 1"));
    }
    Ok((0..n)
        .map(|j| {
            let (s, c) = (2.0 * PI * j as f64 / n as f64).sin_cos();
            Complex64::new(c, s)
        })
        .collect())
}

/// log ∏_{k=1}^{pairs} 4k²/(4k² − 1) at each checkpoint (non-decreasing).
fn wallis_log_partials(checkpoints: &[usize]) -> Vec<f64> {
    let mut acc = 0.0f64;
    let mut comp = 0.0f64;
    let mut done = 0usize;
    let mut out = Vec::with_capacity(checkpoints.len());
    for &p in checkpoints {
        while done < p {
            done += 1;
            let k = done as f64;
            let t = -(-1.0 / (4.0 * k * k)).ln_1p();
            let y = t - comp;
            let s = acc + y;
            comp = (s - acc) - y;
            acc = s;
        }
        out.push(acc);
    }
    out
}

/// Wallis partial product ∏_{k=1}^{pairs} (2k)²/((2k−1)(2k+1)). The error
/// estimate is the leading truncation term (π/2)/(4·pairs).
pub fn wallis_partial(pairs: usize) -> Result<SeriesResult> {
    if pairs == 0 {
        return Err(Error::param("Wallis product needs at least one pair"));
    }
    let value = wallis_log_partials(&[pairs])[0].exp();
    let error_estimate = value / (4.0 * pairs as f64);
    Ok(SeriesResult {
        value: Complex64::new(value, 0.0),
        error_estimate,
        terms_used: 2 * pairs,
        method: Method::Direct,
        converged: EvalConfig::default().accepts(error_estimate, value),
    })
}

/// Wallis product with Richardson extrapolation over pairs/8 … pairs.
pub fn wallis_extrapolated(pairs: usize) -> Result<SeriesResult> {
    if pairs < 8 {
        return Err(Error::param("Wallis extrapolation needs at least 8 pairs"));
    }
    let checkpoints = [pairs / 8, pairs / 4, pairs / 2, pairs];
    let logs = wallis_log_partials(&checkpoints);
    let points: Vec<(f64, Complex64)> = checkpoints
        .iter()
        .zip(&logs)
        .map(|(&p, &l)| (p as f64, Complex64::new(l, 0.0)))
        .collect();
    let (log_value, error) = richardson_with_error(&points, 3)?;
    let value = log_value.exp();
    let error_estimate = error * value.norm();
    Ok(SeriesResult {
        value,
        error_estimate,
        terms_used: 2 * pairs,
        method: Method::Richardson,
        converged: EvalConfig::default().accepts(error_estimate, value.norm()),
    })
}

/// log of the geometric mean of the partial products P_{2M} and P_{2M+1}:
/// Σ_{m=0}^{2M} (−1)^m Σ_j log(m + z_j) − ½ Σ_j log(2M + 1 + z_j).
fn geometric_mean_log(shifts: &[Complex64], m_half: usize) -> Complex64 {
    let top = 2 * m_half;
    let mut acc = NeumaierSum::new();
    for m in 0..=top {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        for z in shifts {
            acc.add((z + m as f64).ln() * sign);
        }
    }
    for z in shifts {
        acc.add(-0.5 * (z + (top + 1) as f64).ln());
    }
    acc.value()
}

/// Geometric mean of consecutive raw partial products, an independent
/// O(1/M) check of the regularized value.
pub fn geometric_mean_oracle(spec: &ProductSpec, m_half: usize) -> Result<SeriesResult> {
    if m_half == 0 {
        return Err(Error::param("oracle needs M ≥ 1"));
    }
    let log_value = geometric_mean_log(spec.shifts(), m_half);
    let value = log_value.exp();
    let error_estimate = value.norm() * spec.n() as f64 / (8.0 * m_half as f64);
    Ok(SeriesResult {
        value,
        error_estimate,
        terms_used: (2 * m_half + 2) * spec.n(),
        method: Method::Direct,
        converged: false,
    })
}

/// The geometric-mean oracle extrapolated in 1/M over M/8, M/4, M/2, M.
pub fn geometric_mean_oracle_extrapolated(
    spec: &ProductSpec,
    m_half: usize,
) -> Result<SeriesResult> {
    if m_half < 8 {
        return Err(Error::param("extrapolated oracle needs M ≥ 8"));
    }
    let points: Vec<(f64, Complex64)> = [m_half / 8, m_half / 4, m_half / 2, m_half]
        .iter()
        .map(|&m| (m as f64, geometric_mean_log(spec.shifts(), m)))
        .collect();
    let (log_value, error) = richardson_with_error(&points, 3)?;
    let value = log_value.exp();
    let error_estimate = error * value.norm();
    Ok(SeriesResult {
        value,
        error_estimate,
        terms_used: (2 * m_half + 2) * spec.n(),
        method: Method::Richardson,
        converged: EvalConfig::default().accepts(error_estimate, value.norm()),
    })
}
