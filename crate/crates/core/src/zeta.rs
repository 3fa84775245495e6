//! Hurwitz, Riemann, Dirichlet eta and alternating Hurwitz zeta functions.
//!
//! ζ(s,z) is evaluated by shifting z upward with ζ(s,z) = ζ(s,z+1) + z^{−s}
//! and applying Euler–Maclaurin at the shifted point. The alternating
//! ζ_E(s,z) = Σ (−1)^m (m+z)^{−s} is entire in s; its canonical ("split")
//! evaluation uses ζ_E(s,z) = 2^{−s}(ζ(s,z/2) − ζ(s,(z+1)/2)) with the two
//! pole terms combined analytically so that s = 1 needs no special casing.

use std::f64::consts::LN_2;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::num::cmath::{self, compensated_sum, expm1, exprel, log1p, pow_neg};
use crate::num::{alt_sum, bernoulli_cache, contour_taylor_coeffs_with_error, ContourCoeffs};
use crate::series::{Method, SeriesResult};

/// Distance from s = 1 below which ζ(s,z) reports a pole.
pub const POLE_GUARD: f64 = 1e-8;
/// Below this distance from s = 1, η(s) switches to its Taylor expansion.
pub const ETA_SWITCH_RADIUS: f64 = 1e-3;
/// Tolerance used to recognise z ∈ {0, −1, −2, …}.
pub const SHIFT_POLE_TOL: f64 = 1e-12;

/// Upper bound on the shift threshold reached by adaptive doubling.
const MAX_SHIFT_THRESHOLD: f64 = 1e5;

/// Evaluation routes for ζ_E(s,z).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AltZetaMethod {
    /// 2^{−s}(ζ(s,z/2) − ζ(s,(z+1)/2)), valid for every s.
    Split,
    /// Accelerated alternating sum, valid for Re(s) > 0.
    Direct,
}

impl std::str::FromStr for AltZetaMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "split" => Ok(AltZetaMethod::Split),
            "direct" => Ok(AltZetaMethod::Direct),
            other => Err(Error::param(format!("unknown zeta-e method '{other}'"))),
        }
    }
}

/// The (s, z) pair of ζ(s,z) and ζ_E(s,z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaArgs {
    pub s: Complex64,
    pub z: Complex64,
}

impl ZetaArgs {
    pub fn new(s: Complex64, z: Complex64) -> Result<Self> {
        check_shift(z)?;
        Ok(ZetaArgs { s, z })
    }

    /// Inside Re(z) > 0, |z| ≤ 50, |s| ≤ 30, where results are validated.
    /// Outside it principal-branch logarithms are used on a best-effort basis.
    pub fn in_validated_domain(&self) -> bool {
        self.z.re > 0.0 && self.z.norm() <= 50.0 && self.s.norm() <= 30.0
    }
}

pub(crate) fn check_shift(z: Complex64) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::domain(format!("shift {z} is not finite")));
    }
    if cmath::is_nonpositive_integer(z, SHIFT_POLE_TOL) {
        return Err(Error::domain(format!(
            "shift {z} is a non-positive integer"
        )));
    }
    Ok(())
}

fn shift_count(z: Complex64, threshold: f64) -> usize {
    (threshold - z.re).ceil().max(0.0) as usize
}

/// w^{−s}/2 + Σ_{k=1}^{p} B_{2k}/(2k)! · (s)_{2k−1} · w^{−s−2k+1}, and the
/// magnitude of the first omitted term.
fn em_correction(s: Complex64, w: Complex64, w_pow: Complex64, p: usize) -> (Complex64, f64) {
    let bern = bernoulli_cache();
    let inv_w2 = (w * w).inv();
    let mut sum = w_pow * 0.5;
    // (s)_{2k−1} w^{−s−2k+1}, starting at k = 1
    let mut factor = s * w_pow / w;
    let mut factorial = 2.0;
    for k in 1..=p + 1 {
        let term = factor * (bern[2 * k] / factorial);
        if k > p {
            return (sum, term.norm());
        }
        sum += term;
        let a = s + (2 * k - 1) as f64;
        let b = s + (2 * k) as f64;
        factor = factor * a * b * inv_w2;
        factorial *= ((2 * k + 1) * (2 * k + 2)) as f64;
    }
    unreachable!()
}

/// Hurwitz zeta ζ(s,z) = Σ_{m≥0} (m+z)^{−s}, analytically continued in s.
pub fn hurwitz_zeta(s: Complex64, z: Complex64, cfg: &EvalConfig) -> Result<SeriesResult> {
    cfg.validate()?;
    check_shift(z)?;
    let distance = (s - 1.0).norm();
    if distance < POLE_GUARD {
        return Err(Error::Pole { distance });
    }
    let mut threshold = cfg.shift_threshold;
    loop {
        let n = shift_count(z, threshold);
        let head = compensated_sum((0..n).map(|m| pow_neg(z + m as f64, s)));
        let w = z + n as f64;
        let w_pow = pow_neg(w, s);
        let pole = w * w_pow / (s - 1.0);
        let (tail, error) = em_correction(s, w, w_pow, cfg.em_bernoulli_terms);
        let value = head + pole + tail;
        let converged = cfg.accepts(error, value.norm());
        if converged || threshold >= MAX_SHIFT_THRESHOLD || n >= cfg.max_terms {
            return Ok(SeriesResult {
                value,
                error_estimate: error,
                terms_used: n + cfg.em_bernoulli_terms,
                method: Method::EulerMaclaurin,
                converged,
            });
        }
        threshold *= 2.0;
    }
}

/// ∂ζ(s,z)/∂s at s0 from the Cauchy integral on a circle of
/// `cfg.contour_radius` about s0; the circle must exclude s = 1.
pub fn hurwitz_zeta_s_derivative(
    s0: Complex64,
    z: Complex64,
    cfg: &EvalConfig,
) -> Result<SeriesResult> {
    cfg.validate()?;
    check_shift(z)?;
    let radius = cfg.contour_radius;
    if (s0 - 1.0).norm() <= radius + POLE_GUARD {
        return Err(Error::param(format!(
            "contour disk of radius {radius} about {s0} contains the pole at s = 1"
        )));
    }
    let mut worst = 0.0f64;
    let mut all_converged = true;
    let coeffs = contour_taylor_coeffs_with_error(
        |s| {
            let r = hurwitz_zeta(s, z, cfg)?;
            worst = worst.max(r.error_estimate);
            all_converged &= r.converged;
            Ok(r.value)
        },
        s0,
        radius,
        1,
        cfg.contour_nodes,
    )?;
    Ok(derivative_result(
        &coeffs,
        worst,
        radius,
        all_converged,
        cfg,
    ))
}

fn derivative_result(
    coeffs: &ContourCoeffs,
    eval_error: f64,
    radius: f64,
    converged: bool,
    cfg: &EvalConfig,
) -> SeriesResult {
    let value = coeffs.coeffs[1];
    let error_estimate = coeffs.errors[1] + eval_error / radius;
    SeriesResult {
        value,
        error_estimate,
        terms_used: coeffs.evaluations,
        method: Method::Contour,
        converged: converged && cfg.accepts(error_estimate, value.norm()),
    }
}

/// Riemann zeta ζ(s) = ζ(s,1).
pub fn riemann_zeta(s: Complex64, cfg: &EvalConfig) -> Result<SeriesResult> {
    hurwitz_zeta(s, Complex64::new(1.0, 0.0), cfg)
}

/// Taylor coefficients of η about s = 1, from the Cauchy integral of
/// (1 − 2^{1−s})ζ(s) on |s − 1| = 1/2 where that product is harmless.
fn eta_taylor_at_one() -> &'static ContourCoeffs {
    static COEFFS: OnceLock<ContourCoeffs> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let cfg = EvalConfig::default();
        contour_taylor_coeffs_with_error(
            |s| eta_product_form(s, &cfg).map(|r| r.value),
            Complex64::new(1.0, 0.0),
            0.5,
            12,
            64,
        )
        .expect("eta Taylor coefficients on the default contour")
    })
}

fn eta_product_form(s: Complex64, cfg: &EvalConfig) -> Result<SeriesResult> {
    // 1 − 2^{1−s} = −expm1((1−s) log 2)
    let factor = -expm1((1.0 - s) * LN_2);
    let zeta = riemann_zeta(s, cfg)?;
    Ok(zeta.map(|v| v * factor, factor.norm()))
}

/// Number of Taylor terms used for η inside the switch radius.
const ETA_TAYLOR_TERMS: usize = 8;

/// Dirichlet eta η(s) = Σ_{m≥1} (−1)^{m+1} m^{−s} = (1 − 2^{1−s})ζ(s).
pub fn dirichlet_eta(s: Complex64, cfg: &EvalConfig) -> Result<SeriesResult> {
    cfg.validate()?;
    let h = s - 1.0;
    if h.norm() >= ETA_SWITCH_RADIUS {
        return eta_product_form(s, cfg);
    }
    let taylor = eta_taylor_at_one();
    let value = taylor.coeffs[..ETA_TAYLOR_TERMS]
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, c| acc * h + c);
    let coeff_error: f64 = taylor.errors[..ETA_TAYLOR_TERMS]
        .iter()
        .enumerate()
        .map(|(k, e)| e * h.norm().powi(k as i32))
        .sum();
    let truncation =
        taylor.coeffs[ETA_TAYLOR_TERMS].norm() * h.norm().powi(ETA_TAYLOR_TERMS as i32);
    let error_estimate = coeff_error + truncation;
    Ok(SeriesResult {
        value,
        error_estimate,
        terms_used: ETA_TAYLOR_TERMS,
        method: Method::Contour,
        converged: cfg.accepts(error_estimate, value.norm()),
    })
}

/// η′(0) by contour differentiation of [`dirichlet_eta`].
pub fn eta_prime_zero(cfg: &EvalConfig) -> Result<SeriesResult> {
    cfg.validate()?;
    let mut worst = 0.0f64;
    let mut all_converged = true;
    let coeffs = contour_taylor_coeffs_with_error(
        |s| {
            let r = dirichlet_eta(s, cfg)?;
            worst = worst.max(r.error_estimate);
            all_converged &= r.converged;
            Ok(r.value)
        },
        Complex64::new(0.0, 0.0),
        cfg.contour_radius,
        1,
        cfg.contour_nodes,
    )?;
    Ok(derivative_result(
        &coeffs,
        worst,
        cfg.contour_radius,
        all_converged,
        cfg,
    ))
}

/// Alternating Hurwitz zeta ζ_E(s,z) = Σ_{m≥0} (−1)^m (m+z)^{−s}.
pub fn alt_hurwitz_zeta(
    s: Complex64,
    z: Complex64,
    method: AltZetaMethod,
    cfg: &EvalConfig,
) -> Result<SeriesResult> {
    cfg.validate()?;
    check_shift(z)?;
    match method {
        AltZetaMethod::Split => Ok(alt_zeta_split(s, z, cfg)),
        AltZetaMethod::Direct => {
            if s.re <= 0.0 {
                return Err(Error::domain(format!(
                    "direct alternating sum needs Re(s) > 0, got s = {s}"
                )));
            }
            Ok(alt_sum(
                |m| {
                    let t = pow_neg(z + m as f64, s);
                    if m % 2 == 0 {
                        t
                    } else {
                        -t
                    }
                },
                0,
                cfg,
            ))
        }
    }
}

fn alt_zeta_split(s: Complex64, z: Complex64, cfg: &EvalConfig) -> SeriesResult {
    let a = z * 0.5;
    let b = a + 0.5;
    let one_minus_s = 1.0 - s;
    let scale = (-s * LN_2).exp();
    let mut threshold = cfg.shift_threshold;
    loop {
        let n = shift_count(a, threshold);
        let head =
            compensated_sum((0..n).map(|m| pow_neg(a + m as f64, s) - pow_neg(b + m as f64, s)));
        let big_a = a + n as f64;
        let big_b = b + n as f64;
        // (A^{1−s} − B^{1−s})/(s−1) = −B^{1−s} · d · exprel((1−s)d), d = log(A/B)
        let d = -log1p((big_a * 2.0).inv());
        let b_pow = (one_minus_s * big_b.ln()).exp();
        let pole_difference = -b_pow * d * exprel(one_minus_s * d);
        let (tail_a, err_a) = em_correction(s, big_a, pow_neg(big_a, s), cfg.em_bernoulli_terms);
        let (tail_b, err_b) = em_correction(s, big_b, pow_neg(big_b, s), cfg.em_bernoulli_terms);
        let value = scale * (head + pole_difference + tail_a - tail_b);
        let error = scale.norm() * (err_a + err_b);
        let converged = cfg.accepts(error, value.norm());
        if converged || threshold >= MAX_SHIFT_THRESHOLD || n >= cfg.max_terms {
            return SeriesResult {
                value,
                error_estimate: error,
                terms_used: 2 * (n + cfg.em_bernoulli_terms),
                method: Method::EulerMaclaurin,
                converged,
            };
        }
        threshold *= 2.0;
    }
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use crate::num::{richardson_extrapolate_at, NeumaierSum};
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn hurwitz_basel() {
        let r = hurwitz_zeta(c(2.0), c(1.0), &cfg()).unwrap();
        assert!(r.converged);
        assert!((r.value.re - 1.6449340668482264).abs() < 1e-15);
        assert!(r.value.im.abs() < 1e-16);
        // direct compensated sum with an integral tail, independent of the shift scheme
        let n = 1_000_000u64;
        let mut acc = NeumaierSum::new();
        for m in (1..=n).rev() {
            acc.add(c(1.0 / (m as f64 * m as f64)));
        }
        let nf = n as f64;
        let oracle = acc.value().re + 1.0 / nf - 0.5 / (nf * nf) + 1.0 / (6.0 * nf * nf * nf);
        assert!((r.value.re - oracle).abs() < 1e-14);
    }

    #[test]
    fn hurwitz_at_zero_is_half_minus_z() {
        let r = hurwitz_zeta(c(0.0), c(0.7), &cfg()).unwrap();
        assert!((r.value - c(-0.2)).norm() < 1e-14, "{}", r.value);
        let z = Complex64::new(1.5, -2.0);
        let r = hurwitz_zeta(c(0.0), z, &cfg()).unwrap();
        assert!((r.value - (0.5 - z)).norm() < 1e-13);
    }

    #[test]
    fn hurwitz_shift_by_one() {
        let a = hurwitz_zeta(c(2.0), c(1.0), &cfg()).unwrap().value;
        let b = hurwitz_zeta(c(2.0), c(2.0), &cfg()).unwrap().value;
        assert!((a - b - 1.0).norm() < 1e-15);
    }

    #[test]
    fn hurwitz_errors() {
        assert!(matches!(
            hurwitz_zeta(c(1.0), c(1.0), &cfg()),
            Err(Error::Pole { .. })
        ));
        assert!(matches!(
            hurwitz_zeta(Complex64::new(1.0, 1e-9), c(1.0), &cfg()),
            Err(Error::Pole { .. })
        ));
        assert!(hurwitz_zeta(c(1.0 + 1e-6), c(1.0), &cfg()).is_ok());
        assert!(matches!(
            hurwitz_zeta(c(2.0), c(0.0), &cfg()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            hurwitz_zeta(c(2.0), c(-3.0), &cfg()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn riemann_values() {
        let z = |s: f64| riemann_zeta(c(s), &cfg()).unwrap().value;
        assert!((z(0.0) - c(-0.5)).norm() < 1e-15);
        assert!((z(2.0) - c(PI * PI / 6.0)).norm() < 1e-15);
        assert!((z(4.0) - c(1.082323233711138)).norm() < 1e-15);
        assert!((z(4.0) - c(PI.powi(4) / 90.0)).norm() < 1e-15);
        // ζ(−1) = −1/12
        assert!((z(-1.0) - c(-1.0 / 12.0)).norm() < 1e-14);
    }

    #[test]
    fn zeta_prime_at_zero() {
        let d = hurwitz_zeta_s_derivative(c(0.0), c(1.0), &cfg()).unwrap();
        assert!(d.converged, "{d:?}");
        assert!((d.value - c(-0.9189385332046727)).norm() < 1e-13);
        assert!((d.value.re + 0.5 * (2.0 * PI).ln()).abs() < 1e-13);
    }

    #[test]
    fn classical_lerch_at_half_and_two() {
        let d1 = hurwitz_zeta_s_derivative(c(0.0), c(1.0), &cfg())
            .unwrap()
            .value;
        let dh = hurwitz_zeta_s_derivative(c(0.0), c(0.5), &cfg())
            .unwrap()
            .value;
        assert!(((dh - d1).exp() - c(PI.sqrt())).norm() < 1e-8);
        // ζ′(0,1/2) = −½ log 2
        assert!((dh - c(-0.5 * LN_2)).norm() < 1e-13);
        let d2 = hurwitz_zeta_s_derivative(c(0.0), c(2.0), &cfg())
            .unwrap()
            .value;
        // Γ(2) = 1, so ζ′(0,2) = ζ′(0,1)
        assert!((d2 - d1).norm() < 1e-13);
        assert!((d2 - d1).exp().re - 1.0 < 1e-13);
    }

    #[test]
    fn derivative_rejects_disk_through_pole() {
        assert!(matches!(
            hurwitz_zeta_s_derivative(c(0.7), c(1.0), &cfg()),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn eta_values() {
        let e = |s: f64| dirichlet_eta(c(s), &cfg()).unwrap();
        assert!((e(1.0).value - c(LN_2)).norm() < 1e-15);
        assert!(e(1.0).converged);
        assert!((e(0.0).value - c(0.5)).norm() < 1e-15);
        assert!((e(2.0).value - c(PI * PI / 12.0)).norm() < 1e-15);
        // η(1) against the accelerated Mercator sum
        let mercator = alt_sum(
            |m| c(if m % 2 == 1 { 1.0 } else { -1.0 } / m as f64),
            1,
            &cfg(),
        );
        assert!((e(1.0).value - mercator.value).norm() < 1e-14);
    }

    #[test]
    fn eta_is_continuous_across_switch() {
        for s in [
            1.0 + ETA_SWITCH_RADIUS * 0.999,
            1.0 + ETA_SWITCH_RADIUS * 1.001,
        ] {
            let inner = dirichlet_eta(c(s), &cfg()).unwrap().value;
            let direct = alt_sum(
                |m| c(if m % 2 == 1 { 1.0 } else { -1.0 } * (m as f64).powf(-s)),
                1,
                &cfg(),
            )
            .value;
            assert!((inner - direct).norm() < 1e-14, "s={s}");
        }
        let s = Complex64::new(1.0, 5e-4);
        let inner = dirichlet_eta(s, &cfg()).unwrap().value;
        let direct = alt_hurwitz_zeta(s, c(1.0), AltZetaMethod::Direct, &cfg())
            .unwrap()
            .value;
        assert!((inner - direct).norm() < 1e-14);
    }

    #[test]
    fn eta_prime_at_zero() {
        let d = eta_prime_zero(&cfg()).unwrap();
        assert!(d.converged);
        assert!(
            (d.value - c(0.22579135264472743)).norm() < 1e-13,
            "{}",
            d.value
        );
        assert!((d.value.re - 0.5 * (PI / 2.0).ln()).abs() < 1e-13);
        // product rule: d/ds[(1 − 2^{1−s})ζ(s)] at 0 = 2 log 2 · ζ(0) − ζ′(0)
        let z0 = riemann_zeta(c(0.0), &cfg()).unwrap().value;
        let zp = hurwitz_zeta_s_derivative(c(0.0), c(1.0), &cfg())
            .unwrap()
            .value;
        let assembled = 2.0 * LN_2 * z0 - zp;
        assert!((d.value - assembled).norm() < 1e-12);
        // central finite difference
        let h = 1e-5;
        let fd = (dirichlet_eta(c(h), &cfg()).unwrap().value
            - dirichlet_eta(c(-h), &cfg()).unwrap().value)
            / (2.0 * h);
        assert!((d.value - fd).norm() < 1e-9);
    }

    #[test]
    fn alt_zeta_examples() {
        for method in [AltZetaMethod::Split, AltZetaMethod::Direct] {
            let v = alt_hurwitz_zeta(c(2.0), c(1.0), method, &cfg())
                .unwrap()
                .value;
            assert!((v - c(PI * PI / 12.0)).norm() < 1e-15, "{method:?}");
            let v = alt_hurwitz_zeta(c(1.0), c(1.0), method, &cfg())
                .unwrap()
                .value;
            assert!((v - c(LN_2)).norm() < 1e-15, "{method:?}");
        }
        let v = alt_hurwitz_zeta(c(0.0), c(3.3), AltZetaMethod::Split, &cfg())
            .unwrap()
            .value;
        assert!((v - c(0.5)).norm() < 1e-14);
        // ζ_E(1, 1/2) = 2(1 − 1/3 + 1/5 − …) = π/2
        let v = alt_hurwitz_zeta(c(1.0), c(0.5), AltZetaMethod::Split, &cfg())
            .unwrap()
            .value;
        assert!((v - c(PI / 2.0)).norm() < 1e-15);
    }

    #[test]
    fn alt_zeta_errors() {
        assert!(matches!(
            alt_hurwitz_zeta(c(0.0), c(1.0), AltZetaMethod::Direct, &cfg()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            alt_hurwitz_zeta(c(2.0), c(-1.0), AltZetaMethod::Split, &cfg()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn alt_zeta_reference_value() {
        // mpmath, 40 digits
        let want = Complex64::new(-2.080665416242487291644660, -0.4496445072961232363110127);
        let s = Complex64::new(0.25, 3.0);
        for method in [AltZetaMethod::Split, AltZetaMethod::Direct] {
            let v = alt_hurwitz_zeta(s, c(0.3), method, &cfg()).unwrap().value;
            assert!(rel(v, want) < 1e-13, "{method:?}: {v}");
        }
    }

    #[test]
    fn route_agreement_grid() {
        let zs = [c(0.3), c(1.0), c(2.5), Complex64::new(1.0, 2.0)];
        let mut worst = 0.0f64;
        for z in zs {
            for i in 0..=10 {
                for j in 0..=6 {
                    let s = Complex64::new(0.25 + 5.75 * i as f64 / 10.0, -3.0 + j as f64);
                    let split = alt_hurwitz_zeta(s, z, AltZetaMethod::Split, &cfg())
                        .unwrap()
                        .value;
                    let direct = alt_hurwitz_zeta(s, z, AltZetaMethod::Direct, &cfg())
                        .unwrap()
                        .value;
                    worst = worst.max(rel(direct, split));
                }
            }
        }
        assert!(worst <= 1e-11, "worst relative difference {worst:e}");
    }

    #[test]
    fn pole_cancellation_is_smooth() {
        let z = Complex64::new(0.7, 0.4);
        let at_one = alt_hurwitz_zeta(c(1.0), z, AltZetaMethod::Split, &cfg())
            .unwrap()
            .value;
        for sign in [1.0, -1.0] {
            let points: Vec<(f64, Complex64)> = (4..=8)
                .map(|k| {
                    let h = 10f64.powi(-k);
                    let v = alt_hurwitz_zeta(c(1.0 + sign * h), z, AltZetaMethod::Split, &cfg())
                        .unwrap()
                        .value;
                    (1.0 / h, v)
                })
                .collect();
            let extrapolated = richardson_extrapolate_at(&points, 2).unwrap();
            assert!((extrapolated - at_one).norm() < 1e-9);
        }
    }

    #[test]
    fn validated_domain_flag() {
        assert!(ZetaArgs::new(c(2.0), c(1.0)).unwrap().in_validated_domain());
        assert!(!ZetaArgs::new(c(2.0), c(-0.5))
            .unwrap()
            .in_validated_domain());
        assert!(ZetaArgs::new(c(2.0), c(-2.0)).is_err());
    }

    fn complex_in(
        re: std::ops::Range<f64>,
        im: std::ops::Range<f64>,
    ) -> impl Strategy<Value = Complex64> {
        (re, im).prop_map(|(a, b)| Complex64::new(a, b))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn alt_zeta_recurrence(s in complex_in(-1.0..6.0, -4.0..4.0), z in complex_in(0.1..5.0, -3.0..3.0)) {
            let a = alt_hurwitz_zeta(s, z, AltZetaMethod::Split, &cfg()).unwrap().value;
            let b = alt_hurwitz_zeta(s, z + 1.0, AltZetaMethod::Split, &cfg()).unwrap().value;
            let want = pow_neg(z, s);
            // both sides can be much smaller than the summands
            let scale = a.norm().max(b.norm()).max(want.norm());
            let err = (a + b - want).norm() / scale;
            prop_assert!(err <= 1e-12, "{err}");
        }

        #[test]
        fn alt_zeta_recurrence_negative_s(s in complex_in(-3.0..-1.0, -4.0..4.0), z in complex_in(0.1..5.0, -3.0..3.0)) {
            // the shifted head grows like threshold^{1−Re s}, costing digits
            let a = alt_hurwitz_zeta(s, z, AltZetaMethod::Split, &cfg()).unwrap().value;
            let b = alt_hurwitz_zeta(s, z + 1.0, AltZetaMethod::Split, &cfg()).unwrap().value;
            let want = pow_neg(z, s);
            let scale = a.norm().max(b.norm()).max(want.norm());
            let err = (a + b - want).norm() / scale;
            prop_assert!(err <= 1e-9, "{err}");
        }

        #[test]
        fn hurwitz_recurrence(s in complex_in(-1.0..6.0, -4.0..4.0), z in complex_in(0.1..5.0, -3.0..3.0)) {
            prop_assume!((s - 1.0).norm() > 1e-3);
            let a = hurwitz_zeta(s, z, &cfg()).unwrap().value;
            let b = hurwitz_zeta(s, z + 1.0, &cfg()).unwrap().value;
            let want = pow_neg(z, s);
            let scale = a.norm().max(b.norm()).max(want.norm());
            let err = (a - b - want).norm() / scale;
            prop_assert!(err <= 1e-12, "{err}");
        }

        #[test]
        fn hurwitz_recurrence_negative_s(s in complex_in(-3.0..-1.0, -4.0..4.0), z in complex_in(0.1..5.0, -3.0..3.0)) {
            let a = hurwitz_zeta(s, z, &cfg()).unwrap().value;
            let b = hurwitz_zeta(s, z + 1.0, &cfg()).unwrap().value;
            let want = pow_neg(z, s);
            let scale = a.norm().max(b.norm()).max(want.norm());
            let err = (a - b - want).norm() / scale;
            prop_assert!(err <= 1e-9, "{err}");
        }

        #[test]
        fn eta_matches_factorised_zeta(s in complex_in(-3.0..6.0, -4.0..4.0)) {
            prop_assume!((s - 1.0).norm() > 1e-2);
            let eta = dirichlet_eta(s, &cfg()).unwrap().value;
            let zeta = riemann_zeta(s, &cfg()).unwrap().value;
            let factor = 1.0 - (( 1.0 - s) * LN_2).exp();
            let want = factor * zeta;
            prop_assert!(rel(eta, want) <= 1e-13, "{}", rel(eta, want));
        }
    }
}
