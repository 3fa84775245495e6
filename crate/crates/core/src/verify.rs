//! Identity checks: each compares a regularized product against its closed
//! form and reports absolute and relative error against a tolerance.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::gamma::{classical_log_gamma, log_gamma_tilde, GammaTildeRoute};
use crate::product::{
    lambda_star_deriv_zero_with, mizuno_rhs, reg_alt_product, roots_of_unity, wallis_extrapolated,
    wallis_partial, Cutoff, ProductSpec, TailMethod,
};
use crate::zeta::hurwitz_zeta_s_derivative;

/// Below this |rhs| the comparison switches from relative to absolute error.
pub const ABSOLUTE_SWITCH: f64 = 1e-8;
/// Threshold for the cutoff, multiplicativity and tail-method properties.
pub const PROPERTY_TOL: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    Mizuno,
    Lerch,
    LerchQi,
    KurokawaWakayama,
    Wallis,
    ClassicalLerch,
}

impl Identity {
    pub fn as_str(self) -> &'static str {
        match self {
            Identity::Mizuno => "mizuno",
            Identity::Lerch => "lerch",
            Identity::LerchQi => "lerch_qi",
            Identity::KurokawaWakayama => "kurokawa_wakayama",
            Identity::Wallis => "wallis",
            Identity::ClassicalLerch => "classical_lerch",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: Identity,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub pass: bool,
    /// Both sides were evaluated to their requested accuracy.
    pub converged: bool,
    pub metadata: BTreeMap<String, String>,
}

impl VerificationReport {
    pub fn compare(identity: Identity, lhs: Complex64, rhs: Complex64, tol: f64) -> Self {
        let abs_err = (lhs - rhs).norm();
        let rel_err = if rhs.norm() > 0.0 {
            abs_err / rhs.norm()
        } else {
            f64::INFINITY
        };
        let measured = if rhs.norm() < ABSOLUTE_SWITCH {
            abs_err
        } else {
            rel_err
        };
        VerificationReport {
            identity,
            lhs,
            rhs,
            abs_err,
            rel_err,
            tol,
            pass: measured.is_finite() && measured <= tol,
            converged: true,
            metadata: BTreeMap::new(),
        }
    }

    fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.metadata.insert(key.to_string(), value.to_string());
        self
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::param(format!(
            "tolerance must be positive, got {tol}"
        )))
    }
}

fn format_shifts(shifts: &[Complex64]) -> String {
    let parts: Vec<String> = shifts.iter().map(|z| format!("{z}")).collect();
    parts.join(";")
}

/// Regularized product of `spec` against (π/2)^{n/2} / ∏ Γ̃(z_j).
pub fn verify_mizuno(spec: &ProductSpec, tol: f64, cfg: &EvalConfig) -> Result<VerificationReport> {
    mizuno_report(Identity::Mizuno, spec, tol, cfg)
}

fn mizuno_report(
    identity: Identity,
    spec: &ProductSpec,
    tol: f64,
    cfg: &EvalConfig,
) -> Result<VerificationReport> {
    check_tol(tol)?;
    let deriv = lambda_star_deriv_zero_with(spec, cfg, TailMethod::EtaExpansion)?;
    let lhs = deriv.total.exp();
    let rhs = mizuno_rhs(spec, cfg)?;
    let mut report = VerificationReport::compare(identity, lhs.value, rhs.value, tol)
        .with("n", spec.n())
        .with("shifts", format_shifts(spec.shifts()))
        .with("cutoff", deriv.cutoff)
        .with("tail_method", deriv.tail_method.as_str())
        .with("tail_terms", deriv.tail_terms)
        .with("lhs_error_estimate", lhs.error_estimate)
        .with("rhs_route", GammaTildeRoute::ClosedForm.as_str())
        .with("branch_flag", deriv.branch_flag)
        .with("validated_domain", spec.in_validated_domain());
    for (name, piece) in ["t1", "t2", "t3", "t4"].iter().zip(deriv.pieces) {
        report = report.with(name, piece);
    }
    report.converged = lhs.converged && rhs.converged;
    Ok(report)
}

/// ∏ (m + x)^{(−1)^m} = √(π/2) / Γ̃(x).
pub fn verify_lerch(x: Complex64, tol: f64, cfg: &EvalConfig) -> Result<VerificationReport> {
    mizuno_report(Identity::Lerch, &ProductSpec::new(vec![x])?, tol, cfg)
}

/// ∏ ((m + x)² + y²)^{(−1)^m} = (π/2) / (Γ̃(x + iy) Γ̃(x − iy)).
pub fn verify_lerch_qi(x: f64, y: f64, tol: f64, cfg: &EvalConfig) -> Result<VerificationReport> {
    let spec = ProductSpec::new(vec![Complex64::new(x, y), Complex64::new(x, -y)])?;
    let report = mizuno_report(Identity::LerchQi, &spec, tol, cfg)?;
    let imag = report.lhs.im;
    Ok(report.with("lhs_imag", imag))
}

/// Largest relative deviation of ∏_j (m + x − ζ^j y) from (m + x)^n − y^n
/// over m = 0..=m_max.
pub fn root_product_identity_error(
    n: usize,
    x: Complex64,
    y: Complex64,
    m_max: usize,
) -> Result<f64> {
    let roots = roots_of_unity(n)?;
    let mut worst = 0.0f64;
    for m in 0..=m_max {
        let base = x + m as f64;
        let lhs: Complex64 = roots.iter().map(|r| base - r * y).product();
        let rhs = base.powu(n as u32) - y.powu(n as u32);
        let scale = rhs
            .norm()
            .max(base.norm().powi(n as i32))
            .max(f64::MIN_POSITIVE);
        worst = worst.max((lhs - rhs).norm() / scale);
    }
    Ok(worst)
}

/// Relative tolerance for the root-product polynomial identity.
pub const ROOT_PRODUCT_TOL: f64 = 1e-12;

/// ∏ ((m + x)^n − y^n)^{(−1)^m} = (π/2)^{n/2} / ∏_j Γ̃(x − ζ^j y), with the
/// shifts x − ζ^j y built from the n-th roots of unity. The report passes
/// only if the polynomial identity behind the shift construction also holds.
pub fn kurokawa_wakayama(
    n: usize,
    x: Complex64,
    y: Complex64,
    tol: f64,
    cfg: &EvalConfig,
) -> Result<VerificationReport> {
    let roots = roots_of_unity(n)?;
    let shifts: Vec<Complex64> = roots.iter().map(|r| x - r * y).collect();
    let spec = ProductSpec::new(shifts)?;
    let poly = root_product_identity_error(n, x, y, 5)?;
    let mut report = mizuno_report(Identity::KurokawaWakayama, &spec, tol, cfg)?
        .with("x", x)
        .with("y", y)
        .with("poly_identity_max_rel_err", poly)
        .with("poly_identity_pass", poly <= ROOT_PRODUCT_TOL);
    report.pass &= poly <= ROOT_PRODUCT_TOL;
    Ok(report)
}

/// Extrapolated Wallis product against π/2.
pub fn verify_wallis(pairs: usize, tol: f64) -> Result<VerificationReport> {
    check_tol(tol)?;
    let extrapolated = wallis_extrapolated(pairs)?;
    let raw = wallis_partial(pairs)?;
    let mut report = VerificationReport::compare(
        Identity::Wallis,
        extrapolated.value,
        Complex64::new(PI / 2.0, 0.0),
        tol,
    )
    .with("pairs", pairs)
    .with("factors", 2 * pairs)
    .with("raw_partial", raw.value.re)
    .with("raw_abs_err", (raw.value.re - PI / 2.0).abs())
    .with("extrapolation_error_estimate", extrapolated.error_estimate);
    report.converged = extrapolated.error_estimate <= tol;
    Ok(report)
}

/// The regularized ∏_{m≥0} (m + z) = exp(−ζ′(0,z)) against √(2π)/Γ(z).
/// Metadata carries exp(ζ′(0,z) − ζ′(0)), which should reproduce Γ(z), and
/// ζ′(0) itself.
pub fn classical_lerch_check(
    z: Complex64,
    tol: f64,
    cfg: &EvalConfig,
) -> Result<VerificationReport> {
    check_tol(tol)?;
    if z.re <= 0.0 {
        return Err(Error::domain("classical Lerch check needs Re(z) > 0"));
    }
    let dz = hurwitz_zeta_s_derivative(Complex64::new(0.0, 0.0), z, cfg)?;
    let d1 = hurwitz_zeta_s_derivative(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), cfg)?;
    let log_gamma = classical_log_gamma(z)?;
    let lhs = (-dz.value).exp();
    let rhs = (0.5 * (2.0 * PI).ln() - log_gamma).exp();
    let gamma_from_zeta = (dz.value - d1.value).exp();
    let gamma = log_gamma.exp();
    let gamma_rel_err = (gamma_from_zeta - gamma).norm() / gamma.norm();
    let zeta_prime_zero_err = (d1.value.re + 0.5 * (2.0 * PI).ln()).abs() + d1.value.im.abs();
    let mut report = VerificationReport::compare(Identity::ClassicalLerch, lhs, rhs, tol)
        .with("z", z)
        .with("gamma_from_zeta", gamma_from_zeta)
        .with("gamma", gamma)
        .with("gamma_rel_err", gamma_rel_err)
        .with("zeta_prime_zero", d1.value.re)
        .with("zeta_prime_zero_abs_err", zeta_prime_zero_err);
    report.converged = dz.converged && d1.converged;
    Ok(report)
}

/// Γ̃(z) recovered from the regularized single-shift product, for
/// cross-checking the closed form.
pub fn gamma_tilde_from_product(z: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    let p = reg_alt_product(&ProductSpec::new(vec![z])?, cfg)?;
    Ok(Complex64::new((PI / 2.0).sqrt(), 0.0) / p.value)
}

/// One randomized case of the sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepCase {
    pub index: usize,
    pub shifts: Vec<Complex64>,
    pub report: VerificationReport,
    /// Largest deviation of Λ*′(0) over cutoffs auto, auto+10, auto+50.
    pub cutoff_spread: f64,
    /// |Λ*′(0; a ∪ b) − Λ*′(0; a) − Λ*′(0; b)| with a, b the two halves.
    pub multiplicativity_err: f64,
    /// Difference between the two tail methods.
    pub tail_method_err: f64,
    /// All three properties within [`PROPERTY_TOL`] (relative to max(1, |Λ*′(0)|)).
    pub properties_pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepOutcome {
    pub seed: u64,
    pub tol: f64,
    pub cases: Vec<SweepCase>,
}

impl SweepOutcome {
    pub fn passed(&self) -> usize {
        self.cases
            .iter()
            .filter(|c| c.report.pass && c.properties_pass)
            .count()
    }

    pub fn all_pass(&self) -> bool {
        self.passed() == self.cases.len()
    }

    pub fn max_property_err(&self) -> f64 {
        self.cases
            .iter()
            .map(|c| {
                c.cutoff_spread
                    .max(c.multiplicativity_err)
                    .max(c.tail_method_err)
            })
            .fold(0.0, f64::max)
    }
}

/// Shifts for the randomized sweep: n ∈ 1..=4, Re z ∈ [0.2, 5], |Im z| ≤ 5.
pub fn sweep_specs(seed: u64, cases: usize) -> Vec<Vec<Complex64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..cases)
        .map(|_| {
            let n = rng.gen_range(1..=4);
            (0..n)
                .map(|_| Complex64::new(rng.gen_range(0.2..=5.0), rng.gen_range(-5.0..=5.0)))
                .collect()
        })
        .collect()
}

fn sweep_case(
    index: usize,
    shifts: Vec<Complex64>,
    tol: f64,
    cfg: &EvalConfig,
) -> Result<SweepCase> {
    let spec = ProductSpec::new(shifts.clone())?;
    let report = verify_mizuno(&spec, tol, cfg)?;
    let eta = TailMethod::EtaExpansion;
    let base = lambda_star_deriv_zero_with(&spec, cfg, eta)?.total.value;
    let scale = base.norm().max(1.0);
    let auto = spec.resolved_cutoff();

    let mut cutoff_spread = 0.0f64;
    for extra in [10, 50] {
        let moved = spec.clone().with_cutoff(Cutoff::Explicit(auto + extra))?;
        let v = lambda_star_deriv_zero_with(&moved, cfg, eta)?.total.value;
        cutoff_spread = cutoff_spread.max((v - base).norm());
    }

    let (a, b) = if shifts.len() >= 2 {
        let mid = shifts.len() / 2;
        (shifts[..mid].to_vec(), shifts[mid..].to_vec())
    } else {
        (shifts.clone(), shifts.clone())
    };
    let sa = ProductSpec::new(a)?;
    let sb = ProductSpec::new(b)?;
    let joint = lambda_star_deriv_zero_with(&sa.concat(&sb)?, cfg, eta)?
        .total
        .value;
    let parts = lambda_star_deriv_zero_with(&sa, cfg, eta)?.total.value
        + lambda_star_deriv_zero_with(&sb, cfg, eta)?.total.value;
    let multiplicativity_err = (joint - parts).norm();

    let paired = lambda_star_deriv_zero_with(&spec, cfg, TailMethod::PairedDirect)?
        .total
        .value;
    let tail_method_err = (paired - base).norm();

    let properties_pass =
        cutoff_spread.max(multiplicativity_err).max(tail_method_err) <= PROPERTY_TOL * scale;
    Ok(SweepCase {
        index,
        shifts,
        report,
        cutoff_spread,
        multiplicativity_err,
        tail_method_err,
        properties_pass,
    })
}

/// The randomized identity sweep. Cases are generated sequentially from the
/// seed, evaluated in parallel and returned in case order.
pub fn mizuno_sweep(seed: u64, cases: usize, tol: f64, cfg: &EvalConfig) -> Result<SweepOutcome> {
    check_tol(tol)?;
    cfg.validate()?;
    let specs = sweep_specs(seed, cases);
    let results = specs
        .into_par_iter()
        .enumerate()
        .map(|(i, shifts)| {
            sweep_case(i, shifts, tol, cfg).map(|mut case| {
                case.report.metadata.insert("seed".into(), seed.to_string());
                case.report.metadata.insert("case".into(), i.to_string());
                case
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepOutcome {
        seed,
        tol,
        cases: results,
    })
}

/// Γ̃ by the closed form; used when reports need an independent RHS value.
pub fn closed_gamma_tilde(z: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    Ok(log_gamma_tilde(z, GammaTildeRoute::ClosedForm, cfg)?
        .value
        .exp())
}
