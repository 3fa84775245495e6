//! Acceptance criteria, one pass/fail line each. Exits nonzero if any fail.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};
use std::time::Instant;

use regprod::verify::root_product_identity_error;
use regprod::{
    alt_hurwitz_zeta, dirichlet_eta, eta_prime_zero, gamma_tilde,
    geometric_mean_oracle_extrapolated, hurwitz_zeta_s_derivative, kurokawa_wakayama,
    log_gamma_tilde, mizuno_sweep, mod_euler_const, psi_tilde, psi_tilde_n, reg_alt_product,
    wallis_extrapolated, wallis_partial, AltZetaMethod, Complex64, EvalConfig, GammaTildeRoute,
    ProductSpec,
};
use serde_json::Value;

type Check = Box<dyn Fn() -> Outcome>;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

fn cli_json(args: &[&str]) -> (i32, Value) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let code = regprod_cli::run_with(full, &mut out, &mut err);
    let doc = serde_json::from_slice(&out).unwrap_or(Value::Null);
    (code, doc)
}

fn first_value(doc: &Value) -> Complex64 {
    let v = &doc["results"][0]["value"];
    Complex64::new(
        v[0].as_f64().unwrap_or(f64::NAN),
        v[1].as_f64().unwrap_or(f64::NAN),
    )
}

fn gamma_tilde_at_one() -> Outcome {
    let start = Instant::now();
    let (code_c, closed) = cli_json(&["eval", "gamma-tilde", "--z", "1"]);
    let (code_p, product) = cli_json(&["eval", "gamma-tilde", "--z", "1", "--route", "product"]);
    let secs = start.elapsed().as_secs_f64();
    let want = c(FRAC_PI_2);
    let ec = rel(first_value(&closed), want);
    let ep = rel(first_value(&product), want);
    let pairs = &product["request"]["params"]["pairs"];
    outcome(
        code_c == 0 && code_p == 0 && ec <= 1e-12 && ep <= 1e-6 && pairs == 10_000 && secs < 1.0,
        format!("closed rel {ec:.1e} (≤1e-12), product rel {ep:.1e} (≤1e-6, {pairs} pairs), {secs:.3} s (<1 s)"),
    )
}

fn mizuno_suite() -> Outcome {
    let start = Instant::now();
    let (code, doc) = cli_json(&["verify", "suite", "--seed", "42", "--cases", "100"]);
    let secs = start.elapsed().as_secs_f64();
    let passed = doc["summary"]["passed"].as_u64().unwrap_or(0);
    let total = doc["summary"]["total"].as_u64().unwrap_or(0);
    let worst = doc["results"]
        .as_array()
        .map(|rs| {
            rs.iter()
                .filter_map(|r| r["rel_err"].as_f64())
                .fold(0.0, f64::max)
        })
        .unwrap_or(f64::NAN);
    let tol = doc["results"][0]["tol"].as_f64().unwrap_or(f64::NAN);
    outcome(
        code == 0 && passed == 100 && total == 100 && tol == 1e-8 && secs < 60.0,
        format!(
            "{passed}/{total} pass at tol {tol:e}, worst rel_err {worst:.1e}, {secs:.2} s (<60 s)"
        ),
    )
}

fn wallis() -> Outcome {
    let err = |pairs: usize| (wallis_partial(pairs).unwrap().value.re - FRAC_PI_2).abs();
    let ms = [1_000, 2_000, 4_000, 8_000, 16_000];
    let ratios: Vec<f64> = ms.windows(2).map(|w| err(w[0]) / err(w[1])).collect();
    let ratios_ok = ratios.iter().all(|r| (r - 2.0).abs() <= 0.2);
    let pairs = 50_000;
    let ex = wallis_extrapolated(pairs).unwrap();
    let factors = ex.terms_used;
    let ex_err = (ex.value.re - FRAC_PI_2).abs();
    outcome(
        ratios_ok && ex_err <= 1e-9 && factors <= 100_000,
        format!(
            "error ratios under doubling {:?} (2.0±0.2); extrapolated |err| {ex_err:.1e} (≤1e-9) with {factors} factors",
            ratios.iter().map(|r| (r * 1e4).round() / 1e4).collect::<Vec<_>>()
        ),
    )
}

fn eta_and_euler_constant(cfg: &EvalConfig) -> Outcome {
    let eta0 = eta_prime_zero(cfg).unwrap().value;
    let e_eta = (eta0 - c(0.5 * (PI / 2.0).ln())).norm();
    let series = mod_euler_const(cfg).unwrap().value;
    let eta1 = dirichlet_eta(c(1.0), cfg).unwrap().value;
    let psi = -psi_tilde(c(1.0)).unwrap();
    let three = [series, eta1, psi];
    let mutual = three
        .iter()
        .flat_map(|a| three.iter().map(move |b| (a - b).norm()))
        .fold(0.0, f64::max);
    let to_log2 = three
        .iter()
        .map(|v| (v - c(LN_2)).norm())
        .fold(0.0, f64::max);
    outcome(
        e_eta <= 1e-9 && mutual <= 1e-10 && to_log2 <= 1e-10,
        format!("|η′(0) − ½log(π/2)| {e_eta:.1e} (≤1e-9); γ̃₀ three ways: mutual {mutual:.1e}, vs log 2 {to_log2:.1e} (≤1e-10)"),
    )
}

fn split_direct(cfg: &EvalConfig) -> Outcome {
    let zs = [c(0.3), c(1.0), c(2.5), Complex64::new(1.0, 2.0)];
    let mut worst = 0.0f64;
    let mut points = 0;
    for z in zs {
        for i in 0..=23 {
            for j in 0..=24 {
                let s = Complex64::new(0.25 + 5.75 * i as f64 / 23.0, -3.0 + 6.0 * j as f64 / 24.0);
                let a = alt_hurwitz_zeta(s, z, AltZetaMethod::Split, cfg)
                    .unwrap()
                    .value;
                let b = alt_hurwitz_zeta(s, z, AltZetaMethod::Direct, cfg)
                    .unwrap()
                    .value;
                worst = worst.max((a - b).norm() / a.norm());
                points += 1;
            }
        }
    }
    outcome(
        worst <= 1e-11,
        format!("max rel diff {worst:.1e} over {points} grid points (≤1e-11)"),
    )
}

fn derivative_tower(cfg: &EvalConfig) -> Outcome {
    let zs = [c(0.5), c(1.0), c(2.0), Complex64::new(1.0, 1.0)];
    let lg = |z: Complex64| {
        log_gamma_tilde(z, GammaTildeRoute::ClosedForm, cfg)
            .unwrap()
            .value
    };
    let p1 = |z: Complex64| psi_tilde_n(1, z, cfg).unwrap().value;
    let (mut e0, mut e1, mut e2) = (0.0f64, 0.0f64, 0.0f64);
    for z in zs {
        let h = 1e-6;
        e0 = e0.max(rel(
            (lg(z + h) - lg(z - h)) / (2.0 * h),
            psi_tilde(z).unwrap(),
        ));
        let h = 1e-5;
        let fd1 = (psi_tilde(z + h).unwrap() - psi_tilde(z - h).unwrap()) / (2.0 * h);
        e1 = e1.max(rel(fd1, p1(z)));
        let fd2 = (p1(z + h) - p1(z - h)) / (2.0 * h);
        e2 = e2.max(rel(fd2, psi_tilde_n(2, z, cfg).unwrap().value));
    }
    outcome(
        e0 <= 1e-7 && e1 <= 1e-5 && e2 <= 1e-5,
        format!("ψ̃ vs FD log Γ̃ {e0:.1e} (≤1e-7); ψ̃⁽¹⁾ {e1:.1e}, ψ̃⁽²⁾ {e2:.1e} (≤1e-5)"),
    )
}

fn functional_equation(cfg: &EvalConfig) -> Outcome {
    let mut worst = 0.0f64;
    for k in 0..20 {
        let t = k as f64 / 19.0;
        let z = Complex64::new(0.2 + 4.8 * t, 5.0 * (2.0 * PI * 3.0 * t).sin());
        let a = gamma_tilde(z, GammaTildeRoute::ClosedForm, cfg)
            .unwrap()
            .value;
        let b = gamma_tilde(z + 1.0, GammaTildeRoute::ClosedForm, cfg)
            .unwrap()
            .value;
        worst = worst.max(rel(a * b, c(PI) / (z * 2.0)));
    }
    outcome(
        worst <= 1e-10,
        format!("max rel err {worst:.1e} on 20 points (≤1e-10)"),
    )
}

fn kurokawa(cfg: &EvalConfig) -> Outcome {
    let mut all = true;
    let mut worst = 0.0f64;
    let mut poly = 0.0f64;
    for n in [1, 2, 3, 4, 6] {
        let r = kurokawa_wakayama(n, c(2.0), c(0.5), 1e-8, cfg).unwrap();
        all &= r.pass;
        worst = worst.max(r.rel_err);
        poly = poly.max(root_product_identity_error(n, c(2.0), c(0.5), 5).unwrap());
    }
    outcome(
        all && poly <= 1e-12,
        format!("n ∈ {{1,2,3,4,6}} all pass (worst rel_err {worst:.1e}, tol 1e-8); polynomial identity {poly:.1e} (≤1e-12)"),
    )
}

fn classical_lerch(cfg: &EvalConfig) -> Outcome {
    let sqrt_pi = PI.sqrt();
    let cases = [
        (0.5, sqrt_pi),
        (1.0, 1.0),
        (1.5, sqrt_pi / 2.0),
        (2.0, 1.0),
        (3.0, 2.0),
    ];
    let d1 = hurwitz_zeta_s_derivative(c(0.0), c(1.0), cfg)
        .unwrap()
        .value;
    let e0 = (d1 - c(-0.5 * (2.0 * PI).ln())).norm();
    let mut worst = 0.0f64;
    for (z, gamma) in cases {
        let dz = hurwitz_zeta_s_derivative(c(0.0), c(z), cfg).unwrap().value;
        worst = worst.max(rel((dz - d1).exp(), c(gamma)));
    }
    outcome(
        worst <= 1e-8 && e0 <= 1e-10,
        format!("exp(ζ′(0,z)−ζ′(0)) vs Γ(z) max rel {worst:.1e} (≤1e-8); |ζ′(0) + ½log(2π)| {e0:.1e} (≤1e-10)"),
    )
}

fn oracle_coherence(cfg: &EvalConfig) -> Outcome {
    let mut worst = 0.0f64;
    for shifts in [vec![c(1.0)], vec![c(1.0), c(1.0)], vec![c(2.0)]] {
        let spec = ProductSpec::new(shifts).unwrap();
        let oracle = geometric_mean_oracle_extrapolated(&spec, 10_000)
            .unwrap()
            .value;
        let reg = reg_alt_product(&spec, cfg).unwrap().value;
        worst = worst.max(rel(oracle, reg));
    }
    outcome(
        worst <= 1e-3,
        format!("max rel diff {worst:.1e} for {{1}}, {{1,1}}, {{2}} at M=10^4 (≤1e-3)"),
    )
}

fn sweep_properties(cfg: &EvalConfig) -> Outcome {
    let out = mizuno_sweep(42, 100, 1e-8, cfg).unwrap();
    let cutoff = out
        .cases
        .iter()
        .map(|c| c.cutoff_spread)
        .fold(0.0, f64::max);
    let mult = out
        .cases
        .iter()
        .map(|c| c.multiplicativity_err)
        .fold(0.0, f64::max);
    let all = out.cases.iter().all(|c| c.properties_pass);
    outcome(
        all && cutoff <= 1e-11 && mult <= 1e-11,
        format!(
            "{} cases: max cutoff spread {cutoff:.1e}, max multiplicativity err {mult:.1e} (≤1e-11)",
            out.cases.len()
        ),
    )
}

fn main() {
    let cfg = EvalConfig::default();
    let criteria: Vec<(&str, Check)> = vec![
        (
            "Γ̃(1) = π/2 via CLI, closed and product routes",
            Box::new(gamma_tilde_at_one),
        ),
        (
            "randomized product identity suite, seed 42, 100 cases",
            Box::new(mizuno_suite),
        ),
        (
            "Wallis product: O(1/M) error and extrapolation",
            Box::new(wallis),
        ),
        (
            "η′(0) and the modified Euler constant",
            Box::new(move || eta_and_euler_constant(&cfg)),
        ),
        (
            "ζ_E split vs direct agreement",
            Box::new(move || split_direct(&cfg)),
        ),
        ("derivative tower", Box::new(move || derivative_tower(&cfg))),
        (
            "functional equation Γ̃(z)Γ̃(z+1) = π/(2z)",
            Box::new(move || functional_equation(&cfg)),
        ),
        (
            "roots-of-unity product identity",
            Box::new(move || kurokawa(&cfg)),
        ),
        (
            "classical Lerch cross-check",
            Box::new(move || classical_lerch(&cfg)),
        ),
        (
            "geometric-mean oracle coherence",
            Box::new(move || oracle_coherence(&cfg)),
        ),
        (
            "cutoff invariance and multiplicativity on the sweep",
            Box::new(move || sweep_properties(&cfg)),
        ),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check))
            .unwrap_or_else(|_| outcome(false, "panicked"));
        let ms = start.elapsed().as_secs_f64() * 1e3;
        let tag = if result.pass { "PASS" } else { "FAIL" };
        println!(
            "[{tag}] criterion {:>2}: {name}: {} [{ms:.0} ms]",
            i + 1,
            result.detail
        );
        failures += usize::from(!result.pass);
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
