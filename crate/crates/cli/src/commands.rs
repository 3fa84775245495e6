use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use regprod::gamma::log_gamma_tilde_product;
use regprod::{
    alt_hurwitz_zeta, classical_lerch_check, gamma_tilde, geometric_mean_oracle,
    geometric_mean_oracle_extrapolated, kurokawa_wakayama, lambda_star_deriv_zero_with,
    log_gamma_tilde, mizuno_rhs, mizuno_sweep, mod_stieltjes, psi_tilde, psi_tilde_n, verify_lerch,
    verify_mizuno, verify_wallis, AltZetaMethod, Complex64, Cutoff, EvalConfig, GammaTildeRoute,
    Method, ProductSpec, SeriesResult, TailMethod,
};
use serde::Serialize;

use crate::args::{
    BenchTarget, Cli, Command, EvalTarget, Format, RouteArg, TableTarget, TailArg, VerifyTarget,
    ZetaMethodArg,
};
use crate::parse::{parse_complex, parse_complex_list, parse_sizes, split_list};
use crate::report::{
    Cx, Param, Real, ReportDocument, RequestEcho, ResultRecord, SeriesRecord, VerificationRecord,
};
use crate::{CliError, EXIT_FAILED, EXIT_NOT_CONVERGED, EXIT_OK, MAX_TERMS_ENV};

/// Accuracy claimed for values computed from the classical digamma.
const DIGAMMA_REL_ACCURACY: f64 = 1e-13;
/// Largest number of rows a table may have.
const MAX_TABLE_ROWS: usize = 1_000_000;

/// Configuration after applying the environment override.
pub fn resolve_config() -> Result<EvalConfig, CliError> {
    let mut cfg = EvalConfig::default();
    if let Ok(raw) = std::env::var(MAX_TERMS_ENV) {
        cfg.max_terms = raw
            .trim()
            .parse()
            .ok()
            .filter(|&n: &usize| n > 0)
            .ok_or_else(|| {
                CliError::Usage(format!("{MAX_TERMS_ENV}='{raw}' is not a positive integer"))
            })?;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed().as_secs_f64() * 1e3)
}

struct Request {
    subcommand: &'static str,
    target: &'static str,
    params: BTreeMap<String, Param>,
}

impl Request {
    fn new(subcommand: &'static str, target: &'static str) -> Self {
        Request {
            subcommand,
            target,
            params: BTreeMap::new(),
        }
    }

    fn param(&mut self, key: &str, value: Param) -> &mut Self {
        self.params.insert(key.to_string(), value);
        self
    }

    fn echo(self, format: Format, cfg: &EvalConfig) -> RequestEcho {
        RequestEcho {
            subcommand: self.subcommand.into(),
            target: self.target.into(),
            format: format.as_str().into(),
            params: self.params,
            config: *cfg,
        }
    }
}

fn text(s: &str) -> Param {
    Param::Text(s.to_string())
}

fn series(label: &str, r: SeriesResult, ms: f64) -> ResultRecord {
    ResultRecord::Series(SeriesRecord::new(label, &r, ms))
}

fn check_tol(tol: f64) -> Result<f64, CliError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(tol)
    } else {
        Err(CliError::Usage(format!(
            "--tol must be a positive number, got {tol}"
        )))
    }
}

fn exit_code(doc: &ReportDocument) -> i32 {
    if doc.summary.failed > 0 {
        EXIT_FAILED
    } else if doc.summary.not_converged > 0 {
        EXIT_NOT_CONVERGED
    } else {
        EXIT_OK
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let cfg = resolve_config()?;
    let (request, results, strict) = match &cli.command {
        Command::Eval { target } => {
            let (r, res) = eval(target, &cfg)?;
            (r, res, true)
        }
        Command::Verify { target } => {
            let (r, res) = verify(target, &cfg)?;
            (r, res, true)
        }
        Command::Bench { target } => {
            let (r, res) = bench(target, &cfg)?;
            (r, res, false)
        }
        Command::Table { target } => return table(target, cli.format, &cfg, out),
    };
    let doc = ReportDocument::new(request.echo(cli.format, &cfg), results);
    doc.render(cli.format, out)?;
    // bench rows at small budgets are expected not to converge
    Ok(if strict { exit_code(&doc) } else { EXIT_OK })
}

fn eval(target: &EvalTarget, cfg: &EvalConfig) -> Result<(Request, Vec<ResultRecord>), CliError> {
    match target {
        EvalTarget::ZetaE { s, z, method } => {
            let (s, z) = (parse_complex(s)?, parse_complex(z)?);
            let (m, name) = match method {
                ZetaMethodArg::Split => (AltZetaMethod::Split, "split"),
                ZetaMethodArg::Direct => (AltZetaMethod::Direct, "direct"),
            };
            let mut req = Request::new("eval", "zeta-e");
            req.param("s", Param::Complex(Cx(s)))
                .param("z", Param::Complex(Cx(z)))
                .param("method", text(name));
            let (r, ms) = timed(|| alt_hurwitz_zeta(s, z, m, cfg));
            Ok((req, vec![series("zeta_e", r?, ms)]))
        }
        EvalTarget::GammaTilde { z, route } => {
            let z = parse_complex(z)?;
            let route = match route {
                RouteArg::Closed => GammaTildeRoute::ClosedForm,
                RouteArg::Product => GammaTildeRoute::WeierstrassProduct,
                RouteArg::Series => GammaTildeRoute::LogSeries,
            };
            let mut req = Request::new("eval", "gamma-tilde");
            req.param("z", Param::Complex(Cx(z)))
                .param("route", text(route.as_str()));
            if route == GammaTildeRoute::WeierstrassProduct {
                req.param(
                    "pairs",
                    Param::Int(regprod::gamma::DEFAULT_PRODUCT_PAIRS as u64),
                );
            }
            let (r, ms) = timed(|| gamma_tilde(z, route, cfg));
            Ok((req, vec![series("gamma_tilde", r?, ms)]))
        }
        EvalTarget::PsiTilde { z, order } => {
            let z = parse_complex(z)?;
            let mut req = Request::new("eval", "psi-tilde");
            req.param("z", Param::Complex(Cx(z)));
            let (r, ms) = match order {
                Some(n) => {
                    req.param("order", Param::Int(*n as u64));
                    timed(|| psi_tilde_n(*n, z, cfg))
                }
                None => timed(|| {
                    psi_tilde(z).map(|v| SeriesResult {
                        value: v,
                        error_estimate: DIGAMMA_REL_ACCURACY * v.norm(),
                        terms_used: 0,
                        method: Method::Direct,
                        converged: true,
                    })
                }),
            };
            Ok((req, vec![series("psi_tilde", r?, ms)]))
        }
        EvalTarget::Stieltjes { k, z } => {
            let z = parse_complex(z)?;
            let mut req = Request::new("eval", "stieltjes");
            req.param("k", Param::Int(*k as u64))
                .param("z", Param::Complex(Cx(z)))
                .param("contour_radius", Param::Real(Real(cfg.contour_radius)))
                .param("contour_nodes", Param::Int(cfg.contour_nodes as u64));
            let (r, ms) = timed(|| mod_stieltjes(*k, z, cfg));
            let r = r?;
            let result = SeriesResult {
                value: r.value,
                error_estimate: r.error_estimate,
                terms_used: cfg.contour_nodes,
                method: Method::Contour,
                converged: cfg.accepts(r.error_estimate, r.value.norm()),
            };
            Ok((req, vec![series("stieltjes", result, ms)]))
        }
    }
}

fn verify(
    target: &VerifyTarget,
    cfg: &EvalConfig,
) -> Result<(Request, Vec<ResultRecord>), CliError> {
    let record = |label: &str, r: regprod::VerificationReport, ms: f64| {
        ResultRecord::Verification(VerificationRecord::new(label, &r, ms))
    };
    match target {
        VerifyTarget::Mizuno {
            zs,
            cutoff,
            tail,
            tol,
        } => {
            let tol = check_tol(tol.tol)?;
            let shifts = parse_complex_list(zs)?;
            let mut spec = ProductSpec::new(shifts.clone())?;
            if let Some(c) = cutoff {
                spec = spec.with_cutoff(Cutoff::Explicit(*c))?;
            }
            let tail = match tail {
                TailArg::Eta => TailMethod::EtaExpansion,
                TailArg::Paired => TailMethod::PairedDirect,
            };
            let mut req = Request::new("verify", "mizuno");
            req.param(
                "zs",
                Param::ComplexList(shifts.iter().map(|&z| Cx(z)).collect()),
            )
            .param("cutoff", Param::Int(spec.resolved_cutoff() as u64))
            .param(
                "cutoff_rule",
                text(if cutoff.is_some() { "explicit" } else { "auto" }),
            )
            .param("tail_method", text(tail.as_str()))
            .param("rhs_route", text(GammaTildeRoute::ClosedForm.as_str()))
            .param("tol", Param::Real(Real(tol)));
            let (r, ms) = timed(|| mizuno_with_tail(&spec, tail, tol, cfg));
            Ok((req, vec![record("mizuno", r?, ms)]))
        }
        VerifyTarget::Kurokawa { n, x, y, tol } => {
            let tol = check_tol(tol.tol)?;
            let (x, y) = (parse_complex(x)?, parse_complex(y)?);
            let mut req = Request::new("verify", "kurokawa");
            req.param("n", Param::Int(*n as u64))
                .param("x", Param::Complex(Cx(x)))
                .param("y", Param::Complex(Cx(y)))
                .param("tail_method", text(TailMethod::EtaExpansion.as_str()))
                .param("tol", Param::Real(Real(tol)));
            let (r, ms) = timed(|| kurokawa_wakayama(*n, x, y, tol, cfg));
            Ok((req, vec![record("kurokawa_wakayama", r?, ms)]))
        }
        VerifyTarget::Lerch { x, tol } => {
            let tol = check_tol(tol.tol)?;
            let x = parse_complex(x)?;
            let mut req = Request::new("verify", "lerch");
            req.param("x", Param::Complex(Cx(x)))
                .param("tol", Param::Real(Real(tol)));
            let (r, ms) = timed(|| verify_lerch(x, tol, cfg));
            Ok((req, vec![record("lerch", r?, ms)]))
        }
        VerifyTarget::LerchClassical { z, tol } => {
            let tol = check_tol(tol.tol)?;
            let z = parse_complex(z)?;
            let mut req = Request::new("verify", "lerch-classical");
            req.param("z", Param::Complex(Cx(z)))
                .param("tol", Param::Real(Real(tol)));
            let (r, ms) = timed(|| classical_lerch_check(z, tol, cfg));
            Ok((req, vec![record("classical_lerch", r?, ms)]))
        }
        VerifyTarget::Wallis { pairs, tol } => {
            let tol = check_tol(tol.tol)?;
            let mut req = Request::new("verify", "wallis");
            req.param("pairs", Param::Int(*pairs as u64))
                .param("richardson_order", Param::Int(3))
                .param("tol", Param::Real(Real(tol)));
            let (r, ms) = timed(|| verify_wallis(*pairs, tol));
            Ok((req, vec![record("wallis", r?, ms)]))
        }
        VerifyTarget::Suite { seed, cases, tol } => {
            let tol = check_tol(tol.tol)?;
            if *cases == 0 {
                return Err(CliError::Usage("--cases must be at least 1".into()));
            }
            let mut req = Request::new("verify", "suite");
            req.param("seed", Param::Int(*seed))
                .param("cases", Param::Int(*cases as u64))
                .param(
                    "cutoff_rule",
                    text("auto; properties also at auto+10, auto+50"),
                )
                .param("tail_method", text(TailMethod::EtaExpansion.as_str()))
                .param(
                    "property_tol",
                    Param::Real(Real(regprod::verify::PROPERTY_TOL)),
                )
                .param("tol", Param::Real(Real(tol)));
            let (outcome, ms) = timed(|| mizuno_sweep(*seed, *cases, tol, cfg));
            let outcome = outcome?;
            let per_case = ms / *cases as f64;
            let results = outcome
                .cases
                .iter()
                .map(|c| ResultRecord::Verification(VerificationRecord::from_sweep(c, per_case)))
                .collect();
            Ok((req, results))
        }
    }
}

/// verify_mizuno with a selectable tail method.
fn mizuno_with_tail(
    spec: &ProductSpec,
    tail: TailMethod,
    tol: f64,
    cfg: &EvalConfig,
) -> Result<regprod::VerificationReport, regprod::Error> {
    let mut report = verify_mizuno(spec, tol, cfg)?;
    if tail == TailMethod::EtaExpansion {
        return Ok(report);
    }
    let deriv = lambda_star_deriv_zero_with(spec, cfg, tail)?;
    let lhs = deriv.total.exp();
    let fresh =
        regprod::VerificationReport::compare(regprod::Identity::Mizuno, lhs.value, report.rhs, tol);
    report.lhs = fresh.lhs;
    report.abs_err = fresh.abs_err;
    report.rel_err = fresh.rel_err;
    report.pass = fresh.pass;
    report.converged = lhs.converged;
    report
        .metadata
        .insert("tail_method".into(), tail.as_str().into());
    report
        .metadata
        .insert("tail_terms".into(), deriv.tail_terms.to_string());
    report
        .metadata
        .insert("lhs_error_estimate".into(), lhs.error_estimate.to_string());
    Ok(report)
}

fn bench(target: &BenchTarget, cfg: &EvalConfig) -> Result<(Request, Vec<ResultRecord>), CliError> {
    let BenchTarget::Accel {
        spec,
        methods,
        sizes,
    } = target;
    let shifts = parse_complex_list(spec)?;
    let product = ProductSpec::new(shifts.clone())?;
    let methods = split_list(methods);
    let sizes = parse_sizes(sizes)?;
    for m in &methods {
        if !matches!(
            m.as_str(),
            "paired" | "eta-expansion" | "direct" | "richardson"
        ) {
            return Err(CliError::Usage(format!(
                "unknown method '{m}' (expected paired, eta-expansion, direct, richardson)"
            )));
        }
    }
    let reference = mizuno_rhs(&product, cfg)?.value;
    let mut req = Request::new("bench", "accel");
    req.param(
        "spec",
        Param::ComplexList(shifts.iter().map(|&z| Cx(z)).collect()),
    )
    .param("methods", text(&methods.join(",")))
    .param(
        "sizes",
        text(
            &sizes
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(","),
        ),
    )
    .param("cutoff", Param::Int(product.resolved_cutoff() as u64))
    .param("reference", text("closed-form right-hand side"))
    .param("reference_value", Param::Complex(Cx(reference)));
    let mut results = Vec::new();
    for method in &methods {
        for &size in &sizes {
            let budget = EvalConfig {
                max_terms: size,
                ..*cfg
            };
            let (r, ms) = timed(|| -> Result<SeriesResult, regprod::Error> {
                match method.as_str() {
                    "paired" => Ok(lambda_star_deriv_zero_with(
                        &product,
                        &budget,
                        TailMethod::PairedDirect,
                    )?
                    .total
                    .exp()),
                    "eta-expansion" => Ok(lambda_star_deriv_zero_with(
                        &product,
                        &budget,
                        TailMethod::EtaExpansion,
                    )?
                    .total
                    .exp()),
                    "direct" => geometric_mean_oracle(&product, (size / 2).max(1)),
                    _ => geometric_mean_oracle_extrapolated(&product, (size / 2).max(8)),
                }
            });
            let r = r?;
            let mut rec = SeriesRecord::new(format!("{method} N={size}"), &r, ms);
            rec.reference_abs_err = Some(Real((r.value - reference).norm()));
            results.push(ResultRecord::Series(rec));
        }
    }
    Ok((req, results))
}

#[derive(Debug, Serialize)]
struct TableRow {
    z: Real,
    gamma_tilde: Real,
    log_gamma_tilde: Real,
    psi_tilde: Real,
    product_route_rel_diff: Real,
    status: &'static str,
}

impl TableRow {
    fn cells(&self) -> [String; 6] {
        [
            self.z.render(),
            self.gamma_tilde.render(),
            self.log_gamma_tilde.render(),
            self.psi_tilde.render(),
            self.product_route_rel_diff.render(),
            self.status.to_string(),
        ]
    }
}

fn table(
    target: &TableTarget,
    format: Format,
    cfg: &EvalConfig,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let TableTarget::GammaTilde { from, to, step } = *target;
    if !(from.is_finite() && to.is_finite() && step.is_finite()) || step <= 0.0 || to < from {
        return Err(CliError::Usage(
            "table needs finite --from ≤ --to and --step > 0".into(),
        ));
    }
    let count = ((to - from) / step + 1e-9).floor() + 1.0;
    if count > MAX_TABLE_ROWS as f64 {
        return Err(CliError::Usage(format!(
            "table would have more than {MAX_TABLE_ROWS} rows"
        )));
    }
    let rows: Vec<TableRow> = (0..count as usize)
        .map(|i| table_row(from + i as f64 * step, cfg))
        .collect();
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &rows)?;
            writeln!(out)?;
        }
        Format::Csv | Format::Text => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "z",
                "gamma_tilde",
                "log_gamma_tilde",
                "psi_tilde",
                "product_route_rel_diff",
                "status",
            ])?;
            for row in &rows {
                w.write_record(row.cells())?;
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

fn table_row(x: f64, cfg: &EvalConfig) -> TableRow {
    let z = Complex64::new(x, 0.0);
    let nan = Real(f64::NAN);
    let closed = log_gamma_tilde(z, GammaTildeRoute::ClosedForm, cfg);
    let psi = psi_tilde(z);
    match (closed, psi) {
        (Ok(lg), Ok(psi)) => {
            // Γ̃ is real on the real axis but log Γ̃ picks up iπ where Γ̃ < 0
            let value = lg.value.exp();
            let product = if x > 0.0 {
                log_gamma_tilde_product(z, 1_000, cfg)
                    .map(|p| Real((p.value.exp() - value).norm() / value.norm()))
                    .unwrap_or(nan)
            } else {
                nan
            };
            TableRow {
                z: Real(x),
                gamma_tilde: Real(value.re),
                log_gamma_tilde: Real(value.re.abs().ln()),
                psi_tilde: Real(psi.re),
                product_route_rel_diff: product,
                status: if x > 0.0 {
                    "ok"
                } else {
                    "outside-validated-domain"
                },
            }
        }
        _ => TableRow {
            z: Real(x),
            gamma_tilde: nan,
            log_gamma_tilde: nan,
            psi_tilde: nan,
            product_route_rel_diff: nan,
            status: "pole",
        },
    }
}
