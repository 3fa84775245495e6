//! Report documents and their text, JSON and CSV renderings.

use std::collections::BTreeMap;
use std::io::Write;

use regprod::verify::SweepCase;
use regprod::{Complex64, EvalConfig, SeriesResult, VerificationReport};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::args::Format;
use crate::CliError;

pub const SCHEMA_VERSION: &str = "1";

/// A real number whose non-finite values serialize as string sentinels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Real(pub f64);

impl Real {
    /// Shortest round-trip decimal, or a sentinel.
    pub fn render(self) -> String {
        let x = self.0;
        if x.is_nan() {
            "NaN".into()
        } else if x == f64::INFINITY {
            "Infinity".into()
        } else if x == f64::NEG_INFINITY {
            "-Infinity".into()
        } else {
            format!("{x:?}")
        }
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            serializer.serialize_f64(self.0)
        } else {
            serializer.serialize_str(&self.render())
        }
    }
}

/// A complex number serialized as `[re, im]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cx(pub Complex64);

impl Serialize for Cx {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(2))?;
        seq.serialize_element(&Real(self.0.re))?;
        seq.serialize_element(&Real(self.0.im))?;
        seq.end()
    }
}

/// A request parameter as echoed in the report.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Param {
    Complex(Cx),
    ComplexList(Vec<Cx>),
    Real(Real),
    Int(u64),
    Text(String),
}

#[derive(Debug, Clone, Serialize)]
pub struct RequestEcho {
    pub subcommand: String,
    pub target: String,
    pub format: String,
    pub params: BTreeMap<String, Param>,
    pub config: EvalConfig,
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesRecord {
    pub label: String,
    pub value: Cx,
    pub error_estimate: Real,
    pub terms_used: usize,
    pub method: String,
    pub converged: bool,
    pub runtime_ms: Real,
    /// |value − reference| when an independent reference is known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference_abs_err: Option<Real>,
}

impl SeriesRecord {
    pub fn new(label: impl Into<String>, r: &SeriesResult, runtime_ms: f64) -> Self {
        SeriesRecord {
            label: label.into(),
            value: Cx(r.value),
            error_estimate: Real(r.error_estimate),
            terms_used: r.terms_used,
            method: r.method.as_str().to_string(),
            converged: r.converged,
            runtime_ms: Real(runtime_ms),
            reference_abs_err: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationRecord {
    pub label: String,
    pub identity: String,
    pub lhs: Cx,
    pub rhs: Cx,
    pub abs_err: Real,
    pub rel_err: Real,
    pub tol: Real,
    pub pass: bool,
    pub converged: bool,
    pub metadata: BTreeMap<String, String>,
    pub runtime_ms: Real,
}

impl VerificationRecord {
    pub fn new(label: impl Into<String>, r: &VerificationReport, runtime_ms: f64) -> Self {
        VerificationRecord {
            label: label.into(),
            identity: r.identity.as_str().to_string(),
            lhs: Cx(r.lhs),
            rhs: Cx(r.rhs),
            abs_err: Real(r.abs_err),
            rel_err: Real(r.rel_err),
            tol: Real(r.tol),
            pass: r.pass,
            converged: r.converged,
            metadata: r.metadata.clone(),
            runtime_ms: Real(runtime_ms),
        }
    }

    /// A sweep case; pass also requires the property checks.
    pub fn from_sweep(case: &SweepCase, runtime_ms: f64) -> Self {
        let mut rec =
            VerificationRecord::new(format!("case {}", case.index), &case.report, runtime_ms);
        rec.pass = case.report.pass && case.properties_pass;
        let extra = [
            ("cutoff_spread", case.cutoff_spread),
            ("multiplicativity_err", case.multiplicativity_err),
            ("tail_method_err", case.tail_method_err),
        ];
        for (k, v) in extra {
            rec.metadata.insert(k.into(), Real(v).render());
        }
        rec.metadata
            .insert("properties_pass".into(), case.properties_pass.to_string());
        rec
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ResultRecord {
    Series(SeriesRecord),
    Verification(VerificationRecord),
}

impl ResultRecord {
    fn pass(&self) -> bool {
        match self {
            ResultRecord::Series(_) => true,
            ResultRecord::Verification(v) => v.pass,
        }
    }

    fn converged(&self) -> bool {
        match self {
            ResultRecord::Series(s) => s.converged,
            ResultRecord::Verification(v) => v.converged,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub not_converged: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub schema_version: &'static str,
    pub request: RequestEcho,
    pub results: Vec<ResultRecord>,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn new(request: RequestEcho, results: Vec<ResultRecord>) -> Self {
        let passed = results.iter().filter(|r| r.pass()).count();
        let not_converged = results.iter().filter(|r| !r.converged()).count();
        let summary = Summary {
            total: results.len(),
            passed,
            failed: results.len() - passed,
            not_converged,
        };
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            request,
            results,
            summary,
        }
    }

    pub fn render(&self, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)?;
            }
            Format::Csv => self.write_csv(out)?,
            Format::Text => self.write_text(out)?,
        }
        Ok(())
    }

    const CSV_HEADER: [&'static str; 19] = [
        "label",
        "kind",
        "value_re",
        "value_im",
        "error_estimate",
        "terms_used",
        "method",
        "converged",
        "identity",
        "lhs_re",
        "lhs_im",
        "rhs_re",
        "rhs_im",
        "abs_err",
        "rel_err",
        "tol",
        "pass",
        "runtime_ms",
        "reference_abs_err",
    ];

    fn write_csv(&self, out: &mut dyn Write) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(Self::CSV_HEADER)?;
        for r in &self.results {
            let row: Vec<String> = match r {
                ResultRecord::Series(s) => vec![
                    s.label.clone(),
                    "series".into(),
                    Real(s.value.0.re).render(),
                    Real(s.value.0.im).render(),
                    s.error_estimate.render(),
                    s.terms_used.to_string(),
                    s.method.clone(),
                    s.converged.to_string(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    s.runtime_ms.render(),
                    s.reference_abs_err.map(Real::render).unwrap_or_default(),
                ],
                ResultRecord::Verification(v) => vec![
                    v.label.clone(),
                    "verification".into(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    v.converged.to_string(),
                    v.identity.clone(),
                    Real(v.lhs.0.re).render(),
                    Real(v.lhs.0.im).render(),
                    Real(v.rhs.0.re).render(),
                    Real(v.rhs.0.im).render(),
                    v.abs_err.render(),
                    v.rel_err.render(),
                    v.tol.render(),
                    v.pass.to_string(),
                    v.runtime_ms.render(),
                    String::new(),
                ],
            };
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }

    fn write_text(&self, out: &mut dyn Write) -> Result<(), CliError> {
        let req = &self.request;
        writeln!(out, "{} {}", req.subcommand, req.target)?;
        for r in &self.results {
            match r {
                ResultRecord::Series(s) => {
                    writeln!(
                        out,
                        "  {}: {} {:+?}i  (error ≤ {}, {} terms, {}, {})",
                        s.label,
                        Real(s.value.0.re).render(),
                        s.value.0.im,
                        s.error_estimate.render(),
                        s.terms_used,
                        s.method,
                        if s.converged {
                            "converged"
                        } else {
                            "NOT converged"
                        }
                    )?;
                }
                ResultRecord::Verification(v) => {
                    writeln!(
                        out,
                        "  {} [{}] {}: lhs {} {:+?}i, rhs {} {:+?}i, rel_err {}, tol {}",
                        v.label,
                        v.identity,
                        if v.pass { "PASS" } else { "FAIL" },
                        Real(v.lhs.0.re).render(),
                        v.lhs.0.im,
                        Real(v.rhs.0.re).render(),
                        v.rhs.0.im,
                        v.rel_err.render(),
                        v.tol.render()
                    )?;
                }
            }
        }
        let s = &self.summary;
        writeln!(
            out,
            "summary: {} total, {} passed, {} failed, {} not converged",
            s.total, s.passed, s.failed, s.not_converged
        )?;
        Ok(())
    }
}
