use num_complex::Complex64;
use serde::Serialize;

/// How a [`SeriesResult`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Direct,
    Paired,
    Richardson,
    EtaExpansion,
    EulerMaclaurin,
    Contour,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Paired => "paired",
            Method::Richardson => "richardson",
            Method::EtaExpansion => "eta-expansion",
            Method::EulerMaclaurin => "euler-maclaurin",
            Method::Contour => "contour",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A computed value together with its error estimate and provenance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesResult {
    pub value: Complex64,
    /// Absolute error estimate, always non-negative.
    pub error_estimate: f64,
    pub terms_used: usize,
    pub method: Method,
    pub converged: bool,
}

impl SeriesResult {
    pub fn exact(value: Complex64, method: Method) -> Self {
        SeriesResult {
            value,
            error_estimate: 0.0,
            terms_used: 0,
            method,
            converged: true,
        }
    }

    /// Applies an analytic map to the value. The error estimate is scaled by
    /// `|f'(value)|`, supplied as `derivative_scale`.
    pub fn map(self, f: impl FnOnce(Complex64) -> Complex64, derivative_scale: f64) -> Self {
        SeriesResult {
            value: f(self.value),
            error_estimate: self.error_estimate * derivative_scale.abs(),
            ..self
        }
    }

    /// exp of a log-space result.
    pub fn exp(self) -> Self {
        let value = self.value.exp();
        SeriesResult {
            value,
            // d(exp) = exp · d(log)
            error_estimate: self.error_estimate * value.norm(),
            ..self
        }
    }
}
