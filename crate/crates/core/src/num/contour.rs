use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Taylor coefficients together with per-coefficient error estimates.
#[derive(Debug, Clone, PartialEq)]
pub struct ContourCoeffs {
    pub coeffs: Vec<Complex64>,
    pub errors: Vec<f64>,
    pub evaluations: usize,
}

/// Taylor coefficients a_0..=a_{k_max} of `f` about `center`, from the
/// trapezoid rule applied to the Cauchy integral on a circle of `radius`.
pub fn contour_taylor_coeffs<F>(
    f: F,
    center: Complex64,
    radius: f64,
    k_max: usize,
    nodes: usize,
) -> Result<Vec<Complex64>>
where
    F: FnMut(Complex64) -> Result<Complex64>,
{
    contour_taylor_coeffs_with_error(f, center, radius, k_max, nodes).map(|c| c.coeffs)
}

/// As [`contour_taylor_coeffs`], also estimating the error of each a_k from
/// the two highest discrete Fourier modes (aliasing) plus a rounding floor.
pub fn contour_taylor_coeffs_with_error<F>(
    mut f: F,
    center: Complex64,
    radius: f64,
    k_max: usize,
    nodes: usize,
) -> Result<ContourCoeffs>
where
    F: FnMut(Complex64) -> Result<Complex64>,
{
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::param("contour radius must be positive"));
    }
    if nodes < 4 * (k_max + 1) {
        return Err(Error::param(format!(
            "contour needs at least {} nodes for k_max = {k_max}, got {nodes}",
            4 * (k_max + 1)
        )));
    }
    let roots: Vec<Complex64> = (0..nodes)
        .map(|j| {
            let (s, c) = (TAU * j as f64 / nodes as f64).sin_cos();
            Complex64::new(c, s)
        })
        .collect();
    let values = roots
        .iter()
        .map(|w| f(center + w * radius))
        .collect::<Result<Vec<_>>>()?;
    let max_f = values.iter().map(|v| v.norm()).fold(0.0, f64::max);

    let mode = |k: usize| -> Complex64 {
        let sum: Complex64 = values
            .iter()
            .enumerate()
            .map(|(j, v)| v * roots[(j * k) % nodes].conj())
            .sum();
        sum / nodes as f64
    };
    let tail = mode(nodes - 1).norm() + mode(nodes - 2).norm() + 4.0 * f64::EPSILON * max_f;
    let mut coeffs = Vec::with_capacity(k_max + 1);
    let mut errors = Vec::with_capacity(k_max + 1);
    let mut scale = 1.0;
    for k in 0..=k_max {
        coeffs.push(mode(k) / scale);
        errors.push(tail / scale);
        scale *= radius;
    }
    Ok(ContourCoeffs {
        coeffs,
        errors,
        evaluations: nodes,
    })
}
