use num_complex::Complex64;

use crate::error::{Error, Result};

/// Polynomial extrapolation to h = 1/M → 0 by Neville's scheme over the last
/// `order + 1` samples `(M, value)`. Returns the limit and the difference
/// between the order and order − 1 extrapolants.
pub fn richardson_with_error(
    points: &[(f64, Complex64)],
    order: usize,
) -> Result<(Complex64, f64)> {
    if order == 0 {
        return Err(Error::param("richardson order must be positive"));
    }
    if points.len() < order + 1 {
        return Err(Error::param(format!(
            "richardson order {order} needs {} samples, got {}",
            order + 1,
            points.len()
        )));
    }
    let pts = &points[points.len() - order - 1..];
    let h: Vec<f64> = pts.iter().map(|&(m, _)| 1.0 / m).collect();
    if h.iter().any(|x| !x.is_finite() || *x <= 0.0) {
        return Err(Error::param("truncation points must be positive"));
    }
    let mut table: Vec<Complex64> = pts.iter().map(|&(_, v)| v).collect();
    let mut lower = table[table.len() - 1];
    for level in 1..=order {
        for i in 0..=order - level {
            let (hi, hj) = (h[i], h[i + level]);
            if hi == hj {
                return Err(Error::param("truncation points must be distinct"));
            }
            table[i] = (table[i + 1] * hi - table[i] * hj) / (hi - hj);
        }
        if level == order - 1 {
            lower = table[1];
        }
    }
    if order == 1 {
        lower = pts[1].1;
    }
    let value = table[0];
    Ok((value, (value - lower).norm()))
}

/// Richardson extrapolation of partial sums sampled at arbitrary
/// truncation points M, assuming an error expansion in powers of 1/M.
pub fn richardson_extrapolate_at(points: &[(f64, Complex64)], order: usize) -> Result<Complex64> {
    richardson_with_error(points, order).map(|(v, _)| v)
}

/// Richardson extrapolation of partial sums taken at doubling truncation
/// points M, 2M, 4M, … (only the ratios matter).
pub fn richardson_extrapolate(partials: &[Complex64], order: usize) -> Result<Complex64> {
    let points: Vec<(f64, Complex64)> = partials
        .iter()
        .enumerate()
        .map(|(i, &v)| (2f64.powi(i as i32), v))
        .collect();
    richardson_extrapolate_at(&points, order)
}
