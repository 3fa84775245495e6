//! Complex helpers that `num_complex` does not provide with the accuracy we
//! need near zero.

use num_complex::Complex64;

/// Neumaier-compensated complex accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    re: (f64, f64),
    im: (f64, f64),
}

fn neumaier_add((sum, comp): (f64, f64), x: f64) -> (f64, f64) {
    let t = sum + x;
    let c = if sum.abs() >= x.abs() {
        (sum - t) + x
    } else {
        (x - t) + sum
    };
    (t, comp + c)
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: Complex64) {
        self.re = neumaier_add(self.re, x.re);
        self.im = neumaier_add(self.im, x.im);
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.0 + self.re.1, self.im.0 + self.im.1)
    }
}

impl FromIterator<Complex64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = Complex64>>(iter: I) -> Self {
        let mut acc = NeumaierSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

pub(crate) fn compensated_sum<I: IntoIterator<Item = Complex64>>(iter: I) -> Complex64 {
    iter.into_iter().collect::<NeumaierSum>().value()
}

/// log(1 + w), accurate for small |w|.
pub(crate) fn log1p(w: Complex64) -> Complex64 {
    let (u, v) = (w.re, w.im);
    Complex64::new(0.5 * (2.0 * u + u * u + v * v).ln_1p(), v.atan2(1.0 + u))
}

/// log(1 + w) − w without cancellation for small |w|.
pub(crate) fn log1p_minus_id(w: Complex64) -> Complex64 {
    if w.norm() < 0.25 {
        // Σ_{k≥2} (−1)^{k+1} w^k / k
        let mut power = w * w;
        let mut sum = Complex64::new(0.0, 0.0);
        let mut k = 2.0;
        loop {
            let term = power / k;
            let sign = if (k as u64).is_multiple_of(2) {
                -1.0
            } else {
                1.0
            };
            sum += term * sign;
            if term.norm() <= 1e-17 * sum.norm() || k > 80.0 {
                return sum;
            }
            power *= w;
            k += 1.0;
        }
    } else {
        log1p(w) - w
    }
}

/// (e^x − 1)/x, equal to 1 at x = 0.
pub(crate) fn exprel(x: Complex64) -> Complex64 {
    if x.norm() < 0.5 {
        // Σ x^k/(k+1)!
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        for k in 1..40 {
            term = term * x / (k as f64 + 1.0);
            sum += term;
            if term.norm() <= 1e-17 * sum.norm() {
                break;
            }
        }
        sum
    } else {
        (x.exp() - 1.0) / x
    }
}

pub(crate) fn expm1(x: Complex64) -> Complex64 {
    x * exprel(x)
}

/// base^{−s} on the principal branch.
#[inline]
pub(crate) fn pow_neg(base: Complex64, s: Complex64) -> Complex64 {
    (-s * base.ln()).exp()
}

/// True when z is within `tol` of one of 0, −1, −2, …
pub(crate) fn is_nonpositive_integer(z: Complex64, tol: f64) -> bool {
    z.re <= tol && z.im.abs() <= tol && (z.re - z.re.round()).abs() <= tol
}
