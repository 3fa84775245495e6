use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest index accepted by [`bernoulli_numbers`].
pub const MAX_BERNOULLI: usize = 64;

/// B_0..=B_n from Σ_{k=0}^{m} C(m+1,k) B_k = 0 in exact arithmetic (B_1 = −1/2).
pub(crate) fn bernoulli_rational(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::from_integer(BigInt::from(1)));
    for m in 1..=n {
        // binomial C(m+1, k) built incrementally
        let mut binom = BigInt::from(1);
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += bk * BigRational::from_integer(binom.clone());
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

pub(crate) fn bernoulli_cache() -> &'static [f64] {
    static CACHE: OnceLock<Vec<f64>> = OnceLock::new();
    CACHE.get_or_init(|| {
        bernoulli_rational(MAX_BERNOULLI)
            .iter()
            .map(|r| r.to_f64().expect("Bernoulli number representable"))
            .collect()
    })
}

/// Returns B_0..=B_count as binary64, with B_1 = −1/2.
pub fn bernoulli_numbers(count: usize) -> Result<Vec<f64>> {
    if count > MAX_BERNOULLI {
        return Err(Error::param(format!(
            "bernoulli count {count} exceeds {MAX_BERNOULLI}"
        )));
    }
    Ok(bernoulli_cache()[..=count].to_vec())
}
