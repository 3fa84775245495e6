use num_complex::Complex64;

use super::cmath::NeumaierSum;
use crate::config::EvalConfig;
use crate::series::{Method, SeriesResult};

/// Depth of the repeated averaging applied to a window of partial sums.
const AVERAGING_DEPTH: usize = 32;
const INITIAL_HEAD: usize = 16;

/// Lazily extended compensated partial sums P_i = Σ_{m=start}^{start+i} term(m).
struct PartialSums<F> {
    term: F,
    start: u64,
    acc: NeumaierSum,
    sums: Vec<Complex64>,
}

impl<F: FnMut(u64) -> Complex64> PartialSums<F> {
    fn new(term: F, start: u64) -> Self {
        PartialSums {
            term,
            start,
            acc: NeumaierSum::new(),
            sums: Vec::new(),
        }
    }

    fn get(&mut self, i: usize) -> Complex64 {
        while self.sums.len() <= i {
            let m = self.start + self.sums.len() as u64;
            self.acc.add((self.term)(m));
            self.sums.push(self.acc.value());
        }
        self.sums[i]
    }

    /// Repeated pairwise averaging of P_head..=P_{head+depth}. For an
    /// alternating series with smooth magnitudes this is the Euler
    /// transform of the tail beyond `head`; every step is a convex
    /// combination so rounding is not amplified.
    fn averaged(&mut self, head: usize) -> Complex64 {
        let mut row: Vec<Complex64> = (head..=head + AVERAGING_DEPTH)
            .map(|i| self.get(i))
            .collect();
        while row.len() > 1 {
            for i in 0..row.len() - 1 {
                row[i] = (row[i] + row[i + 1]) * 0.5;
            }
            row.pop();
        }
        row[0]
    }
}

/// Sums Σ_{m ≥ start} term(m) for a sign-alternating series with smoothly
/// decaying magnitudes.
///
/// Consecutive partial sums are combined by repeated averaging, which pairs
/// neighbouring terms at every level. The head is doubled until two
/// successive estimates agree to `cfg`'s tolerance; their difference is
/// reported as the error estimate. When `cfg.max_terms` is exhausted the best
/// estimate is returned with `converged = false`.
pub fn alt_sum<F>(term: F, start: u64, cfg: &EvalConfig) -> SeriesResult
where
    F: FnMut(u64) -> Complex64,
{
    let mut sums = PartialSums::new(term, start);
    if cfg.max_terms < INITIAL_HEAD + AVERAGING_DEPTH + 1 {
        let value = sums.get(cfg.max_terms - 1);
        let last = value
            - if cfg.max_terms > 1 {
                sums.get(cfg.max_terms - 2)
            } else {
                Complex64::new(0.0, 0.0)
            };
        return SeriesResult {
            value,
            error_estimate: last.norm(),
            terms_used: cfg.max_terms,
            method: Method::Direct,
            converged: false,
        };
    }

    let mut head = INITIAL_HEAD;
    let mut previous = sums.averaged(head);
    loop {
        let next = head * 2;
        if next + AVERAGING_DEPTH + 1 > cfg.max_terms {
            return SeriesResult {
                value: previous,
                error_estimate: f64::INFINITY,
                terms_used: sums.sums.len(),
                method: Method::Paired,
                converged: false,
            };
        }
        let estimate = sums.averaged(next);
        let error = (estimate - previous).norm();
        if cfg.accepts(error, estimate.norm()) {
            return SeriesResult {
                value: estimate,
                error_estimate: error,
                terms_used: sums.sums.len(),
                method: Method::Paired,
                converged: true,
            };
        }
        previous = estimate;
        head = next;
    }
}

/// Partial sums over whole pairs: entry i is Σ_{m=start}^{start+2·pairs[i]−1} term(m).
/// `pairs` must be non-decreasing.
pub fn paired_partial_sums<F>(mut term: F, start: u64, pairs: &[usize]) -> Vec<Complex64>
where
    F: FnMut(u64) -> Complex64,
{
    let mut acc = NeumaierSum::new();
    let mut out = Vec::with_capacity(pairs.len());
    let mut done = 0usize;
    for &p in pairs {
        while done < p {
            let m = start + 2 * done as u64;
            acc.add(term(m) + term(m + 1));
            done += 1;
        }
        out.push(acc.value());
    }
    out
}
