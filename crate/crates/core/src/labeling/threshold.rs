//! Degree thresholds and closed-form label-size bounds.

use crate::error::{Error, Result};
use crate::powerlaw::zeta;

/// `ceil(log2 n)` for `n >= 1`, computed exactly.
pub fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

fn require_log_range(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::Domain(format!(
            "need n >= 3 so that log2 n > 1, got {n}"
        )));
    }
    Ok((n as f64).log2())
}

fn require_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 1.0) {
        return Err(Error::Domain(format!("alpha must exceed 1, got {alpha}")));
    }
    Ok(())
}

fn ceil_at_least_one(x: f64) -> usize {
    (x.ceil() as usize).max(1)
}

/// Threshold balancing thin and fat labels for graphs with at most `c n`
/// edges: `ceil(sqrt(2 c n / log2 n))`, at least 1.
pub fn sparse_threshold(n: usize, c: f64) -> Result<usize> {
    let log_n = require_log_range(n)?;
    if !(c >= 0.0) {
        return Err(Error::Domain(format!(
            "sparsity c must be non-negative, got {c}"
        )));
    }
    Ok(ceil_at_least_one((2.0 * c * n as f64 / log_n).sqrt()))
}

/// Threshold predicted from the exponent alone:
/// `ceil((C n / (alpha - 1))^(1/alpha))` with `C = 1 / zeta(alpha)`.
pub fn predicted_threshold(n: usize, alpha: f64) -> Result<usize> {
    require_alpha(alpha)?;
    let c = 1.0 / zeta(alpha)?;
    Ok(ceil_at_least_one(
        (c * n as f64 / (alpha - 1.0)).powf(1.0 / alpha),
    ))
}

/// Threshold for the tail family: `ceil((C' n / log2 n)^(1/alpha))`, never
/// below `ceil((n / log2 n)^(1/alpha))`.
pub fn powerlaw_threshold(n: usize, alpha: f64, c_prime: f64) -> Result<usize> {
    let log_n = require_log_range(n)?;
    require_alpha(alpha)?;
    if !(c_prime > 0.0) {
        return Err(Error::Domain(format!("C' must be positive, got {c_prime}")));
    }
    let nf = n as f64;
    let balanced = ceil_at_least_one((c_prime * nf / log_n).powf(1.0 / alpha));
    let floor = ceil_at_least_one((nf / log_n).powf(1.0 / alpha));
    Ok(balanced.max(floor))
}

/// Closed-form label-size bounds, in whole bits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsReport {
    /// Tail-family scheme: `(C' n)^(1/alpha) (log2 n)^(1 - 1/alpha) + 2 log2 n + 1`.
    pub powerlaw_bound: u64,
    /// Sparse scheme: `sqrt(2 c n log2 n) + 2 log2 n + 1`.
    pub sparse_bound: u64,
    /// Bounded-degree scheme: `ceil(max_degree / 2) * ceil(log2 n)`.
    pub bd_bound: u64,
    /// General-graph scheme: `floor(n / 2) + 6`.
    pub aktz_bound: u64,
    pub n: usize,
    pub max_degree: usize,
    pub c: f64,
    pub alpha: f64,
    pub c_prime: f64,
}

pub fn theoretical_bounds(
    n: usize,
    max_degree: usize,
    c: f64,
    alpha: f64,
    c_prime: f64,
) -> Result<BoundsReport> {
    let log_n = require_log_range(n)?;
    require_alpha(alpha)?;
    let nf = n as f64;
    let powerlaw =
        (c_prime * nf).powf(1.0 / alpha) * log_n.powf(1.0 - 1.0 / alpha) + 2.0 * log_n + 1.0;
    let sparse = (2.0 * c * nf * log_n).sqrt() + 2.0 * log_n + 1.0;
    Ok(BoundsReport {
        powerlaw_bound: powerlaw.ceil() as u64,
        sparse_bound: sparse.ceil() as u64,
        bd_bound: (max_degree.div_ceil(2) * ceil_log2(n)) as u64,
        aktz_bound: (n / 2 + 6) as u64,
        n,
        max_degree,
        c,
        alpha,
        c_prime,
    })
}
