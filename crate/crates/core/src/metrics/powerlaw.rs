//! Tail exponent estimation for degree sequences.
//!
//! Discrete maximum-likelihood estimate in the Hill form with the usual
//! half-unit continuity correction:
//!
//! ```text
//! alpha = 1 + n / sum_i ln(k_i / (k_min - 0.5)),   over k_i >= k_min
//! ```

use crate::error::{Error, Result};
use crate::graph::DegreeSequence;

pub const DEFAULT_K_MIN: usize = 5;

/// Fewest tail entries accepted by the estimators.
pub const MIN_TAIL: usize = 50;

/// Power-law exponent of the entries `>= k_min`.
pub fn fit_powerlaw_exponent(seq: &DegreeSequence, k_min: usize) -> Result<f64> {
    fit_shifted_powerlaw_exponent(seq, 0.0, k_min)
}

/// Exponent of a shifted law `p_k ~ (k + offset)^-alpha`.
///
/// The fit runs on `x = k + offset` over every degree with `x >= k_min`. The
/// shifted values still sit on a unit lattice, so the lower bound is the
/// smallest admissible lattice point minus one half.
pub fn fit_shifted_powerlaw_exponent(seq: &DegreeSequence, offset: f64, k_min: usize) -> Result<f64> {
    if k_min == 0 {
        return Err(Error::InvalidParams("k_min must be positive".into()));
    }
    if offset.is_nan() || offset < 0.0 {
        return Err(Error::InvalidParams(format!("offset {offset} must be nonnegative")));
    }
    let k_lo = (k_min as f64 - offset).ceil().max(0.0) as usize;
    let lower = k_lo as f64 + offset - 0.5;
    let tail: Vec<usize> = seq.values.iter().copied().filter(|&k| k >= k_lo).collect();
    if tail.len() < MIN_TAIL {
        return Err(Error::InsufficientTail {
            count: tail.len(),
            needed: MIN_TAIL,
        });
    }
    if tail.iter().all(|&k| k == tail[0]) {
        return Err(Error::DegenerateTail { count: tail.len() });
    }
    let log_sum: f64 = tail.iter().map(|&k| ((k as f64 + offset) / lower).ln()).sum();
    Ok(1.0 + tail.len() as f64 / log_sum)
}
