use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::DegreeSequence;

/// Normalized cumulative degree distribution: `cumulative[i]` is the fraction
/// of nodes with degree at most `support[i]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeCdf {
    pub support: Vec<usize>,
    pub cumulative: Vec<f64>,
}

impl DegreeCdf {
    pub fn from_sequence(seq: &DegreeSequence) -> Self {
        let sorted = seq.sorted();
        let n = sorted.len() as f64;
        let mut support = Vec::new();
        let mut cumulative = Vec::new();
        for (i, &k) in sorted.iter().enumerate() {
            if sorted.get(i + 1) != Some(&k) {
                support.push(k);
                cumulative.push((i + 1) as f64 / n);
            }
        }
        DegreeCdf { support, cumulative }
    }

    /// Fraction of nodes with degree `<= k`.
    pub fn at(&self, k: usize) -> f64 {
        match self.support.partition_point(|&s| s <= k) {
            0 => 0.0,
            i => self.cumulative[i - 1],
        }
    }
}

/// Kolmogorov-Smirnov distance between the normalized degree CDFs of two
/// sequences: the largest absolute gap over every degree value. Both CDFs are
/// step functions, so only degree 0 and the points of either support need
/// checking. Sequences of different lengths are fine.
pub fn ks_statistic(reference: &DegreeSequence, generated: &DegreeSequence) -> Result<f64> {
    if reference.kind != generated.kind {
        return Err(Error::KindMismatch(reference.kind, generated.kind));
    }
    if reference.is_empty() || generated.is_empty() {
        return Err(Error::InvalidParams("KS needs two nonempty degree sequences".into()));
    }
    let a = DegreeCdf::from_sequence(reference);
    let b = DegreeCdf::from_sequence(generated);
    let gap = std::iter::once(0)
        .chain(a.support.iter().copied())
        .chain(b.support.iter().copied())
        .map(|k| (a.at(k) - b.at(k)).abs())
        .fold(0.0, f64::max);
    Ok(gap)
}
