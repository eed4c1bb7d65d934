use crate::error::{Error, Result};
use crate::graph::DegreeSequence;

/// Mean squared distance between the ascending-sorted degree sequences.
///
/// Only defined for sequences of equal length (graphs with the same node
/// count); `Ok(None)` otherwise.
pub fn msd_sorted(reference: &DegreeSequence, generated: &DegreeSequence) -> Result<Option<f64>> {
    if reference.kind != generated.kind {
        return Err(Error::KindMismatch(reference.kind, generated.kind));
    }
    if reference.len() != generated.len() || reference.is_empty() {
        return Ok(None);
    }
    let a = reference.sorted();
    let b = generated.sorted();
    let sum: u128 = a
        .iter()
        .zip(&b)
        .map(|(&x, &y)| {
            let d = x.abs_diff(y) as u128;
            d * d
        })
        .sum();
    Ok(Some(sum as f64 / a.len() as f64))
}
