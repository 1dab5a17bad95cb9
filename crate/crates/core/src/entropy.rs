//! Shannon entropy of region sizes.

use serde::Serialize;

use crate::error::ReportError;
use crate::triplet::TripletResult;
use crate::weights::Variant;

/// Entropy in bits of the distribution `size_i / Σ size`, with `0 log 0 = 0`,
/// and the same value divided by `log2(sizes.len())` (0 for one category).
pub fn shannon_entropy(sizes: &[u64]) -> Result<(f64, f64), ReportError> {
    let total: u64 = sizes.iter().sum();
    if total == 0 {
        return Err(ReportError::AllZero);
    }
    let bits: f64 = sizes
        .iter()
        .filter(|&&s| s > 0)
        .map(|&s| s as f64 / total as f64 * (total as f64 / s as f64).log2())
        .sum();
    // exact for uniform inputs so normalized entropy is exactly 1
    let distinct: Vec<u64> = sizes.iter().copied().filter(|&s| s > 0).collect();
    let bits = if distinct.len() == sizes.len() && distinct.iter().all(|&s| s == distinct[0]) {
        (sizes.len() as f64).log2()
    } else {
        bits
    };
    let normalized = if sizes.len() > 1 {
        bits / (sizes.len() as f64).log2()
    } else {
        0.0
    };
    Ok((bits, normalized.clamp(0.0, 1.0)))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyRow {
    pub ids: [u32; 3],
    pub weight_num: u64,
    pub weight_den: u64,
    pub weight: f64,
    /// Entropy over the variant's own three regions; `None` if all empty.
    pub target_bits: Option<f64>,
    pub target_normalized: Option<f64>,
    pub grouped_bits: Option<f64>,
    pub grouped_normalized: Option<f64>,
}

/// Target regions and grouped totals fed to the entropy for one triplet.
pub fn entropy_inputs(t: &TripletResult, v: Variant) -> Result<(Vec<u64>, Vec<u64>), ReportError> {
    let p = t.partition();
    let r1: Vec<u64> = p.independent().iter().map(|&s| s as u64).collect();
    let r2: Vec<u64> = p.disjoint().iter().map(|&s| s as u64).collect();
    let r3 = 3 * p.abc as u64;
    match v {
        Variant::Independent => Ok((r1.clone(), vec![r1.iter().sum(), r2.iter().sum(), r3])),
        Variant::Disjoint => Ok((r2.clone(), vec![r2.iter().sum(), r3])),
        Variant::Common => Err(ReportError::UnsupportedVariant),
    }
}

pub fn entropy_report(
    results: &[TripletResult],
    v: Variant,
) -> Result<Vec<EntropyRow>, ReportError> {
    if v == Variant::Common {
        return Err(ReportError::UnsupportedVariant);
    }
    results
        .iter()
        .map(|t| {
            let (target, grouped) = entropy_inputs(t, v)?;
            let target = shannon_entropy(&target).ok();
            let grouped = shannon_entropy(&grouped).ok();
            Ok(EntropyRow {
                ids: t.ids,
                weight_num: t.weight.num(),
                weight_den: t.weight.den(),
                weight: t.weight.to_f64(),
                target_bits: target.map(|e| e.0),
                target_normalized: target.map(|e| e.1),
                grouped_bits: grouped.map(|e| e.0),
                grouped_normalized: grouped.map(|e| e.1),
            })
        })
        .collect()
}
