use super::{exact_discrepancy, DiophantineError, Real, Result};
use crate::fit::least_squares;

#[derive(Debug, Clone, PartialEq)]
pub struct KroneckerSequence {
    pub alpha: Real,
    pub beta: f64,
    /// `{nα + β}` for `n = 1..=N`, each in `[0, 1)`.
    pub points: Vec<f64>,
}

impl KroneckerSequence {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn kronecker_sequence(alpha: Real, beta: f64, n: usize) -> Result<KroneckerSequence> {
    if n == 0 {
        return Err(DiophantineError::OutOfRange("N must be positive"));
    }
    let b = Real::from(beta);
    let points = (1..=n as u64).map(|i| (alpha * i as f64 + b).fract_f64()).collect();
    Ok(KroneckerSequence { alpha, beta, points })
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct OffsetFit {
    pub beta: f64,
    pub exponent: f64,
    /// `log c` with the exponent refitted freely at this offset.
    pub log_c: f64,
    /// `log c` with the exponent pinned to the base offset's fit.
    pub log_c_pinned: f64,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct DecayCheck {
    pub ns: Vec<usize>,
    pub discrepancies: Vec<f64>,
    pub base: OffsetFit,
    pub offsets: Vec<OffsetFit>,
    pub max_exponent_deviation: f64,
    pub max_constant_deviation: f64,
    /// Fitted exponent above −0.1: no visible decay on this range.
    pub degenerate: bool,
}

fn fit_offset(
    alpha: Real,
    beta: f64,
    ns: &[usize],
    pinned: Option<f64>,
) -> Result<(OffsetFit, Vec<f64>)> {
    let mut ds = Vec::with_capacity(ns.len());
    for &n in ns {
        ds.push(exact_discrepancy(&kronecker_sequence(alpha, beta, n)?.points)?);
    }
    let lx: Vec<f64> = ns.iter().map(|&n| (n as f64).ln()).collect();
    let ly: Vec<f64> = ds.iter().map(|d| d.ln()).collect();
    let (exponent, log_c) =
        least_squares(&lx, &ly).ok_or(DiophantineError::OutOfRange("need two distinct N"))?;
    let s = pinned.unwrap_or(exponent);
    let log_c_pinned = lx.iter().zip(&ly).map(|(x, y)| y - s * x).sum::<f64>() / lx.len() as f64;
    Ok((OffsetFit { beta, exponent, log_c, log_c_pinned }, ds))
}

/// Fit `D_N ≈ c·N^s` for `x_n = {nα + β}` over `ns`, then refit at each
/// extra offset to compare exponents and constants.
pub fn discrepancy_decay_check(
    alpha: Real,
    beta: f64,
    ns: &[usize],
    offsets: &[f64],
) -> Result<DecayCheck> {
    if (alpha * 1.0).dist_to_int().to_f64() < super::RATIONAL_GUARD {
        return Err(DiophantineError::RationalAlpha { h: 1 });
    }
    let (base, discrepancies) = fit_offset(alpha, beta, ns, None)?;
    let mut fits = Vec::with_capacity(offsets.len());
    for &b in offsets {
        fits.push(fit_offset(alpha, b, ns, Some(base.exponent))?.0);
    }
    let max_exponent_deviation =
        fits.iter().map(|f| (f.exponent - base.exponent).abs()).fold(0.0, f64::max);
    let max_constant_deviation =
        fits.iter().map(|f| (f.log_c_pinned - base.log_c_pinned).abs()).fold(0.0, f64::max);
    Ok(DecayCheck {
        ns: ns.to_vec(),
        discrepancies,
        degenerate: base.exponent > -0.1,
        base,
        offsets: fits,
        max_exponent_deviation,
        max_constant_deviation,
    })
}
