use super::Result;
use crate::fit::log_log_fit;
use crate::lattice::TorusSpec;
use crate::spectral::{
    matrix_element, solve_eigenvalues, truncation_gap, MatrixElementRecord, MatrixMode,
    PerturbedEigenvalue, SpectralContext,
};
use rayon::prelude::*;

/// Values with `|v|` below this are treated as exact zeros in fits.
pub const ZERO_FLOOR: f64 = 1e-14;

/// Truncation window: `λ^δ` on the standard torus, `λ^{−δ}` otherwise.
pub fn window_for(spec: &TorusSpec, lambda: f64, delta: f64) -> f64 {
    if spec.is_standard() {
        lambda.powf(delta)
    } else {
        lambda.powf(-delta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum ScanMode {
    Full,
    Truncated { delta: f64 },
    PaperSum { delta: f64 },
}

impl ScanMode {
    fn at(&self, spec: &TorusSpec, lambda: f64) -> MatrixMode {
        match *self {
            ScanMode::Full => MatrixMode::Full(None),
            ScanMode::Truncated { delta } => MatrixMode::Truncated(window_for(spec, lambda, delta)),
            ScanMode::PaperSum { delta } => MatrixMode::PaperSum(window_for(spec, lambda, delta)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct DecayScan {
    pub zeta: [i64; 3],
    pub x_lo: f64,
    pub x_hi: f64,
    pub mode: ScanMode,
    /// Sorted by λ.
    pub records: Vec<MatrixElementRecord>,
    /// Least-squares fit of `log|v|` on `log λ`; `None` with fewer than two
    /// usable records.
    pub fitted_slope: Option<f64>,
    pub fitted_intercept: Option<f64>,
}

/// Scan over `Λ_φ ∩ [X_lo, X_hi]`.
pub fn decay_scan(
    ctx: &SpectralContext,
    zeta: [i64; 3],
    x_lo: f64,
    x_hi: f64,
    mode: ScanMode,
) -> Result<DecayScan> {
    let eig = solve_eigenvalues(ctx, x_hi)?;
    let lambdas: Vec<f64> =
        eig.iter().map(|e| e.value).filter(|l| (x_lo..=x_hi).contains(l)).collect();
    let mut scan = decay_scan_on(ctx, &lambdas, zeta, mode)?;
    scan.x_lo = x_lo;
    scan.x_hi = x_hi;
    Ok(scan)
}

/// Scan over precomputed eigenvalues.
pub fn decay_scan_on(
    ctx: &SpectralContext,
    lambdas: &[f64],
    zeta: [i64; 3],
    mode: ScanMode,
) -> Result<DecayScan> {
    let mut sorted = lambdas.to_vec();
    sorted.sort_by(f64::total_cmp);
    let records = sorted
        .par_iter()
        .map(|&l| matrix_element(ctx, l, zeta, mode.at(&ctx.spec, l)))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let xs: Vec<f64> = records.iter().map(|r| r.lambda).collect();
    let vs: Vec<f64> = records.iter().map(|r| r.value).collect();
    let fit = log_log_fit(&xs, &vs, ZERO_FLOOR);
    Ok(DecayScan {
        zeta,
        x_lo: sorted.first().copied().unwrap_or(f64::NAN),
        x_hi: sorted.last().copied().unwrap_or(f64::NAN),
        mode,
        records,
        fitted_slope: fit.map(|f| f.0),
        fitted_intercept: fit.map(|f| f.1),
    })
}

/// `‖g_λ − g_{λ,L}‖²` and `‖G_λ‖²` at one eigenvalue, `L = window_for(λ, δ)`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct TruncationRecord {
    pub lambda: f64,
    pub window: f64,
    pub gap_sq: f64,
    pub norm_sq: f64,
    /// `‖G_{λ,L}‖/‖G_λ‖`.
    pub ratio: f64,
}

pub fn truncation_scan(
    ctx: &SpectralContext,
    eigenvalues: &[PerturbedEigenvalue],
    delta: f64,
) -> Result<Vec<TruncationRecord>> {
    Ok(eigenvalues
        .par_iter()
        .map(|e| {
            let l = window_for(&ctx.spec, e.value, delta);
            let t = truncation_gap(ctx, e.value, l)?;
            Ok(TruncationRecord {
                lambda: e.value,
                window: l,
                gap_sq: t.gap * t.gap,
                norm_sq: t.full.norm_sq,
                ratio: (t.windowed.norm_sq / t.full.norm_sq).sqrt(),
            })
        })
        .collect::<std::result::Result<Vec<_>, crate::spectral::SpectralError>>()?)
}
