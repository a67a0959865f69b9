use super::tail::{tail_integral, TailKind};
use super::{Result, SpectralContext, SpectralError};

/// `‖G_λ‖²` as the bare coefficient sum `Σ_n r(n)/(n − λ)²`, optionally
/// restricted to `|n − λ| < L`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct GreensEvaluation {
    pub lambda: f64,
    pub norm_sq: f64,
    pub window: Option<f64>,
    /// Bound on the error of the tail estimate; zero for windowed sums.
    pub tail_error: f64,
    /// The window contains no norm.
    pub degenerate: bool,
}

/// `Σ_{|n − λ| < L} r(n)/(n − λ)²` over the context table.
pub(crate) fn window_sum(ctx: &SpectralContext, lambda: f64, l: f64) -> Result<(f64, usize)> {
    if lambda + l > ctx.split {
        return Err(SpectralError::TailDomain { from: ctx.split, lambda: lambda + l });
    }
    let range = ctx.table.open_range(lambda - l, lambda + l);
    let count = range.len();
    let sum = range
        .map(|i| ctx.table.weights[i] / (ctx.table.values[i] - lambda).powi(2))
        .sum();
    Ok((sum, count))
}

pub fn greens_norm_sq(
    ctx: &SpectralContext,
    lambda: f64,
    window: Option<f64>,
) -> Result<GreensEvaluation> {
    ctx.check_domain(lambda)?;
    match window {
        Some(l) => {
            let (norm_sq, count) = window_sum(ctx, lambda, l)?;
            Ok(GreensEvaluation { lambda, norm_sq, window, tail_error: 0.0, degenerate: count == 0 })
        }
        None => {
            let head = ctx.head_inv_sq(lambda);
            let tail = tail_integral(TailKind::InvSq { lambda }, ctx.split, &ctx.spec, ctx.options.c_rem)?;
            Ok(GreensEvaluation {
                lambda,
                norm_sq: head + tail.value,
                window: None,
                tail_error: tail.error_bound() + 1e-15 * head,
                degenerate: false,
            })
        }
    }
}

/// `‖g_λ − g_{λ,L}‖₂` for the normalized full and windowed Green's functions.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct TruncationGap {
    pub lambda: f64,
    pub window: f64,
    /// `√(2 − 2‖G_{λ,L}‖/‖G_λ‖)`.
    pub gap: f64,
    /// `2‖G_λ − G_{λ,L}‖/‖G_λ‖`.
    pub upper_bound: f64,
    pub full: GreensEvaluation,
    pub windowed: GreensEvaluation,
}

pub fn truncation_gap(ctx: &SpectralContext, lambda: f64, l: f64) -> Result<TruncationGap> {
    let full = greens_norm_sq(ctx, lambda, None)?;
    let windowed = greens_norm_sq(ctx, lambda, Some(l))?;
    if windowed.degenerate {
        return Err(SpectralError::DegenerateWindow { lambda, window: l });
    }
    let outside = (full.norm_sq - windowed.norm_sq).max(0.0);
    let ratio = (windowed.norm_sq / full.norm_sq).min(1.0);
    // 2 − 2√r = 2(1 − r)/(1 + √r) avoids cancellation near r = 1.
    let gap = (2.0 * (outside / full.norm_sq) / (1.0 + ratio.sqrt())).sqrt();
    let upper_bound = 2.0 * (outside / full.norm_sq).sqrt();
    Ok(TruncationGap { lambda, window: l, gap, upper_bound, full, windowed })
}
