use super::{Result, SpectralContext, SpectralError};
use rayon::prelude::*;

/// One perturbed eigenvalue `λ_k` with its bracketing norms.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct PerturbedEigenvalue {
    pub index: usize,
    pub value: f64,
    /// `−∞` for `λ₀`.
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    /// `|F(λ) − target|`.
    pub residual: f64,
    /// Root lies within a few pole guards of a bracket end.
    pub cluster_warning: bool,
}

const MAX_ITER: usize = 200;

/// Root of `G = F − target` on `(lo, hi)` with `G(lo) < 0 < G(hi)`, by
/// Newton steps safeguarded with bisection.
fn safeguarded_newton(ctx: &SpectralContext, mut lo: f64, mut hi: f64) -> Result<(f64, f64)> {
    let target = ctx.target;
    let tol = ctx.options.residual_tol * target.abs().max(1.0);
    let eval = |x: f64| {
        let (f, df) = ctx.secular_with_derivative(x);
        (f - target, df)
    };
    let (glo, _) = eval(lo);
    let (ghi, _) = eval(hi);
    if !(glo < 0.0 && ghi > 0.0) {
        return Err(SpectralError::BracketFailure { lo, hi });
    }
    let mut x = 0.5 * (lo + hi);
    let mut best = (x, f64::INFINITY);
    for _ in 0..MAX_ITER {
        let (g, dg) = eval(x);
        if g.abs() < best.1 {
            best = (x, g.abs());
        }
        if g.abs() <= tol {
            break;
        }
        if g < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        if hi - lo <= 4.0 * f64::EPSILON * x.abs().max(1.0) {
            break;
        }
        let newton = x - g / dg;
        x = if dg > 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
    }
    Ok(best)
}

/// Perturbed eigenvalues `λ₀` and every `λ_k` whose upper bracket norm is
/// `≤ X`.
pub fn solve_eigenvalues(ctx: &SpectralContext, x: f64) -> Result<Vec<PerturbedEigenvalue>> {
    if x + 1.0 >= ctx.split {
        return Err(SpectralError::TailDomain { from: ctx.split, lambda: x });
    }
    let values = &ctx.table.values;
    let top = values.partition_point(|&n| n <= x);
    let mut out = vec![solve_lowest(ctx)?];
    let rest: Vec<Result<PerturbedEigenvalue>> = (1..top)
        .into_par_iter()
        .map(|k| {
            let (a, b) = (values[k - 1], values[k]);
            let (ga, gb) = (ctx.guard(a), ctx.guard(b));
            let (value, residual) = safeguarded_newton(ctx, a + ga, b - gb)?;
            let cluster_warning = value - a < 4.0 * ga || b - value < 4.0 * gb;
            Ok(PerturbedEigenvalue {
                index: k,
                value,
                bracket_lo: a,
                bracket_hi: b,
                residual,
                cluster_warning,
            })
        })
        .collect();
    for r in rest {
        out.push(r?);
    }
    Ok(out)
}

/// `λ₀ < 0`, bracketed by expanding `[−2^j, 0)`.
fn solve_lowest(ctx: &SpectralContext) -> Result<PerturbedEigenvalue> {
    let g = |x: f64| ctx.secular_with_derivative(x).0 - ctx.target;
    let hi = -ctx.guard(0.0);
    let mut upper = hi;
    let mut lower = None;
    for j in 0..=60 {
        let x = -(2f64.powi(j));
        if g(x) < 0.0 {
            lower = Some(x);
            break;
        }
        upper = x;
    }
    let lo = lower.ok_or(SpectralError::BracketFailure { lo: -(2f64.powi(60)), hi })?;
    let (value, residual) = safeguarded_newton(ctx, lo, upper.min(hi))?;
    Ok(PerturbedEigenvalue {
        index: 0,
        value,
        bracket_lo: f64::NEG_INFINITY,
        bracket_hi: 0.0,
        residual,
        cluster_warning: -value < 4.0 * ctx.guard(0.0),
    })
}
