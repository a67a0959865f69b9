use super::greens::greens_norm_sq;
use super::quadrature::integrate_to_infinity;
use super::tail::{finite_main, QUAD_REL_TOL, THETA};
use super::{Result, SpectralContext, SpectralError};
use crate::lattice::for_each_in_shell;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "mode", content = "window", rename_all = "snake_case")]
pub enum MatrixMode {
    /// Untruncated; `Some(W)` fixes the exact-summation half-width.
    Full(Option<f64>),
    /// Both `ξ` and `ξ − ζ` restricted to `|·|² ∈ (λ − L, λ + L)`.
    Truncated(f64),
    /// Only `ξ` restricted to the window.
    PaperSum(f64),
}

impl MatrixMode {
    pub fn tag(&self) -> &'static str {
        match self {
            MatrixMode::Full(_) => "full",
            MatrixMode::Truncated(_) => "truncated",
            MatrixMode::PaperSum(_) => "paper_sum",
        }
    }
}

/// `⟨e_ζ g_λ, g_λ⟩ = Σ_ξ a(ξ)a(ξ − ζ) / Σ_ξ a(ξ)²` with `a(ξ) = 1/(|ξ|² − λ)`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct MatrixElementRecord {
    pub lambda: f64,
    pub zeta: [i64; 3],
    pub mode: &'static str,
    /// Window `L`, or the exact-summation half-width in full mode.
    pub window: f64,
    pub value: f64,
    /// Bound on the error from tail estimates or omitted terms.
    pub tail_bound: f64,
}

/// Half-width of the exactly summed shell in full mode.
///
/// Outside it `|ξ − ζ|²` stays on the same side of `λ` as `|ξ|²`, and
/// the angular expansion parameter `B/A` is at most `1/factor`.
pub fn default_shell_width(lambda: f64, zeta_norm: f64, factor: f64) -> f64 {
    let z = zeta_norm.sqrt();
    factor * (2.0 * z * lambda.max(0.0).sqrt() + zeta_norm) + 8.0
}

pub const SHELL_FACTOR: f64 = 3.0;

pub fn matrix_element(
    ctx: &SpectralContext,
    lambda: f64,
    zeta: [i64; 3],
    mode: MatrixMode,
) -> Result<MatrixElementRecord> {
    ctx.check_domain(lambda)?;
    let spec = &ctx.spec;
    let zeta_norm = spec.norm(zeta);
    let window = match mode {
        MatrixMode::Full(w) => {
            w.unwrap_or_else(|| default_shell_width(lambda, zeta_norm, SHELL_FACTOR))
        }
        MatrixMode::Truncated(l) | MatrixMode::PaperSum(l) => l,
    };
    let record = |value, tail_bound| MatrixElementRecord {
        lambda,
        zeta,
        mode: mode.tag(),
        window,
        value,
        tail_bound,
    };
    if zeta == [0, 0, 0] {
        return Ok(record(1.0, 0.0));
    }
    if !(window > 0.0) {
        return Err(SpectralError::OutOfRange("window must be positive"));
    }
    let (lo, hi) = (lambda - window, lambda + window);
    let guard = |n: f64| ctx.guard(n);
    let mut pole = None;
    let mut num = 0.0;
    let mut den = 0.0;
    for_each_in_shell(spec, lo, hi, |ix, n| {
        let shifted = [ix[0] - zeta[0], ix[1] - zeta[1], ix[2] - zeta[2]];
        let m = spec.norm(shifted);
        if (m - lambda).abs() < guard(m) || (n - lambda).abs() < guard(n) {
            pole = Some(if (n - lambda).abs() < guard(n) { n } else { m });
            return;
        }
        let a = 1.0 / (n - lambda);
        den += a * a;
        let inside = lo < m && m < hi;
        if matches!(mode, MatrixMode::Truncated(_)) && !inside {
            return;
        }
        num += a / (m - lambda);
    });
    if let Some(norm) = pole {
        return Err(SpectralError::PoleProximity { lambda, norm });
    }
    match mode {
        MatrixMode::Truncated(l) | MatrixMode::PaperSum(l) => {
            if den == 0.0 {
                return Err(SpectralError::DegenerateWindow { lambda, window: l });
            }
            Ok(record(num / den, 0.0))
        }
        MatrixMode::Full(_) => {
            if window < 2.0 * zeta_norm.sqrt() * lambda.max(0.0).sqrt() + zeta_norm {
                return Err(SpectralError::OutOfRange("shell narrower than the ζ-shift"));
            }
            let (tail, tail_bound) = radial_tails(ctx, lambda, zeta_norm, lo, hi)?;
            let g = greens_norm_sq(ctx, lambda, None)?;
            let value = (num + tail) / g.norm_sq;
            let bound = (tail_bound + value.abs() * g.tail_error) / g.norm_sq;
            Ok(record(value, bound))
        }
    }
}

/// Angle-averaged kernel `a(t)·(1/2B)·ln((A + B)/(A − B))` with
/// `A = t + |ζ|² − λ`, `B = 2|ζ|√t`, and the bound on the deviation of any
/// symmetrized point value from it.
fn averaged(t: f64, lambda: f64, zeta_norm: f64) -> (f64, f64) {
    let a = 1.0 / (t - lambda);
    let big_a = t + zeta_norm - lambda;
    let big_b = 2.0 * (zeta_norm * t.max(0.0)).sqrt();
    let x = big_b / big_a;
    let ratio = if x.abs() < 1e-6 { 1.0 + x * x / 3.0 } else { x.atanh() / x };
    let h = a * ratio / big_a;
    let dev = (a * big_b * big_b / (big_a * (big_a * big_a - big_b * big_b))).abs();
    (h, dev)
}

/// Lattice sums of the averaged kernel over `|ξ|² ≤ lo` and `|ξ|² ≥ hi`,
/// replaced by Weyl main terms, with remainder and angular bounds.
fn radial_tails(
    ctx: &SpectralContext,
    lambda: f64,
    zeta_norm: f64,
    lo: f64,
    hi: f64,
) -> Result<(f64, f64)> {
    let spec = &ctx.spec;
    let c_rem = ctx.options.c_rem;
    let scale = 2.0 * PI * spec.abc();
    let h = |t: f64| averaged(t, lambda, zeta_norm).0;
    let dev = |t: f64| averaged(t, lambda, zeta_norm).1;

    // Outer region: h is positive and decreasing, so
    // ∫|h′|t^θ = h(hi)·hi^θ + θ∫ h·t^{θ−1}.
    let (outer, outer_q) = integrate_to_infinity(|t| h(t) * t.sqrt(), hi, QUAD_REL_TOL, 0.0);
    let (outer_var, _) = integrate_to_infinity(|t| h(t) * t.powf(THETA - 1.0), hi, 1e-8, 0.0);
    let (outer_dev, _) = integrate_to_infinity(|t| dev(t) * t.sqrt(), hi, 1e-6, 0.0);
    let edge = h(hi) * hi.powf(THETA);
    let mut value = scale * outer;
    let mut bound = scale * outer_q + c_rem * (2.0 * edge + THETA * outer_var) + scale * outer_dev;

    // Inner region: h is positive and increasing on [0, lo].
    if lo > 0.0 {
        let (inner, inner_q) = finite_main(h, 0.0, lo, spec);
        let (inner_dev, _) = finite_main(dev, 0.0, lo, spec);
        value += inner;
        bound += inner_q + c_rem * 2.0 * h(lo) * lo.powf(THETA) + h(0.0).abs() + inner_dev;
    }
    Ok((value, bound))
}
