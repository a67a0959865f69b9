use super::{ArithmeticError, Result};
use std::f64::consts::PI;

/// Kronecker symbol `(a/m)` for `m ≥ 1`.
pub fn kronecker(a: i64, m: u64) -> i8 {
    assert!(m >= 1, "kronecker symbol needs a positive modulus");
    let twos = m.trailing_zeros();
    let mut odd = m >> twos;
    let mut sign = 1i8;
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        // (a/2) = 1 for a ≡ ±1 (mod 8), −1 for a ≡ ±3 (mod 8).
        if twos % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            sign = -sign;
        }
    }
    // Jacobi symbol (a/odd), which depends only on a mod odd.
    let mut top = a.rem_euclid(odd as i64) as u64;
    while top != 0 {
        let t = top.trailing_zeros();
        top >>= t;
        if t % 2 == 1 && matches!(odd % 8, 3 | 5) {
            sign = -sign;
        }
        if top % 4 == 3 && odd % 4 == 3 {
            sign = -sign;
        }
        std::mem::swap(&mut top, &mut odd);
        top %= odd;
    }
    if odd == 1 { sign } else { 0 }
}

/// Gauss' class-number formula for primitive representations, with a
/// rigorous bound on the truncated `L(1, χ)` series.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct GaussEstimate {
    pub n: u64,
    pub terms: u64,
    pub g_n: u32,
    /// `π⁻¹ G_n √n Σ_{m ≤ terms} χ(m)/m`.
    pub value: f64,
    /// Bound on `|value − R3(n)|` from the omitted character-sum tail.
    pub error_bar: f64,
    /// False for `n ≡ 0, 4 (mod 8)`, where the formula is reported as zero.
    pub applicable: bool,
}

/// Estimate `R3(n)` from `L(1, χ)` with `χ(m) = (−4n/m)`.
///
/// The tail satisfies `|Σ_{m>T} χ(m)/m| ≤ 4n/T` for `T ≥ 4n`.
pub fn gauss_r3(n: u64, terms: u64) -> Result<GaussEstimate> {
    if n == 0 {
        return Err(ArithmeticError::OutOfRange("n must be positive"));
    }
    let needed = n.checked_mul(4).ok_or(ArithmeticError::Overflow("4n"))?;
    if terms < needed {
        return Err(ArithmeticError::TooFewTerms { terms, needed });
    }
    let (g_n, applicable) = match n % 8 {
        0 | 4 => (0, false),
        7 => (0, true),
        3 => (16, true),
        _ => (24, true),
    };
    if g_n == 0 {
        return Ok(GaussEstimate { n, terms, g_n, value: 0.0, error_bar: 0.0, applicable });
    }
    let d = -(needed as i64);
    // Summed from the smallest terms up to limit rounding growth.
    let partial: f64 = (1..=terms)
        .rev()
        .map(|m| kronecker(d, m) as f64 / m as f64)
        .sum();
    let scale = g_n as f64 * (n as f64).sqrt() / PI;
    let rounding = terms as f64 * f64::EPSILON * scale;
    Ok(GaussEstimate {
        n,
        terms,
        g_n,
        value: scale * partial,
        error_bar: scale * needed as f64 / terms as f64 + rounding,
        applicable,
    })
}
