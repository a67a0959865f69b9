use super::{sphere_points, LatticeError, Result, TorusSpec};
use crate::arithmetic::{divisor_count, rep_count_binary, squarefree_decomposition};

/// Conic `ax² + 2bxy + cy² + 2dx + 2ey + f = 0` cut from the sphere
/// `|η|² = n` by the plane `⟨η, ζ⟩ = m`, and its reduction to
/// `X² + D·Y² = k` with `ac − b² = t²·D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct StripReduction {
    pub a: i128,
    pub b: i128,
    pub c: i128,
    pub d: i128,
    pub e: i128,
    pub f: i128,
    pub disc_sf: u64,
    pub t: u64,
    pub k: i128,
}

pub fn strip_reduction(zeta: [i64; 3], n: i64, m: i64) -> Result<StripReduction> {
    let [z1, z2, z3] = zeta.map(i128::from);
    if z3 == 0 {
        return Err(LatticeError::ZetaAxis);
    }
    let (n, m) = (n as i128, m as i128);
    let a = z1 * z1 + z3 * z3;
    let b = z1 * z2;
    let c = z2 * z2 + z3 * z3;
    let d = -z1 * m;
    let e = -z2 * m;
    let f = -z3 * z3 * n + m * m;
    let disc = a * c - b * b;
    debug_assert_eq!(disc, z3 * z3 * (z1 * z1 + z2 * z2 + z3 * z3));
    let disc_u = u64::try_from(disc).map_err(|_| LatticeError::Overflow("ac − b²"))?;
    let (t, disc_sf) = squarefree_decomposition(disc_u);
    let g = c * d - b * e;
    let k = disc
        .checked_mul(e * e - c * f)
        .and_then(|v| v.checked_add(g * g))
        .ok_or(LatticeError::Overflow("k"))?;
    Ok(StripReduction { a, b, c, d, e, f, disc_sf, t: t, k })
}

/// `#{η ∈ ℤ³ : |η|² = n, |⟨η, ζ⟩| < bound}` by enumerating the sphere.
pub fn strip_count(spec: &TorusSpec, n: u64, zeta: [i64; 3], bound: f64) -> Result<u64> {
    if !spec.is_standard() {
        return Err(LatticeError::NotStandard);
    }
    if zeta == [0, 0, 0] {
        return Err(LatticeError::ZeroVector);
    }
    Ok(sphere_points(n)
        .iter()
        .filter(|eta| (dot(**eta, zeta) as f64).abs() < bound)
        .count() as u64)
}

fn dot(a: [i64; 3], b: [i64; 3]) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Move the last nonzero coordinate of `ζ` to the third slot.
fn to_third_axis(zeta: [i64; 3]) -> [i64; 3] {
    let mut z = zeta;
    if let Some(j) = (0..3).rev().find(|&j| zeta[j] != 0) {
        z.swap(j, 2);
    }
    z
}

/// Upper bound for `strip_count` summing the binary-form count over each
/// integer plane `⟨η, ζ⟩ = m`, `|m| < bound`.
pub fn strip_count_bound(zeta: [i64; 3], n: u64, bound: f64) -> Result<u64> {
    if zeta == [0, 0, 0] {
        return Err(LatticeError::ZeroVector);
    }
    let z = to_third_axis(zeta);
    let n = i64::try_from(n).map_err(|_| LatticeError::Overflow("n"))?;
    let mmax = if bound > 0.0 { bound.ceil() as i64 - 1 } else { -1 };
    let mut total = 0u64;
    for m in -mmax..=mmax {
        if (m as f64).abs() >= bound {
            continue;
        }
        let red = strip_reduction(z, n, m)?;
        if red.k < 0 {
            continue;
        }
        let k = u64::try_from(red.k).map_err(|_| LatticeError::Overflow("k"))?;
        let r = rep_count_binary(k, red.disc_sf).map_err(|_| LatticeError::Overflow("r_D(k)"))?;
        total += if k == 0 { r } else { r.min(6 * divisor_count(k)) };
    }
    Ok(total)
}
