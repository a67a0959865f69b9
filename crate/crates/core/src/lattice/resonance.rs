use super::{norm_classes_up_to, LatticeError, Result, TorusSpec};

/// Axis used for the `S_ζ` threshold: the last nonzero coordinate of `ζ`.
pub fn designated_axis(zeta: [i64; 3]) -> Option<usize> {
    (0..3).rev().find(|&j| zeta[j] != 0)
}

/// `|2⟨ξ,ζ⟩ − |ζ|²| < w_j/4` with `j` the designated axis of `ζ ≠ 0`.
pub fn in_s_zeta(spec: &TorusSpec, xi: [i64; 3], zeta: [i64; 3]) -> Result<bool> {
    let j = designated_axis(zeta).ok_or(LatticeError::ZeroVector)?;
    Ok((2.0 * spec.dot(xi, zeta) - spec.norm(zeta)).abs() < spec.inv[j] / 4.0)
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct SZetaCount {
    pub count: u64,
    pub axis: usize,
    /// `count / X`.
    pub ratio: f64,
}

/// `#{ξ : 1 ≤ |ξ|² ≤ X, |2⟨ξ,ζ⟩ − |ζ|²| < w_j/4}` with `j` the designated
/// axis and `w_j` its inverse-square coefficient.
///
/// For fixed other coordinates the admissible `ξ_j` lie in an interval of
/// length `1/(4|ζ_j|)`, so only the nearest integer is tested.
pub fn count_s_zeta(spec: &TorusSpec, zeta: [i64; 3], x: f64) -> Result<SZetaCount> {
    if spec.is_standard() {
        return Err(LatticeError::NotIrrational);
    }
    let j = designated_axis(zeta).ok_or(LatticeError::ZeroVector)?;
    let (p, q) = match j {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let zz = spec.norm(zeta);
    let wj = spec.inv[j];
    let slope = 2.0 * zeta[j] as f64 * wj;
    let rp = spec.axis_radius(p, x);
    let rq = spec.axis_radius(q, x);
    let mut count = 0u64;
    for u in -rp..=rp {
        for v in -rq..=rq {
            let mut ix = [0i64; 3];
            ix[p] = u;
            ix[q] = v;
            if spec.norm(ix) > x {
                continue;
            }
            // 2⟨ξ,ζ⟩ − |ζ|² = rest + slope·ξ_j.
            let rest = 2.0 * spec.dot(ix, zeta) - zz;
            // Any admissible ξ_j lies within 1/(8|ζ_j|) of the centre.
            ix[j] = (-rest / slope).round() as i64;
            let n = spec.norm(ix);
            if (1.0..=x).contains(&n) && in_s_zeta(spec, ix, zeta)? {
                count += 1;
            }
        }
    }
    Ok(SZetaCount { count, axis: j, ratio: count as f64 / x })
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ResonantPairs {
    pub total: u64,
    pub diagonal: u64,
    /// Ordered pairs by the number of indices with `ξ_j² = η_j²`
    /// (index 3 includes the diagonal).
    pub by_zero_count: [u64; 4],
}

impl ResonantPairs {
    pub fn off_diagonal(&self) -> u64 {
        self.total - self.diagonal
    }
}

/// Ordered pairs `(ξ, η)` with `|ξ|², |η|² ≤ 4X` and `||ξ|² − |η|²| < 4X^{−δ}`.
pub fn count_near_resonant_pairs(spec: &TorusSpec, x: f64, delta: f64) -> Result<ResonantPairs> {
    if spec.is_standard() {
        return Err(LatticeError::NotIrrational);
    }
    if !(delta > 0.0 && delta < 0.5) {
        return Err(LatticeError::OutOfRange("delta must lie in (0, 1/2)"));
    }
    let table = norm_classes_up_to(spec, 4.0 * x)?;
    let width = 4.0 * x.powf(-delta);
    let cls = &table.classes;
    let mut by_zero_count = [0u64; 4];
    let mut diagonal = 0u64;
    for (i, a) in cls.iter().enumerate() {
        diagonal += a.multiplicity;
        by_zero_count[3] += a.multiplicity * a.multiplicity;
        for b in cls[i + 1..].iter().take_while(|b| b.value - a.value < width) {
            let zeros = (0..3).filter(|&t| a.key[t] == b.key[t]).count();
            by_zero_count[zeros] += 2 * a.multiplicity * b.multiplicity;
        }
    }
    let total = by_zero_count.iter().sum();
    Ok(ResonantPairs { total, diagonal, by_zero_count })
}
