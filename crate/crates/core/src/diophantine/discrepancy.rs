use super::{DiophantineError, Real, Result};
use std::f64::consts::PI;

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct DiscrepancyReport {
    pub n: usize,
    pub exact_d: f64,
    pub star_d: f64,
    pub et_bound: f64,
    pub et_m: u64,
    pub et_c: f64,
}

fn sorted(points: &[f64]) -> Result<Vec<f64>> {
    if points.is_empty() {
        return Err(DiophantineError::Empty);
    }
    if points.iter().any(|p| !(0.0..1.0).contains(p)) {
        return Err(DiophantineError::OutOfRange("points must lie in [0, 1)"));
    }
    let mut xs = points.to_vec();
    xs.sort_by(f64::total_cmp);
    Ok(xs)
}

/// Extreme discrepancy `sup_{[a,b) ⊆ [0,1]} |A([a,b))/N − (b − a)|`.
///
/// With `v_i = i/N − x_(i)` over the order statistics, the supremum is
/// `1/N + max v − min v`. Runs in `O(N log N)`.
pub fn exact_discrepancy(points: &[f64]) -> Result<f64> {
    let xs = sorted(points)?;
    let n = xs.len() as f64;
    let (mut hi, mut lo) = (f64::NEG_INFINITY, f64::INFINITY);
    for (i, x) in xs.iter().enumerate() {
        let v = (i + 1) as f64 / n - x;
        hi = hi.max(v);
        lo = lo.min(v);
    }
    Ok((1.0 / n + hi - lo).min(1.0))
}

/// `O(N²)` evaluation over all critical intervals.
///
/// Excess counts are realized by closed intervals `[x_i, x_j]`, deficits
/// by open intervals between consecutive critical endpoints in
/// `{0} ∪ points ∪ {1}`; both are limits of half-open intervals.
pub fn exact_discrepancy_reference(points: &[f64]) -> Result<f64> {
    let xs = sorted(points)?;
    let n = xs.len() as f64;
    let below = |t: f64| xs.partition_point(|&x| x < t);
    let upto = |t: f64| xs.partition_point(|&x| x <= t);
    let mut ends = Vec::with_capacity(xs.len() + 2);
    ends.push(0.0);
    ends.extend(xs.iter().copied());
    ends.push(1.0);
    ends.dedup();
    let mut best = 0.0f64;
    for (i, &a) in ends.iter().enumerate() {
        for &b in &ends[i..] {
            let closed = (upto(b) - below(a)) as f64 / n - (b - a);
            let inside = (below(b) as i64 - upto(a) as i64).max(0);
            let open = (b - a) - inside as f64 / n;
            best = best.max(closed).max(open);
        }
    }
    Ok(best.min(1.0))
}

/// Star discrepancy over intervals `[0, b)`.
pub fn star_discrepancy(points: &[f64]) -> Result<f64> {
    let xs = sorted(points)?;
    let n = xs.len() as f64;
    let mut best = 0.0f64;
    for (i, x) in xs.iter().enumerate() {
        best = best.max((i + 1) as f64 / n - x).max(x - i as f64 / n);
    }
    Ok(best)
}

/// `C·(1/m + Σ_{h≤m} (1/h)|(1/N) Σ_n e^{2πi h x_n}|)` with the exponential
/// sums evaluated directly.
pub fn erdos_turan_bound(points: &[f64], m: u64, c: f64) -> Result<f64> {
    if points.is_empty() {
        return Err(DiophantineError::Empty);
    }
    if m == 0 {
        return Err(DiophantineError::OutOfRange("m must be positive"));
    }
    let m = m as usize;
    let mut re = vec![0.0f64; m];
    let mut im = vec![0.0f64; m];
    for &x in points {
        let (s, c1) = (2.0 * PI * x).sin_cos();
        let (mut zr, mut zi) = (1.0f64, 0.0f64);
        for h in 0..m {
            // Resynchronize the power recurrence to bound drift.
            if h % 256 == 255 {
                let (s2, c2) = (2.0 * PI * ((h + 1) as f64 * x).fract()).sin_cos();
                (zr, zi) = (c2, s2);
            } else {
                (zr, zi) = (zr * c1 - zi * s, zr * s + zi * c1);
            }
            re[h] += zr;
            im[h] += zi;
        }
    }
    let n = points.len() as f64;
    let sum: f64 = (0..m)
        .map(|h| re[h].hypot(im[h]) / (n * (h + 1) as f64))
        .sum();
    Ok(c * (1.0 / m as f64 + sum))
}

/// Erdős–Turán bound for `x_n = {nα + β}`, `n = 1..N`, using
/// `|Σ_n e^{2πi h x_n}| = |sin(πhNα)/sin(πhα)|`, which is independent of `β`.
pub fn erdos_turan_bound_kronecker(alpha: Real, n: u64, m: u64, c: f64) -> Result<f64> {
    if n == 0 || m == 0 {
        return Err(DiophantineError::OutOfRange("N and m must be positive"));
    }
    let mut sum = 0.0;
    for h in 1..=m {
        let ha = alpha * h as f64;
        let den = (PI * ha.fract_f64()).sin().abs();
        let num = (PI * (ha * n as f64).fract_f64()).sin().abs();
        let mag = if den < 1e-300 { n as f64 } else { (num / den).min(n as f64) };
        sum += mag / (n as f64 * h as f64);
    }
    Ok(c * (1.0 / m as f64 + sum))
}

impl DiscrepancyReport {
    /// Report for `x_n = {nα + β}`, `n = 1..N`, with the closed-form
    /// exponential sums.
    pub fn kronecker(alpha: Real, beta: f64, n: usize, m: u64, c: f64) -> Result<DiscrepancyReport> {
        let seq = super::kronecker_sequence(alpha, beta, n)?;
        Ok(DiscrepancyReport {
            n,
            exact_d: exact_discrepancy(&seq.points)?,
            star_d: star_discrepancy(&seq.points)?,
            et_bound: erdos_turan_bound_kronecker(alpha, n as u64, m, c)?,
            et_m: m,
            et_c: c,
        })
    }
}
