use super::{DiophantineError, Real, Result, RATIONAL_GUARD};

fn checked_dist(alpha: Real, h: u64) -> Result<f64> {
    let d = (alpha * h as f64).dist_to_int().to_f64();
    if d < RATIONAL_GUARD {
        return Err(DiophantineError::RationalAlpha { h });
    }
    Ok(d)
}

/// `Σ_{h=1}^{m} 1/‖hα‖`.
pub fn sum_inv_dist(alpha: Real, m: u64) -> Result<f64> {
    let mut total = 0.0;
    for h in 1..=m {
        total += 1.0 / checked_dist(alpha, h)?;
    }
    Ok(total)
}

/// `Σ_{h=1}^{m} 1/(h‖hα‖)`.
pub fn sum_inv_hdist(alpha: Real, m: u64) -> Result<f64> {
    let mut total = 0.0;
    for h in 1..=m {
        total += 1.0 / (h as f64 * checked_dist(alpha, h)?);
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct FiniteType {
    pub tau: f64,
    pub q_max: u64,
    /// Convergent denominator realizing `tau`.
    pub q_star: u64,
    /// Convergent denominators `q_k ≤ q_max`, `q_k ≥ 2`.
    pub denominators: Vec<u64>,
}

/// Estimate the type `τ` of `α` from its continued-fraction convergents.
///
/// `τ̂ = max log(1/‖qα‖)/log q` over convergent denominators in the top
/// decade `[Q/10, Q]`; if that decade holds none, the largest `q ≤ Q` is used.
/// Each ratio exceeds 1 because `‖q_k α‖ < 1/q_{k+1}`.
pub fn finite_type_estimate(alpha: Real, q_max: u64) -> Result<FiniteType> {
    if q_max < 10 {
        return Err(DiophantineError::OutOfRange("Q must be at least 10"));
    }
    let mut denominators = Vec::new();
    let (mut q_prev, mut q) = (0u64, 1u64);
    let mut x = alpha.fract();
    loop {
        if x.hi() < RATIONAL_GUARD {
            return Err(DiophantineError::RationalAlpha { h: q });
        }
        x = x.recip();
        let a = x.floor();
        x = x - a;
        let a = a.to_f64() as u64;
        let Some(next) = a.checked_mul(q).and_then(|v| v.checked_add(q_prev)) else {
            break;
        };
        if next > q_max {
            break;
        }
        (q_prev, q) = (q, next);
        if q >= 2 {
            denominators.push(q);
        }
    }
    let window: Vec<u64> = denominators.iter().copied().filter(|&d| d * 10 >= q_max).collect();
    let candidates = if window.is_empty() {
        denominators.last().copied().into_iter().collect()
    } else {
        window
    };
    let mut best = (1.0f64, *candidates.first().unwrap_or(&1));
    for qk in candidates {
        let d = checked_dist(alpha, qk)?;
        let ratio = (1.0 / d).ln() / (qk as f64).ln();
        if ratio > best.0 || best.1 == 1 {
            best = (ratio, qk);
        }
    }
    Ok(FiniteType { tau: best.0, q_max, q_star: best.1, denominators })
}
