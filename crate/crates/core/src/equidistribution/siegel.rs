use crate::arithmetic::r3_table;

pub const SIEGEL_EXPONENT: f64 = 0.45;

/// Empirical constant `min r3(n)/n^{0.45}` over `1 ≤ n ≤ X`,
/// `n ≢ 0, 4, 7 (mod 8)`. No claim beyond the computed range.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct SiegelCheck {
    pub x: u64,
    pub constant: f64,
    pub argmin: u64,
}

pub fn siegel_check(x: u64) -> Option<SiegelCheck> {
    let table = r3_table(x);
    (1..=x)
        .filter(|n| !matches!(n % 8, 0 | 4 | 7))
        .map(|n| (table[n as usize] as f64 / (n as f64).powf(SIEGEL_EXPONENT), n))
        .min_by(|a, b| a.0.total_cmp(&b.0))
        .map(|(constant, argmin)| SiegelCheck { x, constant, argmin })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_and_monotone() {
        let small = siegel_check(1_000).unwrap();
        let large = siegel_check(10_000).unwrap();
        assert!(large.constant > 0.0);
        assert!(large.constant <= small.constant);
        assert!(siegel_check(0).is_none());
    }
}
