use super::{ArithmeticError, Result};

/// Number of positive divisors; `τ(0)` is reported as 0.
pub fn divisor_count(k: u64) -> u64 {
    if k == 0 {
        return 0;
    }
    let mut k = k;
    let mut count = 1u64;
    let mut p = 2u64;
    while p * p <= k {
        let mut e = 0;
        while k % p == 0 {
            k /= p;
            e += 1;
        }
        count *= e + 1;
        p += if p == 2 { 1 } else { 2 };
    }
    if k > 1 {
        count *= 2;
    }
    count
}

/// Write `n = t²·D` with `D` squarefree. `n` must be positive.
pub fn squarefree_decomposition(n: u64) -> (u64, u64) {
    assert!(n > 0, "squarefree decomposition of zero");
    let mut rest = n;
    let mut t = 1u64;
    let mut d = 1u64;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        t *= p.pow(e / 2);
        if e % 2 == 1 {
            d *= p;
        }
        p += 1;
    }
    (t, d * rest)
}

/// Number of `(x, y) ∈ ℤ²` with `x² + D·y² = k`.
pub fn rep_count_binary(k: u64, d: u64) -> Result<u64> {
    if d == 0 || squarefree_decomposition(d).0 != 1 {
        return Err(ArithmeticError::NotSquarefree(d));
    }
    let mut count = 0u64;
    let mut y = 0u64;
    loop {
        let dy2 = y
            .checked_mul(y)
            .and_then(|s| s.checked_mul(d))
            .ok_or(ArithmeticError::Overflow("D·y²"))?;
        if dy2 > k {
            break;
        }
        let rest = k - dy2;
        let x = rest.isqrt();
        if x * x == rest {
            let xs = if x == 0 { 1 } else { 2 };
            let ys = if y == 0 { 1 } else { 2 };
            count += xs * ys;
        }
        y += 1;
    }
    Ok(count)
}
