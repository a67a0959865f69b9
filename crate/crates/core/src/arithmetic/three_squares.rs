use super::{ArithmeticError, Result};

/// `n = 4^a · n1` with `4 ∤ n1`, and whether `n` is a sum of three squares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ThreeSquares {
    pub n: u64,
    pub a: u32,
    pub n1: u64,
    pub representable: bool,
}

/// Largest `a` with `4^a | n`; zero for `n = 0`.
pub fn valuation4(n: u64) -> u32 {
    if n == 0 {
        return 0;
    }
    n.trailing_zeros() / 2
}

pub fn classify_three_squares(n: u64) -> ThreeSquares {
    if n == 0 {
        return ThreeSquares { n, a: 0, n1: 0, representable: true };
    }
    let a = valuation4(n);
    let n1 = n >> (2 * a);
    ThreeSquares { n, a, n1, representable: n1 % 8 != 7 }
}

fn checked_square(x: u64) -> Result<u64> {
    x.checked_mul(x).ok_or(ArithmeticError::Overflow("square"))
}

/// Number of `(x1, x2, x3) ∈ ℤ³` with `x1² + x2² + x3² = n`.
///
/// Counts the octant `0 ≤ x ≤ y ≤ z` and weights by the orbit size under
/// signed permutations.
pub fn r3(n: u64) -> u64 {
    if !classify_three_squares(n).representable {
        return 0;
    }
    let mut total = 0u64;
    let mut x = 0u64;
    while 3 * x * x <= n {
        let rx = n - x * x;
        let mut y = x;
        while 2 * y * y <= rx {
            let rest = rx - y * y;
            let z = rest.isqrt();
            if z * z == rest {
                total += orbit_size(x, y, z);
            }
            y += 1;
        }
        x += 1;
    }
    total
}

/// Size of the signed-permutation orbit of `(x, y, z)` with `0 ≤ x ≤ y ≤ z`.
fn orbit_size(x: u64, y: u64, z: u64) -> u64 {
    let signs = 1u64 << [x, y, z].iter().filter(|&&c| c != 0).count();
    let perms = if x == y && y == z {
        1
    } else if x == y || y == z {
        3
    } else {
        6
    };
    signs * perms
}

/// `r3(n)` for every `n ≤ max`, by one pass over the octant.
pub fn r3_table(max: u64) -> Vec<u64> {
    let mut table = vec![0u64; max as usize + 1];
    let mut x = 0u64;
    while 3 * x * x <= max {
        let mut y = x;
        while x * x + 2 * y * y <= max {
            let mut z = y;
            loop {
                let n = x * x + y * y + z * z;
                if n > max {
                    break;
                }
                table[n as usize] += orbit_size(x, y, z);
                z += 1;
            }
            y += 1;
        }
        x += 1;
    }
    table
}

fn mobius(mut d: u64) -> i64 {
    let mut sign = 1i64;
    let mut p = 2u64;
    while p * p <= d {
        if d % p == 0 {
            d /= p;
            if d % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if d > 1 {
        sign = -sign;
    }
    sign
}

/// Number of representations with `gcd(x1, x2, x3) = 1`; zero for `n = 0`.
///
/// Möbius inversion of `r3(n) = Σ_{d²|n} R3(n/d²)`.
pub fn primitive_r3(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut total = 0i64;
    let mut d = 1u64;
    while d * d <= n {
        if n % (d * d) == 0 {
            let mu = mobius(d);
            if mu != 0 {
                total += mu * r3(n / (d * d)) as i64;
            }
        }
        d += 1;
    }
    debug_assert!(total >= 0);
    total as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum FourPowerClass {
    /// 4-adic exponent of `n` exceeds that of `|ζ|²`.
    N0,
    N1,
}

/// Classify a sum of three squares against the 4-adic exponent of `|ζ|²`.
pub fn four_power_class(n: u64, zeta: [i64; 3]) -> Result<FourPowerClass> {
    if zeta == [0, 0, 0] {
        return Err(ArithmeticError::ZeroVector);
    }
    if !classify_three_squares(n).representable {
        return Err(ArithmeticError::NotRepresentable(n));
    }
    let mut zeta_norm = 0u64;
    for c in zeta {
        let s = checked_square(c.unsigned_abs())?;
        zeta_norm = zeta_norm.checked_add(s).ok_or(ArithmeticError::Overflow("|ζ|²"))?;
    }
    // n = 0 is divisible by every power of 4.
    if n == 0 || valuation4(n) > valuation4(zeta_norm) {
        Ok(FourPowerClass::N0)
    } else {
        Ok(FourPowerClass::N1)
    }
}

/// Closest element of an ascending `norms` slice; ties go to the smaller one.
pub fn nearest_norm(lambda: f64, norms: &[f64]) -> Result<f64> {
    if norms.is_empty() {
        return Err(ArithmeticError::EmptySet);
    }
    let i = norms.partition_point(|&n| n < lambda);
    if i == 0 {
        return Ok(norms[0]);
    }
    if i == norms.len() {
        return Ok(norms[i - 1]);
    }
    let (lo, hi) = (norms[i - 1], norms[i]);
    Ok(if hi - lambda < lambda - lo { hi } else { lo })
}

/// Ascending list of sums of three squares `≤ max`, as reals.
pub fn representable_norms_up_to(max: u64) -> Vec<f64> {
    (0..=max)
        .filter(|&n| classify_three_squares(n).representable)
        .map(|n| n as f64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_r3(n: i64, primitive: bool) -> u64 {
        let r = (n as f64).sqrt() as i64 + 1;
        let mut c = 0;
        for x in -r..=r {
            for y in -r..=r {
                for z in -r..=r {
                    if x * x + y * y + z * z == n
                        && (!primitive || gcd(gcd(x.abs(), y.abs()), z.abs()) == 1)
                    {
                        c += 1;
                    }
                }
            }
        }
        c
    }

    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }

    #[test]
    fn classification_examples() {
        assert!(!classify_three_squares(7).representable);
        assert_eq!(
            classify_three_squares(0),
            ThreeSquares { n: 0, a: 0, n1: 0, representable: true }
        );
        let c = classify_three_squares(28);
        assert_eq!((c.a, c.n1, c.representable), (1, 7, false));
        assert_eq!(brute_r3(28, false), 0);
    }

    #[test]
    fn r3_examples() {
        assert_eq!(r3(1), 6);
        assert_eq!(r3(7), 0);
        assert_eq!(r3(4), r3(1));
        assert_eq!(r3(0), 1);
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive_r3(1), 6);
        assert_eq!(primitive_r3(4), 0);
        assert_eq!(primitive_r3(3), 8);
        assert_eq!(primitive_r3(0), 0);
    }

    #[test]
    fn r3_matches_brute_force_small() {
        for n in 0..200 {
            assert_eq!(r3(n as u64), brute_r3(n, false), "n={n}");
            if n > 0 {
                assert_eq!(primitive_r3(n as u64), brute_r3(n, true), "n={n}");
            }
        }
    }

    #[test]
    fn table_matches_pointwise() {
        let t = r3_table(3000);
        for (n, &v) in t.iter().enumerate() {
            assert_eq!(v, r3(n as u64), "n={n}");
        }
    }

    #[test]
    fn four_power_examples() {
        assert_eq!(four_power_class(1, [1, 0, 0]).unwrap(), FourPowerClass::N1);
        assert_eq!(four_power_class(4, [1, 0, 0]).unwrap(), FourPowerClass::N0);
        assert_eq!(four_power_class(16, [2, 0, 0]).unwrap(), FourPowerClass::N0);
        assert_eq!(four_power_class(7, [1, 0, 0]), Err(ArithmeticError::NotRepresentable(7)));
        assert_eq!(four_power_class(1, [0, 0, 0]), Err(ArithmeticError::ZeroVector));
    }

    #[test]
    fn nearest_norm_examples() {
        let n3 = representable_norms_up_to(20);
        assert_eq!(nearest_norm(6.4, &n3).unwrap(), 6.0);
        assert_eq!(nearest_norm(7.0, &n3).unwrap(), 6.0);
        assert_eq!(nearest_norm(9.0, &n3).unwrap(), 9.0);
        assert_eq!(nearest_norm(-3.0, &n3).unwrap(), 0.0);
        assert_eq!(nearest_norm(1.0, &[]), Err(ArithmeticError::EmptySet));
    }

    #[test]
    fn nearest_norm_within_one_and_a_half() {
        let n3 = representable_norms_up_to(2000);
        for i in 0..19_000 {
            let lambda = i as f64 * 0.1 + 0.05;
            let n = nearest_norm(lambda, &n3).unwrap();
            assert!((n - lambda).abs() <= 1.5);
        }
    }
}
