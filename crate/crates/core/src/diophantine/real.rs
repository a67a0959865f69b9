//! Double-double reals (about 106 bits of significand).
//!
//! Only the operations needed for `‖hα‖`, fractional parts and continued
//! fractions are provided.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Unevaluated sum `hi + lo` with `|lo| ≤ ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Real {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Real {
    pub const ZERO: Real = Real { hi: 0.0, lo: 0.0 };
    pub const ONE: Real = Real { hi: 1.0, lo: 0.0 };

    pub fn new(hi: f64, lo: f64) -> Real {
        let (hi, lo) = quick_two_sum(hi, lo);
        Real { hi, lo }
    }

    pub fn from_f64(x: f64) -> Real {
        Real { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn abs(self) -> Real {
        if self.hi < 0.0 { -self } else { self }
    }

    pub fn floor(self) -> Real {
        let hi = self.hi.floor();
        if hi == self.hi {
            Real::new(hi, self.lo.floor())
        } else {
            Real { hi, lo: 0.0 }
        }
    }

    /// Fractional part in `[0, 1)`.
    pub fn fract(self) -> Real {
        let f = self - self.floor();
        if f.hi >= 1.0 { f - Real::ONE } else { f }
    }

    /// Fractional part rounded to `f64`, clamped below 1.
    pub fn fract_f64(self) -> f64 {
        let f = self.fract().to_f64();
        if f >= 1.0 { 1.0 - f64::EPSILON / 2.0 } else { f.max(0.0) }
    }

    /// Distance to the nearest integer, in `[0, 1/2]`.
    pub fn dist_to_int(self) -> Real {
        let f = self.fract();
        let g = Real::ONE - f;
        if f < g { f } else { g }
    }

    pub fn sqrt(self) -> Real {
        if self.hi <= 0.0 {
            return Real::ZERO;
        }
        // One Newton step from the double-precision root doubles the bits.
        let s = self.hi.sqrt();
        let (p, e) = two_prod(s, s);
        let r = ((self.hi - p) - e + self.lo) / (2.0 * s);
        Real::new(s, r)
    }

    pub fn recip(self) -> Real {
        Real::ONE / self
    }

    /// `√n` for a nonnegative integer.
    pub fn sqrt_int(n: u64) -> Real {
        Real::from_f64(n as f64).sqrt()
    }

    /// The golden ratio `(1 + √5)/2`.
    pub fn golden() -> Real {
        (Real::ONE + Real::sqrt_int(5)) / Real::from_f64(2.0)
    }

    /// Parse `sqrtN`, `golden`, or a plain decimal such as `0.3719`.
    pub fn parse(text: &str) -> Option<Real> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("golden") {
            return Some(Real::golden());
        }
        if let Some(rest) = t.strip_prefix("sqrt") {
            return rest.parse::<u64>().ok().map(Real::sqrt_int);
        }
        parse_decimal(t)
    }
}

fn parse_decimal(t: &str) -> Option<Real> {
    let (neg, body) = match t.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (mantissa, exp) = match body.find(['e', 'E']) {
        Some(i) => (&body[..i], body[i + 1..].parse::<i32>().ok()?),
        None => (body, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((a, b)) => (a, b),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let ten = Real::from_f64(10.0);
    let mut acc = Real::ZERO;
    for ch in int_part.chars().chain(frac_part.chars()) {
        let d = ch.to_digit(10)? as f64;
        acc = acc * ten + Real::from_f64(d);
    }
    let shift = exp - frac_part.len() as i32;
    let mut scale = Real::ONE;
    for _ in 0..shift.unsigned_abs() {
        scale = scale * ten;
    }
    let v = if shift >= 0 { acc * scale } else { acc / scale };
    Some(if neg { -v } else { v })
}

impl From<f64> for Real {
    fn from(x: f64) -> Real {
        Real::from_f64(x)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for Real {
    type Output = Real;
    fn add(self, b: Real) -> Real {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Real { hi, lo }
    }
}

impl Sub for Real {
    type Output = Real;
    fn sub(self, b: Real) -> Real {
        self + (-b)
    }
}

impl Mul for Real {
    type Output = Real;
    fn mul(self, b: Real) -> Real {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Real { hi, lo }
    }
}

impl Mul<f64> for Real {
    type Output = Real;
    fn mul(self, b: f64) -> Real {
        self * Real::from_f64(b)
    }
}

impl Div for Real {
    type Output = Real;
    fn div(self, b: Real) -> Real {
        let q1 = self.hi / b.hi;
        let r = self - b * q1;
        let q2 = r.hi / b.hi;
        let r = r - b * q2;
        let q3 = r.hi / b.hi;
        Real::new(q1, q2) + Real::from_f64(q3)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}

/// `‖t‖`, the distance from `t` to the nearest integer.
pub fn dist_to_nearest_int(t: f64) -> f64 {
    let f = t - t.floor();
    f.min(1.0 - f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two_to_thirty_digits() {
        let s = Real::sqrt_int(2);
        let err = s * s - Real::from_f64(2.0);
        assert!(err.to_f64().abs() < 1e-30);
        // √2 = 1.41421356237309504880168872420969807...
        let tail = s - Real::from_f64(1.4142135623730951);
        assert!((tail.to_f64() - (-9.667293313452913e-17)).abs() < 1e-31);
    }

    #[test]
    fn division_roundtrip() {
        let a = Real::sqrt_int(3);
        let b = Real::golden();
        let r = (a / b) * b - a;
        assert!(r.to_f64().abs() < 1e-30);
    }

    #[test]
    fn large_multiple_keeps_fraction() {
        // 470832·√2 = 665857 − 1/(665857 + 470832√2).
        let x = Real::sqrt_int(2) * 470_832.0;
        let d = x.dist_to_int().to_f64();
        let exact = 1.0 / (665_857.0 + 470_832.0 * 2f64.sqrt());
        assert!((d - exact).abs() / exact < 1e-14);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Real::parse("sqrt2").unwrap(), Real::sqrt_int(2));
        assert_eq!(Real::parse("golden").unwrap(), Real::golden());
        let x = Real::parse("0.1").unwrap();
        assert!((x * 10.0 - Real::ONE).to_f64().abs() < 1e-31);
        assert_eq!(Real::parse("-2.5e1").unwrap().to_f64(), -25.0);
        assert!(Real::parse("abc").is_none());
        assert!(Real::parse(".").is_none());
    }

    #[test]
    fn nearest_int_distance() {
        assert_eq!(dist_to_nearest_int(0.5), 0.5);
        assert!((dist_to_nearest_int(-0.3) - 0.3).abs() < 1e-15);
        assert!((dist_to_nearest_int(2f64.sqrt()) - (2f64.sqrt() - 1.0)).abs() < 1e-15);
        assert_eq!(dist_to_nearest_int(3.0), 0.0);
    }
}
