use super::{LatticeError, Result};
use crate::diophantine::Real;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TorusKind {
    Standard,
    Irrational,
}

/// Rectangular torus given by its inverse squared side lengths
/// `(1/a², 1/b², 1/c²)`. Non-standard specs are assumed ℚ-independent.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct TorusSpec {
    pub inv: [f64; 3],
    pub kind: TorusKind,
    pub finite_type_hint: Option<f64>,
    pub name: String,
}

/// Named specs: `(name, coefficient expressions, type hint)`.
///
/// The irrational presets use square and cube roots of small integers,
/// which are ℚ-linearly independent together with 1 and algebraic, hence
/// of type 1.
pub const PRESETS: &[(&str, [&str; 3], Option<f64>)] = &[
    ("standard", ["1", "1", "1"], None),
    ("sqrt-2-3", ["1", "sqrt2", "sqrt3"], Some(1.0)),
    ("sqrt-5-7", ["sqrt5", "sqrt7", "1"], Some(1.0)),
];

impl TorusSpec {
    pub fn standard() -> TorusSpec {
        TorusSpec {
            inv: [1.0; 3],
            kind: TorusKind::Standard,
            finite_type_hint: None,
            name: "standard".into(),
        }
    }

    pub fn new(inv: [f64; 3]) -> Result<TorusSpec> {
        if inv.iter().any(|w| !(w.is_finite() && *w > 0.0)) {
            return Err(LatticeError::BadCoefficients(inv));
        }
        let kind = if inv == [1.0; 3] { TorusKind::Standard } else { TorusKind::Irrational };
        let name = if kind == TorusKind::Standard { "standard".into() } else { "custom".into() };
        Ok(TorusSpec { inv, kind, finite_type_hint: None, name })
    }

    /// Parse coefficients such as `sqrt2`, `golden` or `1.25`.
    pub fn parse(exprs: [&str; 3]) -> Result<TorusSpec> {
        let mut inv = [0.0; 3];
        for (slot, e) in inv.iter_mut().zip(exprs) {
            *slot = Real::parse(e).map(Real::to_f64).unwrap_or(f64::NAN);
        }
        TorusSpec::new(inv)
    }

    pub fn preset(name: &str) -> Result<TorusSpec> {
        let (n, exprs, hint) = PRESETS
            .iter()
            .find(|p| p.0 == name)
            .ok_or_else(|| LatticeError::UnknownPreset(name.into()))?;
        let mut spec = TorusSpec::parse(*exprs)?;
        spec.name = n.to_string();
        spec.finite_type_hint = *hint;
        Ok(spec)
    }

    pub fn is_standard(&self) -> bool {
        self.kind == TorusKind::Standard
    }

    /// `abc = (1/a² · 1/b² · 1/c²)^{−1/2}`.
    pub fn abc(&self) -> f64 {
        (self.inv[0] * self.inv[1] * self.inv[2]).sqrt().recip()
    }

    /// `|ξ|²` for the dual vector with integer coordinates `ix`.
    #[inline]
    pub fn norm(&self, ix: [i64; 3]) -> f64 {
        let [x, y, z] = ix.map(|c| (c * c) as f64);
        x * self.inv[0] + y * self.inv[1] + z * self.inv[2]
    }

    /// `⟨ξ, ζ⟩` for integer coordinates.
    #[inline]
    pub fn dot(&self, a: [i64; 3], b: [i64; 3]) -> f64 {
        (0..3).map(|i| (a[i] * b[i]) as f64 * self.inv[i]).sum()
    }

    /// Leading coefficient of the Weyl law, `(4/3)π·abc`.
    pub fn weyl_coefficient(&self) -> f64 {
        4.0 / 3.0 * PI * self.abc()
    }

    /// Largest `|ξ_i|` possible when `|ξ|² ≤ x`.
    pub fn axis_radius(&self, axis: usize, x: f64) -> i64 {
        if x <= 0.0 {
            return 0;
        }
        (x / self.inv[axis]).sqrt().ceil() as i64
    }

    pub fn vector(&self, ix: [i64; 3]) -> LatticeVector {
        LatticeVector { ix, norm: self.norm(ix) }
    }
}

/// Dual-lattice vector `(ξ₁/a, ξ₂/b, ξ₃/c)` stored by its integer coordinates.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct LatticeVector {
    pub ix: [i64; 3],
    pub norm: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_and_validation() {
        assert!(TorusSpec::new([1.0, 1.0, 1.0]).unwrap().is_standard());
        assert!(!TorusSpec::new([1.0, 2.0, 1.0]).unwrap().is_standard());
        assert!(TorusSpec::new([1.0, 0.0, 1.0]).is_err());
        assert!(TorusSpec::new([1.0, f64::NAN, 1.0]).is_err());
        assert!(TorusSpec::parse(["1", "x", "1"]).is_err());
    }

    #[test]
    fn presets_resolve() {
        for (name, _, _) in PRESETS {
            let s = TorusSpec::preset(name).unwrap();
            assert_eq!(s.name, *name);
        }
        let s = TorusSpec::preset("sqrt-2-3").unwrap();
        assert!((s.abc() - (2f64.sqrt() * 3f64.sqrt()).powf(-0.5)).abs() < 1e-15);
        assert!(TorusSpec::preset("nope").is_err());
    }
}
