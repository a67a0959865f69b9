use super::{LatticeError, LatticeVector, Result, TorusSpec};
use std::io::Write;

/// Default relative separation below which two distinct keys are reported
/// as colliding.
pub const DEFAULT_SEPARATION: f64 = 1e-14;

/// One distinct norm value with its multiplicity.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct NormClass {
    /// `(ξ₁², ξ₂², ξ₃²)` of the representative.
    pub key: [u64; 3],
    pub value: f64,
    pub multiplicity: u64,
    /// Representative with nonnegative coordinates.
    pub rep: [i64; 3],
}

impl NormClass {
    /// Every lattice vector in the class.
    pub fn reps(&self, spec: &TorusSpec) -> Vec<LatticeVector> {
        if spec.is_standard() {
            return super::sphere_points(self.value as u64)
                .into_iter()
                .map(|ix| spec.vector(ix))
                .collect();
        }
        let mut out = Vec::with_capacity(self.multiplicity as usize);
        for sx in signs(self.rep[0]) {
            for sy in signs(self.rep[1]) {
                for sz in signs(self.rep[2]) {
                    out.push(spec.vector([sx, sy, sz]));
                }
            }
        }
        out
    }
}

fn signs(c: i64) -> Vec<i64> {
    if c == 0 { vec![0] } else { vec![-c, c] }
}

/// Sorted norm classes up to a ceiling, with parallel value/weight arrays.
#[derive(Debug, Clone, PartialEq)]
pub struct NormTable {
    pub spec: TorusSpec,
    pub ceiling: f64,
    pub classes: Vec<NormClass>,
    pub values: Vec<f64>,
    pub weights: Vec<f64>,
}

impl NormTable {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Total lattice points `#{ξ : |ξ|² ≤ ceiling}`.
    pub fn point_count(&self) -> u64 {
        self.classes.iter().map(|c| c.multiplicity).sum()
    }

    /// Index range of norms in the open interval `(lo, hi)`.
    pub fn open_range(&self, lo: f64, hi: f64) -> std::ops::Range<usize> {
        let a = self.values.partition_point(|&v| v <= lo);
        let b = self.values.partition_point(|&v| v < hi);
        a..b.max(a)
    }
}

fn octant_orbit(ix: [i64; 3]) -> u64 {
    1 << ix.iter().filter(|&&c| c != 0).count()
}

/// All distinct norms `≤ X` with the default separation tolerance.
pub fn norm_classes_up_to(spec: &TorusSpec, x: f64) -> Result<NormTable> {
    norm_classes_with_tolerance(spec, x, DEFAULT_SEPARATION)
}

/// All distinct norms `≤ X`.
///
/// Standard torus: classes are the integers `n` with `r3(n) > 0`.
/// Otherwise every octant point `ξ ≥ 0` is its own class of size
/// `2^{#nonzero coordinates}`, and adjacent values closer than
/// `separation·max(1, value)` raise `NormCollision`.
pub fn norm_classes_with_tolerance(spec: &TorusSpec, x: f64, separation: f64) -> Result<NormTable> {
    if !(x > 0.0) {
        return Err(LatticeError::OutOfRange("ceiling must be positive"));
    }
    let mut classes = if spec.is_standard() { standard_classes(x)? } else { octant_classes(spec, x) };
    if !spec.is_standard() {
        classes.sort_by(|a, b| a.value.total_cmp(&b.value).then(a.key.cmp(&b.key)));
        for pair in classes.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            if b.value - a.value <= separation * a.value.max(1.0) {
                return Err(LatticeError::NormCollision { a: a.key, b: b.key, va: a.value, vb: b.value });
            }
        }
    }
    let values = classes.iter().map(|c| c.value).collect();
    let weights = classes.iter().map(|c| c.multiplicity as f64).collect();
    Ok(NormTable { spec: spec.clone(), ceiling: x, classes, values, weights })
}

fn standard_classes(x: f64) -> Result<Vec<NormClass>> {
    if x > 1e12 {
        return Err(LatticeError::OutOfRange("standard norm table ceiling above 1e12"));
    }
    let max = x.floor() as u64;
    let mut mult = vec![0u64; max as usize + 1];
    let mut rep = vec![[0i64; 3]; max as usize + 1];
    let mut a = 0u64;
    while 3 * a * a <= max {
        let mut b = a;
        while a * a + 2 * b * b <= max {
            let mut c = b;
            while a * a + b * b + c * c <= max {
                let n = (a * a + b * b + c * c) as usize;
                let ix = [a as i64, b as i64, c as i64];
                if mult[n] == 0 {
                    rep[n] = ix;
                }
                let perms = if a == b && b == c { 1 } else if a == b || b == c { 3 } else { 6 };
                mult[n] += perms * octant_orbit(ix);
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    Ok(mult
        .iter()
        .enumerate()
        .filter(|(_, &m)| m > 0)
        .map(|(n, &m)| {
            let r = rep[n];
            NormClass {
                key: r.map(|c| (c * c) as u64),
                value: n as f64,
                multiplicity: m,
                rep: r,
            }
        })
        .collect())
}

fn octant_classes(spec: &TorusSpec, x: f64) -> Vec<NormClass> {
    let mut out = Vec::new();
    let rx = spec.axis_radius(0, x);
    let ry = spec.axis_radius(1, x);
    for a in 0..=rx {
        for b in 0..=ry {
            let base = spec.norm([a, b, 0]);
            if base > x {
                break;
            }
            let mut c = 0i64;
            loop {
                let ix = [a, b, c];
                let v = spec.norm(ix);
                if v > x {
                    break;
                }
                out.push(NormClass {
                    key: ix.map(|t| (t * t) as u64),
                    value: v,
                    multiplicity: octant_orbit(ix),
                    rep: ix,
                });
                c += 1;
            }
        }
    }
    out
}

/// Write `norm,multiplicity,rep_x,rep_y,rep_z` rows.
pub fn write_norm_csv<W: Write>(table: &NormTable, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let err = |e: csv::Error| LatticeError::Csv(e.to_string());
    w.write_record(["norm", "multiplicity", "rep_x", "rep_y", "rep_z"]).map_err(err)?;
    for c in &table.classes {
        w.write_record([
            format!("{:?}", c.value),
            c.multiplicity.to_string(),
            c.rep[0].to_string(),
            c.rep[1].to_string(),
            c.rep[2].to_string(),
        ])
        .map_err(err)?;
    }
    w.flush().map_err(|e| LatticeError::Csv(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::r3;
    use crate::lattice::weyl_count;

    #[test]
    fn standard_small() {
        let t = norm_classes_up_to(&TorusSpec::standard(), 3.5).unwrap();
        assert_eq!(t.values, vec![0.0, 1.0, 2.0, 3.0]);
        assert_eq!(t.weights, vec![1.0, 6.0, 12.0, 8.0]);
    }

    #[test]
    fn standard_multiplicities_are_r3() {
        let s = TorusSpec::standard();
        let t = norm_classes_up_to(&s, 2000.0).unwrap();
        for c in &t.classes {
            assert_eq!(c.multiplicity, r3(c.value as u64));
            assert_eq!(c.reps(&s).len() as u64, c.multiplicity);
        }
        assert_eq!(t.point_count(), weyl_count(&s, 2000.0).count);
    }

    #[test]
    fn irrational_classes() {
        let s = TorusSpec::preset("sqrt-2-3").unwrap();
        let t = norm_classes_up_to(&s, 500.0).unwrap();
        for c in &t.classes {
            assert!([1, 2, 4, 8].contains(&c.multiplicity));
            let reps = c.reps(&s);
            assert_eq!(reps.len() as u64, c.multiplicity);
            assert!(reps.iter().all(|v| (v.norm - c.value).abs() < 1e-12));
        }
        assert_eq!(t.point_count(), weyl_count(&s, 500.0).count);
        let tiny = norm_classes_up_to(&s, 0.5).unwrap();
        assert_eq!(tiny.values, vec![0.0]);
    }

    #[test]
    fn dependent_coefficients_collide() {
        let s = TorusSpec::new([1.0, 2.0, 3.0]).unwrap();
        assert!(matches!(norm_classes_up_to(&s, 10.0), Err(LatticeError::NormCollision { .. })));
    }

    #[test]
    fn csv_columns() {
        let t = norm_classes_up_to(&TorusSpec::standard(), 2.0).unwrap();
        let mut buf = Vec::new();
        write_norm_csv(&t, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "norm,multiplicity,rep_x,rep_y,rep_z\n0.0,1,0,0,0\n1.0,6,0,0,1\n2.0,12,0,1,1\n");
    }
}
