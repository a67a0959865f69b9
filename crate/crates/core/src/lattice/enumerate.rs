use super::{LatticeVector, TorusSpec};

/// Visit every `ξ` with `lo < |ξ|² < hi`, lexicographic in the integer
/// triple, passing the coordinates and the norm.
pub(crate) fn for_each_in_shell(
    spec: &TorusSpec,
    lo: f64,
    hi: f64,
    mut visit: impl FnMut([i64; 3], f64),
) {
    if hi <= 0.0 {
        return;
    }
    let w = spec.inv[2];
    let rx = spec.axis_radius(0, hi);
    let ry = spec.axis_radius(1, hi);
    for x in -rx..=rx {
        for y in -ry..=ry {
            let base = spec.norm([x, y, 0]);
            if base >= hi {
                continue;
            }
            let top = ((hi - base) / w).sqrt().floor() as i64 + 1;
            let bottom = if lo > base { (((lo - base) / w).sqrt().floor() as i64 - 1).max(0) } else { 0 };
            for z in (-top..=-bottom).chain(bottom.max(1)..=top) {
                let n = spec.norm([x, y, z]);
                if lo < n && n < hi {
                    visit([x, y, z], n);
                }
            }
        }
    }
}

/// Lattice vectors with `λ − width < |ξ|² < λ + width`, lexicographic in
/// the integer triple.
pub fn enumerate_shell(spec: &TorusSpec, lambda: f64, width: f64) -> Vec<LatticeVector> {
    let mut out = Vec::new();
    for_each_in_shell(spec, lambda - width, lambda + width, |ix, norm| {
        out.push(LatticeVector { ix, norm })
    });
    out
}

/// Integer points of the standard sphere `|η|² = n`, lexicographic.
pub fn sphere_points(n: u64) -> Vec<[i64; 3]> {
    let spec = TorusSpec::standard();
    let nf = n as f64;
    enumerate_shell(&spec, nf, 0.5).into_iter().map(|v| v.ix).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct WeylCount {
    pub count: u64,
    pub main_term: f64,
    pub remainder: f64,
}

/// `#{ξ : |ξ|² ≤ x}` by column sums, with the Weyl main term.
pub fn weyl_count(spec: &TorusSpec, x: f64) -> WeylCount {
    let mut count = 0u64;
    if x >= 0.0 {
        let rx = spec.axis_radius(0, x);
        let ry = spec.axis_radius(1, x);
        let w = spec.inv[2];
        for ix in -rx..=rx {
            for iy in -ry..=ry {
                let base = spec.norm([ix, iy, 0]);
                if base > x {
                    continue;
                }
                let mut z = ((x - base) / w).sqrt().floor() as i64;
                while spec.norm([ix, iy, z + 1]) <= x {
                    z += 1;
                }
                while z > 0 && spec.norm([ix, iy, z]) > x {
                    z -= 1;
                }
                count += 2 * z as u64 + 1;
            }
        }
    }
    let main_term = spec.weyl_coefficient() * x.max(0.0).powf(1.5);
    WeylCount { count, main_term, remainder: count as f64 - main_term }
}
