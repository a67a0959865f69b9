//! Adaptive Gauss–Kronrod (7/15) quadrature.

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn gk15(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        kron += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    (kron * h, ((kron - gauss) * h).abs())
}

/// `∫_a^b f` to `max(abs_tol, rel_tol·|I|)`; returns the value and an
/// error estimate.
pub(crate) fn integrate(
    mut f: impl FnMut(f64) -> f64,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> (f64, f64) {
    if a == b {
        return (0.0, 0.0);
    }
    let mut parts = vec![(a, b, gk15(&mut f, a, b))];
    for _ in 0..4000 {
        let total: f64 = parts.iter().map(|p| p.2 .0).sum();
        let err: f64 = parts.iter().map(|p| p.2 .1).sum();
        if err <= abs_tol.max(rel_tol * total.abs()) {
            break;
        }
        let worst = parts
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .2 .1.total_cmp(&y.1 .2 .1))
            .map(|(i, _)| i)
            .unwrap();
        let (lo, hi, _) = parts.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        parts.push((lo, mid, gk15(&mut f, lo, mid)));
        parts.push((mid, hi, gk15(&mut f, mid, hi)));
    }
    // Sum in a fixed order for reproducibility.
    parts.sort_by(|x, y| x.0.total_cmp(&y.0));
    let total = parts.iter().map(|p| p.2 .0).sum();
    let err = parts.iter().map(|p| p.2 .1).sum();
    (total, err)
}

/// `∫_from^∞ g(t) dt` for `g = O(t^{-1-ε})` via `t = from/s²`.
pub(crate) fn integrate_to_infinity(
    mut g: impl FnMut(f64) -> f64,
    from: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> (f64, f64) {
    assert!(from > 0.0, "semi-infinite quadrature needs a positive start");
    integrate(
        |s| {
            if s <= 0.0 {
                return 0.0;
            }
            let t = from / (s * s);
            g(t) * 2.0 * from / (s * s * s)
        },
        0.0,
        1.0,
        rel_tol,
        abs_tol,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_and_smooth() {
        let (v, _) = integrate(|x| x.powi(5) - 2.0 * x, 0.0, 2.0, 1e-14, 0.0);
        assert!((v - (64.0 / 6.0 - 4.0)).abs() < 1e-12);
        let (v, _) = integrate(f64::sin, 0.0, std::f64::consts::PI, 1e-13, 0.0);
        assert!((v - 2.0).abs() < 1e-12);
        let (v, _) = integrate(f64::sqrt, 0.0, 1.0, 1e-12, 0.0);
        assert!((v - 2.0 / 3.0).abs() < 1e-11);
    }

    #[test]
    fn semi_infinite() {
        // ∫_T^∞ t^{-3/2} dt = 2 T^{-1/2}.
        let (v, _) = integrate_to_infinity(|t| t.powf(-1.5), 1e3, 1e-13, 0.0);
        assert!((v - 2.0 / 1e3f64.sqrt()).abs() < 1e-14);
        let (v, _) = integrate_to_infinity(|t| 1.0 / (t * t + 1.0), 1.0, 1e-13, 0.0);
        assert!((v - std::f64::consts::FRAC_PI_4).abs() < 1e-12);
    }
}
