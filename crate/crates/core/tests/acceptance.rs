//! Exit criteria. Each test prints one `PASS`/`FAIL` line to stderr and
//! then asserts; every threshold below is fixed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::io::Write;
use std::time::{Duration, Instant};
use torus_scatter::arithmetic::{
    classify_three_squares, divisor_count, primitive_r3, r3, rep_count_binary, valuation4,
};
use torus_scatter::diophantine::{
    discrepancy_decay_check, exact_discrepancy, finite_type_estimate, kronecker_sequence,
    star_discrepancy, Real,
};
use torus_scatter::equidistribution::{
    decay_scan_on, density_reports, smallest_nonzero_vector, truncation_scan, DensityParams,
    ScanMode, Spectrum, DENSITY_MARGIN,
};
use torus_scatter::lattice::{
    count_near_resonant_pairs, norm_classes_up_to, strip_reduction, weyl_count, TorusSpec,
};
use torus_scatter::spectral::{
    solve_eigenvalues, tail_integral, SpectralContext, TailKind, DEFAULT_C_REM,
};

fn report(id: u32, title: &str, pass: bool, detail: String, elapsed: Duration) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    let line = format!("criterion {id:>2} [{title}]: {verdict} ({detail}; {:.1}s)\n", elapsed.as_secs_f64());
    // Unbuffered so the line survives output capture.
    let _ = std::io::stderr().write_all(line.as_bytes());
}

fn slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

fn log_log_slope(xs: &[f64], vs: &[f64]) -> f64 {
    let (lx, ly): (Vec<f64>, Vec<f64>) = xs
        .iter()
        .zip(vs)
        .filter(|(_, v)| v.abs() >= 1e-14)
        .map(|(x, v)| (x.ln(), v.abs().ln()))
        .unzip();
    slope(&lx, &ly)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Brute-force `(r3, primitive r3)` for `n ≤ max` by a full box scan.
fn brute_r3(max: u64) -> (Vec<u64>, Vec<u64>) {
    let r = (max as f64).sqrt() as i64 + 1;
    let mut all = vec![0u64; max as usize + 1];
    let mut prim = vec![0u64; max as usize + 1];
    for x in -r..=r {
        for y in -r..=r {
            for z in -r..=r {
                let n = (x * x + y * y + z * z) as u64;
                if n <= max {
                    all[n as usize] += 1;
                    let g = gcd(gcd(x.unsigned_abs(), y.unsigned_abs()), z.unsigned_abs());
                    if g == 1 {
                        prim[n as usize] += 1;
                    }
                }
            }
        }
    }
    (all, prim)
}

/// Sorted norms of every `ξ` with `|ξ|² ≤ max`, by box scan.
fn brute_norms(spec: &TorusSpec, max: f64) -> Vec<f64> {
    let r: Vec<i64> = spec.inv.iter().map(|w| (max / w).sqrt() as i64 + 1).collect();
    let mut out = Vec::new();
    for x in -r[0]..=r[0] {
        for y in -r[1]..=r[1] {
            for z in -r[2]..=r[2] {
                let n = (x * x) as f64 * spec.inv[0] + (y * y) as f64 * spec.inv[1] + (z * z) as f64 * spec.inv[2];
                if n <= max {
                    out.push(n);
                }
            }
        }
    }
    out.sort_by(f64::total_cmp);
    out
}

#[test]
fn criterion_01_three_squares_oracles() {
    let t = Instant::now();
    let max = 10_000u64;
    let (brute, brute_prim) = brute_r3(4 * 2500);
    let mut bad = Vec::new();
    for n in 1..=max {
        let lib = r3(n);
        let via_primitive: u64 = (1..)
            .take_while(|d| d * d <= n)
            .filter(|d| n % (d * d) == 0)
            .map(|d| primitive_r3(n / (d * d)))
            .sum();
        if lib != brute[n as usize] || via_primitive != brute[n as usize] {
            bad.push(format!("r3({n})"));
        }
        if primitive_r3(n) != brute_prim[n as usize] {
            bad.push(format!("primitive_r3({n})"));
        }
        if classify_three_squares(n).representable != (brute[n as usize] > 0) {
            bad.push(format!("classify({n})"));
        }
    }
    for n in 1..=2500u64 {
        if r3(4 * n) != r3(n) {
            bad.push(format!("r3(4·{n})"));
        }
    }
    let e = t.elapsed();
    let pass = bad.is_empty() && e <= Duration::from_secs(60);
    report(1, "three-squares oracle suite", pass, format!("{} mismatches", bad.len()), e);
    assert!(pass, "{:?}", &bad[..bad.len().min(10)]);
}

#[test]
fn criterion_02_four_power_divisibility() {
    let t = Instant::now();
    let mut bad = 0u64;
    for x in -50i64..=50 {
        for y in -50i64..=50 {
            for z in -50i64..=50 {
                let n = (x * x + y * y + z * z) as u64;
                for a in 0..=5u32 {
                    let lhs = n % 4u64.pow(a) == 0;
                    let m = 2i64.pow(a);
                    let rhs = x % m == 0 && y % m == 0 && z % m == 0;
                    let via_valuation = n == 0 || valuation4(n) >= a;
                    if lhs != rhs || lhs != via_valuation {
                        bad += 1;
                    }
                }
            }
        }
    }
    let e = t.elapsed();
    let pass = bad == 0 && e <= Duration::from_secs(10);
    report(2, "4-power divisibility", pass, format!("{bad} violations over 101³·6 cases"), e);
    assert!(pass);
}

fn squarefree(d: u64) -> bool {
    (2..=d).take_while(|p| p * p <= d).all(|p| d % (p * p) != 0)
}

#[test]
fn criterion_03_binary_form_divisor_bound() {
    let t = Instant::now();
    let kmax = 10_000u64;
    let mut bad = Vec::new();
    for d in (1..=20u64).filter(|&d| squarefree(d)) {
        let mut brute = vec![0u64; kmax as usize + 1];
        let r = (kmax as f64).sqrt() as i64 + 1;
        for x in -r..=r {
            for y in -r..=r {
                let k = (x * x) as u64 + d * (y * y) as u64;
                if k <= kmax {
                    brute[k as usize] += 1;
                }
            }
        }
        for k in 1..=kmax {
            let lib = rep_count_binary(k, d).unwrap();
            if lib != brute[k as usize] || lib > 6 * divisor_count(k) {
                bad.push((d, k));
            }
        }
    }
    let e = t.elapsed();
    let pass = bad.is_empty() && e <= Duration::from_secs(60);
    report(3, "r_D(k) ≤ 6τ(k)", pass, format!("{} violations", bad.len()), e);
    assert!(pass, "{bad:?}");
}

#[test]
fn criterion_04_strip_reduction_chain() {
    let t = Instant::now();
    let nmax = 500i64;
    let mut shells: Vec<Vec<[i64; 3]>> = vec![Vec::new(); nmax as usize + 1];
    let r = 23i64;
    for x in -r..=r {
        for y in -r..=r {
            for z in -r..=r {
                let n = x * x + y * y + z * z;
                if n <= nmax {
                    shells[n as usize].push([x, y, z]);
                }
            }
        }
    }
    let mut zetas = Vec::new();
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            for c in (-3i64..=3).filter(|&c| c != 0) {
                zetas.push([a, b, c]);
            }
        }
    }
    let failures: Vec<String> = zetas
        .par_iter()
        .flat_map_iter(|&zeta| {
            let mut out = Vec::new();
            for n in 0..=nmax {
                let mut hist = [0u64; 21];
                for eta in &shells[n as usize] {
                    let m = eta[0] * zeta[0] + eta[1] * zeta[1] + eta[2] * zeta[2];
                    if m.abs() <= 10 {
                        hist[(m + 10) as usize] += 1;
                    }
                }
                for m in -10i64..=10 {
                    let count = hist[(m + 10) as usize];
                    let red = strip_reduction(zeta, n, m).unwrap();
                    let ok = if red.k < 0 {
                        count == 0
                    } else if red.k == 0 {
                        count <= 1
                    } else {
                        let k = u64::try_from(red.k).unwrap();
                        count == 0
                            || (count <= rep_count_binary(k, red.disc_sf).unwrap()
                                && count <= 6 * divisor_count(k))
                    };
                    if !ok {
                        out.push(format!("ζ={zeta:?} n={n} m={m} count={count} k={}", red.k));
                    }
                }
            }
            out
        })
        .collect();
    let e = t.elapsed();
    let pass = failures.is_empty() && e <= Duration::from_secs(120);
    report(4, "strip reduction chain", pass, format!("{} violations over {} frequencies", failures.len(), zetas.len()), e);
    assert!(pass, "{:?}", &failures[..failures.len().min(10)]);
}

#[test]
fn criterion_05_solver_interlacing_and_monotonicity() {
    let t = Instant::now();
    let spec = TorusSpec::standard();
    let x = 200.0;
    let (brute, _) = brute_r3(200);
    let norms: Vec<f64> = (0..=200u64).filter(|&n| brute[n as usize] > 0).map(|n| n as f64).collect();
    let mut problems = Vec::new();
    let mut per_phi = Vec::new();
    for phi in [-2.0, 0.0, 2.0] {
        let ctx = SpectralContext::new(&spec, phi, x).unwrap();
        let eig = solve_eigenvalues(&ctx, x).unwrap();
        if eig.len() != norms.len() {
            problems.push(format!("φ={phi}: {} roots for {} norms", eig.len(), norms.len()));
        }
        for (k, e) in eig.iter().enumerate() {
            let lo = if k == 0 { f64::NEG_INFINITY } else { norms[k - 1] };
            if e.bracket_lo != lo || e.bracket_hi != norms[k] || !(lo < e.value && e.value < norms[k]) {
                problems.push(format!("φ={phi} k={k}: interlacing"));
            }
            let f = ctx.secular_f(e.value).unwrap().value;
            if (f - ctx.target).abs() > 1e-8 {
                problems.push(format!("φ={phi} k={k}: residual {}", (f - ctx.target).abs()));
            }
        }
        per_phi.push(eig);
    }
    for k in 0..=10 {
        if !(per_phi[0][k].value < per_phi[1][k].value && per_phi[1][k].value < per_phi[2][k].value) {
            problems.push(format!("k={k}: not increasing in φ"));
        }
    }
    let e = t.elapsed();
    let pass = problems.is_empty() && e <= Duration::from_secs(120);
    report(5, "solver interlacing and residuals", pass, format!("{} problems", problems.len()), e);
    assert!(pass, "{problems:?}");
}

/// Shared scan for criteria 6 and 7.
fn truncation_records() -> Vec<torus_scatter::equidistribution::TruncationRecord> {
    let ctx = SpectralContext::new(&TorusSpec::standard(), 0.0, 1e4).unwrap();
    let eig: Vec<_> = solve_eigenvalues(&ctx, 1e4)
        .unwrap()
        .into_iter()
        .filter(|e| (1e2..=1e4).contains(&e.value))
        .collect();
    truncation_scan(&ctx, &eig, 0.2).unwrap()
}

#[test]
fn criterion_06_truncation_gap_decay() {
    let t = Instant::now();
    let recs = truncation_records();
    let xs: Vec<f64> = recs.iter().map(|r| r.lambda).collect();
    let gs: Vec<f64> = recs.iter().map(|r| r.gap_sq).collect();
    let s = log_log_slope(&xs, &gs);
    let decade_max = |lo: f64, hi: f64| {
        recs.iter().filter(|r| r.lambda >= lo && r.lambda < hi).map(|r| r.gap_sq).fold(0.0, f64::max)
    };
    let (first, last) = (decade_max(1e2, 1e3), decade_max(1e3, 1e4 + 1.0));
    let e = t.elapsed();
    let pass = s <= -0.05 && last < first && e <= Duration::from_secs(600);
    report(6, "truncation gap trend", pass, format!("slope {s:.3}, decade maxima {first:.4} → {last:.4}, {} eigenvalues", recs.len()), e);
    assert!(pass);
}

#[test]
fn criterion_07_green_norm_lower_bound() {
    let t = Instant::now();
    let recs = truncation_records();
    let lower = |lo: f64, hi: f64| {
        recs.iter()
            .filter(|r| r.lambda >= lo && r.lambda < hi)
            .map(|r| r.norm_sq / r.lambda.powf(0.45))
            .fold(f64::INFINITY, f64::min)
    };
    let (c1, c2) = (lower(1e2, 1e3), lower(1e3, 1e4 + 1.0));
    let e = t.elapsed();
    let pass = c1 > 0.0 && c2 > 0.0 && (c2 / c1 - 1.0).abs() <= 0.5 && e <= Duration::from_secs(600);
    report(7, "Green's norm lower bound", pass, format!("constants {c1:.3} and {c2:.3}"), e);
    assert!(pass);
}

#[test]
fn criterion_08_matrix_element_decay() {
    let t = Instant::now();
    let ctx = SpectralContext::new(&TorusSpec::standard(), 0.0, 5e3).unwrap();
    let lambdas: Vec<f64> = solve_eigenvalues(&ctx, 5e3)
        .unwrap()
        .into_iter()
        .map(|e| e.value)
        .filter(|l| (1e2..=5e3).contains(l))
        .collect();
    let mut pass = true;
    let mut details = Vec::new();
    for zeta in [[1, 0, 0], [1, 1, 0], [2, 1, 0]] {
        let scan = decay_scan_on(&ctx, &lambdas, zeta, ScanMode::Full).unwrap();
        let xs: Vec<f64> = scan.records.iter().map(|r| r.lambda).collect();
        let vs: Vec<f64> = scan.records.iter().map(|r| r.value).collect();
        let s = log_log_slope(&xs, &vs);
        let max_in = |lo: f64, hi: f64| {
            scan.records.iter().filter(|r| r.lambda >= lo && r.lambda < hi).map(|r| r.value.abs()).fold(0.0, f64::max)
        };
        let (first, last) = (max_in(1e2, 1e3), max_in(1e3, 5e3 + 1.0));
        pass &= s < -0.05 && last < first;
        details.push(format!("ζ={zeta:?} slope {s:.3} max {first:.4} → {last:.4}"));
    }
    let e = t.elapsed();
    pass &= e <= Duration::from_secs(900);
    report(8, "matrix-element decay", pass, details.join("; "), e);
    assert!(pass);
}

#[test]
fn criterion_09_weyl_remainder() {
    let t = Instant::now();
    let mut pass = true;
    let mut details = Vec::new();
    for spec in [TorusSpec::standard(), TorusSpec::preset("sqrt-2-3").unwrap()] {
        let norms = brute_norms(&spec, 1e4);
        let k = 4.0 / 3.0 * std::f64::consts::PI / (spec.inv[0] * spec.inv[1] * spec.inv[2]).sqrt();
        // |R|/x^{0.8} on both sides of every jump.
        let ratios = |lo: f64, hi: f64| {
            let mut worst: f64 = 0.0;
            let mut i = 0;
            while i < norms.len() {
                let v = norms[i];
                let mut j = i;
                while j < norms.len() && norms[j] == v {
                    j += 1;
                }
                if v >= lo && v <= hi {
                    let main = k * v.powf(1.5);
                    let r = (i as f64 - main).abs().max((j as f64 - main).abs());
                    worst = worst.max(r / v.powf(0.8));
                }
                i = j;
            }
            worst
        };
        let c = ratios(10.0, 1e3);
        let beyond = ratios(1e3, 1e4);
        pass &= beyond <= c;
        for x in [10.0, 123.4, 999.0, 5000.5, 1e4] {
            pass &= weyl_count(&spec, x).count == norms.partition_point(|&n| n <= x) as u64;
        }
        details.push(format!("{}: C {c:.3}, beyond {beyond:.3}", spec.name));
    }
    let irr = norm_classes_up_to(&TorusSpec::preset("sqrt-2-3").unwrap(), 1e4).unwrap();
    let mults_ok = irr.classes.iter().all(|c| [1, 2, 4, 8].contains(&c.multiplicity));
    pass &= mults_ok;
    let e = t.elapsed();
    pass &= e <= Duration::from_secs(60);
    report(9, "Weyl remainder", pass, format!("{}; multiplicities in {{1,2,4,8}}: {mults_ok}", details.join("; ")), e);
    assert!(pass);
}

#[test]
fn criterion_10_thin_shell_pairs() {
    let t = Instant::now();
    let spec = TorusSpec::preset("sqrt-2-3").unwrap();
    let delta = 0.1;
    let xs = [25.0, 50.0, 100.0, 200.0];
    let counts: Vec<f64> = xs
        .iter()
        .map(|&x| count_near_resonant_pairs(&spec, x, delta).unwrap().off_diagonal() as f64)
        .collect();
    let s = log_log_slope(&xs, &counts);
    let e = t.elapsed();
    let pass = s <= 2.0 - delta + 0.1 && e <= Duration::from_secs(300);
    report(10, "thin-shell pair bound", pass, format!("exponent {s:.3}, counts {counts:?}"), e);
    assert!(pass);
}

#[test]
fn criterion_11_density_reports() {
    let t = Instant::now();
    let spec = TorusSpec::preset("sqrt-2-3").unwrap();
    let x = 1e3;
    let ctx = SpectralContext::new(&spec, 0.0, x + DENSITY_MARGIN).unwrap();
    let spectrum = Spectrum::compute(&ctx, x + DENSITY_MARGIN).unwrap();
    let zeta = smallest_nonzero_vector(&spec).unwrap();
    let params = DensityParams { epsilon: 0.05, delta: 0.1, zeta };
    let reports = density_reports(&spec, &spectrum, &params, x).unwrap();
    let f: Vec<f64> = reports.iter().map(|r| r.fraction).collect();
    let nested = f[0] >= f[1] && f[1] >= f[2];
    let e = t.elapsed();
    let pass = f.iter().all(|&v| v >= 0.9) && nested && e <= Duration::from_secs(600);
    report(
        11,
        "density of Λ₁ ⊇ Λ₂ ⊇ Λ_ζ",
        pass,
        format!("fractions {:.3} / {:.3} / {:.3} of {}, nested {nested}", f[0], f[1], f[2], reports[0].total_count),
        e,
    );
    assert!(pass);
}

#[test]
fn criterion_12_tail_estimator() {
    let t = Instant::now();
    let mut pass = true;
    let mut details = Vec::new();
    for spec in [TorusSpec::standard(), TorusSpec::preset("sqrt-2-3").unwrap()] {
        for lambda in [0.0, 1e3] {
            // The tail estimator needs the start above λ + 1.
            let split = f64::max(4.0 * lambda, 1e3);
            let norms = brute_norms(&spec, 4.0 * split);
            let direct: f64 = norms
                .iter()
                .filter(|&&n| n > split)
                .map(|n| (n - lambda).powi(-2))
                .sum();
            let kind = TailKind::InvSq { lambda };
            let a = tail_integral(kind, split, &spec, DEFAULT_C_REM).unwrap();
            let b = tail_integral(kind, 4.0 * split, &spec, DEFAULT_C_REM).unwrap();
            let diff = (direct - (a.value - b.value)).abs();
            let budget = a.error_bound() + b.error_bound();
            pass &= diff <= budget;
            details.push(format!("{} λ={lambda}: |Δ| {diff:.2e} ≤ {budget:.2e}", spec.name));
        }
    }
    let e = t.elapsed();
    pass &= e <= Duration::from_secs(30);
    report(12, "tail estimator", pass, details.join("; "), e);
    assert!(pass);
}

/// `max g − min g` for `g(t) = #{x < t}/N − t` on a grid of step 1e-4.
fn grid_discrepancy(points: &[f64]) -> f64 {
    let mut sorted = points.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for j in 0..=10_000 {
        let t = j as f64 * 1e-4;
        let g = sorted.partition_point(|&x| x < t) as f64 / n - t;
        lo = lo.min(g);
        hi = hi.max(g);
    }
    (hi - lo).min(1.0)
}

#[test]
fn criterion_13_discrepancy_suite() {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut grid_worst: f64 = 0.0;
    let mut sandwich_ok = true;
    for _ in 0..100 {
        let n = rng.random_range(1..=50);
        let pts: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
        let d = exact_discrepancy(&pts).unwrap();
        grid_worst = grid_worst.max((d - grid_discrepancy(&pts)).abs());
        let s = star_discrepancy(&pts).unwrap();
        sandwich_ok &= s <= d && d <= 2.0 * s;
    }
    let alpha = Real::sqrt_int(2);
    for n in [100, 1000, 10_000, 100_000] {
        let seq = kronecker_sequence(alpha, 0.0, n).unwrap();
        let d = exact_discrepancy(&seq.points).unwrap();
        let s = star_discrepancy(&seq.points).unwrap();
        sandwich_ok &= s <= d && d <= 2.0 * s;
    }
    let offsets: Vec<f64> = (0..5).map(|_| rng.random::<f64>()).collect();
    let check = discrepancy_decay_check(alpha, 0.0, &[100, 1000, 10_000, 100_000], &offsets).unwrap();
    let e = t.elapsed();
    let pass = grid_worst <= 2e-4
        && sandwich_ok
        && check.base.exponent <= -0.85
        && check.max_constant_deviation <= 0.05
        && e <= Duration::from_secs(300);
    report(
        13,
        "discrepancy suite",
        pass,
        format!(
            "grid deviation {grid_worst:.1e}, sandwich {sandwich_ok}, exponent {:.3}, offset constant deviation {:.1e}",
            check.base.exponent, check.max_constant_deviation
        ),
        e,
    );
    assert!(pass);
}

#[test]
fn criterion_14_finite_type() {
    let t = Instant::now();
    let q = 1_000_000;
    let sqrt2 = finite_type_estimate(Real::sqrt_int(2), q).unwrap().tau;
    let golden = finite_type_estimate(Real::golden(), q).unwrap().tau;
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut min_tau = f64::INFINITY;
    let mut drawn = 0;
    while drawn < 20 {
        let d: u64 = rng.random_range(2..1000);
        let root = (d as f64).sqrt() as u64;
        if root * root == d {
            continue;
        }
        let p = rng.random_range(0..10) as f64;
        let den = rng.random_range(1..10) as f64;
        let alpha = (Real::sqrt_int(d) + Real::from_f64(p)) / Real::from_f64(den);
        min_tau = min_tau.min(finite_type_estimate(alpha, q).unwrap().tau);
        drawn += 1;
    }
    let e = t.elapsed();
    let pass = (1.0..=1.1).contains(&sqrt2)
        && (1.0..=1.1).contains(&golden)
        && min_tau >= 1.0
        && e <= Duration::from_secs(60);
    report(14, "finite type", pass, format!("τ̂(√2) {sqrt2:.4}, τ̂(golden) {golden:.4}, min over 20 quadratics {min_tau:.4}"), e);
    assert!(pass);
}

#[test]
fn criterion_15_cli_determinism() {
    let t = Instant::now();
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    let mut configs: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "toml"))
        .collect();
    configs.sort();
    let run = |path: &std::path::Path, threads: &str| {
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_torus-scatter"))
            .arg("--config")
            .arg(path)
            .arg("--no-timestamp")
            .env("TORUS_SCATTER_THREADS", threads)
            .output()
            .unwrap();
        (out.status.code(), out.stdout)
    };
    let mut differing = Vec::new();
    for c in &configs {
        let (code_a, a) = run(c, "1");
        let (code_b, b) = run(c, "4");
        if code_a != Some(0) || code_b != Some(0) || a != b || a.is_empty() {
            differing.push(c.file_name().unwrap().to_string_lossy().into_owned());
        }
    }
    let e = t.elapsed();
    let pass = !configs.is_empty() && differing.is_empty() && e <= Duration::from_secs(300);
    report(15, "CLI determinism", pass, format!("{} fixtures, differing {differing:?}", configs.len()), e);
    assert!(pass);
}
