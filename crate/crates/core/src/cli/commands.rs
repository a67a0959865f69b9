use super::emit::Table;
use super::{CliError, RunConfig};
use crate::arithmetic::{
    classify_three_squares, divisor_count, four_power_class, gauss_r3, kronecker, primitive_r3,
    r3, rep_count_binary, ArithmeticError,
};
use crate::diophantine::{discrepancy_decay_check, DiophantineError, DiscrepancyReport, Real};
use crate::equidistribution::{
    decay_scan, density_reports, smallest_nonzero_vector, DensityParams, EquidistributionError,
    ScanMode, Spectrum, DENSITY_MARGIN,
};
use crate::lattice::{norm_classes_up_to, strip_count, strip_count_bound, LatticeError};
use crate::spectral::{solve_eigenvalues, SpectralContext, SpectralError};
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::NormCollision { .. } | LatticeError::Overflow(_) | LatticeError::Csv(_) => {
                CliError::Numerical(e.to_string())
            }
            _ => CliError::Config(e.to_string()),
        }
    }
}

impl From<SpectralError> for CliError {
    fn from(e: SpectralError) -> Self {
        match e {
            SpectralError::ExcludedPhase(_) | SpectralError::OutOfRange(_) => {
                CliError::Config(e.to_string())
            }
            SpectralError::Lattice(l) => l.into(),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<ArithmeticError> for CliError {
    fn from(e: ArithmeticError) -> Self {
        match e {
            ArithmeticError::Overflow(_) => CliError::Numerical(e.to_string()),
            _ => CliError::Config(e.to_string()),
        }
    }
}

impl From<DiophantineError> for CliError {
    fn from(e: DiophantineError) -> Self {
        CliError::Config(e.to_string())
    }
}

impl From<EquidistributionError> for CliError {
    fn from(e: EquidistributionError) -> Self {
        match e {
            EquidistributionError::Spectral(s) => s.into(),
            EquidistributionError::Lattice(l) => l.into(),
            EquidistributionError::OutOfRange(_) => CliError::Config(e.to_string()),
            EquidistributionError::SuccessorUnknown { .. } => CliError::Numerical(e.to_string()),
        }
    }
}

fn zeta_text(z: [i64; 3]) -> String {
    format!("{},{},{}", z[0], z[1], z[2])
}

fn need<T>(v: Option<T>, what: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Config(format!("missing required parameter {what}")))
}

pub fn dispatch(cfg: &mut RunConfig) -> Result<(String, Table), CliError> {
    let spec = cfg.torus_spec().map_err(CliError::Config)?;
    cfg.resolve(&spec);
    let command = need(cfg.command.clone(), "command (subcommand or `command` key)")?;
    let table = match command.as_str() {
        "eigenvalues" => eigenvalues(cfg, &spec)?,
        "decay-scan" => decay(cfg, &spec)?,
        "arith" => arith(cfg)?,
        "strip" => strip(cfg, &spec)?,
        "discrepancy" => discrepancy(cfg)?,
        "density" => density(cfg, &spec)?,
        "norms" => norms(cfg, &spec)?,
        other => return Err(CliError::Config(format!("unknown command '{other}'"))),
    };
    Ok((command, table))
}

fn context(cfg: &RunConfig, spec: &crate::lattice::TorusSpec, ceiling: f64) -> Result<SpectralContext, CliError> {
    Ok(SpectralContext::with_options(spec, cfg.spectral.phi, ceiling, cfg.spectral_options())?)
}

fn eigenvalues(cfg: &RunConfig, spec: &crate::lattice::TorusSpec) -> Result<Table, CliError> {
    let x = cfg.scan.x_hi;
    let ctx = context(cfg, spec, x)?;
    let eig = solve_eigenvalues(&ctx, x)?;
    let mut t = Table::new(&["k", "lambda", "bracket_lo", "bracket_hi", "residual", "cluster_warning"]);
    for e in &eig {
        let lo = if e.bracket_lo.is_finite() { json!(e.bracket_lo) } else { json!("-inf") };
        t.push(vec![
            json!(e.index),
            json!(e.value),
            lo,
            json!(e.bracket_hi),
            json!(e.residual),
            json!(e.cluster_warning),
        ]);
    }
    let interlaced = eig.windows(2).all(|w| w[0].value < w[1].bracket_lo && w[1].bracket_lo < w[1].value)
        && eig.iter().all(|e| e.value < e.bracket_hi);
    t.summary.push(json!({ "count": eig.len(), "c0": ctx.c0.value(), "target": ctx.target, "interlaced": interlaced }));
    Ok(t)
}

fn scan_mode(cfg: &RunConfig) -> Result<ScanMode, CliError> {
    let delta = cfg.params.delta.expect("resolved");
    match cfg.params.mode.as_str() {
        "full" => Ok(ScanMode::Full),
        "truncated" => Ok(ScanMode::Truncated { delta }),
        "paper_sum" => Ok(ScanMode::PaperSum { delta }),
        m => Err(CliError::Config(format!("unknown mode '{m}' (full, truncated, paper_sum)"))),
    }
}

fn decay(cfg: &mut RunConfig, spec: &crate::lattice::TorusSpec) -> Result<Table, CliError> {
    let zeta = *cfg.params.zeta.get_or_insert([1, 0, 0]);
    let mode = scan_mode(cfg)?;
    let (lo, hi) = (cfg.scan.x_lo, cfg.scan.x_hi);
    if !(lo <= hi) {
        return Err(CliError::Config("x_lo must not exceed x_hi".into()));
    }
    let ctx = context(cfg, spec, hi)?;
    let scan = decay_scan(&ctx, zeta, lo, hi, mode)?;
    let mut t = Table::new(&["lambda", "zeta", "mode", "window", "value", "tail_bound"]);
    for r in &scan.records {
        t.push(vec![
            json!(r.lambda),
            json!(zeta_text(r.zeta)),
            json!(r.mode),
            json!(r.window),
            json!(r.value),
            json!(r.tail_bound),
        ]);
    }
    t.summary.push(json!({
        "count": scan.records.len(),
        "fitted_slope": scan.fitted_slope,
        "fitted_intercept": scan.fitted_intercept,
    }));
    Ok(t)
}

fn arith(cfg: &mut RunConfig) -> Result<Table, CliError> {
    let a = cfg.arith.clone();
    let op = need(a.op, "arith op")?;
    let t = match op.as_str() {
        "r3" => {
            let n = need(a.n, "n")?;
            row(&["n", "r3"], vec![json!(n), json!(r3(n))])
        }
        "primitive-r3" => {
            let n = need(a.n, "n")?;
            row(&["n", "primitive_r3"], vec![json!(n), json!(primitive_r3(n))])
        }
        "classify" => {
            let c = classify_three_squares(need(a.n, "n")?);
            row(&["n", "a", "n1", "representable"], vec![json!(c.n), json!(c.a), json!(c.n1), json!(c.representable)])
        }
        "gauss" => {
            let n = need(a.n, "n")?;
            let g = gauss_r3(n, a.terms.unwrap_or(4 * n.max(1)))?;
            row(
                &["n", "terms", "g_n", "value", "error_bar", "applicable"],
                vec![json!(g.n), json!(g.terms), json!(g.g_n), json!(g.value), json!(g.error_bar), json!(g.applicable)],
            )
        }
        "kronecker" => {
            let (x, m) = (need(a.a, "a")?, need(a.m, "m")?);
            if m == 0 {
                return Err(CliError::Config("m must be positive".into()));
            }
            row(&["a", "m", "value"], vec![json!(x), json!(m), json!(kronecker(x, m))])
        }
        "divisors" => {
            let k = need(a.k, "k")?;
            row(&["k", "tau"], vec![json!(k), json!(divisor_count(k))])
        }
        "binary" => {
            let (k, d) = (need(a.k, "k")?, need(a.d, "d")?);
            let count = rep_count_binary(k, d)?;
            row(&["k", "d", "count", "six_tau"], vec![json!(k), json!(d), json!(count), json!(6 * divisor_count(k))])
        }
        "four-power" => {
            let n = need(a.n, "n")?;
            let z = need(cfg.params.zeta, "zeta")?;
            let class = four_power_class(n, z)?;
            row(&["n", "zeta", "class"], vec![json!(n), json!(zeta_text(z)), json!(format!("{class:?}"))])
        }
        other => return Err(CliError::Config(format!("unknown arith op '{other}'"))),
    };
    Ok(t)
}

fn row(columns: &[&'static str], values: Vec<Value>) -> Table {
    let mut t = Table::new(columns);
    t.push(values);
    t
}

fn strip(cfg: &mut RunConfig, spec: &crate::lattice::TorusSpec) -> Result<Table, CliError> {
    let zeta = *cfg.params.zeta.get_or_insert([0, 0, 1]);
    let (n, bound) = (cfg.strip.n, cfg.strip.bound);
    let count = strip_count(spec, n, zeta, bound)?;
    let upper = strip_count_bound(zeta, n, bound)?;
    Ok(row(
        &["n", "zeta", "bound", "strip_count", "strip_count_bound"],
        vec![json!(n), json!(zeta_text(zeta)), json!(bound), json!(count), json!(upper)],
    ))
}

fn discrepancy(cfg: &RunConfig) -> Result<Table, CliError> {
    let d = &cfg.discrepancy;
    let alpha = Real::parse(&d.alpha)
        .ok_or_else(|| CliError::Config(format!("cannot parse alpha '{}'", d.alpha)))?;
    if d.n.is_empty() || d.n.contains(&0) {
        return Err(CliError::Config("N values must be positive".into()));
    }
    let mut t = Table::new(&["N", "exact_D", "star_D", "et_bound", "et_m", "et_C"]);
    for &n in &d.n {
        let r = DiscrepancyReport::kronecker(alpha, d.beta, n, d.m.unwrap_or(n as u64), d.c)?;
        t.push(vec![json!(r.n), json!(r.exact_d), json!(r.star_d), json!(r.et_bound), json!(r.et_m), json!(r.et_c)]);
    }
    if d.n.len() >= 2 {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cfg.seed);
        let offsets: Vec<f64> = (0..d.offsets).map(|_| rng.random::<f64>()).collect();
        let check = discrepancy_decay_check(alpha, d.beta, &d.n, &offsets)?;
        t.summary.push(json!({
            "exponent": check.base.exponent,
            "log_c": check.base.log_c,
            "offsets": offsets,
            "max_exponent_deviation": check.max_exponent_deviation,
            "max_constant_deviation": check.max_constant_deviation,
            "degenerate": check.degenerate,
        }));
    }
    Ok(t)
}

fn density(cfg: &mut RunConfig, spec: &crate::lattice::TorusSpec) -> Result<Table, CliError> {
    let x = cfg.scan.x_hi;
    let zeta = match cfg.params.zeta {
        Some(z) => z,
        None => *cfg.params.zeta.insert(smallest_nonzero_vector(spec).map_err(CliError::from)?),
    };
    let params = DensityParams { epsilon: cfg.params.epsilon, delta: cfg.params.delta.expect("resolved"), zeta };
    let ctx = context(cfg, spec, x + DENSITY_MARGIN)?;
    let spectrum = Spectrum::compute(&ctx, x + DENSITY_MARGIN)?;
    let reports = density_reports(spec, &spectrum, &params, x)?;
    let mut t = Table::new(&["set", "block_lo", "block_hi", "members", "complement"]);
    for r in &reports {
        for b in &r.blocks {
            t.push(vec![json!(format!("{:?}", r.set_name)), json!(b.lo), json!(b.hi), json!(b.members), json!(b.complement)]);
        }
        t.summary.push(json!({
            "set": format!("{:?}", r.set_name),
            "member_count": r.member_count,
            "total_count": r.total_count,
            "fraction": r.fraction,
            "empty_range": r.empty_range,
            "warnings": r.warnings,
        }));
    }
    Ok(t)
}

fn norms(cfg: &RunConfig, spec: &crate::lattice::TorusSpec) -> Result<Table, CliError> {
    let table = norm_classes_up_to(spec, cfg.scan.x_hi)?;
    let mut t = Table::new(&["norm", "multiplicity", "rep_x", "rep_y", "rep_z"]);
    for c in &table.classes {
        t.push(vec![json!(c.value), json!(c.multiplicity), json!(c.rep[0]), json!(c.rep[1]), json!(c.rep[2])]);
    }
    Ok(t)
}
