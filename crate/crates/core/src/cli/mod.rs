//! Batch front-end. Every flag maps onto a key of [`RunConfig`]; the
//! resolved config is echoed into each output header.

mod commands;
mod config;
mod emit;

pub use config::{RunConfig, CONFIG_HELP};
pub use emit::{Format, Header, Table};

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const THREADS_ENV: &str = "TORUS_SCATTER_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("output error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Numerical(_) | CliError::Io(_) => EXIT_NUMERICAL,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "torus-scatter", version, about = "Point scatterers on 3D flat tori", after_long_help = CONFIG_HELP)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Args)]
struct Common {
    /// TOML config file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// `csv` or `jsonl`
    #[arg(long, global = true)]
    format: Option<String>,
    /// Output path, `-` for standard output.
    #[arg(long, global = true)]
    output: Option<String>,
    /// Echoed in the header; seeds random discrepancy offsets
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Omit the wall-clock header line.
    #[arg(long, global = true)]
    no_timestamp: bool,
    /// `standard`, `sqrt-2-3` or `sqrt-5-7`
    #[arg(long, global = true)]
    preset: Option<String>,
    /// Three comma-separated inverse squares, e.g. `1,sqrt2,sqrt3`.
    #[arg(long, global = true, value_delimiter = ',', num_args = 1)]
    inverse_squares: Option<Vec<String>>,
    /// Phase φ in (−π, π)
    #[arg(long, global = true, allow_hyphen_values = true)]
    phi: Option<f64>,
    /// Weyl-remainder constant used in tail bounds
    #[arg(long, global = true)]
    c_rem: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Perturbed eigenvalues up to X.
    Eigenvalues {
        #[arg(long)]
        x: Option<f64>,
    },
    /// Matrix elements ⟨e_ζ g_λ, g_λ⟩ along the spectrum.
    DecayScan {
        #[arg(long, value_parser = parse_zeta, allow_hyphen_values = true)]
        zeta: Option<[i64; 3]>,
        #[arg(long)]
        x_lo: Option<f64>,
        #[arg(long)]
        x_hi: Option<f64>,
        #[arg(long)]
        mode: Option<String>,
        #[arg(long)]
        delta: Option<f64>,
    },
    /// Sums of three squares, characters, divisors and binary forms.
    Arith {
        op: ArithOp,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        terms: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<i64>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long, value_parser = parse_zeta, allow_hyphen_values = true)]
        zeta: Option<[i64; 3]>,
    },
    /// Integer points of a sphere inside a strip, with the divisor bound.
    Strip {
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, value_parser = parse_zeta, allow_hyphen_values = true)]
        zeta: Option<[i64; 3]>,
        #[arg(long)]
        bound: Option<f64>,
    },
    /// Discrepancy of Kronecker sequences.
    Discrepancy {
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<f64>,
        /// Sequence lengths, comma separated.
        #[arg(long = "N", value_delimiter = ',')]
        n: Option<Vec<usize>>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        c: Option<f64>,
        #[arg(long)]
        offsets: Option<usize>,
    },
    /// Density of Λ₁ ⊇ Λ₂ ⊇ Λ_ζ below X.
    Density {
        #[arg(long)]
        x: Option<f64>,
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long, value_parser = parse_zeta, allow_hyphen_values = true)]
        zeta: Option<[i64; 3]>,
    },
    /// Norm classes up to X.
    Norms {
        #[arg(long)]
        x: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ArithOp {
    R3,
    PrimitiveR3,
    Classify,
    Gauss,
    Kronecker,
    Divisors,
    Binary,
    FourPower,
}

fn parse_zeta(s: &str) -> Result<[i64; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated integers, got '{s}'"));
    }
    let mut z = [0i64; 3];
    for (slot, p) in z.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|_| format!("'{p}' is not an integer"))?;
    }
    Ok(z)
}

fn set<T>(slot: &mut T, v: Option<T>) {
    if let Some(v) = v {
        *slot = v;
    }
}

fn merge(cfg: &mut RunConfig, common: Common, command: Option<Command>) -> Result<(), CliError> {
    set(&mut cfg.seed, common.seed);
    set(&mut cfg.output.format, common.format);
    set(&mut cfg.output.path, common.output);
    if let Some(p) = common.preset {
        cfg.torus.preset = p;
        cfg.torus.inverse_squares = None;
    }
    if let Some(v) = common.inverse_squares {
        let arr: [String; 3] = v
            .try_into()
            .map_err(|_| CliError::Config("--inverse-squares needs three values".into()))?;
        cfg.torus.inverse_squares = Some(arr);
    }
    set(&mut cfg.spectral.phi, common.phi);
    set(&mut cfg.spectral.c_rem, common.c_rem);
    let Some(cmd) = command else { return Ok(()) };
    let name = match cmd {
        Command::Eigenvalues { x } => {
            set(&mut cfg.scan.x_hi, x);
            "eigenvalues"
        }
        Command::DecayScan { zeta, x_lo, x_hi, mode, delta } => {
            cfg.params.zeta = zeta.or(cfg.params.zeta);
            set(&mut cfg.scan.x_lo, x_lo);
            set(&mut cfg.scan.x_hi, x_hi);
            set(&mut cfg.params.mode, mode);
            cfg.params.delta = delta.or(cfg.params.delta);
            "decay-scan"
        }
        Command::Arith { op, n, terms, a, m, k, d, zeta } => {
            let op = op.to_possible_value().expect("no skipped variants");
            let ar = &mut cfg.arith;
            ar.op = Some(op.get_name().to_string());
            ar.n = n.or(ar.n);
            ar.terms = terms.or(ar.terms);
            ar.a = a.or(ar.a);
            ar.m = m.or(ar.m);
            ar.k = k.or(ar.k);
            ar.d = d.or(ar.d);
            cfg.params.zeta = zeta.or(cfg.params.zeta);
            "arith"
        }
        Command::Strip { n, zeta, bound } => {
            set(&mut cfg.strip.n, n);
            set(&mut cfg.strip.bound, bound);
            cfg.params.zeta = zeta.or(cfg.params.zeta);
            "strip"
        }
        Command::Discrepancy { alpha, beta, n, m, c, offsets } => {
            let ds = &mut cfg.discrepancy;
            set(&mut ds.alpha, alpha);
            set(&mut ds.beta, beta);
            set(&mut ds.n, n);
            ds.m = m.or(ds.m);
            set(&mut ds.c, c);
            set(&mut ds.offsets, offsets);
            "discrepancy"
        }
        Command::Density { x, epsilon, delta, zeta } => {
            set(&mut cfg.scan.x_hi, x);
            set(&mut cfg.params.epsilon, epsilon);
            cfg.params.delta = delta.or(cfg.params.delta);
            cfg.params.zeta = zeta.or(cfg.params.zeta);
            "density"
        }
        Command::Norms { x } => {
            set(&mut cfg.scan.x_hi, x);
            "norms"
        }
    };
    cfg.command = Some(name.into());
    Ok(())
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Config(format!("{THREADS_ENV} must be a positive integer, got '{v}'")))?;
        b = b.num_threads(n);
    }
    b.build().map_err(|e| CliError::Config(e.to_string()))
}

fn execute(common: Common, command: Option<Command>) -> Result<(), CliError> {
    let mut cfg = match &common.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
            RunConfig::from_toml(&text).map_err(CliError::Config)?
        }
        None => RunConfig::default(),
    };
    let timestamp = !common.no_timestamp;
    merge(&mut cfg, common, command)?;
    let format = Format::parse(&cfg.output.format)?;
    let pool = thread_pool()?;
    let (header_cmd, table) = pool.install(|| commands::dispatch(&mut cfg))?;
    let header = Header {
        command: header_cmd,
        config: serde_json::to_value(&cfg).map_err(|e| CliError::Io(e.to_string()))?,
        seed: cfg.seed,
        timestamp: timestamp.then(|| {
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map_or(0, |d| d.as_secs())
        }),
    };
    if cfg.output.path == "-" {
        let stdout = std::io::stdout();
        emit::emit(&mut stdout.lock(), format, &header, &table)
    } else {
        let file = std::fs::File::create(&cfg.output.path)
            .map_err(|e| CliError::Config(format!("cannot create {}: {e}", cfg.output.path)))?;
        emit::emit(&mut std::io::BufWriter::new(file), format, &header, &table)
    }
}

/// Parse arguments, run, and return the process exit code.
pub fn run<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    match execute(cli.common, cli.command) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("torus-scatter: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_parsing() {
        assert_eq!(parse_zeta("1,-2, 0"), Ok([1, -2, 0]));
        assert!(parse_zeta("1,2").is_err());
        assert!(parse_zeta("a,b,c").is_err());
    }

    #[test]
    fn flags_override_file() {
        let mut cfg = RunConfig::from_toml("[scan]\nx_hi = 10.0\n[spectral]\nphi = 1.0\n").unwrap();
        let cli = Cli::try_parse_from(["t", "--phi", "-2", "eigenvalues", "--x", "50"]).unwrap();
        merge(&mut cfg, cli.common, cli.command).unwrap();
        assert_eq!((cfg.scan.x_hi, cfg.spectral.phi), (50.0, -2.0));
        assert_eq!(cfg.command.as_deref(), Some("eigenvalues"));
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(RunConfig::from_toml("[scan]\nxhi = 3\n").is_err());
    }
}
