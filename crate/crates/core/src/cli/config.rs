use crate::lattice::TorusSpec;
use crate::spectral::{SpectralOptions, DEFAULT_C_REM};
use serde::{Deserialize, Serialize};

/// Every tunable of a run. File values are overridden by flags; the
/// resolved value is echoed into each output header.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub command: Option<String>,
    pub seed: u64,
    pub torus: TorusSection,
    pub spectral: SpectralSection,
    pub scan: ScanSection,
    pub params: ParamsSection,
    pub arith: ArithSection,
    pub strip: StripSection,
    pub discrepancy: DiscrepancySection,
    pub output: OutputSection,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct TorusSection {
    /// Named preset; ignored when `inverse_squares` is set.
    pub preset: String,
    /// Three expressions for `1/a², 1/b², 1/c²` (`1`, `sqrt2`, `golden`, decimals).
    pub inverse_squares: Option<[String; 3]>,
    pub finite_type_hint: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SpectralSection {
    pub phi: f64,
    pub c_rem: f64,
    pub pole_guard: f64,
    pub residual_tol: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScanSection {
    pub x_lo: f64,
    pub x_hi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ParamsSection {
    pub epsilon: f64,
    /// Defaults to 0.2 on the standard torus and 0.1 otherwise.
    pub delta: Option<f64>,
    /// Defaults to (1,0,0) for scans and the smallest nonzero vector for
    /// density reports.
    pub zeta: Option<[i64; 3]>,
    /// `full`, `truncated` or `paper_sum`.
    pub mode: String,
    /// Head/tail split `T = max(split_factor·X, min_split)`.
    pub split_factor: f64,
    pub min_split: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ArithSection {
    /// `r3`, `primitive-r3`, `classify`, `gauss`, `kronecker`, `divisors`,
    /// `binary` or `four-power`.
    pub op: Option<String>,
    pub n: Option<u64>,
    pub terms: Option<u64>,
    pub a: Option<i64>,
    pub m: Option<u64>,
    pub k: Option<u64>,
    pub d: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct StripSection {
    pub n: u64,
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct DiscrepancySection {
    pub alpha: String,
    pub beta: f64,
    pub n: Vec<usize>,
    /// Erdős–Turán cutoff; defaults to `N`.
    pub m: Option<u64>,
    pub c: f64,
    /// Extra random offsets for the offset-independence check.
    pub offsets: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputSection {
    /// `csv` or `jsonl`.
    pub format: String,
    /// `-` for standard output.
    pub path: String,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            command: None,
            seed: 0,
            torus: TorusSection::default(),
            spectral: SpectralSection::default(),
            scan: ScanSection::default(),
            params: ParamsSection::default(),
            arith: ArithSection::default(),
            strip: StripSection::default(),
            discrepancy: DiscrepancySection::default(),
            output: OutputSection::default(),
        }
    }
}

impl Default for TorusSection {
    fn default() -> Self {
        TorusSection { preset: "standard".into(), inverse_squares: None, finite_type_hint: None }
    }
}

impl Default for SpectralSection {
    fn default() -> Self {
        let o = SpectralOptions::default();
        SpectralSection { phi: 0.0, c_rem: DEFAULT_C_REM, pole_guard: o.pole_guard, residual_tol: o.residual_tol }
    }
}

impl Default for ScanSection {
    fn default() -> Self {
        ScanSection { x_lo: 100.0, x_hi: 1000.0 }
    }
}

impl Default for ParamsSection {
    fn default() -> Self {
        let o = SpectralOptions::default();
        ParamsSection {
            epsilon: 0.05,
            delta: None,
            zeta: None,
            mode: "full".into(),
            split_factor: o.split_factor,
            min_split: o.min_split,
        }
    }
}

impl Default for StripSection {
    fn default() -> Self {
        StripSection { n: 25, bound: 1.0 }
    }
}

impl Default for DiscrepancySection {
    fn default() -> Self {
        DiscrepancySection { alpha: "sqrt2".into(), beta: 0.0, n: vec![1000], m: None, c: 1.0, offsets: 0 }
    }
}

impl Default for OutputSection {
    fn default() -> Self {
        OutputSection { format: "csv".into(), path: "-".into() }
    }
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<RunConfig, String> {
        toml::from_str(text).map_err(|e| format!("invalid config: {e}"))
    }

    pub fn torus_spec(&self) -> Result<TorusSpec, String> {
        let mut spec = match &self.torus.inverse_squares {
            Some([a, b, c]) => TorusSpec::parse([a, b, c]),
            None => TorusSpec::preset(&self.torus.preset),
        }
        .map_err(|e| e.to_string())?;
        if self.torus.finite_type_hint.is_some() {
            spec.finite_type_hint = self.torus.finite_type_hint;
        }
        Ok(spec)
    }

    pub fn spectral_options(&self) -> SpectralOptions {
        SpectralOptions {
            pole_guard: self.spectral.pole_guard,
            c_rem: self.spectral.c_rem,
            split_factor: self.params.split_factor,
            min_split: self.params.min_split,
            residual_tol: self.spectral.residual_tol,
        }
    }

    /// Fill in kind-dependent defaults so the echo is complete.
    pub fn resolve(&mut self, spec: &TorusSpec) {
        if self.params.delta.is_none() {
            self.params.delta = Some(if spec.is_standard() { 0.2 } else { 0.1 });
        }
        if self.torus.finite_type_hint.is_none() {
            self.torus.finite_type_hint = spec.finite_type_hint;
        }
    }
}

/// Text appended to `--help`.
pub const CONFIG_HELP: &str = "\
CONFIG FILE (TOML; flags override file values):
  command = \"eigenvalues\"        subcommand to run when none is given
  seed = 0                        echoed; seeds the random discrepancy offsets
  [torus]    preset = \"standard\" | \"sqrt-2-3\" | \"sqrt-5-7\"
             inverse_squares = [\"1\", \"sqrt2\", \"sqrt3\"]   overrides preset
             finite_type_hint = 1.0
  [spectral] phi = 0.0   c_rem = 6.0   pole_guard = 1e-12   residual_tol = 1e-10
  [scan]     x_lo = 100.0   x_hi = 1000.0     (x_hi is X for eigenvalues, density, norms)
  [params]   epsilon = 0.05   delta = 0.2 (standard) / 0.1 (irrational)
             zeta = [1, 0, 0]   mode = \"full\" | \"truncated\" | \"paper_sum\"
             split_factor = 4.0   min_split = 1000.0
  [arith]    op = \"r3\"   n   terms   a   m   k   d
  [strip]    n = 25   bound = 1.0
  [discrepancy] alpha = \"sqrt2\"   beta = 0.0   n = [1000]   m   c = 1.0   offsets = 0
  [output]   format = \"csv\" | \"jsonl\"   path = \"-\"

ENVIRONMENT:
  TORUS_SCATTER_THREADS   worker thread count (default: all cores)

EXIT CODES:
  0 success, 2 configuration error, 3 numerical failure";
