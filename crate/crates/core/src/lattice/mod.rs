//! Dual-lattice geometry: norms, shells, Weyl counts, spherical strips and
//! resonance counts.

mod enumerate;
mod norms;
mod resonance;
mod strips;
mod torus;

pub use enumerate::{enumerate_shell, sphere_points, weyl_count, WeylCount};
pub(crate) use enumerate::for_each_in_shell;
pub use norms::{
    norm_classes_up_to, norm_classes_with_tolerance, write_norm_csv, NormClass, NormTable,
    DEFAULT_SEPARATION,
};
pub use resonance::{
    count_near_resonant_pairs, count_s_zeta, designated_axis, in_s_zeta, ResonantPairs, SZetaCount,
};
pub use strips::{strip_count, strip_count_bound, strip_reduction, StripReduction};
pub use torus::{LatticeVector, TorusKind, TorusSpec, PRESETS};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LatticeError {
    #[error("coefficients must be positive and finite, got {0:?}")]
    BadCoefficients([f64; 3]),
    #[error("unknown torus preset `{0}`")]
    UnknownPreset(String),
    #[error("distinct keys {a:?} and {b:?} have norms {va} and {vb} within the separation tolerance")]
    NormCollision { a: [u64; 3], b: [u64; 3], va: f64, vb: f64 },
    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,
    #[error("third coordinate of zeta must be nonzero")]
    ZetaAxis,
    #[error("operation needs an irrational torus")]
    NotIrrational,
    #[error("operation needs the standard torus")]
    NotStandard,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("argument out of range: {0}")]
    OutOfRange(&'static str),
    #[error("csv output failed: {0}")]
    Csv(String),
}

pub type Result<T> = std::result::Result<T, LatticeError>;
