//! Secular equation, perturbed eigenvalues, Green's-function norms and
//! matrix elements.
//!
//! All Green's quantities are bare coefficient sums; prefactors common to
//! every coefficient cancel in the normalized statistics.

mod context;
mod export;
mod greens;
mod matrix;
mod polesum;
mod quadrature;
mod solver;
mod tail;

pub use context::{
    regularization_constant, RegularizationConstant, SecularValue, SpectralContext,
    SpectralOptions,
};
pub use export::{write_eigen_csv, write_eigen_jsonl, write_matrix_csv, write_matrix_jsonl};
pub use greens::{greens_norm_sq, truncation_gap, GreensEvaluation, TruncationGap};
pub use matrix::{
    default_shell_width, matrix_element, MatrixElementRecord, MatrixMode, SHELL_FACTOR,
};
pub use solver::{solve_eigenvalues, PerturbedEigenvalue};
pub use tail::{tail_integral, TailEstimate, TailKind, DEFAULT_C_REM, THETA};

use crate::lattice::LatticeError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("phase {0} is outside (−π + 1e-6, π − 1e-6)")]
    ExcludedPhase(f64),
    #[error("λ = {lambda} is within the pole guard of the norm {norm}")]
    PoleProximity { lambda: f64, norm: f64 },
    #[error("no sign change of F − target on ({lo}, {hi})")]
    BracketFailure { lo: f64, hi: f64 },
    #[error("tail split {from} must exceed λ + 1 = {}", lambda + 1.0)]
    TailDomain { from: f64, lambda: f64 },
    #[error("window {window} around λ = {lambda} contains no norm")]
    DegenerateWindow { lambda: f64, window: f64 },
    #[error("argument out of range: {0}")]
    OutOfRange(&'static str),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("output failed: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, SpectralError>;
