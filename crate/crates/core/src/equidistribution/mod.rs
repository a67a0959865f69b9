//! Matrix-element decay scans along `Λ_φ`, density-one subsets and their
//! finite-scale membership reports.

mod density;
mod scan;
mod siegel;

pub use density::{
    admissible_delta_ceiling, density_report, density_reports, lambda1_membership,
    lambda2_membership, lambda_j_membership, lambda_zeta_membership, resonance_free,
    smallest_nonzero_vector, DensityParams, DensityReport, DensitySet, DyadicBlock, Spectrum,
    Warning, DENSITY_MARGIN,
};
pub use scan::{
    decay_scan, decay_scan_on, truncation_scan, window_for, DecayScan, ScanMode,
    TruncationRecord, ZERO_FLOOR,
};
pub use siegel::{siegel_check, SiegelCheck, SIEGEL_EXPONENT};

use crate::lattice::LatticeError;
use crate::spectral::SpectralError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EquidistributionError {
    #[error("spectrum is not known far enough above λ = {lambda} (known up to {known_up_to})")]
    SuccessorUnknown { lambda: f64, known_up_to: f64 },
    #[error("argument out of range: {0}")]
    OutOfRange(&'static str),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

pub type Result<T> = std::result::Result<T, EquidistributionError>;
