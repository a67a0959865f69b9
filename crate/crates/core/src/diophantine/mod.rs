//! Distances to integers, discrepancy of Kronecker sequences, the
//! Erdős–Turán inequality, and finite-type estimates.

mod discrepancy;
mod real;
mod sequence;
mod sums;

pub use discrepancy::{
    erdos_turan_bound, erdos_turan_bound_kronecker, exact_discrepancy,
    exact_discrepancy_reference, star_discrepancy, DiscrepancyReport,
};
pub use real::{dist_to_nearest_int, Real};
pub use sequence::{
    discrepancy_decay_check, kronecker_sequence, DecayCheck, KroneckerSequence, OffsetFit,
};
pub use sums::{finite_type_estimate, sum_inv_dist, sum_inv_hdist, FiniteType};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DiophantineError {
    #[error("alpha is numerically rational: ‖{h}·alpha‖ < 1e-15")]
    RationalAlpha { h: u64 },
    #[error("empty point set")]
    Empty,
    #[error("argument out of range: {0}")]
    OutOfRange(&'static str),
}

pub type Result<T> = std::result::Result<T, DiophantineError>;

/// Below this `‖hα‖` is treated as zero.
pub const RATIONAL_GUARD: f64 = 1e-15;
