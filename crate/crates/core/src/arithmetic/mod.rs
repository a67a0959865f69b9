//! Sums of three squares, quadratic characters and binary quadratic forms.

mod character;
mod forms;
mod three_squares;

pub use character::{gauss_r3, kronecker, GaussEstimate};
pub use forms::{divisor_count, rep_count_binary, squarefree_decomposition};
pub use three_squares::{
    classify_three_squares, four_power_class, nearest_norm, primitive_r3, r3, r3_table,
    representable_norms_up_to, valuation4, FourPowerClass, ThreeSquares,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ArithmeticError {
    #[error("integer overflow evaluating {0}")]
    Overflow(&'static str),
    #[error("need at least {needed} character terms, got {terms}")]
    TooFewTerms { terms: u64, needed: u64 },
    #[error("{0} is not squarefree")]
    NotSquarefree(u64),
    #[error("{0} is not a sum of three squares")]
    NotRepresentable(u64),
    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,
    #[error("empty norm set")]
    EmptySet,
    #[error("argument out of range: {0}")]
    OutOfRange(&'static str),
}

pub type Result<T> = std::result::Result<T, ArithmeticError>;
