//! Point scatterers on three-dimensional flat tori.
//!
//! The crate computes the perturbed spectrum of `-Δ + δ` on a rectangular
//! torus, Green's-function norms and matrix elements of the perturbed
//! eigenfunctions, and the arithmetic and Diophantine quantities that control
//! them. Every quantity that has a finite brute-force counterpart is
//! cross-checked against one in the test suite.
//!
//! Modules, bottom to top:
//! - [`arithmetic`]: sums of three squares, characters, binary forms.
//! - [`diophantine`]: distances to integers, discrepancy, finite type.
//! - [`lattice`]: dual-lattice enumeration, norm classes, strips.
//! - [`spectral`]: secular equation, eigenvalues, Green's norms, matrix elements.
//! - [`equidistribution`]: decay scans and density reports.
//! - [`cli`]: the batch front-end behind the `torus-scatter` binary.

pub mod arithmetic;
pub mod cli;
pub mod diophantine;
pub mod equidistribution;
pub mod lattice;
pub mod spectral;

pub(crate) mod fit;
