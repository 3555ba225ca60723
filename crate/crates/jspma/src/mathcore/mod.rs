//! Numeric substrate shared by every other module.
//!
//! Everything here is a pure function of its inputs (random streams are
//! immutable descriptors; each consumer instantiates its own sampler), so the
//! whole module is safe to call from parallel trial workers.

mod integrate;
mod linalg;
mod rng;
mod special;

pub use integrate::{gamma_tail_cutoff, integrate, integrate_with_budget};
pub use linalg::{hermitian_eigenvalues, least_squares, ComplexMatrix, IncrementalQr};
pub use rng::{RandomStream, Sampler};
pub use special::{
    chi2_cdf, chi2_inverse_cdf, chi2_pdf, ln_binomial, ln_gamma, q_function,
};

use thiserror::Error;

/// Errors surfaced by the numeric layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MathError {
    #[error("quadrature did not converge: {0}")]
    NonConvergence(String),
    #[error("matrix is rank deficient (|R[{index},{index}]| = {magnitude:.3e} below threshold)")]
    RankDeficient { index: usize, magnitude: f64 },
    #[error("matrix is not Hermitian (max asymmetry {0:.3e})")]
    NotHermitian(f64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("domain error: {0}")]
    Domain(String),
}
