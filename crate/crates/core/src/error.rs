//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Everything that can go wrong while validating states, solving eigenvalue
/// problems or running the Bell optimiser.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Matrix entries contain NaN or infinity.
    #[error("matrix has non-finite entries")]
    NonFinite,

    /// Density-matrix validation: the matrix differs from its conjugate
    /// transpose by more than the tolerance.
    #[error("matrix is not Hermitian: max |m - m†| = {deviation:.3e} exceeds {tolerance:.1e}")]
    NotHermitian { deviation: f64, tolerance: f64 },

    /// Density-matrix validation: the trace is not 1.
    #[error("trace is not one: |tr - 1| = {deviation:.3e} exceeds {tolerance:.1e}")]
    TraceNotOne { deviation: f64, tolerance: f64 },

    /// Density-matrix validation: an eigenvalue sits below the allowed
    /// negative noise floor.
    #[error("matrix is not positive semidefinite: min eigenvalue = {min_eigenvalue:.3e}")]
    NotPositive { min_eigenvalue: f64 },

    /// A 3x3 matrix handed to the symmetric eigensolver is not symmetric.
    #[error("matrix is not symmetric: max |m - mᵀ| = {deviation:.3e}")]
    NotSymmetric { deviation: f64 },

    /// The QR eigenvalue iteration hit its iteration cap; the input is
    /// numerically pathological.
    #[error("eigenvalue iteration did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    /// A spectrum that must be real (spin-flip products) came back with a
    /// large imaginary component; signals a bug, not bad user data.
    #[error("spectrum unexpectedly complex: max |Im λ| = {max_imag:.3e}")]
    ComplexSpectrum { max_imag: f64 },

    /// A parameter fell outside its documented range.
    #[error("parameter {name} = {value} outside [{min}, {max}]")]
    ParamOutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    /// The closed-form tangle hit a radicand below the noise floor; signals
    /// an implementation bug (analytically impossible for valid parameters).
    #[error("negative radicand {value:.3e} in closed-form tangle")]
    NegativeRadicand { value: f64 },

    /// No start of the multi-start optimiser converged.
    #[error("optimizer stalled: none of the {starts} starts converged")]
    OptimizerStall { starts: usize },

    /// Boundary tracing: b_max - 2 does not change sign on the gamma bracket.
    #[error("no root of b_max - 2 on gamma in [0, 1] at xi = {xi}")]
    NoRoot { xi: f64 },

    /// Analytic and numeric maximal Bell values disagreed during a sweep
    /// cross-check.
    #[error("oracle cross-check failed: analytic {analytic} vs numeric {numeric}")]
    CrossCheckFailed { analytic: f64, numeric: f64 },
}
