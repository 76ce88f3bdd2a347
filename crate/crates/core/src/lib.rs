//! Analysis toolkit for two-qubit quantum states: entanglement measures
//! (concurrence, tangle, entanglement of formation), mixture measures
//! (linear entropy, purity), and maximal violations of the CHSH Bell
//! inequality with optimised analyzer settings.
//!
//! The crate is organised around a validated [`DensityMatrix`] in the
//! computational basis {|00⟩, |01⟩, |10⟩, |11⟩}:
//!
//! - [`matrix`] and [`eigen`] supply the fixed-size complex linear algebra;
//! - [`states`] constructs the parametric families under study (Werner-like
//!   mixtures, maximally entangled mixed states and a |01⟩-pedestal
//!   variant);
//! - [`measures`] evaluates the entanglement and mixture measures;
//! - [`bell`] computes correlation functions and the maximal CHSH value,
//!   both in closed form and by a seeded multi-start search over the eight
//!   analyzer angles;
//! - [`sweep`] tabulates violation-versus-tangle curves and the boundary
//!   where the maximal violation equals the classical bound.
//!
//! All computations are pure functions of their inputs and safe to run
//! concurrently; results that involve random starts are deterministic for a
//! fixed seed.

pub mod bell;
pub mod eigen;
pub mod error;
pub mod matrix;
pub mod measures;
pub mod optim;
pub mod states;
pub mod sweep;

pub use error::Error;
pub use matrix::{ComplexMatrix4, DensityMatrix, RealSymMatrix3};
pub use num_complex::Complex64;
