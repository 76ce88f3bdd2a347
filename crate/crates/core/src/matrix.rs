//! Fixed-size complex matrix arithmetic for two-qubit states.
//!
//! Everything in this crate lives in the computational basis
//! {|00⟩, |01⟩, |10⟩, |11⟩}, stored row-major.

// Index loops match the row/column algebra throughout.
#![allow(clippy::needless_range_loop)]

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::eigen;
use crate::error::Error;

/// Tolerance for the Hermiticity check of [`DensityMatrix::new`].
pub const HERMITICITY_TOL: f64 = 1e-10;
/// Tolerance for the unit-trace check of [`DensityMatrix::new`].
pub const TRACE_TOL: f64 = 1e-10;
/// Eigenvalues of a density matrix may dip this far below zero before the
/// matrix is rejected as not positive semidefinite.
pub const PSD_FLOOR: f64 = -1e-10;
/// Tolerance for the symmetry check of [`RealSymMatrix3::new`].
pub const SYMMETRY_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense 4x4 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix4 {
    entries: [Complex64; 16],
}

impl ComplexMatrix4 {
    pub fn zero() -> Self {
        Self {
            entries: [ZERO; 16],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_rows(rows: [[Complex64; 4]; 4]) -> Self {
        Self::from_fn(|i, j| rows[i][j])
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Real diagonal matrix.
    pub fn from_diagonal(d: [f64; 4]) -> Self {
        Self::from_fn(|i, j| {
            if i == j {
                Complex64::new(d[i], 0.0)
            } else {
                ZERO
            }
        })
    }

    /// Projector |ψ⟩⟨ψ| onto a (not necessarily normalised) ket.
    pub fn outer(ket: &[Complex64; 4]) -> Self {
        Self::from_fn(|i, j| ket[i] * ket[j].conj())
    }

    pub fn trace(&self) -> Complex64 {
        self[(0, 0)] + self[(1, 1)] + self[(2, 2)] + self[(3, 3)]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self[(j, i)].conj())
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conjugate(&self) -> Self {
        Self::from_fn(|i, j| self[(i, j)].conj())
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self::from_fn(|i, j| self[(i, j)] * factor)
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// max_ij |a_ij - conj(a_ji)|
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    /// max_ij |a_ij - b_ij|
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                dev = dev.max((self[(i, j)] - other[(i, j)]).norm());
            }
        }
        dev
    }

    /// Re Tr[self · other]; the pairing used for expectation values.
    pub fn trace_product_re(&self, other: &Self) -> f64 {
        let mut t = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                let p = self[(i, j)] * other[(j, i)];
                t += p.re;
            }
        }
        t
    }
}

impl Index<(usize, usize)> for ComplexMatrix4 {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i * 4 + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix4 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i * 4 + j]
    }
}

impl Add for ComplexMatrix4 {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self[(i, j)] + rhs[(i, j)])
    }
}

impl Sub for ComplexMatrix4 {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self[(i, j)] - rhs[(i, j)])
    }
}

impl Mul for ComplexMatrix4 {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut s = ZERO;
                for k in 0..4 {
                    s += self[(i, k)] * rhs[(k, j)];
                }
                m[(i, j)] = s;
            }
        }
        m
    }
}

/// Tensor product of two single-qubit operators, a ⊗ b.
pub fn kron2(a: &[[Complex64; 2]; 2], b: &[[Complex64; 2]; 2]) -> ComplexMatrix4 {
    ComplexMatrix4::from_fn(|i, j| a[i / 2][j / 2] * b[i % 2][j % 2])
}

/// A validated two-qubit state: Hermitian, unit trace, positive semidefinite
/// (all up to the documented tolerances).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix4,
}

impl DensityMatrix {
    /// Validate a raw matrix as a physical state.
    ///
    /// Checks, in order: finite entries, Hermiticity within
    /// [`HERMITICITY_TOL`], trace 1 within [`TRACE_TOL`], and eigenvalues
    /// above [`PSD_FLOOR`]. Each failure reports the measured deviation.
    pub fn new(matrix: ComplexMatrix4) -> Result<Self, Error> {
        if !matrix.is_finite() {
            return Err(Error::NonFinite);
        }
        let herm = matrix.hermiticity_deviation();
        if herm > HERMITICITY_TOL {
            return Err(Error::NotHermitian {
                deviation: herm,
                tolerance: HERMITICITY_TOL,
            });
        }
        let tr_dev = (matrix.trace() - ONE).norm();
        if tr_dev > TRACE_TOL {
            return Err(Error::TraceNotOne {
                deviation: tr_dev,
                tolerance: TRACE_TOL,
            });
        }
        let eigs = eigen::eigenvalues_4x4(&matrix)?;
        let min = eigs.iter().map(|z| z.re).fold(f64::INFINITY, f64::min);
        if min < PSD_FLOOR {
            return Err(Error::NotPositive {
                min_eigenvalue: min,
            });
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &ComplexMatrix4 {
        &self.matrix
    }

    /// Tr[ρ²]; 1 for pure states, 1/4 for the maximally mixed state.
    pub fn purity(&self) -> f64 {
        let mut p = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                p += self.matrix[(i, j)].norm_sqr();
            }
        }
        p
    }
}

/// Real symmetric 3x3 matrix; holds Gram matrices of correlation matrices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealSymMatrix3 {
    entries: [[f64; 3]; 3],
}

impl RealSymMatrix3 {
    /// Validate a raw 3x3 as symmetric within [`SYMMETRY_TOL`].
    pub fn new(entries: [[f64; 3]; 3]) -> Result<Self, Error> {
        let mut dev: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                dev = dev.max((entries[i][j] - entries[j][i]).abs());
            }
        }
        if dev > SYMMETRY_TOL {
            return Err(Error::NotSymmetric { deviation: dev });
        }
        Ok(Self { entries })
    }

    /// Gram matrix TᵀT of a real 3x3; exactly symmetric by construction.
    pub fn gram(t: &[[f64; 3]; 3]) -> Self {
        let mut g = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in i..3 {
                let mut s = 0.0;
                for k in 0..3 {
                    s += t[k][i] * t[k][j];
                }
                g[i][j] = s;
                g[j][i] = s;
            }
        }
        Self { entries: g }
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[[f64; 3]; 3] {
        &self.entries
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn maximally_mixed_is_valid() {
        let rho = DensityMatrix::new(ComplexMatrix4::identity().scaled(0.25)).unwrap();
        let eigs = eigen::eigenvalues_4x4(rho.matrix()).unwrap();
        for e in eigs {
            assert!((e.re - 0.25).abs() < 1e-14);
            assert!(e.im.abs() < 1e-14);
        }
    }

    #[test]
    fn basis_projector_is_valid() {
        let rho = DensityMatrix::new(ComplexMatrix4::from_diagonal([1.0, 0.0, 0.0, 0.0])).unwrap();
        let mut eigs: Vec<f64> = eigen::eigenvalues_4x4(rho.matrix())
            .unwrap()
            .iter()
            .map(|z| z.re)
            .collect();
        eigs.sort_by(|a, b| b.partial_cmp(a).unwrap());
        assert!((eigs[0] - 1.0).abs() < 1e-14);
        for e in &eigs[1..] {
            assert!(e.abs() < 1e-14);
        }
    }

    #[test]
    fn wrong_trace_is_rejected() {
        let m = ComplexMatrix4::identity().scaled(0.225); // trace 0.9
        match DensityMatrix::new(m) {
            Err(Error::TraceNotOne { deviation, .. }) => {
                assert!((deviation - 0.1).abs() < 1e-12)
            }
            other => panic!("expected TraceNotOne, got {other:?}"),
        }
    }

    #[test]
    fn non_hermitian_is_rejected() {
        let mut m = ComplexMatrix4::identity().scaled(0.25);
        m[(0, 1)] = c(0.1, 0.0);
        assert!(matches!(
            DensityMatrix::new(m),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn negative_eigenvalue_is_rejected() {
        let m = ComplexMatrix4::from_diagonal([1.5, -0.5, 0.0, 0.0]);
        match DensityMatrix::new(m) {
            Err(Error::NotPositive { min_eigenvalue }) => {
                assert!((min_eigenvalue + 0.5).abs() < 1e-12)
            }
            other => panic!("expected NotPositive, got {other:?}"),
        }
    }

    #[test]
    fn non_finite_is_rejected() {
        let mut m = ComplexMatrix4::identity().scaled(0.25);
        m[(2, 2)] = c(f64::NAN, 0.0);
        assert!(matches!(DensityMatrix::new(m), Err(Error::NonFinite)));
    }

    #[test]
    fn kron_of_paulis() {
        let sz = [[c(1.0, 0.0), ZERO], [ZERO, c(-1.0, 0.0)]];
        let m = kron2(&sz, &sz);
        assert_eq!(m, ComplexMatrix4::from_diagonal([1.0, -1.0, -1.0, 1.0]));
    }

    #[test]
    fn outer_product_of_bell_ket() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let bell = ComplexMatrix4::outer(&[c(s, 0.0), ZERO, ZERO, c(s, 0.0)]);
        assert!((bell[(0, 0)].re - 0.5).abs() < 1e-15);
        assert!((bell[(0, 3)].re - 0.5).abs() < 1e-15);
        assert!((bell.trace().re - 1.0).abs() < 1e-15);
        assert_eq!(bell, bell.adjoint());
    }

    #[test]
    fn purity_of_mixed_and_pure() {
        let mixed = DensityMatrix::new(ComplexMatrix4::identity().scaled(0.25)).unwrap();
        assert!((mixed.purity() - 0.25).abs() < 1e-15);
        let pure = DensityMatrix::new(ComplexMatrix4::from_diagonal([0.0, 1.0, 0.0, 0.0])).unwrap();
        assert!((pure.purity() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn gram_is_symmetric_and_asymmetry_is_rejected() {
        let t = [[0.3, -0.2, 0.0], [0.1, 0.9, 0.4], [0.0, 0.0, -1.0]];
        let g = RealSymMatrix3::gram(&t);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(g.get(i, j), g.get(j, i));
            }
        }
        let bad = [[0.0, 1.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]];
        assert!(matches!(
            RealSymMatrix3::new(bad),
            Err(Error::NotSymmetric { .. })
        ));
    }
}
