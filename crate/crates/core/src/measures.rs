//! Entanglement and mixture measures: the spin-flip transform, concurrence
//! and tangle from its spectrum, entanglement of formation, linear entropy,
//! and the closed-form tangle of the non-maximal Werner family.

use num_complex::Complex64;

use crate::eigen;
use crate::error::Error;
use crate::matrix::{kron2, ComplexMatrix4, DensityMatrix};
use crate::states::WernerLikeParams;

/// Imaginary parts of spin-flip-product eigenvalues beyond this signal a
/// broken input rather than roundoff.
const SPECTRUM_IMAG_TOL: f64 = 1e-8;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// σ_y ⊗ σ_y; the antidiagonal (-1, 1, 1, -1).
fn sigma_yy() -> ComplexMatrix4 {
    let sy = [[ZERO, Complex64::new(0.0, -1.0)], [Complex64::new(0.0, 1.0), ZERO]];
    kron2(&sy, &sy)
}

/// Spin flip ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y), with the conjugation taken in the
/// computational basis.
pub fn spin_flip(rho: &DensityMatrix) -> ComplexMatrix4 {
    let syy = sigma_yy();
    syy * rho.matrix().conjugate() * syy
}

/// Concurrence C and tangle τ = C².
///
/// The λ's are the square roots of the eigenvalues of ρρ̃ in decreasing
/// order; C = max{λ₁-λ₂-λ₃-λ₄, 0}. The product is similar to a positive
/// semidefinite matrix, so after checking that no eigenvalue has an
/// imaginary part above the noise bound, negative real parts are clamped to
/// zero before the square root.
pub fn concurrence_tangle(rho: &DensityMatrix) -> Result<(f64, f64), Error> {
    let product = *rho.matrix() * spin_flip(rho);
    let eigs = eigen::eigenvalues_4x4(&product)?;

    let max_imag = eigs.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if max_imag > SPECTRUM_IMAG_TOL {
        return Err(Error::ComplexSpectrum { max_imag });
    }

    // Eigenvalues carry O(ε·λmax) backward-error noise; anything at that
    // scale is an exact zero of the rank-deficient products the state
    // families produce, and its square root would otherwise leak ~1e-8
    // into the concurrence.
    let max_re = eigs.iter().map(|z| z.re).fold(0.0, f64::max);
    let floor = 64.0 * f64::EPSILON * max_re;
    let mut roots: Vec<f64> = eigs
        .iter()
        .map(|z| if z.re <= floor { 0.0 } else { z.re.sqrt() })
        .collect();
    roots.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let concurrence = (roots[0] - roots[1] - roots[2] - roots[3]).max(0.0);
    Ok((concurrence, concurrence * concurrence))
}

/// Shannon entropy in bits, with h(0) = h(1) = 0 by continuity.
fn shannon(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// Entanglement of formation as a function of the tangle:
/// h((1 + √(1-τ)) / 2). Strictly monotonic on [0, 1], 0 at τ = 0, 1 at
/// τ = 1. Inputs are allowed a 1e-9 overshoot to absorb roundoff from
/// upstream tangle computations.
pub fn eof_from_tangle(tau: f64) -> Result<f64, Error> {
    const SLACK: f64 = 1e-9;
    if !tau.is_finite() || !(-SLACK..=1.0 + SLACK).contains(&tau) {
        return Err(Error::ParamOutOfRange {
            name: "tau",
            value: tau,
            min: 0.0,
            max: 1.0,
        });
    }
    let tau = tau.clamp(0.0, 1.0);
    Ok(shannon((1.0 + (1.0 - tau).sqrt()) / 2.0))
}

/// Linear entropy S_L = (4/3)(1 - Tr[ρ²]): 0 for pure states, 1 for the
/// maximally mixed state.
pub fn linear_entropy(rho: &DensityMatrix) -> f64 {
    (4.0 / 3.0) * (1.0 - rho.purity())
}

/// Closed-form tangle of the non-maximal Werner family,
/// τ = [max{(√Λ₁ - √Λ₂)/4 - (1-γ)/2, 0}]² with
/// Λ₁,₂ = ±4γ sin(2ξ) √((1+γ)² - 4γ² cos²(2ξ)) + (1+γ)² - 4γ² cos(4ξ).
///
/// Cross-validated against the generic spin-flip route; independent of φ.
pub fn werner_like_tangle_closed(p: &WernerLikeParams) -> Result<f64, Error> {
    const RADICAND_FLOOR: f64 = -1e-12;
    let gamma = p.gamma();
    let s2 = (2.0 * p.xi()).sin();

    // With d = (1-γ)(1+3γ) = (1+γ)² - 4γ² and w = 4γ² sin²(2ξ), the
    // radicand is d + w and the Λ's factor as (√(d+w) ± √w)². Evaluating
    // through the factorisation keeps √Λ₂ exact where the direct
    // subtraction cancels (γ → 1 loses half the digits otherwise).
    let d = (1.0 - gamma) * (1.0 + 3.0 * gamma);
    let w = 4.0 * gamma * gamma * s2 * s2;
    let radicand = d + w;
    if radicand < RADICAND_FLOOR {
        return Err(Error::NegativeRadicand { value: radicand });
    }
    let t = radicand.max(0.0).sqrt();
    let s = w.sqrt();
    let sqrt_lambda1 = t + s;
    let sqrt_lambda2 = (t - s).abs();

    let c = ((sqrt_lambda1 - sqrt_lambda2) / 4.0 - (1.0 - gamma) / 2.0).max(0.0);
    Ok(c * c)
}

/// All scalar characterisations of one state in a single report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureReport {
    /// Concurrence C ∈ [0, 1].
    pub concurrence: f64,
    /// Tangle τ = C².
    pub tangle: f64,
    /// Entanglement of formation ∈ [0, 1].
    pub eof: f64,
    /// Linear entropy ∈ [0, 1].
    pub linear_entropy: f64,
    /// Tr[ρ²] ∈ [1/4, 1].
    pub purity: f64,
}

/// Evaluate every measure of [`MeasureReport`] for one state.
pub fn report(rho: &DensityMatrix) -> Result<MeasureReport, Error> {
    let (concurrence, tangle) = concurrence_tangle(rho)?;
    let purity = rho.purity();
    Ok(MeasureReport {
        concurrence,
        tangle,
        eof: eof_from_tangle(tangle)?,
        linear_entropy: linear_entropy(rho),
        purity,
    })
}
