//! Constructors for the parametric two-qubit state families under study:
//! the non-maximal Werner family (a partially entangled pure state mixed
//! with white noise), the maximally entangled mixed states, and the related
//! family that mixes the partially entangled pure state with |01⟩⟨01|.

use num_complex::Complex64;
use rand::Rng;

use crate::error::Error;
use crate::matrix::{ComplexMatrix4, DensityMatrix};

fn check_range(name: &'static str, value: f64, min: f64, max: f64) -> Result<(), Error> {
    if !value.is_finite() || value < min || value > max {
        return Err(Error::ParamOutOfRange {
            name,
            value,
            min,
            max,
        });
    }
    Ok(())
}

fn check_phi(value: f64) -> Result<(), Error> {
    let max = std::f64::consts::TAU;
    if !value.is_finite() || value < 0.0 || value >= max {
        return Err(Error::ParamOutOfRange {
            name: "phi",
            value,
            min: 0.0,
            max,
        });
    }
    Ok(())
}

/// cos ξ |00⟩ + e^{iφ} sin ξ |11⟩
fn partially_entangled_ket(xi: f64, phi: f64) -> [Complex64; 4] {
    let zero = Complex64::new(0.0, 0.0);
    [
        Complex64::new(xi.cos(), 0.0),
        zero,
        zero,
        Complex64::from_polar(xi.sin(), phi),
    ]
}

/// Parameters of the non-maximal Werner family: mixing weight γ ∈ [0, 1],
/// entanglement angle ξ ∈ [0, π/2], relative phase φ ∈ [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WernerLikeParams {
    gamma: f64,
    xi: f64,
    phi: f64,
}

impl WernerLikeParams {
    pub fn new(gamma: f64, xi: f64, phi: f64) -> Result<Self, Error> {
        check_range("gamma", gamma, 0.0, 1.0)?;
        check_range("xi", xi, 0.0, std::f64::consts::FRAC_PI_2)?;
        check_phi(phi)?;
        Ok(Self { gamma, xi, phi })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// Parameters of the maximally entangled mixed states: coherence γ ∈ [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MemsParams {
    gamma: f64,
}

impl MemsParams {
    pub fn new(gamma: f64) -> Result<Self, Error> {
        check_range("gamma", gamma, 0.0, 1.0)?;
        Ok(Self { gamma })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// Parameters of the modified MEMS family; same ranges as
/// [`WernerLikeParams`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MemsLikeParams {
    gamma: f64,
    xi: f64,
    phi: f64,
}

impl MemsLikeParams {
    pub fn new(gamma: f64, xi: f64, phi: f64) -> Result<Self, Error> {
        check_range("gamma", gamma, 0.0, 1.0)?;
        check_range("xi", xi, 0.0, std::f64::consts::FRAC_PI_2)?;
        check_phi(phi)?;
        Ok(Self { gamma, xi, phi })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

fn validated(m: ComplexMatrix4) -> DensityMatrix {
    DensityMatrix::new(m).expect("family construction yields a valid density matrix")
}

/// (1-γ)/4 · I⊗I + γ |Ψ⟩⟨Ψ| with |Ψ⟩ = cos ξ |00⟩ + e^{iφ} sin ξ |11⟩.
pub fn werner_like(p: &WernerLikeParams) -> DensityMatrix {
    let noise = ComplexMatrix4::identity().scaled((1.0 - p.gamma) / 4.0);
    let pure = ComplexMatrix4::outer(&partially_entangled_ket(p.xi, p.phi));
    validated(noise + pure.scaled(p.gamma))
}

/// The usual Werner state: [`werner_like`] at ξ = π/4, φ = 0.
pub fn werner(gamma: f64) -> Result<DensityMatrix, Error> {
    let p = WernerLikeParams::new(gamma, std::f64::consts::FRAC_PI_4, 0.0)?;
    Ok(werner_like(&p))
}

/// g(γ) of the MEMS family: γ/2 above the branch point 2/3, else 1/3. Both
/// branches agree at γ = 2/3.
fn mems_g(gamma: f64) -> f64 {
    if gamma >= 2.0 / 3.0 {
        gamma / 2.0
    } else {
        1.0 / 3.0
    }
}

/// Maximally entangled mixed state: maximal tangle for its linear entropy.
pub fn mems(p: &MemsParams) -> DensityMatrix {
    let g = mems_g(p.gamma);
    let mut m = ComplexMatrix4::from_diagonal([g, 1.0 - 2.0 * g, 0.0, g]);
    let corner = Complex64::new(p.gamma / 2.0, 0.0);
    m[(0, 3)] = corner;
    m[(3, 0)] = corner;
    validated(m)
}

/// (1-γ)|01⟩⟨01| + γ |Ψ⟩⟨Ψ|: interpolates between the partially entangled
/// pure state and the MEMS-style diagonal pedestal.
pub fn mems_like(p: &MemsLikeParams) -> DensityMatrix {
    let mut m = ComplexMatrix4::outer(&partially_entangled_ket(p.xi, p.phi)).scaled(p.gamma);
    m[(1, 1)] += Complex64::new(1.0 - p.gamma, 0.0);
    validated(m)
}

/// The γ above which the non-maximal Werner family is entangled:
/// 1 / (1 + 2|sin 2ξ|).
pub fn werner_like_separability_gamma(xi: f64) -> Result<f64, Error> {
    check_range("xi", xi, 0.0, std::f64::consts::FRAC_PI_2)?;
    Ok(1.0 / (1.0 + 2.0 * (2.0 * xi).sin().abs()))
}

/// Random density matrix from the Hilbert-Schmidt ensemble: A·A† normalised
/// to unit trace, with A a complex Ginibre matrix.
pub fn random_density<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    // Box-Muller pairs; the Rng trait only hands us uniforms.
    let mut normal = || {
        let u1: f64 = rng.random_range(f64::MIN_POSITIVE..1.0);
        let u2: f64 = rng.random_range(0.0..std::f64::consts::TAU);
        (-2.0 * u1.ln()).sqrt() * u2.cos()
    };
    let mut entries = [Complex64::new(0.0, 0.0); 16];
    for e in entries.iter_mut() {
        let re = normal();
        let im = normal();
        *e = Complex64::new(re, im);
    }
    let a = ComplexMatrix4::from_fn(|i, j| entries[i * 4 + j]);
    let mut rho = a * a.adjoint();
    let trace = rho.trace().re;
    rho = rho.scaled(1.0 / trace);
    // Force the diagonal real; a*conj(a) sums leave ~1e-16 imaginary dust.
    for i in 0..4 {
        rho[(i, i)] = Complex64::new(rho[(i, i)].re, 0.0);
    }
    validated(rho)
}
