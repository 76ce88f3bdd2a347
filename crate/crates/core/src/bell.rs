//! CHSH machinery: analyzer settings, correlation functions, the Bell
//! quantity for explicit settings, and its maximum over all settings by two
//! independent routes — the closed form from the correlation matrix and a
//! seeded multi-start Nelder-Mead search over the eight analyzer angles.

// Index loops match the vector/matrix contractions throughout.
#![allow(clippy::needless_range_loop)]

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::matrix::{kron2, DensityMatrix, RealSymMatrix3};
use crate::optim::nelder_mead;
use crate::eigen;

/// The quantum ceiling 2√2 on the CHSH quantity.
pub const TSIRELSON_BOUND: f64 = 2.0 * std::f64::consts::SQRT_2;
/// The local-hidden-variable ceiling; a state violates the inequality when
/// its Bell quantity exceeds this.
pub const CLASSICAL_BOUND: f64 = 2.0;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// One projective spin measurement direction, parametrised by a polar angle
/// `phi` and an azimuthal phase `phibar` (radians).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyzerSetting {
    pub phi: f64,
    pub phibar: f64,
}

impl AnalyzerSetting {
    pub fn new(phi: f64, phibar: f64) -> Self {
        assert!(phi.is_finite() && phibar.is_finite(), "angles must be finite");
        Self { phi, phibar }
    }

    /// The measured spin direction on the Bloch sphere:
    /// n = (sin φ cos φ̄, -sin φ sin φ̄, cos φ). The analyzer operator is
    /// n · σ.
    pub fn bloch_vector(&self) -> [f64; 3] {
        [
            self.phi.sin() * self.phibar.cos(),
            -self.phi.sin() * self.phibar.sin(),
            self.phi.cos(),
        ]
    }

    /// Equivalent setting with φ ∈ [0, π] and φ̄ ∈ [0, 2π).
    pub fn normalized(&self) -> Self {
        from_bloch(self.bloch_vector())
    }

    /// The 2x2 analyzer operator
    /// cos φ (|0⟩⟨0| - |1⟩⟨1|) + sin φ (e^{iφ̄}|0⟩⟨1| + e^{-iφ̄}|1⟩⟨0|).
    pub(crate) fn operator(&self) -> [[Complex64; 2]; 2] {
        let c = self.phi.cos();
        let s = self.phi.sin();
        [
            [
                Complex64::new(c, 0.0),
                Complex64::from_polar(s, self.phibar),
            ],
            [
                Complex64::from_polar(s, -self.phibar),
                Complex64::new(-c, 0.0),
            ],
        ]
    }
}

/// Angles of a (near-)unit Bloch vector, canonical ranges.
fn from_bloch(n: [f64; 3]) -> AnalyzerSetting {
    let phi = n[2].clamp(-1.0, 1.0).acos();
    let mut phibar = (-n[1]).atan2(n[0]);
    if phibar < 0.0 {
        phibar += std::f64::consts::TAU;
    }
    if phibar >= std::f64::consts::TAU || phibar == 0.0 {
        phibar = 0.0; // also canonicalises atan2's signed zero
    }
    AnalyzerSetting::new(phi, phibar)
}

/// The four analyzer settings of one CHSH evaluation: a, a' on side 1 and
/// b, b' on side 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChshSettings {
    pub a: AnalyzerSetting,
    pub a_prime: AnalyzerSetting,
    pub b: AnalyzerSetting,
    pub b_prime: AnalyzerSetting,
}

impl ChshSettings {
    pub fn normalized(&self) -> Self {
        Self {
            a: self.a.normalized(),
            a_prime: self.a_prime.normalized(),
            b: self.b.normalized(),
            b_prime: self.b_prime.normalized(),
        }
    }
}

/// The 3x3 correlation matrix T with T_ij = Tr[ρ σ_i ⊗ σ_j].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationMatrix {
    t: [[f64; 3]; 3],
}

fn pauli(i: usize) -> [[Complex64; 2]; 2] {
    let one = Complex64::new(1.0, 0.0);
    match i {
        0 => [[ZERO, one], [one, ZERO]],
        1 => [
            [ZERO, Complex64::new(0.0, -1.0)],
            [Complex64::new(0.0, 1.0), ZERO],
        ],
        2 => [[one, ZERO], [ZERO, -one]],
        _ => unreachable!("pauli index"),
    }
}

impl CorrelationMatrix {
    pub fn from_density(rho: &DensityMatrix) -> Self {
        let mut t = [[0.0; 3]; 3];
        for (i, row) in t.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                let op = kron2(&pauli(i), &pauli(j));
                *entry = rho.matrix().trace_product_re(&op);
            }
        }
        let m = Self { t };
        debug_assert!(m.entries_in_range(1e-10));
        m
    }

    fn entries_in_range(&self, slack: f64) -> bool {
        self.t
            .iter()
            .flatten()
            .all(|x| x.abs() <= 1.0 + slack)
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.t[i][j]
    }

    pub fn entries(&self) -> &[[f64; 3]; 3] {
        &self.t
    }

    /// TᵀT, the Gram matrix whose two top eigenvalues decide the maximal
    /// violation.
    pub fn gram(&self) -> RealSymMatrix3 {
        RealSymMatrix3::gram(&self.t)
    }

    /// n₁ᵀ T n₂ for two analyzer directions.
    pub fn correlation(&self, s1: &AnalyzerSetting, s2: &AnalyzerSetting) -> f64 {
        let n1 = s1.bloch_vector();
        let n2 = s2.bloch_vector();
        let mut e = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                e += n1[i] * self.t[i][j] * n2[j];
            }
        }
        e
    }

    fn apply(&self, v: [f64; 3]) -> [f64; 3] {
        let mut out = [0.0; 3];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.t[i][0] * v[0] + self.t[i][1] * v[1] + self.t[i][2] * v[2];
        }
        out
    }
}

/// Correlation function E(s1, s2) = Tr[Ŝ₁Ŝ₂ ρ], evaluated through the
/// correlation matrix.
pub fn correlation(rho: &DensityMatrix, s1: &AnalyzerSetting, s2: &AnalyzerSetting) -> f64 {
    CorrelationMatrix::from_density(rho).correlation(s1, s2)
}

/// The same correlation function evaluated as a literal operator trace
/// Tr[(Ŝ₁ ⊗ Ŝ₂) ρ]. Slower; exists as the independent cross-check of the
/// correlation-matrix route.
pub fn correlation_via_operators(
    rho: &DensityMatrix,
    s1: &AnalyzerSetting,
    s2: &AnalyzerSetting,
) -> f64 {
    let op = kron2(&s1.operator(), &s2.operator());
    op.trace_product_re(rho.matrix())
}

/// CHSH quantity |E(a,b) + E(a,b') + E(a',b) - E(a',b')|; the inequality is
/// violated when this exceeds 2.
pub fn chsh_value(rho: &DensityMatrix, s: &ChshSettings) -> f64 {
    let t = CorrelationMatrix::from_density(rho);
    chsh_from_correlations(&t, s)
}

fn chsh_from_correlations(t: &CorrelationMatrix, s: &ChshSettings) -> f64 {
    (t.correlation(&s.a, &s.b) + t.correlation(&s.a, &s.b_prime)
        + t.correlation(&s.a_prime, &s.b)
        - t.correlation(&s.a_prime, &s.b_prime))
    .abs()
}

/// How a [`BellResult`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Analytic,
    Numeric,
}

/// Maximal CHSH value of a state together with settings attaining it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellResult {
    pub b_max: f64,
    pub settings: ChshSettings,
    pub method: Method,
}

impl BellResult {
    /// b_max > 2: the state violates the inequality.
    pub fn violates(&self) -> bool {
        self.b_max > CLASSICAL_BOUND
    }
}

fn norm3(v: [f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

fn scale3(v: [f64; 3], f: f64) -> [f64; 3] {
    [v[0] * f, v[1] * f, v[2] * f]
}

fn add3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// Some unit vector orthogonal to v (assumed unit).
fn any_orthogonal(v: [f64; 3]) -> [f64; 3] {
    let candidate = if v[0].abs() < 0.9 {
        [1.0, 0.0, 0.0]
    } else {
        [0.0, 1.0, 0.0]
    };
    let dot = candidate[0] * v[0] + candidate[1] * v[1] + candidate[2] * v[2];
    let w = add3(candidate, scale3(v, -dot));
    scale3(w, 1.0 / norm3(w))
}

/// Closed-form maximal violation: b_max = 2√(m₁ + m₂) with m₁ ≥ m₂ the two
/// largest eigenvalues of TᵀT.
///
/// The attaining settings follow from the eigenvectors: side-2 measures
/// along cos θ c₁ ± sin θ c₂ with tan θ = √(m₂/m₁), side 1 along the
/// normalised images T c₁ and T c₂.
pub fn chsh_max_analytic(rho: &DensityMatrix) -> Result<BellResult, Error> {
    let t = CorrelationMatrix::from_density(rho);
    let (m, vecs) = eigen::eigen_sym3(&t.gram());
    let m1 = m[0].max(0.0);
    let m2 = m[1].max(0.0);
    let b_max = 2.0 * (m1 + m2).sqrt();

    let c1 = [vecs[0][0], vecs[1][0], vecs[2][0]];
    let c2 = [vecs[0][1], vecs[1][1], vecs[2][1]];
    let tc1 = t.apply(c1);
    let tc2 = t.apply(c2);
    let n1 = norm3(tc1);
    let n2 = norm3(tc2);

    const DEGENERATE: f64 = 1e-12;
    let z = [0.0, 0.0, 1.0];
    let (a, a_prime, b, b_prime) = if n1 <= DEGENERATE {
        // T vanishes: every assignment gives 0.
        (z, any_orthogonal(z), z, z)
    } else {
        let a = scale3(tc1, 1.0 / n1);
        let theta = n2.atan2(n1);
        let b = add3(scale3(c1, theta.cos()), scale3(c2, theta.sin()));
        let b_prime = add3(scale3(c1, theta.cos()), scale3(c2, -theta.sin()));
        let a_prime = if n2 <= DEGENERATE {
            any_orthogonal(a)
        } else {
            scale3(tc2, 1.0 / n2)
        };
        (a, a_prime, b, b_prime)
    };

    Ok(BellResult {
        b_max,
        settings: ChshSettings {
            a: from_bloch(a),
            a_prime: from_bloch(a_prime),
            b: from_bloch(b),
            b_prime: from_bloch(b_prime),
        },
        method: Method::Analytic,
    })
}

/// Controls for [`chsh_max_numeric`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizerConfig {
    /// Independent Nelder-Mead starts.
    pub starts: usize,
    /// Seed of the start generator; fixed seed means bit-reproducible output.
    pub seed: u64,
    /// Function-value spread at which a start counts as converged.
    pub tolerance: f64,
    /// Iteration cap per start.
    pub max_iterations: usize,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            starts: 32,
            seed: 42,
            tolerance: 1e-9,
            max_iterations: 2000,
        }
    }
}

fn settings_from_angles(x: &[f64]) -> ChshSettings {
    ChshSettings {
        a: AnalyzerSetting::new(x[0], x[1]),
        a_prime: AnalyzerSetting::new(x[2], x[3]),
        b: AnalyzerSetting::new(x[4], x[5]),
        b_prime: AnalyzerSetting::new(x[6], x[7]),
    }
}

/// Maximal violation by multi-start Nelder-Mead over the eight analyzer
/// angles. Deterministic for a fixed seed; the best start wins, ties broken
/// by the lowest start index. Fails with `OptimizerStall` only when no start
/// converges within its iteration budget.
pub fn chsh_max_numeric(rho: &DensityMatrix, cfg: &OptimizerConfig) -> Result<BellResult, Error> {
    let t = CorrelationMatrix::from_density(rho);
    let objective = |x: &[f64]| -chsh_from_correlations(&t, &settings_from_angles(x));

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut best: Option<(f64, Vec<f64>)> = None;
    let mut converged_starts = 0usize;

    for _ in 0..cfg.starts {
        let x0: Vec<f64> = (0..8)
            .map(|_| rng.random_range(0.0..std::f64::consts::TAU))
            .collect();
        let m = nelder_mead(objective, &x0, 0.8, cfg.tolerance, cfg.max_iterations);
        if m.converged {
            converged_starts += 1;
        }
        let value = -m.value;
        let better = match &best {
            None => true,
            Some((v, _)) => value > *v,
        };
        if better {
            best = Some((value, m.point));
        }
    }

    if converged_starts == 0 {
        return Err(Error::OptimizerStall { starts: cfg.starts });
    }
    let (b_max, point) = best.expect("at least one start ran");
    Ok(BellResult {
        b_max,
        settings: settings_from_angles(&point).normalized(),
        method: Method::Numeric,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, TAU};

    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use crate::matrix::ComplexMatrix4;
    use crate::states;

    fn maximally_mixed() -> DensityMatrix {
        DensityMatrix::new(ComplexMatrix4::identity().scaled(0.25)).unwrap()
    }

    fn bell_phi_plus() -> DensityMatrix {
        states::werner(1.0).unwrap()
    }

    fn standard_settings() -> ChshSettings {
        ChshSettings {
            a: AnalyzerSetting::new(0.0, 0.0),
            a_prime: AnalyzerSetting::new(FRAC_PI_2, 0.0),
            b: AnalyzerSetting::new(FRAC_PI_4, 0.0),
            b_prime: AnalyzerSetting::new(-FRAC_PI_4, 0.0),
        }
    }

    #[test]
    fn bloch_vector_axes() {
        let z = AnalyzerSetting::new(0.0, 1.234).bloch_vector();
        assert!((z[0]).abs() < 1e-15 && (z[1]).abs() < 1e-15 && (z[2] - 1.0).abs() < 1e-15);
        let x = AnalyzerSetting::new(FRAC_PI_2, 0.0).bloch_vector();
        assert!((x[0] - 1.0).abs() < 1e-15 && x[1].abs() < 1e-15 && x[2].abs() < 1e-15);
        let minus_y = AnalyzerSetting::new(FRAC_PI_2, FRAC_PI_2).bloch_vector();
        assert!(minus_y[0].abs() < 1e-15 && (minus_y[1] + 1.0).abs() < 1e-15);
    }

    #[test]
    fn analyzer_operator_equals_bloch_dot_sigma() {
        for k in 0..24 {
            let phi = k as f64 * 0.41;
            let phibar = k as f64 * 0.77;
            let s = AnalyzerSetting::new(phi, phibar);
            let n = s.bloch_vector();
            let op = s.operator();
            let mut dot = [[ZERO; 2]; 2];
            for (axis, weight) in n.iter().enumerate() {
                let p = pauli(axis);
                for i in 0..2 {
                    for j in 0..2 {
                        dot[i][j] += p[i][j] * *weight;
                    }
                }
            }
            for i in 0..2 {
                for j in 0..2 {
                    assert!((op[i][j] - dot[i][j]).norm() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn normalization_canonicalises_ranges() {
        let s = AnalyzerSetting::new(-1.3, 9.0).normalized();
        assert!((0.0..=std::f64::consts::PI).contains(&s.phi));
        assert!((0.0..TAU).contains(&s.phibar));
        // Same direction before and after.
        let n0 = AnalyzerSetting::new(-1.3, 9.0).bloch_vector();
        let n1 = s.bloch_vector();
        for i in 0..3 {
            assert!((n0[i] - n1[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn correlation_matrix_of_reference_states() {
        let zero = CorrelationMatrix::from_density(&maximally_mixed());
        for i in 0..3 {
            for j in 0..3 {
                assert!(zero.get(i, j).abs() < 1e-14);
            }
        }

        let bell = CorrelationMatrix::from_density(&bell_phi_plus());
        for i in 0..3 {
            for j in 0..3 {
                let want = match (i, j) {
                    (0, 0) => 1.0,
                    (1, 1) => -1.0,
                    (2, 2) => 1.0,
                    _ => 0.0,
                };
                assert!((bell.get(i, j) - want).abs() < 1e-14);
            }
        }

        for k in 1..5 {
            let gamma = k as f64 / 5.0;
            let t = CorrelationMatrix::from_density(&states::werner(gamma).unwrap());
            assert!((t.get(0, 0) - gamma).abs() < 1e-13);
            assert!((t.get(1, 1) + gamma).abs() < 1e-13);
            assert!((t.get(2, 2) - gamma).abs() < 1e-13);
        }
    }

    #[test]
    fn correlation_reference_values() {
        let rho = bell_phi_plus();
        let sz = AnalyzerSetting::new(0.0, 0.0);
        assert!((correlation(&rho, &sz, &sz) - 1.0).abs() < 1e-14);
        let tilted = AnalyzerSetting::new(FRAC_PI_4, 0.0);
        assert!((correlation(&rho, &sz, &tilted) - FRAC_PI_4.cos()).abs() < 1e-14);
        assert!(correlation(&maximally_mixed(), &sz, &tilted).abs() < 1e-14);
    }

    #[test]
    fn correlation_matches_operator_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let rho = states::random_density(&mut rng);
            let s1 = AnalyzerSetting::new(rng.random_range(0.0..TAU), rng.random_range(0.0..TAU));
            let s2 = AnalyzerSetting::new(rng.random_range(0.0..TAU), rng.random_range(0.0..TAU));
            let via_t = correlation(&rho, &s1, &s2);
            let via_op = correlation_via_operators(&rho, &s1, &s2);
            assert!((via_t - via_op).abs() < 1e-12);
            assert!(via_t.abs() <= 1.0 + 1e-10);
        }
    }

    #[test]
    fn correlation_matrix_is_contractive() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..100 {
            let t = CorrelationMatrix::from_density(&states::random_density(&mut rng));
            for i in 0..3 {
                for j in 0..3 {
                    assert!(t.get(i, j).abs() <= 1.0 + 1e-10);
                }
            }
            let m = crate::eigen::eigenvalues_sym3(&t.gram());
            assert!(m[0].max(0.0).sqrt() <= 1.0 + 1e-8, "singular value {}", m[0]);
        }
    }

    #[test]
    fn chsh_value_reference_points() {
        assert!(chsh_value(&maximally_mixed(), &standard_settings()).abs() < 1e-14);
        let bell = chsh_value(&bell_phi_plus(), &standard_settings());
        assert!((bell - TSIRELSON_BOUND).abs() < 1e-13);
        let product =
            DensityMatrix::new(ComplexMatrix4::from_diagonal([1.0, 0.0, 0.0, 0.0])).unwrap();
        let v = chsh_value(&product, &standard_settings());
        assert!((v - std::f64::consts::SQRT_2).abs() < 1e-13);
    }

    #[test]
    fn analytic_max_reference_states() {
        assert!(chsh_max_analytic(&maximally_mixed()).unwrap().b_max < 1e-12);
        let bell = chsh_max_analytic(&bell_phi_plus()).unwrap();
        assert!((bell.b_max - TSIRELSON_BOUND).abs() < 1e-12);
        assert!(bell.violates());
        for k in 0..=10 {
            let gamma = k as f64 / 10.0;
            let r = chsh_max_analytic(&states::werner(gamma).unwrap()).unwrap();
            assert!((r.b_max - TSIRELSON_BOUND * gamma).abs() < 1e-12);
        }
    }

    #[test]
    fn analytic_argmax_settings_attain_the_maximum() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..40 {
            let rho = states::random_density(&mut rng);
            let r = chsh_max_analytic(&rho).unwrap();
            let value = chsh_value(&rho, &r.settings);
            assert!(
                (value - r.b_max).abs() < 1e-10,
                "settings reach {value}, b_max {}",
                r.b_max
            );
        }
    }

    #[test]
    fn chsh_value_never_beats_the_analytic_maximum() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..30 {
            let rho = states::random_density(&mut rng);
            let cap = chsh_max_analytic(&rho).unwrap().b_max;
            for _ in 0..20 {
                let s = ChshSettings {
                    a: AnalyzerSetting::new(rng.random_range(0.0..TAU), rng.random_range(0.0..TAU)),
                    a_prime: AnalyzerSetting::new(
                        rng.random_range(0.0..TAU),
                        rng.random_range(0.0..TAU),
                    ),
                    b: AnalyzerSetting::new(rng.random_range(0.0..TAU), rng.random_range(0.0..TAU)),
                    b_prime: AnalyzerSetting::new(
                        rng.random_range(0.0..TAU),
                        rng.random_range(0.0..TAU),
                    ),
                };
                assert!(chsh_value(&rho, &s) <= cap + 1e-9);
            }
        }
    }

    #[test]
    fn numeric_max_reference_states() {
        let cfg = OptimizerConfig::default();
        let mixed = chsh_max_numeric(&maximally_mixed(), &cfg).unwrap();
        assert!(mixed.b_max.abs() < 1e-6);

        let bell = chsh_max_numeric(&bell_phi_plus(), &cfg).unwrap();
        assert!((bell.b_max - TSIRELSON_BOUND).abs() < 1e-6);

        let mems = states::mems(&crate::states::MemsParams::new(0.75).unwrap());
        let r = chsh_max_numeric(&mems, &cfg).unwrap();
        assert!((r.b_max - TSIRELSON_BOUND * 0.75).abs() < 1e-6);
    }

    #[test]
    fn starved_optimizer_reports_a_stall() {
        let cfg = OptimizerConfig {
            max_iterations: 1,
            tolerance: 1e-30,
            ..OptimizerConfig::default()
        };
        assert!(matches!(
            chsh_max_numeric(&bell_phi_plus(), &cfg),
            Err(crate::error::Error::OptimizerStall { .. })
        ));
    }

    #[test]
    fn numeric_max_is_deterministic_per_seed() {
        let rho = states::werner(0.83).unwrap();
        let cfg = OptimizerConfig::default();
        let a = chsh_max_numeric(&rho, &cfg).unwrap();
        let b = chsh_max_numeric(&rho, &cfg).unwrap();
        assert_eq!(a.b_max.to_bits(), b.b_max.to_bits());
        assert_eq!(a.settings, b.settings);

        let other = chsh_max_numeric(&rho, &OptimizerConfig { seed: 7, ..cfg }).unwrap();
        assert!((a.b_max - other.b_max).abs() < 1e-6);
    }

    #[test]
    fn numeric_settings_reproduce_reported_value() {
        let rho = states::werner(0.9).unwrap();
        let r = chsh_max_numeric(&rho, &OptimizerConfig::default()).unwrap();
        let replay = chsh_value(&rho, &r.settings);
        assert!((replay - r.b_max).abs() < 1e-9);
    }

    #[test]
    fn separable_states_stay_under_the_classical_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..25 {
            // Random product state from two pure qubits.
            let t1: f64 = rng.random_range(0.0..TAU);
            let t2: f64 = rng.random_range(0.0..TAU);
            let p1: f64 = rng.random_range(0.0..TAU);
            let ket = [
                Complex64::new(t1.cos() * t2.cos(), 0.0),
                Complex64::from_polar(t1.cos() * t2.sin(), p1),
                Complex64::new(t1.sin() * t2.cos(), 0.0),
                Complex64::from_polar(t1.sin() * t2.sin(), p1),
            ];
            let rho = DensityMatrix::new(ComplexMatrix4::outer(&ket)).unwrap();
            let b = chsh_max_analytic(&rho).unwrap().b_max;
            assert!(b <= CLASSICAL_BOUND + 1e-9, "product state reached {b}");
        }
        for k in 0..=10 {
            let gamma = k as f64 / 30.0; // within [0, 1/3]
            let b = chsh_max_analytic(&states::werner(gamma).unwrap())
                .unwrap()
                .b_max;
            assert!(b <= CLASSICAL_BOUND + 1e-9);
        }
    }
}
