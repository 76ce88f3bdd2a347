//! Tabular reproduction of the two figures: maximal violation versus tangle
//! for three state families, and the boundary in the tangle-linear-entropy
//! plane where the maximal violation equals the classical bound.

use std::fmt;

use crate::bell::{self, OptimizerConfig};
use crate::error::Error;
use crate::matrix::DensityMatrix;
use crate::measures;
use crate::states::{self, MemsLikeParams, MemsParams, WernerLikeParams};

/// Distance at which an analytic-vs-numeric cross-check counts as failed.
const CROSS_CHECK_TOL: f64 = 1e-6;
/// Bisection stops when the gamma bracket is this narrow.
const BISECTION_GAMMA_TOL: f64 = 1e-10;
const BISECTION_MAX_ITERATIONS: usize = 200;
/// Points of the coarse scan used to bracket the boundary crossing.
const SCAN_POINTS: usize = 33;

/// State families appearing in the violation-versus-tangle sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Partially entangled pure state, ξ swept at γ = 1.
    PureNonmax,
    /// Werner state, γ swept at ξ = π/4.
    Werner,
    /// Maximally entangled mixed state, γ swept.
    Mems,
    /// The |01⟩-pedestal variant, used only by the boundary sweep records.
    MemsLike,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::PureNonmax => "pure_nonmax",
            Family::Werner => "werner",
            Family::Mems => "mems",
            Family::MemsLike => "mems_like",
        };
        f.write_str(name)
    }
}

/// One point of the violation-versus-tangle figure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRecord {
    pub family: Family,
    pub gamma: f64,
    pub xi: f64,
    pub tangle: f64,
    pub eof: f64,
    pub linear_entropy: f64,
    pub b_max: f64,
}

/// Families traced by the boundary sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryFamily {
    WernerLike,
    MemsLike,
}

impl fmt::Display for BoundaryFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            BoundaryFamily::WernerLike => "werner_like",
            BoundaryFamily::MemsLike => "mems_like",
        };
        f.write_str(name)
    }
}

/// One point of the b_max = 2 boundary in the tangle-linear-entropy plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryRecord {
    pub family: BoundaryFamily,
    pub gamma: f64,
    pub xi: f64,
    pub tangle: f64,
    pub linear_entropy: f64,
    /// b_max - 2 at the returned gamma; |residual| ≤ 1e-8 by construction.
    pub residual: f64,
}

/// A grid point where no boundary crossing exists; reported, not fatal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SkippedPoint {
    pub family: BoundaryFamily,
    pub xi: f64,
}

/// Output of [`fig2_boundary`].
#[derive(Debug, Clone, PartialEq)]
pub struct BoundarySweep {
    pub records: Vec<BoundaryRecord>,
    pub skipped: Vec<SkippedPoint>,
}

fn check_samples(samples: usize) -> Result<(), Error> {
    if samples < 2 {
        return Err(Error::ParamOutOfRange {
            name: "samples",
            value: samples as f64,
            min: 2.0,
            max: f64::INFINITY,
        });
    }
    Ok(())
}

fn sweep_record(
    family: Family,
    gamma: f64,
    xi: f64,
    rho: &DensityMatrix,
    cross_check: bool,
    cfg: &OptimizerConfig,
) -> Result<SweepRecord, Error> {
    let (_, tangle) = measures::concurrence_tangle(rho)?;
    let analytic = bell::chsh_max_analytic(rho)?;
    if cross_check {
        let numeric = bell::chsh_max_numeric(rho, cfg)?;
        if (numeric.b_max - analytic.b_max).abs() > CROSS_CHECK_TOL {
            return Err(Error::CrossCheckFailed {
                analytic: analytic.b_max,
                numeric: numeric.b_max,
            });
        }
    }
    Ok(SweepRecord {
        family,
        gamma,
        xi,
        tangle,
        eof: measures::eof_from_tangle(tangle)?,
        linear_entropy: measures::linear_entropy(rho),
        b_max: analytic.b_max,
    })
}

/// The three curves of the violation-versus-tangle figure, each sampled at
/// `samples` points: (a) the partially entangled pure state over
/// ξ ∈ [0, π/4], (b) the Werner state over γ ∈ [0, 1], (c) the MEMS over
/// γ ∈ [0, 1]. Every tenth point is cross-checked against the numeric
/// optimiser.
pub fn fig1_sweep(samples: usize, cfg: &OptimizerConfig) -> Result<Vec<SweepRecord>, Error> {
    check_samples(samples)?;
    let mut records = Vec::with_capacity(3 * samples);
    let step = |i: usize| i as f64 / (samples - 1) as f64;

    for i in 0..samples {
        let xi = std::f64::consts::FRAC_PI_4 * step(i);
        let p = WernerLikeParams::new(1.0, xi, 0.0)?;
        let rho = states::werner_like(&p);
        records.push(sweep_record(
            Family::PureNonmax,
            1.0,
            xi,
            &rho,
            i % 10 == 0,
            cfg,
        )?);
    }
    for i in 0..samples {
        let gamma = step(i);
        let rho = states::werner(gamma)?;
        records.push(sweep_record(
            Family::Werner,
            gamma,
            std::f64::consts::FRAC_PI_4,
            &rho,
            i % 10 == 0,
            cfg,
        )?);
    }
    for i in 0..samples {
        let gamma = step(i);
        let rho = states::mems(&MemsParams::new(gamma)?);
        records.push(sweep_record(Family::Mems, gamma, 0.0, &rho, i % 10 == 0, cfg)?);
    }
    Ok(records)
}

fn boundary_state(family: BoundaryFamily, gamma: f64, xi: f64) -> Result<DensityMatrix, Error> {
    Ok(match family {
        BoundaryFamily::WernerLike => states::werner_like(&WernerLikeParams::new(gamma, xi, 0.0)?),
        BoundaryFamily::MemsLike => states::mems_like(&MemsLikeParams::new(gamma, xi, 0.0)?),
    })
}

fn b_max_at(family: BoundaryFamily, gamma: f64, xi: f64) -> Result<f64, Error> {
    Ok(bell::chsh_max_analytic(&boundary_state(family, gamma, xi)?)?.b_max)
}

/// Find the γ in [0, 1] where b_max crosses 2 from below, at fixed ξ.
///
/// b_max need not be monotone over the whole interval (the MEMS-like family
/// starts at exactly 2 at γ = 0 and dips), so the bracket starts at the
/// minimum of a coarse scan; b_max is monotone from there to γ = 1, which is
/// asserted on the scan points.
pub(crate) fn boundary_gamma(family: BoundaryFamily, xi: f64) -> Result<f64, Error> {
    let scan: Vec<f64> = (0..SCAN_POINTS)
        .map(|i| i as f64 / (SCAN_POINTS - 1) as f64)
        .collect();
    let values: Vec<f64> = scan
        .iter()
        .map(|&g| b_max_at(family, g, xi))
        .collect::<Result<_, _>>()?;

    let min_idx = values
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.partial_cmp(b).unwrap())
        .map(|(i, _)| i)
        .expect("scan is non-empty");

    for w in values[min_idx..].windows(2) {
        assert!(
            w[1] >= w[0] - 1e-12,
            "b_max not monotone on the bisection bracket"
        );
    }

    let mut lo = scan[min_idx];
    let mut hi = 1.0;
    let f_lo = values[min_idx] - bell::CLASSICAL_BOUND;
    let f_hi = *values.last().expect("scan is non-empty") - bell::CLASSICAL_BOUND;
    if !(f_lo < 0.0 && f_hi > 0.0) {
        return Err(Error::NoRoot { xi });
    }

    for _ in 0..BISECTION_MAX_ITERATIONS {
        if hi - lo <= BISECTION_GAMMA_TOL {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = b_max_at(family, mid, xi)? - bell::CLASSICAL_BOUND;
        if f_mid < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Trace the b_max = 2 boundary for both families on a ξ grid over
/// (0, π/4]. Grid points without a crossing are skipped and reported in the
/// result.
pub fn fig2_boundary(samples: usize) -> Result<BoundarySweep, Error> {
    check_samples(samples)?;
    let mut records = Vec::with_capacity(2 * samples);
    let mut skipped = Vec::new();

    for family in [BoundaryFamily::WernerLike, BoundaryFamily::MemsLike] {
        for k in 1..=samples {
            let xi = std::f64::consts::FRAC_PI_4 * k as f64 / samples as f64;
            let gamma = match boundary_gamma(family, xi) {
                Ok(g) => g,
                Err(Error::NoRoot { .. }) => {
                    skipped.push(SkippedPoint { family, xi });
                    continue;
                }
                Err(e) => return Err(e),
            };
            let rho = boundary_state(family, gamma, xi)?;
            let (_, tangle) = measures::concurrence_tangle(&rho)?;
            let residual = bell::chsh_max_analytic(&rho)?.b_max - bell::CLASSICAL_BOUND;
            records.push(BoundaryRecord {
                family,
                gamma,
                xi,
                tangle,
                linear_entropy: measures::linear_entropy(&rho),
                residual,
            });
        }
    }
    Ok(BoundarySweep { records, skipped })
}
