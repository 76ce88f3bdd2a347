//! Fixtures shared by the benchmark targets.

use qbell_core::states::{self, MemsParams, WernerLikeParams};
use qbell_core::DensityMatrix;

pub fn werner_state(gamma: f64) -> DensityMatrix {
    states::werner(gamma).expect("gamma in range")
}

pub fn mems_state(gamma: f64) -> DensityMatrix {
    states::mems(&MemsParams::new(gamma).expect("gamma in range"))
}

pub fn partially_entangled_pure(xi: f64) -> DensityMatrix {
    states::werner_like(&WernerLikeParams::new(1.0, xi, 0.0).expect("params in range"))
}

/// A fixed full-rank state with no special structure, for worst-case paths.
pub fn dense_state() -> DensityMatrix {
    use rand_like::fill;
    let mut entries = [[0.0f64; 2]; 16];
    fill(&mut entries);
    let a = qbell_core::ComplexMatrix4::from_fn(|i, j| {
        let e = entries[i * 4 + j];
        qbell_core::Complex64::new(e[0], e[1])
    });
    let m = a * a.adjoint();
    let tr = m.trace().re;
    let mut m = m.scaled(1.0 / tr);
    for i in 0..4 {
        m[(i, i)] = qbell_core::Complex64::new(m[(i, i)].re, 0.0);
    }
    DensityMatrix::new(m).expect("gram matrix is a state")
}

mod rand_like {
    /// Small fixed LCG so the bench fixture needs no RNG dependency.
    pub fn fill(entries: &mut [[f64; 2]; 16]) {
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        for e in entries.iter_mut() {
            e[0] = next();
            e[1] = next();
        }
    }
}
