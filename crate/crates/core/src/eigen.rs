//! Eigenvalue routines for the two fixed sizes the crate needs: general
//! complex 4x4 matrices (spin-flip products ρρ̃) and real symmetric 3x3
//! matrices (Gram matrices TᵀT of correlation matrices).
//!
//! The 4x4 solver is a balanced Hessenberg reduction followed by a
//! single-shift QR iteration. The balancing permutation isolates rows and
//! columns that are exactly zero off the diagonal, which matters here: the
//! spin-flip products of the parametric state families carry exact zero
//! rows, and isolating them returns their eigenvalues without iteration
//! noise.

// Index loops mirror the textbook formulations; iterator forms obscure the
// row/column windows.
#![allow(clippy::needless_range_loop)]

use num_complex::Complex64;

use crate::error::Error;
use crate::matrix::{ComplexMatrix4, RealSymMatrix3};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// QR iterations allowed per deflated eigenvalue before giving up.
const MAX_QR_ITERATIONS: usize = 60;

/// All four eigenvalues (with multiplicity) of a general complex 4x4 matrix.
/// Order is not specified.
pub fn eigenvalues_4x4(m: &ComplexMatrix4) -> Result<[Complex64; 4], Error> {
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let mut h = [[ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            h[i][j] = m[(i, j)];
        }
    }

    let mut eigs: Vec<Complex64> = Vec::with_capacity(4);
    let (lo, hi) = isolate(&mut h, &mut eigs);

    if lo <= hi {
        balance(&mut h, lo, hi);
        hessenberg(&mut h, lo, hi);
        qr_iterate(&mut h, lo, hi, &mut eigs)?;
    }

    debug_assert_eq!(eigs.len(), 4);
    Ok([eigs[0], eigs[1], eigs[2], eigs[3]])
}

/// Similarity swap of rows and columns a and b.
fn swap_sim(h: &mut [[Complex64; 4]; 4], a: usize, b: usize) {
    if a == b {
        return;
    }
    h.swap(a, b);
    for row in h.iter_mut() {
        row.swap(a, b);
    }
}

/// Permutation phase of balancing: rows (columns) with no off-diagonal
/// entries inside the active window contribute their diagonal entry as an
/// eigenvalue directly. Returns the remaining window [lo, hi].
fn isolate(h: &mut [[Complex64; 4]; 4], eigs: &mut Vec<Complex64>) -> (usize, usize) {
    let mut lo = 0usize;
    let mut hi = 3usize;

    // Rows: move isolated rows to the bottom of the window.
    while lo < hi {
        let found = (lo..=hi).find(|&i| (lo..=hi).all(|j| j == i || h[i][j] == ZERO));
        match found {
            Some(i) => {
                swap_sim(h, i, hi);
                eigs.push(h[hi][hi]);
                hi -= 1;
            }
            None => break,
        }
    }
    // Columns: move isolated columns to the top.
    while lo < hi {
        let found = (lo..=hi).find(|&j| (lo..=hi).all(|i| i == j || h[i][j] == ZERO));
        match found {
            Some(j) => {
                swap_sim(h, j, lo);
                eigs.push(h[lo][lo]);
                lo += 1;
            }
            None => break,
        }
    }
    if lo == hi {
        eigs.push(h[lo][lo]);
        return (1, 0); // empty window
    }
    (lo, hi)
}

/// Scaling phase of balancing (Parlett-Reinsch, radix 2, exact in binary
/// floating point).
fn balance(h: &mut [[Complex64; 4]; 4], lo: usize, hi: usize) {
    loop {
        let mut converged = true;
        for i in lo..=hi {
            let mut c: f64 = 0.0;
            let mut r: f64 = 0.0;
            for j in lo..=hi {
                if j != i {
                    c += h[j][i].norm();
                    r += h[i][j].norm();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            while c < r / 2.0 {
                c *= 2.0;
                r /= 2.0;
                f *= 2.0;
            }
            while c >= r * 2.0 {
                c /= 2.0;
                r *= 2.0;
                f /= 2.0;
            }
            if c + r < 0.95 * s && f != 1.0 {
                converged = false;
                for j in lo..=hi {
                    h[i][j] /= f;
                }
                for j in lo..=hi {
                    h[j][i] *= f;
                }
            }
        }
        if converged {
            return;
        }
    }
}

/// Householder reduction of the window to upper Hessenberg form.
fn hessenberg(h: &mut [[Complex64; 4]; 4], lo: usize, hi: usize) {
    if hi - lo < 2 {
        return;
    }
    for k in lo..hi - 1 {
        let m = hi - k; // length of the column tail below the diagonal
        let mut x = vec![ZERO; m];
        for (t, xi) in x.iter_mut().enumerate() {
            *xi = h[k + 1 + t][k];
        }
        let norm = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let phase = if x[0] == ZERO {
            Complex64::new(1.0, 0.0)
        } else {
            x[0] / x[0].norm()
        };
        let alpha = -phase * norm;
        let mut v = x;
        v[0] -= alpha;
        let beta: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if beta == 0.0 {
            continue;
        }
        // Rows k+1..=hi from the left: H <- P H
        for j in lo..4 {
            let mut s = ZERO;
            for (t, vt) in v.iter().enumerate() {
                s += vt.conj() * h[k + 1 + t][j];
            }
            s *= 2.0 / beta;
            for (t, vt) in v.iter().enumerate() {
                h[k + 1 + t][j] -= s * vt;
            }
        }
        // Columns k+1..=hi from the right: H <- H P
        for i in lo..=hi {
            let mut s = ZERO;
            for (t, vt) in v.iter().enumerate() {
                s += h[i][k + 1 + t] * vt;
            }
            s *= 2.0 / beta;
            for (t, vt) in v.iter().enumerate() {
                h[i][k + 1 + t] -= s * vt.conj();
            }
        }
        h[k + 1][k] = alpha;
        for t in 2..=m {
            h[k + t][k] = ZERO;
        }
    }
}

/// Eigenvalues of a complex 2x2. The second root is recovered from the
/// determinant to dodge cancellation.
fn eig2(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> (Complex64, Complex64) {
    let half_tr = (a + d) * 0.5;
    let det = a * d - b * c;
    let p = (a - d) * 0.5;
    let q = (p * p + b * c).sqrt();
    let l1 = if (half_tr + q).norm() >= (half_tr - q).norm() {
        half_tr + q
    } else {
        half_tr - q
    };
    if l1 == ZERO {
        return (ZERO, ZERO);
    }
    (l1, det / l1)
}

/// Complex Givens rotation [[c, s], [-conj(s), c]] zeroing the second entry.
fn givens(a: Complex64, b: Complex64) -> (f64, Complex64) {
    if b == ZERO {
        return (1.0, ZERO);
    }
    if a == ZERO {
        return (0.0, b.conj() / b.norm());
    }
    let r = (a.norm_sqr() + b.norm_sqr()).sqrt();
    let c = a.norm() / r;
    let s = (a / a.norm()) * b.conj() / r;
    (c, s)
}

/// Single-shift QR iteration with deflation on the Hessenberg window.
fn qr_iterate(
    h: &mut [[Complex64; 4]; 4],
    lo: usize,
    hi: usize,
    eigs: &mut Vec<Complex64>,
) -> Result<(), Error> {
    let mut norm = 0.0;
    for i in lo..=hi {
        for j in lo..=hi {
            norm += h[i][j].norm();
        }
    }

    let mut n = hi;
    let mut iters_since_deflation = 0usize;
    let mut total_iterations = 0usize;

    loop {
        // Deflate along negligible subdiagonal entries, bottom-up.
        let mut l = lo;
        for q in ((lo + 1)..=n).rev() {
            let s = h[q - 1][q - 1].norm() + h[q][q].norm();
            let s = if s == 0.0 { norm } else { s };
            if h[q][q - 1].norm() <= f64::EPSILON * s {
                h[q][q - 1] = ZERO;
                l = q;
                break;
            }
        }

        if l == n {
            eigs.push(h[n][n]);
            iters_since_deflation = 0;
            if n == lo {
                return Ok(());
            }
            n -= 1;
            continue;
        }
        if l == n - 1 {
            let (l1, l2) = eig2(h[l][l], h[l][n], h[n][l], h[n][n]);
            eigs.push(l1);
            eigs.push(l2);
            iters_since_deflation = 0;
            if l == lo {
                return Ok(());
            }
            n = l - 1;
            continue;
        }

        iters_since_deflation += 1;
        total_iterations += 1;
        if iters_since_deflation > MAX_QR_ITERATIONS {
            return Err(Error::NoConvergence {
                iterations: total_iterations,
            });
        }

        // Wilkinson shift from the trailing 2x2; every tenth iteration fall
        // back to an exceptional shift to break symmetry stalls.
        let sigma = if iters_since_deflation % 10 == 0 {
            h[n][n] + Complex64::new(1.5 * h[n][n - 1].norm(), 0.0)
        } else {
            let (l1, l2) = eig2(h[n - 1][n - 1], h[n - 1][n], h[n][n - 1], h[n][n]);
            if (l1 - h[n][n]).norm() <= (l2 - h[n][n]).norm() {
                l1
            } else {
                l2
            }
        };

        // Explicit shifted QR step on the block [l, n].
        for j in l..=n {
            h[j][j] -= sigma;
        }
        let mut rotations = Vec::with_capacity(n - l);
        for j in l..n {
            let (c, s) = givens(h[j][j], h[j + 1][j]);
            for k in j..=n {
                let x = h[j][k];
                let y = h[j + 1][k];
                h[j][k] = x * c + y * s;
                h[j + 1][k] = -x * s.conj() + y * c;
            }
            rotations.push((c, s));
        }
        for (j, (c, s)) in (l..n).zip(rotations) {
            for i in l..=n {
                let x = h[i][j];
                let y = h[i][j + 1];
                h[i][j] = x * c + y * s.conj();
                h[i][j + 1] = -x * s + y * c;
            }
        }
        for j in l..=n {
            h[j][j] += sigma;
        }
    }
}

/// Eigenvalues (descending) and orthonormal eigenvectors (columns, matching
/// order) of a real symmetric 3x3 matrix, by cyclic Jacobi rotations.
///
/// Exact for diagonal input, which all the parametric state families
/// produce; accuracy ~1e-15 otherwise.
pub fn eigen_sym3(m: &RealSymMatrix3) -> ([f64; 3], [[f64; 3]; 3]) {
    let mut a = *m.entries();
    // The type tolerates 1e-12 asymmetry; the iteration wants an exactly
    // symmetric matrix.
    for i in 0..3 {
        for j in (i + 1)..3 {
            let avg = 0.5 * (a[i][j] + a[j][i]);
            a[i][j] = avg;
            a[j][i] = avg;
        }
    }
    let mut v = [[0.0; 3]; 3];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }

    let frob: f64 = a
        .iter()
        .flatten()
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt()
        .max(f64::MIN_POSITIVE);

    for _sweep in 0..50 {
        let off = (a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2]).sqrt();
        if off <= f64::EPSILON * frob {
            break;
        }
        for (p, q) in [(0usize, 1usize), (0, 2), (1, 2)] {
            if a[p][q] == 0.0 {
                continue;
            }
            let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
            let t = if theta.abs() > 1e154 {
                // Avoid overflow in theta^2; limit of the formula below.
                0.5 / theta
            } else {
                theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
            };
            let c = 1.0 / (t * t + 1.0).sqrt();
            let s = t * c;

            let app = a[p][p];
            let aqq = a[q][q];
            let apq = a[p][q];
            a[p][p] = app - t * apq;
            a[q][q] = aqq + t * apq;
            a[p][q] = 0.0;
            a[q][p] = 0.0;
            for r in 0..3 {
                if r != p && r != q {
                    let arp = a[r][p];
                    let arq = a[r][q];
                    a[r][p] = c * arp - s * arq;
                    a[p][r] = a[r][p];
                    a[r][q] = s * arp + c * arq;
                    a[q][r] = a[r][q];
                }
            }
            for row in v.iter_mut() {
                let vp = row[p];
                let vq = row[q];
                row[p] = c * vp - s * vq;
                row[q] = s * vp + c * vq;
            }
        }
    }

    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| a[j][j].partial_cmp(&a[i][i]).unwrap());
    let values = [a[order[0]][order[0]], a[order[1]][order[1]], a[order[2]][order[2]]];
    let mut vectors = [[0.0; 3]; 3];
    for (new_col, &old_col) in order.iter().enumerate() {
        for r in 0..3 {
            vectors[r][new_col] = v[r][old_col];
        }
    }
    (values, vectors)
}

/// Eigenvalues of a real symmetric 3x3 in descending order.
pub fn eigenvalues_sym3(m: &RealSymMatrix3) -> [f64; 3] {
    eigen_sym3(m).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::kron2;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sorted_re(eigs: [Complex64; 4]) -> [f64; 4] {
        let mut v: Vec<f64> = eigs.iter().map(|z| z.re).collect();
        v.sort_by(|a, b| b.partial_cmp(a).unwrap());
        [v[0], v[1], v[2], v[3]]
    }

    #[test]
    fn identity_eigenvalues() {
        let eigs = eigenvalues_4x4(&ComplexMatrix4::identity()).unwrap();
        for e in eigs {
            assert!((e - c(1.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn diagonal_eigenvalues() {
        let m = ComplexMatrix4::from_diagonal([4.0, 3.0, 2.0, 1.0]);
        let eigs = sorted_re(eigenvalues_4x4(&m).unwrap());
        assert_eq!(eigs, [4.0, 3.0, 2.0, 1.0]);
    }

    #[test]
    fn known_complex_spectrum_via_similarity() {
        // S D S^-1 with a hand-inverted S and spectrum {2, i, -i, -1}.
        let d = ComplexMatrix4::from_fn(|i, j| {
            if i != j {
                return ZERO;
            }
            [c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(-1.0, 0.0)][i]
        });
        // Unit lower-triangular S: S^-1 has negated strictly-lower entries
        // only when S = I + N with N^2 = 0; use a single off-diagonal.
        let mut s = ComplexMatrix4::identity();
        s[(2, 0)] = c(0.5, -0.25);
        let mut s_inv = ComplexMatrix4::identity();
        s_inv[(2, 0)] = -s[(2, 0)];
        let m = s * d * s_inv;
        let mut eigs: Vec<Complex64> = eigenvalues_4x4(&m).unwrap().to_vec();
        let mut expected = vec![c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(-1.0, 0.0)];
        // Match greedily.
        for e in &mut expected {
            let (idx, _) = eigs
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| {
                    (**a - *e).norm().partial_cmp(&(**b - *e).norm()).unwrap()
                })
                .unwrap();
            assert!((eigs[idx] - *e).norm() < 1e-12, "missing {e}");
            eigs.remove(idx);
        }
    }

    #[test]
    fn eigenvalue_sum_matches_trace() {
        // Deterministic pseudo-random fill.
        let mut state = 0x1234_5678_u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        for _ in 0..100 {
            let m = ComplexMatrix4::from_fn(|_, _| c(next(), next()));
            let eigs = eigenvalues_4x4(&m).unwrap();
            let sum: Complex64 = eigs.iter().sum();
            assert!((sum - m.trace()).norm() < 1e-8);
        }
    }

    #[test]
    fn hermitian_spectrum_is_real() {
        let mut state = 0xdead_beef_u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        for _ in 0..100 {
            let a = ComplexMatrix4::from_fn(|_, _| c(next(), next()));
            let herm = ComplexMatrix4::from_fn(|i, j| (a[(i, j)] + a[(j, i)].conj()) * 0.5);
            let eigs = eigenvalues_4x4(&herm).unwrap();
            for e in eigs {
                assert!(e.im.abs() <= 1e-10, "imag part {} too large", e.im);
            }
        }
    }

    #[test]
    fn spin_flip_product_of_werner_state() {
        // Wootters spectrum oracle for the Werner family: the descending
        // square roots satisfy l1 - l2 - l3 - l4 = (3g - 1)/2.
        let gamma = 0.9;
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let bell = ComplexMatrix4::outer(&[c(s, 0.0), ZERO, ZERO, c(s, 0.0)]);
        let rho = ComplexMatrix4::identity().scaled((1.0 - gamma) / 4.0) + bell.scaled(gamma);
        let sy = [[ZERO, c(0.0, -1.0)], [c(0.0, 1.0), ZERO]];
        let syy = kron2(&sy, &sy);
        let rho_tilde = syy * rho.conjugate() * syy;
        let eigs = eigenvalues_4x4(&(rho * rho_tilde)).unwrap();
        let mut roots: Vec<f64> = eigs.iter().map(|z| z.re.max(0.0).sqrt()).collect();
        roots.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let c_val = roots[0] - roots[1] - roots[2] - roots[3];
        assert!((c_val - 0.85).abs() < 1e-12, "concurrence {c_val} != 0.85");
    }

    #[test]
    fn nilpotent_shift_matrix() {
        let mut m = ComplexMatrix4::zero();
        m[(0, 1)] = c(1.0, 0.0);
        m[(1, 2)] = c(1.0, 0.0);
        m[(2, 3)] = c(1.0, 0.0);
        let eigs = eigenvalues_4x4(&m).unwrap();
        for e in eigs {
            assert!(e.norm() < 1e-12);
        }
    }

    #[test]
    fn companion_with_conjugate_pairs() {
        // Companion matrix of z^4 + 1: eigenvalues are the 8th roots of
        // unity with odd index.
        let mut m = ComplexMatrix4::zero();
        m[(1, 0)] = c(1.0, 0.0);
        m[(2, 1)] = c(1.0, 0.0);
        m[(3, 2)] = c(1.0, 0.0);
        m[(0, 3)] = c(-1.0, 0.0);
        let eigs = eigenvalues_4x4(&m).unwrap();
        for e in eigs {
            assert!((e.norm() - 1.0).abs() < 1e-12);
            assert!((e.powu(4) + c(1.0, 0.0)).norm() < 1e-10);
        }
    }

    #[test]
    fn sym3_identity_and_diagonal() {
        let id = RealSymMatrix3::new([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]).unwrap();
        assert_eq!(eigenvalues_sym3(&id), [1.0, 1.0, 1.0]);
        let d = RealSymMatrix3::new([[0.25, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 0.04]]).unwrap();
        assert_eq!(eigenvalues_sym3(&d), [1.0, 0.25, 0.04]);
    }

    #[test]
    fn sym3_gram_of_bell_correlation() {
        let t = [[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]];
        let g = RealSymMatrix3::gram(&t);
        assert_eq!(eigenvalues_sym3(&g), [1.0, 1.0, 1.0]);
    }

    #[test]
    fn sym3_characteristic_polynomial_residual() {
        let mut state = 0x0bad_cafe_u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        for _ in 0..100 {
            let mut e = [[0.0; 3]; 3];
            for i in 0..3 {
                for j in i..3 {
                    let x = next();
                    e[i][j] = x;
                    e[j][i] = x;
                }
            }
            let m = RealSymMatrix3::new(e).unwrap();
            let (vals, vecs) = eigen_sym3(&m);
            assert!(vals[0] >= vals[1] && vals[1] >= vals[2]);

            // Characteristic polynomial with coefficients normalised by the
            // largest magnitude.
            let tr = e[0][0] + e[1][1] + e[2][2];
            let minors = e[0][0] * e[1][1] - e[0][1] * e[1][0]
                + e[0][0] * e[2][2]
                - e[0][2] * e[2][0]
                + e[1][1] * e[2][2]
                - e[1][2] * e[2][1];
            let det = e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
                - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
                + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
            let scale = [1.0, tr.abs(), minors.abs(), det.abs()]
                .into_iter()
                .fold(0.0, f64::max);
            for l in vals {
                let p = ((l - tr) * l + minors) * l - det;
                assert!(p.abs() / scale <= 1e-8, "residual {p}");
            }

            // Eigenvector residual ‖Av - λv‖.
            for k in 0..3 {
                for r in 0..3 {
                    let av: f64 = (0..3).map(|s| e[r][s] * vecs[s][k]).sum();
                    assert!((av - vals[k] * vecs[r][k]).abs() < 1e-12);
                }
            }
        }
    }
}
