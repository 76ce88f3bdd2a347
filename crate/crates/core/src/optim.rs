//! Derivative-free simplex minimisation (Nelder-Mead) used by the numeric
//! Bell maximiser. Kept deliberately small: fixed standard coefficients,
//! function-spread convergence test, no restarts (multi-start lives in the
//! caller).

/// Result of one local search.
#[derive(Debug, Clone)]
pub struct Minimum {
    pub point: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Nelder-Mead with reflection 1, expansion 2, contraction 1/2, shrink 1/2.
///
/// `initial_step` sets the edge length of the starting simplex. Convergence
/// is declared when the spread of function values across the simplex drops
/// below `tolerance`.
pub fn nelder_mead<F: Fn(&[f64]) -> f64>(
    f: F,
    x0: &[f64],
    initial_step: f64,
    tolerance: f64,
    max_iterations: usize,
) -> Minimum {
    let n = x0.len();
    assert!(n >= 1, "need at least one dimension");

    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    simplex.push(x0.to_vec());
    for i in 0..n {
        let mut p = x0.to_vec();
        p[i] += initial_step;
        simplex.push(p);
    }
    let mut values: Vec<f64> = simplex.iter().map(|p| f(p)).collect();

    let mut iterations = 0;
    let mut converged = false;

    while iterations < max_iterations {
        iterations += 1;

        // Order best -> worst.
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());
        let best = order[0];
        let worst = order[n];
        let second_worst = order[n - 1];

        if values[worst] - values[best] <= tolerance {
            converged = true;
            break;
        }

        // Centroid of all but the worst point.
        let mut centroid = vec![0.0; n];
        for &idx in order.iter().take(n) {
            for (c, x) in centroid.iter_mut().zip(&simplex[idx]) {
                *c += x / n as f64;
            }
        }

        let lerp = |towards: &[f64], t: f64| -> Vec<f64> {
            centroid
                .iter()
                .zip(towards)
                .map(|(c, w)| c + t * (w - c))
                .collect()
        };

        let reflected = lerp(&simplex[worst], -1.0);
        let f_reflected = f(&reflected);

        if f_reflected < values[best] {
            let expanded = lerp(&simplex[worst], -2.0);
            let f_expanded = f(&expanded);
            if f_expanded < f_reflected {
                simplex[worst] = expanded;
                values[worst] = f_expanded;
            } else {
                simplex[worst] = reflected;
                values[worst] = f_reflected;
            }
            continue;
        }
        if f_reflected < values[second_worst] {
            simplex[worst] = reflected;
            values[worst] = f_reflected;
            continue;
        }

        // Contract, outside or inside of the reflection.
        let contracted = if f_reflected < values[worst] {
            lerp(&simplex[worst], -0.5)
        } else {
            lerp(&simplex[worst], 0.5)
        };
        let f_contracted = f(&contracted);
        if f_contracted < values[worst].min(f_reflected) {
            simplex[worst] = contracted;
            values[worst] = f_contracted;
            continue;
        }

        // Shrink towards the best vertex.
        let anchor = simplex[best].clone();
        for idx in 0..=n {
            if idx == best {
                continue;
            }
            for (x, a) in simplex[idx].iter_mut().zip(&anchor) {
                *x = a + 0.5 * (*x - a);
            }
            values[idx] = f(&simplex[idx]);
        }
    }

    let best = (0..=n)
        .min_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap())
        .unwrap();
    Minimum {
        point: simplex[best].clone(),
        value: values[best],
        iterations,
        converged,
    }
}
