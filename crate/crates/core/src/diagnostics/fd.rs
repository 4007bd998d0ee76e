//! Finite-difference weights on arbitrary stencils (Fornberg's recursion).

/// `w[k][j]` such that `sum_j w[k][j] g(points[j])` approximates `g^{(k)}(z)`
/// for `k = 0..=max_order`.
pub fn fd_weights(z: f64, points: &[f64], max_order: usize) -> Vec<Vec<f64>> {
    let n = points.len();
    let mut c = vec![vec![0.0; n]; max_order + 1];
    if n == 0 {
        return c;
    }
    let mut c1 = 1.0;
    let mut c4 = points[0] - z;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(max_order);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = points[i] - z;
        for j in 0..i {
            let c3 = points[i] - points[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[k][i] = c1 * (k as f64 * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                }
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for k in (1..=mn).rev() {
                c[k][j] = (c4 * c[k][j] - k as f64 * c[k - 1][j]) / c3;
            }
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    c
}

/// One-sided derivative estimates at `0` from samples `g(j * step)`,
/// `j = 0..samples.len()` (a negative `step` gives the left-sided stencil).
///
/// Differences against `samples[0]` are formed first so that a constant
/// profile yields exactly zero derivatives.
pub fn one_sided_derivatives(samples: &[f64], step: f64, max_order: usize) -> Vec<f64> {
    let sign = step.signum();
    let pts: Vec<f64> = (0..samples.len()).map(|j| sign * j as f64).collect();
    let w = fd_weights(0.0, &pts, max_order);
    let base = samples[0];
    (0..=max_order)
        .map(|k| {
            if k == 0 {
                return base;
            }
            let s: f64 = w[k]
                .iter()
                .zip(samples)
                .skip(1)
                .map(|(c, g)| c * (g - base))
                .sum();
            s / step.abs().powi(k as i32)
        })
        .collect()
}

/// Sum of absolute stencil weights per order, scaled by `step^-k`; bounds the
/// amplification of sample noise.
pub fn one_sided_amplification(len: usize, step: f64, max_order: usize) -> Vec<f64> {
    let pts: Vec<f64> = (0..len).map(|j| j as f64).collect();
    let w = fd_weights(0.0, &pts, max_order);
    w.iter()
        .enumerate()
        .map(|(k, wk)| wk.iter().map(|c| c.abs()).sum::<f64>() / step.abs().powi(k as i32))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn central_second_derivative_stencil() {
        let w = fd_weights(0.0, &[-1.0, 0.0, 1.0], 2);
        assert_eq!(w[0], vec![0.0, 1.0, 0.0]);
        assert_eq!(w[1], vec![-0.5, 0.0, 0.5]);
        assert_eq!(w[2], vec![1.0, -2.0, 1.0]);
    }

    #[test]
    fn forward_first_derivative_stencil() {
        let w = fd_weights(0.0, &[0.0, 1.0, 2.0], 1);
        for (a, b) in w[1].iter().zip([-1.5, 2.0, -0.5]) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn one_sided_derivatives_of_exponential() {
        let h = 0.01;
        for sign in [1.0, -1.0] {
            let g: Vec<f64> = (0..9).map(|j| (sign * h * j as f64).exp()).collect();
            let d = one_sided_derivatives(&g, sign * h, 4);
            for (k, dk) in d.iter().enumerate() {
                assert!((dk - 1.0).abs() < 1e-4, "order {k}: {dk}");
            }
        }
        let flat = one_sided_derivatives(&[2.5; 7], 0.1, 5);
        assert_eq!(flat, vec![2.5, 0.0, 0.0, 0.0, 0.0, 0.0]);
    }
}
