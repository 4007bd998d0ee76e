//! Extension nodes and weights.
//!
//! An extension scheme of order `n` samples a function at `n + 1` points
//! `t_j * |x|` on the source side and combines them with weights `w_j`
//! satisfying the moment conditions
//!
//! ```text
//! sum_j w_j t_j^i = (-1)^i,   i = 0..=n
//! ```
//!
//! which makes the extension match the first `n` derivatives at the
//! boundary. The weights are the Lagrange basis polynomials of the nodes
//! evaluated at `-1`. For nodes restricted to `[0, a]` the l1 norm of the
//! weights is minimized by Chebyshev extrema mapped to `[0, a]`, and the
//! minimum equals `T_n(1 + 2/a)`.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Chebyshev polynomial of the first kind, `T_n(x)`.
///
/// Uses `cos(n acos x)` on `[-1, 1]` and the closed form
/// `((x - sqrt(x^2-1))^n + (x + sqrt(x^2-1))^n) / 2` outside.
pub fn chebyshev_t(n: usize, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    if x.abs() <= 1.0 {
        return (n as f64 * x.acos()).cos();
    }
    // (|x| - s)(|x| + s) = 1, so the small root is formed as a reciprocal
    // to avoid cancellation.
    let ax = x.abs();
    let s = (ax * ax - 1.0).sqrt();
    let big = ax + s;
    let small = 1.0 / big;
    let exp = n as i32;
    let v = 0.5 * (big.powi(exp) + small.powi(exp));
    if x < 0.0 && n % 2 == 1 {
        -v
    } else {
        v
    }
}

fn check_distinct(nodes: &[f64]) -> Result<()> {
    if nodes.is_empty() {
        return Err(Error::EmptyInput);
    }
    if nodes.iter().any(|t| !t.is_finite()) {
        return Err(Error::NodesNotIncreasing);
    }
    let mut sorted = nodes.to_vec();
    sorted.sort_by(f64::total_cmp);
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return Err(Error::DegenerateNodes);
    }
    Ok(())
}

fn check_increasing(nodes: &[f64]) -> Result<()> {
    check_distinct(nodes)?;
    if nodes[0] < 0.0 || nodes.windows(2).any(|p| p[1] <= p[0]) {
        return Err(Error::NodesNotIncreasing);
    }
    Ok(())
}

/// Solves `sum_j w_j t_j^i = rhs_i` for `i = 0..=n` directly.
///
/// This is the Björck–Pereyra algorithm for the dual Vandermonde system.
/// For nonnegative increasing nodes and a sign-alternating right-hand side
/// it is componentwise accurate, which general elimination is not once the
/// Vandermonde condition number passes `1e12` or so.
pub fn solve_vandermonde(nodes: &[f64], rhs: &[f64]) -> Result<Vec<f64>> {
    check_distinct(nodes)?;
    if rhs.len() != nodes.len() {
        return Err(Error::InvalidArgument(format!(
            "rhs has {} entries, expected {}",
            rhs.len(),
            nodes.len()
        )));
    }
    let n = nodes.len() - 1;
    let x = nodes;
    let mut f = rhs.to_vec();
    #[allow(clippy::needless_range_loop)]
    for k in 0..n {
        for i in (k + 1..=n).rev() {
            f[i] -= x[k] * f[i - 1];
        }
    }
    for k in (0..n).rev() {
        for i in k + 1..=n {
            f[i] /= x[i] - x[i - k - 1];
        }
        for i in k..n {
            f[i] -= f[i + 1];
        }
    }
    if f.iter().any(|v| !v.is_finite()) {
        return Err(Error::IllConditioned);
    }
    Ok(f)
}

/// Weights `w_i = l_i(-1)` from the Lagrange product formula.
pub fn lagrange_weights(nodes: &[f64]) -> Result<Vec<f64>> {
    check_increasing(nodes)?;
    let n = nodes.len();
    let w = (0..n)
        .map(|i| {
            let ti = nodes[i];
            let mut p = if i % 2 == 0 { 1.0 } else { -1.0 };
            for (m, &tm) in nodes.iter().enumerate() {
                if m < i {
                    p *= (1.0 + tm) / (ti - tm);
                } else if m > i {
                    p *= (1.0 + tm) / (tm - ti);
                }
            }
            p
        })
        .collect::<Vec<_>>();
    if w.iter().any(|v| !v.is_finite()) {
        return Err(Error::IllConditioned);
    }
    Ok(w)
}

fn check_reach(a: f64) -> Result<()> {
    if !(a.is_finite() && a > 0.0) {
        return Err(Error::InvalidArgument(format!("reach a must be positive, got {a}")));
    }
    Ok(())
}

/// Chebyshev extrema mapped to `[0, a]`: `t_i = a/2 (1 - cos(i pi / n))`.
///
/// The endpoints are set exactly. `n = 0` gives the single node `[0]`.
pub fn chebyshev_nodes(n: usize, a: f64) -> Result<Vec<f64>> {
    check_reach(a)?;
    if n == 0 {
        return Ok(vec![0.0]);
    }
    let mut t: Vec<f64> = (0..=n)
        // cos(i pi / n) written as a sine so the midpoint is exact and the
        // nodes are symmetric about a/2
        .map(|i| {
            let c = ((n as f64 - 2.0 * i as f64) * PI / (2.0 * n as f64)).sin();
            0.5 * a * (1.0 - c)
        })
        .collect();
    t[0] = 0.0;
    t[n] = a;
    Ok(t)
}

/// Closed-form weights for the Chebyshev nodes on `[0, a]`.
pub fn optimal_weights(n: usize, a: f64) -> Result<Vec<f64>> {
    check_reach(a)?;
    if n == 0 {
        return Ok(vec![1.0]);
    }
    let t = chebyshev_nodes(n, a)?;
    let x0 = 1.0 + 2.0 / a;
    let s = (x0 * x0 - 1.0).sqrt();
    let exp = n as i32;
    let c = (1.0 + a) / s * ((x0 + s).powi(exp) - (1.0 / (x0 + s)).powi(exp));
    let na = n as f64 * a;
    Ok(t.iter()
        .enumerate()
        .map(|(i, &ti)| {
            let ends = if i == 0 || i == n { 2.0 } else { 1.0 };
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            sign * c / (ends * na * (1.0 + ti))
        })
        .collect())
}

/// The l1 norm of the optimal weights, `T_n(1 + 2/a)`.
pub fn condition_number(n: usize, a: f64) -> Result<f64> {
    check_reach(a)?;
    Ok(chebyshev_t(n, 1.0 + 2.0 / a))
}

/// Nodes and weights of an order-`n` extension with reach `a`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtensionScheme {
    order: usize,
    reach: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    cond: f64,
}

impl ExtensionScheme {
    /// Optimal scheme: Chebyshev nodes with closed-form weights.
    pub fn optimal(n: usize, a: f64) -> Result<Self> {
        let nodes = chebyshev_nodes(n, a)?;
        let weights = optimal_weights(n, a)?;
        Ok(Self::from_parts(n, a, nodes, weights))
    }

    /// Scheme on explicit nodes in `[0, a]`, weighted by the Lagrange formula.
    pub fn with_nodes(a: f64, nodes: &[f64]) -> Result<Self> {
        check_reach(a)?;
        check_increasing(nodes)?;
        if nodes[nodes.len() - 1] > a {
            return Err(Error::Domain {
                what: "node",
                value: nodes[nodes.len() - 1],
                lo: 0.0,
                hi: a,
            });
        }
        let weights = lagrange_weights(nodes)?;
        Ok(Self::from_parts(nodes.len() - 1, a, nodes.to_vec(), weights))
    }

    fn from_parts(order: usize, reach: f64, nodes: Vec<f64>, weights: Vec<f64>) -> Self {
        let cond = weights.iter().map(|w| w.abs()).sum();
        Self {
            order,
            reach,
            nodes,
            weights,
            cond,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn reach(&self) -> f64 {
        self.reach
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// l1 norm of the weights.
    pub fn cond(&self) -> f64 {
        self.cond
    }

    /// Largest node, i.e. how far into the source side the samples reach
    /// per unit of extension distance.
    pub fn max_node(&self) -> f64 {
        self.nodes[self.nodes.len() - 1]
    }

    /// Largest moment residual `|sum_j w_j t_j^i - (-1)^i|` over `i = 0..=n`.
    pub fn moment_residual(&self) -> f64 {
        (0..=self.order)
            .map(|i| {
                let m: f64 = self
                    .weights
                    .iter()
                    .zip(&self.nodes)
                    .map(|(w, t)| w * t.powi(i as i32))
                    .sum();
                let target = if i % 2 == 0 { 1.0 } else { -1.0 };
                (m - target).abs()
            })
            .fold(0.0, f64::max)
    }
}

/// Builds a scheme: optimal by default, Lagrange-weighted when nodes are given.
pub fn make_scheme(n: usize, a: f64, nodes: Option<&[f64]>) -> Result<ExtensionScheme> {
    match nodes {
        None => ExtensionScheme::optimal(n, a),
        Some(t) => {
            if t.len() != n + 1 {
                return Err(Error::InvalidArgument(format!(
                    "order {n} needs {} nodes, got {}",
                    n + 1,
                    t.len()
                )));
            }
            ExtensionScheme::with_nodes(a, t)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn chebyshev_t_values() {
        assert_eq!(chebyshev_t(0, 0.7), 1.0);
        assert!((chebyshev_t(2, 2.0) - 7.0).abs() < 1e-13);
        let v = chebyshev_t(8, 1.25);
        assert!((v - (128.0 + 1.0 / 512.0)).abs() < 1e-10, "{v}");
        // odd order, negative argument
        assert!((chebyshev_t(3, -2.0) - (4.0 * -8.0 + 6.0)).abs() < 1e-12);
    }

    #[test]
    fn chebyshev_t_branches_meet_at_one() {
        for n in 0..15 {
            let inside = chebyshev_t(n, 1.0);
            let outside = chebyshev_t(n, 1.0 + 1e-15);
            assert!((inside - outside).abs() < 1e-10);
            assert!((chebyshev_t(n, -1.0) - if n % 2 == 0 { 1.0 } else { -1.0 }).abs() < 1e-12);
        }
    }

    #[test]
    fn chebyshev_t_matches_recurrence() {
        for &x in &[-3.1, -1.0, -0.4, 0.0, 0.3, 0.99, 1.0, 1.7, 5.0] {
            let (mut t0, mut t1) = (1.0, x);
            for n in 2..12 {
                let t2 = 2.0 * x * t1 - t0;
                assert!(rel(chebyshev_t(n, x), t2) < 1e-11 || (chebyshev_t(n, x) - t2).abs() < 1e-12);
                t0 = t1;
                t1 = t2;
            }
        }
    }

    #[test]
    fn vandermonde_hand_solved() {
        assert_eq!(solve_vandermonde(&[0.0, 1.0], &[1.0, -1.0]).unwrap(), vec![2.0, -1.0]);
        let w = solve_vandermonde(&[0.0, 1.0, 2.0], &[1.0, -1.0, 1.0]).unwrap();
        for (a, b) in w.iter().zip([3.0, -3.0, 1.0]) {
            assert!((a - b).abs() < 1e-14);
        }
        let w = solve_vandermonde(&[0.0, 0.5], &[1.0, 1.0]).unwrap();
        assert!((w[0] + 1.0).abs() < 1e-15 && (w[1] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn vandermonde_errors() {
        assert_eq!(solve_vandermonde(&[0.0, 1.0, 1.0], &[1.0, -1.0, 1.0]), Err(Error::DegenerateNodes));
        assert!(matches!(solve_vandermonde(&[0.0, 1.0], &[1.0]), Err(Error::InvalidArgument(_))));
        assert_eq!(solve_vandermonde(&[0.0, 1e-300, 2e-300], &[1.0, -1.0, 1.0]), Err(Error::IllConditioned));
    }

    #[test]
    fn lagrange_weight_examples() {
        assert_eq!(lagrange_weights(&[0.0]).unwrap(), vec![1.0]);
        let w = lagrange_weights(&[0.0, 1.0, 2.0]).unwrap();
        for (a, b) in w.iter().zip([3.0, -3.0, 1.0]) {
            assert!((a - b).abs() < 1e-14);
        }
        // hand check of the three moment equations: w = [8/3, -2, 1/3]
        let w = lagrange_weights(&[0.0, 1.0, 3.0]).unwrap();
        for (a, b) in w.iter().zip([8.0 / 3.0, -2.0, 1.0 / 3.0]) {
            assert!((a - b).abs() < 1e-14, "{w:?}");
        }
        assert_eq!(lagrange_weights(&[0.0, 2.0, 2.0]), Err(Error::DegenerateNodes));
        assert_eq!(lagrange_weights(&[0.0, 2.0, 1.0]), Err(Error::NodesNotIncreasing));
    }

    #[test]
    fn node_examples() {
        assert_eq!(chebyshev_nodes(2, 2.0).unwrap(), vec![0.0, 1.0, 2.0]);
        assert_eq!(chebyshev_nodes(1, 5.0).unwrap(), vec![0.0, 5.0]);
        assert_eq!(chebyshev_nodes(0, 5.0).unwrap(), vec![0.0]);
        let t = chebyshev_nodes(4, 2.0).unwrap();
        let c = std::f64::consts::FRAC_1_SQRT_2;
        for (a, b) in t.iter().zip([0.0, 1.0 - c, 1.0, 1.0 + c, 2.0]) {
            assert!((a - b).abs() < 1e-15);
        }
        for n in 1..20 {
            let t = chebyshev_nodes(n, 3.7).unwrap();
            assert_eq!(t[0], 0.0);
            assert_eq!(t[n], 3.7);
            assert!(t.windows(2).all(|p| p[0] < p[1]));
        }
        assert!(chebyshev_nodes(3, 0.0).is_err());
    }

    #[test]
    fn optimal_weight_examples() {
        let w = optimal_weights(2, 2.0).unwrap();
        for (a, b) in w.iter().zip([3.0, -3.0, 1.0]) {
            assert!((a - b).abs() < 1e-13, "{w:?}");
        }
        let w = optimal_weights(1, 2.0).unwrap();
        assert!((w[0] - 1.5).abs() < 1e-14 && (w[1] + 0.5).abs() < 1e-14);
        let l1: f64 = optimal_weights(2, 2.0).unwrap().iter().map(|w| w.abs()).sum();
        assert!((l1 - 7.0).abs() < 1e-13);
    }

    #[test]
    fn closed_form_agrees_with_lagrange() {
        for n in 1..=12 {
            for a in [1.0, 2.5, 7.0, 16.0] {
                let w = optimal_weights(n, a).unwrap();
                let l = lagrange_weights(&chebyshev_nodes(n, a).unwrap()).unwrap();
                for (x, y) in w.iter().zip(&l) {
                    assert!(rel(*x, *y) < 1e-10, "n={n} a={a}");
                }
            }
        }
    }

    #[test]
    fn condition_number_examples() {
        assert!((condition_number(2, 2.0).unwrap() - 7.0).abs() < 1e-12);
        assert_eq!(condition_number(9, 2.0).unwrap().round(), 70226.0);
        assert_eq!(condition_number(0, 5.0).unwrap(), 1.0);
    }

    #[test]
    fn condition_number_decreases_with_reach() {
        for n in 1..10 {
            let c: Vec<f64> = (1..=8).map(|k| condition_number(n, 2.0 * k as f64).unwrap()).collect();
            assert!(c.windows(2).all(|p| p[1] < p[0]), "n={n}: {c:?}");
        }
    }

    #[test]
    fn make_scheme_examples() {
        let s = make_scheme(2, 2.0, None).unwrap();
        assert_eq!(s.nodes(), &[0.0, 1.0, 2.0]);
        assert!((s.cond() - 7.0).abs() < 1e-13);
        let s = make_scheme(0, 1.0, None).unwrap();
        assert_eq!(s.nodes(), &[0.0]);
        assert_eq!(s.weights(), &[1.0]);
        assert_eq!(s.cond(), 1.0);
        let s = make_scheme(2, 2.0, Some(&[0.0, 0.5, 2.0])).unwrap();
        assert!(s.cond() > 7.0);
        assert!(make_scheme(2, 2.0, Some(&[0.0, 0.5])).is_err());
        assert!(make_scheme(2, 2.0, Some(&[0.0, 0.5, 2.5])).is_err());
    }

    #[test]
    fn weight_signs_alternate() {
        for n in 1..=14 {
            for (i, w) in optimal_weights(n, 3.0).unwrap().iter().enumerate() {
                assert_eq!(w.signum(), if i % 2 == 0 { 1.0 } else { -1.0 });
            }
        }
    }
}
