//! Adaptive piecewise-Chebyshev resolution of a function ("chunks").

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Coefficients per panel used for the chunk-count diagnostics.
pub const CHUNK_COEFFS: usize = 24;
/// Relative tail tolerance used for the chunk-count diagnostics.
pub const CHUNK_TOL: f64 = 1e-6;
pub const MAX_DEPTH: usize = 40;

/// Number of uniform probes used to fix the global scale before refinement.
const SCALE_PROBES: usize = 2049;

/// One panel: Chebyshev coefficients of the interpolant on `[left, right]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Panel {
    pub left: f64,
    pub right: f64,
    pub coeffs: Vec<f64>,
}

impl Panel {
    pub fn eval(&self, x: f64) -> f64 {
        let u = (2.0 * x - self.left - self.right) / (self.right - self.left);
        clenshaw(&self.coeffs, u)
    }

    /// Largest magnitude among the last two coefficients.
    pub fn tail(&self) -> f64 {
        let k = self.coeffs.len();
        self.coeffs[k - 2].abs().max(self.coeffs[k - 1].abs())
    }
}

/// Adaptive partition of `[left, right]` into Chebyshev panels.
#[derive(Debug, Clone, PartialEq)]
pub struct PanelSet {
    left: f64,
    right: f64,
    panels: Vec<Panel>,
    tol: f64,
    k: usize,
    scale: f64,
}

impl PanelSet {
    pub fn interval(&self) -> (f64, f64) {
        (self.left, self.right)
    }

    pub fn panels(&self) -> &[Panel] {
        &self.panels
    }

    pub fn len(&self) -> usize {
        self.panels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.panels.is_empty()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn coeffs_per_panel(&self) -> usize {
        self.k
    }

    /// The global magnitude the tail tolerance was measured against.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Panel endpoints, `len() + 1` values from left to right.
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut b: Vec<f64> = self.panels.iter().map(|p| p.left).collect();
        b.push(self.right);
        b
    }

    /// Evaluates the interpolant; points outside the interval use the end panels.
    pub fn eval(&self, x: f64) -> f64 {
        let i = self
            .panels
            .partition_point(|p| p.right < x)
            .min(self.panels.len() - 1);
        self.panels[i].eval(x)
    }
}

fn clenshaw(c: &[f64], u: f64) -> f64 {
    let (mut b1, mut b2) = (0.0, 0.0);
    for &ck in c.iter().skip(1).rev() {
        let b0 = 2.0 * u * b1 - b2 + ck;
        b2 = b1;
        b1 = b0;
    }
    u * b1 - b2 + c[0]
}

/// Chebyshev coefficients of the degree `k-1` interpolant at the first-kind
/// points `cos(pi (j + 1/2) / k)`.
pub fn chebyshev_coefficients(values: &[f64]) -> Vec<f64> {
    let k = values.len();
    let kf = k as f64;
    (0..k)
        .map(|m| {
            let s: f64 = values
                .iter()
                .enumerate()
                .map(|(j, v)| v * (PI * m as f64 * (j as f64 + 0.5) / kf).cos())
                .sum();
            if m == 0 {
                s / kf
            } else {
                2.0 * s / kf
            }
        })
        .collect()
}

fn fit_panel<G>(g: &mut G, left: f64, right: f64, k: usize) -> Result<Panel>
where
    G: FnMut(f64) -> Result<f64>,
{
    let mid = 0.5 * (left + right);
    let half = 0.5 * (right - left);
    let values = (0..k)
        .map(|j| {
            let u = (PI * (j as f64 + 0.5) / k as f64).cos();
            g(mid + half * u)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Panel {
        left,
        right,
        coeffs: chebyshev_coefficients(&values),
    })
}

/// Adaptive chunking of a fallible function.
///
/// Panels are bisected until the last two Chebyshev coefficients fall
/// below `tol * scale`, where `scale` is `max |g|` over a uniform probe of
/// the whole interval.
pub fn try_adaptive_chunks<G>(
    mut g: G,
    left: f64,
    right: f64,
    k: usize,
    tol: f64,
    max_depth: usize,
) -> Result<PanelSet>
where
    G: FnMut(f64) -> Result<f64>,
{
    if k < 8 {
        return Err(Error::InvalidArgument(format!("need at least 8 coefficients per panel, got {k}")));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    if max_depth > MAX_DEPTH {
        return Err(Error::InvalidArgument(format!("max_depth {max_depth} exceeds {MAX_DEPTH}")));
    }
    if !(left.is_finite() && right.is_finite() && left < right) {
        return Err(Error::InvalidArgument(format!("bad interval [{left}, {right}]")));
    }

    let mut scale: f64 = 0.0;
    for i in 0..SCALE_PROBES {
        let x = left + (right - left) * i as f64 / (SCALE_PROBES - 1) as f64;
        scale = scale.max(g(x)?.abs());
    }
    let threshold = tol * scale;

    let mut accepted = Vec::new();
    let mut stack = vec![(left, right, 0usize)];
    while let Some((a, b, depth)) = stack.pop() {
        let panel = fit_panel(&mut g, a, b, k)?;
        if panel.tail() <= threshold {
            accepted.push(panel);
        } else if depth >= max_depth {
            return Err(Error::NotResolvable {
                left: a,
                right: b,
                depth,
            });
        } else {
            let m = 0.5 * (a + b);
            stack.push((m, b, depth + 1));
            stack.push((a, m, depth + 1));
        }
    }
    accepted.sort_by(|p, q| p.left.total_cmp(&q.left));
    Ok(PanelSet {
        left,
        right,
        panels: accepted,
        tol,
        k,
        scale,
    })
}

/// [`try_adaptive_chunks`] for an infallible function.
pub fn adaptive_chunks<G>(g: G, left: f64, right: f64, k: usize, tol: f64, max_depth: usize) -> Result<PanelSet>
where
    G: Fn(f64) -> f64,
{
    try_adaptive_chunks(|x| Ok(g(x)), left, right, k, tol, max_depth)
}
