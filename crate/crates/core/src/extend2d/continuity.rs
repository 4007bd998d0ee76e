//! Finite-difference check that normal derivatives match across the boundary.

use super::{Extension2D, Point2};
use crate::diagnostics::{one_sided_amplification, one_sided_derivatives};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderMismatch {
    pub order: usize,
    /// Largest `|d^k E/dx^k (0+) - d^k f/dx^k (0-)|` over the probes.
    pub mismatch: f64,
    /// Largest one-sided derivative magnitude seen, for scale.
    pub scale: f64,
    /// Largest ratio of mismatch to its finite-difference error budget.
    pub worst_ratio: f64,
    /// Error budget at the probe attaining `worst_ratio`.
    pub threshold: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContinuityReport {
    pub probes: usize,
    pub step: f64,
    pub stencil_len: usize,
    pub orders: Vec<OrderMismatch>,
}

impl ContinuityReport {
    /// Every order stays within its finite-difference error budget.
    pub fn passes(&self) -> bool {
        self.orders.iter().all(|o| o.worst_ratio <= 1.0)
    }

    pub fn max_mismatch(&self) -> f64 {
        self.orders.iter().map(|o| o.mismatch).fold(0.0, f64::max)
    }
}

/// Compares one-sided normal derivatives of orders `0..=n` at `probes`
/// boundary points spaced uniformly in parameter.
///
/// Each side uses a one-sided stencil of `n + 4` points with step `h`
/// (spanning `0.45 * reach`) and again with step `2h`. The budget for order
/// `k` is twice the observed change between the two steps on both sides
/// (a truncation-error estimate) plus a rounding bound built from the
/// stencil's weight sum and the scheme's condition number.
pub fn normal_continuity<F>(ext: &Extension2D, f: &F, probes: usize) -> Result<ContinuityReport>
where
    F: Fn(Point2) -> f64 + ?Sized,
{
    normal_continuity_to_order(ext, f, probes, ext.scheme().order())
}

/// [`normal_continuity`] for orders `0..=max_order`, which may exceed the
/// order the scheme provides.
pub fn normal_continuity_to_order<F>(
    ext: &Extension2D,
    f: &F,
    probes: usize,
    max_order: usize,
) -> Result<ContinuityReport>
where
    F: Fn(Point2) -> f64 + ?Sized,
{
    if probes == 0 {
        return Err(Error::InvalidArgument("need at least one probe".into()));
    }
    let n = max_order;
    let len = n + 4;
    let h = 0.45 * ext.reach() / (2 * (len - 1)) as f64;
    let amp = one_sided_amplification(len, h, n);
    let cond = ext.scheme().cond();
    let noise_factor = 16.0 * (n as f64 + 2.0) * f64::EPSILON * (1.0 + cond);

    let mut orders: Vec<OrderMismatch> = (0..=n)
        .map(|order| OrderMismatch {
            order,
            mismatch: 0.0,
            scale: 0.0,
            worst_ratio: 0.0,
            threshold: 0.0,
        })
        .collect();

    for i in 0..probes {
        let theta = TAU * i as f64 / probes as f64;
        let y = ext.curve().position(theta);
        let normal = ext.curve().normal(theta);
        let base_out = ext.along_normal(f, theta, 0.0, y)?;

        let inside = |step: f64| -> Vec<f64> { (0..len).map(|j| f(y - normal * (step * j as f64))).collect() };
        let outside = |step: f64| -> Result<Vec<f64>> {
            let mut v = vec![base_out];
            for j in 1..len {
                v.push(ext.value_at(f, y + normal * (step * j as f64))?.0);
            }
            Ok(v)
        };
        let (in1, in2) = (inside(h), inside(2.0 * h));
        let (out1, out2) = (outside(h)?, outside(2.0 * h)?);
        let din1 = one_sided_derivatives(&in1, -h, n);
        let din2 = one_sided_derivatives(&in2, -2.0 * h, n);
        let dout1 = one_sided_derivatives(&out1, h, n);
        let dout2 = one_sided_derivatives(&out2, 2.0 * h, n);
        let fmax = in2.iter().chain(&in1).map(|v| v.abs()).fold(0.0, f64::max);

        for (k, o) in orders.iter_mut().enumerate() {
            let mismatch = (dout1[k] - din1[k]).abs();
            let trunc = (din1[k] - din2[k]).abs() + (dout1[k] - dout2[k]).abs();
            let threshold = 2.0 * trunc + noise_factor * amp[k] * fmax.max(f64::MIN_POSITIVE);
            let ratio = mismatch / threshold;
            o.mismatch = o.mismatch.max(mismatch);
            o.scale = o.scale.max(din1[k].abs()).max(dout1[k].abs());
            if ratio >= o.worst_ratio {
                o.worst_ratio = ratio;
                o.threshold = threshold;
            }
        }
    }
    Ok(ContinuityReport {
        probes,
        step: h,
        stencil_len: len,
        orders,
    })
}
