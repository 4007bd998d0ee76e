//! Shared reference data and oracles for the integration tests.
#![allow(dead_code)]

use num::bigint::BigInt;
use num::rational::Ratio;
use num::{One, ToPrimitive, Zero};

/// Published condition numbers: rows a = 2, 4, ..., 16; columns n = 2..=9.
/// Entries shown with one decimal are compared to one decimal, the rest to
/// the nearest integer.
pub const TABLE1: [[f64; 8]; 8] = [
    [7.0, 26.0, 97.0, 362.0, 1351.0, 5042.0, 18817.0, 70226.0],
    [3.5, 9.0, 24.0, 62.0, 161.0, 422.0, 1104.0, 2889.0],
    [2.6, 5.5, 12.0, 27.0, 59.0, 131.0, 290.0, 642.0],
    [2.1, 4.1, 8.0, 16.0, 32.0, 64.0, 128.0, 256.0],
    [1.9, 3.3, 6.0, 11.0, 21.0, 39.0, 73.0, 135.0],
    [1.7, 2.9, 5.0, 9.0, 15.0, 27.0, 48.0, 84.0],
    [1.6, 2.5, 4.0, 7.0, 12.0, 20.0, 34.0, 58.0],
    [1.5, 2.3, 4.0, 6.0, 10.0, 16.0, 26.0, 43.0],
];

/// Columns n = 2, 3 carry one decimal.
pub fn table1_decimals(n: usize) -> i32 {
    if n <= 3 {
        1
    } else {
        0
    }
}

pub fn round_to(v: f64, decimals: i32) -> f64 {
    let s = 10f64.powi(decimals);
    (v * s).round() / s
}

type Q = Ratio<BigInt>;

/// Exact `l_i(-1)` for the given (exactly representable) nodes, rounded once to f64.
pub fn exact_lagrange_weights(nodes: &[f64]) -> Vec<f64> {
    let t: Vec<Q> = nodes.iter().map(|&x| Q::from_float(x).unwrap()).collect();
    let minus_one = -Q::one();
    (0..t.len())
        .map(|i| {
            let mut num = Q::one();
            let mut den = Q::one();
            for (j, tj) in t.iter().enumerate() {
                if j != i {
                    num *= &minus_one - tj;
                    den *= &t[i] - tj;
                }
            }
            assert!(!den.is_zero());
            (num / den).to_f64().unwrap()
        })
        .collect()
}

/// `J0(x) = (1/pi) int_0^pi cos(x sin theta) d theta` by the trapezoid rule,
/// which converges geometrically for this periodic integrand.
pub fn j0_trapezoid(x: f64, panels: usize) -> f64 {
    let h = std::f64::consts::PI / panels as f64;
    // both endpoints contribute cos(0) / 2
    let mut s = 1.0;
    for k in 1..panels {
        s += (x * (k as f64 * h).sin()).cos();
    }
    s * h / std::f64::consts::PI
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

use cnext::diagnostics::{one_sided_amplification, one_sided_derivatives};
use cnext::extend1d::{extend_point, Extension1DConfig};

/// Mismatch of the order-`k` one-sided derivatives at 0 between the
/// extension (left) and `f` (right) at one step, with its rounding-noise
/// estimate.
#[derive(Debug, Clone, Copy)]
pub struct StepMismatch {
    pub h: f64,
    pub mismatch: f64,
    pub noise: f64,
}

/// Derivative mismatches of orders `0..=order` for steps `h0 / 2^j`,
/// `j = 0..steps`, using one-sided stencils of `order + 4` points.
pub fn derivative_mismatches<F: Fn(f64) -> f64>(
    f: &F,
    cfg: &Extension1DConfig,
    order: usize,
    h0: f64,
    steps: usize,
) -> Vec<Vec<StepMismatch>> {
    let len = order + 4;
    let cond = cfg.scheme().cond();
    let mut out = vec![Vec::new(); order + 1];
    let mut h = h0;
    for _ in 0..steps {
        let left: Vec<f64> = (0..len).map(|j| extend_point(f, cfg, -(j as f64) * h).unwrap()).collect();
        let right: Vec<f64> = (0..len).map(|j| f(j as f64 * h)).collect();
        let fmax = left.iter().chain(&right).fold(0.0f64, |m, v| m.max(v.abs()));
        let dl = one_sided_derivatives(&left, -h, order);
        let dr = one_sided_derivatives(&right, h, order);
        let amp = one_sided_amplification(len, h, order);
        for k in 0..=order {
            out[k].push(StepMismatch {
                h,
                mismatch: (dl[k] - dr[k]).abs(),
                noise: 16.0 * (order as f64 + 2.0) * amp[k] * f64::EPSILON * (1.0 + cond) * fmax,
            });
        }
        h *= 0.5;
    }
    out
}

/// Index of the first step at which the mismatch is within the noise estimate.
pub fn floor_index(rows: &[StepMismatch]) -> Option<usize> {
    rows.iter().position(|r| r.mismatch <= r.noise)
}

/// The mismatch reaches the noise floor, and over the (up to) three
/// halvings before it each halving reduces it at least twofold.
pub fn fd_consistent(rows: &[StepMismatch]) -> Result<usize, String> {
    let j = floor_index(rows).ok_or_else(|| {
        let best = rows.iter().map(|r| r.mismatch / r.noise).fold(f64::INFINITY, f64::min);
        format!("never reaches the noise floor (best mismatch/noise {best:.1e})")
    })?;
    for i in j.saturating_sub(3)..j {
        if rows[i + 1].mismatch > 0.5 * rows[i].mismatch || rows[i + 1].mismatch.is_nan() {
            return Err(format!(
                "mismatch {:.2e} at h={:.2e} does not halve from {:.2e}",
                rows[i + 1].mismatch, rows[i + 1].h, rows[i].mismatch
            ));
        }
    }
    Ok(j)
}
