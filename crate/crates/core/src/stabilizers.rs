//! Shrinking map and window functions.
//!
//! The shrinking map `psi = s^{-1}` with `s(x) = x + (x/delta)^{n+1} (1 - delta)`
//! compresses the normal coordinate from `[0, 1]` onto `[0, delta]` while
//! keeping `psi(0) = 0`, `psi'(0) = 1` and `psi^{(j)}(0) = 0` for `j = 2..=n`,
//! so an extension composed with it keeps its derivatives at the boundary.

use crate::diagnostics::{adaptive_chunks, PanelSet};
use crate::error::{Error, Result};
use std::f64::consts::PI;

const PSI_MAX_ITER: usize = 200;
const SECANT_ITER: usize = 100;
const TABLE_PANEL_COEFFS: usize = 16;

fn check_delta(delta: f64) -> Result<()> {
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(Error::Domain {
            what: "delta",
            value: delta,
            lo: 0.0,
            hi: 1.0,
        });
    }
    Ok(())
}

#[inline]
fn s_unchecked(x: f64, delta: f64, n: usize) -> f64 {
    x + (x / delta).powi(n as i32 + 1) * (1.0 - delta)
}

/// `s(x) = x + (x/delta)^{n+1} (1 - delta)` on `[0, delta]`.
pub fn shrink_forward(x: f64, delta: f64, n: usize) -> Result<f64> {
    check_delta(delta)?;
    if !(0.0..=delta).contains(&x) {
        return Err(Error::Domain {
            what: "x",
            value: x,
            lo: 0.0,
            hi: delta,
        });
    }
    Ok(s_unchecked(x, delta, n))
}

/// `psi(x) = s^{-1}(x)` by secant iteration from `0` and `delta`.
///
/// The iteration keeps a bracket and falls back to bisection whenever a
/// secant step leaves it or the secant phase runs past its budget.
pub fn shrink_psi(x: f64, delta: f64, n: usize) -> Result<f64> {
    check_delta(delta)?;
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain {
            what: "x",
            value: x,
            lo: 0.0,
            hi: 1.0,
        });
    }
    Ok(psi_unchecked(x, delta, n))
}

fn psi_unchecked(x: f64, delta: f64, n: usize) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if x == 1.0 {
        return delta;
    }
    if delta == 1.0 {
        return x;
    }
    let tol = 1e-15 * x.max(1.0);
    let g = |y: f64| s_unchecked(y, delta, n) - x;

    let (mut lo, mut hi) = (0.0, delta);
    let (mut y0, mut g0) = (0.0, -x);
    let (mut y1, mut g1) = (delta, 1.0 - x);
    for iter in 0..PSI_MAX_ITER {
        let secant = if g1 != g0 { y1 - g1 * (y1 - y0) / (g1 - g0) } else { f64::NAN };
        let y2 = if iter < SECANT_ITER && secant > lo && secant < hi {
            secant
        } else {
            0.5 * (lo + hi)
        };
        let g2 = g(y2);
        if g2.abs() <= tol {
            return y2;
        }
        if g2 < 0.0 {
            lo = y2;
        } else {
            hi = y2;
        }
        if hi - lo <= 2.0 * f64::EPSILON * hi {
            return 0.5 * (lo + hi);
        }
        (y0, g0) = (y1, g1);
        (y1, g1) = (y2, g2);
    }
    0.5 * (lo + hi)
}

/// Shrinking map with an optional precomputed piecewise-Chebyshev table.
#[derive(Debug, Clone)]
pub struct ShrinkMap {
    delta: f64,
    order: usize,
    table: Option<PanelSet>,
}

impl ShrinkMap {
    /// Root-finding evaluation only.
    pub fn new(delta: f64, n: usize) -> Result<Self> {
        check_delta(delta)?;
        Ok(Self {
            delta,
            order: n,
            table: None,
        })
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn table(&self) -> Option<&PanelSet> {
        self.table.as_ref()
    }

    /// `psi(x)` for `x` in `[0, 1]`, from the table when one was built.
    pub fn psi(&self, x: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::Domain {
                what: "x",
                value: x,
                lo: 0.0,
                hi: 1.0,
            });
        }
        Ok(self.psi_in_range(x))
    }

    pub(crate) fn psi_in_range(&self, x: f64) -> f64 {
        match &self.table {
            _ if x <= 0.0 => 0.0,
            _ if x >= 1.0 => self.delta,
            Some(t) => t.eval(x),
            None => psi_unchecked(x, self.delta, self.order),
        }
    }

    pub fn forward(&self, x: f64) -> Result<f64> {
        shrink_forward(x, self.delta, self.order)
    }
}

/// Builds a shrink map whose table matches the root finder to `tol` on `[0, 1]`.
pub fn build_shrink_table(delta: f64, n: usize, tol: f64) -> Result<ShrinkMap> {
    check_delta(delta)?;
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    if tol < 1e-14 {
        return Err(Error::ToleranceTooSmall);
    }
    // Tail coefficients are judged relative to max|psi| = delta; leave a
    // factor of ten for the interpolation error beyond the tail.
    let rel = 0.1 * tol / delta;
    let table = adaptive_chunks(|x| psi_unchecked(x, delta, n), 0.0, 1.0, TABLE_PANEL_COEFFS, rel, 40)?;
    Ok(ShrinkMap {
        delta,
        order: n,
        table: Some(table),
    })
}

/// Roll-off parameters of the window: `1` up to `r0`, `0` from `r1` on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowSpec {
    r0: f64,
    r1: f64,
}

impl WindowSpec {
    pub fn new(r0: f64, r1: f64) -> Result<Self> {
        if !(r0.is_finite() && r1.is_finite() && r0 >= 0.0 && r1 > r0) {
            return Err(Error::InvalidArgument(format!(
                "window needs 0 <= r0 < r1, got r0={r0}, r1={r1}"
            )));
        }
        Ok(Self { r0, r1 })
    }

    pub fn r0(&self) -> f64 {
        self.r0
    }

    pub fn r1(&self) -> f64 {
        self.r1
    }

    pub fn eval(&self, x: f64) -> f64 {
        window(x, self)
    }
}

/// `erfc`-based window.
///
/// Between the plateaus the value is `erfc(12/pi * asin(u)) / 2`, with `u`
/// running from `-1` at `r0` to `1` at `r1` and `erfc` the standard
/// complementary error function (`erfc(-inf) = 2`). The seams are then
/// continuous to `erfc(6) / 2 ~ 1e-17`.
pub fn window(x: f64, spec: &WindowSpec) -> f64 {
    let (r0, r1) = (spec.r0, spec.r1);
    if x <= r0 {
        return 1.0;
    }
    if x >= r1 {
        return 0.0;
    }
    let u = ((x - 0.5 * (r0 + r1)) / (0.5 * (r1 - r0))).clamp(-1.0, 1.0);
    0.5 * libm::erfc(12.0 / PI * u.asin())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forward_examples() {
        assert_eq!(shrink_forward(0.0, 0.5, 3).unwrap(), 0.0);
        assert_eq!(shrink_forward(0.5, 0.5, 3).unwrap(), 1.0);
        assert!((shrink_forward(0.25, 0.5, 3).unwrap() - 0.28125).abs() < 1e-16);
        assert!(matches!(shrink_forward(0.6, 0.5, 3), Err(Error::Domain { .. })));
        assert!(matches!(shrink_forward(-0.1, 0.5, 3), Err(Error::Domain { .. })));
    }

    #[test]
    fn psi_examples() {
        assert_eq!(shrink_psi(0.0, 0.5, 3).unwrap(), 0.0);
        assert_eq!(shrink_psi(1.0, 0.5, 3).unwrap(), 0.5);
        assert!((shrink_psi(0.28125, 0.5, 3).unwrap() - 0.25).abs() < 1e-15);
        assert!(shrink_psi(1.5, 0.5, 3).is_err());
        assert!(shrink_psi(0.5, 0.0, 3).is_err());
        assert!((shrink_psi(0.3, 1.0, 3).unwrap() - 0.3).abs() == 0.0);
    }

    #[test]
    fn psi_residual_is_tight() {
        for &(delta, n) in &[(0.5, 3), (0.25, 9), (0.05, 9), (0.025, 9), (0.025, 20)] {
            for i in 0..=500 {
                let x = i as f64 / 500.0;
                let y = shrink_psi(x, delta, n).unwrap();
                assert!((0.0..=delta).contains(&y));
                let r = (shrink_forward(y, delta, n).unwrap() - x).abs();
                assert!(r <= 1e-14 * x.max(1.0), "delta={delta} n={n} x={x} r={r}");
            }
        }
    }

    #[test]
    fn shrink_table_matches_root_finder() {
        let map = build_shrink_table(0.5, 3, 1e-12).unwrap();
        assert_eq!(map.psi(0.0).unwrap(), 0.0);
        assert_eq!(map.psi(1.0).unwrap(), 0.5);
        for i in 0..=1000 {
            let x = i as f64 / 1000.0;
            let e = (map.psi(x).unwrap() - shrink_psi(x, 0.5, 3).unwrap()).abs();
            assert!(e <= 1e-12, "x={x} e={e}");
        }
        assert_eq!(build_shrink_table(0.5, 3, 1e-15).unwrap_err(), Error::ToleranceTooSmall);
    }

    #[test]
    fn window_examples() {
        let w = WindowSpec::new(0.2, 1.0).unwrap();
        assert_eq!(window(0.2, &w), 1.0);
        assert_eq!(window(1.0, &w), 0.0);
        assert!((window(0.6, &w) - 0.5).abs() < 1e-15);
        assert!((window(0.2 + 1e-12, &w) - 1.0).abs() <= 1e-15);
        assert!(window(1.0 - 1e-12, &w).abs() <= 1e-15);
        assert!(WindowSpec::new(0.5, 0.5).is_err());
        assert!(WindowSpec::new(-0.1, 0.5).is_err());
    }

    #[test]
    fn window_is_symmetric_about_midpoint() {
        let w = WindowSpec::new(1e-6, 0.25).unwrap();
        let mid = 0.5 * (1e-6 + 0.25);
        for i in 1..100 {
            let d = i as f64 * 0.0012;
            let s = window(mid - d, &w) + window(mid + d, &w);
            assert!((s - 1.0).abs() < 1e-14);
        }
    }
}
