//! Extension across a smooth closed curve along its normals.
//!
//! A point `q = y + x n_y` near the boundary (closest point `y`, outward
//! normal `n_y`, signed distance `x > 0`) receives
//!
//! ```text
//! E[f](q) = ( sum_j w_j f(y - t_j x n_y) ) phi_g(x)
//! ```
//!
//! The closest point comes from a global coarse scan refined by Newton's
//! method, so star-shaped boundaries with several local distance minima are
//! handled. Higher-dimensional boundaries would replace [`ParametricCurve`]
//! with a surface chart and `theta` with its parameters; nothing else in the
//! formula changes.

mod continuity;
mod curve;

pub use continuity::{normal_continuity, normal_continuity_to_order, ContinuityReport, OrderMismatch};
pub use curve::{
    parse_boundary_samples, CurveShape, Jet, ParametricCurve, Point2, TrigSeries, COARSE_SAMPLES,
    CURVATURE_SAMPLES,
};

use crate::error::{Error, Result};
use crate::scheme::ExtensionScheme;
use crate::stabilizers::WindowSpec;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

const NEWTON_MAX_ITER: usize = 50;
const GOLDEN_MAX_ITER: usize = 200;
/// Slack on the signed distance when deciding that a sample lies in the closed domain.
const INSIDE_SLACK: f64 = 1e-10;

/// Tube chart of a point: closest boundary parameter and signed distance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TubeCoordinates {
    pub theta: f64,
    /// Signed normal distance, positive outside.
    pub x: f64,
    pub valid: bool,
}

fn wrap_angle(t: f64) -> f64 {
    let r = t.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

fn dist_sq(curve: &ParametricCurve, q: Point2, t: f64) -> f64 {
    (curve.position(t) - q).norm_sq()
}

fn golden_section(curve: &ParametricCurve, q: Point2, mut a: f64, mut b: f64) -> f64 {
    let inv_phi = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (dist_sq(curve, q, c), dist_sq(curve, q, d));
    for _ in 0..GOLDEN_MAX_ITER {
        if (b - a).abs() <= 4.0 * f64::EPSILON * (1.0 + a.abs()) {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = dist_sq(curve, q, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = dist_sq(curve, q, d);
        }
    }
    0.5 * (a + b)
}

/// Global closest point: `(theta, signed distance)`.
pub fn closest_point(curve: &ParametricCurve, q: Point2) -> Result<(f64, f64)> {
    let coarse = curve.coarse();
    let m = coarse.len();
    let (best, _) = coarse
        .iter()
        .enumerate()
        .map(|(i, p)| (i, (*p - q).norm_sq()))
        .fold((0, f64::INFINITY), |acc, c| if c.1 < acc.1 { c } else { acc });
    let h = TAU / m as f64;
    let t0 = best as f64 * h;
    let (lo, hi) = (t0 - h, t0 + h);

    // Newton on the stationarity condition (p - q) . p' = 0. Once the step is
    // below 1e-9 one more step reaches machine precision.
    let mut t = t0;
    let mut converged = false;
    let mut polishing = false;
    for _ in 0..NEWTON_MAX_ITER {
        let j = curve.jet(t);
        let d = j.p - q;
        let g = d.dot(j.dp);
        let dg = j.dp.norm_sq() + d.dot(j.ddp);
        if !(dg > 0.0) {
            break;
        }
        let step = g / dg;
        let next = t - step;
        if !(next > lo && next < hi) {
            break;
        }
        t = next;
        if polishing || step.abs() <= 4.0 * f64::EPSILON * (1.0 + t.abs()) {
            converged = true;
            break;
        }
        polishing = step.abs() <= 1e-9;
    }
    if !converged {
        t = golden_section(curve, q, lo, hi);
    }

    let j = curve.jet(t);
    let speed = j.dp.norm();
    if !(speed > 1e-12 * curve.min_speed().max(1e-300)) {
        return Err(Error::DegenerateParametrization { theta: wrap_angle(t) });
    }
    let normal = Point2::new(j.dp.y, -j.dp.x) * (1.0 / speed);
    Ok((wrap_angle(t), (q - j.p).dot(normal)))
}

/// Tube chart of `q`; `valid` when `|x| < reach`.
pub fn tube_project(curve: &ParametricCurve, q: Point2, reach: f64) -> Result<TubeCoordinates> {
    check_tube_reach(curve, reach)?;
    let (theta, x) = closest_point(curve, q)?;
    Ok(TubeCoordinates {
        theta,
        x,
        valid: x.abs() < reach,
    })
}

fn check_tube_reach(curve: &ParametricCurve, reach: f64) -> Result<()> {
    let limit = 1.0 / curve.max_curvature();
    if !(reach > 0.0 && reach < limit) {
        return Err(Error::InvalidArgument(format!(
            "reach {reach} must lie in (0, 1/max curvature = {limit}); suggested reach {}",
            curve.default_reach()
        )));
    }
    Ok(())
}

/// Rectangular lattice, row-major with `x` varying fastest.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid2 {
    pub nx: usize,
    pub ny: usize,
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
}

impl Grid2 {
    pub fn new(nx: usize, ny: usize, x_range: (f64, f64), y_range: (f64, f64)) -> Result<Self> {
        if nx < 2 || ny < 2 {
            return Err(Error::InvalidArgument("grid needs at least 2 points per axis".into()));
        }
        if !(x_range.0 < x_range.1 && y_range.0 < y_range.1) {
            return Err(Error::InvalidArgument("grid ranges must be increasing".into()));
        }
        Ok(Self {
            nx,
            ny,
            x_range,
            y_range,
        })
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn point(&self, i: usize) -> Point2 {
        let (ix, iy) = (i % self.nx, i / self.nx);
        let fx = ix as f64 / (self.nx - 1) as f64;
        let fy = iy as f64 / (self.ny - 1) as f64;
        Point2::new(
            self.x_range.0 + fx * (self.x_range.1 - self.x_range.0),
            self.y_range.0 + fy * (self.y_range.1 - self.y_range.0),
        )
    }

    pub fn points(&self) -> impl Iterator<Item = Point2> + '_ {
        (0..self.len()).map(|i| self.point(i))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Region {
    Inside,
    Tube,
    Outside,
}

impl Region {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Inside => "inside",
            Self::Tube => "tube",
            Self::Outside => "outside",
        }
    }
}

/// Normal extension across a curve.
#[derive(Debug, Clone)]
pub struct Extension2D {
    curve: ParametricCurve,
    scheme: ExtensionScheme,
    reach: f64,
    window: Option<WindowSpec>,
}

impl Extension2D {
    pub fn new(curve: ParametricCurve, scheme: ExtensionScheme, reach: f64, window: Option<WindowSpec>) -> Result<Self> {
        check_tube_reach(&curve, reach)?;
        Ok(Self {
            curve,
            scheme,
            reach,
            window,
        })
    }

    /// Uses the curve's default reach `0.5 / max |curvature|`.
    pub fn with_default_reach(curve: ParametricCurve, scheme: ExtensionScheme, window: Option<WindowSpec>) -> Result<Self> {
        let reach = curve.default_reach();
        Self::new(curve, scheme, reach, window)
    }

    pub fn curve(&self) -> &ParametricCurve {
        &self.curve
    }

    pub fn scheme(&self) -> &ExtensionScheme {
        &self.scheme
    }

    pub fn reach(&self) -> f64 {
        self.reach
    }

    pub fn window(&self) -> Option<&WindowSpec> {
        self.window.as_ref()
    }

    /// Whether `q` lies in the closed domain.
    pub fn contains(&self, q: Point2) -> Result<bool> {
        Ok(closest_point(&self.curve, q)?.1 <= INSIDE_SLACK)
    }

    /// Extension along the normal at `theta` to signed distance `x >= 0`,
    /// without looking up the closest point.
    pub fn along_normal<F>(&self, f: &F, theta: f64, x: f64, query: Point2) -> Result<f64>
    where
        F: Fn(Point2) -> f64 + ?Sized,
    {
        let y = self.curve.position(theta);
        let n = self.curve.normal(theta);
        let mut sum = 0.0;
        for (&w, &t) in self.scheme.weights().iter().zip(self.scheme.nodes()) {
            let s = y - n * (t * x);
            if t > 0.0 && !self.contains(s)? {
                return Err(Error::SampleOutsideDomain {
                    x: s.x,
                    y: s.y,
                    qx: query.x,
                    qy: query.y,
                    suggested_reach: 0.5 * self.reach,
                });
            }
            sum += w * f(s);
        }
        let win = self.window.map_or(1.0, |w| w.eval(x));
        Ok(sum * win)
    }

    /// Value of the extended field at `q`.
    pub fn value_at<F>(&self, f: &F, q: Point2) -> Result<(f64, Region)>
    where
        F: Fn(Point2) -> f64 + ?Sized,
    {
        let (theta, x) = closest_point(&self.curve, q)?;
        if x <= 0.0 {
            Ok((f(q), Region::Inside))
        } else if x <= self.reach {
            Ok((self.along_normal(f, theta, x, q)?, Region::Tube))
        } else {
            Ok((0.0, Region::Outside))
        }
    }
}

/// Extended field on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldValues {
    pub grid: Grid2,
    pub values: Vec<f64>,
    pub regions: Vec<Region>,
}

/// Evaluates the extension at every grid point: `f` inside, the normal
/// extension in the tube, zero beyond it. Grid points are processed in
/// parallel; `f` must tolerate concurrent calls.
pub fn extend_field<F>(f: &F, ext: &Extension2D, grid: &Grid2) -> Result<FieldValues>
where
    F: Fn(Point2) -> f64 + Sync + ?Sized,
{
    let results: Vec<(f64, Region)> = (0..grid.len())
        .into_par_iter()
        .map(|i| ext.value_at(f, grid.point(i)))
        .collect::<Result<_>>()?;
    let (values, regions) = results.into_iter().unzip();
    Ok(FieldValues {
        grid: *grid,
        values,
        regions,
    })
}
