//! Smooth closed boundary curves in the plane.

use crate::error::{Error, Result};
use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, o: Self) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Self) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn rotated(self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

impl Add for Point2 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Point2 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.x * s, self.y * s)
    }
}

impl Mul<Point2> for f64 {
    type Output = Point2;
    fn mul(self, p: Point2) -> Point2 {
        p * self
    }
}

/// Position and its first two parameter derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub p: Point2,
    pub dp: Point2,
    pub ddp: Point2,
}

/// Trigonometric interpolant through uniformly spaced samples.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigSeries {
    // cos/sin coefficients for x and y, index k = 0..=m/2
    ax: Vec<f64>,
    bx: Vec<f64>,
    ay: Vec<f64>,
    by: Vec<f64>,
}

impl TrigSeries {
    /// Fits `m` samples taken at `theta_j = 2 pi j / m`. `m` must be a power
    /// of two and at least 8.
    pub fn from_samples(points: &[Point2]) -> Result<Self> {
        let m = points.len();
        if m < 8 || !m.is_power_of_two() {
            return Err(Error::InvalidArgument(format!(
                "boundary sample count must be a power of two >= 8, got {m}"
            )));
        }
        let half = m / 2;
        let fft = FftPlanner::new().plan_fft_forward(m);
        let mut xs: Vec<Complex64> = points.iter().map(|q| Complex64::new(q.x, 0.0)).collect();
        let mut ys: Vec<Complex64> = points.iter().map(|q| Complex64::new(q.y, 0.0)).collect();
        fft.process(&mut xs);
        fft.process(&mut ys);
        let mut ax = vec![0.0; half + 1];
        let mut bx = vec![0.0; half + 1];
        let mut ay = vec![0.0; half + 1];
        let mut by = vec![0.0; half + 1];
        for k in 0..=half {
            // X_k = sum_j x_j (cos - i sin)(2 pi j k / m)
            let f = if k == 0 || k == half { 1.0 } else { 2.0 } / m as f64;
            ax[k] = xs[k].re * f;
            ay[k] = ys[k].re * f;
            if k != 0 && k != half {
                bx[k] = -xs[k].im * f;
                by[k] = -ys[k].im * f;
            }
        }
        Ok(Self { ax, bx, ay, by })
    }

    fn jet(&self, t: f64) -> Jet {
        let mut j = Jet {
            p: Point2::new(self.ax[0], self.ay[0]),
            dp: Point2::default(),
            ddp: Point2::default(),
        };
        for k in 1..self.ax.len() {
            let kf = k as f64;
            let (s, c) = (kf * t).sin_cos();
            let vx = self.ax[k] * c + self.bx[k] * s;
            let vy = self.ay[k] * c + self.by[k] * s;
            let dx = kf * (-self.ax[k] * s + self.bx[k] * c);
            let dy = kf * (-self.ay[k] * s + self.by[k] * c);
            j.p = j.p + Point2::new(vx, vy);
            j.dp = j.dp + Point2::new(dx, dy);
            j.ddp = j.ddp - Point2::new(vx, vy) * (kf * kf);
        }
        j
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CurveShape {
    Circle { radius: f64 },
    Ellipse { semi_x: f64, semi_y: f64 },
    /// `r(theta) = radius (1 + amplitude cos(lobes theta))`
    Star { radius: f64, amplitude: f64, lobes: u32 },
    Trigonometric(TrigSeries),
}

impl CurveShape {
    fn jet(&self, t: f64) -> Jet {
        let (s, c) = t.sin_cos();
        let radial = |r: f64, dr: f64, ddr: f64| {
            let e = Point2::new(c, s);
            let et = Point2::new(-s, c);
            Jet {
                p: e * r,
                dp: e * dr + et * r,
                ddp: e * (ddr - r) + et * (2.0 * dr),
            }
        };
        match self {
            Self::Circle { radius } => radial(*radius, 0.0, 0.0),
            Self::Ellipse { semi_x, semi_y } => Jet {
                p: Point2::new(semi_x * c, semi_y * s),
                dp: Point2::new(-semi_x * s, semi_y * c),
                ddp: Point2::new(-semi_x * c, -semi_y * s),
            },
            Self::Star {
                radius,
                amplitude,
                lobes,
            } => {
                let k = *lobes as f64;
                let (sk, ck) = (k * t).sin_cos();
                radial(
                    radius * (1.0 + amplitude * ck),
                    -radius * amplitude * k * sk,
                    -radius * amplitude * k * k * ck,
                )
            }
            Self::Trigonometric(series) => series.jet(t),
        }
    }
}

/// Samples used by the coarse closest-point scan.
pub const COARSE_SAMPLES: usize = 512;
/// Samples used to estimate the maximum curvature.
pub const CURVATURE_SAMPLES: usize = 1024;

/// Counterclockwise, regular, closed curve `p(theta)`, `theta` in `[0, 2 pi)`.
#[derive(Debug, Clone)]
pub struct ParametricCurve {
    shape: CurveShape,
    center: Point2,
    rotation: f64,
    coarse: Vec<Point2>,
    max_curvature: f64,
    min_speed: f64,
}

impl ParametricCurve {
    fn build(shape: CurveShape, center: Point2, rotation: f64) -> Result<Self> {
        let mut curve = Self {
            shape,
            center,
            rotation,
            coarse: Vec::new(),
            max_curvature: 0.0,
            min_speed: 0.0,
        };
        curve.coarse = (0..COARSE_SAMPLES)
            .map(|i| curve.position(TAU * i as f64 / COARSE_SAMPLES as f64))
            .collect();
        let mut min_speed = f64::INFINITY;
        let mut max_curv: f64 = 0.0;
        let mut size: f64 = 0.0;
        for i in 0..CURVATURE_SAMPLES {
            let t = TAU * i as f64 / CURVATURE_SAMPLES as f64;
            let j = curve.jet(t);
            min_speed = min_speed.min(j.dp.norm());
            size = size.max((j.p - center).norm());
            max_curv = max_curv.max(curve.curvature(t).abs());
        }
        if !(min_speed > 1e-12 * size.max(1e-300)) || !max_curv.is_finite() {
            return Err(Error::DegenerateParametrization { theta: 0.0 });
        }
        curve.max_curvature = max_curv;
        curve.min_speed = min_speed;
        Ok(curve)
    }

    pub fn circle(center: Point2, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidArgument(format!("circle radius must be positive, got {radius}")));
        }
        Self::build(CurveShape::Circle { radius }, center, 0.0)
    }

    pub fn ellipse(center: Point2, semi_x: f64, semi_y: f64) -> Result<Self> {
        if !(semi_x > 0.0 && semi_y > 0.0 && semi_x.is_finite() && semi_y.is_finite()) {
            return Err(Error::InvalidArgument("ellipse semi-axes must be positive".into()));
        }
        Self::build(CurveShape::Ellipse { semi_x, semi_y }, center, 0.0)
    }

    /// Star-shaped curve `r = radius (1 + amplitude cos(lobes theta))`.
    pub fn star(center: Point2, radius: f64, amplitude: f64, lobes: u32) -> Result<Self> {
        if !(radius > 0.0 && (0.0..1.0).contains(&amplitude)) {
            return Err(Error::InvalidArgument(
                "star needs radius > 0 and 0 <= amplitude < 1".into(),
            ));
        }
        Self::build(
            CurveShape::Star {
                radius,
                amplitude,
                lobes,
            },
            center,
            0.0,
        )
    }

    /// Trigonometric interpolant of boundary samples, uniformly spaced in
    /// parameter. Clockwise input is reversed.
    pub fn from_samples(points: &[Point2]) -> Result<Self> {
        let m = points.len();
        let area2: f64 = (0..m).map(|i| points[i].cross(points[(i + 1) % m])).sum();
        if area2 == 0.0 || !area2.is_finite() {
            return Err(Error::DegenerateParametrization { theta: 0.0 });
        }
        let series = if area2 > 0.0 {
            TrigSeries::from_samples(points)?
        } else {
            let rev: Vec<Point2> = (0..m).map(|j| points[(m - j) % m]).collect();
            TrigSeries::from_samples(&rev)?
        };
        Self::build(CurveShape::Trigonometric(series), Point2::default(), 0.0)
    }

    /// The same curve rotated by `angle` about the origin.
    pub fn rotated(&self, angle: f64) -> Result<Self> {
        Self::build(self.shape.clone(), self.center.rotated(angle), self.rotation + angle)
    }

    pub fn shape(&self) -> &CurveShape {
        &self.shape
    }

    pub fn jet(&self, t: f64) -> Jet {
        let j = self.shape.jet(t);
        Jet {
            p: j.p.rotated(self.rotation) + self.center,
            dp: j.dp.rotated(self.rotation),
            ddp: j.ddp.rotated(self.rotation),
        }
    }

    pub fn position(&self, t: f64) -> Point2 {
        self.jet(t).p
    }

    pub fn tangent(&self, t: f64) -> Point2 {
        self.jet(t).dp
    }

    /// Outward unit normal.
    pub fn normal(&self, t: f64) -> Point2 {
        let d = self.jet(t).dp;
        Point2::new(d.y, -d.x) * (1.0 / d.norm())
    }

    /// Signed curvature, positive where the curve is convex.
    pub fn curvature(&self, t: f64) -> f64 {
        let j = self.jet(t);
        j.dp.cross(j.ddp) / j.dp.norm().powi(3)
    }

    pub fn max_curvature(&self) -> f64 {
        self.max_curvature
    }

    pub fn min_speed(&self) -> f64 {
        self.min_speed
    }

    /// `0.5 / max |curvature|`.
    pub fn default_reach(&self) -> f64 {
        0.5 / self.max_curvature
    }

    pub(crate) fn coarse(&self) -> &[Point2] {
        &self.coarse
    }

    /// Axis-aligned bounding box of the coarse samples: `(min, max)`.
    pub fn bounding_box(&self) -> (Point2, Point2) {
        let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in &self.coarse {
            lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        (lo, hi)
    }
}

/// Reads boundary samples: one `x y` pair per line; blank lines and lines
/// starting with `#` are skipped.
pub fn parse_boundary_samples(text: &str) -> Result<Vec<Point2>> {
    let mut pts = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<f64> {
            tok.and_then(|t| t.parse::<f64>().ok())
                .filter(|v| v.is_finite())
                .ok_or_else(|| Error::InvalidArgument(format!("line {}: expected 'x y', got '{line}'", lineno + 1)))
        };
        let x = parse(it.next())?;
        let y = parse(it.next())?;
        if it.next().is_some() {
            return Err(Error::InvalidArgument(format!(
                "line {}: expected 'x y', got '{line}'",
                lineno + 1
            )));
        }
        pts.push(Point2::new(x, y));
    }
    if pts.is_empty() || !pts.len().is_power_of_two() {
        return Err(Error::InvalidArgument(format!(
            "boundary sample count must be a power of two, got {}",
            pts.len()
        )));
    }
    Ok(pts)
}
