//! Parsers for command-line values: ranges, function and curve specs, grids.

use crate::extend2d::{parse_boundary_samples, ParametricCurve, Point2};
use crate::testfns::TestFunction;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

/// A real number, also accepted as a fraction `p/q`.
pub fn parse_real(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let v = match s.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|_| format!("bad number '{s}'"))?;
            let q: f64 = q.trim().parse().map_err(|_| format!("bad number '{s}'"))?;
            p / q
        }
        None => s.parse().map_err(|_| format!("bad number '{s}'"))?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("'{s}' is not a finite number"))
    }
}

/// Inclusive integer range `lo..hi[:step]`, or a single value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntRange(pub Vec<usize>);

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (body, step) = match s.split_once(':') {
            Some((b, st)) => (b, st.trim().parse::<usize>().map_err(|_| format!("bad step in '{s}'"))?),
            None => (s, 1),
        };
        if step == 0 {
            return Err(format!("step must be positive in '{s}'"));
        }
        let (lo, hi) = match body.split_once("..") {
            Some((l, h)) => (l, h),
            None => (body, body),
        };
        let lo: usize = lo.trim().parse().map_err(|_| format!("bad range '{s}'"))?;
        let hi: usize = hi.trim().parse().map_err(|_| format!("bad range '{s}'"))?;
        if lo > hi {
            return Err(format!("empty range '{s}'"));
        }
        Ok(Self((lo..=hi).step_by(step).collect()))
    }
}

/// Inclusive real range `lo..hi[:step]`, or a single value.
#[derive(Debug, Clone, PartialEq)]
pub struct RealRange(pub Vec<f64>);

impl FromStr for RealRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (body, step) = match s.split_once(':') {
            Some((b, st)) => (b, parse_real(st)?),
            None => (s, 1.0),
        };
        if !(step > 0.0) {
            return Err(format!("step must be positive in '{s}'"));
        }
        let (lo, hi) = match body.split_once("..") {
            Some((l, h)) => (parse_real(l)?, parse_real(h)?),
            None => {
                let v = parse_real(body)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range '{s}'"));
        }
        let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
        Ok(Self((0..count).map(|i| lo + step * i as f64).collect()))
    }
}

/// Polynomial in `x` and `y`, written as a sum of terms such as
/// `1 - 0.5x^2 + 3*x*y^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly2 {
    /// `(coefficient, power of x, power of y)`
    pub terms: Vec<(f64, u32, u32)>,
}

impl Poly2 {
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|&(c, i, j)| c * x.powi(i as i32) * y.powi(j as i32))
            .sum()
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|&(_, i, j)| i + j).max().unwrap_or(0)
    }

    pub fn uses_y(&self) -> bool {
        self.terms.iter().any(|&(c, _, j)| j > 0 && c != 0.0)
    }
}

fn parse_term(t: &str) -> Result<(f64, u32, u32), String> {
    let bytes = t.as_bytes();
    let mut pos = 0;
    let mut sign = 1.0;
    if let Some(&c) = bytes.first() {
        if c == b'+' || c == b'-' {
            sign = if c == b'-' { -1.0 } else { 1.0 };
            pos = 1;
        }
    }
    let start = pos;
    while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'.') {
        pos += 1;
    }
    if pos > start && pos < bytes.len() && (bytes[pos] == b'e' || bytes[pos] == b'E') {
        let mut q = pos + 1;
        if q < bytes.len() && (bytes[q] == b'+' || bytes[q] == b'-') {
            q += 1;
        }
        if q < bytes.len() && bytes[q].is_ascii_digit() {
            pos = q;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
        }
    }
    let mut coef = if pos > start {
        t[start..pos].parse::<f64>().map_err(|_| format!("bad coefficient in term '{t}'"))?
    } else {
        1.0
    };
    coef *= sign;
    let (mut px, mut py) = (0u32, 0u32);
    let mut saw_factor = pos > start;
    while pos < bytes.len() {
        match bytes[pos] {
            b'*' => pos += 1,
            v @ (b'x' | b'y') => {
                pos += 1;
                let mut power = 1u32;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let s = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    power = t[s..pos].parse().map_err(|_| format!("bad exponent in term '{t}'"))?;
                }
                if v == b'x' {
                    px += power;
                } else {
                    py += power;
                }
                saw_factor = true;
            }
            _ => return Err(format!("unexpected '{}' in term '{t}'", bytes[pos] as char)),
        }
    }
    if !saw_factor {
        return Err(format!("empty term '{t}'"));
    }
    Ok((coef, px, py))
}

impl FromStr for Poly2 {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err("empty polynomial".into());
        }
        let mut terms = Vec::new();
        let mut begin = 0;
        let b = compact.as_bytes();
        for i in 1..=b.len() {
            let split = i == b.len()
                || ((b[i] == b'+' || b[i] == b'-') && !matches!(b[i - 1], b'e' | b'E' | b'^' | b'*'));
            if split {
                terms.push(parse_term(&compact[begin..i])?);
                begin = i;
            }
        }
        Ok(Self { terms })
    }
}

/// Function on the 1D benchmark interval: a test function or a polynomial in `x`.
#[derive(Debug, Clone, PartialEq)]
pub enum Fn1Spec {
    Test(TestFunction),
    Poly(Poly2),
}

impl Fn1Spec {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Self::Test(t) => t.eval(x),
            Self::Poly(p) => p.eval(x, 0.0),
        }
    }
}

impl FromStr for Fn1Spec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if let Ok(t) = s.parse::<TestFunction>() {
            return Ok(Self::Test(t));
        }
        let body = s.strip_prefix("poly:").unwrap_or(s);
        let p: Poly2 = body
            .parse()
            .map_err(|e| format!("expected f1..f5 or a polynomial in x ({e})"))?;
        if p.uses_y() {
            return Err(format!("1D function '{s}' may not use y"));
        }
        Ok(Self::Poly(p))
    }
}

impl fmt::Display for Fn1Spec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Test(t) => write!(f, "{t}"),
            Self::Poly(p) => write!(f, "poly({} terms, degree {})", p.terms.len(), p.degree()),
        }
    }
}

/// Function in the plane: `sin-exp` for `sin(x) e^y`, or a polynomial.
#[derive(Debug, Clone, PartialEq)]
pub enum Fn2Spec {
    SinExp,
    Poly(Poly2),
}

impl Fn2Spec {
    pub fn eval(&self, p: Point2) -> f64 {
        match self {
            Self::SinExp => p.x.sin() * p.y.exp(),
            Self::Poly(q) => q.eval(p.x, p.y),
        }
    }

    pub fn polynomial(&self) -> Option<&Poly2> {
        match self {
            Self::Poly(p) => Some(p),
            Self::SinExp => None,
        }
    }
}

impl FromStr for Fn2Spec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "sin-exp" => Ok(Self::SinExp),
            "one" => Ok(Self::Poly("1".parse()?)),
            _ => {
                let body = s.strip_prefix("poly:").unwrap_or(s);
                Ok(Self::Poly(body.parse().map_err(|e| {
                    format!("expected 'one', 'sin-exp' or a polynomial in x, y ({e})")
                })?))
            }
        }
    }
}

/// `circle[:r]`, `ellipse[:a,b]`, `star[:R,eps,k]` or `samples:<path>`.
#[derive(Debug, Clone, PartialEq)]
pub enum CurveSpec {
    Circle(f64),
    Ellipse(f64, f64),
    Star(f64, f64, u32),
    Samples(PathBuf),
}

impl CurveSpec {
    pub fn build(&self) -> Result<ParametricCurve, String> {
        let c = Point2::default();
        let r = match self {
            Self::Circle(r) => ParametricCurve::circle(c, *r),
            Self::Ellipse(a, b) => ParametricCurve::ellipse(c, *a, *b),
            Self::Star(r, e, k) => ParametricCurve::star(c, *r, *e, *k),
            Self::Samples(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read boundary samples {}: {e}", path.display()))?;
                let pts = parse_boundary_samples(&text).map_err(|e| e.to_string())?;
                ParametricCurve::from_samples(&pts)
            }
        };
        r.map_err(|e| e.to_string())
    }
}

fn reals(s: &str, count: usize, what: &str) -> Result<Vec<f64>, String> {
    let v: Vec<f64> = s.split(',').map(parse_real).collect::<Result<_, _>>()?;
    if v.len() != count {
        return Err(format!("{what} takes {count} comma-separated values"));
    }
    Ok(v)
}

impl FromStr for CurveSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, args) = match s.split_once(':') {
            Some((k, a)) => (k, Some(a)),
            None => (s, None),
        };
        match (kind, args) {
            ("circle", None) => Ok(Self::Circle(1.0)),
            ("circle", Some(a)) => Ok(Self::Circle(reals(a, 1, "circle")?[0])),
            ("ellipse", None) => Ok(Self::Ellipse(1.5, 1.0)),
            ("ellipse", Some(a)) => {
                let v = reals(a, 2, "ellipse")?;
                Ok(Self::Ellipse(v[0], v[1]))
            }
            ("star", None) => Ok(Self::Star(1.0, 0.2, 5)),
            ("star", Some(a)) => {
                let v = reals(a, 3, "star")?;
                if v[2] < 0.0 || v[2].fract() != 0.0 {
                    return Err("star lobe count must be a nonnegative integer".into());
                }
                Ok(Self::Star(v[0], v[1], v[2] as u32))
            }
            ("samples", Some(p)) if !p.is_empty() => Ok(Self::Samples(PathBuf::from(p))),
            _ => Err(format!(
                "unknown curve '{s}'; expected circle[:r], ellipse[:a,b], star[:R,eps,k] or samples:<path>"
            )),
        }
    }
}

/// `NXxNY` or `N` (square).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    pub nx: usize,
    pub ny: usize,
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad grid '{s}'"));
        let (nx, ny) = match s.split_once(['x', 'X']) {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let n = parse(s)?;
                (n, n)
            }
        };
        if nx < 2 || ny < 2 {
            return Err("grid needs at least 2 points per axis".into());
        }
        Ok(Self { nx, ny })
    }
}

/// `lo,hi` for both axes or `x0,x1,y0,y1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxSpec {
    pub x: (f64, f64),
    pub y: (f64, f64),
}

impl FromStr for BoxSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let v: Vec<f64> = s.split(',').map(parse_real).collect::<Result<_, _>>()?;
        let b = match v.as_slice() {
            [lo, hi] => Self { x: (*lo, *hi), y: (*lo, *hi) },
            [x0, x1, y0, y1] => Self { x: (*x0, *x1), y: (*y0, *y1) },
            _ => return Err("box takes 'lo,hi' or 'x0,x1,y0,y1'".into()),
        };
        if !(b.x.0 < b.x.1 && b.y.0 < b.y.1) {
            return Err("box ranges must be increasing".into());
        }
        Ok(b)
    }
}

/// `r0,r1` window seams.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowArg(pub f64, pub f64);

impl FromStr for WindowArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let v = reals(s, 2, "window")?;
        Ok(Self(v[0], v[1]))
    }
}
