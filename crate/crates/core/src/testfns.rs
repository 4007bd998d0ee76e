//! Benchmark functions on `[0, 0.5]`.

use crate::error::Error;
use crate::scheme::chebyshev_t;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TestFunction {
    /// `0.04 / (0.04 + x^2)`
    F1,
    /// `sin(2 pi (x + 1)^2)`
    F2,
    /// `(x^2 - 1) exp(-20 x^2)`
    F3,
    /// `J0(25 (x + 0.4))`
    F4,
    /// `cos(7 acos(4x - 1))`, i.e. `T_7(4x - 1)`
    F5,
}

impl TestFunction {
    pub const ALL: [TestFunction; 5] = [Self::F1, Self::F2, Self::F3, Self::F4, Self::F5];

    pub fn eval(self, x: f64) -> f64 {
        eval_test_function(self, x)
    }

    pub fn id(self) -> &'static str {
        match self {
            Self::F1 => "f1",
            Self::F2 => "f2",
            Self::F3 => "f3",
            Self::F4 => "f4",
            Self::F5 => "f5",
        }
    }

    pub fn domain(self) -> (f64, f64) {
        (0.0, 0.5)
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TestFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "f1" => Ok(Self::F1),
            "f2" => Ok(Self::F2),
            "f3" => Ok(Self::F3),
            "f4" => Ok(Self::F4),
            "f5" => Ok(Self::F5),
            other => Err(Error::InvalidArgument(format!("unknown test function '{other}' (expected f1..f5)"))),
        }
    }
}

pub fn eval_test_function(id: TestFunction, x: f64) -> f64 {
    match id {
        TestFunction::F1 => 0.04 / (0.04 + x * x),
        TestFunction::F2 => (2.0 * PI * (x + 1.0) * (x + 1.0)).sin(),
        TestFunction::F3 => (x * x - 1.0) * (-20.0 * x * x).exp(),
        TestFunction::F4 => bessel_j0(25.0 * (x + 0.4)),
        TestFunction::F5 => chebyshev_t(7, 4.0 * x - 1.0),
    }
}

/// Bessel function of the first kind of order zero.
pub fn bessel_j0(x: f64) -> f64 {
    libm::j0(x)
}
