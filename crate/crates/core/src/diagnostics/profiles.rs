//! Profiles built from an extension for the spectral and chunking diagnostics.
//!
//! `F` is the extension on `[-M, 0]` glued to `f * phi_g` on `[0, M]`; both
//! ends roll off to zero, so it is suitable for a periodic transform. `G` is
//! the extension on `[-M, 0]` glued to the untouched `f` on `[0, L]`.

use super::panels::{try_adaptive_chunks, PanelSet, CHUNK_COEFFS, CHUNK_TOL, MAX_DEPTH};
use super::spectrum::{power_spectrum, SpectrumReport};
use crate::error::Result;
use crate::extend1d::{extend_point, Extension1DConfig};

/// Uniform periodic samples of `F` on `[-M, M)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FProfile {
    pub xs: Vec<f64>,
    pub values: Vec<f64>,
}

impl FProfile {
    pub fn spectrum(&self) -> Result<SpectrumReport> {
        power_spectrum(&self.values)
    }
}

/// `F(x)`: the extension for `x <= 0`, `f(x) phi_g(x)` for `x > 0`.
pub fn f_profile_value<F>(f: &F, cfg: &Extension1DConfig, x: f64) -> Result<f64>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    if x <= 0.0 {
        extend_point(f, cfg, x)
    } else {
        Ok(f(x) * cfg.global_factor(x))
    }
}

/// `samples` points `x_j = -M + 2M j / samples`, `j = 0..samples`.
pub fn build_f_profile<F>(f: &F, cfg: &Extension1DConfig, samples: usize) -> Result<FProfile>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    let m = cfg.extension_len();
    let xs: Vec<f64> = (0..samples)
        .map(|j| -m + 2.0 * m * j as f64 / samples as f64)
        .collect();
    let values = xs
        .iter()
        .map(|&x| f_profile_value(f, cfg, x))
        .collect::<Result<Vec<_>>>()?;
    Ok(FProfile { xs, values })
}

/// `G` on `[-M, L]`.
pub struct GProfile<'a, F: ?Sized> {
    f: &'a F,
    cfg: &'a Extension1DConfig,
}

impl<'a, F> GProfile<'a, F>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    pub fn interval(&self) -> (f64, f64) {
        (-self.cfg.extension_len(), self.cfg.source_len())
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        if x < 0.0 {
            extend_point(self.f, self.cfg, x)
        } else {
            Ok((self.f)(x))
        }
    }

    /// Chunks with explicit chunker parameters.
    pub fn chunks_with(&self, k: usize, tol: f64) -> Result<PanelSet> {
        let (lo, hi) = self.interval();
        try_adaptive_chunks(|x| self.eval(x), lo, hi, k, tol, MAX_DEPTH)
    }

    /// Chunks with the default diagnostics chunker.
    pub fn chunks(&self) -> Result<PanelSet> {
        self.chunks_with(CHUNK_COEFFS, CHUNK_TOL)
    }
}

pub fn build_g_profile<'a, F>(f: &'a F, cfg: &'a Extension1DConfig) -> GProfile<'a, F>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    GProfile { f, cfg }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::make_scheme;

    #[test]
    fn f_profile_of_constant() {
        let cfg = Extension1DConfig::benchmark(9, 2.0, None).unwrap();
        let one = |_: f64| 1.0;
        assert_eq!(f_profile_value(&one, &cfg, 0.25).unwrap(), 0.0);
        assert!((f_profile_value(&one, &cfg, 0.0).unwrap() - 1.0).abs() < 1e-12);
        let p = build_f_profile(&one, &cfg, 64).unwrap();
        assert_eq!(p.xs.len(), 64);
        assert_eq!(p.xs[0], -0.25);
        assert_eq!(p.values[0], 0.0);
    }

    #[test]
    fn g_profile_of_polynomial_is_one_chunk() {
        let cfg = Extension1DConfig::new(make_scheme(4, 2.0, None).unwrap(), 0.5, 0.25).unwrap();
        let p = |x: f64| 1.0 - 2.0 * x + 3.0 * x.powi(4);
        let g = build_g_profile(&p, &cfg);
        assert_eq!(g.interval(), (-0.25, 0.5));
        for i in 0..=20 {
            let x = -0.25 + 0.0375 * i as f64;
            assert!((g.eval(x).unwrap() - p(x)).abs() < 1e-12);
        }
        assert_eq!(g.chunks().unwrap().len(), 1);
    }
}
