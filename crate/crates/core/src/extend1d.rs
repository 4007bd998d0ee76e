//! Extension of a function on `[0, L]` to `[-M, 0]`.
//!
//! ```text
//! E[f](x) = ( sum_j w_j f(t_j r) phi_l(t_j r) ) phi_g(|x|),   r = xi(|x|)
//! ```
//!
//! where `xi` is the identity, or `c * psi(|x| / c)` when a shrinking map is
//! attached (`c` is the shrink scale, 1 by default). Omitted windows are
//! identically one.

use crate::error::{Error, Result};
use crate::scheme::ExtensionScheme;
use crate::stabilizers::{ShrinkMap, WindowSpec};

/// Local and global roll-off used by the benchmark protocol.
pub const BENCH_LOCAL_WINDOW: (f64, f64) = (0.2, 1.0);
pub const BENCH_GLOBAL_WINDOW: (f64, f64) = (1e-6, 0.25);
pub const BENCH_SOURCE_LEN: f64 = 0.5;
pub const BENCH_EXTENSION_LEN: f64 = 0.25;

#[derive(Debug, Clone)]
pub struct Extension1DConfig {
    scheme: ExtensionScheme,
    source_len: f64,
    extension_len: f64,
    local_window: Option<WindowSpec>,
    global_window: Option<WindowSpec>,
    shrink: Option<ShrinkMap>,
    shrink_scale: f64,
}

impl Extension1DConfig {
    /// Windowless, unshrunk extension from `[0, source_len]` to `[-extension_len, 0]`.
    pub fn new(scheme: ExtensionScheme, source_len: f64, extension_len: f64) -> Result<Self> {
        if !(source_len.is_finite() && source_len > 0.0) {
            return Err(Error::InvalidArgument(format!("source length must be positive, got {source_len}")));
        }
        if !(extension_len.is_finite() && extension_len > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "extension length must be positive, got {extension_len}"
            )));
        }
        let cfg = Self {
            scheme,
            source_len,
            extension_len,
            local_window: None,
            global_window: None,
            shrink: None,
            shrink_scale: 1.0,
        };
        cfg.check_reach()?;
        Ok(cfg)
    }

    /// The benchmark setup: source `[0, 0.5]`, extension `[-0.25, 0]`,
    /// `phi_g = phi(., 1e-6, 0.25)`, `phi_l = phi(., 0.2, 1)`, and an
    /// optional shrinking map with parameter `delta` applied to `|x|`.
    pub fn benchmark(n: usize, a: f64, shrink_delta: Option<f64>) -> Result<Self> {
        let scheme = ExtensionScheme::optimal(n, a)?;
        let local = WindowSpec::new(BENCH_LOCAL_WINDOW.0, BENCH_LOCAL_WINDOW.1)?;
        let global = WindowSpec::new(BENCH_GLOBAL_WINDOW.0, BENCH_GLOBAL_WINDOW.1)?;
        let mut cfg = Self {
            scheme,
            source_len: BENCH_SOURCE_LEN,
            extension_len: BENCH_EXTENSION_LEN,
            local_window: Some(local),
            global_window: Some(global),
            shrink: None,
            shrink_scale: 1.0,
        };
        if let Some(delta) = shrink_delta {
            cfg.shrink = Some(ShrinkMap::new(delta, n)?);
        }
        cfg.check_reach()?;
        Ok(cfg)
    }

    pub fn with_local_window(mut self, w: WindowSpec) -> Self {
        self.local_window = Some(w);
        self
    }

    pub fn with_global_window(mut self, w: WindowSpec) -> Self {
        self.global_window = Some(w);
        self
    }

    /// Attaches a shrinking map applied directly to `|x|`.
    pub fn with_shrink(self, map: ShrinkMap) -> Result<Self> {
        self.with_scaled_shrink(map, 1.0)
    }

    /// Attaches a shrinking map applied as `scale * psi(|x| / scale)`.
    pub fn with_scaled_shrink(mut self, map: ShrinkMap, scale: f64) -> Result<Self> {
        if !(scale.is_finite() && scale > 0.0) {
            return Err(Error::InvalidArgument(format!("shrink scale must be positive, got {scale}")));
        }
        self.shrink = Some(map);
        self.shrink_scale = scale;
        self.check_reach()?;
        Ok(self)
    }

    fn check_reach(&self) -> Result<()> {
        if self.shrink.is_some() && self.extension_len > self.shrink_scale {
            return Err(Error::InvalidArgument(format!(
                "shrink needs extension length {} <= shrink scale {}",
                self.extension_len, self.shrink_scale
            )));
        }
        let far = self.scheme.max_node() * self.normal_coordinate(self.extension_len);
        if far > self.source_len {
            return Err(Error::ReachExceeded {
                argument: far,
                source_len: self.source_len,
            });
        }
        Ok(())
    }

    pub fn scheme(&self) -> &ExtensionScheme {
        &self.scheme
    }

    pub fn source_len(&self) -> f64 {
        self.source_len
    }

    pub fn extension_len(&self) -> f64 {
        self.extension_len
    }

    pub fn local_window(&self) -> Option<&WindowSpec> {
        self.local_window.as_ref()
    }

    pub fn global_window(&self) -> Option<&WindowSpec> {
        self.global_window.as_ref()
    }

    pub fn shrink(&self) -> Option<&ShrinkMap> {
        self.shrink.as_ref()
    }

    pub fn shrink_scale(&self) -> f64 {
        self.shrink_scale
    }

    /// Distance `r` mapped through the shrinking map, if any.
    pub fn normal_coordinate(&self, r: f64) -> f64 {
        match &self.shrink {
            Some(map) => {
                let c = self.shrink_scale;
                c * map.psi_in_range(r / c)
            }
            None => r,
        }
    }

    /// Global window at distance `r` from the boundary.
    pub fn global_factor(&self, r: f64) -> f64 {
        self.global_window.map_or(1.0, |w| w.eval(r))
    }

    fn local_factor(&self, s: f64) -> f64 {
        self.local_window.map_or(1.0, |w| w.eval(s))
    }

    /// Extends `f` to `x` in `[-M, 0]`.
    pub fn extend<F>(&self, f: &F, x: f64) -> Result<f64>
    where
        F: Fn(f64) -> f64 + ?Sized,
    {
        extend_point(f, self, x)
    }
}

/// Value of the extension at `x` in `[-M, 0]`.
pub fn extend_point<F>(f: &F, cfg: &Extension1DConfig, x: f64) -> Result<f64>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    if !(x >= -cfg.extension_len && x <= 0.0) {
        return Err(Error::Domain {
            what: "x",
            value: x,
            lo: -cfg.extension_len,
            hi: 0.0,
        });
    }
    if x == 0.0 {
        return Ok(f(0.0) * cfg.global_factor(0.0));
    }
    let r = -x;
    let rho = cfg.normal_coordinate(r);
    let mut sum = 0.0;
    for (&w, &t) in cfg.scheme.weights().iter().zip(cfg.scheme.nodes()) {
        let s = t * rho;
        if !(0.0..=cfg.source_len).contains(&s) {
            return Err(Error::ReachExceeded {
                argument: s,
                source_len: cfg.source_len,
            });
        }
        sum += w * f(s) * cfg.local_factor(s);
    }
    Ok(sum * cfg.global_factor(r))
}

/// `f` on `[0, L]` and its extension on `[-M, 0)` at the given points.
pub fn extend_profile<F>(f: &F, cfg: &Extension1DConfig, grid: &[f64]) -> Result<Vec<f64>>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    grid.iter()
        .map(|&x| {
            if x < 0.0 {
                extend_point(f, cfg, x)
            } else if x <= cfg.source_len {
                Ok(f(x))
            } else {
                Err(Error::Domain {
                    what: "x",
                    value: x,
                    lo: -cfg.extension_len,
                    hi: cfg.source_len,
                })
            }
        })
        .collect()
}

fn uniform(lo: f64, hi: f64, count: usize) -> impl Iterator<Item = f64> {
    (0..count).map(move |i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
}

/// Sup norm of the extension over `[-M, 0]` divided by the sup norm of `f`
/// over `[0, L]`.
///
/// Both sup norms are taken over uniform probes; the probe count starts at
/// `probe_count` and doubles until the ratio agrees with the previous one
/// to three significant digits.
pub fn kappa<F>(f: &F, cfg: &Extension1DConfig, probe_count: usize) -> Result<f64>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    if probe_count < 1000 {
        return Err(Error::InvalidArgument(format!("kappa needs at least 1000 probes, got {probe_count}")));
    }
    const MAX_PROBES: usize = 1 << 20;
    let ratio = |count: usize| -> Result<f64> {
        let mut ext: f64 = 0.0;
        for x in uniform(-cfg.extension_len, 0.0, count) {
            ext = ext.max(extend_point(f, cfg, x)?.abs());
        }
        let src = uniform(0.0, cfg.source_len, count).map(|x| f(x).abs()).fold(0.0, f64::max);
        if src == 0.0 || !src.is_finite() {
            return Err(Error::UndefinedRatio);
        }
        Ok(ext / src)
    };
    let mut count = probe_count;
    let mut prev = ratio(count)?;
    while count < MAX_PROBES {
        count = 2 * count - 1;
        let next = ratio(count)?;
        if (next - prev).abs() <= 5e-4 * next.abs() {
            return Ok(next);
        }
        prev = next;
    }
    Ok(prev)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::make_scheme;

    fn plain(n: usize, a: f64) -> Extension1DConfig {
        Extension1DConfig::new(make_scheme(n, a, None).unwrap(), 0.5, 0.25).unwrap()
    }

    #[test]
    fn point_examples() {
        let cfg = plain(4, 2.0);
        assert!((extend_point(&|_| 1.0, &cfg, -0.1).unwrap() - 1.0).abs() < 1e-13);
        assert!((extend_point(&|x| x, &cfg, -0.1).unwrap() + 0.1).abs() < 1e-13);
        let cfg = plain(2, 2.0);
        assert!((extend_point(&|x| x * x, &cfg, -0.1).unwrap() - 0.01).abs() < 1e-15);
    }

    #[test]
    fn zero_uses_boundary_value() {
        let cfg = Extension1DConfig::benchmark(9, 2.0, None).unwrap();
        assert_eq!(extend_point(&|x: f64| 3.0 + x, &cfg, 0.0).unwrap(), 3.0);
    }

    #[test]
    fn domain_and_reach_errors() {
        let cfg = plain(3, 2.0);
        assert!(matches!(extend_point(&|x| x, &cfg, -0.3), Err(Error::Domain { .. })));
        assert!(matches!(extend_point(&|x| x, &cfg, 0.1), Err(Error::Domain { .. })));
        let too_far = Extension1DConfig::new(make_scheme(3, 4.0, None).unwrap(), 0.5, 0.25);
        assert!(matches!(too_far, Err(Error::ReachExceeded { .. })));
        // explicit nodes need not touch a; reach is judged by the largest node
        let short = make_scheme(2, 4.0, Some(&[0.0, 1.0, 2.0])).unwrap();
        assert!(Extension1DConfig::new(short, 0.5, 0.25).is_ok());
    }

    #[test]
    fn shrink_config_checks() {
        let base = plain(3, 2.0);
        let map = ShrinkMap::new(0.5, 3).unwrap();
        assert!(base.clone().with_shrink(map.clone()).is_ok());
        assert!(base.with_scaled_shrink(map, 0.1).is_err());
    }

    #[test]
    fn profile_examples() {
        let cfg = plain(3, 2.0);
        assert_eq!(extend_profile(&|_| 1.0, &cfg, &[-0.1, 0.0, 0.1]).unwrap().len(), 3);
        let cube = |x: f64| x * x * x - 0.5 * x;
        let grid: Vec<f64> = (0..=30).map(|i| -0.25 + 0.025 * i as f64).collect();
        let v = extend_profile(&cube, &cfg, &grid).unwrap();
        for (x, y) in grid.iter().zip(v) {
            assert!((y - cube(*x)).abs() < 1e-12);
        }
        assert!(extend_profile(&cube, &cfg, &[0.6]).is_err());
    }

    #[test]
    fn kappa_of_constant_is_one() {
        let cfg = plain(5, 2.0);
        assert!((kappa(&|_| 2.0, &cfg, 1000).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(kappa(&|_| 0.0, &cfg, 1000), Err(Error::UndefinedRatio));
        assert!(kappa(&|_| 1.0, &cfg, 10).is_err());
    }
}
