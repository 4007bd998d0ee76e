//! One-sided magnitude spectra.
//!
//! Convention: the forward transform carries the `1/N` factor,
//! `X_k = (1/N) sum_j x_j exp(-2 pi i j k / N)`, and the report keeps bins
//! `0..=N/2` without doubling. A unit cosine at bin `k` therefore shows up
//! with magnitude `1/2` and a constant signal of ones with magnitude `1` at
//! bin 0.

use crate::error::{Error, Result};
use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub sample_count: usize,
    pub magnitudes: Vec<f64>,
}

impl SpectrumReport {
    /// Sum of `|X_k|^2` over all `N` two-sided bins, reconstructed from the
    /// one-sided half. Equals the mean square of the samples.
    pub fn power(&self) -> f64 {
        let n = self.sample_count;
        self.magnitudes
            .iter()
            .enumerate()
            .map(|(k, m)| {
                let mirrored = k != 0 && !(n.is_multiple_of(2) && k == n / 2);
                let mult = if mirrored { 2.0 } else { 1.0 };
                mult * m * m
            })
            .sum()
    }

    pub fn peak(&self) -> f64 {
        self.magnitudes.iter().cloned().fold(0.0, f64::max)
    }

    /// Largest magnitude at or beyond `bin`, relative to the peak.
    pub fn relative_tail(&self, bin: usize) -> f64 {
        let peak = self.peak();
        if peak == 0.0 {
            return 0.0;
        }
        self.magnitudes.iter().skip(bin).cloned().fold(0.0, f64::max) / peak
    }
}

/// Direct `O(N^2)` DFT (forward, unnormalized). Reference for the FFT path.
pub fn dft_direct(samples: &[f64]) -> Vec<Complex64> {
    let n = samples.len();
    // twiddles by index modulo n keep the phase argument exact
    let twiddle: Vec<Complex64> = (0..n)
        .map(|m| Complex64::from_polar(1.0, -2.0 * PI * m as f64 / n as f64))
        .collect();
    (0..n)
        .map(|k| {
            samples
                .iter()
                .enumerate()
                .map(|(j, &x)| twiddle[(j * k) % n] * x)
                .sum()
        })
        .collect()
}

/// One-sided magnitude spectrum.
pub fn power_spectrum(samples: &[f64]) -> Result<SpectrumReport> {
    let n = samples.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if n < 2 {
        return Err(Error::InvalidArgument("spectrum needs at least 2 samples".into()));
    }
    let mut coeffs: Vec<Complex64> = samples.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut coeffs);
    let magnitudes = coeffs[..=n / 2].iter().map(|c| c.norm() / n as f64).collect();
    Ok(SpectrumReport {
        sample_count: n,
        magnitudes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_is_dc_only() {
        let r = power_spectrum(&[1.0; 8]).unwrap();
        assert_eq!(r.magnitudes.len(), 5);
        assert!((r.magnitudes[0] - 1.0).abs() < 1e-15);
        assert!(r.magnitudes[1..].iter().all(|m| m.abs() < 1e-15));
    }

    #[test]
    fn pure_cosine_single_bin() {
        let n = 64;
        let x: Vec<f64> = (0..n).map(|j| (2.0 * PI * 3.0 * j as f64 / n as f64).cos()).collect();
        let r = power_spectrum(&x).unwrap();
        for (k, m) in r.magnitudes.iter().enumerate() {
            let want = if k == 3 { 0.5 } else { 0.0 };
            assert!((m - want).abs() < 1e-10, "bin {k}: {m}");
        }
    }

    #[test]
    fn odd_length_uses_direct_transform() {
        let x: Vec<f64> = (0..15).map(|j| (j as f64 * 0.37).sin()).collect();
        let r = power_spectrum(&x).unwrap();
        assert_eq!(r.magnitudes.len(), 8);
        let ms: f64 = x.iter().map(|v| v * v).sum::<f64>() / 15.0;
        assert!((r.power() - ms).abs() < 1e-12 * ms);
    }

    #[test]
    fn matches_direct_transform() {
        for n in [16usize, 4000, 97] {
            let x: Vec<f64> = (0..n).map(|j| ((j * j) as f64 * 0.013).cos() + 0.1 * j as f64 / n as f64).collect();
            let r = power_spectrum(&x).unwrap();
            let d = dft_direct(&x);
            assert_eq!(r.magnitudes.len(), n / 2 + 1);
            for (k, (m, z)) in r.magnitudes.iter().zip(&d).enumerate() {
                assert!((m - z.norm() / n as f64).abs() < 1e-12, "n={n} bin {k}");
            }
        }
    }

    #[test]
    fn empty_and_single() {
        assert_eq!(power_spectrum(&[]), Err(Error::EmptyInput));
        assert!(power_spectrum(&[1.0]).is_err());
    }
}
