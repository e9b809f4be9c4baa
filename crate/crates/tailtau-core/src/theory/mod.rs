//! Limiting tail coefficients via extremal functions.
//!
//! For max-stable dependence structures, the limiting directional tail
//! Kendall's tau reduces to `2 E min(1, W~/W) - 1`, where `W` is the
//! extremal function of the non-conditioned variable relative to the
//! conditioned one and `W~` an independent copy. The extremal correlation
//! has the companion form `chi = E min(1, W)`. Both are one-dimensional
//! expectations, so families whose extremal-function law is known can be
//! evaluated by plain Monte Carlo; the Hüsler–Reiss family also has closed
//! forms used as oracles.

mod closed_form;
mod curves;
mod samplers;

pub use closed_form::{hr_chi_closed, hr_tau_closed};
pub use curves::{dirichlet_curve, husler_reiss_curve, CurveRow, DependenceCurve};
pub use samplers::{
    dual_extremal_sampler, ConstantExtremalSampler, DirichletExtremalSampler, DualSampler,
    HrExtremalSampler,
};

use alloc::vec::Vec;

use rand::Rng;

use crate::math::sqrt;
use crate::{Error, Result};

/// A distribution of extremal-function values: strictly positive draws with
/// unit mean.
pub trait ExtremalSampler {
    /// Draws `n` values. Implementations must be deterministic given the
    /// generator state.
    fn sample_n<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Result<Vec<f64>>;
}

/// A Monte Carlo estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub value: f64,
    pub std_error: f64,
    pub n: usize,
}

impl McEstimate {
    /// Absolute deviation from `reference` measured in standard errors.
    pub fn deviation_in_se(&self, reference: f64) -> f64 {
        (self.value - reference).abs() / self.std_error
    }
}

/// Limiting directional tail Kendall's tau `2 E min(1, W~/W) - 1` by Monte
/// Carlo over `n_mc` independent pairs from `sampler`.
pub fn tau_limit_mc<S: ExtremalSampler, R: Rng + ?Sized>(
    sampler: &S,
    n_mc: usize,
    rng: &mut R,
) -> Result<McEstimate> {
    mc_mean_of(sampler, n_mc, rng, |w, wt| {
        let r = wt / w;
        if r < 1.0 {
            r
        } else {
            1.0
        }
    })
    .map(|(mean, se, n)| McEstimate {
        value: 2.0 * mean - 1.0,
        std_error: 2.0 * se,
        n,
    })
}

/// Limiting extremal correlation `chi = E min(1, W)` by Monte Carlo.
///
/// Only the first draw of each pair is used; the signature mirrors
/// [`tau_limit_mc`] so the two share sampler plumbing.
pub fn chi_limit_mc<S: ExtremalSampler, R: Rng + ?Sized>(
    sampler: &S,
    n_mc: usize,
    rng: &mut R,
) -> Result<McEstimate> {
    if n_mc < 2 {
        return Err(Error::InsufficientData {
            needed: 2,
            got: n_mc,
        });
    }
    let w = sampler.sample_n(n_mc, rng)?;
    ensure_positive(&w)?;
    let (mean, se) = mean_and_se(w.iter().map(|&v| if v < 1.0 { v } else { 1.0 }), n_mc);
    Ok(McEstimate {
        value: mean,
        std_error: se,
        n: n_mc,
    })
}

fn mc_mean_of<S: ExtremalSampler, R: Rng + ?Sized>(
    sampler: &S,
    n_mc: usize,
    rng: &mut R,
    f: impl Fn(f64, f64) -> f64,
) -> Result<(f64, f64, usize)> {
    if n_mc < 2 {
        return Err(Error::InsufficientData {
            needed: 2,
            got: n_mc,
        });
    }
    let w = sampler.sample_n(n_mc, rng)?;
    let wt = sampler.sample_n(n_mc, rng)?;
    ensure_positive(&w)?;
    ensure_positive(&wt)?;
    let (mean, se) = mean_and_se(w.iter().zip(&wt).map(|(&a, &b)| f(a, b)), n_mc);
    Ok((mean, se, n_mc))
}

fn ensure_positive(values: &[f64]) -> Result<()> {
    if values.iter().any(|&v| !(v > 0.0) || !v.is_finite()) {
        return Err(Error::NonPositiveExtremal);
    }
    Ok(())
}

fn mean_and_se(values: impl Iterator<Item = f64>, n: usize) -> (f64, f64) {
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for v in values {
        sum += v;
        sum_sq += v * v;
    }
    let nf = n as f64;
    let mean = sum / nf;
    let var = ((sum_sq - nf * mean * mean) / (nf - 1.0)).max(0.0);
    (mean, sqrt(var / nf))
}
