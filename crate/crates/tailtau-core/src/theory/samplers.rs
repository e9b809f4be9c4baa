//! Extremal-function samplers for concrete model families.

use alloc::vec::Vec;

use rand::Rng;
use rand_distr::{Distribution, Gamma, StandardNormal};

use crate::math::{exp, sqrt};
use crate::theory::ExtremalSampler;
use crate::{Error, Result};

/// Hüsler–Reiss extremal function: `exp(N)` with `N ~ N(-gamma/2, gamma)`.
///
/// The drift makes the mean exactly one; the law is self-dual under the
/// tilted-reciprocal transform, which the tests exploit.
#[derive(Debug, Clone, Copy)]
pub struct HrExtremalSampler {
    drift: f64,
    sd: f64,
}

impl HrExtremalSampler {
    pub fn new(gamma: f64) -> Result<Self> {
        if !(gamma > 0.0 && gamma.is_finite()) {
            return Err(Error::invalid("gamma", "must be positive and finite"));
        }
        Ok(Self {
            drift: -gamma / 2.0,
            sd: sqrt(gamma),
        })
    }
}

impl ExtremalSampler for HrExtremalSampler {
    fn sample_n<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Result<Vec<f64>> {
        Ok((0..n)
            .map(|_| {
                let z: f64 = StandardNormal.sample(rng);
                exp(self.drift + self.sd * z)
            })
            .collect())
    }
}

/// Extremal function of the bivariate extremal Dirichlet model.
///
/// Conditioning on variable 1, the factor for variable 2 is distributed as
/// `(a1/a2) * G(a2) / G(a1 + 1)` with independent gamma variables (shape as
/// written, unit scale). This follows from disintegrating the model's
/// exponent-measure density along rays through coordinate 1; the mean is
/// `(a1/a2) * a2 * 1/a1 = 1` as required. [`Self::forward`] builds the factor
/// for conditioning on the first variable, [`Self::reverse`] the opposite
/// direction.
#[derive(Debug, Clone, Copy)]
pub struct DirichletExtremalSampler {
    scale: f64,
    numerator: Gamma<f64>,
    denominator: Gamma<f64>,
}

impl DirichletExtremalSampler {
    /// The law of the variable-2 factor given variable 1 is extreme.
    pub fn forward(alpha1: f64, alpha2: f64) -> Result<Self> {
        for (name, a) in [("alpha1", alpha1), ("alpha2", alpha2)] {
            if !(a > 0.0 && a.is_finite()) {
                return Err(Error::invalid(name, "must be positive and finite"));
            }
        }
        let numerator = Gamma::new(alpha2, 1.0)
            .map_err(|_| Error::invalid("alpha2", "rejected by the gamma sampler"))?;
        let denominator = Gamma::new(alpha1 + 1.0, 1.0)
            .map_err(|_| Error::invalid("alpha1", "rejected by the gamma sampler"))?;
        Ok(Self {
            scale: alpha1 / alpha2,
            numerator,
            denominator,
        })
    }

    /// The law of the variable-1 factor given variable 2 is extreme.
    pub fn reverse(alpha1: f64, alpha2: f64) -> Result<Self> {
        Self::forward(alpha2, alpha1)
    }
}

impl ExtremalSampler for DirichletExtremalSampler {
    fn sample_n<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Result<Vec<f64>> {
        Ok((0..n)
            .map(|_| {
                let num = positive_gamma(&self.numerator, rng);
                let den = positive_gamma(&self.denominator, rng);
                self.scale * num / den
            })
            .collect())
    }
}

/// Gamma draw guarded away from exact zero (possible underflow at tiny
/// shapes), so ratios stay positive and finite.
fn positive_gamma<R: Rng + ?Sized>(g: &Gamma<f64>, rng: &mut R) -> f64 {
    loop {
        let v = g.sample(rng);
        if v > 0.0 && v.is_finite() {
            return v;
        }
    }
}

/// Degenerate extremal function `W = c` (complete dependence at `c = 1`).
#[derive(Debug, Clone, Copy)]
pub struct ConstantExtremalSampler {
    value: f64,
}

impl ConstantExtremalSampler {
    pub fn new(value: f64) -> Result<Self> {
        if !(value > 0.0 && value.is_finite()) {
            return Err(Error::invalid("value", "must be positive and finite"));
        }
        Ok(Self { value })
    }
}

impl ExtremalSampler for ConstantExtremalSampler {
    fn sample_n<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Result<Vec<f64>> {
        let _ = rng;
        Ok(alloc::vec![self.value; n])
    }
}

/// The dual of an extremal-function law: if `W` is the factor in one
/// direction, the opposite direction has CDF `P(W' <= x) = E[1{1/W <= x} W]`,
/// i.e. the reciprocal under the `W`-tilted measure.
///
/// Draws are produced by importance resampling: a candidate pool of
/// `oversample * chunk` values is drawn from the base law, and a systematic
/// resample with weights proportional to the candidate values selects the
/// output reciprocals. Chunking keeps memory flat and averages the pool
/// error down across chunks; with the default oversampling the pool-induced
/// distortion of the empirical CDF is well below Monte Carlo noise at any
/// practical `n`.
#[derive(Debug, Clone, Copy)]
pub struct DualSampler<S> {
    inner: S,
    oversample: usize,
}

const DUAL_CHUNK: usize = 1 << 16;

impl<S: ExtremalSampler> DualSampler<S> {
    pub fn new(inner: S) -> Self {
        Self {
            inner,
            oversample: 8,
        }
    }

    /// Overrides the candidate-pool factor (minimum 2).
    pub fn with_oversample(mut self, oversample: usize) -> Self {
        self.oversample = oversample.max(2);
        self
    }

    fn resample_chunk<R: Rng + ?Sized>(&self, n: usize, rng: &mut R, out: &mut Vec<f64>) -> Result<()> {
        let pool = self.inner.sample_n(n * self.oversample, rng)?;
        if pool.iter().any(|&w| !(w >= 0.0) || !w.is_finite()) {
            return Err(Error::NonPositiveExtremal);
        }
        let total: f64 = pool.iter().sum();
        if !(total > 0.0) {
            return Err(Error::DegenerateWeights);
        }
        // systematic resampling: one uniform offset, n equally spaced probes
        let step = total / n as f64;
        let mut probe = rng.random::<f64>() * step;
        let mut cum = 0.0;
        let mut taken = 0usize;
        for &w in &pool {
            cum += w;
            while taken < n && probe < cum {
                out.push(1.0 / w);
                probe += step;
                taken += 1;
            }
        }
        // float round-off can leave the last probe just past the total
        while taken < n {
            out.push(1.0 / pool[pool.len() - 1]);
            taken += 1;
        }
        Ok(())
    }
}

impl<S: ExtremalSampler> ExtremalSampler for DualSampler<S> {
    fn sample_n<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Result<Vec<f64>> {
        let mut out = Vec::with_capacity(n);
        let mut remaining = n;
        while remaining > 0 {
            let chunk = remaining.min(DUAL_CHUNK);
            self.resample_chunk(chunk, rng, &mut out)?;
            remaining -= chunk;
        }
        Ok(out)
    }
}

/// Convenience constructor mirroring the underlying transform's name.
pub fn dual_extremal_sampler<S: ExtremalSampler>(sampler: S) -> DualSampler<S> {
    DualSampler::new(sampler)
}
