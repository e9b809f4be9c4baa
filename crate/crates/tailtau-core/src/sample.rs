//! Paired observations and exceedance-threshold bookkeeping.

use alloc::string::String;
use alloc::vec::Vec;

use crate::math;
use crate::{Error, Result};

/// Which marginal of a [`PairedSample`] an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// Direction of a tail coefficient: the first variable is the one whose
/// exceedances are conditioned on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    XToY,
    YToX,
}

impl Direction {
    /// The conditioning axis of this direction.
    pub fn conditioning_axis(self) -> Axis {
        match self {
            Direction::XToY => Axis::X,
            Direction::YToX => Axis::Y,
        }
    }
}

/// `n` paired observations with finite values and `n >= 2`.
///
/// Construction rejects or drops non-finite rows, so downstream code can rely
/// on every value being comparable with plain `<`/`>`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairedSample {
    x: Vec<f64>,
    y: Vec<f64>,
    label_x: String,
    label_y: String,
}

/// Result of pairwise-complete construction: the retained sample plus the
/// number of rows that were dropped because either coordinate was missing
/// (NaN) or otherwise non-finite.
#[derive(Debug, Clone)]
pub struct CompletePairs {
    pub sample: PairedSample,
    pub dropped_rows: usize,
}

impl PairedSample {
    /// Builds a sample from already-clean data.
    ///
    /// Errors if the lengths differ, any value is non-finite, or fewer than
    /// two rows are supplied.
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::LengthMismatch {
                x_len: x.len(),
                y_len: y.len(),
            });
        }
        if x.len() < 2 {
            return Err(Error::InsufficientData {
                needed: 2,
                got: x.len(),
            });
        }
        for (i, (&a, &b)) in x.iter().zip(&y).enumerate() {
            if !a.is_finite() || !b.is_finite() {
                return Err(Error::NonFinite { index: i });
            }
        }
        Ok(Self {
            x,
            y,
            label_x: String::from("x"),
            label_y: String::from("y"),
        })
    }

    /// Builds a sample keeping only rows where both coordinates are finite,
    /// reporting how many rows were dropped.
    pub fn pairwise_complete(x: &[f64], y: &[f64]) -> Result<CompletePairs> {
        if x.len() != y.len() {
            return Err(Error::LengthMismatch {
                x_len: x.len(),
                y_len: y.len(),
            });
        }
        let mut kept_x = Vec::with_capacity(x.len());
        let mut kept_y = Vec::with_capacity(y.len());
        for (&a, &b) in x.iter().zip(y) {
            if a.is_finite() && b.is_finite() {
                kept_x.push(a);
                kept_y.push(b);
            }
        }
        let dropped_rows = x.len() - kept_x.len();
        let sample = PairedSample::new(kept_x, kept_y)?;
        Ok(CompletePairs {
            sample,
            dropped_rows,
        })
    }

    pub fn with_labels(mut self, label_x: &str, label_y: &str) -> Self {
        self.label_x = String::from(label_x);
        self.label_y = String::from(label_y);
        self
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    pub fn axis(&self, axis: Axis) -> &[f64] {
        match axis {
            Axis::X => &self.x,
            Axis::Y => &self.y,
        }
    }

    pub fn label_x(&self) -> &str {
        &self.label_x
    }

    pub fn label_y(&self) -> &str {
        &self.label_y
    }

    /// Swaps the two coordinates (and labels).
    pub fn swapped(&self) -> Self {
        Self {
            x: self.y.clone(),
            y: self.x.clone(),
            label_x: self.label_y.clone(),
            label_y: self.label_x.clone(),
        }
    }

    /// Internal constructor for sampler output, which is finite by
    /// construction.
    pub(crate) fn from_generated(x: Vec<f64>, y: Vec<f64>) -> Self {
        debug_assert_eq!(x.len(), y.len());
        debug_assert!(x.iter().chain(&y).all(|v| v.is_finite()));
        Self {
            x,
            y,
            label_x: String::from("x"),
            label_y: String::from("y"),
        }
    }
}

/// Probability level `q` together with the derived exceedance count `k` for a
/// sample of size `n`.
///
/// The conversion is `k = round(n * (1 - q))`, and `k` must satisfy
/// `2 <= k <= n` so that at least one pair of exceedances exists. Raising `q`
/// trades estimation variance for approximation bias; this type is the single
/// place that trade-off enters the API.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdSpec {
    q: f64,
    k: usize,
    n: usize,
}

impl ThresholdSpec {
    /// Derives `k` from a probability level `q` in `[0, 1)`.
    pub fn from_q(q: f64, n: usize) -> Result<Self> {
        if !(0.0..1.0).contains(&q) {
            return Err(Error::invalid("q", "must lie in [0, 1)"));
        }
        let k = math::round(n as f64 * (1.0 - q)) as usize;
        Self::checked(q, k.min(n), n)
    }

    /// Uses an explicit exceedance count `k`, with `q = 1 - k/n`.
    pub fn from_k(k: usize, n: usize) -> Result<Self> {
        let q = 1.0 - k as f64 / n as f64;
        Self::checked(q.max(0.0), k, n)
    }

    fn checked(q: f64, k: usize, n: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::TooFewExceedances { k });
        }
        if k > n {
            return Err(Error::invalid("k", "exceeds the sample size"));
        }
        Ok(Self { q, k, n })
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }
}
