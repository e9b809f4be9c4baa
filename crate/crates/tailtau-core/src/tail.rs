//! Directional tail Kendall's tau, its symmetric variant, and the empirical
//! exceedance correlation chi.

use alloc::vec::Vec;

use crate::kendall::{self, kendall_tau};
use crate::rank::select_top_k;
use crate::sample::{Direction, PairedSample, ThresholdSpec};
use crate::{Error, Result};

/// The coefficient pair for both conditioning directions, with the derived
/// asymmetry and overall-dependence summaries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailTauPair {
    /// Tau conditioned on exceedances of the first variable.
    pub tau_xy: f64,
    /// Tau conditioned on exceedances of the second variable.
    pub tau_yx: f64,
    pub q: f64,
    pub k: usize,
    /// `|tau_xy - tau_yx|`: the asymmetry of the extremal dependence.
    pub asymmetry: f64,
    /// `max(tau_xy, tau_yx)`: the overall strength of extremal dependence.
    pub max_tau: f64,
}

/// Empirical correlation of the two exceedance indicators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiEstimate {
    pub chi: f64,
    pub q: f64,
    /// Rows where both variables exceed their marginal threshold.
    pub joint_exceedances: usize,
}

/// Kendall's tau over the `k` observations where the direction's conditioning
/// variable is largest.
///
/// Equivalent to `kendall_tau(select_top_k(sample, spec, axis))`: the signed
/// pair sum over the exceedance set, normalized by `C(k,2)` regardless of
/// ties. With `k = n` this is the classical coefficient.
pub fn tail_tau(sample: &PairedSample, spec: &ThresholdSpec, direction: Direction) -> Result<f64> {
    let top = select_top_k(sample, spec, direction.conditioning_axis())?;
    kendall_tau(&top.sample)
}

/// Both directions on the same sample, plus derived fields.
pub fn tail_tau_pair(sample: &PairedSample, spec: &ThresholdSpec) -> Result<TailTauPair> {
    let tau_xy = tail_tau(sample, spec, Direction::XToY)?;
    let tau_yx = tail_tau(sample, spec, Direction::YToX)?;
    Ok(TailTauPair {
        tau_xy,
        tau_yx,
        q: spec.q(),
        k: spec.k(),
        asymmetry: (tau_xy - tau_yx).abs(),
        max_tau: tau_xy.max(tau_yx),
    })
}

/// Sensitivity sweep over several probability levels.
///
/// Threshold choice trades bias against variance, so rather than guessing a
/// level this helper evaluates the coefficient pair across a user-supplied
/// list of `q` values for stability inspection.
pub fn tail_tau_sweep(sample: &PairedSample, qs: &[f64]) -> Result<Vec<TailTauPair>> {
    qs.iter()
        .map(|&q| {
            let spec = ThresholdSpec::from_q(q, sample.len())?;
            tail_tau_pair(sample, &spec)
        })
        .collect()
}

/// Classical Kendall's tau restricted to rows where *both* variables exceed
/// their marginal threshold (order statistic `n - k`).
///
/// Symmetric in the two variables by construction; useful as a baseline that
/// measures overall extremal dependence without direction information.
pub fn symmetric_tail_tau(sample: &PairedSample, spec: &ThresholdSpec) -> Result<f64> {
    let n = sample.len();
    if spec.n() != n {
        return Err(Error::SpecSampleMismatch {
            spec_n: spec.n(),
            sample_n: n,
        });
    }
    let tx = order_statistic(sample.x(), n - spec.k());
    let ty = order_statistic(sample.y(), n - spec.k());
    let mut x = Vec::new();
    let mut y = Vec::new();
    for (&a, &b) in sample.x().iter().zip(sample.y()) {
        if a > tx && b > ty {
            x.push(a);
            y.push(b);
        }
    }
    let count = x.len();
    if count < 2 {
        return Err(Error::TooFewJointExceedances { count });
    }
    kendall_tau(&PairedSample::new(x, y)?)
}

/// Empirical pre-limit exceedance correlation at level `q`.
///
/// Pearson correlation of the indicator vectors `1{x_i > x_(ceil(q n))}` and
/// `1{y_i > y_(ceil(q n))}`; thresholds are order statistics with strict
/// exceedance, the same convention as the tail tau estimators.
pub fn chi_hat(sample: &PairedSample, q: f64) -> Result<ChiEstimate> {
    let n = sample.len();
    if !(0.0 < q && q < 1.0) {
        return Err(Error::invalid("q", "must lie in (0, 1)"));
    }
    if (n as f64) * (1.0 - q) < 1.0 {
        return Err(Error::invalid("q", "n(1-q) must be at least 1"));
    }
    let j = crate::math::ceil(q * n as f64) as usize;
    let tx = order_statistic(sample.x(), j);
    let ty = order_statistic(sample.y(), j);

    let mut above_x = 0u64;
    let mut above_y = 0u64;
    let mut joint = 0u64;
    for (&a, &b) in sample.x().iter().zip(sample.y()) {
        let ea = a > tx;
        let eb = b > ty;
        above_x += ea as u64;
        above_y += eb as u64;
        joint += (ea && eb) as u64;
    }
    if above_x == 0 || above_x == n as u64 || above_y == 0 || above_y == n as u64 {
        return Err(Error::DegenerateExceedances);
    }

    let nf = n as f64;
    let (sa, sb, sab) = (above_x as f64, above_y as f64, joint as f64);
    let cov = nf * sab - sa * sb;
    let var = (nf * sa - sa * sa) * (nf * sb - sb * sb);
    Ok(ChiEstimate {
        chi: cov / crate::math::sqrt(var),
        q,
        joint_exceedances: joint as usize,
    })
}

/// `j`-th smallest value, 1-indexed; `j = 0` returns negative infinity so a
/// strict comparison keeps everything.
fn order_statistic(values: &[f64], j: usize) -> f64 {
    if j == 0 {
        return f64::NEG_INFINITY;
    }
    let mut v = values.to_vec();
    let (_, stat, _) = v.select_nth_unstable_by(j - 1, f64::total_cmp);
    *stat
}

/// Definition-level brute force for the directional estimator: enumerates all
/// pairs and applies the strict-exceedance indicator on the conditioning
/// variable, normalizing by `C(k,2)`.
///
/// Exposed for oracle testing; `tail_tau` must agree with it exactly on
/// continuous (tie-free) data.
pub fn tail_tau_brute_force(
    sample: &PairedSample,
    spec: &ThresholdSpec,
    direction: Direction,
) -> Result<f64> {
    let n = sample.len();
    if spec.n() != n {
        return Err(Error::SpecSampleMismatch {
            spec_n: spec.n(),
            sample_n: n,
        });
    }
    let cond = sample.axis(direction.conditioning_axis());
    let other = sample.axis(match direction.conditioning_axis() {
        crate::sample::Axis::X => crate::sample::Axis::Y,
        crate::sample::Axis::Y => crate::sample::Axis::X,
    });
    let threshold = order_statistic(cond, n - spec.k());
    let mut num = 0i64;
    for i in 0..n {
        for j in (i + 1)..n {
            if cond[i] > threshold && cond[j] > threshold {
                let sx = sgn(cond[i] - cond[j]);
                let sy = sgn(other[i] - other[j]);
                num += sx * sy;
            }
        }
    }
    Ok(num as f64 / kendall::pairs(spec.k()) as f64)
}

fn sgn(v: f64) -> i64 {
    if v > 0.0 {
        1
    } else if v < 0.0 {
        -1
    } else {
        0
    }
}
