//! Rank transforms and top-k selection by one marginal.

use alloc::vec::Vec;

use crate::sample::{Axis, PairedSample, ThresholdSpec};
use crate::{Error, Result};

/// Ranks `1..=n` with a count of ties encountered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranks {
    /// `ranks[i]` is the rank of `values[i]`; a permutation of `1..=n` when
    /// the values are distinct.
    pub ranks: Vec<usize>,
    /// Number of adjacent equal pairs in sorted order, i.e. the sum of
    /// `group_size - 1` over tied groups. Zero means all values distinct.
    pub tie_count: usize,
}

/// Ranks the values from smallest (rank 1) to largest (rank n).
///
/// Ties are broken by first occurrence: among equal values, the earlier row
/// receives the smaller rank. Values must be finite.
pub fn rank_transform(values: &[f64]) -> Result<Ranks> {
    if values.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut order: Vec<usize> = (0..values.len()).collect();
    // stable sort keeps tied values in first-occurrence order
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));

    let mut ranks = alloc::vec![0usize; values.len()];
    let mut tie_count = 0;
    for (pos, &idx) in order.iter().enumerate() {
        ranks[idx] = pos + 1;
        if pos > 0 && values[order[pos - 1]] == values[idx] {
            tie_count += 1;
        }
    }
    Ok(Ranks { ranks, tie_count })
}

/// The `k` rows whose conditioning-axis value is largest.
#[derive(Debug, Clone)]
pub struct TopK {
    /// Selected rows, in their original relative order.
    pub sample: PairedSample,
    /// True when ties at the selection boundary forced a first-occurrence
    /// tie-break to return exactly `k` rows.
    pub threshold_tied: bool,
}

/// Selects the `k = spec.k()` observations largest along `axis`.
///
/// Exactly `k` rows are returned for every input. Under distinct values this
/// is the strict-exceedance set over the `(n-k)`-th order statistic; under
/// ties at the boundary, earlier rows win and [`TopK::threshold_tied`] is set.
pub fn select_top_k(sample: &PairedSample, spec: &ThresholdSpec, axis: Axis) -> Result<TopK> {
    let n = sample.len();
    if spec.n() != n {
        return Err(Error::SpecSampleMismatch {
            spec_n: spec.n(),
            sample_n: n,
        });
    }
    let k = spec.k();
    let values = sample.axis(axis);

    // order by (value desc, original index asc)
    let by_desc = |a: &usize, b: &usize| {
        values[*b]
            .total_cmp(&values[*a])
            .then_with(|| a.cmp(b))
    };

    let mut idx: Vec<usize> = (0..n).collect();
    let threshold_tied = if k < n {
        idx.select_nth_unstable_by(k - 1, by_desc);
        let boundary = values[idx[k - 1]];
        idx[k..].iter().any(|&i| values[i] == boundary)
    } else {
        false
    };

    let mut selected: Vec<usize> = idx[..k].to_vec();
    selected.sort_unstable();
    let x = selected.iter().map(|&i| sample.x()[i]).collect();
    let y = selected.iter().map(|&i| sample.y()[i]).collect();
    let sub = PairedSample::new(x, y)?.with_labels(sample.label_x(), sample.label_y());
    Ok(TopK {
        sample: sub,
        threshold_tied,
    })
}
