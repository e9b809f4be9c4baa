//! Classical Kendall rank correlation (tau-a convention).

use alloc::vec::Vec;

use crate::sample::PairedSample;
use crate::{Error, Result};

/// Kendall's tau of a paired sample: `(#concordant - #discordant) / C(n,2)`.
///
/// Pairs tied in either coordinate contribute zero to the numerator while the
/// denominator stays `C(n,2)` (the tau-a convention), so the coefficient of
/// tied data is pulled towards zero rather than rescaled.
///
/// Runs in O(n log n) via merge-sort inversion counting; it agrees exactly
/// with the O(n^2) sign-sum definition, which the tests keep as an oracle.
pub fn kendall_tau(sample: &PairedSample) -> Result<f64> {
    let n = sample.len();
    if n < 2 {
        return Err(Error::InsufficientData { needed: 2, got: n });
    }
    let num = concordant_minus_discordant(sample.x(), sample.y());
    Ok(num as f64 / pairs(n) as f64)
}

/// Number of unordered pairs C(n, 2).
pub(crate) fn pairs(n: usize) -> u64 {
    let n = n as u64;
    n * (n - 1) / 2
}

/// `#concordant - #discordant` over all pairs, ties contributing zero.
///
/// With `tot = C(n,2)`, `tx`/`ty` the pairs tied in x/y, `txy` the pairs tied
/// in both, and `d` the strictly discordant pairs, the identity
/// `c - d = tot - tx - ty + txy - 2 d` holds because `tot - tx - ty + txy`
/// counts exactly the pairs untied in both coordinates.
pub(crate) fn concordant_minus_discordant(x: &[f64], y: &[f64]) -> i64 {
    let n = x.len();
    debug_assert_eq!(n, y.len());

    let mut order: Vec<u32> = (0..n as u32).collect();
    order.sort_unstable_by(|&a, &b| {
        x[a as usize]
            .total_cmp(&x[b as usize])
            .then_with(|| y[a as usize].total_cmp(&y[b as usize]))
    });

    // tie counts over x-groups and joint (x, y)-groups
    let mut ties_x = 0u64;
    let mut ties_xy = 0u64;
    let mut run_x = 1u64;
    let mut run_xy = 1u64;
    for w in order.windows(2) {
        let (a, b) = (w[0] as usize, w[1] as usize);
        if x[a] == x[b] {
            run_x += 1;
            if y[a] == y[b] {
                run_xy += 1;
            } else {
                ties_xy += run_xy * (run_xy - 1) / 2;
                run_xy = 1;
            }
        } else {
            ties_x += run_x * (run_x - 1) / 2;
            ties_xy += run_xy * (run_xy - 1) / 2;
            run_x = 1;
            run_xy = 1;
        }
    }
    ties_x += run_x * (run_x - 1) / 2;
    ties_xy += run_xy * (run_xy - 1) / 2;

    // discordant pairs = strict y-inversions in x-order (x-tied groups are
    // y-sorted by the secondary key, so they contribute none)
    let mut ys: Vec<f64> = order.iter().map(|&i| y[i as usize]).collect();
    let mut buf = ys.clone();
    let discordant = merge_count_inversions(&mut ys, &mut buf);

    // ys is now sorted: count y-ties by group scan
    let mut ties_y = 0u64;
    let mut run_y = 1u64;
    for w in ys.windows(2) {
        if w[0] == w[1] {
            run_y += 1;
        } else {
            ties_y += run_y * (run_y - 1) / 2;
            run_y = 1;
        }
    }
    ties_y += run_y * (run_y - 1) / 2;

    let tot = pairs(n);
    tot as i64 - ties_x as i64 - ties_y as i64 + ties_xy as i64 - 2 * discordant as i64
}

/// Sorts `v` counting pairs `(i < j)` with `v[i] > v[j]` strictly.
fn merge_count_inversions(v: &mut [f64], buf: &mut [f64]) -> u64 {
    let n = v.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let (left_v, right_v) = v.split_at_mut(mid);
    let (left_b, right_b) = buf.split_at_mut(mid);
    let mut count = merge_count_inversions(left_v, left_b) + merge_count_inversions(right_v, right_b);

    let (mut i, mut j, mut out) = (0, 0, 0);
    while i < left_v.len() && j < right_v.len() {
        // equal values go left-first and are not inversions
        if right_v[j] < left_v[i] {
            count += (left_v.len() - i) as u64;
            buf[out] = right_v[j];
            j += 1;
        } else {
            buf[out] = left_v[i];
            i += 1;
        }
        out += 1;
    }
    while i < left_v.len() {
        buf[out] = left_v[i];
        i += 1;
        out += 1;
    }
    while j < right_v.len() {
        buf[out] = right_v[j];
        j += 1;
        out += 1;
    }
    v.copy_from_slice(&buf[..n]);
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn tau(x: &[f64], y: &[f64]) -> f64 {
        kendall_tau(&PairedSample::new(x.to_vec(), y.to_vec()).unwrap()).unwrap()
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

    /// Definition-level oracle: double loop over all pairs.
    fn brute_force_numerator(x: &[f64], y: &[f64]) -> i64 {
        let mut s = 0i64;
        for i in 0..x.len() {
            for j in (i + 1)..x.len() {
                s += sgn(x[i] - x[j]) * sgn(y[i] - y[j]);
            }
        }
        s
    }

    #[test]
    fn perfectly_concordant_and_discordant() {
        assert_eq!(
            tau(&[1.0, 2.0, 3.0, 4.0, 5.0], &[1.0, 2.0, 3.0, 4.0, 5.0]),
            1.0
        );
        assert_eq!(tau(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0]), -1.0);
    }

    #[test]
    fn hand_enumerated_mixed_case() {
        // pairs of (1,2,3,4) vs (1,4,2,3): four concordant, two discordant
        assert_eq!(tau(&[1.0, 2.0, 3.0, 4.0], &[1.0, 4.0, 2.0, 3.0]), 2.0 / 6.0);
    }

    #[test]
    fn rejects_single_observation() {
        let s = PairedSample::new(vec![1.0, 2.0], vec![1.0, 2.0]).unwrap();
        assert!(kendall_tau(&s).is_ok());
        // n < 2 cannot even be constructed; the guard is on the estimator too
        assert_eq!(
            PairedSample::new(vec![1.0], vec![1.0]).unwrap_err(),
            Error::InsufficientData { needed: 2, got: 1 }
        );
    }

    #[test]
    fn tied_pairs_contribute_zero() {
        // all x tied: numerator 0
        assert_eq!(tau(&[1.0, 1.0, 1.0], &[1.0, 2.0, 3.0]), 0.0);
        // one tie in each coordinate
        assert_eq!(
            concordant_minus_discordant(&[1.0, 1.0, 2.0], &[5.0, 7.0, 7.0]),
            1
        );
        assert_eq!(brute_force_numerator(&[1.0, 1.0, 2.0], &[5.0, 7.0, 7.0]), 1);
    }

    #[test]
    fn matches_brute_force_with_heavy_ties() {
        // small lattice data exercises every tie configuration
        let vals = [0.0, 1.0, 2.0];
        let n = 5;
        let mut x = vec![0.0; n];
        let mut y = vec![0.0; n];
        // enumerate a few hundred deterministic lattice combinations
        for code in 0..3usize.pow(2 * n as u32) {
            if code % 7 != 0 {
                continue;
            }
            let mut c = code;
            for i in 0..n {
                x[i] = vals[c % 3];
                c /= 3;
            }
            for i in 0..n {
                y[i] = vals[c % 3];
                c /= 3;
            }
            assert_eq!(
                concordant_minus_discordant(&x, &y),
                brute_force_numerator(&x, &y),
                "x={x:?} y={y:?}"
            );
        }
    }
}
