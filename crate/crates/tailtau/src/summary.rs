//! Order statistics for experiment summaries.

/// Linear-interpolation quantile (the "type 7" convention) of a sorted slice.
pub fn quantile_sorted(sorted: &[f64], p: f64) -> f64 {
    debug_assert!(!sorted.is_empty());
    debug_assert!((0.0..=1.0).contains(&p));
    let pos = p * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    if lo == hi {
        sorted[lo]
    } else {
        let w = pos - lo as f64;
        sorted[lo] * (1.0 - w) + sorted[hi] * w
    }
}

/// Median / quartile triple of an unsorted batch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quartiles {
    pub q25: f64,
    pub median: f64,
    pub q75: f64,
}

pub fn quartiles(values: &mut [f64]) -> Quartiles {
    values.sort_unstable_by(f64::total_cmp);
    Quartiles {
        q25: quantile_sorted(values, 0.25),
        median: quantile_sorted(values, 0.5),
        q75: quantile_sorted(values, 0.75),
    }
}

pub fn median(values: &mut [f64]) -> f64 {
    values.sort_unstable_by(f64::total_cmp);
    quantile_sorted(values, 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_of_odd_and_even_batches() {
        assert_eq!(median(&mut [3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&mut [4.0, 1.0, 2.0, 3.0]), 2.5);
    }

    #[test]
    fn quartiles_are_ordered() {
        let mut v: Vec<f64> = (0..101).map(|i| (i as f64 * 0.37).sin()).collect();
        let q = quartiles(&mut v);
        assert!(q.q25 <= q.median && q.median <= q.q75);
    }

    #[test]
    fn quantile_endpoints() {
        let v = [1.0, 2.0, 10.0];
        assert_eq!(quantile_sorted(&v, 0.0), 1.0);
        assert_eq!(quantile_sorted(&v, 1.0), 10.0);
        assert_eq!(quantile_sorted(&v, 0.5), 2.0);
    }
}
