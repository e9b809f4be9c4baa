//! Common observation period of two stations.

use std::collections::BTreeSet;

use tailtau_core::sample::PairedSample;

use super::StationRecord;
use crate::error::{Error, Result};

/// The paired discharges of two stations on their common period.
#[derive(Debug, Clone)]
pub struct CommonPeriod {
    pub sample: PairedSample,
    pub overlap_days: usize,
}

/// Restricts both series to calendar years in which each station has at
/// least one observation, then intersects day-by-day (pairwise complete
/// within those years).
///
/// Errors if the intersection has fewer than `min_overlap_days` days.
pub fn pair_common_period(
    a: &StationRecord,
    b: &StationRecord,
    min_overlap_days: usize,
) -> Result<CommonPeriod> {
    let years_a: BTreeSet<i32> = a.series.iter().map(|(d, _)| year_of(d)).collect();
    let years_b: BTreeSet<i32> = b.series.iter().map(|(d, _)| year_of(d)).collect();

    let mut x = Vec::new();
    let mut y = Vec::new();
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.series.len() && j < b.series.len() {
        let (da, va) = a.series[i];
        let (db, vb) = b.series[j];
        if da < db {
            i += 1;
        } else if db < da {
            j += 1;
        } else {
            let yr = year_of(&da);
            if years_a.contains(&yr) && years_b.contains(&yr) {
                x.push(va);
                y.push(vb);
            }
            i += 1;
            j += 1;
        }
    }

    let overlap_days = x.len();
    if overlap_days < min_overlap_days.max(2) {
        return Err(Error::InsufficientOverlap {
            overlap: overlap_days,
            needed: min_overlap_days.max(2),
        });
    }
    let sample = PairedSample::new(x, y)
        .map_err(Error::Core)?
        .with_labels(&a.station_id, &b.station_id);
    Ok(CommonPeriod {
        sample,
        overlap_days,
    })
}

fn year_of(d: &chrono::NaiveDate) -> i32 {
    use chrono::Datelike;
    d.year()
}

#[cfg(test)]
mod tests {
    use super::*;
    use chrono::NaiveDate;

    fn day(y: i32, m: u32, d: u32) -> NaiveDate {
        NaiveDate::from_ymd_opt(y, m, d).unwrap()
    }

    fn station(id: &str, series: Vec<(NaiveDate, f64)>) -> StationRecord {
        StationRecord {
            station_id: id.into(),
            basin_id: "B".into(),
            name: String::new(),
            series,
        }
    }

    fn daily_series(start: NaiveDate, n: usize, offset: f64) -> Vec<(NaiveDate, f64)> {
        (0..n)
            .map(|i| {
                (
                    start + chrono::Days::new(i as u64),
                    offset + (i as f64 * 0.7).sin().abs() * 10.0,
                )
            })
            .collect()
    }

    #[test]
    fn identical_ranges_intersect_fully() {
        let a = station("a", daily_series(day(2000, 1, 1), 400, 0.0));
        let b = station("b", daily_series(day(2000, 1, 1), 400, 1.0));
        let c = pair_common_period(&a, &b, 10).unwrap();
        assert_eq!(c.overlap_days, 400);
        assert_eq!(c.sample.label_x(), "a");
    }

    #[test]
    fn disjoint_periods_error() {
        let a = station("a", daily_series(day(2000, 1, 1), 100, 0.0));
        let b = station("b", daily_series(day(2005, 1, 1), 100, 0.0));
        assert!(matches!(
            pair_common_period(&a, &b, 10),
            Err(Error::InsufficientOverlap { overlap: 0, .. })
        ));
    }

    #[test]
    fn year_without_data_on_one_side_is_excluded_entirely() {
        // a observes 1989-1991 continuously, b skips 1990 completely: no
        // 1990 day may enter even though a has data there
        let mut sa = daily_series(day(1989, 1, 1), 365, 0.0);
        sa.extend(daily_series(day(1990, 1, 1), 365, 0.0));
        sa.extend(daily_series(day(1991, 1, 1), 365, 0.0));
        let mut sb = daily_series(day(1989, 1, 1), 365, 1.0);
        sb.extend(daily_series(day(1991, 1, 1), 365, 1.0));
        let a = station("a", sa.clone());
        let b = station("b", sb);
        let c = pair_common_period(&a, &b, 10).unwrap();
        // set-intersection oracle restricted to common years
        assert_eq!(c.overlap_days, 730);

        // now give b a handful of 1990 observations: the year qualifies and
        // exactly those days enter the intersection
        let mut sb2 = daily_series(day(1989, 1, 1), 365, 1.0);
        sb2.extend(daily_series(day(1990, 6, 1), 5, 1.0));
        sb2.extend(daily_series(day(1991, 1, 1), 365, 1.0));
        let b2 = station("b", sb2);
        let c2 = pair_common_period(&a, &b2, 10).unwrap();
        assert_eq!(c2.overlap_days, 735);
    }

    #[test]
    fn minimum_overlap_is_enforced() {
        let a = station("a", daily_series(day(2000, 1, 1), 100, 0.0));
        let b = station("b", daily_series(day(2000, 1, 1), 100, 1.0));
        assert!(matches!(
            pair_common_period(&a, &b, 101),
            Err(Error::InsufficientOverlap {
                overlap: 100,
                needed: 101
            })
        ));
    }
}
