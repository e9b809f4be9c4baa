//! Closed forms for the bivariate Hüsler–Reiss family.

use crate::math::{erfc, erfcx, sqrt};
use crate::{Error, Result};

/// Limiting tail Kendall's tau of the Hüsler–Reiss distribution,
/// `2 exp(gamma) (1 - Phi(sqrt(2 gamma)))`, identical in both directions.
///
/// Algebraically this is the scaled complementary error function
/// `erfcx(sqrt(gamma))`, which is how it is evaluated: the naive product
/// overflows/underflows for `gamma` beyond a few hundred while the scaled
/// form stays accurate for all positive arguments.
pub fn hr_tau_closed(gamma: f64) -> Result<f64> {
    check_gamma(gamma)?;
    Ok(erfcx(sqrt(gamma)))
}

/// Limiting extremal correlation of the Hüsler–Reiss distribution,
/// `2 (1 - Phi(sqrt(gamma) / 2)) = erfc(sqrt(gamma / 8))`.
pub fn hr_chi_closed(gamma: f64) -> Result<f64> {
    check_gamma(gamma)?;
    Ok(erfc(sqrt(gamma / 8.0)))
}

fn check_gamma(gamma: f64) -> Result<()> {
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(Error::invalid("gamma", "must be positive and finite"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_positive_gamma() {
        assert!(hr_tau_closed(0.0).is_err());
        assert!(hr_tau_closed(-1.0).is_err());
        assert!(hr_chi_closed(f64::NAN).is_err());
    }

    #[test]
    fn tau_reference_values() {
        // high-precision reference evaluations (mpmath, 25 digits)
        assert!((hr_tau_closed(1.0).unwrap() - 0.427_583_576_155_807_004_4).abs() < 1e-13);
        assert!((hr_tau_closed(4.0).unwrap() - 0.255_395_676_310_505_743_9).abs() < 1e-13);
    }

    #[test]
    fn chi_reference_values() {
        assert!((hr_chi_closed(1.0).unwrap() - 0.617_075_077_451_973_792_7).abs() < 1e-13);
        assert!((hr_chi_closed(4.0).unwrap() - 0.317_310_507_862_914_102_8).abs() < 1e-13);
    }

    #[test]
    fn complete_dependence_limit() {
        // gamma -> 0+ drives both coefficients to 1
        assert!(hr_tau_closed(1e-12).unwrap() > 0.999_99);
        assert!(hr_chi_closed(1e-12).unwrap() > 0.999_99);
    }

    #[test]
    fn both_maps_are_strictly_decreasing_into_unit_interval() {
        let grid: alloc::vec::Vec<f64> = (0..200).map(|i| 1e-3 * 1.1f64.powi(i)).collect();
        let mut prev_tau = 1.0;
        let mut prev_chi = 1.0;
        for &g in &grid {
            let t = hr_tau_closed(g).unwrap();
            let c = hr_chi_closed(g).unwrap();
            assert!(t > 0.0 && t < 1.0 && c >= 0.0 && c < 1.0, "g={g}");
            assert!(t < prev_tau, "tau not decreasing at g={g}");
            assert!(c < prev_chi || c == 0.0, "chi not decreasing at g={g}");
            prev_tau = t;
            prev_chi = c;
        }
    }

    #[test]
    fn stable_for_huge_gamma() {
        let t = hr_tau_closed(1000.0).unwrap();
        assert!((t - 0.017_832_333_888_542_050_4).abs() < 1e-13);
        let t = hr_tau_closed(1e8).unwrap();
        assert!(t > 0.0 && t < 1e-3);
    }
}
