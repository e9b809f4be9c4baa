#![allow(dead_code)]

//! Shared helpers for the integration tests: simple RNG-backed fixtures and
//! Kolmogorov–Smirnov distances.

use rand::Rng;
use tailtau_core::copula::RngStream;
use tailtau_core::sample::PairedSample;

/// Uniform(0,1) paired sample with continuous (a.s. tie-free) values.
pub fn random_continuous_sample(n: usize, stream: u64) -> PairedSample {
    let mut rng = RngStream::with_stream(0xC0FFEE, stream).rng();
    let x: Vec<f64> = (0..n).map(|_| rng.random::<f64>() * 100.0 - 50.0).collect();
    let y: Vec<f64> = (0..n).map(|_| rng.random::<f64>() * 100.0 - 50.0).collect();
    PairedSample::new(x, y).unwrap()
}

/// One-sample KS distance against an analytic CDF.
pub fn ks_distance_cdf(sample: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let mut v = sample.to_vec();
    v.sort_unstable_by(f64::total_cmp);
    let n = v.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in v.iter().enumerate() {
        let f = cdf(x);
        d = d.max((((i + 1) as f64) / n - f).abs());
        d = d.max((f - (i as f64) / n).abs());
    }
    d
}

/// Two-sample KS distance.
pub fn ks_distance_two(a: &[f64], b: &[f64]) -> f64 {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable_by(f64::total_cmp);
    b.sort_unstable_by(f64::total_cmp);
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j) = (0usize, 0usize);
    let mut d: f64 = 0.0;
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            i += 1;
        } else {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    d
}

/// Standard Fréchet distribution function.
pub fn frechet_cdf(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        (-1.0 / x).exp()
    }
}

/// KS threshold calibrated by simulating the null: draws `reps` genuine
/// samples of size `n` through the inverse CDF and returns 1.5 times the
/// largest observed distance.
pub fn calibrated_ks_threshold(
    n: usize,
    reps: usize,
    inv_cdf: impl Fn(f64) -> f64,
    cdf: impl Fn(f64) -> f64 + Copy,
) -> f64 {
    let mut worst: f64 = 0.0;
    for r in 0..reps {
        let mut rng = RngStream::with_stream(0x5EED, r as u64).rng();
        let v: Vec<f64> = (0..n)
            .map(|_| {
                let u: f64 = rng.sample(rand::distr::Open01);
                inv_cdf(u)
            })
            .collect();
        worst = worst.max(ks_distance_cdf(&v, cdf));
    }
    worst * 1.5
}
