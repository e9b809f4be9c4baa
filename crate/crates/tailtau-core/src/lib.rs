//! Directional ("tail") Kendall's tau for extreme observations.
//!
//! Classical dependence summaries such as Kendall's tau or the extremal
//! correlation are symmetric in the two variables. This crate implements a
//! *directional* variant: Kendall's tau computed only over the observations
//! where one chosen variable is large. Comparing the two directions exposes
//! asymmetry in the dependence between extremes, e.g. between discharge
//! series at an upstream and a downstream river gauge.
//!
//! The crate provides three layers:
//!
//! * [`sample`], [`rank`], [`kendall`], [`tail`] — rank utilities and the
//!   empirical estimators (classical tau, directional tail tau, symmetric
//!   tail tau, exceedance-indicator correlation chi);
//! * [`copula`] — seeded samplers for the generative models used to study
//!   the estimators: symmetric/asymmetric logistic copulas, the bivariate
//!   Hüsler–Reiss distribution, and linear SEMs with heavy-tailed noise;
//! * [`theory`] — the limiting coefficients: closed forms for Hüsler–Reiss,
//!   Monte Carlo evaluation through extremal functions for other families,
//!   and dependence curves over parameter grids.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the `std` feature
//! (default) only forwards to the dependencies' `std` features. All
//! transcendental math is routed through `libm`, so sampler output is
//! bit-identical across platforms for a fixed [`copula::RngStream`].

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod copula;
mod error;
pub mod kendall;
pub(crate) mod math;
pub mod rank;
pub mod sample;
pub mod tail;
pub mod theory;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
