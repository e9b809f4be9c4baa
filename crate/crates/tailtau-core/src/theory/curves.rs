//! Dependence curves: chi and both tail tau coefficients over a parameter
//! grid.

use alloc::vec::Vec;

use crate::copula::RngStream;
use crate::theory::{
    chi_limit_mc, hr_chi_closed, hr_tau_closed, tau_limit_mc, DirichletExtremalSampler,
};
use crate::{Error, Result};

/// One grid point of a dependence curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveRow {
    pub parameter: f64,
    pub chi: f64,
    pub tau_xy: f64,
    pub tau_yx: f64,
    /// Monte Carlo standard errors; zero when the value is a closed form.
    pub se_xy: f64,
    pub se_yx: f64,
}

/// Coefficients tabulated over a strictly increasing parameter grid.
#[derive(Debug, Clone, PartialEq)]
pub struct DependenceCurve {
    pub rows: Vec<CurveRow>,
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::EmptySample);
    }
    if grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::invalid("grid", "must be strictly increasing"));
    }
    Ok(())
}

/// Hüsler–Reiss curve over a gamma grid, from the closed forms.
pub fn husler_reiss_curve(gamma_grid: &[f64]) -> Result<DependenceCurve> {
    check_grid(gamma_grid)?;
    let rows = gamma_grid
        .iter()
        .map(|&g| {
            let tau = hr_tau_closed(g)?;
            Ok(CurveRow {
                parameter: g,
                chi: hr_chi_closed(g)?,
                tau_xy: tau,
                tau_yx: tau,
                se_xy: 0.0,
                se_yx: 0.0,
            })
        })
        .collect::<Result<_>>()?;
    Ok(DependenceCurve { rows })
}

/// Extremal Dirichlet curve over an `alpha2` grid at fixed `alpha1`, by Monte
/// Carlo over the extremal functions (`n_mc` pairs per direction and point).
pub fn dirichlet_curve(
    alpha1: f64,
    alpha2_grid: &[f64],
    n_mc: usize,
    stream: &RngStream,
) -> Result<DependenceCurve> {
    check_grid(alpha2_grid)?;
    let mut rng = stream.rng();
    let rows = alpha2_grid
        .iter()
        .map(|&a2| {
            let forward = DirichletExtremalSampler::forward(alpha1, a2)?;
            let reverse = DirichletExtremalSampler::reverse(alpha1, a2)?;
            let txy = tau_limit_mc(&forward, n_mc, &mut rng)?;
            let tyx = tau_limit_mc(&reverse, n_mc, &mut rng)?;
            let chi = chi_limit_mc(&forward, n_mc, &mut rng)?;
            Ok(CurveRow {
                parameter: a2,
                chi: chi.value,
                tau_xy: txy.value,
                tau_yx: tyx.value,
                se_xy: txy.std_error,
                se_yx: tyx.std_error,
            })
        })
        .collect::<Result<_>>()?;
    Ok(DependenceCurve { rows })
}
