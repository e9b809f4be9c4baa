//! Plot-ready delimited-text output. All tables are plain CSV with a header
//! row; floats are written in shortest round-trip form so identical runs
//! produce byte-identical files.

use std::path::Path;

use tailtau_core::sample::PairedSample;
use tailtau_core::tail::{ChiEstimate, TailTauPair};
use tailtau_core::theory::DependenceCurve;

use crate::error::{Error, Result};
use crate::experiments::{CausalRow, DirectionRow, GridRow};
use crate::hydro::{AnalysisOutcome, GroupSummary};

fn writer(path: &Path) -> Result<csv::Writer<std::fs::File>> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
        }
    }
    let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    Ok(csv::Writer::from_writer(file))
}

fn fin(mut w: csv::Writer<std::fs::File>, path: &Path) -> Result<()> {
    w.flush().map_err(|e| Error::io(path, e))?;
    Ok(())
}

fn f(v: f64) -> String {
    if v.is_nan() {
        String::new()
    } else {
        format!("{v}")
    }
}

pub fn write_samples_csv(path: &Path, sample: &PairedSample) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record([sample.label_x(), sample.label_y()])
        .map_err(|e| Error::format(path, e.to_string()))?;
    for (x, y) in sample.x().iter().zip(sample.y()) {
        w.write_record([f(*x), f(*y)])
            .map_err(|e| Error::format(path, e.to_string()))?;
    }
    fin(w, path)
}

pub fn write_estimate_csv(path: &Path, pair: &TailTauPair, chi: Option<&ChiEstimate>) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record([
        "q",
        "k",
        "tau_xy",
        "tau_yx",
        "asymmetry",
        "max_tau",
        "chi",
        "joint_exceedances",
    ])
    .map_err(|e| Error::format(path, e.to_string()))?;
    w.write_record([
        f(pair.q),
        pair.k.to_string(),
        f(pair.tau_xy),
        f(pair.tau_yx),
        f(pair.asymmetry),
        f(pair.max_tau),
        chi.map_or(String::new(), |c| f(c.chi)),
        chi.map_or(String::new(), |c| c.joint_exceedances.to_string()),
    ])
    .map_err(|e| Error::format(path, e.to_string()))?;
    fin(w, path)
}

/// Dependence-curve table: `parameter,chi,tau_xy,tau_yx,se_xy,se_yx`.
pub fn write_curve_csv(path: &Path, curve: &DependenceCurve) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record(["parameter", "chi", "tau_xy", "tau_yx", "se_xy", "se_yx"])
        .map_err(|e| Error::format(path, e.to_string()))?;
    for r in &curve.rows {
        w.write_record([f(r.parameter), f(r.chi), f(r.tau_xy), f(r.tau_yx), f(r.se_xy), f(r.se_yx)])
            .map_err(|e| Error::format(path, e.to_string()))?;
    }
    fin(w, path)
}

pub fn write_grid_csv(path: &Path, rows: &[GridRow]) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record([
        "inv_alpha",
        "beta1",
        "beta2",
        "n",
        "k",
        "reps",
        "med_tau_xy",
        "q25_tau_xy",
        "q75_tau_xy",
        "med_tau_yx",
        "q25_tau_yx",
        "q75_tau_yx",
        "med_asymmetry",
        "q25_asymmetry",
        "q75_asymmetry",
        "med_max_tau",
        "q25_max_tau",
        "q75_max_tau",
        "asymmetry_of_medians",
    ])
    .map_err(|e| Error::format(path, e.to_string()))?;
    for r in rows {
        w.write_record([
            f(r.inv_alpha),
            f(r.beta1),
            f(r.beta2),
            r.n.to_string(),
            r.k.to_string(),
            r.reps.to_string(),
            f(r.med_tau_xy),
            f(r.q25_tau_xy),
            f(r.q75_tau_xy),
            f(r.med_tau_yx),
            f(r.q25_tau_yx),
            f(r.q75_tau_yx),
            f(r.med_asymmetry),
            f(r.q25_asymmetry),
            f(r.q75_asymmetry),
            f(r.med_max_tau),
            f(r.q25_max_tau),
            f(r.q75_max_tau),
            f(r.asymmetry_of_medians),
        ])
        .map_err(|e| Error::format(path, e.to_string()))?;
    }
    fin(w, path)
}

pub fn write_direction_csv(path: &Path, rows: &[DirectionRow]) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record([
        "inv_alpha",
        "beta1",
        "beta2",
        "beta_diff",
        "ordered",
        "med_tau_downstream",
        "med_tau_upstream",
        "frac_downstream_smaller",
        "reps",
    ])
    .map_err(|e| Error::format(path, e.to_string()))?;
    for r in rows {
        w.write_record([
            f(r.inv_alpha),
            f(r.beta1),
            f(r.beta2),
            f(r.beta_diff),
            r.ordered.to_string(),
            f(r.med_tau_downstream),
            f(r.med_tau_upstream),
            f(r.frac_downstream_smaller),
            r.reps.to_string(),
        ])
        .map_err(|e| Error::format(path, e.to_string()))?;
    }
    fin(w, path)
}

pub fn write_causal_csv(path: &Path, rows: &[CausalRow]) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record(["scenario", "coefficient", "median", "q25", "q75", "n_used", "reps"])
        .map_err(|e| Error::format(path, e.to_string()))?;
    for r in rows {
        w.write_record([
            r.scenario.to_string(),
            r.coefficient.to_string(),
            f(r.median),
            f(r.q25),
            f(r.q75),
            r.n_used.to_string(),
            r.reps.to_string(),
        ])
        .map_err(|e| Error::format(path, e.to_string()))?;
    }
    fin(w, path)
}

/// Main hydro output:
/// `station_a,station_b,relation,overlap_days,q,k,tau_ab,tau_ba,asymmetry,max_tau,arrow,warnings`.
pub fn write_hydro_pairs_csv(path: &Path, outcome: &AnalysisOutcome) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record([
        "station_a",
        "station_b",
        "relation",
        "overlap_days",
        "q",
        "k",
        "tau_ab",
        "tau_ba",
        "asymmetry",
        "max_tau",
        "arrow",
        "warnings",
    ])
    .map_err(|e| Error::format(path, e.to_string()))?;
    for r in &outcome.results {
        w.write_record([
            r.station_a.clone(),
            r.station_b.clone(),
            r.relation.as_str().to_string(),
            r.overlap_days.to_string(),
            f(r.pair.q),
            r.pair.k.to_string(),
            f(r.pair.tau_xy),
            f(r.pair.tau_yx),
            f(r.pair.asymmetry),
            f(r.pair.max_tau),
            r.arrow.as_str().to_string(),
            r.warnings.join("; "),
        ])
        .map_err(|e| Error::format(path, e.to_string()))?;
    }
    fin(w, path)
}

pub fn write_hydro_failures_csv(path: &Path, outcome: &AnalysisOutcome) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record(["station_a", "station_b", "reason"])
        .map_err(|e| Error::format(path, e.to_string()))?;
    for r in &outcome.failures {
        w.write_record([r.station_a.clone(), r.station_b.clone(), r.reason.clone()])
            .map_err(|e| Error::format(path, e.to_string()))?;
    }
    fin(w, path)
}

pub fn write_hydro_summary_csvs(
    scatter_path: &Path,
    medians_path: &Path,
    ordered_path: &Path,
    summary: &GroupSummary,
) -> Result<()> {
    let mut w = writer(scatter_path)?;
    w.write_record(["station_a", "station_b", "relation_class", "tau_ab", "tau_ba", "max_tau"])
        .map_err(|e| Error::format(scatter_path, e.to_string()))?;
    for r in &summary.scatter {
        w.write_record([
            r.station_a.clone(),
            r.station_b.clone(),
            r.relation_class.to_string(),
            f(r.tau_ab),
            f(r.tau_ba),
            f(r.max_tau),
        ])
        .map_err(|e| Error::format(scatter_path, e.to_string()))?;
    }
    fin(w, scatter_path)?;

    let mut w = writer(medians_path)?;
    w.write_record(["relation_class", "median_max_tau", "pairs"])
        .map_err(|e| Error::format(medians_path, e.to_string()))?;
    for r in &summary.group_medians {
        w.write_record([r.relation_class.to_string(), f(r.median_max_tau), r.pairs.to_string()])
            .map_err(|e| Error::format(medians_path, e.to_string()))?;
    }
    fin(w, medians_path)?;

    let mut w = writer(ordered_path)?;
    w.write_record(["downstream", "upstream", "tau_cond_downstream", "tau_cond_upstream"])
        .map_err(|e| Error::format(ordered_path, e.to_string()))?;
    for r in &summary.connected_ordered {
        w.write_record([
            r.downstream.clone(),
            r.upstream.clone(),
            f(r.tau_cond_downstream),
            f(r.tau_cond_upstream),
        ])
        .map_err(|e| Error::format(ordered_path, e.to_string()))?;
    }
    fin(w, ordered_path)
}
