//! Per-relation grouping of pair results.

use super::{PairResult, Relation};
use crate::error::{Error, Result};
use crate::summary::median;

/// One scatter point: the coefficient pair of one station pair with its
/// relation class.
#[derive(Debug, Clone, PartialEq)]
pub struct ScatterRow {
    pub station_a: String,
    pub station_b: String,
    pub relation_class: &'static str,
    pub tau_ab: f64,
    pub tau_ba: f64,
    pub max_tau: f64,
}

/// Median overall dependence per relation class.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupMedian {
    pub relation_class: &'static str,
    pub median_max_tau: f64,
    pub pairs: usize,
}

/// A hydraulically connected pair with the coefficients ordered by flow:
/// first the one conditioning on the downstream station.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderedRow {
    pub downstream: String,
    pub upstream: String,
    pub tau_cond_downstream: f64,
    pub tau_cond_upstream: f64,
}

/// Scatter table, per-group medians, and the flow-ordered view of connected
/// pairs.
#[derive(Debug, Clone)]
pub struct GroupSummary {
    pub scatter: Vec<ScatterRow>,
    pub group_medians: Vec<GroupMedian>,
    pub connected_ordered: Vec<OrderedRow>,
}

fn relation_class(relation: Relation) -> &'static str {
    match relation {
        Relation::DifferentBasin => "different_basin",
        Relation::SameBasinUnconnected => "same_basin_unconnected",
        Relation::AUpstreamOfB | Relation::BUpstreamOfA => "connected",
    }
}

/// Groups pair results by relation class.
pub fn group_summary(results: &[PairResult]) -> Result<GroupSummary> {
    if results.is_empty() {
        return Err(Error::Data("no pair results to summarise".into()));
    }
    let mut scatter = Vec::with_capacity(results.len());
    let mut connected_ordered = Vec::new();
    let mut by_class: [(&'static str, Vec<f64>); 3] = [
        ("connected", Vec::new()),
        ("same_basin_unconnected", Vec::new()),
        ("different_basin", Vec::new()),
    ];
    for r in results {
        let class = relation_class(r.relation);
        scatter.push(ScatterRow {
            station_a: r.station_a.clone(),
            station_b: r.station_b.clone(),
            relation_class: class,
            tau_ab: r.pair.tau_xy,
            tau_ba: r.pair.tau_yx,
            max_tau: r.pair.max_tau,
        });
        by_class
            .iter_mut()
            .find(|(name, _)| *name == class)
            .unwrap()
            .1
            .push(r.pair.max_tau);
        match r.relation {
            Relation::AUpstreamOfB => connected_ordered.push(OrderedRow {
                downstream: r.station_b.clone(),
                upstream: r.station_a.clone(),
                tau_cond_downstream: r.pair.tau_yx,
                tau_cond_upstream: r.pair.tau_xy,
            }),
            Relation::BUpstreamOfA => connected_ordered.push(OrderedRow {
                downstream: r.station_a.clone(),
                upstream: r.station_b.clone(),
                tau_cond_downstream: r.pair.tau_xy,
                tau_cond_upstream: r.pair.tau_yx,
            }),
            _ => {}
        }
    }
    let group_medians = by_class
        .into_iter()
        .filter(|(_, v)| !v.is_empty())
        .map(|(name, mut v)| GroupMedian {
            relation_class: name,
            median_max_tau: median(&mut v),
            pairs: v.len(),
        })
        .collect();
    Ok(GroupSummary {
        scatter,
        group_medians,
        connected_ordered,
    })
}
