//! Pairwise tail-dependence analysis of river gauging stations.
//!
//! Input: daily discharge series, station metadata, and a table of hydraulic
//! relations between stations (computed upstream of this tool, e.g. from a
//! GIS). Output: per-pair directional tail coefficients on the common
//! observation period, a flow-direction arrow per pair, and per-relation
//! summaries.

mod analyze;
mod load;
mod pair;
mod summary;

pub use analyze::{analyze_all_pairs, derive_arrow, AnalysisOutcome, HydroConfig, PairFailure};
pub use load::{
    assemble_stations, load_discharge, load_relations, load_station_metadata, DischargeData,
    StationMeta,
};
pub use pair::{pair_common_period, CommonPeriod};
pub use summary::{group_summary, GroupMedian, GroupSummary, OrderedRow, ScatterRow};

use chrono::NaiveDate;
use std::collections::HashMap;

use crate::error::{Error, Result};
use tailtau_core::tail::TailTauPair;

/// A gauging station with its observed daily discharges (m³/s).
///
/// Only observed days are stored; missing days are gaps. Dates are strictly
/// increasing and values non-negative and finite.
#[derive(Debug, Clone, PartialEq)]
pub struct StationRecord {
    pub station_id: String,
    pub basin_id: String,
    pub name: String,
    pub series: Vec<(NaiveDate, f64)>,
}

/// Hydraulic relation of an ordered station pair `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    DifferentBasin,
    SameBasinUnconnected,
    AUpstreamOfB,
    BUpstreamOfA,
}

impl Relation {
    /// The same relation seen from the swapped pair `(b, a)`.
    pub fn flipped(self) -> Self {
        match self {
            Relation::AUpstreamOfB => Relation::BUpstreamOfA,
            Relation::BUpstreamOfA => Relation::AUpstreamOfB,
            symmetric => symmetric,
        }
    }

    pub fn is_connected(self) -> bool {
        matches!(self, Relation::AUpstreamOfB | Relation::BUpstreamOfA)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Relation::DifferentBasin => "diff_basin",
            Relation::SameBasinUnconnected => "same_basin_unconnected",
            Relation::AUpstreamOfB => "a_upstream_of_b",
            Relation::BUpstreamOfA => "b_upstream_of_a",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "diff_basin" => Some(Relation::DifferentBasin),
            "same_basin_unconnected" => Some(Relation::SameBasinUnconnected),
            "a_upstream_of_b" => Some(Relation::AUpstreamOfB),
            "b_upstream_of_a" => Some(Relation::BUpstreamOfA),
            _ => None,
        }
    }
}

/// Pairwise relation lookup, canonicalized so that `(a, b)` and `(b, a)`
/// are consistent by construction.
#[derive(Debug, Clone, Default)]
pub struct RelationTable {
    map: HashMap<(String, String), Relation>,
}

impl RelationTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records the relation of the ordered pair `(a, b)`. A second insert of
    /// the same pair (in either orientation) must agree or it is rejected.
    pub fn insert(&mut self, a: &str, b: &str, relation: Relation) -> Result<()> {
        if a == b {
            return Err(Error::Data(format!("relation of station {a} with itself")));
        }
        let (key, oriented) = if a < b {
            ((a.to_string(), b.to_string()), relation)
        } else {
            ((b.to_string(), a.to_string()), relation.flipped())
        };
        if let Some(&existing) = self.map.get(&key) {
            if existing != oriented {
                return Err(Error::Data(format!(
                    "conflicting relations for pair ({}, {})",
                    key.0, key.1
                )));
            }
            return Ok(());
        }
        self.map.insert(key, oriented);
        Ok(())
    }

    /// The relation of the ordered pair `(a, b)`, if recorded.
    pub fn lookup(&self, a: &str, b: &str) -> Option<Relation> {
        if a < b {
            self.map
                .get(&(a.to_string(), b.to_string()))
                .copied()
        } else {
            self.map
                .get(&(b.to_string(), a.to_string()))
                .map(|r| r.flipped())
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// Flow-direction arrow derived from the coefficient pair of `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arrow {
    AToB,
    BToA,
    /// Difference below estimator resolution; no direction claimed.
    Undirected,
}

impl Arrow {
    pub fn as_str(self) -> &'static str {
        match self {
            Arrow::AToB => "a_to_b",
            Arrow::BToA => "b_to_a",
            Arrow::Undirected => "undirected",
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Arrow::AToB => Arrow::BToA,
            Arrow::BToA => Arrow::AToB,
            Arrow::Undirected => Arrow::Undirected,
        }
    }
}

/// Result of analysing one station pair.
#[derive(Debug, Clone, PartialEq)]
pub struct PairResult {
    pub station_a: String,
    pub station_b: String,
    pub relation: Relation,
    pub overlap_days: usize,
    pub pair: TailTauPair,
    pub arrow: Arrow,
    pub warnings: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_table_is_orientation_consistent() {
        let mut t = RelationTable::new();
        t.insert("s2", "s1", Relation::AUpstreamOfB).unwrap();
        assert_eq!(t.lookup("s1", "s2"), Some(Relation::BUpstreamOfA));
        assert_eq!(t.lookup("s2", "s1"), Some(Relation::AUpstreamOfB));
        // agreeing duplicate is fine, conflicting one is not
        t.insert("s1", "s2", Relation::BUpstreamOfA).unwrap();
        assert!(t.insert("s1", "s2", Relation::AUpstreamOfB).is_err());
        assert!(t.insert("s1", "s1", Relation::DifferentBasin).is_err());
    }

    #[test]
    fn symmetric_relations_do_not_flip() {
        let mut t = RelationTable::new();
        t.insert("b", "a", Relation::SameBasinUnconnected).unwrap();
        assert_eq!(t.lookup("a", "b"), Some(Relation::SameBasinUnconnected));
    }

    #[test]
    fn relation_round_trips_through_strings() {
        for r in [
            Relation::DifferentBasin,
            Relation::SameBasinUnconnected,
            Relation::AUpstreamOfB,
            Relation::BUpstreamOfA,
        ] {
            assert_eq!(Relation::parse(r.as_str()), Some(r));
        }
        assert_eq!(Relation::parse("nonsense"), None);
    }
}
