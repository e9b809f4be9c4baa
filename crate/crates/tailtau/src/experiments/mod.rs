//! The two simulation studies: the asymmetric-logistic parameter grid and the
//! causal SEM comparison, both summarised with medians and quartiles over
//! seeded repetitions.
//!
//! Repetitions are the parallelization unit. Every repetition derives its RNG
//! stream from `(seed, pack_stream_id(row, rep))`, so the output is identical
//! for any worker count or scheduling order.

mod causal;
mod grid;

pub use causal::{find_median, run_causality, CausalExpConfig, CausalRow, CausalScenario};
pub use grid::{run_directionality, run_grid, DirectionRow, GridConfig, GridRow};

/// How large a run is: desk scale keeps the full parameter coverage but cuts
/// repetitions tenfold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScaleProfile {
    Desk,
    Paper,
}

impl ScaleProfile {
    pub fn repetitions(self) -> usize {
        match self {
            ScaleProfile::Desk => 100,
            ScaleProfile::Paper => 1000,
        }
    }
}

impl std::str::FromStr for ScaleProfile {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "desk" => Ok(ScaleProfile::Desk),
            "paper" => Ok(ScaleProfile::Paper),
            other => Err(format!("unknown profile '{other}' (expected desk or paper)")),
        }
    }
}
