//! Causal SEM experiment: directional coefficients across the six causal
//! configurations of two variables, with and without a confounder.

use rayon::prelude::*;

use tailtau_core::copula::{pack_stream_id, sample_sem, RngStream, SemConfig, SemDirection};
use tailtau_core::sample::ThresholdSpec;
use tailtau_core::tail::{symmetric_tail_tau, tail_tau_pair};
use tailtau_core::Error as CoreError;

use super::ScaleProfile;
use crate::error::{Error, Result};
use crate::summary::quartiles;

/// The six causal models of two variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausalScenario {
    Independent,
    XCausesY,
    YCausesX,
    IndependentConfounded,
    XCausesYConfounded,
    YCausesXConfounded,
}

impl CausalScenario {
    pub fn all() -> [CausalScenario; 6] {
        [
            CausalScenario::Independent,
            CausalScenario::XCausesY,
            CausalScenario::YCausesX,
            CausalScenario::IndependentConfounded,
            CausalScenario::XCausesYConfounded,
            CausalScenario::YCausesXConfounded,
        ]
    }

    pub fn label(self) -> &'static str {
        match self {
            CausalScenario::Independent => "independent",
            CausalScenario::XCausesY => "x_causes_y",
            CausalScenario::YCausesX => "y_causes_x",
            CausalScenario::IndependentConfounded => "independent_confounded",
            CausalScenario::XCausesYConfounded => "x_causes_y_confounded",
            CausalScenario::YCausesXConfounded => "y_causes_x_confounded",
        }
    }

    pub fn confounded(self) -> bool {
        matches!(
            self,
            CausalScenario::IndependentConfounded
                | CausalScenario::XCausesYConfounded
                | CausalScenario::YCausesXConfounded
        )
    }

    fn direction(self) -> SemDirection {
        match self {
            CausalScenario::Independent | CausalScenario::IndependentConfounded => {
                SemDirection::Independent
            }
            CausalScenario::XCausesY | CausalScenario::XCausesYConfounded => SemDirection::XToY,
            CausalScenario::YCausesX | CausalScenario::YCausesXConfounded => SemDirection::YToX,
        }
    }
}

/// Configuration of the causal experiment. Defaults: samples of 4000, causal
/// coefficient 0.3, t(3) noise, `q = 0.98` (80 exceedances), confounder
/// loading 0.3.
#[derive(Debug, Clone, PartialEq)]
pub struct CausalExpConfig {
    pub n_per_sample: usize,
    pub n_reps: usize,
    pub q: f64,
    pub beta: f64,
    pub noise_dof: f64,
    pub confounder_loading: f64,
    pub seed: u64,
}

impl CausalExpConfig {
    pub fn with_profile(profile: ScaleProfile, seed: u64) -> Self {
        Self {
            n_per_sample: 4000,
            n_reps: profile.repetitions(),
            q: 0.98,
            beta: 0.3,
            noise_dof: 3.0,
            confounder_loading: 0.3,
            seed,
        }
    }

    fn sem_config(&self, scenario: CausalScenario) -> Result<SemConfig> {
        let mut config = SemConfig::new(scenario.direction(), self.beta)?.with_noise_dof(self.noise_dof)?;
        if scenario.confounded() {
            config = config.with_confounder(self.confounder_loading)?;
        }
        Ok(config)
    }
}

/// One summary row: a scenario and one of the three coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct CausalRow {
    pub scenario: &'static str,
    /// `tau_xy`, `tau_yx`, or `tau_sym`.
    pub coefficient: &'static str,
    pub median: f64,
    pub q25: f64,
    pub q75: f64,
    /// Repetitions that produced a value. The symmetric coefficient needs at
    /// least two joint exceedances, which very weakly dependent data does
    /// not always provide; those repetitions are skipped and reported here.
    pub n_used: usize,
    pub reps: usize,
}

/// Runs all six scenarios; three rows per scenario, scenario-major in the
/// order of [`CausalScenario::all`].
pub fn run_causality(config: &CausalExpConfig) -> Result<Vec<CausalRow>> {
    if config.n_reps == 0 {
        return Err(Error::Config("n_reps must be positive".into()));
    }
    let spec = ThresholdSpec::from_q(config.q, config.n_per_sample).map_err(Error::Core)?;
    let per_scenario: Vec<Vec<CausalRow>> = CausalScenario::all()
        .into_par_iter()
        .enumerate()
        .map(|(idx, scenario)| {
            let sem = config.sem_config(scenario)?;
            let mut tau_xy = Vec::with_capacity(config.n_reps);
            let mut tau_yx = Vec::with_capacity(config.n_reps);
            let mut tau_sym = Vec::with_capacity(config.n_reps);
            for rep in 0..config.n_reps {
                let stream =
                    RngStream::with_stream(config.seed, pack_stream_id(idx as u32, rep as u32));
                let sample = sample_sem(&sem, config.n_per_sample, &stream)?;
                let pair = tail_tau_pair(&sample, &spec)?;
                tau_xy.push(pair.tau_xy);
                tau_yx.push(pair.tau_yx);
                match symmetric_tail_tau(&sample, &spec) {
                    Ok(t) => tau_sym.push(t),
                    Err(CoreError::TooFewJointExceedances { .. }) => {}
                    Err(e) => return Err(e.into()),
                }
            }
            let reps = config.n_reps;
            let row = |name: &'static str, values: &mut Vec<f64>| {
                let n_used = values.len();
                let q = quartiles(values);
                CausalRow {
                    scenario: scenario.label(),
                    coefficient: name,
                    median: q.median,
                    q25: q.q25,
                    q75: q.q75,
                    n_used,
                    reps,
                }
            };
            if tau_sym.is_empty() {
                return Err(Error::Data(format!(
                    "scenario {}: no repetition had two joint exceedances",
                    scenario.label()
                )));
            }
            Ok(vec![
                row("tau_xy", &mut tau_xy),
                row("tau_yx", &mut tau_yx),
                row("tau_sym", &mut tau_sym),
            ])
        })
        .collect::<Result<_>>()?;
    Ok(per_scenario.into_iter().flatten().collect())
}

/// Convenience lookup in the output of [`run_causality`].
pub fn find_median(rows: &[CausalRow], scenario: &str, coefficient: &str) -> Option<f64> {
    rows.iter()
        .find(|r| r.scenario == scenario && r.coefficient == coefficient)
        .map(|r| r.median)
}
