use alloc::string::String;

/// Errors reported by estimators, samplers, and theory routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[non_exhaustive]
pub enum Error {
    /// An empty input where at least one value is required.
    #[error("empty sample")]
    EmptySample,

    /// Paired inputs of different lengths.
    #[error("length mismatch: x has {x_len} values, y has {y_len}")]
    LengthMismatch { x_len: usize, y_len: usize },

    /// Fewer observations than the operation needs.
    #[error("insufficient data: need at least {needed} observations, got {got}")]
    InsufficientData { needed: usize, got: usize },

    /// A non-finite value where only finite values are admitted.
    #[error("non-finite value at row {index}")]
    NonFinite { index: usize },

    /// Exceedance count too small for a pairwise statistic.
    #[error("need at least two exceedances (k = {k})")]
    TooFewExceedances { k: usize },

    /// Threshold specification does not apply to the sample at hand.
    #[error("threshold spec is for n = {spec_n} but sample has n = {sample_n}")]
    SpecSampleMismatch { spec_n: usize, sample_n: usize },

    /// Joint exceedance set too small for the symmetric tail coefficient.
    #[error("fewer than 2 joint exceedances (got {count})")]
    TooFewJointExceedances { count: usize },

    /// An exceedance indicator vector is constant.
    #[error("degenerate exceedance set")]
    DegenerateExceedances,

    /// A parameter outside its admissible range.
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// An extremal-function sampler produced a non-positive draw.
    #[error("extremal function must be positive")]
    NonPositiveExtremal,

    /// All importance weights vanished in a tilted resampling step.
    #[error("degenerate importance weights (all zero)")]
    DegenerateWeights,
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
