use thiserror::Error;

use crate::priors::PriorKind;

pub type Result<T> = std::result::Result<T, LomaxError>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LomaxError {
    #[error("invalid Lomax parameters beta={beta}, alpha={alpha}: both must be positive and finite")]
    InvalidParams { beta: f64, alpha: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("mean undefined for alpha={0} (requires alpha > 1)")]
    MeanUndefined(f64),

    #[error("variance undefined for alpha={0} (requires alpha > 2)")]
    VarianceUndefined(f64),

    #[error("improper posterior: the {prior} prior requires n >= {min_n}, got n={n}")]
    ImproperPosterior { prior: PriorKind, n: usize, min_n: usize },

    #[error("degenerate data: every observation is zero, the scale conditional is undefined")]
    DegenerateData,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("need at least {needed} draws, got {got}")]
    InsufficientDraws { needed: usize, got: usize },

    #[error("chains have unequal lengths ({0} vs {1})")]
    UnequalChains(usize, usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("replicate {replicate} (prior {prior}, n={n}) failed: {source}")]
    Replicate {
        prior: PriorKind,
        n: usize,
        replicate: usize,
        source: Box<LomaxError>,
    },
}

impl LomaxError {
    /// Process exit status: 1 usage, 2 data, 3 numerical or propriety.
    pub fn exit_code(&self) -> i32 {
        match self {
            LomaxError::Config(_) | LomaxError::InvalidParams { .. } => 1,
            LomaxError::Parse { .. }
            | LomaxError::Io(_)
            | LomaxError::Domain(_)
            | LomaxError::DegenerateData => 2,
            LomaxError::ImproperPosterior { .. }
            | LomaxError::MeanUndefined(_)
            | LomaxError::VarianceUndefined(_)
            | LomaxError::InsufficientDraws { .. }
            | LomaxError::UnequalChains(..) => 3,
            LomaxError::Replicate { source, .. } => source.exit_code(),
        }
    }
}

impl From<std::io::Error> for LomaxError {
    fn from(e: std::io::Error) -> Self {
        LomaxError::Io(e.to_string())
    }
}
