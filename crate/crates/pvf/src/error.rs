use thiserror::Error;

/// Errors surfaced by the workbench. CLI exit codes group these into
/// user errors (1), infeasible studies (2), and internal failures (3).
#[derive(Debug, Error)]
pub enum PvfError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("infeasible fault plan: {0}")]
    InfeasiblePlan(String),

    #[error("campaign infeasible: {0}")]
    CampaignInfeasible(String),

    #[error("enumeration too large: {0}")]
    EnumerationTooLarge(String),

    #[error("training diverged: {0}")]
    TrainingDiverged(String),

    #[error("malformed {what}: {detail}")]
    Format { what: &'static str, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl PvfError {
    pub fn format(what: &'static str, detail: impl Into<String>) -> Self {
        PvfError::Format {
            what,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, PvfError>;
