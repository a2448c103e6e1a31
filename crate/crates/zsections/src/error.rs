use thiserror::Error;

/// Why a run stopped. Each variant maps onto a process exit code.
#[derive(Debug, Error)]
pub enum RunError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{count} numerical hazard flag(s) raised, more than the {limit} allowed")]
    Hazard { count: usize, limit: usize },
    #[error("{0}")]
    Numeric(#[from] zsections_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl RunError {
    pub fn config(msg: impl Into<String>) -> Self {
        RunError::Config(msg.into())
    }

    /// 2 for anything the caller can fix by changing the invocation,
    /// 3 when the numerics themselves raised a flag.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Hazard { .. } => 3,
            RunError::Numeric(zsections_core::Error::Convergence { .. }) => 3,
            _ => 2,
        }
    }
}
