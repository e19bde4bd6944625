use sextic_core::pipeline::AnalysisError;

/// Anything the driver can fail with. Bad input maps to exit code 3, the
/// rest to 2.
#[derive(Debug, thiserror::Error)]
pub enum ForgeError {
    #[error("bad input: {0}")]
    BadInput(String),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl ForgeError {
    pub fn exit_code(&self) -> i32 {
        match self {
            ForgeError::BadInput(_) | ForgeError::Json(_) => 3,
            _ => 2,
        }
    }
}

pub fn bad(msg: impl Into<String>) -> ForgeError {
    ForgeError::BadInput(msg.into())
}
