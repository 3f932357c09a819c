use std::fmt::Display;

/// Errors carry the exit code the binary reports.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("{stage} stage failed: {message}")]
    Stage { stage: &'static str, message: String },
}

impl CliError {
    pub fn config(message: impl Display) -> Self {
        CliError::Config(message.to_string())
    }

    pub fn stage(stage: &'static str, message: impl Display) -> Self {
        CliError::Stage {
            stage,
            message: message.to_string(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Stage { .. } => 3,
        }
    }
}
