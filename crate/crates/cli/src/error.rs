use std::fmt;

use skewinfo::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("parse error in {file}{}, field `{field}`: {message}", Line(*line))]
    Parse { file: String, line: Option<usize>, field: String, message: String },
    #[error("validation error ({invariant}): {message}")]
    Validation { invariant: &'static str, message: String },
    #[error("self-check failed: {0}")]
    SelfCheck(String),
    #[error("cannot access {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

struct Line(Option<usize>);

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(l) => write!(f, " at line {l}"),
            None => Ok(()),
        }
    }
}

impl CliError {
    /// 2 for configuration and input errors, 3 for invalid objects, 4 for
    /// failed self-checks.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Parse { .. } | CliError::Io { .. } => 2,
            CliError::Validation { .. } => 3,
            CliError::SelfCheck(_) => 4,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let invariant = match e {
            CoreError::NotHermitian { .. } => "hermiticity",
            CoreError::TraceNotOne { .. } => "trace",
            CoreError::NegativeEigenvalue { .. } => "positivity",
            CoreError::CompletenessViolation { .. } => "completeness",
            CoreError::NotUnitary { .. } => "unitarity",
            CoreError::BlochVectorTooLong { .. } => "bloch vector",
            _ => return CliError::Config(e.to_string()),
        };
        CliError::Validation { invariant, message: e.to_string() }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
