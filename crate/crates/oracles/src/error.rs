use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} exceeds the brute-force budget of {cap}")]
    Budget { what: String, cap: usize },

    #[error("invalid instance: {0}")]
    Invalid(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl OracleError {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        OracleError::Parse {
            line,
            message: message.into(),
        }
    }
}
