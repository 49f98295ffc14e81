//! CLI errors and their exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// A flag value that does not parse or is out of range.
    #[error("invalid value for {flag}: {msg}")]
    Flag { flag: &'static str, msg: String },
    #[error("{path}: {msg}")]
    File { path: String, msg: String },
    #[error(transparent)]
    Core(#[from] bohr_core::Error),
    #[error("cannot write output: {0}")]
    Output(String),
}

impl CliError {
    pub fn flag(flag: &'static str, msg: impl Into<String>) -> Self {
        CliError::Flag { flag, msg: msg.into() }
    }

    /// 2 for numerical failures (no root, truncation, quadrature), 3 for
    /// anything the user can fix by changing parameters.
    pub fn exit_code(&self) -> i32 {
        use bohr_core::Error as E;
        match self {
            CliError::Core(
                E::NoSignChange { .. }
                | E::MonotonicityViolated { .. }
                | E::TruncationNotConverged { .. }
                | E::QuadratureNotConverged { .. }
                | E::DivisionByNonUnit
                | E::DegenerateDerivative
                | E::ConsistencyCheck { .. }
                | E::BoundaryNotNegative { .. },
            ) => 2,
            CliError::Output(_) => 2,
            _ => 3,
        }
    }
}
