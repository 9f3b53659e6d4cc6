//! Command line front-end for `orecent-core`: context files, commands,
//! JSON reports and the `verify` suites.
//!
//! Exit codes: 0 success, 1 usage error, 2 computation error,
//! 3 verification failure, 4 solver instability.

pub mod commands;
pub mod context;
pub mod report;
pub mod suites;

use thiserror::Error;

pub use commands::{run_command, Outcome};
pub use context::{parse_context, ContextSpec};
pub use report::{Report, Results};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Computation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Computation(_) => 2,
        }
    }
}
