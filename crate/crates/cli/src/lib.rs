//! Frontend for the `projbound` binary: a command table, request validation,
//! dispatch onto the library, and text/JSON rendering.
//!
//! Exit codes: 0 success, 1 internal error or failed verification,
//! 2 validation error or unknown fixture.

mod args;
mod command;
mod dispatch;
mod envelope;

pub use args::{build_cli, request_from_args, run};
pub use command::{find_command, parse_ints, parse_rows, CommandRequest, CommandSpec, Kind, OutputFormat, Param, ParamSpec, COMMANDS};
pub use dispatch::{dispatch, CASTELNUOVO_WARNING, HARTSHORNE_WARNING, MUMFORD_WARNING};
pub use envelope::{CitationRef, ErrorBody, ErrorEnvelope, ResultEnvelope};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("unknown fixture: {0}")]
    UnknownFixture(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) | CliError::UnknownFixture(_) => 2,
            CliError::Internal(_) => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Validation(_) => "validation",
            CliError::UnknownFixture(_) => "unknown-fixture",
            CliError::Internal(_) => "internal",
        }
    }
}

impl From<projbound::Error> for CliError {
    fn from(e: projbound::Error) -> Self {
        match e {
            projbound::Error::Domain(m) => CliError::Validation(m),
            projbound::Error::UnknownFixture(m) => CliError::UnknownFixture(m),
            projbound::Error::FixtureFormat(m) => CliError::Validation(format!("fixture file: {m}")),
        }
    }
}
