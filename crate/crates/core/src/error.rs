use thiserror::Error;

/// Errors raised by the bound, classification and oracle routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input violates a documented precondition. The payload names it.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("invalid fixture file: {0}")]
    FixtureFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Returns `Err(Error::Domain(..))` naming `what` unless `cond` holds.
pub(crate) fn require(cond: bool, what: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(what.into()))
    }
}
