//! Error kinds shared by every module.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the operation's domain (bad shape, wrong size, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A configured enumeration or rank limit would be exceeded.
    #[error("resource limit exceeded: {what} needs {needed}, cap is {cap}")]
    Resource {
        what: String,
        needed: u64,
        cap: u64,
    },
    /// An identity that must hold did not; indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
