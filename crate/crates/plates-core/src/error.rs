use thiserror::Error;

/// Errors surfaced by the plate calculus.
///
/// `Domain` covers structurally invalid inputs (overlapping blocks, mismatched
/// ground sets, labels outside a vector's ground set). `Parse` carries the byte
/// position of the offending character. `Resource` is returned when an
/// enumeration would exceed the configured size cap, and `Sampling` when the
/// genericity rejection loop runs out of retries. `Pole` marks an evaluation at
/// a point where a denominator vanishes; it is deliberately distinct from
/// `Domain` so callers can resample instead of aborting.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("sampling error: {0}")]
    Sampling(String),
    #[error("pole: {0}")]
    Pole(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(position: usize, msg: impl Into<String>) -> Self {
        Error::Parse { position, message: msg.into() }
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub fn sampling(msg: impl Into<String>) -> Self {
        Error::Sampling(msg.into())
    }

    pub fn pole(msg: impl Into<String>) -> Self {
        Error::Pole(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
