use num_bigint::BigInt;
use thiserror::Error;

/// Errors produced by the solvers, generator and oracle.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested work exceeds a configured bound.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("{r} is not an admissible divisor of {delta}: {reason}")]
    InadmissibleDivisor {
        delta: BigInt,
        r: BigInt,
        reason: &'static str,
    },

    /// An exact identity that must always hold was violated.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("malformed index file: {0}")]
    IndexFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
