use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument must be positive, got 0")]
    ZeroArgument,

    #[error("{what} out of range: {value} (expected {expected})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        expected: &'static str,
    },

    #[error("graph on {n} vertices is disconnected; vertex {from} cannot reach {to}")]
    DisconnectedGraph { n: usize, from: usize, to: usize },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("no closed form for {family} at n = {n}")]
    NoClosedForm { family: &'static str, n: u64 },

    #[error("matrix order {order} exceeds the dense guard of {limit}")]
    TooLarge { order: usize, limit: usize },

    #[error("spectrum has no zero eigenvalue")]
    MissingZeroEigenvalue,

    #[error("invalid combination: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
