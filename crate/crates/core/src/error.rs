use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the library.
///
/// Input errors describe a bad request. [`Error::Internal`] and
/// [`Error::Overflow`] mean an invariant the library relies on was broken.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus too small: got {got}, need at least {min} ({context})")]
    GenusTooSmall {
        got: u64,
        min: u64,
        context: &'static str,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("no element of order {order} exists in PSL(2,{q})")]
    OrderNotRealizable { q: u64, order: u64 },

    #[error("{what} is not an integer: {numer}/{denom}")]
    NonIntegral {
        what: &'static str,
        numer: i128,
        denom: i128,
    },

    #[error("inconsistent constraints: {0}")]
    InconsistentConstraints(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("internal assertion failed: {0}")]
    Internal(String),
}

impl Error {
    /// True when the error signals a broken internal invariant rather than a
    /// bad request.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_) | Error::Overflow(_))
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
