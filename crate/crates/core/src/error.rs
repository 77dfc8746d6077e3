use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: i64 },
    #[error("gcd({a}, {b}) = {gcd}, expected coprime integers")]
    NotCoprime { a: i64, b: i64, gcd: i64 },
    #[error("at least one Newton pair is required (the unknot is not an algebraic knot here)")]
    EmptyNewtonPairs,
    #[error("Newton pair #{index} = ({p}, {q}): {reason}")]
    InvalidNewtonPair {
        index: usize,
        p: i64,
        q: i64,
        reason: &'static str,
    },
    #[error("spin^c index a = {a} out of range [0, {p})")]
    SpincOutOfRange { a: i64, p: i64 },
    #[error("tau must satisfy tau(1) > tau(0) = 0")]
    TauHypothesis,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("lattice box has {volume} points, above the limit of {limit}")]
    BoxTooLarge { volume: u128, limit: u128 },
    #[error("sublevel set touches the enumeration box boundary; result unreliable")]
    BoxBoundaryContact,
    #[error("malformed plumbing graph: {0}")]
    Graph(String),
    #[error("intersection form is not negative definite")]
    NotNegativeDefinite,
    #[error("Laufer sequence exceeded {0} steps")]
    StepBound(usize),
    #[error("internal invariant failed: {0}")]
    Invariant(String),
}

impl Error {
    /// True when the error stems from user input rather than from a broken
    /// internal identity.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::NonPositive { .. }
                | Error::NotCoprime { .. }
                | Error::EmptyNewtonPairs
                | Error::InvalidNewtonPair { .. }
                | Error::SpincOutOfRange { .. }
                | Error::TauHypothesis
                | Error::Parse(_)
                | Error::BoxTooLarge { .. }
                | Error::Graph(_)
                | Error::NotNegativeDefinite
        )
    }
}

macro_rules! invariant {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::Error::Invariant(alloc::format!($($arg)+)));
        }
    };
}
pub(crate) use invariant;
