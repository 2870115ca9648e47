//! Error type shared by all modules.

/// Errors produced by the library.
///
/// The variants map onto the caller-visible failure classes: resource limits,
/// invalid usage (preconditions), domain errors (operations that are
/// mathematically undefined for the given inputs), and verification failures
/// (an equation that was required to hold does not).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("conductor {requested} exceeds the configured limit {limit}")]
    ConductorLimit { requested: u64, limit: u32 },

    #[error("degree {requested} exceeds the configured limit {limit}")]
    DegreeLimit { requested: i64, limit: i64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("usage error: {0}")]
    Usage(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// An equality that was required as a precondition or certificate fails.
    /// Carries the smallest exponent at which the two sides differ, and the
    /// two coefficients there (canonical text form).
    #[error("verification failed at exponent {exponent}: lhs has {lhs}, rhs has {rhs}")]
    Verification {
        exponent: i64,
        lhs: String,
        rhs: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
