use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0} is not invertible")]
    NotInvertible(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("operation requires a Euclidean or quotient ring (tier 1), got {0}")]
    Tier2(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("{0} exceeds the factorization bound {1}")]
    FactorBound(String, String),

    #[error("step budget of {0} exhausted in {1}")]
    BudgetExhausted(u64, &'static str),

    #[error("power iteration bound {0} exceeded while deciding radical membership")]
    PowerBound(usize),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("d∘d ≠ 0 in degree {0}")]
    NotAComplex(i64),

    #[error("invalid chain map: {0}")]
    InvalidChainMap(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("spectrum is disconnected: non-trivial idempotent {0}")]
    DisconnectedSpectrum(String),

    #[error("connectedness of the spectrum could not be decided: {0}")]
    UnknownConnectivity(String),

    #[error("powers of the ideal stabilize at index {0}; the obstruction vanishes")]
    PowersStabilize(usize),

    #[error("witness check failed at {path}: {reason}")]
    Witness { path: String, reason: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
