use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("coefficient q^{index} requested beyond declared precision {prec}")]
    PrecisionExceeded { index: usize, prec: usize },

    #[error("coefficient ring mismatch: {0}")]
    RingMismatch(String),

    #[error("weight {weight} has the wrong parity for this character")]
    ParityMismatch { weight: i64 },

    #[error("invalid character: {0}")]
    InvalidCharacter(String),

    #[error("level {0} is not square-free")]
    NotSquareFree(u64),

    #[error("{0} does not divide {1}")]
    NotDivisor(u64, u64),

    #[error("direct summation needs Re(s) > 1, got {0}")]
    NonConvergent(f64),

    #[error("insufficient precision: need {needed}, have {have}")]
    InsufficientPrecision { needed: usize, have: usize },

    #[error("the weight 2 trivial-sign Eisenstein series is excluded")]
    ExcludedEisenstein,

    #[error("weight must be even and at least 2, got {0}")]
    BadWeight(i64),

    #[error("routes disagree: {0}")]
    RouteMismatch(String),

    #[error("cusp remainder has rank {rank}; only rank 0 or 1 is supported")]
    RankTooLarge { rank: usize },

    #[error("Eisenstein constant terms are inconsistent")]
    InconsistentEisenstein,

    #[error("remainder is not a multiple of a single eigenform: {0}")]
    NotRankOne(String),

    #[error("evaluation point is within {distance:e} of a pole")]
    PoleProximity { distance: f64 },

    #[error("series did not converge: {0}")]
    Convergence(String),

    #[error("not an eigenform: eigen-relation residual {0:e}")]
    NotEigenform(f64),

    #[error("missing period data: {0}")]
    MissingPeriods(String),

    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("fitted Petersson norm is not real positive: {0}")]
    NonPositiveNorm(String),

    #[error("fit residual {residual:e} exceeds tolerance {tolerance:e}")]
    FitResidual { residual: f64, tolerance: f64 },

    #[error("no rational with denominator <= {max_den} within {tol:e} of {value}")]
    SnapFailed { value: f64, max_den: u64, tol: f64 },

    #[error("configuration error: {0}")]
    Config(String),
}
