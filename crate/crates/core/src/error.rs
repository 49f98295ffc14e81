use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series division by a series with zero constant term")]
    DivisionByNonUnit,

    #[error("operation requires a zero constant term, found {found}")]
    NonZeroConstantTerm { found: f64 },

    #[error("operation requires constant term 1, found modulus {found}")]
    NonUnitConstantTerm { found: f64 },

    #[error("inner series of a composition must vanish at 0 (constant term modulus {found})")]
    InnerNotVanishing { found: f64 },

    #[error("series orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("series is not normalized as z + a_2 z^2 + ...")]
    NotNormalized,

    #[error("series of order {order} is too short: {needed} needed")]
    OrderTooSmall { order: usize, needed: usize },

    #[error("evaluation point r = {r} outside [0, 1)")]
    PointOutOfRange { r: f64 },

    #[error(
        "truncated evaluation did not converge: order {order} gives {low}, order {high_order} gives {high}"
    )]
    TruncationNotConverged {
        order: usize,
        high_order: usize,
        low: f64,
        high: f64,
    },

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    #[error("derivative vanishes at the origin; geometric probe is undefined")]
    DegenerateDerivative,

    #[error("geometric hypothesis failed: {0}")]
    ProbeFailed(String),

    #[error("adaptive quadrature did not reach the requested accuracy on [{a}, {b}]")]
    QuadratureNotConverged { a: f64, b: f64 },

    #[error("boundary value f0(-1) = {value} is not negative")]
    BoundaryNotNegative { value: f64 },

    #[error("internal consistency check failed: {what} (deviation {deviation:e})")]
    ConsistencyCheck { what: String, deviation: f64 },

    #[error("no sign change on ({r_low}, {r_high}): F = {f_low} .. {f_high}")]
    NoSignChange {
        r_low: f64,
        r_high: f64,
        f_low: f64,
        f_high: f64,
    },

    #[error("equation is not monotone: value drops by {drop:e} near r = {r}")]
    MonotonicityViolated { r: f64, drop: f64 },

    #[error("admissibility condition failed: {0}")]
    AdmissibilityFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
