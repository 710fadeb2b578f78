use thiserror::Error;

/// Errors produced by the library.
///
/// Hypothesis failures of the theorem engine are *not* errors: they are
/// recorded in a [`Certificate`](crate::seshadri::Certificate). The variants
/// below are reserved for malformed input and operations that cannot be
/// evaluated at all.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot compare against the square root of a negative number")]
    NegativeRadicand,
    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),
    #[error("divisor class does not belong to this surface")]
    SurfaceMismatch,
    #[error("invalid surface model: {0}")]
    InvalidSurface(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("surface has no canonical class")]
    MissingCanonicalClass,
    #[error("surface is missing Chern data ({0})")]
    MissingChernData(&'static str),
    #[error("curve {0:?} has no divisor class")]
    MissingClass(String),
    #[error("curve {0:?} has no genus")]
    MissingGenus(String),
    #[error("malformed arrangement: {0}")]
    Structural(String),
    #[error("arrangement has no singular points")]
    NoSingularPoints,
    #[error("the two lines coincide")]
    IdenticalLines,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no generic configuration found after {attempts} attempts")]
    GenericityNotAchieved { attempts: u32 },
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error("expected an arrangement on {expected}, found {found}")]
    WrongSurface { expected: String, found: String },
    #[error("hypotheses violated: {}", .0.join("; "))]
    HypothesesViolated(Vec<String>),
    #[error("bound is vacuous: denominator {0} is not positive")]
    BoundVacuous(String),
    #[error("hyperplane containment check failed: {0}")]
    Containment(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
