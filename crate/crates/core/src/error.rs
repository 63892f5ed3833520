use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd undefined: both arguments are zero")]
    GcdUndefined,
    #[error("polynomial is identically zero")]
    IdenticallyZero,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("empty interval: lower end must be strictly below upper end")]
    EmptyInterval,

    #[error("at least one interpolation node is required")]
    NoNodes,
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("nodes not distinct")]
    NodesNotDistinct,
    #[error("values must be positive")]
    NonPositiveValue,

    #[error("points not distinct")]
    PointsNotDistinct,
    #[error("point is not in the open positive quadrant")]
    NotPositiveQuadrant,
    #[error("projective point has all coordinates zero")]
    ZeroPoint,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("at least one point is required")]
    NoPoints,
    #[error("map is not defined at this point (uncertified move {0})")]
    Indeterminate(usize),
    #[error("certification failed at move {index}: {reason}")]
    CertificationFailed { index: usize, reason: String },

    #[error("points coincide; no unique line through them")]
    EqualPoints,
    #[error("blown-up points must be distinct and lie on the contracted line")]
    PointNotOnLine,
    #[error("indeterminate or contracted locus")]
    ExcludedLocus,
    #[error("degenerate configuration: conic not unique")]
    ConicNotUnique,

    #[error("normalize with classify first: {0}")]
    NeedsNormalization(String),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("invalid surface type: {0}")]
    InvalidSurface(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
