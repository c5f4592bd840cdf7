use thiserror::Error;

/// Failures raised by the geometry kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("side {name} must be positive, got {value}")]
    NonPositiveSide { name: char, value: String },

    #[error("triangle inequality violated: {lhs} ≤ {rhs}")]
    TriangleInequality { lhs: String, rhs: String },

    #[error("degenerate triangle: zero area")]
    ZeroArea,

    #[error("barycentric weights sum to zero")]
    ZeroWeightSum,

    #[error("infinity direction must have zero coordinate sum")]
    NotAtInfinity,

    #[error("degenerate direction: |l|² = 0")]
    DegenerateDirection,

    #[error("tangent triangle degenerate: right angle at {vertex}, tangent lines are parallel")]
    TangentTriangleDegenerate { vertex: char },

    #[error("{0} normalizer vanishes")]
    ZeroNormalizer(&'static str),

    #[error("incenter, circumcenter and orthocenter are collinear")]
    FrameDegenerate,

    #[error("Euler line undefined for an equilateral triangle")]
    Equilateral,

    #[error("square root of negative value {0}")]
    NegativeSqrt(String),

    #[error("invalid rational literal {0:?}")]
    Parse(String),
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;
