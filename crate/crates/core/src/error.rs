use thiserror::Error;

use crate::field::FieldError;

/// Failure of a geometric construction or predicate precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("all homogeneous coordinates are zero")]
    ZeroVector,
    #[error("coordinates violate the Grassmann-Plücker relation")]
    NotALine,
    #[error("collineation matrix is singular")]
    SingularMatrix,
    #[error("arguments are projectively equal")]
    CoincidentArguments,
    #[error("points do not span the required flat")]
    DegenerateSpan,
    #[error("planes do not meet in a single point")]
    DegenerateIntersection,
    #[error("line lies in the plane")]
    LineInPlane,
    #[error("point lies on the line")]
    PointOnLine,
    #[error("lines coincide")]
    CoincidentLines,
    #[error("lines are skew")]
    SkewLines,
    #[error("element dimensions do not match")]
    DimensionMismatch,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("lines are not concurrent")]
    NotConcurrent,
    #[error("base points coincide")]
    CoincidentBase,
    #[error("auxiliary points are degenerate")]
    DegenerateAuxiliaries,
    #[error("argument is not on the required line")]
    ArgumentOffLine,
    #[error("center is incident with the mirror")]
    IncidentCenterMirror,
    #[error("elements do not form a triangle")]
    NotATriangle,
    #[error("points are not in general position")]
    NotAQuadrangle,
    #[error("harmonic constructions degenerate in characteristic 2")]
    CharacteristicTwo,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("point set does not determine a unique nondegenerate form")]
    DegeneratePointSet,
    #[error("pole lies on the curve")]
    PoleOnCurve,
    #[error("points coincide")]
    CoincidentPoints,
    #[error("tangent data is degenerate")]
    DegenerateTangentData,
    #[error("point lies on a generator")]
    PointOnGenerator,
    #[error("generators are coplanar")]
    CoplanarGenerators,
    #[error("plane does not contain the generator")]
    PlaneNotThroughGenerator,
    #[error("point is not on a generator")]
    PointNotOnGenerator,
    #[error("lines are not pairwise skew rules of the ruling")]
    NotRulesOfR,
    #[error("point lies on the surface")]
    PointOnSurface,
    #[error("plane is tangent to the surface")]
    TangentPlane,
    #[error("point is not on the surface")]
    PointNotOnSurface,
    #[error("configuration is degenerate")]
    DegenerateConfiguration,
    #[error("no admissible lift choice found")]
    DegenerateLiftChoice,
    #[error("hexagon is degenerate")]
    DegenerateHexagon,
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;
