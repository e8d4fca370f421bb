use thiserror::Error;

use crate::geometry::{LatticeVector, Point2};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// `code()` gives a stable machine-readable name; the CLI and the C ABI both
/// key off it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector has no primitive direction")]
    ZeroVector,
    #[error("vector {0} is not primitive")]
    NonPrimitive(String),
    #[error("cone generators {alpha} and {beta} are linearly dependent")]
    DegenerateCone {
        alpha: LatticeVector,
        beta: LatticeVector,
    },
    #[error("empty input")]
    EmptyInput,
    #[error("halfspace does not meet the polytope")]
    EmptyCut,
    #[error("cut leaves a lower-dimensional set")]
    DegenerateCut,
    #[error("input points are not full dimensional")]
    NotFullDimensional,
    #[error("polygon is not strictly convex and counterclockwise")]
    InvalidPolygon,
    #[error("lambda must be strictly decreasing, got ({0}, {1}, {2})")]
    NonGenericLambda(String, String, String),
    #[error("polytope is not Delzant at vertex {vertex}")]
    NotDelzant { vertex: String },
    #[error("edge {from} -> {to} projects to a point")]
    VerticalEdgeUnsupported { from: String, to: String },
    #[error("two fixed points share the image {0}")]
    DuplicatePosition(Point2),
    #[error("weight {direction} at {position} has no consecutive partner")]
    AmbiguousPairing {
        position: Point2,
        direction: LatticeVector,
    },
    #[error("weight {direction} at {position} is not the start of any edge")]
    DanglingWeight {
        position: Point2,
        direction: LatticeVector,
    },
    #[error("invalid chamber data: {0}")]
    InvalidChamber(String),
    #[error("cut line meets the Weyl wall inside the polytope and the circle is not central")]
    WallNotPerpendicular { wall_point: Point2 },
    #[error("cut line passes through vertex {0}")]
    VertexOnCutLine(String),
    #[error("cutting circle is not free along edge {edge}: determinant {determinant}")]
    NonFreeAction { edge: String, determinant: i64 },
    #[error("fixed point {position} carries {slots} weight slots, expected 3")]
    WrongDimensionScope { position: Point2, slots: u32 },
    #[error("invalid X-ray: {0}")]
    InvalidXRay(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{path}: {message}")]
    Document { path: String, message: String },
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroVector => "ZeroVector",
            Error::NonPrimitive(_) => "NonPrimitive",
            Error::DegenerateCone { .. } => "DegenerateCone",
            Error::EmptyInput => "EmptyInput",
            Error::EmptyCut => "EmptyCut",
            Error::DegenerateCut => "DegenerateCut",
            Error::NotFullDimensional => "NotFullDimensional",
            Error::InvalidPolygon => "InvalidPolygon",
            Error::NonGenericLambda(..) => "NonGenericLambda",
            Error::NotDelzant { .. } => "NotDelzant",
            Error::VerticalEdgeUnsupported { .. } => "VerticalEdgeUnsupported",
            Error::DuplicatePosition(_) => "DuplicatePosition",
            Error::AmbiguousPairing { .. } => "AmbiguousPairing",
            Error::DanglingWeight { .. } => "DanglingWeight",
            Error::InvalidChamber(_) => "InvalidChamber",
            Error::WallNotPerpendicular { .. } => "WallNotPerpendicular",
            Error::VertexOnCutLine(_) => "VertexOnCutLine",
            Error::NonFreeAction { .. } => "NonFreeAction",
            Error::WrongDimensionScope { .. } => "WrongDimensionScope",
            Error::InvalidXRay(_) => "InvalidXRay",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::Document { .. } => "Document",
        }
    }
}
