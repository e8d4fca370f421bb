//! Exact rational geometry in the plane and in 3-space.

mod cone;
mod delzant;
mod lattice;
mod polygon;
mod polytope3;

pub use cone::{cone_contains, cone_member, strict_feasible};
pub use delzant::{DelzantCheck, DelzantReport, VertexDeterminant};
pub use lattice::{
    det2, det3, rat, ratio, HalfSpace, LatticeVector, LatticeVector3, Point2, Point3, Rational,
};
pub use polygon::{clip2, hull2, segment_union_covers, Polygon, Segment};
pub use polytope3::{faces3, Edge3, Facet, Polytope3};
