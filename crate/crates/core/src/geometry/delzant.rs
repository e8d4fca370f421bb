use super::lattice::{det2, det3};
use super::polygon::Polygon;
use super::polytope3::Polytope3;

/// Lattice determinant of the primitive edge directions at one vertex.
/// `None` when the vertex is not simple (wrong number of edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexDeterminant {
    pub vertex: usize,
    pub determinant: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DelzantReport {
    pub vertices: Vec<VertexDeterminant>,
}

impl DelzantReport {
    pub fn is_delzant(&self) -> bool {
        !self.vertices.is_empty()
            && self
                .vertices
                .iter()
                .all(|v| matches!(v.determinant, Some(d) if d.abs() == 1))
    }

    /// First vertex that fails the smoothness test.
    pub fn first_failure(&self) -> Option<&VertexDeterminant> {
        self.vertices
            .iter()
            .find(|v| !matches!(v.determinant, Some(d) if d.abs() == 1))
    }
}

/// Vertex smoothness: primitive edge directions at each vertex span the
/// lattice.
pub trait DelzantCheck {
    fn delzant_check(&self) -> DelzantReport;
}

impl DelzantCheck for Polygon {
    fn delzant_check(&self) -> DelzantReport {
        if self.dimension() < 2 {
            return DelzantReport {
                vertices: Vec::new(),
            };
        }
        let vertices = (0..self.len())
            .map(|i| {
                let v = self.vertices()[i];
                let (prev, next) = self.neighbours(i);
                let determinant = match (v.direction_to(&prev), v.direction_to(&next)) {
                    (Ok(a), Ok(b)) => Some(det2(a, b)),
                    _ => None,
                };
                VertexDeterminant {
                    vertex: i,
                    determinant,
                }
            })
            .collect();
        DelzantReport { vertices }
    }
}

impl DelzantCheck for Polytope3 {
    fn delzant_check(&self) -> DelzantReport {
        let vertices = (0..self.vertices().len())
            .map(|i| {
                let dirs = self.edges_at(i);
                let determinant = match dirs.as_slice() {
                    [(_, a), (_, b), (_, c)] => Some(det3(*a, *b, *c)),
                    _ => None,
                };
                VertexDeterminant {
                    vertex: i,
                    determinant,
                }
            })
            .collect();
        DelzantReport { vertices }
    }
}
