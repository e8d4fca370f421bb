use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use super::lattice::{LatticeVector3, Point2, Point3, Rational};
use super::polygon::hull2;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge3 {
    /// Vertex indices, smaller first.
    pub ends: (usize, usize),
    /// Primitive direction from `ends.0` to `ends.1`.
    pub direction: LatticeVector3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    /// Vertex indices, counterclockwise seen from outside.
    pub cycle: Vec<usize>,
    /// Primitive outward normal.
    pub normal: LatticeVector3,
    /// `<v, normal>` on the facet.
    pub level: Rational,
}

/// Full-dimensional convex polytope in `Q^3` with its face lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope3 {
    vertices: Vec<Point3>,
    edges: Vec<Edge3>,
    facets: Vec<Facet>,
}

impl Polytope3 {
    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge3] {
        &self.edges
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.facets.len() as i64
    }

    /// Primitive directions of the edges leaving vertex `v`, paired with the
    /// index of the neighbour they reach.
    pub fn edges_at(&self, v: usize) -> Vec<(usize, LatticeVector3)> {
        self.edges
            .iter()
            .filter_map(|e| {
                if e.ends.0 == v {
                    Some((e.ends.1, e.direction))
                } else if e.ends.1 == v {
                    Some((e.ends.0, -e.direction))
                } else {
                    None
                }
            })
            .collect()
    }
}

fn project_along(p: &Point3, axis: usize) -> Point2 {
    // Cyclic coordinate order keeps counterclockwise meaning +axis.
    match axis {
        0 => Point2::new(p.y, p.z),
        1 => Point2::new(p.z, p.x),
        _ => Point2::new(p.x, p.y),
    }
}

fn component(v: &LatticeVector3, axis: usize) -> i64 {
    match axis {
        0 => v.x,
        1 => v.y,
        _ => v.z,
    }
}

/// Face lattice of the convex hull of `points` by supporting-plane
/// enumeration over point triples. Quartic in the input size; meant for
/// hand-sized polytopes.
pub fn faces3(points: &[Point3]) -> Result<Polytope3> {
    let mut pts: Vec<Point3> = Vec::with_capacity(points.len());
    for p in points {
        if !pts.contains(p) {
            pts.push(*p);
        }
    }
    if !full_dimensional(&pts) {
        return Err(Error::NotFullDimensional);
    }

    let mut planes: BTreeMap<LatticeVector3, Rational> = BTreeMap::new();
    let n = pts.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let normal = (pts[j] - pts[i]).cross(&(pts[k] - pts[i]));
                if normal.is_zero() {
                    continue;
                }
                let (mut above, mut below) = (false, false);
                for p in &pts {
                    let s = (*p - pts[i]).dot(&normal);
                    above |= s.is_positive();
                    below |= s.is_negative();
                }
                let outward = match (above, below) {
                    (false, _) => normal,
                    (true, false) => normal.scale(Rational::from_integer(-1)),
                    (true, true) => continue,
                };
                let normal = outward.lattice_direction()?;
                planes
                    .entry(normal)
                    .or_insert_with(|| pts[i].pairing(&normal));
            }
        }
    }

    let mut raw_facets: Vec<(Vec<usize>, LatticeVector3, Rational)> = Vec::new();
    for (normal, level) in planes {
        let on: Vec<usize> = (0..n)
            .filter(|&i| pts[i].pairing(&normal) == level)
            .collect();
        let axis = (0..3)
            .max_by_key(|&a| component(&normal, a).abs())
            .unwrap_or(2);
        let projected: Vec<Point2> = on.iter().map(|&i| project_along(&pts[i], axis)).collect();
        let hull = hull2(&projected)?;
        let mut cycle: Vec<usize> = hull
            .vertices()
            .iter()
            .map(|q| on[projected.iter().position(|p| p == q).unwrap_or(0)])
            .collect();
        if component(&normal, axis) < 0 {
            cycle.reverse();
        }
        raw_facets.push((cycle, normal, level));
    }

    // Extreme points are exactly the facet-cycle vertices; keep input order.
    let mut keep = vec![false; n];
    for (cycle, _, _) in &raw_facets {
        for &i in cycle {
            keep[i] = true;
        }
    }
    let mut remap = vec![usize::MAX; n];
    let mut vertices = Vec::new();
    for i in 0..n {
        if keep[i] {
            remap[i] = vertices.len();
            vertices.push(pts[i]);
        }
    }

    let mut facets = Vec::with_capacity(raw_facets.len());
    let mut edge_set: BTreeMap<(usize, usize), ()> = BTreeMap::new();
    for (cycle, normal, level) in raw_facets {
        let cycle: Vec<usize> = cycle.iter().map(|&i| remap[i]).collect();
        for w in 0..cycle.len() {
            let (a, b) = (cycle[w], cycle[(w + 1) % cycle.len()]);
            edge_set.insert((a.min(b), a.max(b)), ());
        }
        facets.push(Facet {
            cycle,
            normal,
            level,
        });
    }
    let edges = edge_set
        .into_keys()
        .map(|(a, b)| {
            Ok(Edge3 {
                ends: (a, b),
                direction: vertices[a].direction_to(&vertices[b])?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let poly = Polytope3 {
        vertices,
        edges,
        facets,
    };
    debug_assert_eq!(poly.euler_characteristic(), 2);
    Ok(poly)
}

fn full_dimensional(pts: &[Point3]) -> bool {
    let Some(first) = pts.first() else {
        return false;
    };
    for j in 1..pts.len() {
        let u = pts[j] - *first;
        for k in j + 1..pts.len() {
            let w = u.cross(&(pts[k] - *first));
            if w.is_zero() {
                continue;
            }
            if pts[k + 1..]
                .iter()
                .any(|q| !(*q - *first).dot(&w).is_zero())
            {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64, z: i64) -> Point3 {
        Point3::int(x, y, z)
    }

    fn counts(poly: &Polytope3) -> (usize, usize, usize) {
        (
            poly.vertices().len(),
            poly.edges().len(),
            poly.facets().len(),
        )
    }

    #[test]
    fn simplex_and_cube() {
        let s = faces3(&[p(0, 0, 0), p(1, 0, 0), p(0, 1, 0), p(0, 0, 1)]).unwrap();
        assert_eq!(counts(&s), (4, 6, 4));
        let mut cube = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    cube.push(p(x, y, z));
                }
            }
        }
        cube.push(p(0, 0, 0));
        let c = faces3(&cube).unwrap();
        assert_eq!(counts(&c), (8, 12, 6));
        assert!(c.facets().iter().all(|f| f.cycle.len() == 4));
    }

    #[test]
    fn drops_interior_and_edge_points() {
        let s = faces3(&[
            p(0, 0, 0),
            p(4, 0, 0),
            p(0, 4, 0),
            p(0, 0, 4),
            p(1, 1, 1),
            p(2, 0, 0),
            p(1, 1, 0),
        ])
        .unwrap();
        assert_eq!(counts(&s), (4, 6, 4));
        assert_eq!(s.vertices()[1], p(4, 0, 0));
    }

    #[test]
    fn m2_polytope_face_lattice() {
        let poly = faces3(&[
            p(0, 0, 0),
            p(8, 0, 0),
            p(0, 8, 0),
            p(2, 2, 1),
            p(4, 2, 1),
            p(2, 4, 1),
        ])
        .unwrap();
        assert_eq!(counts(&poly), (6, 9, 5));
        assert_eq!(poly.euler_characteristic(), 2);
        // The connector from the origin runs along (2,2,1).
        let at_origin: Vec<LatticeVector3> = poly.edges_at(0).into_iter().map(|(_, d)| d).collect();
        assert!(at_origin.contains(&LatticeVector3::new(2, 2, 1)));
    }

    #[test]
    fn outward_normals_and_orientation() {
        let s = faces3(&[p(0, 0, 0), p(1, 0, 0), p(0, 1, 0), p(0, 0, 1)]).unwrap();
        for f in s.facets() {
            assert!(f.normal.is_primitive());
            for v in s.vertices() {
                assert!(v.pairing(&f.normal) <= f.level);
            }
            // Right-hand rule around the cycle agrees with the outward normal.
            let (a, b, c) = (
                s.vertices()[f.cycle[0]],
                s.vertices()[f.cycle[1]],
                s.vertices()[f.cycle[2]],
            );
            let n = (b - a).cross(&(c - b));
            assert!(n.pairing(&f.normal).is_positive());
        }
    }

    #[test]
    fn coplanar_rejected() {
        assert_eq!(
            faces3(&[p(0, 0, 0), p(1, 0, 0), p(0, 1, 0), p(1, 1, 0)]),
            Err(Error::NotFullDimensional)
        );
        assert_eq!(faces3(&[p(0, 0, 0)]), Err(Error::NotFullDimensional));
    }
}
