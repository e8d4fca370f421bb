//! Equivariant symplectic cutting at the level of moment polytopes.
//!
//! A cut keeps `{ v : <v, X> <= a }`. It is only accepted when the cutting
//! circle acts freely on the level set, so the cut space is a manifold;
//! orbifold cuts are rejected with the offending determinant.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{
    clip2, det2, faces3, DelzantCheck, HalfSpace, LatticeVector, LatticeVector3, Point2, Point3,
    Polytope3, Rational,
};
use crate::group::{on_wall, WALL_DIRECTION};
use crate::xray::ChamberData;

/// Circle direction `X` (primitive) and level `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutSpec {
    direction: LatticeVector,
    level: Rational,
}

impl CutSpec {
    pub fn new(direction: LatticeVector, level: Rational) -> Result<Self> {
        HalfSpace::new(direction, level)?;
        Ok(Self { direction, level })
    }

    pub fn direction(&self) -> LatticeVector {
        self.direction
    }

    pub fn level(&self) -> Rational {
        self.level
    }

    /// `<p, X> - a`.
    pub fn excess(&self, p: &Point2) -> Rational {
        p.pairing(&self.direction) - self.level
    }

    /// Whether `<·, X>` is Weyl invariant, i.e. `X` generates the centre of U(2).
    pub fn is_central(&self) -> bool {
        self.direction.class() == WALL_DIRECTION
    }

    pub fn halfspace(&self) -> HalfSpace {
        HalfSpace::new(self.direction, self.level).expect("validated in new")
    }
}

impl fmt::Display for CutSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<v,{}> <= {}", self.direction, self.level)
    }
}

/// A polygon edge met by the cut line, with its isotropy circle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedEdge {
    pub from: Point2,
    pub to: Point2,
    pub direction: LatticeVector,
    /// Generator of the isotropy circle: the primitive annihilator of `direction`.
    pub isotropy: LatticeVector,
    pub determinant: i64,
    /// Skipped by the freeness test because the cutting circle is central and
    /// the edge touches the wall.
    pub exempt: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberCut {
    pub chamber: ChamberData,
    pub new_fixed_vertices: Vec<Point2>,
    pub retained_fixed_vertices: Vec<Point2>,
    pub crossed_edges: Vec<CrossedEdge>,
    /// The cut line meets the wall inside the polygon (allowed only for a
    /// central circle).
    pub central_wall_crossing: bool,
}

fn sign_change(a: Rational, b: Rational) -> bool {
    (a.is_negative() && b.is_positive()) || (a.is_positive() && b.is_negative())
}

/// Where the cut line meets the wall inside the polygon, if anywhere.
fn wall_hit(cd: &ChamberData, spec: &CutSpec) -> Option<Point2> {
    let wall = cd.wall_vertices();
    if let Some(w) = wall.iter().find(|w| spec.excess(w).is_zero()) {
        return Some(*w);
    }
    for (i, a) in wall.iter().enumerate() {
        for b in &wall[i + 1..] {
            let (ea, eb) = (spec.excess(a), spec.excess(b));
            if sign_change(ea, eb) {
                return Some(*a + (*b - *a).scale(ea / (ea - eb)));
            }
        }
    }
    None
}

/// Cuts a multiplicity-free U(2)-space given by its chamber polygon.
///
/// Gates, in order:
/// 1. the cut line may meet the wall inside the polygon only when `X` is
///    central, `X = ±(1,1)`;
/// 2. it may not pass through a polygon vertex;
/// 3. along every crossed edge off the wall, with isotropy circle `u`,
///    `|det(X, u)| = 1`.
pub fn cut_u2(cd: &ChamberData, spec: &CutSpec) -> Result<ChamberCut> {
    let hit = wall_hit(cd, spec);
    if let Some(wall_point) = hit {
        if !spec.is_central() {
            return Err(Error::WallNotPerpendicular { wall_point });
        }
    }
    let central_wall_crossing = hit.is_some();

    let verts = cd.polygon().vertices();
    if let Some(v) = verts.iter().find(|v| spec.excess(v).is_zero()) {
        return Err(Error::VertexOnCutLine(v.to_string()));
    }

    let mut crossed_edges = Vec::new();
    for i in 0..verts.len() {
        let (from, to) = (verts[i], verts[(i + 1) % verts.len()]);
        if !sign_change(spec.excess(&from), spec.excess(&to)) {
            continue;
        }
        if on_wall(&from) && on_wall(&to) {
            continue;
        }
        let direction = from.direction_to(&to)?;
        let isotropy = direction.perp().class();
        let determinant = det2(spec.direction, isotropy);
        let exempt = central_wall_crossing && (on_wall(&from) || on_wall(&to));
        if !exempt && determinant.abs() != 1 {
            return Err(Error::NonFreeAction {
                edge: format!("{from}-{to}"),
                determinant,
            });
        }
        crossed_edges.push(CrossedEdge {
            from,
            to,
            direction,
            isotropy,
            determinant,
            exempt,
        });
    }

    let polygon = clip2(cd.polygon(), &spec.halfspace())?;
    let chamber = ChamberData::from_polygon(polygon)?;
    let new_fixed_vertices = chamber
        .fixed_vertices()
        .iter()
        .filter(|v| !verts.contains(v))
        .copied()
        .collect();
    let retained_fixed_vertices = cd
        .fixed_vertices()
        .iter()
        .filter(|v| chamber.fixed_vertices().contains(v))
        .copied()
        .collect();
    Ok(ChamberCut {
        chamber,
        new_fixed_vertices,
        retained_fixed_vertices,
        crossed_edges,
        central_wall_crossing,
    })
}

/// Cutting circle for a toric 6-manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutSpec3 {
    direction: LatticeVector3,
    level: Rational,
}

impl CutSpec3 {
    pub fn new(direction: LatticeVector3, level: Rational) -> Result<Self> {
        if direction.is_zero() {
            return Err(Error::ZeroVector);
        }
        if !direction.is_primitive() {
            return Err(Error::NonPrimitive(direction.to_string()));
        }
        Ok(Self { direction, level })
    }

    pub fn direction(&self) -> LatticeVector3 {
        self.direction
    }

    pub fn level(&self) -> Rational {
        self.level
    }

    pub fn excess(&self, p: &Point3) -> Rational {
        p.pairing(&self.direction) - self.level
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedEdge3 {
    pub from: Point3,
    pub to: Point3,
    pub direction: LatticeVector3,
    /// `<direction, X>`; the circle is free along the edge iff this is ±1.
    pub pairing: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedFacet {
    pub normal: LatticeVector3,
    /// gcd of the 2×2 minors of `(X, normal)`; 1 iff the two circles span a
    /// saturated sublattice.
    pub minors_gcd: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeCut {
    pub polytope: Polytope3,
    pub new_vertices: Vec<Point3>,
    pub crossed_edges: Vec<CrossedEdge3>,
    pub crossed_facets: Vec<CrossedFacet>,
}

fn minors_gcd(a: &LatticeVector3, b: &LatticeVector3) -> i64 {
    let c = a.cross(b);
    c.x.gcd(&c.y).gcd(&c.z)
}

/// Cuts a Delzant 3-polytope. The result is checked Delzant again.
pub fn cut_delzant3(p: &Polytope3, spec: &CutSpec3) -> Result<PolytopeCut> {
    if let Some(bad) = p.delzant_check().first_failure() {
        return Err(Error::NotDelzant {
            vertex: p.vertices()[bad.vertex].to_string(),
        });
    }
    let verts = p.vertices();
    if let Some(v) = verts.iter().find(|v| spec.excess(v).is_zero()) {
        return Err(Error::VertexOnCutLine(v.to_string()));
    }
    if verts.iter().all(|v| spec.excess(v).is_positive()) {
        return Err(Error::EmptyCut);
    }

    let mut crossed_edges = Vec::new();
    let mut new_vertices = Vec::new();
    for e in p.edges() {
        let (from, to) = (verts[e.ends.0], verts[e.ends.1]);
        let (ef, et) = (spec.excess(&from), spec.excess(&to));
        if !sign_change(ef, et) {
            continue;
        }
        let pairing = e.direction.dot(&spec.direction);
        if pairing.abs() != 1 {
            return Err(Error::NonFreeAction {
                edge: format!("{from}-{to}"),
                determinant: pairing,
            });
        }
        new_vertices.push(from + (to - from).scale(ef / (ef - et)));
        crossed_edges.push(CrossedEdge3 {
            from,
            to,
            direction: e.direction,
            pairing,
        });
    }

    let mut crossed_facets = Vec::new();
    for f in p.facets() {
        let (mut below, mut above) = (false, false);
        for &i in &f.cycle {
            let e = spec.excess(&verts[i]);
            below |= e.is_negative();
            above |= e.is_positive();
        }
        if !(below && above) {
            continue;
        }
        let g = minors_gcd(&spec.direction, &f.normal);
        if g != 1 {
            return Err(Error::NonFreeAction {
                edge: format!("facet with normal {}", f.normal),
                determinant: g,
            });
        }
        crossed_facets.push(CrossedFacet {
            normal: f.normal,
            minors_gcd: g,
        });
    }

    let mut points: Vec<Point3> = verts
        .iter()
        .filter(|v| spec.excess(v).is_negative())
        .copied()
        .collect();
    points.extend(new_vertices.iter().copied());
    let polytope = faces3(&points)?;
    if let Some(bad) = polytope.delzant_check().first_failure() {
        return Err(Error::NotDelzant {
            vertex: polytope.vertices()[bad.vertex].to_string(),
        });
    }
    Ok(PolytopeCut {
        polytope,
        new_vertices,
        crossed_edges,
        crossed_facets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{hull2, rat, ratio};

    fn p(x: i64, y: i64) -> Point2 {
        Point2::int(x, y)
    }

    fn rectangle() -> ChamberData {
        let poly = hull2(&[p(1, 0), p(5, 0), p(5, 1), p(1, 1)]).unwrap();
        ChamberData::new(poly, vec![p(1, 0), p(5, 0), p(5, 1)]).unwrap()
    }

    fn spec(x: i64, y: i64, a: Rational) -> CutSpec {
        CutSpec::new(LatticeVector::new(x, y), a).unwrap()
    }

    #[test]
    fn rectangle_cut_by_one_two() {
        let cut = cut_u2(&rectangle(), &spec(1, 2, rat(4))).unwrap();
        assert_eq!(
            cut.chamber.polygon().vertices(),
            &[p(1, 0), p(4, 0), p(2, 1), p(1, 1)]
        );
        assert_eq!(cut.new_fixed_vertices, vec![p(4, 0), p(2, 1)]);
        assert_eq!(cut.retained_fixed_vertices, vec![p(1, 0)]);
        assert_eq!(cut.crossed_edges.len(), 2);
        for e in &cut.crossed_edges {
            assert_eq!(e.isotropy, LatticeVector::new(0, 1));
            assert_eq!(e.determinant, 1);
            assert!(!e.exempt);
        }
        assert!(!cut.central_wall_crossing);
    }

    #[test]
    fn non_free_cut() {
        let err = cut_u2(&rectangle(), &spec(2, 1, rat(5))).unwrap_err();
        assert_eq!(
            err,
            Error::NonFreeAction {
                edge: "(1,0)-(5,0)".into(),
                determinant: 2
            }
        );
    }

    #[test]
    fn wall_gate() {
        let err = cut_u2(&rectangle(), &spec(1, 2, rat(3))).unwrap_err();
        assert_eq!(
            err,
            Error::WallNotPerpendicular {
                wall_point: p(1, 1)
            }
        );
        // Central circle: the perpendicular branch.
        let cut = cut_u2(&rectangle(), &spec(1, 1, rat(4))).unwrap();
        assert_eq!(
            cut.chamber.polygon().vertices(),
            &[p(1, 0), p(4, 0), p(3, 1), p(1, 1)]
        );
    }

    #[test]
    fn central_cut_through_the_wall() {
        // Triangle with a wall edge from (0,0) to (4,4); x + y = 5 crosses it
        // at (5/2,5/2).
        let poly = hull2(&[p(0, 0), p(4, 0), p(4, 4)]).unwrap();
        let cd = ChamberData::from_polygon(poly).unwrap();
        let cut = cut_u2(&cd, &spec(1, 1, rat(5))).unwrap();
        assert!(cut.central_wall_crossing);
        assert_eq!(cut.crossed_edges.len(), 1);
        assert!(cut.crossed_edges[0].exempt);
        let half = ratio(5, 2);
        assert_eq!(
            cut.chamber.wall_vertices(),
            vec![p(0, 0), Point2::new(half, half)]
        );
        assert_eq!(cut.new_fixed_vertices, vec![p(4, 1)]);
        let err = cut_u2(&cd, &spec(1, 2, rat(5))).unwrap_err();
        assert!(matches!(err, Error::WallNotPerpendicular { .. }));
    }

    #[test]
    fn vertex_gate() {
        for (x, y, a) in [(1, 2, 5), (1, 2, 7), (1, 2, 1), (1, 1, 6)] {
            let err = cut_u2(&rectangle(), &spec(x, y, rat(a))).unwrap_err();
            assert!(
                matches!(err, Error::VertexOnCutLine(_)),
                "{x},{y},{a}: {err:?}"
            );
        }
        // The wall corner is caught by the wall gate first.
        assert!(matches!(
            cut_u2(&rectangle(), &spec(1, 2, rat(3))),
            Err(Error::WallNotPerpendicular { .. })
        ));
        assert!(matches!(
            cut_u2(&rectangle(), &spec(1, 1, rat(2))),
            Err(Error::VertexOnCutLine(_))
        ));
    }

    #[test]
    fn empty_and_trivial_cuts() {
        assert_eq!(
            cut_u2(&rectangle(), &spec(1, 0, rat(0))),
            Err(Error::EmptyCut)
        );
        let whole = cut_u2(&rectangle(), &spec(1, 0, rat(9))).unwrap();
        assert_eq!(whole.chamber, rectangle());
        assert!(whole.new_fixed_vertices.is_empty());
    }

    #[test]
    fn negative_n_cut() {
        let cut = cut_u2(&rectangle(), &spec(1, -1, ratio(5, 2))).unwrap();
        assert_eq!(
            cut.chamber.polygon().vertices(),
            &[
                p(1, 0),
                Point2::new(ratio(5, 2), rat(0)),
                Point2::new(ratio(7, 2), rat(1)),
                p(1, 1)
            ]
        );
    }

    fn simplex4() -> Polytope3 {
        faces3(&[
            Point3::int(0, 0, 0),
            Point3::int(4, 0, 0),
            Point3::int(0, 4, 0),
            Point3::int(0, 0, 4),
        ])
        .unwrap()
    }

    #[test]
    fn truncated_simplex() {
        let s = CutSpec3::new(LatticeVector3::new(1, 0, 0), rat(2)).unwrap();
        let cut = cut_delzant3(&simplex4(), &s).unwrap();
        assert!(cut.polytope.delzant_check().is_delzant());
        assert_eq!(cut.polytope.vertices().len(), 6);
        assert_eq!(cut.crossed_edges.len(), 3);
        assert!(cut.crossed_edges.iter().all(|e| e.pairing.abs() == 1));
        assert_eq!(cut.polytope.euler_characteristic(), 2);
    }

    #[test]
    fn non_free_simplex_cut() {
        let s = CutSpec3::new(LatticeVector3::new(1, 2, 0), rat(2)).unwrap();
        let err = cut_delzant3(&simplex4(), &s).unwrap_err();
        assert!(
            matches!(err, Error::NonFreeAction { determinant: 2, .. }),
            "{err:?}"
        );
    }

    #[test]
    fn simplex_vertex_and_empty() {
        let s = CutSpec3::new(LatticeVector3::new(1, 0, 0), rat(4)).unwrap();
        assert!(matches!(
            cut_delzant3(&simplex4(), &s),
            Err(Error::VertexOnCutLine(_))
        ));
        let s = CutSpec3::new(LatticeVector3::new(1, 1, 1), rat(-1)).unwrap();
        assert_eq!(cut_delzant3(&simplex4(), &s), Err(Error::EmptyCut));
        assert!(CutSpec3::new(LatticeVector3::new(2, 0, 0), rat(1)).is_err());
    }
}
