//! X-rays of Hamiltonian 2-torus spaces: images of fixed points and of the
//! closures of circle-fixed strata, with the tangent weights at each fixed
//! point.
//!
//! Three builders are provided:
//!
//! * [`flag_xray`] for a generic coadjoint orbit of U(3),
//! * [`toric_xray`] for a toric 6-manifold given by its Delzant polytope,
//! * [`chamber_to_xray`] for a multiplicity-free U(2)-space given by its
//!   polygon in the positive Weyl chamber.
//!
//! Edges are always between consecutive collinear fixed points; a stratum
//! whose image passes over several fixed points shows up as a chain.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{
    DelzantCheck, LatticeVector, Point2, Point3, Polygon, Polytope3, Rational, Segment,
};
use crate::group::{
    in_chamber, in_open_chamber, on_wall, restrict, s3_orbit, weyl_reflect, weyl_reflect_vector,
    Lambda, ROOTS,
};

/// A primitive weight direction with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub direction: LatticeVector,
    pub multiplicity: u32,
}

/// Image of a fixed point with its weight multiset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedFixedPoint {
    position: Point2,
    weights: Vec<Weight>,
}

impl WeightedFixedPoint {
    /// One slot per entry of `directions`; repeats raise the multiplicity.
    pub fn new(
        position: Point2,
        directions: impl IntoIterator<Item = LatticeVector>,
    ) -> Result<Self> {
        Self::from_weights(
            position,
            directions
                .into_iter()
                .map(|direction| Weight {
                    direction,
                    multiplicity: 1,
                })
                .collect(),
        )
    }

    pub fn from_weights(position: Point2, weights: Vec<Weight>) -> Result<Self> {
        let mut merged: BTreeMap<LatticeVector, u32> = BTreeMap::new();
        for w in weights {
            if w.direction.is_zero() {
                return Err(Error::ZeroVector);
            }
            if !w.direction.is_primitive() {
                return Err(Error::NonPrimitive(w.direction.to_string()));
            }
            if w.multiplicity == 0 {
                return Err(Error::InvalidXRay(format!(
                    "weight {} at {position} has multiplicity 0",
                    w.direction
                )));
            }
            *merged.entry(w.direction).or_default() += w.multiplicity;
        }
        Ok(Self {
            position,
            weights: merged
                .into_iter()
                .map(|(direction, multiplicity)| Weight {
                    direction,
                    multiplicity,
                })
                .collect(),
        })
    }

    pub fn position(&self) -> Point2 {
        self.position
    }

    /// Distinct directions in ascending order.
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn multiplicity(&self, direction: &LatticeVector) -> u32 {
        self.weights
            .iter()
            .find(|w| w.direction == *direction)
            .map_or(0, |w| w.multiplicity)
    }

    pub fn slot_count(&self) -> u32 {
        self.weights.iter().map(|w| w.multiplicity).sum()
    }

    /// The multiset expanded, one entry per slot.
    pub fn slots(&self) -> Vec<LatticeVector> {
        self.weights
            .iter()
            .flat_map(|w| std::iter::repeat_n(w.direction, w.multiplicity as usize))
            .collect()
    }

    pub fn reflected(&self) -> Self {
        Self::from_weights(
            weyl_reflect(&self.position),
            self.weights
                .iter()
                .map(|w| Weight {
                    direction: weyl_reflect_vector(&w.direction),
                    multiplicity: w.multiplicity,
                })
                .collect(),
        )
        .expect("reflection preserves primitivity")
    }
}

/// Image of the closure of a circle-fixed stratum, between two fixed points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct XRayEdge {
    /// Indices into the owning X-ray's fixed points.
    pub ends: (usize, usize),
    /// Primitive direction from `ends.0` toward `ends.1`.
    pub direction: LatticeVector,
    /// Number of weight pairs carried; the stratum closure has dimension `2·rank`.
    pub rank: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XRay {
    fixed_points: Vec<WeightedFixedPoint>,
    edges: Vec<XRayEdge>,
}

impl XRay {
    /// Checks the structural invariants: distinct positions, edge endpoints in
    /// range and distinct, edge directions matching endpoints, positive rank.
    pub fn new(fixed_points: Vec<WeightedFixedPoint>, edges: Vec<XRayEdge>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for fp in &fixed_points {
            if !seen.insert(fp.position) {
                return Err(Error::DuplicatePosition(fp.position));
            }
        }
        for (k, e) in edges.iter().enumerate() {
            let (a, b) = e.ends;
            if a >= fixed_points.len() || b >= fixed_points.len() || a == b {
                return Err(Error::InvalidXRay(format!(
                    "edge {k} has bad endpoints {a}, {b}"
                )));
            }
            let d = fixed_points[a]
                .position
                .direction_to(&fixed_points[b].position)?;
            if d != e.direction {
                return Err(Error::InvalidXRay(format!(
                    "edge {k} direction {} does not match endpoints (expected {d})",
                    e.direction
                )));
            }
            if e.rank == 0 {
                return Err(Error::InvalidXRay(format!("edge {k} has rank 0")));
            }
        }
        Ok(Self {
            fixed_points,
            edges,
        })
    }

    /// Builds edges from endpoint positions.
    pub fn from_segments(
        fixed_points: Vec<WeightedFixedPoint>,
        segments: &[(Point2, Point2, u32)],
    ) -> Result<Self> {
        let index = |p: &Point2| {
            fixed_points
                .iter()
                .position(|fp| fp.position == *p)
                .ok_or_else(|| {
                    Error::InvalidXRay(format!("edge endpoint {p} is not a fixed point"))
                })
        };
        let mut edges = Vec::with_capacity(segments.len());
        for (a, b, rank) in segments {
            edges.push(XRayEdge {
                ends: (index(a)?, index(b)?),
                direction: a.direction_to(b)?,
                rank: *rank,
            });
        }
        Self::new(fixed_points, edges)
    }

    pub fn fixed_points(&self) -> &[WeightedFixedPoint] {
        &self.fixed_points
    }

    pub fn edges(&self) -> &[XRayEdge] {
        &self.edges
    }

    pub fn positions(&self) -> Vec<Point2> {
        self.fixed_points.iter().map(|f| f.position).collect()
    }

    pub fn position_index(&self, p: &Point2) -> Option<usize> {
        self.fixed_points.iter().position(|f| f.position == *p)
    }

    pub fn segment(&self, edge: &XRayEdge) -> Segment {
        Segment::new(
            self.fixed_points[edge.ends.0].position,
            self.fixed_points[edge.ends.1].position,
        )
    }

    pub fn segments(&self) -> Vec<Segment> {
        self.edges.iter().map(|e| self.segment(e)).collect()
    }

    /// Image incidence: `(fixed point, edge)` whenever the fixed point's image
    /// lies on the closed edge segment.
    pub fn incidence(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (k, e) in self.edges.iter().enumerate() {
            let s = self.segment(e);
            for (i, fp) in self.fixed_points.iter().enumerate() {
                if s.contains(&fp.position) {
                    out.push((i, k));
                }
            }
        }
        out.sort();
        out
    }

    /// Sorted number of edges at each fixed point.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0; self.fixed_points.len()];
        for e in &self.edges {
            deg[e.ends.0] += 1;
            deg[e.ends.1] += 1;
        }
        deg.sort();
        deg
    }

    /// Fixed points sorted by position, edges oriented from the smaller index
    /// and sorted. Two X-rays describe the same labelled graph iff their
    /// canonical forms are equal.
    pub fn canonical(&self) -> XRay {
        let mut order: Vec<usize> = (0..self.fixed_points.len()).collect();
        order.sort_by_key(|&i| self.fixed_points[i].position);
        let mut remap = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let fixed_points: Vec<WeightedFixedPoint> = order
            .iter()
            .map(|&i| self.fixed_points[i].clone())
            .collect();
        let mut edges: Vec<XRayEdge> = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (remap[e.ends.0], remap[e.ends.1]);
                if a < b {
                    XRayEdge {
                        ends: (a, b),
                        direction: e.direction,
                        rank: e.rank,
                    }
                } else {
                    XRayEdge {
                        ends: (b, a),
                        direction: -e.direction,
                        rank: e.rank,
                    }
                }
            })
            .collect();
        edges.sort();
        XRay {
            fixed_points,
            edges,
        }
    }

    /// Image under the Weyl reflection.
    pub fn reflected(&self) -> XRay {
        XRay {
            fixed_points: self.fixed_points.iter().map(|f| f.reflected()).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| XRayEdge {
                    ends: e.ends,
                    direction: weyl_reflect_vector(&e.direction),
                    rank: e.rank,
                })
                .collect(),
        }
    }

    pub fn without_edge(&self, k: usize) -> XRay {
        let mut edges = self.edges.clone();
        edges.remove(k);
        XRay {
            fixed_points: self.fixed_points.clone(),
            edges,
        }
    }

    /// Whether some edge leaves fixed point `i` in direction `d`.
    pub fn has_edge_from(&self, i: usize, d: &LatticeVector) -> bool {
        self.edges
            .iter()
            .any(|e| (e.ends.0 == i && e.direction == *d) || (e.ends.1 == i && -e.direction == *d))
    }
}

impl fmt::Display for XRay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} fixed points, {} edges",
            self.fixed_points.len(),
            self.edges.len()
        )?;
        for fp in &self.fixed_points {
            write!(f, "  {}:", fp.position)?;
            for w in &fp.weights {
                write!(f, " {}", w.direction)?;
                if w.multiplicity > 1 {
                    write!(f, "x{}", w.multiplicity)?;
                }
            }
            writeln!(f)?;
        }
        for e in &self.edges {
            writeln!(f, "  {} rank {}", self.segment(e), e.rank)?;
        }
        Ok(())
    }
}

/// Polygon in the closed positive Weyl chamber with its fixed-point vertices
/// (those off the wall).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberData {
    polygon: Polygon,
    fixed_vertices: Vec<Point2>,
}

impl ChamberData {
    pub fn new(polygon: Polygon, fixed_vertices: Vec<Point2>) -> Result<Self> {
        let cd = Self::from_polygon(polygon)?;
        let mut given = fixed_vertices.clone();
        given.sort();
        given.dedup();
        let mut expected = cd.fixed_vertices.clone();
        expected.sort();
        if given.len() != fixed_vertices.len() || given != expected {
            return Err(Error::InvalidChamber(
                "fixed vertices must be exactly the polygon vertices off the wall".into(),
            ));
        }
        Ok(cd)
    }

    /// Marks every vertex off the wall as a fixed vertex.
    pub fn from_polygon(polygon: Polygon) -> Result<Self> {
        if polygon.dimension() < 2 {
            return Err(Error::InvalidChamber(
                "polygon is not two-dimensional".into(),
            ));
        }
        if let Some(v) = polygon.vertices().iter().find(|v| !in_chamber(v)) {
            return Err(Error::InvalidChamber(format!(
                "vertex {v} lies outside x >= y"
            )));
        }
        let fixed_vertices = polygon
            .vertices()
            .iter()
            .filter(|v| !on_wall(v))
            .copied()
            .collect();
        Ok(Self {
            polygon,
            fixed_vertices,
        })
    }

    pub fn polygon(&self) -> &Polygon {
        &self.polygon
    }

    /// In polygon order.
    pub fn fixed_vertices(&self) -> &[Point2] {
        &self.fixed_vertices
    }

    pub fn wall_vertices(&self) -> Vec<Point2> {
        self.polygon
            .vertices()
            .iter()
            .filter(|v| on_wall(v))
            .copied()
            .collect()
    }
}

/// X-ray of the coadjoint orbit `U(3)·λ` restricted to the 2-torus.
pub fn flag_xray(lambda: &Lambda) -> Result<XRay> {
    let orbit = s3_orbit(lambda);
    // Orbit points related by one transposition share exactly one coordinate.
    let shares_one = |a: &Point3, b: &Point3| {
        [(a.x == b.x), (a.y == b.y), (a.z == b.z)]
            .iter()
            .filter(|&&t| t)
            .count()
            == 1
    };
    let positions: Vec<Point2> = orbit.iter().map(restrict).collect();
    let mut fixed_points = Vec::with_capacity(6);
    let mut edges = Vec::with_capacity(9);
    for i in 0..6 {
        let mut dirs = Vec::with_capacity(3);
        for j in 0..6 {
            if i != j && shares_one(&orbit[i], &orbit[j]) {
                let d = positions[i].direction_to(&positions[j])?;
                dirs.push(d);
                if i < j {
                    edges.push(XRayEdge {
                        ends: (i, j),
                        direction: d,
                        rank: 1,
                    });
                }
            }
        }
        fixed_points.push(WeightedFixedPoint::new(positions[i], dirs)?);
    }
    XRay::new(fixed_points, edges)
}

/// Linear map `Q^3 → Q^2` used to restrict a toric moment map to the 2-torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Projection {
    pub rows: [[i64; 3]; 2],
}

impl Projection {
    /// `U(1)^2 × id ⊂ U(1)^3`.
    pub const DROP_Z: Projection = Projection {
        rows: [[1, 0, 0], [0, 1, 0]],
    };

    pub fn point(&self, p: &Point3) -> Point2 {
        let r = |row: &[i64; 3]| p.x * row[0] + p.y * row[1] + p.z * row[2];
        Point2::new(r(&self.rows[0]), r(&self.rows[1]))
    }

    pub fn vector(&self, v: &crate::geometry::LatticeVector3) -> LatticeVector {
        let r = |row: &[i64; 3]| v.x * row[0] + v.y * row[1] + v.z * row[2];
        LatticeVector::new(r(&self.rows[0]), r(&self.rows[1]))
    }
}

/// X-ray of a toric 6-manifold restricted to `U(1)^2 × id`.
pub fn toric_xray(p: &Polytope3) -> Result<XRay> {
    toric_xray_with(p, &Projection::DROP_Z)
}

pub fn toric_xray_with(p: &Polytope3, projection: &Projection) -> Result<XRay> {
    let report = p.delzant_check();
    if let Some(bad) = report.first_failure() {
        return Err(Error::NotDelzant {
            vertex: p.vertices()[bad.vertex].to_string(),
        });
    }
    let positions: Vec<Point2> = p.vertices().iter().map(|v| projection.point(v)).collect();
    let mut seen = BTreeSet::new();
    for q in &positions {
        if !seen.insert(*q) {
            return Err(Error::DuplicatePosition(*q));
        }
    }
    let mut edges = Vec::with_capacity(p.edges().len());
    for e in p.edges() {
        let image = projection.vector(&e.direction);
        if image.is_zero() {
            return Err(Error::VerticalEdgeUnsupported {
                from: p.vertices()[e.ends.0].to_string(),
                to: p.vertices()[e.ends.1].to_string(),
            });
        }
        edges.push(XRayEdge {
            ends: e.ends,
            direction: image.primitive()?,
            rank: 1,
        });
    }
    let fixed_points = (0..p.vertices().len())
        .map(|i| {
            let dirs = p
                .edges_at(i)
                .into_iter()
                .map(|(_, d)| projection.vector(&d).primitive())
                .collect::<Result<Vec<_>>>()?;
            WeightedFixedPoint::new(positions[i], dirs)
        })
        .collect::<Result<Vec<_>>>()?;
    XRay::new(fixed_points, edges)
}

/// Local weights at a chamber fixed vertex: the two primitive polygon-edge
/// directions plus `-α1`, the weight on `u(2)*/t*`.
fn chamber_weights(cd: &ChamberData, v: &Point2) -> Result<Vec<LatticeVector>> {
    let i = cd
        .polygon
        .vertices()
        .iter()
        .position(|q| q == v)
        .ok_or_else(|| Error::InvalidChamber(format!("{v} is not a polygon vertex")))?;
    let (prev, next) = cd.polygon.neighbours(i);
    Ok(vec![
        v.direction_to(&prev)?,
        v.direction_to(&next)?,
        ROOTS.minus_alpha1,
    ])
}

/// X-ray of the multiplicity-free U(2)-space with chamber polygon `cd`, as a
/// 2-torus space.
///
/// Fixed points are the chamber fixed vertices and their Weyl images. Edges
/// come from ray-shooting: along every line of a weight direction `d`, each
/// consecutive pair `(m, m')` is joined iff `m` carries `+d` and `m'`
/// carries `-d`. A slot whose consecutive neighbour cannot accept it is
/// [`Error::AmbiguousPairing`]; a slot with nothing ahead of it is
/// [`Error::DanglingWeight`].
pub fn chamber_to_xray(cd: &ChamberData) -> Result<XRay> {
    let mut fixed_points = Vec::new();
    for v in cd.fixed_vertices() {
        if !in_open_chamber(v) {
            return Err(Error::InvalidChamber(format!(
                "fixed vertex {v} is not inside the chamber"
            )));
        }
        fixed_points.push(WeightedFixedPoint::new(*v, chamber_weights(cd, v)?)?);
    }
    let reflected: Vec<WeightedFixedPoint> = fixed_points.iter().map(|f| f.reflected()).collect();
    fixed_points.extend(reflected);
    let edges = ray_shoot(&fixed_points)?;
    let x = XRay::new(fixed_points, edges)?;
    for (i, fp) in x.fixed_points.iter().enumerate() {
        for w in &fp.weights {
            if !x.has_edge_from(i, &w.direction) {
                return Err(Error::DanglingWeight {
                    position: fp.position,
                    direction: w.direction,
                });
            }
        }
    }
    Ok(x)
}

fn ray_shoot(fixed_points: &[WeightedFixedPoint]) -> Result<Vec<XRayEdge>> {
    let classes: BTreeSet<LatticeVector> = fixed_points
        .iter()
        .flat_map(|f| f.weights.iter().map(|w| w.direction.class()))
        .collect();
    let mut edges = Vec::new();
    for d in classes {
        let dp = d.as_point();
        let mut lines: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
        for (i, f) in fixed_points.iter().enumerate() {
            lines.entry(dp.cross(&f.position)).or_default().push(i);
        }
        for members in lines.values_mut() {
            members.sort_by_key(|&i| fixed_points[i].position.pairing(&d));
            for pair in members.windows(2) {
                let (m, n) = (pair[0], pair[1]);
                let forward = fixed_points[m].multiplicity(&d);
                let backward = fixed_points[n].multiplicity(&-d);
                match (forward > 0, backward > 0) {
                    (true, true) => edges.push(XRayEdge {
                        ends: (m, n),
                        direction: d,
                        rank: forward.min(backward),
                    }),
                    (true, false) => {
                        return Err(Error::AmbiguousPairing {
                            position: fixed_points[m].position,
                            direction: d,
                        })
                    }
                    (false, true) => {
                        return Err(Error::AmbiguousPairing {
                            position: fixed_points[n].position,
                            direction: -d,
                        })
                    }
                    (false, false) => {}
                }
            }
            if let Some(&last) = members.last() {
                if fixed_points[last].multiplicity(&d) > 0 {
                    return Err(Error::DanglingWeight {
                        position: fixed_points[last].position,
                        direction: d,
                    });
                }
            }
            if let Some(&first) = members.first() {
                if fixed_points[first].multiplicity(&-d) > 0 {
                    return Err(Error::DanglingWeight {
                        position: fixed_points[first].position,
                        direction: -d,
                    });
                }
            }
        }
    }
    Ok(edges)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicatePosition(Point2),
    BadEdge {
        edge: usize,
        reason: String,
    },
    NonPrimitiveWeight {
        position: Point2,
        direction: LatticeVector,
    },
    /// A weight slot that starts no edge (the line lemma fails).
    DanglingWeight {
        position: Point2,
        direction: LatticeVector,
    },
    NotWeylSymmetric(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicatePosition(p) => write!(f, "duplicate fixed point image {p}"),
            Violation::BadEdge { edge, reason } => write!(f, "edge {edge}: {reason}"),
            Violation::NonPrimitiveWeight {
                position,
                direction,
            } => {
                write!(f, "weight {direction} at {position} is not primitive")
            }
            Violation::DanglingWeight {
                position,
                direction,
            } => {
                write!(f, "weight {direction} at {position} starts no edge")
            }
            Violation::NotWeylSymmetric(why) => write!(f, "not Weyl symmetric: {why}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the X-ray invariants; with `weyl` also checks symmetry under
/// `(x, y) ↦ (y, x)`.
pub fn validate_xray(x: &XRay, weyl: bool) -> ValidationReport {
    let mut violations = Vec::new();
    let mut seen = BTreeSet::new();
    for fp in &x.fixed_points {
        if !seen.insert(fp.position) {
            violations.push(Violation::DuplicatePosition(fp.position));
        }
        for w in &fp.weights {
            if !w.direction.is_primitive() {
                violations.push(Violation::NonPrimitiveWeight {
                    position: fp.position,
                    direction: w.direction,
                });
            }
        }
    }
    for (k, e) in x.edges.iter().enumerate() {
        let (a, b) = e.ends;
        if a >= x.fixed_points.len() || b >= x.fixed_points.len() || a == b {
            violations.push(Violation::BadEdge {
                edge: k,
                reason: "endpoint out of range".into(),
            });
            continue;
        }
        match x.fixed_points[a]
            .position
            .direction_to(&x.fixed_points[b].position)
        {
            Ok(d) if d == e.direction => {}
            _ => violations.push(Violation::BadEdge {
                edge: k,
                reason: "direction does not match endpoints".into(),
            }),
        }
        if e.rank == 0 {
            violations.push(Violation::BadEdge {
                edge: k,
                reason: "rank 0".into(),
            });
        }
    }
    for (i, fp) in x.fixed_points.iter().enumerate() {
        for w in &fp.weights {
            if !x.has_edge_from(i, &w.direction) {
                violations.push(Violation::DanglingWeight {
                    position: fp.position,
                    direction: w.direction,
                });
            }
        }
    }
    if weyl {
        violations.extend(weyl_violations(x));
    }
    ValidationReport { violations }
}

fn weyl_violations(x: &XRay) -> Vec<Violation> {
    let mut out = Vec::new();
    for fp in &x.fixed_points {
        let image = fp.reflected();
        match x.fixed_points.iter().find(|g| g.position == image.position) {
            None => out.push(Violation::NotWeylSymmetric(format!(
                "reflection of {} is not a fixed point image",
                fp.position
            ))),
            Some(g) if g.weights != image.weights => {
                out.push(Violation::NotWeylSymmetric(format!(
                    "weights at {} do not reflect to those at {}",
                    fp.position, g.position
                )))
            }
            Some(_) => {}
        }
    }
    let edge_set: BTreeSet<(Segment, u32)> = x
        .edges
        .iter()
        .map(|e| (x.segment(e).sorted(), e.rank))
        .collect();
    for (s, rank) in &edge_set {
        let r = Segment::new(weyl_reflect(&s.a), weyl_reflect(&s.b)).sorted();
        if !edge_set.contains(&(r, *rank)) {
            out.push(Violation::NotWeylSymmetric(format!(
                "reflection of edge {s} is missing"
            )));
        }
    }
    out
}
