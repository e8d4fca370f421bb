use std::fmt;

use num_traits::{One, Signed, Zero};

use super::lattice::{HalfSpace, Point2, Rational};
use crate::error::{Error, Result};

/// Convex polygon in `Q^2`, counterclockwise, starting at its
/// lexicographically smallest vertex, with no three consecutive vertices
/// collinear.
///
/// Hulls of collinear input come out as a two-vertex segment (or a single
/// point); `dimension()` tells them apart and callers that need an honest
/// polygon check it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polygon {
    vertices: Vec<Point2>,
}

fn turn(a: &Point2, b: &Point2, c: &Point2) -> Rational {
    (*b - *a).cross(&(*c - *b))
}

impl Polygon {
    /// Accepts a strictly convex counterclockwise vertex cycle, or one or two
    /// distinct points.
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        match vertices.len() {
            0 => Err(Error::EmptyInput),
            1 => Ok(Self { vertices }),
            2 if vertices[0] != vertices[1] => Ok(Self::normalized(vertices)),
            2 => Err(Error::InvalidPolygon),
            _ => {
                let cycle = Self::normalized(vertices);
                if hull2(&cycle.vertices)? != cycle {
                    return Err(Error::InvalidPolygon);
                }
                Ok(cycle)
            }
        }
    }

    fn normalized(mut vertices: Vec<Point2>) -> Self {
        let start = vertices
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| **p)
            .map(|(i, _)| i)
            .unwrap_or(0);
        vertices.rotate_left(start);
        Self { vertices }
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// 0 for a point, 1 for a segment, 2 for a proper polygon.
    pub fn dimension(&self) -> usize {
        self.vertices.len().min(3) - 1
    }

    pub fn is_segment(&self) -> bool {
        self.dimension() == 1
    }

    /// Boundary edges in counterclockwise order. A segment yields its single
    /// edge once.
    pub fn edges(&self) -> Vec<Segment> {
        let n = self.vertices.len();
        match n {
            0 | 1 => Vec::new(),
            2 => vec![Segment::new(self.vertices[0], self.vertices[1])],
            _ => (0..n)
                .map(|i| Segment::new(self.vertices[i], self.vertices[(i + 1) % n]))
                .collect(),
        }
    }

    /// Index-wise neighbours `(previous, next)` of vertex `i`.
    pub fn neighbours(&self, i: usize) -> (Point2, Point2) {
        let n = self.vertices.len();
        (self.vertices[(i + n - 1) % n], self.vertices[(i + 1) % n])
    }

    /// Closed-set membership.
    pub fn contains(&self, p: &Point2) -> bool {
        match self.vertices.len() {
            0 => false,
            1 => self.vertices[0] == *p,
            2 => Segment::new(self.vertices[0], self.vertices[1]).contains(p),
            n => (0..n)
                .all(|i| !turn(&self.vertices[i], &self.vertices[(i + 1) % n], p).is_negative()),
        }
    }

    pub fn map(&self, f: impl Fn(&Point2) -> Point2) -> Result<Polygon> {
        let pts: Vec<Point2> = self.vertices.iter().map(f).collect();
        hull2(&pts)
    }
}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Convex hull by monotone chain. Collinear boundary points are dropped.
pub fn hull2(points: &[Point2]) -> Result<Polygon> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return Ok(Polygon::normalized(pts));
    }
    let mut lower: Vec<Point2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && !turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<Point2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        let (first, last) = (pts[0], pts[pts.len() - 1]);
        return Ok(Polygon::normalized(vec![first, last]));
    }
    Ok(Polygon::normalized(lower))
}

/// Intersection of a polygon with a halfspace.
pub fn clip2(poly: &Polygon, hs: &HalfSpace) -> Result<Polygon> {
    let verts = poly.vertices();
    let n = verts.len();
    let mut kept: Vec<Point2> = verts.iter().filter(|p| hs.contains(p)).copied().collect();
    let pairs: Vec<(usize, usize)> = match n {
        0 | 1 => Vec::new(),
        2 => vec![(0, 1)],
        _ => (0..n).map(|i| (i, (i + 1) % n)).collect(),
    };
    for (i, j) in pairs {
        let (ei, ej) = (hs.excess(&verts[i]), hs.excess(&verts[j]));
        if (ei.is_positive() && ej.is_negative()) || (ei.is_negative() && ej.is_positive()) {
            let t = ei / (ei - ej);
            kept.push(verts[i] + (verts[j] - verts[i]).scale(t));
        }
    }
    if kept.is_empty() {
        return Err(Error::EmptyCut);
    }
    let out = hull2(&kept)?;
    if out.dimension() < 2 {
        return Err(Error::DegenerateCut);
    }
    Ok(out)
}

/// Closed segment between two points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    pub a: Point2,
    pub b: Point2,
}

impl Segment {
    pub fn new(a: Point2, b: Point2) -> Self {
        Self { a, b }
    }

    /// Same segment with endpoints in lexicographic order.
    pub fn sorted(&self) -> Self {
        if self.a <= self.b {
            *self
        } else {
            Self::new(self.b, self.a)
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn contains(&self, p: &Point2) -> bool {
        let d = self.b - self.a;
        let w = *p - self.a;
        if !d.cross(&w).is_zero() {
            return false;
        }
        let t = w.dot(&d);
        !t.is_negative() && t <= d.dot(&d)
    }

    /// Whether both endpoints of `other` lie on the line through `self`.
    pub fn collinear_with(&self, other: &Segment) -> bool {
        let d = self.b - self.a;
        d.cross(&(other.a - self.a)).is_zero() && d.cross(&(other.b - self.a)).is_zero()
    }

    /// Affine parameter of `p` along `a -> b` (0 at `a`, 1 at `b`).
    pub fn parameter(&self, p: &Point2) -> Rational {
        let d = self.b - self.a;
        (*p - self.a).dot(&d) / d.dot(&d)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// Whether `target` lies in the union of those `pieces` collinear with it.
pub fn segment_union_covers(target: &Segment, pieces: &[Segment]) -> bool {
    if target.is_degenerate() {
        return pieces.iter().any(|s| s.contains(&target.a));
    }
    let mut intervals: Vec<(Rational, Rational)> = pieces
        .iter()
        .filter(|s| !s.is_degenerate() && target.collinear_with(s))
        .map(|s| {
            let (u, v) = (target.parameter(&s.a), target.parameter(&s.b));
            if u <= v {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect();
    intervals.sort();
    let mut reach = Rational::zero();
    for (lo, hi) in intervals {
        if lo > reach {
            break;
        }
        if hi > reach {
            reach = hi;
        }
        if reach >= Rational::one() {
            return true;
        }
    }
    false
}
