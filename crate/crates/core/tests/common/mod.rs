//! Brute-force oracles shared by the integration tests.

#![allow(dead_code)]

use num_traits::{Signed, Zero};
use proptest::prelude::*;
use txray::geometry::{HalfSpace, LatticeVector, Point2, Polygon, Rational, Segment};
use txray::xray::XRay;

pub fn p(x: i64, y: i64) -> Point2 {
    Point2::int(x, y)
}

fn orient(a: &Point2, b: &Point2, c: &Point2) -> Rational {
    (*b - *a).cross(&(*c - *a))
}

fn on_segment(a: &Point2, b: &Point2, q: &Point2) -> bool {
    orient(a, b, q).is_zero()
        && q.x >= a.x.min(b.x)
        && q.x <= a.x.max(b.x)
        && q.y >= a.y.min(b.y)
        && q.y <= a.y.max(b.y)
}

/// Closed triangle membership, valid for degenerate triangles too.
fn in_triangle(a: &Point2, b: &Point2, c: &Point2, q: &Point2) -> bool {
    let o = orient(a, b, c);
    if o.is_zero() {
        return on_segment(a, b, q) || on_segment(b, c, q) || on_segment(a, c, q);
    }
    let s = [orient(a, b, q), orient(b, c, q), orient(c, a, q)];
    s.iter().all(|v| !v.is_negative()) || s.iter().all(|v| !v.is_positive())
}

/// Points not in the convex hull of the other points (Carathéodory: some
/// triangle of others suffices).
pub fn extreme_points(points: &[Point2]) -> Vec<Point2> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let mut out = Vec::new();
    for (i, q) in pts.iter().enumerate() {
        let others: Vec<&Point2> = pts
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, r)| r)
            .collect();
        let n = others.len();
        let mut inside = false;
        'search: for a in 0..n {
            for b in a..n {
                for c in b..n {
                    if in_triangle(others[a], others[b], others[c], q) {
                        inside = true;
                        break 'search;
                    }
                }
            }
        }
        if !inside {
            out.push(*q);
        }
    }
    out
}

/// All points where the boundary line meets a segment between two vertices
/// on opposite sides, together with the vertices on the kept side.
pub fn clip_candidates(poly: &Polygon, hs: &HalfSpace) -> Vec<Point2> {
    let v = poly.vertices();
    let mut out: Vec<Point2> = v.iter().filter(|q| hs.contains(q)).copied().collect();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let (ea, eb) = (hs.excess(&v[i]), hs.excess(&v[j]));
            if (ea.is_negative() && eb.is_positive()) || (ea.is_positive() && eb.is_negative()) {
                out.push(v[i] + (v[j] - v[i]).scale(ea / (ea - eb)));
            }
        }
    }
    out
}

/// Whether `face` is covered by `pieces`: every elementary interval between
/// consecutive breakpoints on the face has its midpoint inside some piece.
pub fn covered_by_midpoints(face: &Segment, pieces: &[Segment]) -> bool {
    let mut breaks = vec![face.a, face.b];
    for s in pieces {
        for q in [s.a, s.b] {
            if on_segment(&face.a, &face.b, &q) {
                breaks.push(q);
            }
        }
    }
    breaks.sort();
    breaks.dedup();
    let half = Rational::new(1, 2);
    breaks.windows(2).all(|w| {
        let mid = w[0] + (w[1] - w[0]).scale(half);
        pieces.iter().any(|s| on_segment(&s.a, &s.b, &mid))
    })
}

/// Direct 2-D search for `v` with `<n, v> < 0` for all negatives and
/// `<q, v> > 0` for all positives, over a fine set of integer directions.
pub fn feasible_by_search(negatives: &[LatticeVector], positives: &[LatticeVector]) -> bool {
    let r = 40;
    (-r..=r).any(|x| {
        (-r..=r).any(|y| {
            let v = LatticeVector::new(x, y);
            negatives.iter().all(|n| n.dot(&v) < 0) && positives.iter().all(|q| q.dot(&v) > 0)
        })
    })
}

pub fn small_point(r: i64) -> impl Strategy<Value = Point2> {
    (-r..=r, -r..=r).prop_map(|(x, y)| Point2::int(x, y))
}

pub fn half_point(r: i64) -> impl Strategy<Value = Point2> {
    (-2 * r..=2 * r, -2 * r..=2 * r)
        .prop_map(|(x, y)| Point2::new(Rational::new(x, 2), Rational::new(y, 2)))
}

pub fn small_vector(r: i64) -> impl Strategy<Value = LatticeVector> {
    (-r..=r, -r..=r)
        .prop_filter("nonzero", |(x, y)| *x != 0 || *y != 0)
        .prop_map(|(x, y)| LatticeVector::new(x, y).primitive().unwrap())
}

pub fn positions_sorted(x: &XRay) -> Vec<Point2> {
    let mut v = x.positions();
    v.sort();
    v
}
