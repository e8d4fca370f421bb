//! Kähler obstruction from the X-ray.
//!
//! If the space were Kähler, a `T_C`-orbit whose closure maps onto the convex
//! hull of the fixed-point images in a cone `C` at a fixed point `p` would
//! exist, and every edge of that hull would lie in the image of some
//! circle-fixed stratum. A hull edge that no X-ray edge (or chain of collinear
//! X-ray edges) covers certifies that no invariant compatible Kähler structure
//! exists. Finding nothing proves nothing.

use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{
    cone_contains, hull2, segment_union_covers, strict_feasible, LatticeVector, Point2, Polygon,
    Segment,
};
use crate::group::{weyl_reflect, weyl_reflect_vector};
use crate::xray::XRay;

/// Two weights at a fixed point spanning the cone of an unstable manifold.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConeCandidate {
    pub fixed_point: usize,
    pub apex: Point2,
    pub alpha: LatticeVector,
    pub beta: LatticeVector,
    /// The remaining weight slots at the apex.
    pub others: Vec<LatticeVector>,
    /// Edges leave the apex along both `alpha` and `beta`. Always true on an
    /// X-ray that passes validation.
    pub rays_supported: bool,
}

impl ConeCandidate {
    pub fn contains(&self, q: &Point2) -> bool {
        cone_contains(self.alpha, self.beta, &(*q - self.apex)).expect("independent generators")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ObstructionCertificate {
    pub candidate: ConeCandidate,
    /// Fixed-point images in the closed cone, sorted.
    pub contained_points: Vec<Point2>,
    pub delta_cand: Polygon,
    /// A hull edge not covered by any union of collinear X-ray edges.
    pub uncovered_face: Segment,
}

impl ObstructionCertificate {
    /// The certificate mapped by the Weyl reflection. Fixed-point indices are
    /// not remapped.
    pub fn reflected(&self) -> ObstructionCertificate {
        let c = &self.candidate;
        let (alpha, beta) = ordered(weyl_reflect_vector(&c.alpha), weyl_reflect_vector(&c.beta));
        let mut others: Vec<LatticeVector> = c.others.iter().map(weyl_reflect_vector).collect();
        others.sort();
        let mut contained_points: Vec<Point2> =
            self.contained_points.iter().map(weyl_reflect).collect();
        contained_points.sort();
        ObstructionCertificate {
            candidate: ConeCandidate {
                fixed_point: c.fixed_point,
                apex: weyl_reflect(&c.apex),
                alpha,
                beta,
                others,
                rays_supported: c.rays_supported,
            },
            delta_cand: self.delta_cand.map(weyl_reflect).expect("nonempty"),
            uncovered_face: Segment::new(
                weyl_reflect(&self.uncovered_face.a),
                weyl_reflect(&self.uncovered_face.b),
            )
            .sorted(),
            contained_points,
        }
    }

    /// Same certificate up to the fixed-point index.
    pub fn same_geometry(&self, other: &ObstructionCertificate) -> bool {
        let (a, b) = (&self.candidate, &other.candidate);
        a.apex == b.apex
            && a.alpha == b.alpha
            && a.beta == b.beta
            && self.contained_points == other.contained_points
            && self.delta_cand == other.delta_cand
            && self.uncovered_face == other.uncovered_face
    }
}

impl fmt::Display for ObstructionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cone at {} on {}, {}: hull {} leaves {} uncovered",
            self.candidate.apex,
            self.candidate.alpha,
            self.candidate.beta,
            self.delta_cand,
            self.uncovered_face
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// No invariant compatible Kähler structure exists. Never empty.
    ObstructionFound(Vec<ObstructionCertificate>),
    /// Inconclusive.
    NoObstructionFound,
}

impl Verdict {
    pub fn is_obstructed(&self) -> bool {
        matches!(self, Verdict::ObstructionFound(_))
    }

    pub fn certificates(&self) -> &[ObstructionCertificate] {
        match self {
            Verdict::ObstructionFound(c) => c,
            Verdict::NoObstructionFound => &[],
        }
    }
}

fn ordered(a: LatticeVector, b: LatticeVector) -> (LatticeVector, LatticeVector) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Pairs of weight slots `(α, β)` at each fixed point such that some generic
/// `v` has `<α, v> < 0`, `<β, v> < 0` and `<γ, v> > 0` for every other slot
/// `γ`, i.e. the unstable manifold of `<Φ, v>` at that point is 4-dimensional
/// and tangent to the `α` and `β` weight spaces.
///
/// Sorted by apex position, then by the pair.
pub fn enumerate_cones(x: &XRay) -> Vec<ConeCandidate> {
    let mut out: Vec<ConeCandidate> = Vec::new();
    for (i, fp) in x.fixed_points().iter().enumerate() {
        let slots = fp.slots();
        for a in 0..slots.len() {
            for b in a + 1..slots.len() {
                let (alpha, beta) = ordered(slots[a], slots[b]);
                if alpha.is_parallel(&beta) {
                    continue;
                }
                let others: Vec<LatticeVector> = slots
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != a && *k != b)
                    .map(|(_, w)| *w)
                    .collect();
                if !strict_feasible(&[alpha, beta], &others) {
                    continue;
                }
                let candidate = ConeCandidate {
                    fixed_point: i,
                    apex: fp.position(),
                    alpha,
                    beta,
                    others,
                    rays_supported: x.has_edge_from(i, &alpha) && x.has_edge_from(i, &beta),
                };
                if !out.contains(&candidate) {
                    out.push(candidate);
                }
            }
        }
    }
    out.sort_by_key(|c| (c.apex, c.alpha, c.beta));
    out
}

/// Certificates for one cone candidate: every edge of the hull of the
/// contained fixed-point images that the X-ray does not cover.
pub fn certificates_for(x: &XRay, candidate: &ConeCandidate) -> Vec<ObstructionCertificate> {
    let mut contained_points: Vec<Point2> = x
        .positions()
        .into_iter()
        .filter(|q| candidate.contains(q))
        .collect();
    contained_points.sort();
    let Ok(delta_cand) = hull2(&contained_points) else {
        return Vec::new();
    };
    if delta_cand.dimension() < 2 {
        return Vec::new();
    }
    let pieces = x.segments();
    delta_cand
        .edges()
        .into_iter()
        .filter(|face| !segment_union_covers(face, &pieces))
        .map(|face| ObstructionCertificate {
            candidate: candidate.clone(),
            contained_points: contained_points.clone(),
            delta_cand: delta_cand.clone(),
            uncovered_face: face.sorted(),
        })
        .collect()
}

/// Decides the obstruction for a 6-dimensional space: every fixed point must
/// carry exactly three weight slots.
pub fn tolman_check(x: &XRay) -> Result<Verdict> {
    for fp in x.fixed_points() {
        if fp.slot_count() != 3 {
            return Err(Error::WrongDimensionScope {
                position: fp.position(),
                slots: fp.slot_count(),
            });
        }
    }
    let mut certs: Vec<ObstructionCertificate> = enumerate_cones(x)
        .iter()
        .flat_map(|c| certificates_for(x, c))
        .collect();
    certs.sort_by(|p, q| {
        let key = |c: &ObstructionCertificate| {
            (
                c.candidate.apex,
                c.candidate.alpha,
                c.candidate.beta,
                c.uncovered_face,
            )
        };
        key(p).cmp(&key(q))
    });
    if certs.is_empty() {
        Ok(Verdict::NoObstructionFound)
    } else {
        Ok(Verdict::ObstructionFound(certs))
    }
}
