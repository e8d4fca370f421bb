//! Planar cones and open homogeneous feasibility.

use num_traits::Signed;

use super::lattice::{det2, LatticeVector, Point2};
use crate::error::{Error, Result};

/// Whether `v = c1·alpha + c2·beta` for some `c1, c2 >= 0`.
pub fn cone_member(alpha: LatticeVector, beta: LatticeVector, v: LatticeVector) -> Result<bool> {
    cone_contains(alpha, beta, &v.as_point())
}

/// Closed-cone membership for a rational vector.
pub fn cone_contains(alpha: LatticeVector, beta: LatticeVector, v: &Point2) -> Result<bool> {
    let d = det2(alpha, beta);
    if d == 0 {
        return Err(Error::DegenerateCone { alpha, beta });
    }
    let (a, b) = (alpha.as_point(), beta.as_point());
    // Cramer: c1 = det(v, beta) / d, c2 = det(alpha, v) / d.
    let n1 = v.cross(&b);
    let n2 = a.cross(v);
    let ok = |n: num_rational::Ratio<i64>| {
        if d > 0 {
            !n.is_negative()
        } else {
            !n.is_positive()
        }
    };
    Ok(ok(n1) && ok(n2))
}

/// Whether some `v` has `<w, v> < 0` for every `w` in `negatives` and
/// `<w, v> > 0` for every `w` in `positives`.
///
/// Every constraint is an open half-plane `{v : <g, v> > 0}`. A nonempty
/// intersection is either a half-plane, which contains one of the `g`, or an
/// open sector bounded by two rays perpendicular to constraint normals, which
/// contains the sum of those rays. Testing that finite candidate set decides
/// feasibility exactly.
pub fn strict_feasible(negatives: &[LatticeVector], positives: &[LatticeVector]) -> bool {
    let normals: Vec<LatticeVector> = negatives
        .iter()
        .map(|w| -*w)
        .chain(positives.iter().copied())
        .collect();
    if normals.is_empty() {
        return true;
    }
    if normals.iter().any(|g| g.is_zero()) {
        return false;
    }
    let satisfies = |v: &LatticeVector| normals.iter().all(|g| g.dot(v) > 0);

    if normals.iter().any(satisfies) {
        return true;
    }
    let rays: Vec<LatticeVector> = normals.iter().flat_map(|g| [g.perp(), -g.perp()]).collect();
    for (i, r) in rays.iter().enumerate() {
        for s in &rays[i + 1..] {
            let v = *r + *s;
            if !v.is_zero() && satisfies(&v) {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: i64, y: i64) -> LatticeVector {
        LatticeVector::new(x, y)
    }

    #[test]
    fn cone_member_examples() {
        assert_eq!(cone_member(v(0, -1), v(1, -1), v(-1, 2)), Ok(false));
        assert_eq!(cone_member(v(-1, 1), v(0, -1), v(-1, 0)), Ok(true));
        assert_eq!(cone_member(v(3, 1), v(-2, 5), v(3, 1)), Ok(true));
        assert_eq!(cone_member(v(3, 1), v(-2, 5), v(-2, 5)), Ok(true));
        assert!(matches!(
            cone_member(v(1, 1), v(2, 2), v(1, 0)),
            Err(Error::DegenerateCone { .. })
        ));
    }

    #[test]
    fn strict_feasible_examples() {
        assert!(strict_feasible(&[v(0, -1), v(1, -1)], &[v(-1, 2)]));
        assert!(strict_feasible(&[v(1, 0)], &[v(-1, 0)]));
        assert!(!strict_feasible(&[v(1, 0), v(-1, 0)], &[]));
        assert!(strict_feasible(&[], &[]));
        // Third weight inside the cone: no generic direction exists.
        assert!(!strict_feasible(&[v(-1, 1), v(0, -1)], &[v(-1, 0)]));
    }

    #[test]
    fn strict_feasible_narrow_sector() {
        // Thin open sectors around the coordinate axes.
        assert!(strict_feasible(&[], &[v(1, 100), v(-1, 100)]));
        assert!(strict_feasible(&[], &[v(100, 1), v(100, -1)]));
        assert!(!strict_feasible(&[], &[v(1, 0), v(-1, 1), v(-1, -1)]));
    }
}
