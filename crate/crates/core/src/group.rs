//! Root data of U(2) ⊂ U(3) restricted to the maximal 2-torus, and the
//! chamber geometry of U(2).

use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::geometry::{det2, LatticeVector, Point2, Point3, Rational};

/// Positive roots of U(3) restricted to `T = U(1)^2 × id`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootData {
    pub alpha1: LatticeVector,
    pub alpha2: LatticeVector,
    pub alpha3: LatticeVector,
    /// Weight of `T` on `u(2)*/t*`.
    pub minus_alpha1: LatticeVector,
}

pub const ROOTS: RootData = RootData {
    alpha1: LatticeVector::new(1, -1),
    alpha2: LatticeVector::new(0, 1),
    alpha3: LatticeVector::new(1, 0),
    minus_alpha1: LatticeVector::new(-1, 1),
};

/// Direction of the Weyl wall `x = y`.
pub const WALL_DIRECTION: LatticeVector = LatticeVector::new(1, 1);

impl RootData {
    /// Root relation, pairwise unimodularity, and `-α1`.
    pub fn check(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::InvalidParameter(format!("root data: {what}")));
        if self.alpha3 != self.alpha1 + self.alpha2 {
            return fail("alpha3 != alpha1 + alpha2");
        }
        if self.minus_alpha1 != -self.alpha1 {
            return fail("minus_alpha1 != -alpha1");
        }
        let roots = [self.alpha1, self.alpha2, self.alpha3];
        for i in 0..3 {
            for j in i + 1..3 {
                if det2(roots[i], roots[j]).abs() != 1 {
                    return fail("two roots do not form a lattice basis");
                }
            }
        }
        Ok(())
    }

    pub fn positive_roots(&self) -> [LatticeVector; 3] {
        [self.alpha1, self.alpha2, self.alpha3]
    }
}

/// The nontrivial element of the Weyl group of U(2): `(x, y) ↦ (y, x)`.
pub fn weyl_reflect(p: &Point2) -> Point2 {
    Point2::new(p.y, p.x)
}

pub fn weyl_reflect_vector(v: &LatticeVector) -> LatticeVector {
    LatticeVector::new(v.y, v.x)
}

pub fn on_wall(p: &Point2) -> bool {
    p.x == p.y
}

/// Closed positive chamber `x >= y`.
pub fn in_chamber(p: &Point2) -> bool {
    p.x >= p.y
}

/// Strictly inside the positive chamber.
pub fn in_open_chamber(p: &Point2) -> bool {
    (p.x - p.y).is_positive()
}

/// A strictly decreasing triple of eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lambda([Rational; 3]);

impl Lambda {
    pub fn new(l1: Rational, l2: Rational, l3: Rational) -> Result<Self> {
        if l1 > l2 && l2 > l3 {
            Ok(Self([l1, l2, l3]))
        } else {
            Err(Error::NonGenericLambda(
                l1.to_string(),
                l2.to_string(),
                l3.to_string(),
            ))
        }
    }

    pub fn int(l1: i64, l2: i64, l3: i64) -> Result<Self> {
        Self::new(l1.into(), l2.into(), l3.into())
    }

    pub fn values(&self) -> [Rational; 3] {
        self.0
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// The six coordinate permutations of `λ`, i.e. the Weyl orbit `W λ`.
pub fn s3_orbit(lambda: &Lambda) -> [Point3; 6] {
    let [a, b, c] = lambda.values();
    [
        Point3::new(a, b, c),
        Point3::new(a, c, b),
        Point3::new(b, a, c),
        Point3::new(b, c, a),
        Point3::new(c, a, b),
        Point3::new(c, b, a),
    ]
}

/// Restriction `t*(U(3)) → t*`, forgetting the third coordinate.
pub fn restrict(p: &Point3) -> Point2 {
    p.xy()
}
