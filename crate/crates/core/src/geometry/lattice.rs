use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = Ratio<i64>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Integer vector in the weight lattice of a rank-2 torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector {
    pub x: i64,
    pub y: i64,
}

impl LatticeVector {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn is_primitive(&self) -> bool {
        self.x.gcd(&self.y) == 1
    }

    /// Divides out the gcd of the coordinates.
    pub fn primitive(&self) -> Result<Self> {
        let g = self.x.gcd(&self.y);
        if g == 0 {
            return Err(Error::ZeroVector);
        }
        Ok(Self::new(self.x / g, self.y / g))
    }

    /// Representative of the line `{±v}` with a positive leading coordinate.
    pub fn class(&self) -> Self {
        if self.x < 0 || (self.x == 0 && self.y < 0) {
            -*self
        } else {
            *self
        }
    }

    pub fn dot(&self, other: &Self) -> i64 {
        self.x * other.x + self.y * other.y
    }

    /// Counterclockwise quarter turn.
    pub fn perp(&self) -> Self {
        Self::new(-self.y, self.x)
    }

    pub fn is_parallel(&self, other: &Self) -> bool {
        det2(*self, *other) == 0
    }

    pub fn as_point(&self) -> Point2 {
        Point2::new(rat(self.x), rat(self.y))
    }
}

impl Neg for LatticeVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl Add for LatticeVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Integer vector in the weight lattice of a rank-3 torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector3 {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl LatticeVector3 {
    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        Self { x, y, z }
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0 && self.z == 0
    }

    pub fn is_primitive(&self) -> bool {
        self.x.gcd(&self.y).gcd(&self.z) == 1
    }

    pub fn primitive(&self) -> Result<Self> {
        let g = self.x.gcd(&self.y).gcd(&self.z);
        if g == 0 {
            return Err(Error::ZeroVector);
        }
        Ok(Self::new(self.x / g, self.y / g, self.z / g))
    }

    pub fn dot(&self, o: &Self) -> i64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(&self, o: &Self) -> Self {
        Self::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }
}

impl Neg for LatticeVector3 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

impl fmt::Display for LatticeVector3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

pub fn det2(u: LatticeVector, v: LatticeVector) -> i64 {
    u.x * v.y - u.y * v.x
}

pub fn det3(u: LatticeVector3, v: LatticeVector3, w: LatticeVector3) -> i64 {
    u.dot(&v.cross(&w))
}

/// Exact point of `t* = Q^2`. Also used for rational difference vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Self::new(rat(x), rat(y))
    }

    pub fn pairing(&self, v: &LatticeVector) -> Rational {
        self.x * v.x + self.y * v.y
    }

    pub fn dot(&self, o: &Point2) -> Rational {
        self.x * o.x + self.y * o.y
    }

    /// Cross product of the two vectors `self` and `o`.
    pub fn cross(&self, o: &Point2) -> Rational {
        self.x * o.y - self.y * o.x
    }

    pub fn scale(&self, s: Rational) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Primitive lattice direction of the rational vector `self`.
    pub fn lattice_direction(&self) -> Result<LatticeVector> {
        let l = self.x.denom().lcm(self.y.denom());
        let x = (self.x * l).to_integer();
        let y = (self.y * l).to_integer();
        LatticeVector::new(x, y).primitive()
    }

    /// Primitive direction from `self` toward `to`.
    pub fn direction_to(&self, to: &Point2) -> Result<LatticeVector> {
        (*to - *self).lattice_direction()
    }
}

impl Add for Point2 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}

impl Add<LatticeVector> for Point2 {
    type Output = Self;
    fn add(self, v: LatticeVector) -> Self {
        Self::new(self.x + v.x, self.y + v.y)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Exact point of `Q^3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Point3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Self { x, y, z }
    }

    pub fn int(x: i64, y: i64, z: i64) -> Self {
        Self::new(rat(x), rat(y), rat(z))
    }

    pub fn pairing(&self, v: &LatticeVector3) -> Rational {
        self.x * v.x + self.y * v.y + self.z * v.z
    }

    pub fn dot(&self, o: &Point3) -> Rational {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(&self, o: &Point3) -> Point3 {
        Point3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn scale(&self, s: Rational) -> Point3 {
        Point3::new(self.x * s, self.y * s, self.z * s)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn lattice_direction(&self) -> Result<LatticeVector3> {
        let l = self.x.denom().lcm(self.y.denom()).lcm(self.z.denom());
        let v = LatticeVector3::new(
            (self.x * l).to_integer(),
            (self.y * l).to_integer(),
            (self.z * l).to_integer(),
        );
        v.primitive()
    }

    pub fn direction_to(&self, to: &Point3) -> Result<LatticeVector3> {
        (*to - *self).lattice_direction()
    }

    /// Drops the last coordinate.
    pub fn xy(&self) -> Point2 {
        Point2::new(self.x, self.y)
    }
}

impl Add for Point3 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Point3 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// `{ v : <v, normal> <= level }` with a primitive normal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalfSpace {
    normal: LatticeVector,
    level: Rational,
}

impl HalfSpace {
    pub fn new(normal: LatticeVector, level: Rational) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::ZeroVector);
        }
        if !normal.is_primitive() {
            return Err(Error::NonPrimitive(normal.to_string()));
        }
        Ok(Self { normal, level })
    }

    pub fn normal(&self) -> LatticeVector {
        self.normal
    }

    pub fn level(&self) -> Rational {
        self.level
    }

    /// Signed slack `<p, normal> - level`; nonpositive on the kept side.
    pub fn excess(&self, p: &Point2) -> Rational {
        p.pairing(&self.normal) - self.level
    }

    pub fn contains(&self, p: &Point2) -> bool {
        !self.excess(p).is_positive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_examples() {
        assert_eq!(
            LatticeVector::new(2, 4).primitive(),
            Ok(LatticeVector::new(1, 2))
        );
        assert_eq!(
            LatticeVector::new(0, -3).primitive(),
            Ok(LatticeVector::new(0, -1))
        );
        assert_eq!(
            LatticeVector::new(1, -1).primitive(),
            Ok(LatticeVector::new(1, -1))
        );
        assert_eq!(LatticeVector::new(0, 0).primitive(), Err(Error::ZeroVector));
        assert_eq!(
            LatticeVector3::new(2, 2, 4).primitive(),
            Ok(LatticeVector3::new(1, 1, 2))
        );
    }

    #[test]
    fn determinants() {
        assert_eq!(det2(LatticeVector::new(1, 0), LatticeVector::new(0, 1)), 1);
        assert_eq!(det2(LatticeVector::new(1, 2), LatticeVector::new(0, 1)), 1);
        assert_eq!(
            det3(
                LatticeVector3::new(1, 0, 0),
                LatticeVector3::new(0, 1, 0),
                LatticeVector3::new(2, 2, 1)
            ),
            1
        );
    }

    #[test]
    fn rational_directions() {
        let a = Point2::new(ratio(5, 2), rat(0));
        let b = Point2::new(ratio(7, 2), rat(1));
        assert_eq!(a.direction_to(&b), Ok(LatticeVector::new(1, 1)));
        assert_eq!(
            Point2::int(4, 0).direction_to(&Point2::int(2, 1)),
            Ok(LatticeVector::new(-2, 1))
        );
        assert_eq!(a.direction_to(&a), Err(Error::ZeroVector));
    }

    #[test]
    fn halfspace_rejects_non_primitive_normal() {
        assert!(HalfSpace::new(LatticeVector::new(2, 4), rat(1)).is_err());
        let hs = HalfSpace::new(LatticeVector::new(1, 2), rat(4)).unwrap();
        assert!(hs.contains(&Point2::int(2, 1)));
        assert!(!hs.contains(&Point2::int(5, 0)));
    }

    #[test]
    fn class_is_sign_invariant() {
        let v = LatticeVector::new(-1, 1);
        assert_eq!(v.class(), (-v).class());
        assert_eq!(LatticeVector::new(0, -1).class(), LatticeVector::new(0, 1));
    }
}
