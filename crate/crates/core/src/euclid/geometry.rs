use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Point3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub a: Point2,
    pub b: Point2,
    pub c: Point2,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(Rational::from(x), Rational::from(y))
    }

    pub fn origin() -> Self {
        Self::default()
    }

    pub fn dot(&self, other: &Self) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    /// z-component of the planar cross product.
    pub fn cross(&self, other: &Self) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.x * k, &self.y * k)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn midpoint(&self, other: &Self) -> Self {
        let half = Rational::new(1, 2).expect("non-zero");
        (self + other).scale(&half)
    }

    /// Quarter-turn counter-clockwise.
    pub fn perp(&self) -> Self {
        Self::new(-&self.y, self.x.clone())
    }

    pub fn distance_sq(&self, other: &Self) -> Rational {
        (self - other).norm_sq()
    }

    /// Lift into the plane `z = 0`.
    pub fn lift(&self) -> Point3 {
        Point3::new(self.x.clone(), self.y.clone(), Rational::zero())
    }
}

impl Point3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Self { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Self::new(Rational::from(x), Rational::from(y), Rational::from(z))
    }

    pub fn origin() -> Self {
        Self::default()
    }

    pub fn dot(&self, other: &Self) -> Rational {
        &self.x * &other.x + &self.y * &other.y + &self.z * &other.z
    }

    pub fn cross(&self, other: &Self) -> Self {
        Self::new(
            &self.y * &other.z - &self.z * &other.y,
            &self.z * &other.x - &self.x * &other.z,
            &self.x * &other.y - &self.y * &other.x,
        )
    }

    /// Scalar triple product `self . (b x c)`.
    pub fn triple(&self, b: &Self, c: &Self) -> Rational {
        self.dot(&b.cross(c))
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.x * k, &self.y * k, &self.z * k)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn distance_sq(&self, other: &Self) -> Rational {
        (self - other).norm_sq()
    }
}

impl Triangle {
    pub fn new(a: Point2, b: Point2, c: Point2) -> Self {
        Self { a, b, c }
    }

    /// Twice the signed area.
    pub fn doubled_area(&self) -> Rational {
        (&self.b - &self.a).cross(&(&self.c - &self.a))
    }

    pub fn is_degenerate(&self) -> bool {
        self.doubled_area().is_zero()
    }
}

macro_rules! vector_ops {
    ($ty:ident { $($f:ident),+ }) => {
        impl Add<&$ty> for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                $ty { $($f: &self.$f + &rhs.$f),+ }
            }
        }
        impl Sub<&$ty> for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                $ty { $($f: &self.$f - &rhs.$f),+ }
            }
        }
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty { $($f: -&self.$f),+ }
            }
        }
    };
}

vector_ops!(Point2 { x, y });
vector_ops!(Point3 { x, y, z });

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl Serialize for Point2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x.to_string(), self.y.to_string()].serialize(s)
    }
}

impl Serialize for Point3 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x.to_string(), self.y.to_string(), self.z.to_string()].serialize(s)
    }
}

/// Foot of the perpendicular from `p` onto the line through `a` and `b`.
pub fn foot_on_line2(p: &Point2, a: &Point2, b: &Point2) -> Result<Point2> {
    let dir = b - a;
    let len_sq = dir.norm_sq();
    if len_sq.is_zero() {
        return Err(Error::Degenerate("line through coincident points".into()));
    }
    let t = (p - a).dot(&dir) / len_sq;
    Ok(a + &dir.scale(&t))
}

/// Foot of the perpendicular from `p` onto the line through `a` and `b`.
pub fn foot_on_line3(p: &Point3, a: &Point3, b: &Point3) -> Result<Point3> {
    let dir = b - a;
    let len_sq = dir.norm_sq();
    if len_sq.is_zero() {
        return Err(Error::Degenerate("line through coincident points".into()));
    }
    let t = (p - a).dot(&dir) / len_sq;
    Ok(a + &dir.scale(&t))
}

/// Centre of the sphere through four points, by Cramer's rule on the three
/// perpendicular-bisector planes.
pub fn circumcenter3(p: [&Point3; 4]) -> Result<Point3> {
    let two = Rational::from(2);
    let rows: Vec<Point3> = (1..4).map(|i| (p[i] - p[0]).scale(&two)).collect();
    let rhs: Vec<Rational> = (1..4).map(|i| p[i].norm_sq() - p[0].norm_sq()).collect();
    let det = rows[0].triple(&rows[1], &rows[2]);
    if det.is_zero() {
        return Err(Error::Degenerate("coplanar points have no circumsphere".into()));
    }
    // Column replacement: transpose view, columns are x, y, z coefficients.
    let col = |f: fn(&Point3) -> &Rational| -> Point3 {
        Point3::new(f(&rows[0]).clone(), f(&rows[1]).clone(), f(&rows[2]).clone())
    };
    let cx = col(|p| &p.x);
    let cy = col(|p| &p.y);
    let cz = col(|p| &p.z);
    let b = Point3::new(rhs[0].clone(), rhs[1].clone(), rhs[2].clone());
    let det_cols = |a: &Point3, b2: &Point3, c: &Point3| a.triple(b2, c);
    let x = det_cols(&b, &cy, &cz) / &det;
    let y = det_cols(&cx, &b, &cz) / &det;
    let z = det_cols(&cx, &cy, &b) / &det;
    Ok(Point3::new(x, y, z))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn feet() {
        let f = foot_on_line2(&Point2::from_ints(1, 5), &Point2::origin(), &Point2::from_ints(4, 0)).unwrap();
        assert_eq!(f, Point2::from_ints(1, 0));
        let f = foot_on_line3(
            &Point3::from_ints(1, 1, 0),
            &Point3::origin(),
            &Point3::from_ints(2, 2, 2),
        )
        .unwrap();
        assert_eq!(f, Point3::new(r(2, 3), r(2, 3), r(2, 3)));
        assert!(foot_on_line2(&Point2::origin(), &Point2::from_ints(1, 1), &Point2::from_ints(1, 1)).is_err());
    }

    #[test]
    fn circumcenter_of_corner_tetrahedron() {
        let d = Point3::origin();
        let a = Point3::from_ints(2, 0, 0);
        let b = Point3::from_ints(0, 4, 0);
        let c = Point3::from_ints(0, 0, 6);
        let o = circumcenter3([&d, &a, &b, &c]).unwrap();
        assert_eq!(o, Point3::from_ints(1, 2, 3));
        assert!(circumcenter3([&d, &a, &b, &Point3::from_ints(1, 1, 0)]).is_err());
    }

    #[test]
    fn cross_products() {
        let u = Point3::from_ints(1, 0, 0);
        let v = Point3::from_ints(0, 1, 0);
        assert_eq!(u.cross(&v), Point3::from_ints(0, 0, 1));
        assert_eq!(Point2::from_ints(1, 0).cross(&Point2::from_ints(0, 1)), Rational::one());
        assert_eq!(Point2::from_ints(2, 3).perp(), Point2::from_ints(-3, 2));
    }
}
