//! Trirectangular pyramids: the sum of the squares on the three edges at the
//! right-angled vertex equals the square on the diagonal of the enclosing box,
//! which is also the diameter of the circumscribed sphere.
//!
//! Pyramids are stored by their three edge lengths. Coordinates are built on
//! demand with `D` at the origin, `A` on the x axis, `B` on the z axis (up) and
//! `C` on the y axis, so the base `ADCF` is horizontal and `E` is the box corner
//! opposite `A`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::euclid::{check_47_1, Point2, Point3, Triangle};
use crate::scalar::Rational;

/// Edges `DA`, `DB`, `DC` of a pyramid right-angled at `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightPyramid {
    da: Rational,
    db: Rational,
    dc: Rational,
}

/// Named vertices of the box enclosing a [`RightPyramid`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoxVertices {
    pub d: Point3,
    pub a: Point3,
    pub b: Point3,
    pub c: Point3,
    /// Base corner `A + C`.
    pub f: Point3,
    /// `A` lifted by `DB`.
    pub g: Point3,
    /// `C` lifted by `DB`; opposite `A`.
    pub e: Point3,
    /// Corner above `F`; opposite `D`.
    pub h: Point3,
}

impl RightPyramid {
    pub fn new(da: Rational, db: Rational, dc: Rational) -> Result<Self> {
        for (name, edge) in [("DA", &da), ("DB", &db), ("DC", &dc)] {
            if !edge.is_positive() {
                return Err(Error::Domain(format!("edge {name} must be positive, got {edge}")));
            }
        }
        Ok(Self { da, db, dc })
    }

    pub fn edges(&self) -> [&Rational; 3] {
        [&self.da, &self.db, &self.dc]
    }

    pub fn scaled(&self, k: &Rational) -> Result<Self> {
        Self::new(&self.da * k, &self.db * k, &self.dc * k)
    }

    pub fn vertices(&self) -> BoxVertices {
        let zero = Rational::zero;
        let d = Point3::origin();
        let a = Point3::new(self.da.clone(), zero(), zero());
        let c = Point3::new(zero(), self.dc.clone(), zero());
        let b = Point3::new(zero(), zero(), self.db.clone());
        let f = &a + &c;
        let g = &a + &b;
        let e = &c + &b;
        let h = &f + &b;
        BoxVertices { d, a, b, c, f, g, e, h }
    }
}

/// `DA^2 + DB^2 + DC^2`, the squared diagonal of the enclosing box.
pub fn diagonal_sq(p: &RightPyramid) -> Rational {
    p.da.square() + p.db.square() + p.dc.square()
}

/// Squared diameter of the sphere through `D, A, B, C`.
///
/// The sphere also passes through every corner of the enclosing box, so its
/// centre is the box centre and the diameter is the box diagonal.
pub fn circumsphere_diameter_sq(p: &RightPyramid) -> Rational {
    let v = p.vertices();
    let half = Rational::new(1, 2).expect("non-zero");
    let centre = (&v.d + &v.h).scale(&half);
    debug_assert!([&v.a, &v.b, &v.c]
        .iter()
        .all(|q| q.distance_sq(&centre) == v.d.distance_sq(&centre)));
    centre.distance_sq(&v.d) * Rational::from(4)
}

/// Step-by-step derivation of the identity through two right triangles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalTrace {
    /// `AB^2 = AD^2 + DB^2` (right angle at D).
    pub ab_sq: String,
    /// `AE^2 = AB^2 + BE^2` (right angle at B, with `BE = DC`).
    pub ae_sq: String,
    pub be_equals_dc: bool,
    pub abe_right_at_b: bool,
}

/// Follows the two-step argument (triangle `ADB`, then `ABE`) in coordinates and
/// checks each step with the exact Pythagoras checker.
pub fn diagonal_trace(p: &RightPyramid) -> Result<DiagonalTrace> {
    let v = p.vertices();
    // Triangle ADB lies in the plane y = 0; drop to (x, z).
    let flat = |q: &Point3| Point2::new(q.x.clone(), q.z.clone());
    let adb = Triangle::new(flat(&v.d), flat(&v.a), flat(&v.b));
    if !check_47_1(&adb)?.is_zero() {
        return Err(Error::Precondition("triangle ADB fails 47.1".into()));
    }
    let ab_sq = v.a.distance_sq(&v.b);
    let be = &v.e - &v.b;
    let abe_right = (&v.a - &v.b).dot(&be).is_zero();
    let ae_sq = &ab_sq + be.norm_sq();
    if ae_sq != v.a.distance_sq(&v.e) {
        return Err(Error::Precondition("AE^2 differs from AB^2 + BE^2".into()));
    }
    Ok(DiagonalTrace {
        ab_sq: ab_sq.to_string(),
        ae_sq: ae_sq.to_string(),
        be_equals_dc: be.norm_sq() == p.dc.square(),
        abe_right_at_b: abe_right,
    })
}

/// Half of the box cut through `A, C` and their lifts is a right prism on
/// triangle `ADC`. Its rectangle `AGEC` has diagonals `AE` and `GC`, and both
/// must square to the pyramid's edge sum.
pub fn prism_diagonal_check(p: &RightPyramid) -> bool {
    let v = p.vertices();
    let ae = v.a.distance_sq(&v.e);
    let gc = v.g.distance_sq(&v.c);
    // AGEC is a rectangle: AG parallel and equal to CE, and AG perpendicular to AC.
    let rectangle = (&v.g - &v.a) == (&v.e - &v.c) && (&v.g - &v.a).dot(&(&v.c - &v.a)).is_zero();
    rectangle && ae == gc && ae == diagonal_sq(p)
}

/// Three edges at a vertex with arbitrary pairwise angles, given by cosines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObliqueVertexFrame {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub cos_ab: Rational,
    pub cos_bc: Rational,
    pub cos_ca: Rational,
}

impl ObliqueVertexFrame {
    pub fn new(edges: [Rational; 3], cosines: [Rational; 3]) -> Result<Self> {
        let [a, b, c] = edges;
        let [cos_ab, cos_bc, cos_ca] = cosines;
        let frame = Self {
            a,
            b,
            c,
            cos_ab,
            cos_bc,
            cos_ca,
        };
        frame.validate()?;
        Ok(frame)
    }

    /// Frame of three edge vectors with rational lengths.
    pub fn from_vectors(u: &Point3, v: &Point3, w: &Point3) -> Result<Self> {
        let len = |p: &Point3| {
            p.norm_sq()
                .sqrt_exact()
                .filter(Rational::is_positive)
                .ok_or_else(|| Error::Domain(format!("edge vector {p} has no positive rational length")))
        };
        let (la, lb, lc) = (len(u)?, len(v)?, len(w)?);
        let cos = |x: &Point3, y: &Point3, lx: &Rational, ly: &Rational| x.dot(y) / (lx * ly);
        Self::new(
            [la.clone(), lb.clone(), lc.clone()],
            [cos(u, v, &la, &lb), cos(v, w, &lb, &lc), cos(w, u, &lc, &la)],
        )
    }

    /// Exact positive-semidefiniteness of the Gram matrix of the unit edge
    /// directions, via all principal minors.
    pub fn gram_is_psd(&self) -> bool {
        let one = Rational::one();
        let minor2 = |c: &Rational| !(&one - c.square()).is_negative();
        let det = Rational::one() + (&self.cos_ab * &self.cos_bc * &self.cos_ca) * Rational::from(2)
            - self.cos_ab.square()
            - self.cos_bc.square()
            - self.cos_ca.square();
        minor2(&self.cos_ab) && minor2(&self.cos_bc) && minor2(&self.cos_ca) && !det.is_negative()
    }

    fn validate(&self) -> Result<()> {
        for edge in [&self.a, &self.b, &self.c] {
            if !edge.is_positive() {
                return Err(Error::Domain(format!("edge lengths must be positive, got {edge}")));
            }
        }
        if !self.gram_is_psd() {
            return Err(Error::Domain(format!(
                "cosines ({}, {}, {}) do not describe three directions in space",
                self.cos_ab, self.cos_bc, self.cos_ca
            )));
        }
        Ok(())
    }
}

/// Squared diagonal of the oblique parallelepiped on three edges:
/// `a^2 + b^2 + c^2 + 2(ab cos_ab + bc cos_bc + ca cos_ca)`.
pub fn oblique_diagonal_sq(f: &ObliqueVertexFrame) -> Result<Rational> {
    f.validate()?;
    let cross_terms = &f.a * &f.b * &f.cos_ab + &f.b * &f.c * &f.cos_bc + &f.c * &f.a * &f.cos_ca;
    Ok(f.a.square() + f.b.square() + f.c.square() + cross_terms * Rational::from(2))
}
