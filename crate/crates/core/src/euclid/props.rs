use crate::error::{Error, Result};
use crate::scalar::Rational;

use super::geometry::{foot_on_line2, Point2, Point3, Triangle};

/// Classification of the angle at a triangle's designated vertex by the sign of
/// the dot product of its two sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AngleClass {
    Acute,
    Right,
    Obtuse,
}

/// Angle class at `t.a`; `None` for a degenerate triangle.
pub fn angle_class(t: &Triangle) -> Option<AngleClass> {
    if t.is_degenerate() {
        return None;
    }
    let dot = (&t.b - &t.a).dot(&(&t.c - &t.a));
    Some(if dot.is_zero() {
        AngleClass::Right
    } else if dot.is_positive() {
        AngleClass::Acute
    } else {
        AngleClass::Obtuse
    })
}

fn require_class(t: &Triangle, want: AngleClass, prop: &str) -> Result<()> {
    match angle_class(t) {
        None => Err(Error::Precondition(format!("{prop}: degenerate triangle"))),
        Some(c) if c == want => Ok(()),
        Some(c) => Err(Error::Precondition(format!(
            "{prop}: angle at the designated vertex is {c:?}, expected {want:?}"
        ))),
    }
}

/// 47.1: `|bc|^2 - (|ab|^2 + |ac|^2)` for a right angle at `a`.
pub fn check_47_1(t: &Triangle) -> Result<Rational> {
    require_class(t, AngleClass::Right, "47.1")?;
    let hyp = t.b.distance_sq(&t.c);
    Ok(hyp - (t.a.distance_sq(&t.b) + t.a.distance_sq(&t.c)))
}

/// Rectangle under side `ab` and the segment `ah` cut off on its line by the
/// perpendicular from `c`. Both lie on one line, so the product of lengths is
/// the absolute dot product and stays rational.
fn projection_rectangle(t: &Triangle) -> Result<Rational> {
    let foot = foot_on_line2(&t.c, &t.a, &t.b)?;
    Ok((&t.b - &t.a).dot(&(&foot - &t.a)).abs())
}

/// 12.2: with an obtuse angle at `a`, the square on `bc` exceeds the squares on
/// `ab` and `ac` by twice the rectangle under `ab` and the outside segment.
pub fn check_12_2(t: &Triangle) -> Result<Rational> {
    require_class(t, AngleClass::Obtuse, "12.2")?;
    let rect = projection_rectangle(t)?;
    let sides = t.a.distance_sq(&t.b) + t.a.distance_sq(&t.c);
    Ok(t.b.distance_sq(&t.c) - (sides + rect * Rational::from(2)))
}

/// 13.2: with an acute angle at `a`, the square on `bc` falls short of the
/// squares on `ab` and `ac` by twice the rectangle under `ab` and the inside segment.
pub fn check_13_2(t: &Triangle) -> Result<Rational> {
    require_class(t, AngleClass::Acute, "13.2")?;
    let rect = projection_rectangle(t)?;
    let sides = t.a.distance_sq(&t.b) + t.a.distance_sq(&t.c);
    Ok(t.b.distance_sq(&t.c) - (sides - rect * Rational::from(2)))
}

/// 3.3: for the line through `center` with direction `line_dir`, "bisects the
/// chord" holds exactly when "is perpendicular to the chord" does.
///
/// Returns `false` when the biconditional fails, which happens when the chord's
/// ends are not equidistant from `center`.
pub fn check_3_3(center: &Point2, chord: (&Point2, &Point2), line_dir: &Point2) -> Result<bool> {
    let (p, q) = chord;
    if p == q {
        return Err(Error::Degenerate("3.3: chord has coincident ends".into()));
    }
    if line_dir.is_zero() {
        return Err(Error::Degenerate("3.3: zero direction".into()));
    }
    if (q - p).cross(&(center - p)).is_zero() {
        return Err(Error::Precondition("3.3: chord passes through the centre".into()));
    }
    let mid = p.midpoint(q);
    let bisects = line_dir.cross(&(&mid - center)).is_zero();
    let perpendicular = line_dir.dot(&(q - p)).is_zero();
    Ok(bisects == perpendicular)
}

/// Corollary to 8.6: in a right triangle (right angle at `a`) the altitude to
/// the hypotenuse is the mean proportional between the two base segments.
/// Residual `|ah|^2 - |bh| * |hc|`.
pub fn check_8_6_corollary(t: &Triangle) -> Result<Rational> {
    require_class(t, AngleClass::Right, "8.6 corollary")?;
    let h = foot_on_line2(&t.a, &t.b, &t.c)?;
    // h lies between b and c, so |bh|*|hc| = (h - b).(c - h).
    let segments = (&h - &t.b).dot(&(&t.c - &h));
    Ok(t.a.distance_sq(&h) - segments)
}

/// 31.6 with rectangles of fixed aspect ratio as the similar figures: the one on
/// the hypotenuse equals the sum of those on the legs. Right angle at `a`.
pub fn check_31_6(t: &Triangle, aspect: &Rational) -> Result<Rational> {
    require_class(t, AngleClass::Right, "31.6")?;
    if !aspect.is_positive() {
        return Err(Error::Domain("31.6: aspect ratio must be positive".into()));
    }
    let figure = |side_sq: Rational| side_sq * aspect;
    Ok(figure(t.b.distance_sq(&t.c)) - figure(t.a.distance_sq(&t.b)) - figure(t.a.distance_sq(&t.c)))
}

fn require_nonzero(values: &[&Rational], prop: &str) -> Result<()> {
    if values.iter().any(|v| v.is_zero()) {
        return Err(Error::Precondition(format!("{prop}: terms must be non-zero")));
    }
    Ok(())
}

/// 19.7: `a:b = c:d` iff `a*d = b*c`. Both routes are evaluated; returns whether
/// the four terms are proportional.
pub fn check_19_7(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Result<bool> {
    require_nonzero(&[a, b, c, d], "19.7")?;
    let by_ratio = a / b == c / d;
    let by_product = a * d == b * c;
    if by_ratio != by_product {
        return Err(Error::Precondition("19.7: ratio and product routes disagree".into()));
    }
    Ok(by_product)
}

/// 20.7: `a:b = b:c` iff `a*c = b^2`.
pub fn check_20_7(a: &Rational, b: &Rational, c: &Rational) -> Result<bool> {
    require_nonzero(&[a, b, c], "20.7")?;
    let by_ratio = a / b == b / c;
    let by_product = a * c == b.square();
    if by_ratio != by_product {
        return Err(Error::Precondition("20.7: ratio and product routes disagree".into()));
    }
    Ok(by_product)
}

/// 4.11: a line perpendicular to two intersecting lines is perpendicular to
/// their plane.
///
/// The hypothesis (`line_dir` orthogonal to `u` and `v`) is checked first. The
/// conclusion is then evaluated by bilinearity on combinations of the basis and,
/// independently, by `line_dir` being parallel to the plane normal `u x v`.
pub fn check_4_11(line_dir: &Point3, u: &Point3, v: &Point3) -> Result<bool> {
    if line_dir.is_zero() {
        return Err(Error::Degenerate("4.11: zero line direction".into()));
    }
    let normal = u.cross(v);
    if normal.is_zero() {
        return Err(Error::Precondition("4.11: the two lines are parallel".into()));
    }
    if !line_dir.dot(u).is_zero() || !line_dir.dot(v).is_zero() {
        return Err(Error::Precondition(
            "4.11: line is not perpendicular to both lines".into(),
        ));
    }
    let combos = [(1, 1), (1, -1), (2, 3), (-5, 7)];
    let bilinear = combos.iter().all(|&(alpha, beta)| {
        let w = &u.scale(&Rational::from(alpha)) + &v.scale(&Rational::from(beta));
        line_dir.dot(&w).is_zero()
    });
    let along_normal = line_dir.cross(&normal).is_zero();
    Ok(bilinear && along_normal)
}

fn tetra_volume(p: [&Point3; 4]) -> Rational {
    let sixth = Rational::new(1, 6).expect("non-zero");
    (p[1] - p[0]).triple(&(p[2] - p[0]), &(p[3] - p[0])).abs() * sixth
}

/// 7.12 for the prism with base `prism_base` translated by `apex_offset`.
pub fn check_7_12(prism_base: (&Point3, &Point3, &Point3), apex_offset: &Point3) -> Rational {
    let (p0, p1, p2) = prism_base;
    let top = (p0 + apex_offset, p1 + apex_offset, p2 + apex_offset);
    check_7_12_vertices(prism_base, (&top.0, &top.1, &top.2))
}

/// 7.12 with explicit top vertices `q0, q1, q2` over `p0, p1, p2`.
///
/// The prism volume is base area times height measured from `q0`; the three
/// tetrahedra are `p0p1p2q0`, `p1p2q0q1` and `p2q0q1q2`. Residual is
/// `sum_i |V - 3 T_i|`, zero iff the three pieces are equal thirds.
pub fn check_7_12_vertices(base: (&Point3, &Point3, &Point3), top: (&Point3, &Point3, &Point3)) -> Rational {
    let (p0, p1, p2) = base;
    let (q0, q1, q2) = top;
    let half = Rational::new(1, 2).expect("non-zero");
    let prism = (p1 - p0).triple(&(p2 - p0), &(q0 - p0)).abs() * half;
    let pieces = [
        tetra_volume([p0, p1, p2, q0]),
        tetra_volume([p1, p2, q0, q1]),
        tetra_volume([p2, q0, q1, q2]),
    ];
    let three = Rational::from(3);
    pieces
        .iter()
        .map(|piece| (&prism - piece * &three).abs())
        .fold(Rational::zero(), |acc, r| acc + r)
}

/// Pappus' extension of 47.1. Parallelograms stand outward on sides `ab` and
/// `ac`, given by their free edge vectors `on_ab` and `on_ac`. Their far sides
/// are produced to meet at `p`; the parallelogram on `bc` whose other side is
/// equal and parallel to `pa` then has area equal to the sum of the two.
/// Returns `area(ab) + area(ac) - area(bc)`.
pub fn check_pappus(t: &Triangle, on_ab: &Point2, on_ac: &Point2) -> Result<Rational> {
    if t.is_degenerate() {
        return Err(Error::Precondition("Pappus: degenerate triangle".into()));
    }
    let ab = &t.b - &t.a;
    let ac = &t.c - &t.a;
    let area_ab = ab.cross(on_ab);
    let area_ac = ac.cross(on_ac);
    if area_ab.is_zero() || area_ac.is_zero() {
        return Err(Error::Degenerate("Pappus: flat parallelogram".into()));
    }
    // (a + on_ab) + lambda*ab = (a + on_ac) + mu*ac
    let lambda = (on_ac - on_ab).cross(&ac) / ab.cross(&ac);
    let meet = &(&t.a + on_ab) + &ab.scale(&lambda);
    let side = &t.a - &meet;
    let area_bc = (&t.c - &t.b).cross(&side);
    Ok(area_ab.abs() + area_ac.abs() - area_bc.abs())
}

/// Clavius on 31.3 (converse of the angle in a semicircle): if the angle at `v`
/// subtended by `p q` is right, `v` lies on the circle with diameter `pq`.
pub fn check_clavius_31_3(p: &Point2, q: &Point2, v: &Point2) -> Result<bool> {
    let t = Triangle::new(v.clone(), p.clone(), q.clone());
    require_class(&t, AngleClass::Right, "Clavius 31.3")?;
    let center = p.midpoint(q);
    let radius_sq = p.distance_sq(q) * Rational::new(1, 4).expect("non-zero");
    Ok(v.distance_sq(&center) == radius_sq)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn tri(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> Triangle {
        Triangle::new(p(a.0, a.1), p(b.0, b.1), p(c.0, c.1))
    }

    #[test]
    fn pythagoras_classic() {
        assert!(check_47_1(&tri((0, 0), (3, 0), (0, 4))).unwrap().is_zero());
        assert!(check_47_1(&tri((0, 0), (1, 0), (0, 1))).unwrap().is_zero());
        assert!(matches!(
            check_47_1(&tri((0, 0), (3, 0), (1, 4))),
            Err(Error::Precondition(_))
        ));
        assert!(check_47_1(&tri((0, 0), (1, 1), (2, 2))).is_err());
    }

    #[test]
    fn obtuse_and_acute() {
        assert!(check_12_2(&tri((0, 0), (2, 0), (-1, 1))).unwrap().is_zero());
        assert!(check_13_2(&tri((0, 0), (2, 0), (1, 2))).unwrap().is_zero());
        assert!(check_12_2(&tri((0, 0), (2, 0), (1, 2))).is_err());
        assert!(check_13_2(&tri((0, 0), (2, 0), (-1, 1))).is_err());
    }

    #[test]
    fn bisecting_chords() {
        let o = p(0, 0);
        let (a, b) = (p(5, 0), p(3, 4));
        let mid_dir = a.midpoint(&b);
        assert!(check_3_3(&o, (&a, &b), &mid_dir).unwrap());
        assert!(check_3_3(&o, (&a, &b), &p(1, 0)).unwrap());
        // off-circle end: perpendicular line no longer bisects
        let off = p(3, 5);
        let perp = (&off - &a).perp();
        assert!(!check_3_3(&o, (&a, &off), &perp).unwrap());
        assert!(check_3_3(&o, (&p(5, 0), &p(-5, 0)), &p(0, 1)).is_err());
    }

    #[test]
    fn altitude_mean_proportional() {
        let t = tri((0, 0), (3, 0), (0, 4));
        assert!(check_8_6_corollary(&t).unwrap().is_zero());
        let h = foot_on_line2(&t.a, &t.b, &t.c).unwrap();
        assert_eq!(t.a.distance_sq(&h), r(144, 25));
        assert_eq!(t.b.distance_sq(&h), r(81, 25));
        assert_eq!(t.c.distance_sq(&h), r(256, 25));
        assert!(check_8_6_corollary(&tri((0, 0), (1, 0), (0, 1))).unwrap().is_zero());
    }

    #[test]
    fn similar_rectangles() {
        let t = tri((0, 0), (3, 0), (0, 4));
        assert!(check_31_6(&t, &r(2, 7)).unwrap().is_zero());
        assert!(check_31_6(&t, &r(-1, 1)).is_err());
    }

    #[test]
    fn proportions() {
        let i = |n| Rational::from(n);
        assert!(check_19_7(&i(2), &i(4), &i(6), &i(12)).unwrap());
        assert!(check_19_7(&i(1), &i(1), &i(1), &i(1)).unwrap());
        assert!(!check_19_7(&i(2), &i(4), &i(6), &i(13)).unwrap());
        assert!(check_20_7(&i(1), &i(2), &i(4)).unwrap());
        assert!(!check_20_7(&i(1), &i(2), &i(5)).unwrap());
        assert!(check_20_7(&i(0), &i(2), &i(5)).is_err());
    }

    #[test]
    fn perpendicular_to_plane() {
        let z = Point3::from_ints(0, 0, 3);
        let u = Point3::from_ints(1, 2, 0);
        let v = Point3::from_ints(-4, 1, 0);
        assert!(check_4_11(&z, &u, &v).unwrap());
        assert!(check_4_11(&Point3::from_ints(0, 1, 3), &u, &v).is_err());
        assert!(check_4_11(&z, &u, &u.scale(&r(3, 2))).is_err());
    }

    #[test]
    fn prism_thirds() {
        let o = Point3::origin();
        let x = Point3::from_ints(1, 0, 0);
        let y = Point3::from_ints(0, 1, 0);
        let up = Point3::from_ints(0, 0, 1);
        assert!(check_7_12((&o, &x, &y), &up).is_zero());
        // the unit right prism has volume 1/2 and splits into thirds of 1/6
        assert_eq!(tetra_volume([&o, &x, &y, &up]), r(1, 6));
        assert!(check_7_12((&o, &x, &y), &Point3::origin()).is_zero());
        let skew = Point3::new(r(1, 3), r(-2, 5), r(7, 4));
        assert!(check_7_12((&o, &x, &y), &skew).is_zero());
        let moved = &(&y + &up) + &Point3::from_ints(0, 0, 1);
        assert!(!check_7_12_vertices((&o, &x, &y), (&up, &(&x + &up), &moved)).is_zero());
    }

    #[test]
    fn pappus_squares() {
        let t = tri((0, 0), (1, 0), (0, 1));
        assert!(check_pappus(&t, &p(0, -1), &p(-1, 0)).unwrap().is_zero());
        let t = tri((0, 0), (4, 0), (1, 3));
        assert!(check_pappus(&t, &p(1, -2), &p(-3, 2)).unwrap().is_zero());
    }

    #[test]
    fn clavius() {
        assert!(check_clavius_31_3(&p(0, 0), &p(4, 0), &p(2, 2)).unwrap());
        assert!(check_clavius_31_3(&p(0, 0), &p(25, 0), &p(9, 12)).unwrap());
        assert!(check_clavius_31_3(&p(0, 0), &p(4, 0), &p(2, 3)).is_err());
    }
}
