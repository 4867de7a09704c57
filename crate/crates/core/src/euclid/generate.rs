//! Seeded generators of exact instances for the checkers.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::scalar::Rational;

use super::geometry::{Point2, Point3, Triangle};

pub type InstanceRng = ChaCha8Rng;

const NUM_RANGE: i64 = 60;
const DEN_RANGE: i64 = 24;

pub fn random_rational(rng: &mut InstanceRng) -> Rational {
    let n = rng.gen_range(-NUM_RANGE..=NUM_RANGE);
    let d = rng.gen_range(1..=DEN_RANGE);
    Rational::new(n, d).expect("positive denominator")
}

pub fn random_nonzero_rational(rng: &mut InstanceRng) -> Rational {
    loop {
        let r = random_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn random_positive_rational(rng: &mut InstanceRng) -> Rational {
    random_nonzero_rational(rng).abs()
}

pub fn random_point2(rng: &mut InstanceRng) -> Point2 {
    Point2::new(random_rational(rng), random_rational(rng))
}

pub fn random_point3(rng: &mut InstanceRng) -> Point3 {
    Point3::new(random_rational(rng), random_rational(rng), random_rational(rng))
}

/// `((1 - t^2) / (1 + t^2), 2t / (1 + t^2))`, a rational point on the unit circle.
pub fn unit_circle_point(t: &Rational) -> Point2 {
    let t2 = t.square();
    let den = Rational::one() + &t2;
    Point2::new((Rational::one() - &t2) / &den, (t * Rational::from(2)) / den)
}

/// Inverse stereographic projection of `(s, t)`: a rational point on the unit sphere.
pub fn unit_sphere_point(s: &Rational, t: &Rational) -> Point3 {
    let q = s.square() + t.square();
    let den = &q + Rational::one();
    let two = Rational::from(2);
    Point3::new((s * &two) / &den, (t * &two) / &den, (q - Rational::one()) / den)
}

/// Right angle at `a`: two legs of random rational length along a rational
/// direction and its quarter-turn.
pub fn right_triangle(rng: &mut InstanceRng) -> Triangle {
    let a = random_point2(rng);
    let dir = unit_circle_point(&random_rational(rng));
    let leg1 = random_positive_rational(rng);
    let leg2 = random_positive_rational(rng);
    let b = &a + &dir.scale(&leg1);
    let c = &a + &dir.perp().scale(&leg2);
    Triangle::new(a, b, c)
}

/// `value` plus a small non-zero rational.
pub fn perturb(rng: &mut InstanceRng, value: &Rational) -> Rational {
    let n = loop {
        let n = rng.gen_range(-5i64..=5);
        if n != 0 {
            break n;
        }
    };
    let d = rng.gen_range(7i64..=97);
    value + Rational::new(n, d).expect("positive denominator")
}
