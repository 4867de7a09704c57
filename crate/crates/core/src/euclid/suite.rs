//! Seeded randomized run of every checker on constructively valid instances and
//! on perturbed ones.

use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::Result;
use crate::scalar::Rational;

use super::generate::*;
use super::geometry::{Point2, Point3, Triangle};
use super::props::*;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropositionReport {
    pub proposition: &'static str,
    pub statement: &'static str,
    pub instances: usize,
    pub valid_passed: usize,
    pub perturbed_detected: usize,
}

impl PropositionReport {
    pub fn holds(&self) -> bool {
        self.valid_passed == self.instances && self.perturbed_detected == self.instances
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub instances: usize,
    pub propositions: Vec<PropositionReport>,
}

impl SuiteReport {
    pub fn all_hold(&self) -> bool {
        self.propositions.iter().all(PropositionReport::holds)
    }
}

/// Outcome of one instance: did the valid case pass, was the perturbed case caught.
type Trial = (bool, bool);

struct Case {
    proposition: &'static str,
    statement: &'static str,
    trial: fn(&mut InstanceRng) -> Trial,
}

fn zero(r: Result<Rational>) -> bool {
    matches!(r, Ok(v) if v.is_zero())
}

fn truth(r: Result<bool>) -> bool {
    matches!(r, Ok(true))
}

fn nondegenerate_pair(rng: &mut InstanceRng) -> (Point2, Point2) {
    loop {
        let u = random_point2(rng);
        let v = random_point2(rng);
        if !u.cross(&v).is_zero() {
            return (u, v);
        }
    }
}

/// Moves `c` along `ab` so the angle at `a` is no longer right.
fn break_right_angle(rng: &mut InstanceRng, t: &Triangle) -> Triangle {
    let shift = perturb(rng, &Rational::zero());
    let c = &t.c + &(&t.b - &t.a).scale(&shift);
    Triangle::new(t.a.clone(), t.b.clone(), c)
}

/// Slides `c` along `ab` until the dot product at `a` has the opposite sign.
fn flip_angle_class(t: &Triangle) -> Triangle {
    let u = &t.b - &t.a;
    let v = &t.c - &t.a;
    let k = -(v.dot(&u) * Rational::from(2)) / u.norm_sq();
    let c = &t.c + &u.scale(&k);
    Triangle::new(t.a.clone(), t.b.clone(), c)
}

fn trial_47_1(rng: &mut InstanceRng) -> Trial {
    let t = right_triangle(rng);
    (zero(check_47_1(&t)), !zero(check_47_1(&break_right_angle(rng, &t))))
}

fn obtuse_or_acute(rng: &mut InstanceRng, want_obtuse: bool) -> Triangle {
    loop {
        let a = random_point2(rng);
        let (u, mut v) = nondegenerate_pair(rng);
        let dot = u.dot(&v);
        if dot.is_zero() {
            continue;
        }
        if dot.is_negative() != want_obtuse {
            v = -&v;
        }
        return Triangle::new(a.clone(), &a + &u, &a + &v);
    }
}

fn trial_12_2(rng: &mut InstanceRng) -> Trial {
    let t = obtuse_or_acute(rng, true);
    (zero(check_12_2(&t)), !zero(check_12_2(&flip_angle_class(&t))))
}

fn trial_13_2(rng: &mut InstanceRng) -> Trial {
    let t = obtuse_or_acute(rng, false);
    (zero(check_13_2(&t)), !zero(check_13_2(&flip_angle_class(&t))))
}

fn trial_3_3(rng: &mut InstanceRng) -> Trial {
    let center = random_point2(rng);
    let radius = random_positive_rational(rng);
    let (p, q) = loop {
        let u = unit_circle_point(&random_rational(rng));
        let w = unit_circle_point(&random_rational(rng));
        // skip coincident ends and diameters
        if !u.cross(&w).is_zero() {
            break (&center + &u.scale(&radius), &center + &w.scale(&radius));
        }
    };
    let dir = if rng.gen_bool(0.5) {
        (&q - &p).perp()
    } else {
        &p.midpoint(&q) - &center
    };
    let valid = truth(check_3_3(&center, (&p, &q), &dir));
    let shift = perturb(rng, &Rational::zero());
    let q_off = &q + &(&q - &p).scale(&shift);
    let perp = (&q_off - &p).perp();
    let detected = !truth(check_3_3(&center, (&p, &q_off), &perp));
    (valid, detected)
}

fn trial_8_6(rng: &mut InstanceRng) -> Trial {
    let t = right_triangle(rng);
    (
        zero(check_8_6_corollary(&t)),
        !zero(check_8_6_corollary(&break_right_angle(rng, &t))),
    )
}

fn trial_31_6(rng: &mut InstanceRng) -> Trial {
    let t = right_triangle(rng);
    let aspect = random_positive_rational(rng);
    (
        zero(check_31_6(&t, &aspect)),
        !zero(check_31_6(&break_right_angle(rng, &t), &aspect)),
    )
}

fn trial_19_7(rng: &mut InstanceRng) -> Trial {
    let p = random_nonzero_rational(rng);
    let q = random_nonzero_rational(rng);
    let k = random_nonzero_rational(rng);
    let pk = &p * &k;
    let qk = &q * &k;
    let valid = truth(check_19_7(&p, &pk, &q, &qk));
    let mut off = perturb(rng, &qk);
    if off.is_zero() {
        off = &qk * Rational::from(2);
    }
    (valid, !truth(check_19_7(&p, &pk, &q, &off)))
}

fn trial_20_7(rng: &mut InstanceRng) -> Trial {
    let p = random_nonzero_rational(rng);
    let k = random_nonzero_rational(rng);
    let b = &p * &k;
    let c = &b * &k;
    let valid = truth(check_20_7(&p, &b, &c));
    let mut off = perturb(rng, &c);
    if off.is_zero() {
        off = &c * Rational::from(2);
    }
    (valid, !truth(check_20_7(&p, &b, &off)))
}

fn trial_4_11(rng: &mut InstanceRng) -> Trial {
    let (u, v) = loop {
        let u = random_point3(rng);
        let v = random_point3(rng);
        if !u.cross(&v).is_zero() {
            break (u, v);
        }
    };
    let line = u.cross(&v).scale(&random_nonzero_rational(rng));
    let valid = truth(check_4_11(&line, &u, &v));
    let tilted = &line + &u.scale(&perturb(rng, &Rational::zero()));
    (valid, !truth(check_4_11(&tilted, &u, &v)))
}

fn trial_7_12(rng: &mut InstanceRng) -> Trial {
    loop {
        let p0 = random_point3(rng);
        let p1 = random_point3(rng);
        let p2 = random_point3(rng);
        let offset = random_point3(rng);
        let normal = (&p1 - &p0).cross(&(&p2 - &p0));
        if normal.is_zero() || offset.dot(&normal).is_zero() {
            continue;
        }
        let valid = check_7_12((&p0, &p1, &p2), &offset).is_zero();
        let q0 = &p0 + &offset;
        let q1 = &p1 + &offset;
        let q2 = &p2 + &offset;
        // push q2 away from the plane p2 q0 q1 so the last piece grows
        let n = (&q0 - &p2).cross(&(&q1 - &p2));
        let det = n.dot(&(&q2 - &p2));
        let mut eps = perturb(rng, &Rational::zero()).abs();
        if det.is_negative() {
            eps = -eps;
        }
        let q2_off = &q2 + &n.scale(&eps);
        let detected = !check_7_12_vertices((&p0, &p1, &p2), (&q0, &q1, &q2_off)).is_zero();
        return (valid, detected);
    }
}

fn outward(rng: &mut InstanceRng, side: &Point2, inner: &Point2) -> Point2 {
    loop {
        let w = random_point2(rng);
        let s = side.cross(&w);
        if s.is_zero() {
            continue;
        }
        let inner_side = side.cross(inner);
        return if s.is_positive() == inner_side.is_positive() {
            -&w
        } else {
            w
        };
    }
}

fn trial_pappus(rng: &mut InstanceRng) -> Trial {
    let a = random_point2(rng);
    let (u, v) = nondegenerate_pair(rng);
    let t = Triangle::new(a.clone(), &a + &u, &a + &v);
    let on_ab = outward(rng, &u, &v);
    let on_ac = outward(rng, &v, &u);
    let valid = zero(check_pappus(&t, &on_ab, &on_ac));
    // the same parallelogram folded inward over the triangle
    let inward = -&on_ab;
    let detected = !zero(check_pappus(&t, &inward, &on_ac));
    (valid, detected)
}

fn trial_clavius(rng: &mut InstanceRng) -> Trial {
    let m = random_point2(rng);
    let radius = random_positive_rational(rng);
    let (u, w) = loop {
        let u = unit_circle_point(&random_rational(rng));
        let w = unit_circle_point(&random_rational(rng));
        if !u.cross(&w).is_zero() {
            break (u, w);
        }
    };
    let p = &m + &u.scale(&radius);
    let q = &m - &u.scale(&radius);
    let v = &m + &w.scale(&radius);
    let valid = truth(check_clavius_31_3(&p, &q, &v));
    let v_off = &v + &(&v - &m).scale(&perturb(rng, &Rational::zero()));
    (valid, !truth(check_clavius_31_3(&p, &q, &v_off)))
}

fn trial_circle(rng: &mut InstanceRng) -> Trial {
    let pt = unit_circle_point(&random_rational(rng));
    let valid = pt.norm_sq() == Rational::one();
    let off = Point2::new(perturb(rng, &pt.x), pt.y.clone());
    (valid, off.norm_sq() != Rational::one())
}

fn trial_sphere(rng: &mut InstanceRng) -> Trial {
    let pt = unit_sphere_point(&random_rational(rng), &random_rational(rng));
    let valid = pt.norm_sq() == Rational::one();
    let off = Point3::new(pt.x.clone(), pt.y.clone(), perturb(rng, &pt.z));
    (valid, off.norm_sq() != Rational::one())
}

const CASES: &[Case] = &[
    Case {
        proposition: "47.1",
        statement: "square on the hypotenuse equals the squares on the legs",
        trial: trial_47_1,
    },
    Case {
        proposition: "12.2",
        statement: "obtuse: excess of twice the outer rectangle",
        trial: trial_12_2,
    },
    Case {
        proposition: "13.2",
        statement: "acute: deficit of twice the inner rectangle",
        trial: trial_13_2,
    },
    Case {
        proposition: "3.3",
        statement: "a line through the centre bisects a chord iff it is perpendicular",
        trial: trial_3_3,
    },
    Case {
        proposition: "8.6 cor.",
        statement: "altitude is the mean proportional of the base segments",
        trial: trial_8_6,
    },
    Case {
        proposition: "31.6",
        statement: "similar figures on the sides of a right triangle",
        trial: trial_31_6,
    },
    Case {
        proposition: "19.7",
        statement: "a:b = c:d iff ad = bc",
        trial: trial_19_7,
    },
    Case {
        proposition: "20.7",
        statement: "a:b = b:c iff ac = b^2",
        trial: trial_20_7,
    },
    Case {
        proposition: "4.11",
        statement: "perpendicular to two lines is perpendicular to their plane",
        trial: trial_4_11,
    },
    Case {
        proposition: "7.12",
        statement: "a triangular prism splits into three equal pyramids",
        trial: trial_7_12,
    },
    Case {
        proposition: "Pappus 47.1",
        statement: "parallelograms on two sides equal the one on the third",
        trial: trial_pappus,
    },
    Case {
        proposition: "Clavius 31.3",
        statement: "a right angle stands in a semicircle",
        trial: trial_clavius,
    },
    Case {
        proposition: "circle",
        statement: "rational parametrisation lies on the unit circle",
        trial: trial_circle,
    },
    Case {
        proposition: "sphere",
        statement: "rational parametrisation lies on the unit sphere",
        trial: trial_sphere,
    },
];

fn run_case(index: usize, case: &Case, seed: u64, instances: usize) -> PropositionReport {
    let mut rng = InstanceRng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let mut report = PropositionReport {
        proposition: case.proposition,
        statement: case.statement,
        instances,
        valid_passed: 0,
        perturbed_detected: 0,
    };
    for _ in 0..instances {
        let (valid, detected) = (case.trial)(&mut rng);
        report.valid_passed += usize::from(valid);
        report.perturbed_detected += usize::from(detected);
    }
    report
}

/// Runs every checker on `instances` valid and `instances` perturbed cases.
/// Each proposition draws from its own stream of a ChaCha generator seeded by
/// `seed`, so the report is independent of thread scheduling.
pub fn run_suite(seed: u64, instances: usize) -> SuiteReport {
    let propositions = std::thread::scope(|scope| {
        let handles: Vec<_> = CASES
            .iter()
            .enumerate()
            .map(|(i, case)| scope.spawn(move || run_case(i, case, seed, instances)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("checker thread panicked"))
            .collect()
    });
    SuiteReport {
        seed,
        instances,
        propositions,
    }
}
