//! Exact-rational checkers for the propositions of the *Elements* that the
//! constructions in this crate rely on.
//!
//! Every checker evaluates its proposition over [`Rational`] coordinates and
//! returns either an exact residual (zero iff the claim holds) or a boolean for
//! incidence claims. Nothing here compares against a tolerance.
//!
//! Unless stated otherwise the angle a proposition talks about sits at
//! `Triangle::a`.

mod generate;
mod geometry;
mod props;
mod suite;

pub use generate::{
    perturb, random_nonzero_rational, random_point2, random_point3, random_positive_rational, random_rational,
    right_triangle, unit_circle_point, unit_sphere_point, InstanceRng,
};
pub use geometry::{circumcenter3, foot_on_line2, foot_on_line3, Point2, Point3, Triangle};
pub use props::{
    angle_class, check_12_2, check_13_2, check_19_7, check_20_7, check_31_6, check_3_3, check_47_1, check_4_11,
    check_7_12, check_7_12_vertices, check_8_6_corollary, check_clavius_31_3, check_pappus, AngleClass,
};
pub use suite::{run_suite, PropositionReport, SuiteReport};
