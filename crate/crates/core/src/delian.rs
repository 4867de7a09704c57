//! Two mean proportionals between given lengths, by simulating two instruments.
//!
//! Both instruments share one configuration. `A` is at the origin and `C = (b, 0)`.
//! A ruler `AZ` turns about `A` and carries a cursor `FY` square to it at
//! `AF = a`. A point `D` runs on the semicircle on `AC`, and the perpendicular
//! from `D` meets `AC` at `E`. The ruler direction is the rational circle point
//! for parameter `t = tan(DAC / 2)`, so every state is exact.
//!
//! The instruments differ only in what is watched:
//!
//! * the plumb-line instrument tracks where the foot of `E` on the ruler
//!   falls, `AF(t) = b k^3` with `k = cos(DAC)`, against the cursor mark `a`;
//! * the compass instrument keeps `D` on the circle about `O` (radius `AO`), slides
//!   the square `MN` through `D`, and compares where the cursor crosses `AC`
//!   (`x = a / k`) with where `MN` crosses it (`x = b k^2`).
//!
//! At the crossing `AE = b k^2` and `AD = b k` are the two means.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::euclid::{foot_on_line2, unit_circle_point, Point2};
use crate::scalar::{DecimalScalar, PrecisionContext, Rational};

/// Exact state of the apparatus at arc parameter `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstrumentState {
    pub a: Rational,
    pub b: Rational,
    pub t: Rational,
    /// Unit direction of the ruler `AZ`.
    pub ruler: Point2,
    pub d_point: Point2,
    pub e_foot: Point2,
    pub f_foot: Point2,
    /// Length `AF` cut off on the ruler by the perpendicular from `E`.
    pub af_current: Rational,
}

impl InstrumentState {
    pub fn at(a: &Rational, b: &Rational, t: &Rational) -> Result<Self> {
        if !b.is_positive() {
            return Err(Error::Domain(format!("diameter must be positive, got {b}")));
        }
        if t.is_negative() || *t >= Rational::one() {
            return Err(Error::Degenerate(format!("arc parameter {t} outside [0, 1)")));
        }
        let origin = Point2::origin();
        let c = Point2::new(b.clone(), Rational::zero());
        let ruler = unit_circle_point(t);
        let centre = centre_o(b);
        let reach = ruler.dot(&centre) * Rational::from(2);
        let d_point = ruler.scale(&reach);
        let e_foot = foot_on_line2(&d_point, &origin, &c)?;
        let f_foot = ruler.scale(&e_foot.dot(&ruler));
        let af_current = e_foot.dot(&ruler);
        Ok(Self {
            a: a.clone(),
            b: b.clone(),
            t: t.clone(),
            ruler,
            d_point,
            e_foot,
            f_foot,
            af_current,
        })
    }

    /// `cos(DAC)`.
    pub fn ratio(&self) -> &Rational {
        &self.ruler.x
    }

    /// Plumb-line reading: `AF(t) - a`. Decreasing in `t`.
    pub fn instrument_residual(&self) -> Rational {
        &self.af_current - &self.a
    }

    /// Point where the cursor, square to the ruler at distance `a`, crosses `AC`.
    pub fn cursor_crossing(&self) -> Result<Point2> {
        let k = self.ratio();
        if k.is_zero() {
            return Err(Error::Degenerate("ruler perpendicular to AC".into()));
        }
        Ok(Point2::new(self.a.checked_div(k)?, Rational::zero()))
    }

    /// Compass reading: cursor crossing minus the foot of `MN`. Increasing in `t`.
    pub fn compass_residual(&self) -> Result<Rational> {
        Ok(self.cursor_crossing()?.x - self.e_foot.x.clone())
    }

    /// `|OD| - AO`, zero for every state.
    pub fn circle_residual(&self) -> Rational {
        let o = centre_o(&self.b);
        o.distance_sq(&self.d_point) - o.norm_sq()
    }

    /// Mark on the ruler at `AF = a`.
    pub fn cursor_mark(&self) -> Point2 {
        self.ruler.scale(&self.a)
    }
}

fn centre_o(b: &Rational) -> Point2 {
    Point2::new(b * &Rational::new(1, 2).expect("non-zero"), Rational::zero())
}

/// Two means with the parameter at which the instrument settled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeansResult {
    /// First mean `AE`, at working precision.
    pub m1: DecimalScalar,
    /// Second mean `AD`, at working precision.
    pub m2: DecimalScalar,
    pub theta_param: Rational,
    pub iterations: u32,
    /// Absolute value of the driving residual at `theta_param`.
    pub residual: DecimalScalar,
}

impl MeansResult {
    /// `(m1, m2)` rounded to the output digits.
    pub fn rounded(&self, ctx: &PrecisionContext) -> (DecimalScalar, DecimalScalar) {
        (
            self.m1.round_to(ctx.output_digits()),
            self.m2.round_to(ctx.output_digits()),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Instrument,
    Compass,
}

fn check_inputs(a: &DecimalScalar, b: &DecimalScalar) -> Result<()> {
    if !a.is_positive() {
        return Err(Error::Domain(format!("first length must be positive, got {a}")));
    }
    if a > b {
        return Err(Error::Domain(format!("first length {a} exceeds the diameter {b}")));
    }
    Ok(())
}

/// Sign tests for the bracket at `t = n / N`, cleared of denominators.
///
/// With `p = N^2 - n^2` and `q = N^2 + n^2` the ruler has `k = p / q`.
struct Reading {
    a_num: BigInt,
    a_den: BigInt,
    b_num: BigInt,
    b_den: BigInt,
    n_sq: BigInt,
}

impl Reading {
    fn new(a: &Rational, b: &Rational, scale: &BigInt) -> Self {
        Self {
            a_num: a.numer().clone(),
            a_den: a.denom().clone(),
            b_num: b.numer().clone(),
            b_den: b.denom().clone(),
            n_sq: scale * scale,
        }
    }

    /// Whether the ruler has passed the crossing, so the bracket top moves down.
    fn settled(&self, method: Method, n: &BigInt) -> bool {
        let t_sq = n * n;
        let p = &self.n_sq - &t_sq;
        let q = &self.n_sq + &t_sq;
        match method {
            // AF = b p^3 / q^3 has come down to the cursor mark a
            Method::Instrument => &self.b_num * p.pow(3) * &self.a_den <= &self.a_num * q.pow(3) * &self.b_den,
            // cursor crossing a q / p is at or beyond the foot b p^2 / q^2;
            // both sides multiplied by p q^2
            Method::Compass => {
                let cursor = &self.a_num * &q * q.pow(2) * &self.b_den;
                let foot = &self.b_num * p.pow(2) * &p * &self.a_den;
                cursor >= foot
            }
        }
    }
}

fn solve(a: &DecimalScalar, b: &DecimalScalar, ctx: &PrecisionContext, method: Method) -> Result<MeansResult> {
    check_inputs(a, b)?;
    let w = ctx.work_digits();
    if a == b {
        return Ok(MeansResult {
            m1: a.round_to(w),
            m2: a.round_to(w),
            theta_param: Rational::zero(),
            iterations: 0,
            residual: DecimalScalar::zero().round_to(w),
        });
    }
    let (ar, br) = (a.to_rational(), b.to_rational());
    let scale = crate::scalar::pow10(w);
    let grid = |n: &BigInt| Rational::from_bigints(n.clone(), scale.clone());
    let reading = Reading::new(&ar, &br, &scale);

    let mut lo = BigInt::from(0);
    // t = 1 is degenerate; the top of the bracket is one unit inside.
    let mut hi = &scale - 1;
    if !reading.settled(method, &hi) {
        return Err(Error::Precision(format!(
            "lengths {a} and {b} are too far apart for {w} working digits"
        )));
    }
    let mut iterations = 0u32;
    while &hi - &lo > BigInt::from(1) {
        let mid: BigInt = (&lo + &hi) >> 1;
        if reading.settled(method, &mid) {
            hi = mid;
        } else {
            lo = mid;
        }
        iterations += 1;
    }
    let t = grid(&lo)?;
    let state = InstrumentState::at(&ar, &br, &t)?;
    let residual = match method {
        Method::Instrument => state.instrument_residual(),
        Method::Compass => state.compass_residual()?,
    };
    Ok(MeansResult {
        m1: state.e_foot.x.to_decimal(w),
        m2: (&br * state.ratio()).to_decimal(w),
        theta_param: t,
        iterations,
        residual: residual.abs().to_decimal(w),
    })
}

/// Plumb-line instrument: turns the ruler until the foot of `E` on it reaches the
/// cursor mark `AF = a`.
pub fn two_means_instrument(a: &DecimalScalar, b: &DecimalScalar, ctx: &PrecisionContext) -> Result<MeansResult> {
    solve(a, b, ctx, Method::Instrument)
}

/// Compass instrument: turns the ruler until the square `MN` through `D` and the
/// cursor cross `AC` at the same point.
pub fn two_means_compass(a: &DecimalScalar, b: &DecimalScalar, ctx: &PrecisionContext) -> Result<MeansResult> {
    solve(a, b, ctx, Method::Compass)
}

pub fn two_means(a: &DecimalScalar, b: &DecimalScalar, ctx: &PrecisionContext, method: Method) -> Result<MeansResult> {
    solve(a, b, ctx, method)
}

/// Edge of the cube of twice the volume, at working precision.
pub fn duplicate_cube(edge: &DecimalScalar, ctx: &PrecisionContext) -> Result<DecimalScalar> {
    if !edge.is_positive() {
        return Err(Error::Domain(format!("edge must be positive, got {edge}")));
    }
    let double = edge + edge;
    Ok(two_means_instrument(edge, &double, ctx)?.m1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::roots::cbrt_at;

    fn d(s: &str) -> DecimalScalar {
        s.parse().unwrap()
    }

    fn r(n: i64, den: i64) -> Rational {
        Rational::new(n, den).unwrap()
    }

    #[test]
    fn cube_roots_of_two_and_four() {
        let ctx = PrecisionContext::with_output(10);
        for method in [Method::Instrument, Method::Compass] {
            let res = two_means(&d("1"), &d("2"), &ctx, method).unwrap();
            let (m1, m2) = res.rounded(&ctx);
            assert_eq!(m1.to_string(), "1.2599210499");
            assert_eq!(m2.to_string(), "1.5874010520");
            assert_eq!(m1, cbrt_at(&d("2"), 10));
            assert!(res.residual < DecimalScalar::new(1, 10));
        }
    }

    #[test]
    fn solvers_agree() {
        let ctx = PrecisionContext::default();
        let i = two_means_instrument(&d("1"), &d("2"), &ctx).unwrap();
        let c = two_means_compass(&d("1"), &d("2"), &ctx).unwrap();
        assert_eq!(i.theta_param, c.theta_param);
        assert_eq!((i.m1, i.m2), (c.m1, c.m2));
    }

    #[test]
    fn one_to_eight() {
        let ctx = PrecisionContext::with_output(10);
        let res = two_means_compass(&d("1"), &d("8"), &ctx).unwrap();
        assert_eq!(res.rounded(&ctx), (d("2.0000000000"), d("4.0000000000")));
    }

    #[test]
    fn state_geometry_is_exact() {
        let s = InstrumentState::at(&r(1, 1), &r(2, 1), &r(1, 3)).unwrap();
        assert_eq!(s.ratio(), &r(4, 5));
        assert!(s.circle_residual().is_zero());
        assert_eq!(s.e_foot, Point2::new(r(32, 25), Rational::zero()));
        assert_eq!(s.af_current, r(128, 125));
        // F is the foot of E on the ruler
        assert!((&s.e_foot - &s.f_foot).dot(&s.ruler).is_zero());
        assert_eq!(s.cursor_crossing().unwrap().x, r(5, 4));
    }

    #[test]
    fn domain() {
        let ctx = PrecisionContext::default();
        assert!(matches!(
            two_means_instrument(&d("3"), &d("2"), &ctx),
            Err(Error::Domain(_))
        ));
        assert!(two_means_compass(&d("0"), &d("2"), &ctx).is_err());
        let same = two_means_instrument(&d("2"), &d("2"), &ctx).unwrap();
        assert_eq!((same.m1.clone(), same.iterations), (d("2"), 0));
        assert!(duplicate_cube(&d("-1"), &ctx).is_err());
    }

    #[test]
    fn duplicated_edges() {
        let ctx = PrecisionContext::with_output(10);
        assert_eq!(
            duplicate_cube(&d("1"), &ctx).unwrap().round_to(10).to_string(),
            "1.2599210499"
        );
        assert_eq!(
            duplicate_cube(&d("2"), &ctx).unwrap().round_to(10).to_string(),
            "2.5198420998"
        );
    }

    #[test]
    fn integer_readings_match_geometry() {
        let (a, b) = (r(3, 7), r(5, 2));
        let scale = BigInt::from(1000);
        let reading = Reading::new(&a, &b, &scale);
        for n in (0..1000).step_by(37) {
            let state = InstrumentState::at(&a, &b, &r(n, 1000)).unwrap();
            let n = BigInt::from(n);
            assert_eq!(
                reading.settled(Method::Instrument, &n),
                !state.instrument_residual().is_positive()
            );
            assert_eq!(
                reading.settled(Method::Compass, &n),
                !state.compass_residual().unwrap().is_negative()
            );
        }
    }
}
