use proportionals::delian::{duplicate_cube, two_means_compass, two_means_instrument, InstrumentState};
use proportionals::proportio::{four_proportionals_planar, verify_continued_proportion};
use proportionals::scalar::roots::cbrt_at;
use proportionals::{DecimalScalar, PrecisionContext, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_pair(rng: &mut ChaCha8Rng) -> (DecimalScalar, DecimalScalar) {
    loop {
        let a = DecimalScalar::new(rng.gen_range(1..1_000_000u32), 3);
        let b = DecimalScalar::new(rng.gen_range(1..=1_000_000u32), 3);
        if a < b {
            return (a, b);
        }
    }
}

#[test]
fn two_hundred_pairs_keep_the_proportion() {
    let ctx = PrecisionContext::default();
    let tol = DecimalScalar::new(1, ctx.output_digits());
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let (a, b) = random_pair(&mut rng);
        let res = two_means_instrument(&a, &b, &ctx).unwrap();
        let (m1, m2) = (&res.m1, &res.m2);
        assert!((a.mul_exact(m2) - m1.square()).abs() < tol, "a m2 = m1^2 for {a}, {b}");
        assert!((m1.mul_exact(&b) - m2.square()).abs() < tol, "m1 b = m2^2 for {a}, {b}");
        assert!(
            (a.mul_exact(&b) - m1.mul_exact(m2)).abs() < tol,
            "ab = m1 m2 for {a}, {b}"
        );
        // closed form: m1 = cbrt(a^2 b)
        let oracle = cbrt_at(&a.square().mul_exact(&b), ctx.work_digits());
        assert!((oracle - m1.clone()).abs() < tol);
        assert!(verify_continued_proportion(
            &[a.clone(), m1.clone(), m2.clone(), b.clone()],
            &tol
        ));
    }
}

#[test]
fn solvers_land_on_the_same_parameter() {
    let ctx = PrecisionContext::default();
    let bound = Rational::from_bigints(
        1.into(),
        num_bigint::BigInt::from(10).pow(ctx.work_digits() - ctx.guard_digits()),
    )
    .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..50 {
        let (a, b) = random_pair(&mut rng);
        let i = two_means_instrument(&a, &b, &ctx).unwrap();
        let c = two_means_compass(&a, &b, &ctx).unwrap();
        assert!((&i.theta_param - &c.theta_param).abs() < bound);
        assert!(c.residual < DecimalScalar::new(1, ctx.output_digits()));
    }
}

#[test]
fn scaling_both_lengths_scales_the_means() {
    let ctx = PrecisionContext::default();
    let w = ctx.work_digits();
    let k = DecimalScalar::from_integer(7);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..30 {
        let (a, b) = random_pair(&mut rng);
        let base = two_means_instrument(&a, &b, &ctx).unwrap();
        let scaled = two_means_instrument(&a.mul_exact(&k), &b.mul_exact(&k), &ctx).unwrap();
        assert_eq!(base.theta_param, scaled.theta_param);
        let slack = DecimalScalar::new(7, w);
        assert!((base.m1.mul_exact(&k) - scaled.m1.clone()).abs() <= slack);
        assert!((base.m2.mul_exact(&k) - scaled.m2.clone()).abs() <= slack);
    }
}

#[test]
fn plumb_reading_decreases_along_the_arc() {
    let (a, b) = (Rational::from(1), Rational::from(5));
    let mut previous: Option<Rational> = None;
    for n in 0..200 {
        let state = InstrumentState::at(&a, &b, &Rational::new(n, 200).unwrap()).unwrap();
        assert!(state.circle_residual().is_zero());
        if let Some(p) = &previous {
            assert!(state.af_current < *p);
        }
        previous = Some(state.af_current);
    }
}

#[test]
fn agrees_with_the_circle_construction() {
    let ctx = PrecisionContext::default();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..40 {
        let (a, b) = random_pair(&mut rng);
        let res = two_means_compass(&a, &b, &ctx).unwrap();
        let t = res.theta_param.to_decimal(ctx.work_digits());
        let quad = four_proportionals_planar(&b, &t, &ctx).unwrap();
        let (m1, m2) = res.rounded(&ctx);
        assert_eq!((quad.ae, quad.ad, quad.ac), (m1, m2, b.round_to(ctx.output_digits())));
        assert!((quad.af - a).abs() < DecimalScalar::new(1, ctx.output_digits()));
    }
}

#[test]
fn doubled_cubes() {
    let ctx = PrecisionContext::default();
    let tol = DecimalScalar::new(1, ctx.output_digits());
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..40 {
        let edge = DecimalScalar::new(rng.gen_range(1..100_000u32), 3);
        let doubled = duplicate_cube(&edge, &ctx).unwrap();
        assert!((doubled.pow(3) - edge.pow(3).mul_exact(&DecimalScalar::from_integer(2))).abs() < tol);
    }
}
