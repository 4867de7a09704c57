use proportionals::euclid::{check_19_7, check_20_7};
use proportionals::proportio::{
    chord_root, four_proportionals_planar, four_proportionals_sphere, is_continued_proportion, planar_construction,
    solve_continued_chords, sphere_construction,
};
use proportionals::{DecimalScalar, PrecisionContext, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_arc_parameter(rng: &mut ChaCha8Rng) -> Rational {
    let den = rng.gen_range(2..200i64);
    Rational::new(rng.gen_range(1..den), den).unwrap()
}

#[test]
fn rational_positions_give_exact_proportionals() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..200 {
        let ac = Rational::new(rng.gen_range(1..500), rng.gen_range(1..20)).unwrap();
        let t = random_arc_parameter(&mut rng);
        let circle = planar_construction(&ac, &t).unwrap();
        let quad = circle.quad().unwrap();
        assert!(is_continued_proportion(&quad));
        assert!(check_19_7(&quad[0], &quad[1], &quad[2], &quad[3]).unwrap());
        assert!(check_20_7(&quad[1], &quad[2], &quad[3]).unwrap());
        assert!(circle.congruence_residual().is_zero());
        assert!(circle.g_on_circle_ad());
        // the ratio is cos(DAC) and AD = AC cos(DAC)
        assert_eq!(&quad[2] / &quad[3], circle.ratio);

        let sphere = sphere_construction(&ac, &t).unwrap();
        assert!(sphere.perpendicularity_residual.is_zero());
        assert!(sphere.fg_normal_to_base);
        assert_eq!(sphere.quad().unwrap(), quad);
    }
}

#[test]
fn decimal_entry_points_agree() {
    let ctx = PrecisionContext::with_output(12);
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..50 {
        let ac = DecimalScalar::new(rng.gen_range(1..100_000u32), 3);
        let t = DecimalScalar::new(rng.gen_range(1..10_000u32), 4);
        let flat = four_proportionals_planar(&ac, &t, &ctx).unwrap();
        let round = four_proportionals_sphere(&ac, &t, &ctx).unwrap();
        assert_eq!(flat, round);
        let exact = planar_construction(&ac.to_rational(), &t.to_rational())
            .unwrap()
            .quad()
            .unwrap();
        assert_eq!(flat.af, exact[0].to_decimal(12));
    }
}

#[test]
fn chord_root_scales_with_the_diameter() {
    let ctx = PrecisionContext::with_output(15);
    let base = solve_continued_chords(&DecimalScalar::one(), &ctx).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..20 {
        let k = rng.gen_range(2..50i64);
        let scaled = solve_continued_chords(&DecimalScalar::from_integer(k), &ctx).unwrap();
        let expected = base.root.mul_exact(&DecimalScalar::from_integer(k));
        let slack = DecimalScalar::new(k, ctx.work_digits());
        assert!((scaled.root.clone() - expected).abs() <= slack, "k = {k}");
        assert!(scaled.cubic_residual().abs() < DecimalScalar::new(1, ctx.output_digits()));
    }
}

#[test]
fn root_is_bracketed_by_the_cubic() {
    let d = DecimalScalar::from_integer(2);
    for digits in [5, 12, 30, 45] {
        let x = chord_root(&d, digits).unwrap();
        let ulp = DecimalScalar::new(1, digits);
        let f = |x: &DecimalScalar| (&d - x).pow(3) - d.square().mul_exact(x);
        // sign change within one unit on either side
        assert!(!f(&(&x - &ulp)).is_negative());
        assert!(!f(&(&x + &ulp)).is_positive());
    }
}

#[test]
fn rounding_order_of_the_historical_table() {
    let ctx = PrecisionContext::with_output(10);
    let c = solve_continued_chords(&DecimalScalar::from_integer(2), &ctx).unwrap();
    // BD is the exact complement of the rounded AB
    assert_eq!(&c.ab + &c.bd, c.ad);
    // BC from the rounded lines differs in the last digit from the rounded true value
    let true_bd = &c.diameter - &c.root;
    let true_bc = c.root.mul_exact(&true_bd).sqrt(&ctx).unwrap();
    assert_eq!(true_bc.to_string(), "0.9311424638");
    assert_eq!(c.bc.to_string(), "0.9311424637");
}
