use proportionals::proportio::PRINTED_TABLE;
use proportionals::scalar::roots::{cbrt_at, sqrt_at};
use proportionals::{DecimalScalar, PrecisionContext};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn d(s: &str) -> DecimalScalar {
    s.parse().unwrap()
}

/// Schoolbook multiplication on decimal digit strings, independent of bigints.
fn long_multiply(a: &str, b: &str) -> String {
    let split = |s: &str| {
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        (format!("{int}{frac}"), frac.len())
    };
    let (da, fa) = split(a);
    let (db, fb) = split(b);
    let xs: Vec<u32> = da.bytes().rev().map(|c| u32::from(c - b'0')).collect();
    let ys: Vec<u32> = db.bytes().rev().map(|c| u32::from(c - b'0')).collect();
    let mut acc = vec![0u32; xs.len() + ys.len()];
    for (i, x) in xs.iter().enumerate() {
        let mut carry = 0;
        for (j, y) in ys.iter().enumerate() {
            let cell = acc[i + j] + x * y + carry;
            acc[i + j] = cell % 10;
            carry = cell / 10;
        }
        let mut k = i + ys.len();
        while carry > 0 {
            let cell = acc[k] + carry;
            acc[k] = cell % 10;
            carry = cell / 10;
            k += 1;
        }
    }
    let digits: String = acc.iter().rev().map(|v| char::from(b'0' + *v as u8)).collect();
    let frac = fa + fb;
    let (int, frac_part) = digits.split_at(digits.len() - frac);
    let int = int.trim_start_matches('0');
    format!("{}.{frac_part}", if int.is_empty() { "0" } else { int })
}

#[test]
fn products_match_long_multiplication() {
    let pairs = [
        ("0.6353443923", "1.3646556077"),
        ("0.9311424637", "1.3646556077"),
        ("0.9311424637", "0.9311424637"),
        ("1.3646556077", "1.3646556077"),
        ("2.0000000000", "0.9311424637"),
    ];
    for (a, b) in pairs {
        assert_eq!(d(a).mul_exact(&d(b)).to_string(), long_multiply(a, b), "{a} x {b}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let a = format!("{}.{:07}", rng.gen_range(0..10_000u32), rng.gen_range(0..10_000_000u32));
        let b = format!("{}.{:05}", rng.gen_range(0..1000u32), rng.gen_range(0..100_000u32));
        assert_eq!(d(&a).mul_exact(&d(&b)).to_string(), long_multiply(&a, &b));
    }
}

#[test]
fn abd_row_tail() {
    let abd = d("0.6353443923").mul_exact(&d("1.3646556077"));
    assert_eq!(abd.format_grouped(), "86702 62877 72943 70071");
    assert_eq!(abd.scale(), 20);
}

/// The rounded output cannot square back to within 10^-p for large inputs,
/// so the residual bound is checked on the working-precision root, and the
/// rounded output is checked to be the nearest p-digit value.
#[test]
fn thousand_square_roots() {
    let ctx = PrecisionContext::default();
    let (p, w) = (ctx.output_digits(), ctx.work_digits());
    let bound = DecimalScalar::new(1, p);
    let half_ulp = DecimalScalar::new(5, p + 1);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1000 {
        let a = DecimalScalar::new(rng.gen_range(0..10_000_000_000_000u64), 9);
        let root = sqrt_at(&a, w).unwrap();
        assert!((root.square() - a.clone()).abs() < bound, "sqrt({a})");
        let out = a.sqrt(&ctx).unwrap();
        assert_eq!(out.scale(), p);
        assert!((out.widen(w) - root).abs() <= half_ulp.widen(w) + DecimalScalar::new(1, w));
    }
}

#[test]
fn thousand_cube_roots() {
    let ctx = PrecisionContext::default();
    let (p, w) = (ctx.output_digits(), ctx.work_digits());
    let bound = DecimalScalar::new(1, p);
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..1000 {
        let a = DecimalScalar::new(rng.gen_range(-10_000_000_000_000i64..10_000_000_000_000), 9);
        let root = cbrt_at(&a, w);
        assert!((root.pow(3) - a.clone()).abs() < bound, "cbrt({a})");
        assert_eq!(root.is_negative(), a.is_negative());
    }
}

#[test]
fn documented_roots() {
    let ten = PrecisionContext::with_output(10);
    assert_eq!(d("2").sqrt(&ten).unwrap().to_string(), "1.4142135624");
    assert_eq!(d("2").cbrt(&ten).to_string(), "1.2599210499");
    assert_eq!(d("0").sqrt(&ten).unwrap(), DecimalScalar::zero());
    assert_eq!(
        d("0.86702628777294370071").sqrt(&ten).unwrap().to_string(),
        "0.9311424637"
    );
    assert!(d("-1").sqrt(&ten).is_err());
}

#[test]
fn grouped_round_trip_on_table_strings() {
    for (label, printed) in PRINTED_TABLE {
        let frac_digits: usize = printed.split(' ').skip(1).map(str::len).sum::<usize>()
            + if printed.split(' ').next().unwrap().len() == 5 {
                5
            } else {
                0
            };
        let value = DecimalScalar::parse_grouped(printed, frac_digits as u32).unwrap();
        assert_eq!(value.format_grouped(), printed, "{label}");
    }
}
