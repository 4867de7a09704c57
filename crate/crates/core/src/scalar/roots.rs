//! Square and cube roots, correctly rounded at any scale.
//!
//! Both reduce to an integer root `floor(N^(1/k))` of a scaled mantissa, found by
//! integer Newton iteration started above the root. If the iteration fails to
//! settle or its answer does not bracket `N`, bisection takes over.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{pow10, DecimalScalar, PrecisionContext};
use crate::error::{Error, Result};

const NEWTON_STEP_LIMIT: usize = 10_000;

/// `floor(n^(1/k))` for `k >= 1`.
pub fn integer_root(n: &BigUint, k: u32) -> BigUint {
    assert!(k >= 1, "root index must be positive");
    if k == 1 || n.is_zero() || n.is_one() {
        return n.clone();
    }
    let bits = n.bits();
    let k64 = u64::from(k);
    // 2^ceil(bits/k) is strictly above the root.
    let hi = BigUint::one() << bits.div_ceil(k64);
    match newton_root(n, k, hi.clone()) {
        Some(root) if brackets(&root, n, k) => root,
        _ => bisect_root(n, k, BigUint::zero(), hi),
    }
}

fn newton_root(n: &BigUint, k: u32, start: BigUint) -> Option<BigUint> {
    let km1 = BigUint::from(k - 1);
    let kb = BigUint::from(k);
    let mut x = start;
    for _ in 0..NEWTON_STEP_LIMIT {
        if x.is_zero() {
            return None;
        }
        let y = (&km1 * &x + n / x.pow(k - 1)) / &kb;
        if y >= x {
            return Some(x);
        }
        x = y;
    }
    None
}

fn brackets(root: &BigUint, n: &BigUint, k: u32) -> bool {
    root.pow(k) <= *n && (root + 1u32).pow(k) > *n
}

/// Invariant: `lo^k <= n < hi^k`.
fn bisect_root(n: &BigUint, k: u32, mut lo: BigUint, mut hi: BigUint) -> BigUint {
    while &hi - &lo > BigUint::one() {
        let mid: BigUint = (&lo + &hi) >> 1;
        if mid.pow(k) <= *n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// `floor(|a|^(1/k) * 10^scale)` and whether that floor is the exact root.
fn scaled_root(a: &DecimalScalar, k: u32, scale: u32) -> (BigUint, bool) {
    let magnitude = a.mantissa().magnitude().clone();
    let target = k * scale;
    let (n, divided_exactly) = if target >= a.scale() {
        (magnitude * pow10(target - a.scale()).magnitude(), true)
    } else {
        let den = pow10(a.scale() - target).magnitude().clone();
        let (q, r) = magnitude.div_rem(&den);
        (q, r.is_zero())
    };
    let root = integer_root(&n, k);
    let exact = divided_exactly && root.pow(k) == n;
    (root, exact)
}

/// Round a root known to `scale + 1` digits (floored) to `scale` digits, ties to even.
fn round_extended(floored: BigUint, exact: bool) -> BigUint {
    let (q, last) = floored.div_rem(&BigUint::from(10u32));
    let last = last.to_u32_digits().first().copied().unwrap_or(0);
    let up = match last.cmp(&5) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => !exact || q.is_odd(),
    };
    if up {
        q + 1u32
    } else {
        q
    }
}

fn rounded_root(a: &DecimalScalar, k: u32, scale: u32) -> DecimalScalar {
    let (floored, exact) = scaled_root(a, k, scale + 1);
    let magnitude = round_extended(floored, exact);
    let sign = if a.is_negative() { Sign::Minus } else { Sign::Plus };
    DecimalScalar::new(BigInt::from_biguint(sign, magnitude), scale)
}

/// Square root rounded half-even to `scale` fractional digits.
pub fn sqrt_at(a: &DecimalScalar, scale: u32) -> Result<DecimalScalar> {
    if a.is_negative() {
        return Err(Error::Domain(format!("square root of negative value {a}")));
    }
    Ok(rounded_root(a, 2, scale))
}

/// Cube root rounded half-even to `scale` fractional digits; the sign passes through.
pub fn cbrt_at(a: &DecimalScalar, scale: u32) -> DecimalScalar {
    rounded_root(a, 3, scale)
}

/// Square root at the context's output digits.
pub fn sqrt(a: &DecimalScalar, ctx: &PrecisionContext) -> Result<DecimalScalar> {
    sqrt_at(a, ctx.output_digits())
}

/// Square root at the context's work digits (before the final rounding).
pub fn sqrt_work(a: &DecimalScalar, ctx: &PrecisionContext) -> Result<DecimalScalar> {
    sqrt_at(a, ctx.work_digits())
}

/// Cube root at the context's output digits.
pub fn cbrt(a: &DecimalScalar, ctx: &PrecisionContext) -> DecimalScalar {
    cbrt_at(a, ctx.output_digits())
}

/// Cube root at the context's work digits.
pub fn cbrt_work(a: &DecimalScalar, ctx: &PrecisionContext) -> DecimalScalar {
    cbrt_at(a, ctx.work_digits())
}
