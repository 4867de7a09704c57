//! Exact numeric carriers.
//!
//! [`DecimalScalar`] is a signed base-10 fixed-point number of unbounded size.
//! Addition, subtraction and multiplication are exact; division and roots are
//! rounded half-even at an explicit scale. [`Rational`] is an exact fraction used
//! wherever an identity has to hold with residual zero.

mod context;
mod decimal;
mod rational;
pub mod roots;

pub use context::PrecisionContext;
pub use decimal::DecimalScalar;
pub use rational::Rational;
pub use roots::{cbrt, sqrt};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// `num / den` rounded to the nearest integer, ties to even.
pub(crate) fn div_half_even(num: &BigInt, den: &BigInt) -> BigInt {
    assert!(!den.is_zero(), "division by zero");
    let (num, den) = if den.is_negative() {
        (-num, -den)
    } else {
        (num.clone(), den.clone())
    };
    let (q, r) = num.div_mod_floor(&den);
    // 0 <= r < den
    let twice: BigInt = &r << 1;
    match twice.cmp(&den) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal => {
            if q.is_even() {
                q
            } else {
                q + 1
            }
        }
    }
}

pub(crate) fn pow10(exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), exp as usize)
}
