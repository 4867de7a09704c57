use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{div_half_even, pow10, PrecisionContext, Rational};
use crate::error::{Error, Result};

/// Width of a digit group in the grouped table layout.
const GROUP: usize = 5;

/// Signed fixed-point decimal: `mantissa * 10^-scale`.
///
/// Sums, differences and products are exact (the product's scale is the sum of
/// the operand scales). Equality and ordering are numeric, so `1.50 == 1.5`;
/// use [`DecimalScalar::scale`] or the `Display` string for digit-exact checks.
#[derive(Clone, Debug)]
pub struct DecimalScalar {
    mantissa: BigInt,
    scale: u32,
}

impl DecimalScalar {
    pub fn new(mantissa: impl Into<BigInt>, scale: u32) -> Self {
        Self {
            mantissa: mantissa.into(),
            scale,
        }
    }

    pub fn from_integer(value: i64) -> Self {
        Self::new(value, 0)
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    /// Number of fractional digits carried.
    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    pub fn abs(&self) -> Self {
        Self::new(self.mantissa.abs(), self.scale)
    }

    /// Exact product; the result scale is `self.scale + other.scale`.
    pub fn mul_exact(&self, other: &Self) -> Self {
        Self::new(&self.mantissa * &other.mantissa, self.scale + other.scale)
    }

    pub fn square(&self) -> Self {
        self.mul_exact(self)
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self::new(num_traits::pow(self.mantissa.clone(), exp as usize), self.scale * exp)
    }

    /// Same value at a larger scale (trailing zeros appended). Panics if `scale`
    /// is smaller than the current one; use [`round_to`](Self::round_to) for that.
    pub fn widen(&self, scale: u32) -> Self {
        assert!(scale >= self.scale, "widen cannot drop digits");
        Self::new(&self.mantissa * pow10(scale - self.scale), scale)
    }

    /// Round half-even to `digits` fractional digits. Widening is exact.
    pub fn round_to(&self, digits: u32) -> Self {
        if digits >= self.scale {
            return self.widen(digits);
        }
        let den = pow10(self.scale - digits);
        Self::new(div_half_even(&self.mantissa, &den), digits)
    }

    /// Round toward zero to `digits` fractional digits.
    pub fn truncate_to(&self, digits: u32) -> Self {
        if digits >= self.scale {
            return self.widen(digits);
        }
        let den = pow10(self.scale - digits);
        // BigInt division truncates toward zero.
        Self::new(&self.mantissa / den, digits)
    }

    /// `self / other` rounded half-even to `scale` fractional digits.
    pub fn div_rounded(&self, other: &Self, scale: u32) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        // value = (m1 / m2) * 10^(s2 - s1); want q = value * 10^scale.
        let shift = scale as i64 + other.scale as i64 - self.scale as i64;
        let (num, den) = if shift >= 0 {
            (&self.mantissa * pow10(shift as u32), other.mantissa.clone())
        } else {
            (self.mantissa.clone(), &other.mantissa * pow10((-shift) as u32))
        };
        Ok(Self::new(div_half_even(&num, &den), scale))
    }

    pub fn to_rational(&self) -> Rational {
        Rational::from_bigints(self.mantissa.clone(), pow10(self.scale)).expect("power of ten is non-zero")
    }

    /// Nearest decimal with `scale` fractional digits, ties to even.
    pub fn from_rational(value: &Rational, scale: u32) -> Self {
        let num = value.numer() * pow10(scale);
        Self::new(div_half_even(&num, value.denom()), scale)
    }

    /// Square root rounded half-even to the context's output digits.
    pub fn sqrt(&self, ctx: &PrecisionContext) -> Result<Self> {
        super::roots::sqrt(self, ctx)
    }

    /// Cube root rounded half-even to the context's output digits.
    pub fn cbrt(&self, ctx: &PrecisionContext) -> Self {
        super::roots::cbrt(self, ctx)
    }

    fn digit_strings(&self) -> (String, String) {
        let digits = self.mantissa.abs().to_str_radix(10);
        let scale = self.scale as usize;
        if digits.len() > scale {
            let (int, frac) = digits.split_at(digits.len() - scale);
            (int.to_string(), frac.to_string())
        } else {
            ("0".to_string(), format!("{digits:0>scale$}"))
        }
    }

    /// Table typography: the integer part, then the fractional digits in groups
    /// of five separated by single spaces. A zero integer part is elided when
    /// fractional digits follow, so `0.6353443923` prints as `63534 43923`.
    pub fn format_grouped(&self) -> String {
        let (int, frac) = self.digit_strings();
        let mut parts: Vec<&str> = Vec::new();
        if int != "0" || frac.is_empty() {
            parts.push(&int);
        }
        let mut rest = frac.as_str();
        while !rest.is_empty() {
            let take = rest.len().min(GROUP);
            parts.push(&rest[..take]);
            rest = &rest[take..];
        }
        let body = parts.join(" ");
        if self.is_negative() {
            format!("-{body}")
        } else {
            body
        }
    }

    /// Inverse of [`format_grouped`](Self::format_grouped) for a known number of
    /// fractional digits.
    pub fn parse_grouped(text: &str, scale: u32) -> Result<Self> {
        let trimmed = text.trim();
        let (negative, body) = match trimmed.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, trimmed),
        };
        let tokens: Vec<&str> = body.split(' ').collect();
        if tokens
            .iter()
            .any(|t| t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()))
        {
            return Err(Error::parse(
                text,
                "groups must be non-empty runs of digits separated by single spaces",
            ));
        }
        let scale_len = scale as usize;
        let groups = scale_len.div_ceil(GROUP);
        if tokens.len() < groups || tokens.len() > groups + 1 {
            return Err(Error::parse(text, format!("expected {groups} fractional groups")));
        }
        let split = tokens.len() - groups;
        let frac_tokens = &tokens[split..];
        for (i, tok) in frac_tokens.iter().enumerate() {
            let expected = if i + 1 == groups && !scale_len.is_multiple_of(GROUP) {
                scale_len % GROUP
            } else {
                GROUP
            };
            if tok.len() != expected {
                return Err(Error::parse(
                    text,
                    format!("fractional group {tok:?} should have {expected} digits"),
                ));
            }
        }
        let int = if split == 1 { tokens[0] } else { "0" };
        if split == 1 && int.starts_with('0') && (int.len() > 1 || groups > 0) {
            return Err(Error::parse(text, "integer part has a leading zero"));
        }
        let digits: String = std::iter::once(int).chain(frac_tokens.iter().copied()).collect();
        let mut mantissa: BigInt = digits
            .parse()
            .map_err(|_| Error::parse(text, "digits do not form an integer"))?;
        if negative {
            mantissa = -mantissa;
        }
        Ok(Self::new(mantissa, scale))
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt) {
        match self.scale.cmp(&other.scale) {
            Ordering::Equal => (self.mantissa.clone(), other.mantissa.clone()),
            Ordering::Less => (&self.mantissa * pow10(other.scale - self.scale), other.mantissa.clone()),
            Ordering::Greater => (self.mantissa.clone(), &other.mantissa * pow10(self.scale - other.scale)),
        }
    }
}

impl PartialEq for DecimalScalar {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for DecimalScalar {}

impl PartialOrd for DecimalScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DecimalScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = self.aligned(other);
        a.cmp(&b)
    }
}

impl From<i64> for DecimalScalar {
    fn from(value: i64) -> Self {
        Self::from_integer(value)
    }
}

macro_rules! additive_op {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&DecimalScalar> for &DecimalScalar {
            type Output = DecimalScalar;
            fn $method(self, rhs: &DecimalScalar) -> DecimalScalar {
                let (a, b) = self.aligned(rhs);
                DecimalScalar::new(a $op b, self.scale.max(rhs.scale))
            }
        }
        impl $trait for DecimalScalar {
            type Output = DecimalScalar;
            fn $method(self, rhs: DecimalScalar) -> DecimalScalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&DecimalScalar> for DecimalScalar {
            type Output = DecimalScalar;
            fn $method(self, rhs: &DecimalScalar) -> DecimalScalar {
                (&self).$method(rhs)
            }
        }
    };
}

additive_op!(Add, add, +);
additive_op!(Sub, sub, -);

impl Mul<&DecimalScalar> for &DecimalScalar {
    type Output = DecimalScalar;
    fn mul(self, rhs: &DecimalScalar) -> DecimalScalar {
        self.mul_exact(rhs)
    }
}

impl Mul for DecimalScalar {
    type Output = DecimalScalar;
    fn mul(self, rhs: DecimalScalar) -> DecimalScalar {
        self.mul_exact(&rhs)
    }
}

impl Neg for DecimalScalar {
    type Output = DecimalScalar;
    fn neg(self) -> DecimalScalar {
        DecimalScalar::new(-self.mantissa, self.scale)
    }
}

impl Neg for &DecimalScalar {
    type Output = DecimalScalar;
    fn neg(self) -> DecimalScalar {
        DecimalScalar::new(-&self.mantissa, self.scale)
    }
}

impl fmt::Display for DecimalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (int, frac) = self.digit_strings();
        let sign = if self.is_negative() { "-" } else { "" };
        if frac.is_empty() {
            write!(f, "{sign}{int}")
        } else {
            write!(f, "{sign}{int}.{frac}")
        }
    }
}

impl FromStr for DecimalScalar {
    type Err = Error;

    /// Plain decimal notation: optional sign, digits, optional fraction.
    /// The scale is the number of fractional digits written.
    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let (negative, body) = match text.as_bytes().first() {
            Some(b'-') => (true, &text[1..]),
            Some(b'+') => (false, &text[1..]),
            _ => (false, text),
        };
        let (int, frac) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int.is_empty() && frac.is_empty() {
            return Err(Error::parse(s, "no digits"));
        }
        if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(Error::parse(s, "expected [-]digits[.digits]"));
        }
        let digits = format!("{int}{frac}");
        let magnitude = BigInt::parse_bytes(digits.as_bytes(), 10).ok_or_else(|| Error::parse(s, "invalid digits"))?;
        let mantissa = if negative { -magnitude } else { magnitude };
        Ok(Self::new(mantissa, frac.len() as u32))
    }
}

impl Serialize for DecimalScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DecimalScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
