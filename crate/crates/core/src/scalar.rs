//! Exact rational scalars.
//!
//! Every quantity that feeds a verdict is a [`Scalar`]: an arbitrary precision
//! rational kept in lowest terms with a positive denominator.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::str::FromStr;

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a rational literal: {0:?}")]
pub struct ParseScalarError(pub String);

/// Parses `a`, `-a`, `a/b` or `-a/b` with decimal integers `a`, `b` and `b != 0`.
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseScalarError> {
    let err = || ParseScalarError(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let valid = |s: &str, signed: bool| {
        let digits = if signed { s.strip_prefix('-').unwrap_or(s) } else { s };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num, true) || !valid(den, false) {
        return Err(err());
    }
    let n = BigInt::from_str(num).map_err(|_| err())?;
    let d = BigInt::from_str(den).map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(Scalar::new(n, d))
}

/// Canonical text form: `-3/2`, `4`, `0`.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

/// Least common multiple of the denominators, as an integer.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Scalar>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, x| {
        num::integer::lcm(acc, x.denom().clone())
    })
}

pub fn sign(x: &Scalar) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}
