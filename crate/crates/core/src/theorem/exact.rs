//! Exact rational parameters.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Parses `"2/3"`, `"-7"`, `"0.6"` or `".25"` into an exact rational.
/// Decimals are read as written, so `"0.1"` is exactly `1/10`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::InvalidNumber(text.to_string());
    let t = text.trim();
    if let Some((num, den)) = t.split_once('/') {
        let num: BigInt = parse_integer(num).ok_or_else(bad)?;
        let den: BigInt = parse_integer(den).ok_or_else(bad)?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let mantissa: BigInt = digits.parse().map_err(|_| bad())?;
    let scale = num_traits::pow(BigInt::from(10), frac.len());
    let value = BigRational::new(mantissa, scale);
    Ok(if neg { -value } else { value })
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let s = s.trim();
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Nearest `f64` (saturating for huge magnitudes).
pub fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(if q.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

/// `q` as an exact value in `[0, 1)`.
pub(crate) fn check_unit_interval(q: &BigRational) -> Result<()> {
    if q.is_negative() || *q >= BigRational::one() {
        Err(Error::AlphaOutOfRange(to_f64(q)))
    } else {
        Ok(())
    }
}

pub(crate) fn ceil_to_usize(q: &BigRational) -> usize {
    q.ceil().to_integer().to_usize().unwrap_or(0)
}

pub(crate) fn floor_to_usize(q: &BigRational) -> usize {
    q.floor().to_integer().to_usize().unwrap_or(0)
}
