//! Exact rational durations and their `"p/q"` wire format.
//!
//! Every duration and length in this crate is a [`BigRational`]. There is no
//! floating point anywhere: the algebraic laws checked by the test suites are
//! strict equalities, so values must compare exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serializer};
use std::str::FromStr;

/// Exact duration type used for all path lengths.
pub type Rat = BigRational;

/// Parse a rational from the bundle syntax: `"p/q"` or a bare integer `"p"`.
///
/// The denominator must be positive. The result is reduced (num-rational
/// normalizes on construction).
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num).map_err(|e| format!("bad numerator {num:?}: {e}"))?;
    let d = BigInt::from_str(den).map_err(|e| format!("bad denominator {den:?}: {e}"))?;
    if d <= BigInt::zero() {
        return Err(format!("denominator must be positive in {s:?}"));
    }
    Ok(BigRational::new(n, d))
}

/// Render a rational in the bundle syntax: reduced, `q > 0`, `"p"` when `q = 1`.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn serialize<S: Serializer>(r: &Rat, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(&rat_to_string(r))
}

pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rat, D::Error> {
    let s = String::deserialize(de)?;
    parse_rat(&s).map_err(D::Error::custom)
}

/// Convenience constructor for tests and fixtures.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_positive(r: &Rat) -> bool {
    r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        assert_eq!(parse_rat("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("3").unwrap(), rat(3, 1));
        assert_eq!(parse_rat(" 5/6 ").unwrap(), rat(5, 6));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("1/-2").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn renders_reduced() {
        assert_eq!(rat_to_string(&rat(2, 4)), "1/2");
        assert_eq!(rat_to_string(&rat(3, 1)), "3");
        assert_eq!(rat_to_string(&rat(0, 5)), "0");
    }
}
