//! Exact rational coefficients.
//!
//! Every coefficient in the workbench is a `Scalar`: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. There is no
//! floating point anywhere in the crate.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(numer: i64, denom: i64) -> Scalar {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn zero() -> Scalar {
    BigRational::zero()
}

pub fn one() -> Scalar {
    BigRational::one()
}

pub fn is_integer(s: &Scalar) -> bool {
    s.denom().is_one()
}

/// Parses a rational literal: `4`, `-3`, `1/12`, `-7/2`.
pub fn parse(text: &str) -> Option<Scalar> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let numer: i64 = n.trim().parse().ok()?;
        let denom: i64 = d.trim().parse().ok()?;
        if denom == 0 {
            return None;
        }
        Some(ratio(numer, denom))
    } else {
        let n: i64 = text.parse().ok()?;
        Some(int(n))
    }
}

/// `-1` raised to an integer exponent.
pub fn sign_pow(odd: bool) -> Scalar {
    if odd {
        -one()
    } else {
        one()
    }
}

pub fn is_negative(s: &Scalar) -> bool {
    s.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let s = ratio(6, -12);
        assert_eq!(s.to_string(), "-1/2");
        let t = ratio(4, 2) + ratio(1, 2) * ratio(2, 1);
        assert_eq!(t.to_string(), "3");
    }

    #[test]
    fn parse_literals() {
        assert_eq!(parse("1/12").unwrap().to_string(), "1/12");
        assert_eq!(parse("-3").unwrap().to_string(), "-3");
        assert_eq!(parse("2/4").unwrap().to_string(), "1/2");
        assert!(parse("1/0").is_none());
        assert!(parse("x").is_none());
    }
}
