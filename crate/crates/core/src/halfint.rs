//! Half-integer arithmetic on the index lattice ½ℤ.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::scalar::Scalar;

/// An element of ½ℤ, stored as its doubled value so that index arithmetic
/// never leaves the integers.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };

    pub fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    pub fn from_int(n: i64) -> Self {
        HalfInt { doubled: 2 * n }
    }

    pub fn doubled(self) -> i64 {
        self.doubled
    }

    pub fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    pub fn is_zero(self) -> bool {
        self.doubled == 0
    }

    pub fn abs(self) -> Self {
        HalfInt { doubled: self.doubled.abs() }
    }

    /// The value as an exact rational.
    pub fn to_scalar(self) -> Scalar {
        crate::scalar::ratio(self.doubled, 2)
    }

    /// Exact conversion from a rational, if it lies on the ½ℤ lattice.
    pub fn try_from_scalar(s: &Scalar) -> Option<Self> {
        use num::ToPrimitive;
        let doubled = s * crate::scalar::int(2);
        if !crate::scalar::is_integer(&doubled) {
            return None;
        }
        doubled.numer().to_i64().map(HalfInt::from_doubled)
    }

    /// Parses `3`, `-4`, `1/2`, `-7/2`.
    pub fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        if let Some((num, den)) = text.split_once('/') {
            if den.trim() != "2" {
                return None;
            }
            let n: i64 = num.trim().parse().ok()?;
            if n % 2 == 0 {
                return None;
            }
            Some(HalfInt::from_doubled(n))
        } else {
            let n: i64 = text.parse().ok()?;
            Some(HalfInt::from_int(n))
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { doubled: self.doubled + rhs.doubled }
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.doubled += rhs.doubled;
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { doubled: self.doubled - rhs.doubled }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { doubled: -self.doubled }
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: i64) -> HalfInt {
        HalfInt { doubled: self.doubled * rhs }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.doubled % 2 == 0 {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse_round_trip() {
        for d in -9..=9 {
            let h = HalfInt::from_doubled(d);
            assert_eq!(HalfInt::parse(&h.to_string()), Some(h));
        }
        assert_eq!(HalfInt::parse("3/2"), Some(HalfInt::from_doubled(3)));
        assert_eq!(HalfInt::parse("-1/2"), Some(HalfInt::from_doubled(-1)));
        assert_eq!(HalfInt::parse("2/2"), None);
        assert_eq!(HalfInt::parse("1/3"), None);
    }

    #[test]
    fn ordering_matches_rationals() {
        let a = HalfInt::from_doubled(-3); // -3/2
        let b = HalfInt::from_int(-1);
        let c = HalfInt::from_doubled(1); // 1/2
        assert!(a < b && b < c);
        assert_eq!(a + c, HalfInt::from_int(-1));
        assert_eq!(-(a), HalfInt::from_doubled(3));
    }
}
