//! Basis symbols of the supported ½ℤ-graded superalgebras.

use std::fmt;

use crate::error::AlgebraError;
use crate::halfint::HalfInt;

/// ℤ₂ parity of a homogeneous element.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        matches!(self, Parity::Odd)
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// Generator families. The declaration order fixes the canonical term order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    L,
    I,
    GPlus,
    GMinus,
    C,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::L, Family::I, Family::GPlus, Family::GMinus, Family::C];

    pub fn parity(self) -> Parity {
        match self {
            Family::GPlus | Family::GMinus => Parity::Odd,
            _ => Parity::Even,
        }
    }

    /// Doubled-index residue the family's lattice requires: 0 for ℤ, 1 for ℤ+1/2.
    pub fn lattice_parity(self) -> i64 {
        match self {
            Family::GPlus | Family::GMinus => 1,
            _ => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::L => "L",
            Family::I => "I",
            Family::GPlus => "G+",
            Family::GMinus => "G-",
            Family::C => "C",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        match name {
            "L" => Some(Family::L),
            "I" => Some(Family::I),
            "G+" => Some(Family::GPlus),
            "G-" => Some(Family::GMinus),
            "C" => Some(Family::C),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// One basis symbol: a family tag plus a half-integer index.
///
/// The derived ordering (family first, then index) is the canonical term
/// order used for serialization everywhere in the crate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BasisKey {
    pub family: Family,
    pub index: HalfInt,
}

impl BasisKey {
    pub fn new(family: Family, index: HalfInt) -> Result<Self, AlgebraError> {
        let ok = match family {
            Family::C => index.is_zero(),
            f => index.doubled().rem_euclid(2) == f.lattice_parity(),
        };
        if ok {
            Ok(BasisKey { family, index })
        } else {
            Err(AlgebraError::IndexLattice { family, index })
        }
    }

    pub fn l(m: i64) -> Self {
        BasisKey { family: Family::L, index: HalfInt::from_int(m) }
    }

    pub fn i(m: i64) -> Self {
        BasisKey { family: Family::I, index: HalfInt::from_int(m) }
    }

    /// `G⁺` with doubled index `d` (must be odd): `gplus(1)` is G⁺(1/2).
    pub fn gplus(doubled: i64) -> Self {
        debug_assert!(doubled % 2 != 0);
        BasisKey { family: Family::GPlus, index: HalfInt::from_doubled(doubled) }
    }

    pub fn gminus(doubled: i64) -> Self {
        debug_assert!(doubled % 2 != 0);
        BasisKey { family: Family::GMinus, index: HalfInt::from_doubled(doubled) }
    }

    pub fn central() -> Self {
        BasisKey { family: Family::C, index: HalfInt::ZERO }
    }

    pub fn parity(&self) -> Parity {
        self.family.parity()
    }

    /// The ½ℤ-grading degree; the central element sits in degree 0, so that
    /// `[L(0), x] = -degree(x) * x` holds on every basis symbol.
    pub fn degree(&self) -> HalfInt {
        match self.family {
            Family::C => HalfInt::ZERO,
            _ => self.index,
        }
    }
}

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::C => write!(f, "C"),
            fam => write!(f, "{}({})", fam, self.index),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parities() {
        assert_eq!(BasisKey::l(3).parity(), Parity::Even);
        assert_eq!(BasisKey::gplus(1).parity(), Parity::Odd);
        assert_eq!(BasisKey::central().parity(), Parity::Even);
    }

    #[test]
    fn degrees() {
        assert_eq!(BasisKey::i(-2).degree(), HalfInt::from_int(-2));
        assert_eq!(BasisKey::gminus(3).degree(), HalfInt::from_doubled(3));
        assert_eq!(BasisKey::central().degree(), HalfInt::ZERO);
    }

    #[test]
    fn lattice_validation() {
        assert!(BasisKey::new(Family::L, HalfInt::from_doubled(1)).is_err());
        assert!(BasisKey::new(Family::GPlus, HalfInt::from_int(1)).is_err());
        assert!(BasisKey::new(Family::C, HalfInt::from_int(1)).is_err());
        assert!(BasisKey::new(Family::GMinus, HalfInt::from_doubled(-3)).is_ok());
    }

    #[test]
    fn canonical_order() {
        let mut keys = vec![
            BasisKey::central(),
            BasisKey::gplus(1),
            BasisKey::l(5),
            BasisKey::l(-5),
            BasisKey::i(0),
        ];
        keys.sort();
        let shown: Vec<String> = keys.iter().map(|k| k.to_string()).collect();
        assert_eq!(shown, vec!["L(-5)", "L(5)", "I(0)", "G+(1/2)", "C"]);
    }
}
