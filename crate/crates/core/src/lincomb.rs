//! Finitely supported exact-rational linear combinations.
//!
//! `Element`, `Tensor2` and `Tensor3` are all the same structure over
//! different atom types. Zero coefficients are never stored, and the
//! `BTreeMap` keeps terms in canonical order so serialization is
//! deterministic.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use crate::halfint::HalfInt;
use crate::key::{BasisKey, Parity};
use crate::scalar::Scalar;

/// An atom that carries a parity and a degree: a basis key or a tensor tuple.
pub trait Atom: Ord + Clone {
    fn parity(&self) -> Parity;
    fn degree(&self) -> HalfInt;
    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

impl Atom for BasisKey {
    fn parity(&self) -> Parity {
        BasisKey::parity(self)
    }
    fn degree(&self) -> HalfInt {
        BasisKey::degree(self)
    }
    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Atom for (BasisKey, BasisKey) {
    fn parity(&self) -> Parity {
        self.0.parity() + self.1.parity()
    }
    fn degree(&self) -> HalfInt {
        self.0.degree() + self.1.degree()
    }
    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (x) {}", self.0, self.1)
    }
}

impl Atom for (BasisKey, BasisKey, BasisKey) {
    fn parity(&self) -> Parity {
        self.0.parity() + self.1.parity() + self.2.parity()
    }
    fn degree(&self) -> HalfInt {
        self.0.degree() + self.1.degree() + self.2.degree()
    }
    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (x) {} (x) {}", self.0, self.1, self.2)
    }
}

/// A finite linear combination of atoms with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LinComb<K: Atom> {
    terms: BTreeMap<K, Scalar>,
}

pub type Element = LinComb<BasisKey>;
pub type Tensor2 = LinComb<(BasisKey, BasisKey)>;
pub type Tensor3 = LinComb<(BasisKey, BasisKey, BasisKey)>;

impl<K: Atom> LinComb<K> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn basis(atom: K) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(atom, crate::scalar::one());
        LinComb { terms }
    }

    pub fn term(atom: K, coeff: Scalar) -> Self {
        let mut out = LinComb::zero();
        out.add_term(atom, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, atom: &K) -> Scalar {
        self.terms.get(atom).cloned().unwrap_or_else(crate::scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn atoms(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, atom: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(atom) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&mut self, other: &Self) {
        for (atom, coeff) in other.iter() {
            self.add_term(atom.clone(), coeff.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &Scalar) {
        if factor.is_zero() {
            return;
        }
        for (atom, coeff) in other.iter() {
            self.add_term(atom.clone(), coeff * factor);
        }
    }

    pub fn sub(&mut self, other: &Self) {
        for (atom, coeff) in other.iter() {
            self.add_term(atom.clone(), -coeff.clone());
        }
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, factor);
        out
    }

    pub fn negated(&self) -> Self {
        self.scaled(&-crate::scalar::one())
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add(other);
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.sub(other);
        out
    }

    /// The shared parity of all atoms, if the combination is homogeneous.
    /// Zero is homogeneous of either parity; `None` marks a mixed value.
    pub fn homogeneous_parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys();
        let first = it.next()?.parity();
        for atom in it {
            if atom.parity() != first {
                return None;
            }
        }
        Some(first)
    }

    pub fn homogeneous_degree(&self) -> Option<HalfInt> {
        let mut it = self.terms.keys();
        let first = it.next()?.degree();
        for atom in it {
            if atom.degree() != first {
                return None;
            }
        }
        Some(first)
    }

    /// Keeps only atoms accepted by the filter.
    pub fn filtered(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        let mut out = Self::zero();
        for (atom, coeff) in self.iter() {
            if keep(atom) {
                out.add_term(atom.clone(), coeff.clone());
            }
        }
        out
    }
}

impl<K: Atom> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (atom, coeff)) in self.terms.iter().enumerate() {
            let mag = if crate::scalar::is_negative(coeff) { -coeff.clone() } else { coeff.clone() };
            if n == 0 {
                if crate::scalar::is_negative(coeff) {
                    write!(f, "-")?;
                }
            } else if crate::scalar::is_negative(coeff) {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !num::One::is_one(&mag) {
                write!(f, "{mag}*")?;
            }
            atom.fmt_atom(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar;

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut e = Element::basis(BasisKey::l(1));
        e.add_term(BasisKey::l(1), scalar::int(-1));
        assert!(e.is_zero());
        assert_eq!(e.to_string(), "0");
    }

    #[test]
    fn canonical_display() {
        let mut t = Tensor2::zero();
        t.add_term((BasisKey::gplus(1), BasisKey::gminus(-1)), scalar::int(-1));
        t.add_term((BasisKey::l(-1), BasisKey::i(2)), scalar::ratio(3, 2));
        assert_eq!(t.to_string(), "3/2*L(-1) (x) I(2) - G+(1/2) (x) G-(-1/2)");
    }

    #[test]
    fn homogeneity_probes() {
        let mut e = Element::basis(BasisKey::l(2));
        assert_eq!(e.homogeneous_parity(), Some(Parity::Even));
        assert_eq!(e.homogeneous_degree(), Some(HalfInt::from_int(2)));
        e.add_term(BasisKey::gplus(1), scalar::one());
        assert_eq!(e.homogeneous_parity(), None);
        assert_eq!(e.homogeneous_degree(), None);
    }
}
