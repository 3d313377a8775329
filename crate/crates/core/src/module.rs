//! Coefficient modules for derivations: the adjoint module, the tensor
//! square, and even-subalgebra sub-blocks of the tensor square.

use std::fmt;

use crate::algebra::AlgebraSpec;
use crate::error::AlgebraError;
use crate::halfint::HalfInt;
use crate::key::{BasisKey, Family, Parity};
use crate::lincomb::{Element, Tensor2};
use crate::scalar::{self, Scalar};
use crate::tensor;

/// The three parts of the module decomposition used for sub-block
/// coefficients: the even subalgebra and the two odd halves.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum BlockPart {
    Even,
    GPlus,
    GMinus,
}

impl BlockPart {
    pub fn of(key: &BasisKey) -> BlockPart {
        match key.family {
            Family::GPlus => BlockPart::GPlus,
            Family::GMinus => BlockPart::GMinus,
            _ => BlockPart::Even,
        }
    }

    pub fn parse(text: &str) -> Option<BlockPart> {
        match text {
            "even" => Some(BlockPart::Even),
            "g+" => Some(BlockPart::GPlus),
            "g-" => Some(BlockPart::GMinus),
            _ => None,
        }
    }
}

impl fmt::Display for BlockPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockPart::Even => write!(f, "even"),
            BlockPart::GPlus => write!(f, "g+"),
            BlockPart::GMinus => write!(f, "g-"),
        }
    }
}

/// Which module the derivation values live in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CoeffDescriptor {
    Adjoint,
    TensorSquare,
    /// Tensor pairs restricted to the listed part combinations; the solve
    /// domain is then the even subalgebra, whose action preserves parts.
    SubBlock(Vec<(BlockPart, BlockPart)>),
}

impl CoeffDescriptor {
    pub fn is_adjoint(&self) -> bool {
        matches!(self, CoeffDescriptor::Adjoint)
    }

    /// Basis keys the solve quantifies over.
    pub fn domain_keys(&self, spec: &AlgebraSpec, bound: HalfInt) -> Vec<BasisKey> {
        match self {
            CoeffDescriptor::SubBlock(_) => spec.even_keys_in_window(bound),
            _ => spec.keys_in_window(bound),
        }
    }

    fn pair_allowed(&self, a: &BasisKey, b: &BasisKey) -> bool {
        match self {
            CoeffDescriptor::Adjoint => false,
            CoeffDescriptor::TensorSquare => true,
            CoeffDescriptor::SubBlock(parts) => {
                parts.contains(&(BlockPart::of(a), BlockPart::of(b)))
            }
        }
    }

    /// The module basis atoms of a given degree and parity whose components
    /// all satisfy |degree| <= `bound`, in canonical order.
    pub fn atoms_at(
        &self,
        spec: &AlgebraSpec,
        degree: HalfInt,
        parity: Parity,
        bound: HalfInt,
    ) -> Vec<ModuleAtom> {
        let mut out = Vec::new();
        match self {
            CoeffDescriptor::Adjoint => {
                if degree.abs() <= bound {
                    for k in spec.keys_of_degree(degree) {
                        if k.parity() == parity {
                            out.push(ModuleAtom::Ad(k));
                        }
                    }
                }
            }
            _ => {
                for a in spec.keys_in_window(bound) {
                    let b_deg = degree - a.degree();
                    if b_deg.abs() > bound {
                        continue;
                    }
                    for b in spec.keys_of_degree(b_deg) {
                        if a.parity() + b.parity() != parity {
                            continue;
                        }
                        if self.pair_allowed(&a, &b) {
                            out.push(ModuleAtom::Pair(a, b));
                        }
                    }
                }
                out.sort();
            }
        }
        out
    }

    pub fn parse(text: &str) -> Option<CoeffDescriptor> {
        match text {
            "adjoint" => Some(CoeffDescriptor::Adjoint),
            "tensor2" => Some(CoeffDescriptor::TensorSquare),
            _ => {
                let rest = text.strip_prefix("block:")?;
                let (x, y) = rest.split_once('.')?;
                Some(CoeffDescriptor::SubBlock(vec![(BlockPart::parse(x)?, BlockPart::parse(y)?)]))
            }
        }
    }
}

impl fmt::Display for CoeffDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffDescriptor::Adjoint => write!(f, "adjoint"),
            CoeffDescriptor::TensorSquare => write!(f, "tensor2"),
            CoeffDescriptor::SubBlock(parts) => {
                write!(f, "block:")?;
                for (n, (a, b)) in parts.iter().enumerate() {
                    if n > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}.{b}")?;
                }
                Ok(())
            }
        }
    }
}

/// One basis atom of a coefficient module.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum ModuleAtom {
    Ad(BasisKey),
    Pair(BasisKey, BasisKey),
}

impl ModuleAtom {
    pub fn parity(&self) -> Parity {
        match self {
            ModuleAtom::Ad(k) => k.parity(),
            ModuleAtom::Pair(a, b) => a.parity() + b.parity(),
        }
    }

    pub fn degree(&self) -> HalfInt {
        match self {
            ModuleAtom::Ad(k) => k.degree(),
            ModuleAtom::Pair(a, b) => a.degree() + b.degree(),
        }
    }

    /// Largest |degree| among the components.
    pub fn component_bound(&self) -> HalfInt {
        match self {
            ModuleAtom::Ad(k) => k.degree().abs(),
            ModuleAtom::Pair(a, b) => a.degree().abs().max(b.degree().abs()),
        }
    }

    /// Adjoint diagonal action of a basis symbol, as atom contributions.
    pub fn act(&self, spec: &AlgebraSpec, x: &BasisKey) -> Result<Vec<(ModuleAtom, Scalar)>, AlgebraError> {
        let mut out = Vec::new();
        match self {
            ModuleAtom::Ad(k) => {
                for (z, c) in spec.bracket_keys(x, k)?.iter() {
                    out.push((ModuleAtom::Ad(*z), c.clone()));
                }
            }
            ModuleAtom::Pair(a, b) => {
                for (z, c) in spec.bracket_keys(x, a)?.iter() {
                    out.push((ModuleAtom::Pair(*z, *b), c.clone()));
                }
                let sign = scalar::sign_pow(x.parity().is_odd() && a.parity().is_odd());
                for (z, c) in spec.bracket_keys(x, b)?.iter() {
                    out.push((ModuleAtom::Pair(*a, *z), c * &sign));
                }
            }
        }
        Ok(out)
    }
}

/// An element of a coefficient module: an algebra element (adjoint
/// coefficients) or a rank-2 tensor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ModuleElem {
    Ad(Element),
    T2(Tensor2),
}

impl ModuleElem {
    pub fn zero_like(descriptor: &CoeffDescriptor) -> ModuleElem {
        if descriptor.is_adjoint() {
            ModuleElem::Ad(Element::zero())
        } else {
            ModuleElem::T2(Tensor2::zero())
        }
    }

    pub fn basis(atom: &ModuleAtom) -> ModuleElem {
        match atom {
            ModuleAtom::Ad(k) => ModuleElem::Ad(Element::basis(*k)),
            ModuleAtom::Pair(a, b) => ModuleElem::T2(Tensor2::basis((*a, *b))),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ModuleElem::Ad(e) => e.is_zero(),
            ModuleElem::T2(t) => t.is_zero(),
        }
    }

    pub fn add_atom(&mut self, atom: &ModuleAtom, coeff: Scalar) {
        match (self, atom) {
            (ModuleElem::Ad(e), ModuleAtom::Ad(k)) => e.add_term(*k, coeff),
            (ModuleElem::T2(t), ModuleAtom::Pair(a, b)) => t.add_term((*a, *b), coeff),
            _ => panic!("module rank mismatch"),
        }
    }

    pub fn add_scaled(&mut self, other: &ModuleElem, factor: &Scalar) {
        match (self, other) {
            (ModuleElem::Ad(e), ModuleElem::Ad(o)) => e.add_scaled(o, factor),
            (ModuleElem::T2(t), ModuleElem::T2(o)) => t.add_scaled(o, factor),
            _ => panic!("module rank mismatch"),
        }
    }

    pub fn scaled(&self, factor: &Scalar) -> ModuleElem {
        match self {
            ModuleElem::Ad(e) => ModuleElem::Ad(e.scaled(factor)),
            ModuleElem::T2(t) => ModuleElem::T2(t.scaled(factor)),
        }
    }

    pub fn minus(&self, other: &ModuleElem) -> ModuleElem {
        let mut out = self.clone();
        out.add_scaled(other, &-scalar::one());
        out
    }

    pub fn homogeneous_parity(&self) -> Option<Parity> {
        match self {
            ModuleElem::Ad(e) => e.homogeneous_parity(),
            ModuleElem::T2(t) => t.homogeneous_parity(),
        }
    }

    pub fn homogeneous_degree(&self) -> Option<HalfInt> {
        match self {
            ModuleElem::Ad(e) => e.homogeneous_degree(),
            ModuleElem::T2(t) => t.homogeneous_degree(),
        }
    }

    pub fn atoms(&self) -> Vec<(ModuleAtom, Scalar)> {
        match self {
            ModuleElem::Ad(e) => e.iter().map(|(k, c)| (ModuleAtom::Ad(*k), c.clone())).collect(),
            ModuleElem::T2(t) => {
                t.iter().map(|((a, b), c)| (ModuleAtom::Pair(*a, *b), c.clone())).collect()
            }
        }
    }

    /// Adjoint diagonal action `x * v` of a basis symbol.
    pub fn act_key(&self, spec: &AlgebraSpec, x: &BasisKey) -> Result<ModuleElem, AlgebraError> {
        match self {
            ModuleElem::Ad(e) => Ok(ModuleElem::Ad(spec.bracket(&Element::basis(*x), e)?)),
            ModuleElem::T2(t) => Ok(ModuleElem::T2(tensor::act2_key(spec, x, t)?)),
        }
    }

    /// Drops atoms whose components leave |degree| <= `bound`.
    pub fn truncated(&self, bound: HalfInt) -> ModuleElem {
        match self {
            ModuleElem::Ad(e) => {
                ModuleElem::Ad(e.filtered(|k| k.degree().abs() <= bound))
            }
            ModuleElem::T2(t) => ModuleElem::T2(
                t.filtered(|(a, b)| a.degree().abs() <= bound && b.degree().abs() <= bound),
            ),
        }
    }
}

impl fmt::Display for ModuleElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleElem::Ad(e) => write!(f, "{e}"),
            ModuleElem::T2(t) => write!(f, "{t}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::preset;

    #[test]
    fn tensor_square_atoms_at_degree_zero() {
        let spec = preset("thv-centerless").unwrap();
        let atoms = CoeffDescriptor::TensorSquare.atoms_at(
            &spec,
            HalfInt::ZERO,
            Parity::Even,
            HalfInt::from_int(2),
        );
        // pairs (a, -a) over L/I with |a| <= 2: 4 family combos x 5 indices
        assert_eq!(atoms.len(), 20);
        assert!(atoms.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn sub_block_restricts_pairs() {
        let spec = preset("ns2-centerless").unwrap();
        let block = CoeffDescriptor::SubBlock(vec![(BlockPart::GPlus, BlockPart::GMinus)]);
        let atoms = block.atoms_at(&spec, HalfInt::ZERO, Parity::Even, HalfInt::from_int(2));
        assert!(!atoms.is_empty());
        for atom in &atoms {
            let ModuleAtom::Pair(a, b) = atom else { panic!() };
            assert_eq!(a.family, Family::GPlus);
            assert_eq!(b.family, Family::GMinus);
        }
        assert_eq!(block.domain_keys(&spec, HalfInt::from_int(2)).len(), 10);
    }

    #[test]
    fn adjoint_atoms() {
        let spec = preset("ns2-central").unwrap();
        let atoms = CoeffDescriptor::Adjoint.atoms_at(
            &spec,
            HalfInt::ZERO,
            Parity::Even,
            HalfInt::from_int(3),
        );
        assert_eq!(atoms.len(), 3); // L(0), I(0), C
    }

    #[test]
    fn descriptor_parsing() {
        assert_eq!(CoeffDescriptor::parse("adjoint"), Some(CoeffDescriptor::Adjoint));
        assert_eq!(CoeffDescriptor::parse("tensor2"), Some(CoeffDescriptor::TensorSquare));
        assert_eq!(
            CoeffDescriptor::parse("block:g+.g-"),
            Some(CoeffDescriptor::SubBlock(vec![(BlockPart::GPlus, BlockPart::GMinus)]))
        );
        assert_eq!(CoeffDescriptor::parse("block:g+"), None);
    }

    #[test]
    fn atom_action_matches_module_action() {
        let spec = preset("ns2-centerless").unwrap();
        let atom = ModuleAtom::Pair(BasisKey::gplus(1), BasisKey::gminus(-1));
        let x = BasisKey::l(1);
        let via_atoms = {
            let mut v = ModuleElem::T2(Tensor2::zero());
            for (a, c) in atom.act(&spec, &x).unwrap() {
                v.add_atom(&a, c);
            }
            v
        };
        let direct = ModuleElem::basis(&atom).act_key(&spec, &x).unwrap();
        assert_eq!(via_atoms, direct);
    }
}
