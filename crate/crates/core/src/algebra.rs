//! Parametric structure-constant algebras and exact bracket evaluation.

use std::collections::BTreeMap;

use num::Zero;

use crate::error::AlgebraError;
use crate::halfint::HalfInt;
use crate::key::{BasisKey, Family, Parity};
use crate::lincomb::Element;
use crate::poly::{IndexPoly, LinForm};
use crate::scalar::{self, Scalar};

/// Where a target term of a bracket rule lands.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TargetKey {
    /// A family with a linear index form in the rule's bound variables.
    Key(Family, LinForm),
    /// The central element.
    Central,
}

/// One summand on the right-hand side of a bracket rule.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TargetTerm {
    pub coeff: IndexPoly,
    pub target: TargetKey,
    /// When present, the term only fires where this form vanishes.
    pub delta: Option<LinForm>,
}

/// `[left_family(v1), right_family(v2)] = sum of target terms`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BracketRule {
    pub left: Family,
    pub right: Family,
    /// Bound variable names, left then right.
    pub vars: (String, String),
    pub targets: Vec<TargetTerm>,
}

/// Declaration of one generator family inside a spec.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilyDecl {
    pub family: Family,
    /// Index variable name used in the canonical serialization.
    pub var: String,
}

/// A validated algebra definition: declared families plus bracket rules.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraSpec {
    pub name: String,
    families: BTreeMap<Family, FamilyDecl>,
    rules: Vec<BracketRule>,
    rule_by_pair: BTreeMap<(Family, Family), usize>,
}

impl AlgebraSpec {
    pub fn new(name: String, decls: Vec<FamilyDecl>, rules: Vec<BracketRule>) -> Self {
        let mut families = BTreeMap::new();
        for d in decls {
            families.insert(d.family, d);
        }
        let mut rule_by_pair = BTreeMap::new();
        for (n, r) in rules.iter().enumerate() {
            rule_by_pair.insert((r.left, r.right), n);
        }
        AlgebraSpec { name, families, rules, rule_by_pair }
    }

    pub fn has_family(&self, family: Family) -> bool {
        self.families.contains_key(&family)
    }

    pub fn has_central(&self) -> bool {
        self.has_family(Family::C)
    }

    pub fn families(&self) -> impl Iterator<Item = &FamilyDecl> {
        self.families.values()
    }

    pub fn rules(&self) -> &[BracketRule] {
        &self.rules
    }

    pub fn rule_for(&self, left: Family, right: Family) -> Option<&BracketRule> {
        self.rule_by_pair.get(&(left, right)).map(|&n| &self.rules[n])
    }

    fn check_family(&self, family: Family) -> Result<(), AlgebraError> {
        if self.has_family(family) {
            Ok(())
        } else {
            Err(AlgebraError::UnknownFamily(family, self.name.clone()))
        }
    }

    pub fn check_key(&self, key: &BasisKey) -> Result<(), AlgebraError> {
        self.check_family(key.family)
    }

    /// Bracket of two basis symbols. Pairs without a rule in either order
    /// resolve through super-antisymmetry and then default to zero.
    pub fn bracket_keys(&self, x: &BasisKey, y: &BasisKey) -> Result<Element, AlgebraError> {
        self.check_family(x.family)?;
        self.check_family(y.family)?;
        if let Some(rule) = self.rule_for(x.family, y.family) {
            return self.eval_rule(rule, x.index, y.index, None);
        }
        if let Some(rule) = self.rule_for(y.family, x.family) {
            let sign = if x.parity().is_odd() && y.parity().is_odd() {
                scalar::one()
            } else {
                -scalar::one()
            };
            return self.eval_rule(rule, y.index, x.index, Some(sign));
        }
        Ok(Element::zero())
    }

    fn eval_rule(
        &self,
        rule: &BracketRule,
        left: HalfInt,
        right: HalfInt,
        scale: Option<Scalar>,
    ) -> Result<Element, AlgebraError> {
        let mut out = Element::zero();
        for term in &rule.targets {
            if let Some(delta) = &term.delta {
                if !delta.eval(left, right).is_zero() {
                    continue;
                }
            }
            let mut coeff = term.coeff.eval(left, right);
            if coeff.is_zero() {
                continue;
            }
            if let Some(s) = &scale {
                coeff *= s;
            }
            let key = match &term.target {
                TargetKey::Central => BasisKey::central(),
                TargetKey::Key(family, form) => {
                    let index = form.eval_half(left, right).ok_or(AlgebraError::IndexLattice {
                        family: *family,
                        index: HalfInt::ZERO,
                    })?;
                    BasisKey::new(*family, index)?
                }
            };
            out.add_term(key, coeff);
        }
        Ok(out)
    }

    /// Bilinear extension of the bracket to arbitrary elements.
    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        let mut out = Element::zero();
        for (kx, cx) in x.iter() {
            for (ky, cy) in y.iter() {
                let b = self.bracket_keys(kx, ky)?;
                out.add_scaled(&b, &(cx * cy));
            }
        }
        Ok(out)
    }

    /// All declared basis keys with |degree| <= bound, in canonical order.
    pub fn keys_in_window(&self, bound: HalfInt) -> Vec<BasisKey> {
        let mut out = Vec::new();
        let b = bound.doubled();
        for decl in self.families.values() {
            match decl.family {
                Family::C => out.push(BasisKey::central()),
                f => {
                    let step = 2;
                    let start = if f.lattice_parity() == 0 {
                        -(b - b.rem_euclid(2))
                    } else {
                        -(b - (b + 1).rem_euclid(2))
                    };
                    let mut d = start;
                    while d <= b {
                        out.push(BasisKey { family: f, index: HalfInt::from_doubled(d) });
                        d += step;
                    }
                }
            }
        }
        out
    }

    /// Even-part basis keys in the window (the even subalgebra).
    pub fn even_keys_in_window(&self, bound: HalfInt) -> Vec<BasisKey> {
        self.keys_in_window(bound)
            .into_iter()
            .filter(|k| k.parity() == Parity::Even)
            .collect()
    }

    /// All declared basis keys of the given degree, in canonical order.
    pub fn keys_of_degree(&self, degree: HalfInt) -> Vec<BasisKey> {
        let mut out = Vec::new();
        for decl in self.families.values() {
            match decl.family {
                Family::C => {
                    if degree.is_zero() {
                        out.push(BasisKey::central());
                    }
                }
                f => {
                    if degree.doubled().rem_euclid(2) == f.lattice_parity() {
                        out.push(BasisKey { family: f, index: degree });
                    }
                }
            }
        }
        out
    }
}

/// Outcome of the windowed axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomDefect {
    Skew { x: BasisKey, y: BasisKey, defect: Element },
    Jacobi { x: BasisKey, y: BasisKey, z: BasisKey, defect: Element },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub pairs_checked: usize,
    pub triples_checked: usize,
    pub counterexample: Option<AxiomDefect>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Verifies super-antisymmetry on all in-window basis pairs and the
/// super-Jacobi identity on all in-window triples whose intermediate
/// brackets stay inside the window. Stops at the first counterexample.
pub fn check_spec_consistency(
    spec: &AlgebraSpec,
    window: HalfInt,
) -> Result<ConsistencyReport, AlgebraError> {
    let keys = spec.keys_in_window(window);
    let mut pairs_checked = 0;
    let mut triples_checked = 0;

    for (n, x) in keys.iter().enumerate() {
        for y in &keys[n..] {
            let mut defect = spec.bracket_keys(x, y)?;
            let sign = scalar::sign_pow(x.parity().is_odd() && y.parity().is_odd());
            defect.add_scaled(&spec.bracket_keys(y, x)?, &sign);
            pairs_checked += 1;
            if !defect.is_zero() {
                return Ok(ConsistencyReport {
                    pairs_checked,
                    triples_checked,
                    counterexample: Some(AxiomDefect::Skew { x: *x, y: *y, defect }),
                });
            }
        }
    }

    let bound = window.doubled();
    let in_window = |d: HalfInt| d.abs().doubled() <= bound;
    for x in &keys {
        for y in &keys {
            if !in_window(x.degree() + y.degree()) {
                continue;
            }
            for z in &keys {
                if !in_window(y.degree() + z.degree())
                    || !in_window(x.degree() + z.degree())
                    || !in_window(x.degree() + y.degree() + z.degree())
                {
                    continue;
                }
                // [x,[y,z]] - [[x,y],z] - (-1)^{[x][y]} [y,[x,z]]
                let xe = Element::basis(*x);
                let ye = Element::basis(*y);
                let ze = Element::basis(*z);
                let mut defect = spec.bracket(&xe, &spec.bracket(&ye, &ze)?)?;
                defect.sub(&spec.bracket(&spec.bracket(&xe, &ye)?, &ze)?);
                let sign = scalar::sign_pow(x.parity().is_odd() && y.parity().is_odd());
                defect.add_scaled(&spec.bracket(&ye, &spec.bracket(&xe, &ze)?)?, &-sign);
                triples_checked += 1;
                if !defect.is_zero() {
                    return Ok(ConsistencyReport {
                        pairs_checked,
                        triples_checked,
                        counterexample: Some(AxiomDefect::Jacobi { x: *x, y: *y, z: *z, defect }),
                    });
                }
            }
        }
    }

    Ok(ConsistencyReport { pairs_checked, triples_checked, counterexample: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::preset;

    fn el(key: BasisKey) -> Element {
        Element::basis(key)
    }

    #[test]
    fn virasoro_central_term() {
        let spec = preset("ns2-central").unwrap();
        let b = spec.bracket(&el(BasisKey::l(2)), &el(BasisKey::l(-2))).unwrap();
        assert_eq!(b.to_string(), "4*L(0) + 1/2*C");
    }

    #[test]
    fn equal_even_keys_bracket_to_zero() {
        let spec = preset("ns2-centerless").unwrap();
        let b = spec.bracket(&el(BasisKey::l(0)), &el(BasisKey::l(0))).unwrap();
        assert!(b.is_zero());
    }

    #[test]
    fn odd_odd_bracket() {
        let spec = preset("ns2-central").unwrap();
        let b = spec.bracket(&el(BasisKey::gplus(1)), &el(BasisKey::gminus(-1))).unwrap();
        assert_eq!(b.to_string(), "2*L(0) + I(0)");
    }

    #[test]
    fn heisenberg_central_pairing() {
        let spec = preset("ns2-central").unwrap();
        let b = spec.bracket(&el(BasisKey::i(1)), &el(BasisKey::i(-1))).unwrap();
        assert_eq!(b.to_string(), "1/3*C");
    }

    #[test]
    fn antisymmetry_fallback_for_odd_pairs() {
        let spec = preset("ns2-centerless").unwrap();
        // [G-(s), G+(r)] = +[G+(r), G-(s)] with indices bound correctly.
        let direct = spec.bracket(&el(BasisKey::gminus(-1)), &el(BasisKey::gplus(3))).unwrap();
        let flipped = spec.bracket(&el(BasisKey::gplus(3)), &el(BasisKey::gminus(-1))).unwrap();
        assert_eq!(direct, flipped);
        assert_eq!(direct.to_string(), "2*L(1) + 2*I(1)");
    }

    #[test]
    fn unknown_family_is_an_error() {
        let spec = preset("witt").unwrap();
        let err = spec.bracket(&el(BasisKey::i(0)), &el(BasisKey::l(1))).unwrap_err();
        assert!(matches!(err, AlgebraError::UnknownFamily(Family::I, _)));
    }

    #[test]
    fn central_element_brackets_to_zero() {
        let spec = preset("ns2-central").unwrap();
        for key in spec.keys_in_window(HalfInt::from_int(3)) {
            let b = spec.bracket(&el(BasisKey::central()), &el(key)).unwrap();
            assert!(b.is_zero(), "C should be central, got [C,{key}] = {b}");
        }
    }

    #[test]
    fn window_enumeration_is_canonical() {
        let spec = preset("ns2-central").unwrap();
        let keys = spec.keys_in_window(HalfInt::from_int(1));
        let shown: Vec<String> = keys.iter().map(|k| k.to_string()).collect();
        assert_eq!(
            shown,
            vec![
                "L(-1)", "L(0)", "L(1)", "I(-1)", "I(0)", "I(1)", "G+(-1/2)", "G+(1/2)",
                "G-(-1/2)", "G-(1/2)", "C"
            ]
        );
    }

    #[test]
    fn degree_operator_matches_grading() {
        // [L(0), x] = -degree(x) * x for every basis symbol.
        let spec = preset("ns2-central").unwrap();
        for key in spec.keys_in_window(HalfInt::from_int(2)) {
            let b = spec.bracket(&el(BasisKey::l(0)), &el(key)).unwrap();
            let expected = el(key).scaled(&-key.degree().to_scalar());
            assert_eq!(b, expected, "L(0) action wrong on {key}");
        }
    }
}
