//! Tensor-square and tensor-cube calculus with Koszul signs: the super
//! twist, the cyclic permutation, the adjoint diagonal action and the
//! classical Yang-Baxter expression.

use crate::algebra::AlgebraSpec;
use crate::error::AlgebraError;
use crate::halfint::HalfInt;
use crate::key::{BasisKey, Parity};
use crate::lincomb::{Element, Tensor2, Tensor3};
use crate::scalar::{self, Scalar};

/// Degree truncation for windowed computations. Constraints are assembled
/// for basis keys with |degree| <= `domain`, values live on tensor atoms
/// whose components stay within |degree| <= `codomain`, and quotients or
/// comparisons are taken after restriction to |degree| <= `core`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Window {
    pub domain: HalfInt,
    pub codomain: HalfInt,
    pub core: HalfInt,
}

impl Window {
    pub fn new(domain: HalfInt, codomain: HalfInt, core: HalfInt) -> Result<Self, String> {
        if core.doubled() < 0 {
            return Err("core bound must be nonnegative".into());
        }
        if !(core <= domain && domain <= codomain) {
            return Err(format!("window bounds must satisfy core <= domain <= codomain (got core {core}, domain {domain}, codomain {codomain})"));
        }
        Ok(Window { domain, codomain, core })
    }

    /// Convenience for tests: domain = codomain = core = bound.
    pub fn cube(bound: i64) -> Self {
        let b = HalfInt::from_int(bound);
        Window { domain: b, codomain: b, core: b }
    }
}

fn koszul(a: Parity, b: Parity) -> Scalar {
    scalar::sign_pow(a.is_odd() && b.is_odd())
}

/// The super-twist: `a (x) b  ->  (-1)^{[a][b]} b (x) a`. An involution.
pub fn twist(t: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::zero();
    for ((a, b), c) in t.iter() {
        out.add_term((*b, *a), c * koszul(a.parity(), b.parity()));
    }
    out
}

/// The super-cyclic map on rank-3 tensors:
/// `x1 (x) x2 (x) x3 -> (-1)^{[x1]([x2]+[x3])} x2 (x) x3 (x) x1`. Order 3.
pub fn cyclic(t: &Tensor3) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((x1, x2, x3), c) in t.iter() {
        let sign = scalar::sign_pow(x1.parity().is_odd() && (x2.parity() + x3.parity()).is_odd());
        out.add_term((*x2, *x3, *x1), c * sign);
    }
    out
}

/// Adjoint diagonal action of a basis symbol on a rank-2 tensor:
/// `x * (a (x) b) = [x,a] (x) b + (-1)^{[x][a]} a (x) [x,b]`.
pub fn act2_key(spec: &AlgebraSpec, x: &BasisKey, t: &Tensor2) -> Result<Tensor2, AlgebraError> {
    let mut out = Tensor2::zero();
    for ((a, b), c) in t.iter() {
        for (k, bc) in spec.bracket_keys(x, a)?.iter() {
            out.add_term((*k, *b), c * bc);
        }
        let sign = koszul(x.parity(), a.parity());
        for (k, bc) in spec.bracket_keys(x, b)?.iter() {
            out.add_term((*a, *k), c * bc * &sign);
        }
    }
    Ok(out)
}

/// Adjoint diagonal action of a parity-homogeneous element on a rank-2 tensor.
pub fn act2(spec: &AlgebraSpec, x: &Element, t: &Tensor2) -> Result<Tensor2, AlgebraError> {
    if !x.is_zero() && x.homogeneous_parity().is_none() {
        return Err(AlgebraError::NotHomogeneous);
    }
    let mut out = Tensor2::zero();
    for (key, c) in x.iter() {
        out.add_scaled(&act2_key(spec, key, t)?, c);
    }
    Ok(out)
}

/// Three-factor analogue of `act2_key`; the Koszul sign accumulates the
/// parities of the factors the action passes over.
pub fn act3_key(spec: &AlgebraSpec, x: &BasisKey, t: &Tensor3) -> Result<Tensor3, AlgebraError> {
    let mut out = Tensor3::zero();
    for ((a, b, c), coeff) in t.iter() {
        for (k, bc) in spec.bracket_keys(x, a)?.iter() {
            out.add_term((*k, *b, *c), coeff * bc);
        }
        let s1 = koszul(x.parity(), a.parity());
        for (k, bc) in spec.bracket_keys(x, b)?.iter() {
            out.add_term((*a, *k, *c), coeff * bc * &s1);
        }
        let s2 = koszul(x.parity(), a.parity() + b.parity());
        for (k, bc) in spec.bracket_keys(x, c)?.iter() {
            out.add_term((*a, *b, *k), coeff * bc * &s2);
        }
    }
    Ok(out)
}

pub fn act3(spec: &AlgebraSpec, x: &Element, t: &Tensor3) -> Result<Tensor3, AlgebraError> {
    if !x.is_zero() && x.homogeneous_parity().is_none() {
        return Err(AlgebraError::NotHomogeneous);
    }
    let mut out = Tensor3::zero();
    for (key, c) in x.iter() {
        out.add_scaled(&act3_key(spec, key, t)?, c);
    }
    Ok(out)
}

/// Membership in Im(1 - twist), tested as the kernel condition
/// `(1 + twist) t = 0`; over the rationals the two coincide since any such
/// `t` equals `(1 - twist)(t/2)`.
pub fn is_super_skew(t: &Tensor2) -> bool {
    t.plus(&twist(t)).is_zero()
}

/// `(1 - twist) t`; the output always satisfies `is_super_skew`.
pub fn skewize(t: &Tensor2) -> Tensor2 {
    t.minus(&twist(t))
}

/// The classical Yang-Baxter expression
/// `c(r) = [r12, r13] + [r12, r23] + [r13, r23]`, computed termwise in the
/// three displayed bracket sums (nothing is materialized in an enveloping
/// algebra). `r` must have even total parity.
pub fn cybe(spec: &AlgebraSpec, r: &Tensor2) -> Result<Tensor3, AlgebraError> {
    require_even(r)?;
    let mut out = Tensor3::zero();
    for ((a1, b1), c1) in r.iter() {
        for ((a2, b2), c2) in r.iter() {
            let c = c1 * c2;
            let sign = koszul(a2.parity(), b1.parity());
            // [r12, r13]: (-1)^{[a_j][b_i]} [a_i, a_j] (x) b_i (x) b_j
            for (k, bc) in spec.bracket_keys(a1, a2)?.iter() {
                out.add_term((*k, *b1, *b2), &c * bc * &sign);
            }
            // [r12, r23]: a_i (x) [b_i, a_j] (x) b_j
            for (k, bc) in spec.bracket_keys(b1, a2)?.iter() {
                out.add_term((*a1, *k, *b2), &c * bc);
            }
            // [r13, r23]: (-1)^{[a_j][b_i]} a_i (x) a_j (x) [b_i, b_j]
            for (k, bc) in spec.bracket_keys(b1, b2)?.iter() {
                out.add_term((*a1, *a2, *k), &c * bc * &sign);
            }
        }
    }
    Ok(out)
}

fn require_even(r: &Tensor2) -> Result<(), AlgebraError> {
    for (atom, _) in r.iter() {
        if atom.0.parity() + atom.1.parity() == Parity::Odd {
            return Err(AlgebraError::OddTensor);
        }
    }
    Ok(())
}

/// All basis symbols `x` with |degree(x)| <= `domain` whose action on
/// `c(r)` is nonzero; an empty list means the modified Yang-Baxter
/// equation holds on the window.
pub fn mybe_defect(
    spec: &AlgebraSpec,
    r: &Tensor2,
    domain: HalfInt,
) -> Result<Vec<(BasisKey, Tensor3)>, AlgebraError> {
    let c = cybe(spec, r)?;
    let mut out = Vec::new();
    for x in spec.keys_in_window(domain) {
        let acted = act3_key(spec, &x, &c)?;
        if !acted.is_zero() {
            out.push((x, acted));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::preset;

    fn t2(pairs: &[(BasisKey, BasisKey, i64)]) -> Tensor2 {
        let mut t = Tensor2::zero();
        for (a, b, c) in pairs {
            t.add_term((*a, *b), scalar::int(*c));
        }
        t
    }

    #[test]
    fn twist_signs() {
        let even = t2(&[(BasisKey::l(1), BasisKey::i(2), 1)]);
        assert_eq!(twist(&even).to_string(), "I(2) (x) L(1)");

        let odd = t2(&[(BasisKey::gplus(1), BasisKey::gminus(3), 1)]);
        assert_eq!(twist(&odd).to_string(), "-G-(3/2) (x) G+(1/2)");
    }

    #[test]
    fn twist_is_an_involution() {
        let mixed = t2(&[
            (BasisKey::l(1), BasisKey::gplus(1), 2),
            (BasisKey::gminus(-1), BasisKey::gplus(3), -1),
            (BasisKey::i(0), BasisKey::l(-2), 5),
            (BasisKey::gplus(1), BasisKey::gplus(1), 7),
        ]);
        assert_eq!(twist(&twist(&mixed)), mixed);
    }

    #[test]
    fn cyclic_signs_and_order_three() {
        let mut t = Tensor3::zero();
        t.add_term((BasisKey::l(1), BasisKey::l(2), BasisKey::l(3)), scalar::one());
        assert_eq!(cyclic(&t).to_string(), "L(2) (x) L(3) (x) L(1)");

        let mut u = Tensor3::zero();
        u.add_term((BasisKey::gplus(1), BasisKey::gminus(1), BasisKey::l(0)), scalar::one());
        assert_eq!(cyclic(&u).to_string(), "-G-(1/2) (x) L(0) (x) G+(1/2)");

        let mut mixed = t.clone();
        mixed.add_term((BasisKey::gplus(1), BasisKey::l(0), BasisKey::gminus(-1)), scalar::int(3));
        mixed.add_term((BasisKey::gplus(1), BasisKey::gplus(3), BasisKey::i(2)), scalar::int(-2));
        assert_eq!(cyclic(&cyclic(&cyclic(&mixed))), mixed);
    }

    #[test]
    fn act2_matches_hand_expansion() {
        let spec = preset("ns2-centerless").unwrap();
        let t = t2(&[(BasisKey::l(1), BasisKey::i(2), 1)]);
        let acted = act2(&spec, &Element::basis(BasisKey::l(0)), &t).unwrap();
        assert_eq!(acted, t.scaled(&scalar::int(-3)));

        let zero = act2(&spec, &Element::basis(BasisKey::l(5)), &Tensor2::zero()).unwrap();
        assert!(zero.is_zero());

        let gg = t2(&[(BasisKey::gplus(1), BasisKey::gminus(1), 1)]);
        let acted = act2(&spec, &Element::basis(BasisKey::i(0)), &gg).unwrap();
        assert!(acted.is_zero());
    }

    #[test]
    fn act3_degree_operator() {
        let spec = preset("ns2-centerless").unwrap();
        let mut t = Tensor3::zero();
        t.add_term((BasisKey::l(1), BasisKey::l(1), BasisKey::l(-2)), scalar::one());
        assert!(act3(&spec, &Element::basis(BasisKey::l(0)), &t).unwrap().is_zero());

        let mut u = Tensor3::zero();
        u.add_term((BasisKey::l(1), BasisKey::l(2), BasisKey::l(3)), scalar::one());
        let acted = act3(&spec, &Element::basis(BasisKey::l(0)), &u).unwrap();
        assert_eq!(acted, u.scaled(&scalar::int(-6)));
    }

    #[test]
    fn skew_tests() {
        let skew = t2(&[
            (BasisKey::l(1), BasisKey::i(2), 1),
        ])
        .minus(&t2(&[(BasisKey::i(2), BasisKey::l(1), 1)]));
        assert!(is_super_skew(&skew));

        // odd-odd symmetric combination is skew because the twist carries -1
        let odd = t2(&[
            (BasisKey::gplus(1), BasisKey::gminus(-1), 1),
            (BasisKey::gminus(-1), BasisKey::gplus(1), 1),
        ]);
        assert!(is_super_skew(&odd));

        assert!(!is_super_skew(&t2(&[(BasisKey::l(0), BasisKey::l(0), 1)])));
    }

    #[test]
    fn skewize_outputs() {
        let t = t2(&[(BasisKey::l(-1), BasisKey::l(1), 1)]);
        assert_eq!(skewize(&t).to_string(), "L(-1) (x) L(1) - L(1) (x) L(-1)");
        assert!(is_super_skew(&skewize(&t)));

        let already = skewize(&t);
        assert_eq!(skewize(&already), already.scaled(&scalar::int(2)));

        let gg = t2(&[(BasisKey::gplus(1), BasisKey::gminus(1), 1)]);
        assert_eq!(
            skewize(&gg).to_string(),
            "G+(1/2) (x) G-(1/2) + G-(1/2) (x) G+(1/2)"
        );
    }

    #[test]
    fn cybe_on_triangular_sample_is_zero() {
        let spec = preset("ns2-centerless").unwrap();
        let r = skewize(&t2(&[(BasisKey::l(0), BasisKey::l(1), 1)]));
        assert!(cybe(&spec, &r).unwrap().is_zero());
        assert!(cybe(&spec, &Tensor2::zero()).unwrap().is_zero());
    }

    #[test]
    fn cybe_detects_nontriangular_sample() {
        let spec = preset("ns2-centerless").unwrap();
        let r = skewize(&t2(&[(BasisKey::l(-1), BasisKey::l(1), 1)]));
        assert!(!cybe(&spec, &r).unwrap().is_zero());
    }

    #[test]
    fn cybe_rejects_odd_tensors() {
        let spec = preset("ns2-centerless").unwrap();
        let odd = t2(&[(BasisKey::l(0), BasisKey::gplus(1), 1)]);
        assert!(matches!(cybe(&spec, &odd), Err(AlgebraError::OddTensor)));
    }

    #[test]
    fn mybe_examples() {
        let spec = preset("ns2-centerless").unwrap();
        let triangular = skewize(&t2(&[(BasisKey::l(0), BasisKey::l(1), 1)]));
        assert!(mybe_defect(&spec, &triangular, HalfInt::from_int(3)).unwrap().is_empty());
        assert!(mybe_defect(&spec, &Tensor2::zero(), HalfInt::from_int(3)).unwrap().is_empty());

        let bad = skewize(&t2(&[(BasisKey::l(-1), BasisKey::l(1), 1)]));
        assert!(!mybe_defect(&spec, &bad, HalfInt::from_int(3)).unwrap().is_empty());
    }
}
