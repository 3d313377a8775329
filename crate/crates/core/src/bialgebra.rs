//! The superbialgebra layer: the coboundary cobracket, its co-Jacobi and
//! compatibility defects, derivation tables, and the six-parameter family
//! of tensor-valued derivations of the even subalgebra.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::AlgebraSpec;
use crate::error::AlgebraError;
use crate::halfint::HalfInt;
use crate::key::{BasisKey, Parity};
use crate::lincomb::{Element, Tensor2, Tensor3};
use crate::module::{CoeffDescriptor, ModuleElem};
use crate::scalar::{self, Scalar};
use crate::tensor::{self, Window};

/// The coboundary cobracket of `r`: `x -> x * r` for even `r`.
pub fn delta_r(spec: &AlgebraSpec, r: &Tensor2, x: &Element) -> Result<Tensor2, AlgebraError> {
    require_even(r)?;
    tensor::act2(spec, x, r)
}

fn require_even(r: &Tensor2) -> Result<(), AlgebraError> {
    if r.homogeneous_parity() == Some(Parity::Odd)
        || (!r.is_zero() && r.homogeneous_parity().is_none())
    {
        return Err(AlgebraError::OddTensor);
    }
    Ok(())
}

/// The co-Jacobi defect `(1 + cyclic + cyclic^2) (1 (x) Delta) Delta(x)`.
/// Vanishing for all `x` is the coalgebra half of the bialgebra axioms.
pub fn co_jacobi_defect(
    spec: &AlgebraSpec,
    r: &Tensor2,
    x: &Element,
) -> Result<Tensor3, AlgebraError> {
    let first = delta_r(spec, r, x)?;
    let mut nested = Tensor3::zero();
    for ((u, v), c) in first.iter() {
        // Delta has even parity, so no Koszul sign passing the first factor.
        let inner = delta_r(spec, r, &Element::basis(*v))?;
        for ((a, b), d) in inner.iter() {
            nested.add_term((*u, *a, *b), c * d);
        }
    }
    let once = tensor::cyclic(&nested);
    let twice = tensor::cyclic(&once);
    Ok(nested.plus(&once).plus(&twice))
}

/// The identity that makes coboundary cobrackets classifiable: for skew even
/// `r`, the co-Jacobi defect of `Delta_r` at `x` equals `x * c(r)`.
pub fn lemma_identity_check(
    spec: &AlgebraSpec,
    r: &Tensor2,
    x: &Element,
) -> Result<bool, AlgebraError> {
    if !tensor::is_super_skew(r) {
        return Err(AlgebraError::NotSkew);
    }
    let lhs = co_jacobi_defect(spec, r, x)?;
    let rhs = tensor::act3(spec, x, &tensor::cybe(spec, r)?)?;
    Ok(lhs == rhs)
}

/// The 1-cocycle defect `Delta([x,y]) - x * Delta(y) + (-1)^{[x][y]} y * Delta(x)`;
/// identically zero for coboundary cobrackets.
pub fn compatibility_defect(
    spec: &AlgebraSpec,
    r: &Tensor2,
    x: &Element,
    y: &Element,
) -> Result<Tensor2, AlgebraError> {
    let px = homogeneous_parity(x)?;
    let py = homogeneous_parity(y)?;
    let mut out = delta_r(spec, r, &spec.bracket(x, y)?)?;
    out.sub(&tensor::act2(spec, x, &delta_r(spec, r, y)?)?);
    let sign = scalar::sign_pow(px.is_odd() && py.is_odd());
    out.add_scaled(&tensor::act2(spec, y, &delta_r(spec, r, x)?)?, &sign);
    Ok(out)
}

fn homogeneous_parity(x: &Element) -> Result<Parity, AlgebraError> {
    if x.is_zero() {
        return Ok(Parity::Even);
    }
    x.homogeneous_parity().ok_or(AlgebraError::NotHomogeneous)
}

/// A degree-homogeneous candidate derivation, tabulated on the basis keys
/// of a domain window.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DerivationTable {
    pub parity: Parity,
    pub degree: HalfInt,
    pub window: Window,
    /// Whether the domain is the even subalgebra only (sub-block modules).
    pub even_domain: bool,
    descriptor: CoeffDescriptor,
    values: BTreeMap<BasisKey, ModuleElem>,
}

impl DerivationTable {
    pub fn new(parity: Parity, degree: HalfInt, window: Window, descriptor: CoeffDescriptor) -> Self {
        let even_domain = matches!(descriptor, CoeffDescriptor::SubBlock(_));
        DerivationTable { parity, degree, window, even_domain, descriptor, values: BTreeMap::new() }
    }

    pub fn descriptor(&self) -> &CoeffDescriptor {
        &self.descriptor
    }

    pub fn set_value(&mut self, key: BasisKey, value: ModuleElem) {
        debug_assert!(
            value.is_zero() || value.homogeneous_degree() == Some(key.degree() + self.degree),
            "value degree must be degree(key) + table degree"
        );
        debug_assert!(
            value.is_zero() || value.homogeneous_parity() == Some(key.parity() + self.parity),
            "value parity must be parity(key) + table parity"
        );
        if !value.is_zero() {
            self.values.insert(key, value);
        }
    }

    /// The value on a basis key: zero inside the domain window, `None`
    /// outside it.
    pub fn value_of(&self, key: &BasisKey) -> Option<ModuleElem> {
        if key.degree().abs() > self.window.domain {
            return None;
        }
        if self.even_domain && key.parity() == Parity::Odd {
            return Some(ModuleElem::zero_like(&self.descriptor));
        }
        Some(
            self.values
                .get(key)
                .cloned()
                .unwrap_or_else(|| ModuleElem::zero_like(&self.descriptor)),
        )
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisKey, &ModuleElem)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Restriction to basis keys with |degree| <= `bound`.
    pub fn restricted(&self, bound: HalfInt) -> DerivationTable {
        let mut out = self.clone();
        out.values.retain(|k, _| k.degree().abs() <= bound);
        out
    }
}

impl fmt::Display for DerivationTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return write!(f, "0");
        }
        for (n, (key, value)) in self.values.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "{key} -> {value}")?;
        }
        Ok(())
    }
}

/// The defect of the derivation equation on one basis pair:
/// `d([x,y]) - (-1)^{[d][x]} x * d(y) + (-1)^{[y]([d]+[x])} y * d(x)`.
/// Pairs whose bracket leaves the domain window are reported as errors,
/// never silently treated as zero.
pub fn derivation_defect(
    spec: &AlgebraSpec,
    table: &DerivationTable,
    x: &BasisKey,
    y: &BasisKey,
) -> Result<ModuleElem, AlgebraError> {
    let needed = |k: &BasisKey| {
        table.value_of(k).ok_or(AlgebraError::OutsideWindow { x: *x, y: *y, out: *k })
    };
    let mut out = ModuleElem::zero_like(&table.descriptor);
    for (z, c) in spec.bracket_keys(x, y)?.iter() {
        out.add_scaled(&needed(z)?, c);
    }
    let dy = needed(y)?;
    let s1 = scalar::sign_pow(table.parity.is_odd() && x.parity().is_odd());
    out.add_scaled(&dy.act_key(spec, x)?, &-s1);
    let dx = needed(x)?;
    let s2 = scalar::sign_pow(y.parity().is_odd() && (table.parity + x.parity()).is_odd());
    out.add_scaled(&dx.act_key(spec, y)?, &s2);
    Ok(out)
}

/// The inner derivation attached to a homogeneous module element:
/// `x -> (-1)^{[a][x]} x * a`, tabulated exactly on the domain window.
pub fn inner_table(
    spec: &AlgebraSpec,
    a: &ModuleElem,
    descriptor: CoeffDescriptor,
    window: Window,
) -> Result<DerivationTable, AlgebraError> {
    let (parity, degree) = if a.is_zero() {
        (Parity::Even, HalfInt::ZERO)
    } else {
        (
            a.homogeneous_parity().ok_or(AlgebraError::NotHomogeneous)?,
            a.homogeneous_degree().ok_or(AlgebraError::NotHomogeneous)?,
        )
    };
    let mut table = DerivationTable::new(parity, degree, window, descriptor.clone());
    for x in descriptor.domain_keys(spec, window.domain) {
        let sign = scalar::sign_pow(parity.is_odd() && x.parity().is_odd());
        let value = a.act_key(spec, &x)?.scaled(&sign);
        table.set_value(x, value);
    }
    Ok(table)
}

/// Tensor-square special case of `inner_table`.
pub fn inner_derivation(
    spec: &AlgebraSpec,
    a: &Tensor2,
    window: Window,
) -> Result<DerivationTable, AlgebraError> {
    inner_table(spec, &ModuleElem::T2(a.clone()), CoeffDescriptor::TensorSquare, window)
}

/// Parameters of the tensor-valued derivation family of the even
/// subalgebra: `L(n) -> (n a + g) I(0)(x)I(n) + (n a' + g') I(n)(x)I(0)`,
/// `I(n) -> b I(0)(x)I(n) + b' I(n)(x)I(0)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RhoParams {
    pub alpha: Scalar,
    pub alpha_dag: Scalar,
    pub beta: Scalar,
    pub beta_dag: Scalar,
    pub gamma: Scalar,
    pub gamma_dag: Scalar,
}

impl RhoParams {
    pub fn unit(k: usize) -> RhoParams {
        let mut p = RhoParams::default();
        let slot = [
            &mut p.alpha,
            &mut p.alpha_dag,
            &mut p.beta,
            &mut p.beta_dag,
            &mut p.gamma,
            &mut p.gamma_dag,
        ];
        *slot.into_iter().nth(k).expect("rho has six parameters") = scalar::one();
        p
    }
}

/// Builds the degree-0, even-parity table of the family on a window; odd
/// basis keys read as zero against the full superalgebra.
pub fn rho(params: &RhoParams, window: Window) -> DerivationTable {
    let mut table =
        DerivationTable::new(Parity::Even, HalfInt::ZERO, window, CoeffDescriptor::TensorSquare);
    let bound = window.domain.doubled() / 2;
    for n in -bound..=bound {
        let nv = scalar::int(n);
        let i0 = BasisKey::i(0);
        let i_n = BasisKey::i(n);

        let mut lv = Tensor2::zero();
        lv.add_term((i0, i_n), &nv * &params.alpha + &params.gamma);
        lv.add_term((i_n, i0), &nv * &params.alpha_dag + &params.gamma_dag);
        table.set_value(BasisKey::l(n), ModuleElem::T2(lv));

        let mut iv = Tensor2::zero();
        iv.add_term((i0, i_n), params.beta.clone());
        iv.add_term((i_n, i0), params.beta_dag.clone());
        table.set_value(BasisKey::i(n), ModuleElem::T2(iv));
    }
    table
}

/// The verdict report of the triangular-coboundary check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerdictReport {
    pub skew: bool,
    pub even_parity: bool,
    pub cybe_zero: bool,
    pub mybe_empty: bool,
    pub co_jacobi_zero: bool,
    pub compatibility_zero: bool,
    pub verdict: bool,
}

/// Runs every check of the superbialgebra definition on a window and
/// declares `r` a triangular coboundary structure iff it is skew, even,
/// and has vanishing Yang-Baxter expression.
pub fn superbialgebra_verdict(
    spec: &AlgebraSpec,
    r: &Tensor2,
    window: Window,
) -> Result<VerdictReport, AlgebraError> {
    let skew = tensor::is_super_skew(r);
    let even_parity = require_even(r).is_ok();
    let mut report = VerdictReport {
        skew,
        even_parity,
        cybe_zero: false,
        mybe_empty: false,
        co_jacobi_zero: false,
        compatibility_zero: false,
        verdict: false,
    };
    if !even_parity {
        return Ok(report);
    }

    report.cybe_zero = tensor::cybe(spec, r)?.is_zero();
    report.mybe_empty = tensor::mybe_defect(spec, r, window.domain)?.is_empty();

    let keys = spec.keys_in_window(window.domain);
    report.co_jacobi_zero = true;
    for x in &keys {
        if !co_jacobi_defect(spec, r, &Element::basis(*x))?.is_zero() {
            report.co_jacobi_zero = false;
            break;
        }
    }
    report.compatibility_zero = true;
    'outer: for x in &keys {
        for y in &keys {
            let defect =
                compatibility_defect(spec, r, &Element::basis(*x), &Element::basis(*y))?;
            if !defect.is_zero() {
                report.compatibility_zero = false;
                break 'outer;
            }
        }
    }

    report.verdict = report.skew && report.even_parity && report.cybe_zero;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::preset;
    use crate::tensor::skewize;

    fn t2(pairs: &[(BasisKey, BasisKey, i64)]) -> Tensor2 {
        let mut t = Tensor2::zero();
        for (a, b, c) in pairs {
            t.add_term((*a, *b), scalar::int(*c));
        }
        t
    }

    fn l0_wedge_l1() -> Tensor2 {
        skewize(&t2(&[(BasisKey::l(0), BasisKey::l(1), 1)]))
    }

    #[test]
    fn delta_r_examples() {
        let spec = preset("ns2-centerless").unwrap();
        let r = l0_wedge_l1();
        assert!(delta_r(&spec, &r, &Element::basis(BasisKey::l(1))).unwrap().is_zero());
        assert!(delta_r(&spec, &r, &Element::zero()).unwrap().is_zero());
        let d = delta_r(&spec, &r, &Element::basis(BasisKey::l(-1))).unwrap();
        assert_eq!(d.to_string(), "-L(-1) (x) L(1) + L(1) (x) L(-1)");
    }

    #[test]
    fn delta_r_rejects_odd_r() {
        let spec = preset("ns2-centerless").unwrap();
        let odd = t2(&[(BasisKey::l(0), BasisKey::gplus(1), 1)]);
        assert!(matches!(
            delta_r(&spec, &odd, &Element::basis(BasisKey::l(0))),
            Err(AlgebraError::OddTensor)
        ));
    }

    #[test]
    fn co_jacobi_examples() {
        let spec = preset("ns2-centerless").unwrap();
        let r = l0_wedge_l1();
        assert!(co_jacobi_defect(&spec, &r, &Element::basis(BasisKey::l(-1))).unwrap().is_zero());
        assert!(co_jacobi_defect(&spec, &Tensor2::zero(), &Element::basis(BasisKey::l(2)))
            .unwrap()
            .is_zero());

        let bad = skewize(&t2(&[(BasisKey::l(-1), BasisKey::l(1), 1)]));
        let mut some_nonzero = false;
        for x in spec.keys_in_window(HalfInt::from_int(2)) {
            if !co_jacobi_defect(&spec, &bad, &Element::basis(x)).unwrap().is_zero() {
                some_nonzero = true;
                break;
            }
        }
        assert!(some_nonzero);
    }

    #[test]
    fn lemma_identity_on_samples() {
        let spec = preset("ns2-centerless").unwrap();
        let r = l0_wedge_l1();
        assert!(lemma_identity_check(&spec, &r, &Element::basis(BasisKey::l(2))).unwrap());
        assert!(lemma_identity_check(&spec, &Tensor2::zero(), &Element::basis(BasisKey::l(0)))
            .unwrap());
        // also for an r with nonzero Yang-Baxter expression
        let bad = skewize(&t2(&[(BasisKey::l(-1), BasisKey::l(1), 1)]));
        for x in spec.keys_in_window(HalfInt::from_int(2)) {
            assert!(lemma_identity_check(&spec, &bad, &Element::basis(x)).unwrap());
        }
    }

    #[test]
    fn lemma_identity_requires_skew() {
        let spec = preset("ns2-centerless").unwrap();
        let not_skew = t2(&[(BasisKey::l(0), BasisKey::l(0), 1)]);
        assert!(matches!(
            lemma_identity_check(&spec, &not_skew, &Element::basis(BasisKey::l(0))),
            Err(AlgebraError::NotSkew)
        ));
    }

    #[test]
    fn compatibility_vanishes_for_coboundaries() {
        let spec = preset("ns2-centerless").unwrap();
        let samples = [
            l0_wedge_l1(),
            skewize(&t2(&[(BasisKey::l(-1), BasisKey::l(1), 1)])),
            skewize(&t2(&[(BasisKey::gplus(1), BasisKey::gminus(-3), 1)])),
            Tensor2::zero(),
        ];
        let x = Element::basis(BasisKey::l(1));
        let y = Element::basis(BasisKey::l(-1));
        let gp = Element::basis(BasisKey::gplus(1));
        let gm = Element::basis(BasisKey::gminus(1));
        for r in &samples {
            assert!(compatibility_defect(&spec, r, &x, &y).unwrap().is_zero());
            assert!(compatibility_defect(&spec, r, &gp, &gm).unwrap().is_zero());
        }
    }

    #[test]
    fn inner_tables_are_derivations() {
        let spec = preset("ns2-centerless").unwrap();
        let window = Window::cube(3);
        let a = skewize(&t2(&[(BasisKey::l(0), BasisKey::l(1), 1)]));
        let table = inner_derivation(&spec, &a, window).unwrap();
        let keys = spec.keys_in_window(window.domain);
        for x in &keys {
            for y in &keys {
                if (x.degree() + y.degree()).abs() > window.domain {
                    continue;
                }
                let defect = derivation_defect(&spec, &table, x, y).unwrap();
                assert!(defect.is_zero(), "inner derivation defect at [{x}, {y}]");
            }
        }
    }

    #[test]
    fn inner_values_match_hand_expansion() {
        let spec = preset("ns2-centerless").unwrap();
        let a = t2(&[(BasisKey::i(0), BasisKey::i(0), 1)]);
        let table = inner_derivation(&spec, &a, Window::cube(2)).unwrap();
        for n in -2..=2i64 {
            assert!(table.value_of(&BasisKey::l(n)).unwrap().is_zero());
            assert!(table.value_of(&BasisKey::i(n)).unwrap().is_zero());
        }
        // values(G+(r)) = -G+(r) (x) I(0) - I(0) (x) G+(r)
        let v = table.value_of(&BasisKey::gplus(1)).unwrap();
        assert_eq!(v.to_string(), "-I(0) (x) G+(1/2) - G+(1/2) (x) I(0)");
    }

    #[test]
    fn zero_inner_is_zero_table() {
        let spec = preset("ns2-centerless").unwrap();
        let table = inner_derivation(&spec, &Tensor2::zero(), Window::cube(2)).unwrap();
        assert!(table.is_zero());
    }

    #[test]
    fn degree_zero_inner_kills_l0() {
        let spec = preset("ns2-centerless").unwrap();
        let a = skewize(&t2(&[(BasisKey::l(-1), BasisKey::l(1), 1)]));
        let table = inner_derivation(&spec, &a, Window::cube(2)).unwrap();
        assert!(table.value_of(&BasisKey::l(0)).unwrap().is_zero());
    }

    #[test]
    fn rho_unit_beta() {
        let table = rho(&RhoParams::unit(2), Window::cube(3));
        let v = table.value_of(&BasisKey::i(2)).unwrap();
        assert_eq!(v.to_string(), "I(0) (x) I(2)");
        assert!(table.value_of(&BasisKey::l(1)).unwrap().is_zero());
    }

    #[test]
    fn rho_zero_params_is_zero() {
        assert!(rho(&RhoParams::default(), Window::cube(4)).is_zero());
    }

    #[test]
    fn rho_alpha_is_a_derivation_on_even_pairs() {
        let spec = preset("thv-centerless").unwrap();
        let window = Window { domain: HalfInt::from_int(6), codomain: HalfInt::from_int(12), core: HalfInt::from_int(6) };
        let table = rho(&RhoParams::unit(0), window);
        for m in -6..=6i64 {
            for n in -6..=6i64 {
                if (m + n).abs() > 6 {
                    continue;
                }
                let defect =
                    derivation_defect(&spec, &table, &BasisKey::l(m), &BasisKey::l(n)).unwrap();
                assert!(defect.is_zero(), "rho(alpha) defect at [L({m}), L({n})]");
            }
        }
    }

    #[test]
    fn derivation_defect_reports_window_exit() {
        let spec = preset("thv-centerless").unwrap();
        let table = rho(&RhoParams::unit(0), Window::cube(2));
        let err = derivation_defect(&spec, &table, &BasisKey::l(2), &BasisKey::l(1)).unwrap_err();
        assert!(matches!(err, AlgebraError::OutsideWindow { .. }));
    }

    #[test]
    fn verdict_examples() {
        let spec = preset("ns2-centerless").unwrap();
        let window = Window::cube(3);

        let good = l0_wedge_l1();
        let report = superbialgebra_verdict(&spec, &good, window).unwrap();
        assert!(report.verdict && report.skew && report.cybe_zero);
        assert!(report.mybe_empty && report.co_jacobi_zero && report.compatibility_zero);

        let not_skew = t2(&[(BasisKey::l(0), BasisKey::l(0), 1)]);
        let report = superbialgebra_verdict(&spec, &not_skew, window).unwrap();
        assert!(!report.skew && !report.verdict);

        let zero = superbialgebra_verdict(&spec, &Tensor2::zero(), window).unwrap();
        assert!(zero.verdict);
    }
}
