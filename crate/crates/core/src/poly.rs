//! Coefficient polynomials and index forms for bracket rules.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::halfint::HalfInt;
use crate::scalar::{self, Scalar};

/// A rational-coefficient polynomial in the two index variables bound by a
/// bracket rule. Total degree is capped at 3, which covers every structure
/// constant that occurs (cubic central terms and quadratic odd-odd terms).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IndexPoly {
    /// (left exponent, right exponent) -> coefficient; no zero entries.
    coeffs: BTreeMap<(u8, u8), Scalar>,
}

pub const MAX_POLY_DEGREE: u8 = 3;

impl IndexPoly {
    pub fn zero() -> Self {
        IndexPoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = IndexPoly::zero();
        p.add_monomial(0, 0, c);
        p
    }

    pub fn one() -> Self {
        IndexPoly::constant(scalar::one())
    }

    pub fn add_monomial(&mut self, left_exp: u8, right_exp: u8, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry((left_exp, right_exp)) {
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

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn total_degree(&self) -> u8 {
        self.coeffs.keys().map(|(a, b)| a + b).max().unwrap_or(0)
    }

    /// True when the polynomial is the single constant monomial `c`.
    pub fn as_constant(&self) -> Option<&Scalar> {
        if self.coeffs.len() == 1 {
            self.coeffs.get(&(0, 0))
        } else {
            None
        }
    }

    pub fn monomial_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn monomials(&self) -> Vec<((u8, u8), Scalar)> {
        self.coeffs.iter().map(|(&k, v)| (k, v.clone())).collect()
    }

    pub fn eval(&self, left: HalfInt, right: HalfInt) -> Scalar {
        let lv = left.to_scalar();
        let rv = right.to_scalar();
        let mut acc = scalar::zero();
        for (&(el, er), c) in &self.coeffs {
            let mut term = c.clone();
            for _ in 0..el {
                term *= &lv;
            }
            for _ in 0..er {
                term *= &rv;
            }
            acc += term;
        }
        acc
    }

    /// Canonical compact text: monomials by total degree descending, then
    /// left exponent descending; no spaces, e.g. `1/12*m^3-1/12*m`.
    pub fn render(&self, vars: (&str, &str)) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<(u8, u8)> = self.coeffs.keys().copied().collect();
        keys.sort_by(|a, b| {
            let (ta, tb) = (a.0 + a.1, b.0 + b.1);
            tb.cmp(&ta).then(b.0.cmp(&a.0))
        });
        let mut out = String::new();
        for (n, key) in keys.iter().enumerate() {
            let coeff = &self.coeffs[key];
            let neg = scalar::is_negative(coeff);
            let mag = if neg { -coeff.clone() } else { coeff.clone() };
            if n == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || *key == (0, 0) {
                factors.push(mag.to_string());
            }
            for (exp, var) in [(key.0, vars.0), (key.1, vars.1)] {
                match exp {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    e => factors.push(format!("{var}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

/// A linear form `a*left + b*right + c` with half-integer coefficients,
/// used for target indices and delta conditions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinForm {
    pub left: Scalar,
    pub right: Scalar,
    pub constant: Scalar,
}

impl LinForm {
    pub fn zero() -> Self {
        LinForm { left: scalar::zero(), right: scalar::zero(), constant: scalar::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.left.is_zero() && self.right.is_zero() && self.constant.is_zero()
    }

    /// All coefficients must lie on ½ℤ.
    pub fn is_half_integral(&self) -> bool {
        [&self.left, &self.right, &self.constant]
            .iter()
            .all(|c| HalfInt::try_from_scalar(c).is_some())
    }

    pub fn eval(&self, left: HalfInt, right: HalfInt) -> Scalar {
        &self.left * left.to_scalar() + &self.right * right.to_scalar() + self.constant.clone()
    }

    pub fn eval_half(&self, left: HalfInt, right: HalfInt) -> Option<HalfInt> {
        HalfInt::try_from_scalar(&self.eval(left, right))
    }

    pub fn render(&self, vars: (&str, &str)) -> String {
        let mut out = String::new();
        let mut first = true;
        for (coeff, name) in [(&self.left, Some(vars.0)), (&self.right, Some(vars.1)), (&self.constant, None)] {
            if coeff.is_zero() {
                continue;
            }
            let neg = scalar::is_negative(coeff);
            let mag = if neg { -coeff.clone() } else { coeff.clone() };
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            match name {
                Some(var) => {
                    if !mag.is_one() {
                        out.push_str(&mag.to_string());
                        out.push('*');
                    }
                    out.push_str(var);
                }
                None => out.push_str(&mag.to_string()),
            }
        }
        if first {
            out.push('0');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: i64) -> HalfInt {
        HalfInt::from_int(n)
    }

    #[test]
    fn poly_eval_exact() {
        // (m^3 - m)/12 at m = 2 is 1/2.
        let mut p = IndexPoly::zero();
        p.add_monomial(3, 0, scalar::ratio(1, 12));
        p.add_monomial(1, 0, scalar::ratio(-1, 12));
        assert_eq!(p.eval(h(2), h(0)), scalar::ratio(1, 2));
        assert_eq!(p.render(("m", "n")), "1/12*m^3-1/12*m");
    }

    #[test]
    fn poly_render_orders_monomials() {
        let mut p = IndexPoly::zero();
        p.add_monomial(0, 1, scalar::int(-1));
        p.add_monomial(1, 0, scalar::int(1));
        assert_eq!(p.render(("m", "n")), "m-n");

        let mut q = IndexPoly::zero();
        p.add_monomial(0, 0, scalar::zero());
        q.add_monomial(0, 0, scalar::ratio(-1, 12));
        q.add_monomial(2, 0, scalar::ratio(1, 3));
        assert_eq!(q.render(("r", "s")), "1/3*r^2-1/12");
    }

    #[test]
    fn linform_half_eval() {
        let f = LinForm { left: scalar::one(), right: scalar::one(), constant: scalar::zero() };
        assert_eq!(f.eval_half(HalfInt::from_doubled(1), HalfInt::from_doubled(-3)), Some(HalfInt::from_int(-1)));
        assert_eq!(f.render(("r", "s")), "r+s");
        let g = LinForm { left: scalar::ratio(1, 2), right: scalar::zero(), constant: scalar::int(-1) };
        assert_eq!(g.render(("m", "n")), "1/2*m-1");
    }
}
