//! Parsing element and tensor literals against an algebra.

use crate::algebra::AlgebraSpec;
use crate::dsl::lex::{tokenize, Cursor, Tok};
use crate::error::ParseError;
use crate::halfint::HalfInt;
use crate::key::{BasisKey, Family};
use crate::lincomb::{Element, Tensor2, Tensor3};
use crate::scalar::{self, Scalar};

/// A parsed literal; the tensor rank is inferred from the text.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParsedValue {
    Element(Element),
    Tensor2(Tensor2),
    Tensor3(Tensor3),
}

impl ParsedValue {
    pub fn rank(&self) -> u8 {
        match self {
            ParsedValue::Element(_) => 1,
            ParsedValue::Tensor2(_) => 2,
            ParsedValue::Tensor3(_) => 3,
        }
    }

    /// Interprets the value as a rank-2 tensor; the zero literal `0`
    /// parses as a zero element and coerces to any rank.
    pub fn into_tensor2(self) -> Option<Tensor2> {
        match self {
            ParsedValue::Tensor2(t) => Some(t),
            ParsedValue::Element(e) if e.is_zero() => Some(Tensor2::zero()),
            _ => None,
        }
    }

    pub fn into_element(self) -> Option<Element> {
        match self {
            ParsedValue::Element(e) => Some(e),
            _ => None,
        }
    }
}

pub fn parse_element(spec: &AlgebraSpec, text: &str) -> Result<ParsedValue, ParseError> {
    let toks = tokenize(text, true)?;
    let mut cur = Cursor::new(toks, text);
    let value = parse_value(spec, &mut cur)?;
    cur.expect_end()?;
    Ok(value)
}

fn parse_value(spec: &AlgebraSpec, cur: &mut Cursor) -> Result<ParsedValue, ParseError> {
    // the bare zero literal
    if matches!(cur.peek(), Some(Tok::Int(0))) && cur.peek_at(1).is_none() {
        cur.next();
        return Ok(ParsedValue::Element(Element::zero()));
    }

    let mut rank: Option<usize> = None;
    let mut e1 = Element::zero();
    let mut e2 = Tensor2::zero();
    let mut e3 = Tensor3::zero();

    let mut negate = false;
    if matches!(cur.peek(), Some(Tok::Minus)) {
        cur.next();
        negate = true;
    }
    loop {
        let pos = cur.here();
        let (coeff, keys) = parse_term(spec, cur)?;
        let coeff = if negate { -coeff } else { coeff };
        match rank {
            None => rank = Some(keys.len()),
            Some(r) if r != keys.len() => {
                return Err(ParseError::new(
                    pos.0,
                    pos.1,
                    format!("mixed tensor ranks: expected {r} factors, found {}", keys.len()),
                ))
            }
            _ => {}
        }
        match keys.len() {
            1 => e1.add_term(keys[0], coeff),
            2 => e2.add_term((keys[0], keys[1]), coeff),
            3 => e3.add_term((keys[0], keys[1], keys[2]), coeff),
            n => {
                return Err(ParseError::new(
                    pos.0,
                    pos.1,
                    format!("tensor rank {n} is not supported (ranks 1 to 3)"),
                ))
            }
        }
        match cur.peek() {
            Some(Tok::Plus) => {
                cur.next();
                negate = false;
            }
            Some(Tok::Minus) => {
                cur.next();
                negate = true;
            }
            _ => break,
        }
    }

    Ok(match rank.unwrap_or(1) {
        1 => ParsedValue::Element(e1),
        2 => ParsedValue::Tensor2(e2),
        _ => ParsedValue::Tensor3(e3),
    })
}

fn parse_term(spec: &AlgebraSpec, cur: &mut Cursor) -> Result<(Scalar, Vec<BasisKey>), ParseError> {
    let coeff = if matches!(cur.peek(), Some(Tok::Int(_))) {
        let c = parse_rational(cur)?;
        cur.expect(&Tok::Star)?;
        c
    } else {
        scalar::one()
    };
    let mut keys = vec![parse_generator(spec, cur)?];
    while matches!(cur.peek(), Some(Tok::TensorSep)) {
        cur.next();
        keys.push(parse_generator(spec, cur)?);
    }
    Ok((coeff, keys))
}

fn parse_rational(cur: &mut Cursor) -> Result<Scalar, ParseError> {
    let n = match cur.peek() {
        Some(Tok::Int(n)) => *n,
        _ => return Err(cur.error("expected a number")),
    };
    cur.next();
    if matches!(cur.peek(), Some(Tok::Slash)) {
        cur.next();
        match cur.peek() {
            Some(Tok::Int(d)) if *d != 0 => {
                let d = *d;
                cur.next();
                Ok(scalar::ratio(n, d))
            }
            Some(Tok::Int(_)) => Err(cur.error("zero denominator")),
            _ => Err(cur.error("expected a denominator")),
        }
    } else {
        Ok(scalar::int(n))
    }
}

fn parse_generator(spec: &AlgebraSpec, cur: &mut Cursor) -> Result<BasisKey, ParseError> {
    let pos = cur.here();
    let family = match cur.peek() {
        Some(Tok::Ident(s)) => Family::from_name(s)
            .ok_or_else(|| cur.error(format!("unknown generator '{s}'")))?,
        _ => return Err(cur.error("expected a generator")),
    };
    cur.next();
    if !spec.has_family(family) {
        return Err(ParseError::new(
            pos.0,
            pos.1,
            format!("family {family} is not declared by algebra '{}'", spec.name),
        ));
    }
    if family == Family::C {
        return Ok(BasisKey::central());
    }

    cur.expect(&Tok::LParen)?;
    let ipos = cur.here();
    let mut negate = false;
    if matches!(cur.peek(), Some(Tok::Minus)) {
        cur.next();
        negate = true;
    }
    let value = parse_rational(cur)?;
    let value = if negate { -value } else { value };
    cur.expect(&Tok::RParen)?;

    let index = HalfInt::try_from_scalar(&value)
        .ok_or_else(|| ParseError::new(ipos.0, ipos.1, format!("index {value} is not a half-integer")))?;
    BasisKey::new(family, index).map_err(|_| {
        ParseError::new(
            ipos.0,
            ipos.1,
            format!("index {index} is not on the lattice of family {family}"),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::preset;

    #[test]
    fn tensor2_literal() {
        let spec = preset("ns2-central").unwrap();
        let v = parse_element(&spec, "3/2*L(-1) (x) I(2) - G+(1/2) (x) G-(-1/2)").unwrap();
        let ParsedValue::Tensor2(t) = &v else { panic!("expected rank 2") };
        assert_eq!(t.len(), 2);
        assert_eq!(t.to_string(), "3/2*L(-1) (x) I(2) - G+(1/2) (x) G-(-1/2)");
    }

    #[test]
    fn element_literal() {
        let spec = preset("ns2-central").unwrap();
        let v = parse_element(&spec, "L(0)").unwrap();
        assert_eq!(v, ParsedValue::Element(Element::basis(BasisKey::l(0))));
    }

    #[test]
    fn lattice_violation_is_an_error() {
        let spec = preset("ns2-central").unwrap();
        let err = parse_element(&spec, "G+(1)").unwrap_err();
        assert!(err.message.contains("lattice"));
        assert_eq!(err.line, 1);
    }

    #[test]
    fn mixed_ranks_rejected() {
        let spec = preset("ns2-central").unwrap();
        let err = parse_element(&spec, "L(0) + L(1) (x) L(2)").unwrap_err();
        assert!(err.message.contains("mixed tensor ranks"));
    }

    #[test]
    fn zero_literal_coerces() {
        let spec = preset("witt").unwrap();
        let v = parse_element(&spec, "0").unwrap();
        assert_eq!(v.clone().into_tensor2(), Some(Tensor2::zero()));
        assert_eq!(v.into_element(), Some(Element::zero()));
    }

    #[test]
    fn undeclared_family_rejected() {
        let spec = preset("witt").unwrap();
        let err = parse_element(&spec, "I(0)").unwrap_err();
        assert!(err.message.contains("not declared"));
    }

    #[test]
    fn round_trip_through_display() {
        let spec = preset("ns2-central").unwrap();
        let text = "1/3*L(-2) (x) G+(1/2) (x) C - I(0) (x) L(1) (x) L(1)";
        let v = parse_element(&spec, text).unwrap();
        let ParsedValue::Tensor3(t) = v else { panic!("expected rank 3") };
        assert_eq!(t.to_string(), text);
    }
}
