//! Parsing and canonical serialization of algebra definitions.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num::{One, Zero};

use crate::algebra::{AlgebraSpec, BracketRule, FamilyDecl, TargetKey, TargetTerm};
use crate::dsl::lex::{tokenize, Cursor, Tok};
use crate::error::ParseError;
use crate::halfint::HalfInt;
use crate::key::Family;
use crate::poly::{IndexPoly, LinForm, MAX_POLY_DEGREE};
use crate::scalar::{self, Scalar};

pub fn parse_spec(text: &str) -> Result<AlgebraSpec, ParseError> {
    let toks = tokenize(text, false)?;
    let mut cur = Cursor::new(toks, text);
    let spec = parse_algebra(&mut cur)?;
    cur.expect_end()?;
    Ok(spec)
}

fn is_reserved(name: &str) -> bool {
    matches!(
        name,
        "L" | "I" | "G" | "G+" | "G-" | "C" | "Z" | "delta" | "algebra" | "generators"
            | "brackets" | "lattice" | "central" | "even" | "odd"
    )
}

fn parse_name(cur: &mut Cursor) -> Result<String, ParseError> {
    // Names may contain '-' between alphanumeric runs, e.g. ns2-central.
    let mut name = match cur.peek() {
        Some(Tok::Ident(s)) => {
            let s = s.clone();
            cur.next();
            s
        }
        _ => return Err(cur.error("expected an algebra name")),
    };
    while matches!(cur.peek(), Some(Tok::Minus)) {
        cur.next();
        match cur.peek() {
            Some(Tok::Ident(s)) => {
                name.push('-');
                name.push_str(s);
                cur.next();
            }
            Some(Tok::Int(n)) => {
                name.push('-');
                let _ = write!(name, "{n}");
                cur.next();
            }
            _ => return Err(cur.error("expected a name fragment after '-'")),
        }
    }
    Ok(name)
}

fn parse_family(cur: &mut Cursor) -> Result<Family, ParseError> {
    match cur.peek() {
        Some(Tok::Ident(s)) => match Family::from_name(s) {
            Some(f) => {
                cur.next();
                Ok(f)
            }
            None => Err(cur.error(format!("unknown family '{s}' (expected L, I, G+, G- or C)"))),
        },
        _ => Err(cur.error("expected a family name")),
    }
}

fn parse_algebra(cur: &mut Cursor) -> Result<AlgebraSpec, ParseError> {
    cur.expect_ident("algebra")?;
    let name = parse_name(cur)?;
    cur.expect(&Tok::LBrace)?;

    cur.expect_ident("generators")?;
    cur.expect(&Tok::LBrace)?;
    let mut decls: Vec<FamilyDecl> = Vec::new();
    let mut seen: BTreeSet<Family> = BTreeSet::new();
    while !matches!(cur.peek(), Some(Tok::RBrace)) {
        let pos = cur.here();
        let decl = parse_generator(cur)?;
        if !seen.insert(decl.family) {
            return Err(ParseError::new(pos.0, pos.1, format!("family {} declared twice", decl.family)));
        }
        decls.push(decl);
    }
    cur.expect(&Tok::RBrace)?;

    cur.expect_ident("brackets")?;
    cur.expect(&Tok::LBrace)?;
    let mut rules: Vec<BracketRule> = Vec::new();
    let mut rule_pairs: BTreeSet<(Family, Family)> = BTreeSet::new();
    while !matches!(cur.peek(), Some(Tok::RBrace)) {
        let pos = cur.here();
        let rule = parse_rule(cur, &seen)?;
        if !rule_pairs.insert((rule.left, rule.right)) {
            return Err(ParseError::new(
                pos.0,
                pos.1,
                format!("duplicate rule for the pair [{}, {}]", rule.left, rule.right),
            ));
        }
        rules.push(rule);
    }
    cur.expect(&Tok::RBrace)?;
    cur.expect(&Tok::RBrace)?;

    Ok(AlgebraSpec::new(name, decls, rules))
}

fn parse_generator(cur: &mut Cursor) -> Result<FamilyDecl, ParseError> {
    let pos = cur.here();
    let family = parse_family(cur)?;
    let var = if family == Family::C {
        String::new()
    } else {
        cur.expect(&Tok::LParen)?;
        let v = match cur.peek() {
            Some(Tok::Ident(s)) => s.clone(),
            _ => return Err(cur.error("expected an index variable")),
        };
        if is_reserved(&v) {
            return Err(cur.error(format!("'{v}' cannot be used as an index variable")));
        }
        cur.next();
        cur.expect(&Tok::RParen)?;
        v
    };
    cur.expect(&Tok::Colon)?;

    let parity_pos = cur.here();
    let parity = match cur.peek() {
        Some(Tok::Ident(s)) if s == "even" => false,
        Some(Tok::Ident(s)) if s == "odd" => true,
        _ => return Err(cur.error("expected 'even' or 'odd'")),
    };
    cur.next();
    if parity != family.parity().is_odd() {
        return Err(ParseError::new(
            parity_pos.0,
            parity_pos.1,
            format!("family {} has {} parity", family, family.parity()),
        ));
    }

    let mut saw_lattice = false;
    let mut saw_central = false;
    while matches!(cur.peek(), Some(Tok::Comma)) {
        cur.next();
        match cur.peek() {
            Some(Tok::Ident(s)) if s == "lattice" => {
                cur.next();
                let lat_pos = cur.here();
                cur.expect_ident("Z")?;
                let mut half = false;
                if matches!(cur.peek(), Some(Tok::Plus)) {
                    cur.next();
                    match (cur.next().map(|t| t.tok), cur.next().map(|t| t.tok), cur.next().map(|t| t.tok)) {
                        (Some(Tok::Int(1)), Some(Tok::Slash), Some(Tok::Int(2))) => half = true,
                        _ => {
                            return Err(ParseError::new(lat_pos.0, lat_pos.1, "expected lattice Z or Z+1/2"))
                        }
                    }
                }
                if family == Family::C {
                    return Err(ParseError::new(lat_pos.0, lat_pos.1, "the central element has no lattice"));
                }
                if half != (family.lattice_parity() == 1) {
                    let want = if family.lattice_parity() == 1 { "Z+1/2" } else { "Z" };
                    return Err(ParseError::new(
                        lat_pos.0,
                        lat_pos.1,
                        format!("family {family} lives on lattice {want}"),
                    ));
                }
                saw_lattice = true;
            }
            Some(Tok::Ident(s)) if s == "central" => {
                let pos = cur.here();
                cur.next();
                if family != Family::C {
                    return Err(ParseError::new(pos.0, pos.1, "only C may be declared central"));
                }
                saw_central = true;
            }
            _ => return Err(cur.error("expected 'lattice' or 'central'")),
        }
    }
    cur.expect(&Tok::Semi)?;

    if family == Family::C && !saw_central {
        return Err(ParseError::new(pos.0, pos.1, "C must be declared central"));
    }
    if family != Family::C && !saw_lattice {
        return Err(ParseError::new(pos.0, pos.1, format!("family {family} needs a lattice declaration")));
    }
    Ok(FamilyDecl { family, var })
}

struct RuleVars {
    left: String,
    right: String,
}

impl RuleVars {
    fn slot(&self, name: &str) -> Option<u8> {
        if name == self.left {
            Some(0)
        } else if name == self.right {
            Some(1)
        } else {
            None
        }
    }
}

fn parse_rule(cur: &mut Cursor, declared: &BTreeSet<Family>) -> Result<BracketRule, ParseError> {
    cur.expect(&Tok::LBracket)?;
    let (left, lvar) = parse_rule_side(cur, declared)?;
    cur.expect(&Tok::Comma)?;
    let (right, rvar) = parse_rule_side(cur, declared)?;
    cur.expect(&Tok::RBracket)?;
    if lvar == rvar {
        return Err(cur.error(format!("the two bound variables must differ (both are '{lvar}')")));
    }
    cur.expect(&Tok::Eq)?;
    let vars = RuleVars { left: lvar, right: rvar };

    let mut targets = Vec::new();
    if matches!(cur.peek(), Some(Tok::Int(0))) && matches!(cur.peek_at(1), Some(Tok::Semi)) {
        cur.next();
    } else {
        let mut negate = false;
        if matches!(cur.peek(), Some(Tok::Minus)) {
            cur.next();
            negate = true;
        }
        loop {
            let term = parse_target_term(cur, &vars, declared, negate)?;
            targets.push(term);
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
    }
    cur.expect(&Tok::Semi)?;

    let rule = BracketRule { left, right, vars: (vars.left, vars.right), targets };
    validate_rule_lattices(&rule)?;
    Ok(rule)
}

fn parse_rule_side(cur: &mut Cursor, declared: &BTreeSet<Family>) -> Result<(Family, String), ParseError> {
    let fpos = cur.here();
    let family = parse_family(cur)?;
    if !declared.contains(&family) {
        return Err(ParseError::new(fpos.0, fpos.1, format!("family {family} is not declared")));
    }
    if family == Family::C {
        return Err(ParseError::new(fpos.0, fpos.1, "the central element cannot appear on the left of a rule"));
    }
    cur.expect(&Tok::LParen)?;
    let var = match cur.peek() {
        Some(Tok::Ident(s)) => s.clone(),
        _ => return Err(cur.error("expected an index variable")),
    };
    if is_reserved(&var) {
        return Err(cur.error(format!("'{var}' cannot be used as an index variable")));
    }
    cur.next();
    cur.expect(&Tok::RParen)?;
    Ok((family, var))
}

/// True when the upcoming tokens start a bracket target: a family name that
/// is either `C` or is followed by `(`.
fn at_target(cur: &Cursor) -> bool {
    match cur.peek() {
        Some(Tok::Ident(s)) => match Family::from_name(s) {
            Some(Family::C) => true,
            Some(_) => matches!(cur.peek_at(1), Some(Tok::LParen)),
            None => false,
        },
        _ => false,
    }
}

fn parse_target_term(
    cur: &mut Cursor,
    vars: &RuleVars,
    declared: &BTreeSet<Family>,
    negate: bool,
) -> Result<TargetTerm, ParseError> {
    let mut coeff = if at_target(cur) {
        IndexPoly::one()
    } else if matches!(cur.peek(), Some(Tok::LParen)) {
        cur.next();
        let p = parse_poly_sum(cur, vars)?;
        cur.expect(&Tok::RParen)?;
        cur.expect(&Tok::Star)?;
        p
    } else {
        // a single bare monomial followed by '*' target
        let pos = cur.here();
        let mono = parse_monomial(cur, vars, true)?;
        if !at_target(cur) {
            return Err(ParseError::new(
                pos.0,
                pos.1,
                "expected a bracket target after the coefficient (sums of monomials need parentheses)",
            ));
        }
        mono
    };
    if negate {
        coeff = negated_poly(&coeff);
    }

    let tpos = cur.here();
    let family = parse_family(cur)?;
    if !declared.contains(&family) {
        return Err(ParseError::new(tpos.0, tpos.1, format!("family {family} is not declared")));
    }
    let target = if family == Family::C {
        TargetKey::Central
    } else {
        cur.expect(&Tok::LParen)?;
        let form = parse_linform(cur, vars)?;
        cur.expect(&Tok::RParen)?;
        TargetKey::Key(family, form)
    };

    let delta = if matches!(cur.peek(), Some(Tok::Ident(s)) if s == "delta") {
        cur.next();
        cur.expect(&Tok::LParen)?;
        let form = parse_linform(cur, vars)?;
        cur.expect(&Tok::RParen)?;
        Some(form)
    } else {
        None
    };

    Ok(TargetTerm { coeff, target, delta })
}

fn negated_poly(p: &IndexPoly) -> IndexPoly {
    let mut out = IndexPoly::zero();
    // rebuild through render-free arithmetic: scale every monomial by -1
    for (exps, c) in poly_monomials(p) {
        out.add_monomial(exps.0, exps.1, -c);
    }
    out
}

fn poly_monomials(p: &IndexPoly) -> Vec<((u8, u8), Scalar)> {
    // IndexPoly has no public iterator; evaluate structure via its render
    // would be fragile, so expose through a crate-internal helper instead.
    p.monomials()
}

fn parse_rational(cur: &mut Cursor) -> Result<Scalar, ParseError> {
    let n = match cur.peek() {
        Some(Tok::Int(n)) => *n,
        _ => return Err(cur.error("expected a number")),
    };
    cur.next();
    if matches!(cur.peek(), Some(Tok::Slash)) {
        cur.next();
        let d = match cur.peek() {
            Some(Tok::Int(d)) if *d != 0 => *d,
            Some(Tok::Int(_)) => return Err(cur.error("zero denominator")),
            _ => return Err(cur.error("expected a denominator")),
        };
        cur.next();
        Ok(scalar::ratio(n, d))
    } else {
        Ok(scalar::int(n))
    }
}

/// Parses a sum of monomials up to the closing parenthesis.
fn parse_poly_sum(cur: &mut Cursor, vars: &RuleVars) -> Result<IndexPoly, ParseError> {
    let mut out = IndexPoly::zero();
    let mut negate = false;
    if matches!(cur.peek(), Some(Tok::Minus)) {
        cur.next();
        negate = true;
    }
    loop {
        let mono = parse_monomial(cur, vars, false)?;
        let mono = if negate { negated_poly(&mono) } else { mono };
        for (exps, c) in poly_monomials(&mono) {
            out.add_monomial(exps.0, exps.1, c);
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
    Ok(out)
}

/// Parses one monomial: `rational`, `var^k`, `rational*var`, `m*n^2`, ...
/// When `stop_at_target` is set, a `*` followed by a family target ends the
/// monomial (with the `*` consumed).
fn parse_monomial(cur: &mut Cursor, vars: &RuleVars, stop_at_target: bool) -> Result<IndexPoly, ParseError> {
    let mut coeff = scalar::one();
    let mut exps = (0u8, 0u8);
    let mut saw_factor = false;

    if matches!(cur.peek(), Some(Tok::Int(_))) {
        coeff = parse_rational(cur)?;
        saw_factor = true;
        if matches!(cur.peek(), Some(Tok::Star)) {
            if stop_at_target {
                // peek past '*': a family target stops the monomial
                let mut probe = 1;
                let at_fam = matches!(cur.peek_at(probe), Some(Tok::Ident(s)) if Family::from_name(s).is_some());
                if at_fam {
                    probe += 1;
                    let is_c = matches!(cur.peek_at(1), Some(Tok::Ident(s)) if s == "C");
                    if is_c || matches!(cur.peek_at(probe), Some(Tok::LParen)) {
                        cur.next();
                        return finish_monomial(cur, coeff, exps);
                    }
                }
            }
            cur.next();
        } else {
            return finish_monomial(cur, coeff, exps);
        }
    }

    loop {
        let pos = cur.here();
        let var = match cur.peek() {
            Some(Tok::Ident(s)) => s.clone(),
            _ if saw_factor => return Err(cur.error("expected an index variable")),
            _ => return Err(cur.error("expected a coefficient or an index variable")),
        };
        let slot = vars
            .slot(&var)
            .ok_or_else(|| ParseError::new(pos.0, pos.1, format!("unknown index variable '{var}'")))?;
        cur.next();
        saw_factor = true;
        let mut exp = 1u8;
        if matches!(cur.peek(), Some(Tok::Caret)) {
            cur.next();
            match cur.peek() {
                Some(Tok::Int(e)) if (1..=MAX_POLY_DEGREE as i64).contains(e) => {
                    exp = *e as u8;
                    cur.next();
                }
                Some(Tok::Int(_)) => {
                    return Err(cur.error(format!("exponent must be between 1 and {MAX_POLY_DEGREE}")))
                }
                _ => return Err(cur.error("expected an exponent")),
            }
        }
        if slot == 0 {
            exps.0 += exp;
        } else {
            exps.1 += exp;
        }
        if exps.0 + exps.1 > MAX_POLY_DEGREE {
            return Err(ParseError::new(
                pos.0,
                pos.1,
                format!("coefficient degree exceeds the cap of {MAX_POLY_DEGREE}"),
            ));
        }

        if matches!(cur.peek(), Some(Tok::Star)) {
            if stop_at_target {
                let at_fam_target = match cur.peek_at(1) {
                    Some(Tok::Ident(s)) => match Family::from_name(s) {
                        Some(Family::C) => true,
                        Some(_) => matches!(cur.peek_at(2), Some(Tok::LParen)),
                        None => false,
                    },
                    _ => false,
                };
                if at_fam_target {
                    cur.next();
                    break;
                }
            }
            cur.next();
            continue;
        }
        break;
    }
    finish_monomial(cur, coeff, exps)
}

fn finish_monomial(_cur: &Cursor, coeff: Scalar, exps: (u8, u8)) -> Result<IndexPoly, ParseError> {
    let mut p = IndexPoly::zero();
    p.add_monomial(exps.0, exps.1, coeff);
    Ok(p)
}

/// Parses a linear form in the bound variables with half-integer coefficients.
fn parse_linform(cur: &mut Cursor, vars: &RuleVars) -> Result<LinForm, ParseError> {
    let mut form = LinForm::zero();
    let mut negate = false;
    if matches!(cur.peek(), Some(Tok::Minus)) {
        cur.next();
        negate = true;
    }
    loop {
        let pos = cur.here();
        let mut coeff = scalar::one();
        let mut var: Option<String> = None;
        match cur.peek() {
            Some(Tok::Int(_)) => {
                coeff = parse_rational(cur)?;
                if matches!(cur.peek(), Some(Tok::Star)) {
                    cur.next();
                    match cur.peek() {
                        Some(Tok::Ident(s)) => {
                            var = Some(s.clone());
                            cur.next();
                        }
                        _ => return Err(cur.error("expected an index variable")),
                    }
                }
            }
            Some(Tok::Ident(s)) => {
                var = Some(s.clone());
                cur.next();
            }
            _ => return Err(cur.error("expected a linear form")),
        }
        if negate {
            coeff = -coeff;
        }
        match var {
            None => form.constant += coeff,
            Some(v) => {
                let slot = vars
                    .slot(&v)
                    .ok_or_else(|| ParseError::new(pos.0, pos.1, format!("unknown index variable '{v}'")))?;
                if slot == 0 {
                    form.left += coeff;
                } else {
                    form.right += coeff;
                }
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
    if !form.is_half_integral() {
        return Err(cur.error("linear form coefficients must be half-integers"));
    }
    Ok(form)
}

/// Every target index form must land on the target family's lattice for all
/// index assignments permitted by the delta condition. Linear forms over the
/// doubled-index lattices are periodic mod 4, so an exhaustive scan of a
/// small grid decides this exactly.
fn validate_rule_lattices(rule: &BracketRule) -> Result<(), ParseError> {
    let grid = |fam: Family| -> Vec<HalfInt> {
        let par = fam.lattice_parity();
        (-9i64..=9).filter(|d| d.rem_euclid(2) == par).map(HalfInt::from_doubled).collect()
    };
    for term in &rule.targets {
        let TargetKey::Key(target_family, form) = &term.target else {
            continue;
        };
        for &lv in &grid(rule.left) {
            for &rv in &grid(rule.right) {
                if let Some(delta) = &term.delta {
                    if !delta.eval(lv, rv).is_zero() {
                        continue;
                    }
                }
                if term.coeff.eval(lv, rv).is_zero() {
                    continue;
                }
                let ok = form
                    .eval_half(lv, rv)
                    .map(|h| h.doubled().rem_euclid(2) == target_family.lattice_parity())
                    .unwrap_or(false);
                if !ok {
                    return Err(ParseError::new(
                        1,
                        1,
                        format!(
                            "target {}({}) leaves its index lattice at {}={}, {}={}",
                            target_family,
                            form.render((&rule.vars.0, &rule.vars.1)),
                            rule.vars.0,
                            lv,
                            rule.vars.1,
                            rv
                        ),
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Canonical text form; `parse_spec . serialize_spec` is the identity and
/// serialization is idempotent.
pub fn serialize_spec(spec: &AlgebraSpec) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebra {} {{", spec.name);
    let _ = writeln!(out, "  generators {{");
    for decl in spec.families() {
        match decl.family {
            Family::C => {
                let _ = writeln!(out, "    C: even, central;");
            }
            f => {
                let lattice = if f.lattice_parity() == 1 { "Z+1/2" } else { "Z" };
                let _ = writeln!(out, "    {}({}): {}, lattice {};", f, decl.var, f.parity(), lattice);
            }
        }
    }
    let _ = writeln!(out, "  }}");
    let _ = writeln!(out, "  brackets {{");
    let mut rules: Vec<&BracketRule> = spec.rules().iter().collect();
    rules.sort_by_key(|r| (r.left, r.right));
    for rule in rules {
        let _ = writeln!(out, "    {};", render_rule(rule));
    }
    let _ = writeln!(out, "  }}");
    let _ = writeln!(out, "}}");
    out
}

fn render_rule(rule: &BracketRule) -> String {
    let vars = (rule.vars.0.as_str(), rule.vars.1.as_str());
    let mut out = format!(
        "[{}({}), {}({})] = ",
        rule.left, rule.vars.0, rule.right, rule.vars.1
    );
    if rule.targets.is_empty() {
        out.push('0');
        return out;
    }
    for (n, term) in rule.targets.iter().enumerate() {
        let (neg, body) = render_term(term, vars);
        if n == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

/// Renders one target term, splitting off a leading minus sign when the
/// coefficient is a single negative monomial.
fn render_term(term: &TargetTerm, vars: (&str, &str)) -> (bool, String) {
    let mut body = String::new();
    let mut neg = false;
    let single = term.coeff.monomial_count() == 1;
    if single {
        let (exps, c) = term.coeff.monomials().into_iter().next().unwrap();
        let negative = scalar::is_negative(&c);
        let mag = if negative { -c } else { c };
        neg = negative;
        let mut mono = IndexPoly::zero();
        mono.add_monomial(exps.0, exps.1, mag.clone());
        if !(mag.is_one() && exps == (0, 0)) {
            body.push_str(&mono.render(vars));
            body.push('*');
        }
    } else {
        body.push('(');
        body.push_str(&term.coeff.render(vars));
        body.push_str(")*");
    }
    match &term.target {
        TargetKey::Central => body.push('C'),
        TargetKey::Key(f, form) => {
            let _ = write!(body, "{}({})", f, form.render(vars));
        }
    }
    if let Some(delta) = &term.delta {
        let _ = write!(body, " delta({})", delta.render(vars));
    }
    (neg, body)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::preset;

    #[test]
    fn witt_parses_and_serializes() {
        let text = "algebra witt { generators { L(m): even, lattice Z; } brackets { [L(m), L(n)] = (m-n)*L(m+n); } }";
        let spec = parse_spec(text).unwrap();
        let canon = serialize_spec(&spec);
        assert!(canon.contains("(m-n)*L(m+n)"));
        let reparsed = parse_spec(&canon).unwrap();
        assert_eq!(spec, reparsed);
        assert_eq!(serialize_spec(&reparsed), canon);
    }

    #[test]
    fn malformed_index_form_is_a_positioned_error() {
        let text = "algebra w {\n  generators { L(m): even, lattice Z; }\n  brackets { [L(m), L(n)] = (m-n)*L(m+) }\n}";
        let err = parse_spec(text).unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.col > 0);
    }

    #[test]
    fn duplicate_rule_rejected() {
        let text = "algebra w { generators { L(m): even, lattice Z; } brackets { [L(m), L(n)] = 0; [L(a), L(b)] = 0; } }";
        let err = parse_spec(text).unwrap_err();
        assert!(err.message.contains("duplicate rule"));
    }

    #[test]
    fn lattice_mismatch_rejected() {
        // G+ target fed an integer-lattice form
        let text = "algebra w { generators { L(m): even, lattice Z; G+(r): odd, lattice Z+1/2; } brackets { [L(m), L(n)] = G+(m+n); } }";
        let err = parse_spec(text).unwrap_err();
        assert!(err.message.contains("lattice"));
    }

    #[test]
    fn preset_round_trips_rule_by_rule() {
        let spec = preset("ns2-central").unwrap();
        let canon = serialize_spec(&spec);
        let reparsed = parse_spec(&canon).unwrap();
        assert_eq!(spec, reparsed);
        // delta-conditioned central pairing survives the round trip
        assert!(canon.contains("1/3*m*C delta(m+n)"));
    }
}
