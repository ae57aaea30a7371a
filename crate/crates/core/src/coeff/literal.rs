//! Scalar literal syntax.
//!
//! Integer and fraction literals, `z` for `ζ_M`, the configured
//! transcendental name, named parameters, operators `+ - * / ^` with
//! integer exponents (negative allowed) and parentheses.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::ToPrimitive;

use crate::coeff::{GroundField, Scalar};
use crate::error::{Error, Result};
use crate::lex::{tokenize, Cursor, Tok};

const MAX_EXPONENT: i64 = 4096;

/// Parse a complete scalar literal.
pub fn parse_scalar(
    src: &str,
    field: &Arc<GroundField>,
    params: &BTreeMap<String, Scalar>,
) -> Result<Scalar> {
    let toks = tokenize(src)?;
    let mut cur = Cursor::new(&toks, src.len());
    let v = parse_expr(&mut cur, field, params)?;
    if !cur.at_end() {
        return Err(Error::syntax(cur.pos(), "trailing input after scalar literal"));
    }
    Ok(v)
}

/// Parse a scalar expression starting at the cursor, leaving the cursor on
/// the first token that cannot continue it. Used both standalone and as a
/// sub-parser inside the relation DSL.
pub fn parse_expr(
    cur: &mut Cursor,
    field: &Arc<GroundField>,
    params: &BTreeMap<String, Scalar>,
) -> Result<Scalar> {
    let neg = if cur.eat(&Tok::Minus) {
        true
    } else {
        cur.eat(&Tok::Plus);
        false
    };
    let mut acc = parse_term(cur, field, params)?;
    if neg {
        acc = -&acc;
    }
    loop {
        if cur.eat(&Tok::Plus) {
            let rhs = parse_term(cur, field, params)?;
            acc = &acc + &rhs;
        } else if cur.eat(&Tok::Minus) {
            let rhs = parse_term(cur, field, params)?;
            acc = &acc - &rhs;
        } else {
            return Ok(acc);
        }
    }
}

fn parse_term(
    cur: &mut Cursor,
    field: &Arc<GroundField>,
    params: &BTreeMap<String, Scalar>,
) -> Result<Scalar> {
    let mut acc = parse_factor(cur, field, params)?;
    loop {
        if cur.eat(&Tok::Star) {
            let rhs = parse_factor(cur, field, params)?;
            acc = &acc * &rhs;
        } else if cur.eat(&Tok::Slash) {
            let pos = cur.pos();
            let rhs = parse_factor(cur, field, params)?;
            acc = acc
                .div(&rhs)
                .map_err(|_| Error::syntax(pos, "division by zero in scalar literal"))?;
        } else {
            return Ok(acc);
        }
    }
}

fn parse_factor(
    cur: &mut Cursor,
    field: &Arc<GroundField>,
    params: &BTreeMap<String, Scalar>,
) -> Result<Scalar> {
    let mut base = parse_atom(cur, field, params)?;
    while cur.eat(&Tok::Caret) {
        let pos = cur.pos();
        let e = cur.parse_signed_int()?;
        let e = e
            .to_i64()
            .filter(|e| e.abs() <= MAX_EXPONENT)
            .ok_or_else(|| Error::syntax(pos, "exponent out of range"))?;
        base = base.pow(e).map_err(|_| Error::syntax(pos, "negative power of zero"))?;
    }
    Ok(base)
}

fn parse_atom(
    cur: &mut Cursor,
    field: &Arc<GroundField>,
    params: &BTreeMap<String, Scalar>,
) -> Result<Scalar> {
    let pos = cur.pos();
    match cur.bump().cloned() {
        Some(Tok::Int(n)) => Ok(field.from_bigint(&n)),
        Some(Tok::Ident(name)) => {
            if name == "z" {
                Ok(field.zeta())
            } else if name == field.transcendental() {
                Ok(field.trans())
            } else if let Some(v) = params.get(&name) {
                if !v.field().compatible(field) {
                    return Err(Error::syntax(pos, format!("parameter `{name}` uses a different ground field")));
                }
                Ok(v.clone())
            } else {
                Err(Error::syntax(pos, format!("unknown identifier `{name}` in scalar literal")))
            }
        }
        Some(Tok::Minus) => {
            // Unary minus inside a factor position, e.g. `2 * -3`.
            let v = parse_atom(cur, field, params)?;
            Ok(-&v)
        }
        Some(Tok::LParen) => {
            let v = parse_expr(cur, field, params)?;
            cur.expect(&Tok::RParen, "`)`")?;
            Ok(v)
        }
        _ => Err(Error::syntax(pos, "expected scalar literal")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env() -> (Arc<GroundField>, BTreeMap<String, Scalar>) {
        let k = GroundField::new(3, "t").unwrap();
        let mut params = BTreeMap::new();
        let s = k.one().div(&(&k.zeta() * &k.trans())).unwrap();
        params.insert("s".to_string(), s);
        (k, params)
    }

    #[test]
    fn parses_fractions_and_powers() {
        let (k, p) = env();
        assert_eq!(parse_scalar("3/2", &k, &p).unwrap(), k.from_rational(&num_rational::BigRational::new(3.into(), 2.into())));
        assert_eq!(parse_scalar("t^-2", &k, &p).unwrap(), k.trans().pow(-2).unwrap());
        assert_eq!(parse_scalar("z^2 + z", &k, &p).unwrap(), k.from_int(-1));
        assert_eq!(parse_scalar("(1-t)/(1+t)", &k, &p).unwrap(),
                   (&k.one() - &k.trans()).div(&(&k.one() + &k.trans())).unwrap());
    }

    #[test]
    fn resolves_named_parameters() {
        let (k, p) = env();
        let v = parse_scalar("1/(z*t)", &k, &p).unwrap();
        assert_eq!(parse_scalar("s", &k, &p).unwrap(), v);
        assert_eq!(parse_scalar("z*(1-s)", &k, &p).unwrap(), &k.zeta() * &(&k.one() - &v));
    }

    #[test]
    fn rejects_bad_input_with_position() {
        let (k, p) = env();
        match parse_scalar("1 + q", &k, &p) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse_scalar("1/0", &k, &p).is_err());
        assert!(parse_scalar("2 2", &k, &p).is_err());
    }
}
