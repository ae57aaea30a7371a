//! Relation expression DSL.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := scalar? factor+
//! factor := 'x' '(' int (',' int)* ')'
//!         | '[' expr ',' expr ']'
//!         | 'ad' '(' int ';' expr ')' ('^' int)?
//!         | '(' expr ')'
//!         | factor '^' int
//! ```
//!
//! Scalars follow the coefficient-field literal syntax; the shorthand
//! `x(i1,…,ik)` means the iterated left adjoint `ad(i1; ad(i2; … x(ik)))`.
//! The exponent directly on an `ad(…)` form counts adjoint iterations;
//! parenthesize to take a multiplicative power instead.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::braiding::BraidingMatrix;
use crate::coeff::{literal, GroundField, Scalar};
use crate::error::{Error, Result};
use crate::lex::{tokenize, Cursor, Tok};

use super::{ad_power, braided_commutator, FreeElement};

/// Abstract syntax of a relation expression. Generator indices are stored
/// 0-based; the surface syntax is 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelExpr {
    /// `x(i)`.
    Gen(usize),
    /// `x(i1,…,ik)` with `k ≥ 2`: iterated left adjoint.
    IterAd(Vec<usize>),
    /// `[e1, e2]` braided commutator.
    Commutator(Box<RelExpr>, Box<RelExpr>),
    /// `ad(i; e)^n`.
    AdPow { vertex: usize, arg: Box<RelExpr>, n: u32 },
    /// `e^n` multiplicative power.
    Pow(Box<RelExpr>, u32),
    /// Juxtaposed factors: the concatenation product.
    Product(Box<RelExpr>, Box<RelExpr>),
    /// Scalar multiple.
    Scaled(Scalar, Box<RelExpr>),
    /// Signed sum; `true` means subtracted.
    Sum(Vec<(bool, RelExpr)>),
}

impl RelExpr {
    pub fn gen1(index_one_based: usize) -> RelExpr {
        RelExpr::Gen(index_one_based - 1)
    }

    pub fn iter_ad1(indices_one_based: &[usize]) -> RelExpr {
        if indices_one_based.len() == 1 {
            return RelExpr::gen1(indices_one_based[0]);
        }
        RelExpr::IterAd(indices_one_based.iter().map(|&i| i - 1).collect())
    }

    pub fn commutator(l: RelExpr, r: RelExpr) -> RelExpr {
        RelExpr::Commutator(Box::new(l), Box::new(r))
    }

    pub fn product(l: RelExpr, r: RelExpr) -> RelExpr {
        RelExpr::Product(Box::new(l), Box::new(r))
    }

    pub fn pow(self, n: u32) -> RelExpr {
        RelExpr::Pow(Box::new(self), n)
    }

    pub fn scaled(self, c: Scalar) -> RelExpr {
        RelExpr::Scaled(c, Box::new(self))
    }

    pub fn sum(terms: Vec<(bool, RelExpr)>) -> RelExpr {
        RelExpr::Sum(terms)
    }

    /// JSON rendering of the AST (indices 1-based).
    pub fn to_json(&self) -> Value {
        match self {
            RelExpr::Gen(i) => json!({"kind": "gen", "index": i + 1}),
            RelExpr::IterAd(v) => json!({
                "kind": "iterated-ad",
                "indices": v.iter().map(|&i| i + 1).collect::<Vec<_>>(),
            }),
            RelExpr::Commutator(l, r) => json!({
                "kind": "commutator",
                "left": l.to_json(),
                "right": r.to_json(),
            }),
            RelExpr::AdPow { vertex, arg, n } => json!({
                "kind": "ad-power",
                "vertex": vertex + 1,
                "n": n,
                "arg": arg.to_json(),
            }),
            RelExpr::Pow(e, n) => json!({"kind": "power", "n": n, "base": e.to_json()}),
            RelExpr::Product(l, r) => json!({
                "kind": "product",
                "left": l.to_json(),
                "right": r.to_json(),
            }),
            RelExpr::Scaled(c, e) => json!({
                "kind": "scaled",
                "coeff": c.literal(),
                "arg": e.to_json(),
            }),
            RelExpr::Sum(terms) => json!({
                "kind": "sum",
                "terms": terms
                    .iter()
                    .map(|(neg, e)| json!({"sign": if *neg { "-" } else { "+" }, "term": e.to_json()}))
                    .collect::<Vec<_>>(),
            }),
        }
    }
}

impl fmt::Display for RelExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelExpr::Gen(i) => write!(f, "x({})", i + 1),
            RelExpr::IterAd(v) => {
                let inner =
                    v.iter().map(|&i| (i + 1).to_string()).collect::<Vec<_>>().join(",");
                write!(f, "x({inner})")
            }
            RelExpr::Commutator(l, r) => write!(f, "[{l}, {r}]"),
            RelExpr::AdPow { vertex, arg, n } => {
                if *n == 1 {
                    write!(f, "ad({}; {})", vertex + 1, arg)
                } else {
                    write!(f, "ad({}; {})^{}", vertex + 1, arg, n)
                }
            }
            RelExpr::Pow(e, n) => match **e {
                RelExpr::Gen(_) | RelExpr::IterAd(_) | RelExpr::Commutator(..) => {
                    write!(f, "{e}^{n}")
                }
                _ => write!(f, "({e})^{n}"),
            },
            RelExpr::Product(l, r) => {
                let wrap = |e: &RelExpr| matches!(e, RelExpr::Sum(_) | RelExpr::Scaled(..));
                if wrap(l) {
                    write!(f, "({l}) ")?;
                } else {
                    write!(f, "{l} ")?;
                }
                if wrap(r) {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
            RelExpr::Scaled(c, e) => write!(f, "({}) {}", c.literal(), e),
            RelExpr::Sum(terms) => {
                for (k, (neg, e)) in terms.iter().enumerate() {
                    if k == 0 {
                        if *neg {
                            write!(f, "-")?;
                        }
                    } else {
                        write!(f, " {} ", if *neg { "-" } else { "+" })?;
                    }
                    // Sums never nest unparenthesized in generated output.
                    match e {
                        RelExpr::Sum(_) => write!(f, "({e})")?,
                        _ => write!(f, "{e}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

/// Parse a relation expression. Scalar literals are evaluated against the
/// ground field and the named parameters during the parse.
pub fn parse_rel_expr(
    src: &str,
    field: &Arc<GroundField>,
    params: &BTreeMap<String, Scalar>,
) -> Result<RelExpr> {
    let toks = tokenize(src)?;
    let mut cur = Cursor::new(&toks, src.len());
    let e = parse_expr(&mut cur, field, params)?;
    if !cur.at_end() {
        return Err(Error::syntax(cur.pos(), "trailing input after expression"));
    }
    Ok(e)
}

fn parse_expr(
    cur: &mut Cursor,
    field: &Arc<GroundField>,
    params: &BTreeMap<String, Scalar>,
) -> Result<RelExpr> {
    let mut terms = Vec::new();
    let mut neg = cur.eat(&Tok::Minus);
    loop {
        terms.push((neg, parse_term(cur, field, params)?));
        if cur.eat(&Tok::Plus) {
            neg = false;
        } else if cur.eat(&Tok::Minus) {
            neg = true;
        } else {
            break;
        }
    }
    if terms.len() == 1 && !terms[0].0 {
        Ok(terms.pop().unwrap().1)
    } else {
        Ok(RelExpr::Sum(terms))
    }
}

fn starts_factor(tok: Option<&Tok>) -> bool {
    match tok {
        Some(Tok::Ident(name)) => name == "x" || name == "ad",
        Some(Tok::LBracket) | Some(Tok::LParen) => true,
        _ => false,
    }
}

fn parse_term(
    cur: &mut Cursor,
    field: &Arc<GroundField>,
    params: &BTreeMap<String, Scalar>,
) -> Result<RelExpr> {
    // Optional scalar coefficient: attempt a scalar parse and keep it only
    // when a factor follows; otherwise backtrack.
    let save = cur.clone();
    let coeff = match literal::parse_expr(cur, field, params) {
        Ok(c) if starts_factor(cur.peek()) => Some(c),
        _ => {
            *cur = save;
            None
        }
    };
    let mut factors = Vec::new();
    while starts_factor(cur.peek()) {
        factors.push(parse_factor(cur, field, params)?);
    }
    if factors.is_empty() {
        return Err(Error::syntax(cur.pos(), "expected a factor (x(…), [,], ad(…) or parentheses)"));
    }
    let mut acc = factors.remove(0);
    for f in factors {
        acc = RelExpr::product(acc, f);
    }
    Ok(match coeff {
        Some(c) => acc.scaled(c),
        None => acc,
    })
}

fn parse_factor(
    cur: &mut Cursor,
    field: &Arc<GroundField>,
    params: &BTreeMap<String, Scalar>,
) -> Result<RelExpr> {
    let pos = cur.pos();
    let base = match cur.bump().cloned() {
        Some(Tok::Ident(name)) if name == "x" => {
            cur.expect(&Tok::LParen, "`(` after x")?;
            let mut indices = vec![parse_index(cur)?];
            while cur.eat(&Tok::Comma) {
                indices.push(parse_index(cur)?);
            }
            cur.expect(&Tok::RParen, "`)`")?;
            if indices.len() == 1 {
                RelExpr::Gen(indices[0])
            } else {
                RelExpr::IterAd(indices)
            }
        }
        Some(Tok::Ident(name)) if name == "ad" => {
            cur.expect(&Tok::LParen, "`(` after ad")?;
            let vertex = parse_index(cur)?;
            cur.expect(&Tok::Semi, "`;` between vertex and argument")?;
            let arg = parse_expr(cur, field, params)?;
            cur.expect(&Tok::RParen, "`)`")?;
            let n = if cur.eat(&Tok::Caret) { parse_exponent(cur)? } else { 1 };
            return Ok(RelExpr::AdPow { vertex, arg: Box::new(arg), n });
        }
        Some(Tok::LBracket) => {
            let l = parse_expr(cur, field, params)?;
            cur.expect(&Tok::Comma, "`,` between commutator arguments")?;
            let r = parse_expr(cur, field, params)?;
            cur.expect(&Tok::RBracket, "`]`")?;
            RelExpr::commutator(l, r)
        }
        Some(Tok::LParen) => {
            let e = parse_expr(cur, field, params)?;
            cur.expect(&Tok::RParen, "`)`")?;
            e
        }
        _ => return Err(Error::syntax(pos, "expected a factor")),
    };
    if cur.eat(&Tok::Caret) {
        let n = parse_exponent(cur)?;
        Ok(base.pow(n))
    } else {
        Ok(base)
    }
}

fn parse_index(cur: &mut Cursor) -> Result<usize> {
    let pos = cur.pos();
    match cur.bump().cloned() {
        Some(Tok::Int(n)) => {
            let v = n
                .to_usize()
                .filter(|&v| v >= 1)
                .ok_or_else(|| Error::syntax(pos, "generator index must be a positive integer"))?;
            Ok(v - 1)
        }
        _ => Err(Error::syntax(pos, "expected a generator index")),
    }
}

fn parse_exponent(cur: &mut Cursor) -> Result<u32> {
    let pos = cur.pos();
    match cur.bump().cloned() {
        Some(Tok::Int(n)) => n
            .to_u32()
            .filter(|&v| v <= 64)
            .ok_or_else(|| Error::syntax(pos, "exponent out of range (0..=64)")),
        _ => Err(Error::syntax(pos, "expected a nonnegative integer exponent")),
    }
}

/// Evaluate against a braiding; every node must come out homogeneous.
pub fn eval_rel_expr(expr: &RelExpr, q: &BraidingMatrix) -> Result<FreeElement> {
    let theta = q.theta();
    let value = match expr {
        RelExpr::Gen(i) => FreeElement::generator(q, *i)?,
        RelExpr::IterAd(v) => {
            for &i in v {
                if i >= theta {
                    return Err(Error::IndexOutOfRange { index: i + 1, theta });
                }
            }
            let mut acc = FreeElement::generator(q, *v.last().unwrap())?;
            for &i in v[..v.len() - 1].iter().rev() {
                let xi = FreeElement::generator(q, i)?;
                acc = braided_commutator(q, &xi, &acc)?;
            }
            acc
        }
        RelExpr::Commutator(l, r) => {
            let lv = eval_rel_expr(l, q)?;
            let rv = eval_rel_expr(r, q)?;
            braided_commutator(q, &lv, &rv)?
        }
        RelExpr::AdPow { vertex, arg, n } => {
            if *vertex >= theta {
                return Err(Error::IndexOutOfRange { index: vertex + 1, theta });
            }
            let v = eval_rel_expr(arg, q)?;
            ad_power(q, *vertex, &v, *n)?
        }
        RelExpr::Pow(e, n) => eval_rel_expr(e, q)?.pow(q, *n),
        RelExpr::Scaled(c, e) => {
            if !c.field().compatible(q.field()) {
                return Err(Error::FieldMismatch(
                    "scalar coefficient from a different ground field".into(),
                ));
            }
            eval_rel_expr(e, q)?.scale(c)
        }
        RelExpr::Sum(terms) => {
            let mut acc = FreeElement::zero();
            for (neg, e) in terms {
                let v = eval_rel_expr(e, q)?;
                acc = if *neg { acc.sub(&v) } else { acc.add(&v) };
            }
            acc
        }
        RelExpr::Product(l, r) => {
            let lv = eval_rel_expr(l, q)?;
            let rv = eval_rel_expr(r, q)?;
            lv.multiply(&rv)
        }
    };
    value.homogeneous_degree(theta)?;
    Ok(value)
}
