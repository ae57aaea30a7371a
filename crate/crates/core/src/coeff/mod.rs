//! Exact arithmetic in the coefficient field `K = Q(ζ_M)(t)`.
//!
//! `ζ_M` is a primitive `M`-th root of unity (`M = 1` means plain
//! rationals) and `t` is a single transcendental. Every scalar is kept in
//! canonical form: ζ-coordinates reduced modulo `Φ_M`, the fraction
//! gcd-reduced and the denominator monic, so equality is structural.

mod cyclotomic;
pub mod literal;
mod poly;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub(crate) use cyclotomic::Cyc;
use cyclotomic::{cyc_inv, cyc_mul, cyclotomic_polynomial, rational_literal};
use poly::{poly_divrem, poly_gcd, poly_monic, poly_mul, Poly};

/// The ground field `Q(ζ_M)(t)`: cyclotomic order plus the name of the
/// transcendental. Shared behind an [`Arc`] by every scalar built over it.
#[derive(Debug)]
pub struct GroundField {
    m: u32,
    transcendental: String,
    phi: Vec<BigRational>,
    dim: usize,
}

impl PartialEq for GroundField {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.transcendental == other.transcendental
    }
}

impl Eq for GroundField {}

impl GroundField {
    /// `M ≥ 1`; `M = 1` yields plain rationals (`ζ_1 = 1`).
    pub fn new(m: u32, transcendental: &str) -> Result<Arc<Self>> {
        if m < 1 {
            return Err(Error::InvalidParameter("cyclotomic order M must be ≥ 1".into()));
        }
        let name = transcendental.trim();
        let ok = !name.is_empty()
            && name.chars().next().unwrap().is_ascii_alphabetic()
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            && name != "z"
            && name != "x"
            && name != "ad"
            && name != "inf";
        if !ok {
            return Err(Error::InvalidParameter(format!(
                "invalid transcendental name `{transcendental}` (reserved or not an identifier)"
            )));
        }
        let phi = cyclotomic_polynomial(m);
        let dim = phi.len() - 1;
        Ok(Arc::new(GroundField { m, transcendental: name.to_string(), phi, dim }))
    }

    /// Plain rationals adjoined with one transcendental.
    pub fn rationals(transcendental: &str) -> Result<Arc<Self>> {
        GroundField::new(1, transcendental)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn transcendental(&self) -> &str {
        &self.transcendental
    }

    /// Fields are interchangeable iff the cyclotomic order matches; the
    /// transcendental name is display-only.
    pub fn compatible(&self, other: &GroundField) -> bool {
        self.m == other.m
    }

    pub fn zero(self: &Arc<Self>) -> Scalar {
        Scalar { field: self.clone(), num: Poly::zero(), den: Poly::one(self.dim) }
    }

    pub fn one(self: &Arc<Self>) -> Scalar {
        Scalar { field: self.clone(), num: Poly::one(self.dim), den: Poly::one(self.dim) }
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(self: &Arc<Self>, n: &BigInt) -> Scalar {
        self.from_rational(&BigRational::from_integer(n.clone()))
    }

    pub fn from_rational(self: &Arc<Self>, r: &BigRational) -> Scalar {
        Scalar {
            field: self.clone(),
            num: Poly::constant(Cyc::from_rational(self.dim, r.clone())),
            den: Poly::one(self.dim),
        }
    }

    /// The class of `ζ_M` (for `M = 1` this is `1`, for `M = 2` it is `−1`).
    pub fn zeta(self: &Arc<Self>) -> Scalar {
        let c = cyclotomic::reduce(&self.phi, vec![BigRational::zero(), BigRational::one()]);
        Scalar { field: self.clone(), num: Poly::constant(c), den: Poly::one(self.dim) }
    }

    /// The transcendental `t`.
    pub fn trans(self: &Arc<Self>) -> Scalar {
        Scalar { field: self.clone(), num: Poly::var(self.dim), den: Poly::one(self.dim) }
    }

    fn make(self: &Arc<Self>, num: Poly, den: Poly) -> Scalar {
        assert!(!den.is_zero(), "denominator must be nonzero");
        if num.is_zero() {
            return self.zero();
        }
        let g = poly_gcd(&self.phi, &num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            let (n, rn) = poly_divrem(&self.phi, &num, &g);
            let (d, rd) = poly_divrem(&self.phi, &den, &g);
            debug_assert!(rn.is_zero() && rd.is_zero());
            (n, d)
        };
        // Normalize the denominator to leading coefficient 1.
        let lead = den.leading().unwrap().clone();
        if lead.is_one() {
            Scalar { field: self.clone(), num, den }
        } else {
            let inv = cyc_inv(&self.phi, &lead).unwrap();
            let num = Poly(num.0.iter().map(|c| cyc_mul(&self.phi, c, &inv)).collect());
            let den = poly_monic(&self.phi, &den);
            Scalar { field: self.clone(), num, den }
        }
    }
}

/// Element of `Q(ζ_M)(t)` in canonical form.
#[derive(Debug, Clone)]
pub struct Scalar {
    field: Arc<GroundField>,
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn field(&self) -> &Arc<GroundField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Constant means: no occurrence of the transcendental.
    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.degree().map(|d| d == 0).unwrap_or(true)
    }

    /// `max(deg num, deg den)`; 0 for constants and for zero.
    pub fn total_degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    fn check_compat(&self, other: &Scalar) {
        assert!(
            self.field.compatible(&other.field),
            "scalars from incompatible ground fields (M = {} vs M = {})",
            self.field.m,
            other.field.m
        );
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.field.make(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Scalar> {
        if e == 0 {
            return Ok(self.field.one());
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = self.field.one();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Exact multiplicative order, when the scalar is a root of unity.
    ///
    /// Constants are scanned up to the order of the torsion group of
    /// `Q(ζ_M)` (that is `M`, or `2M` when `M` is odd), so any root of
    /// unity living in the field is detected exactly; anything involving
    /// `t`, and any non-root constant, reports `None`.
    pub fn multiplicative_order(&self) -> Result<Option<u32>> {
        if self.is_zero() {
            return Err(Error::InvalidOperand("zero has no multiplicative order".into()));
        }
        if !self.is_constant() {
            return Ok(None);
        }
        let m = self.field.m;
        let bound = if m % 2 == 1 { 2 * m } else { m };
        let one = self.field.one();
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc == one {
                return Ok(Some(k));
            }
            acc = &acc * self;
        }
        Ok(None)
    }

    /// Stable text form, re-parseable through the scalar literal grammar.
    pub fn literal(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let t = self.field.transcendental();
        if self.den.is_one() {
            poly_literal(&self.num, t)
        } else {
            format!("({})/({})", poly_literal(&self.num, t), poly_literal(&self.den, t))
        }
    }

    fn key(&self) -> (u32, &Poly, &Poly) {
        (self.field.m, &self.num, &self.den)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_compat(rhs);
        let phi = &self.field.phi;
        let num = poly_mul(phi, &self.num, &rhs.den).add(&poly_mul(phi, &rhs.num, &self.den));
        let den = poly_mul(phi, &self.den, &rhs.den);
        self.field.make(num, den)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_compat(rhs);
        let phi = &self.field.phi;
        let num = poly_mul(phi, &self.num, &rhs.num);
        let den = poly_mul(phi, &self.den, &rhs.den);
        self.field.make(num, den)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { field: self.field.clone(), num: self.num.neg(), den: self.den.clone() }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.literal())
    }
}

fn cyc_literal(c: &Cyc) -> (String, bool) {
    // Returns the rendered coefficient and whether it is atomic (safe to
    // embed in a product without parentheses).
    let terms: Vec<(usize, &BigRational)> =
        c.0.iter().enumerate().filter(|(_, r)| !r.is_zero()).collect();
    if terms.is_empty() {
        return ("0".to_string(), true);
    }
    let mut out = String::new();
    for (n, (k, r)) in terms.iter().enumerate() {
        let mag = r.abs();
        let body = match (*k, mag.is_one()) {
            (0, _) => rational_literal(&mag),
            (1, true) => "z".to_string(),
            (1, false) => format!("{}*z", rational_literal(&mag)),
            (_, true) => format!("z^{k}"),
            (_, false) => format!("{}*z^{k}", rational_literal(&mag)),
        };
        if n == 0 {
            if r.is_negative() {
                out.push('-');
            }
            out.push_str(&body);
        } else if r.is_negative() {
            out.push_str(" - ");
            out.push_str(&body);
        } else {
            out.push_str(" + ");
            out.push_str(&body);
        }
    }
    let atomic = terms.len() == 1 && !terms[0].1.is_negative() && {
        let (k, r) = terms[0];
        k == 0 || r.is_one() // "3/2", "z", "z^2" but not "3*z"
    };
    (out, atomic)
}

fn poly_literal(p: &Poly, t: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (k, c) in p.0.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (body, sign) = term_literal(c, k, t);
        if first {
            if sign {
                out.push('-');
            }
            out.push_str(&body);
            first = false;
        } else {
            out.push_str(if sign { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    out
}

// Renders `c * t^k`; the bool is an extracted leading minus sign.
fn term_literal(c: &Cyc, k: usize, t: &str) -> (String, bool) {
    let var = match k {
        0 => String::new(),
        1 => t.to_string(),
        _ => format!("{t}^{k}"),
    };
    if let Some(r) = c.as_rational() {
        let mag = r.abs();
        let body = if k == 0 {
            rational_literal(&mag)
        } else if mag.is_one() {
            var
        } else {
            format!("{}*{}", rational_literal(&mag), var)
        };
        (body, r.is_negative())
    } else {
        let (s, atomic) = cyc_literal(c);
        let coeff = if atomic { s } else { format!("({s})") };
        if k == 0 {
            (coeff, false)
        } else {
            (format!("{coeff}*{var}"), false)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::literal::parse_scalar;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn q3() -> Arc<GroundField> {
        GroundField::new(3, "t").unwrap()
    }

    fn q1() -> Arc<GroundField> {
        GroundField::rationals("t").unwrap()
    }

    #[test]
    fn zeta_cubed_is_one() {
        let k = q3();
        let z = k.zeta();
        assert_eq!(&z * &z.pow(2).unwrap(), k.one());
    }

    #[test]
    fn zeta_satisfies_its_cyclotomic_polynomial() {
        for m in 1..=12u32 {
            let k = GroundField::new(m, "t").unwrap();
            let z = k.zeta();
            // Φ_M(ζ) = 0, evaluated through scalar arithmetic only.
            let phi = cyclotomic_polynomial(m);
            let mut acc = k.zero();
            for (i, c) in phi.iter().enumerate() {
                acc = &acc + &(&k.from_rational(c) * &z.pow(i as i64).unwrap());
            }
            assert!(acc.is_zero(), "Φ_{m}(ζ) ≠ 0");
        }
    }

    #[test]
    fn fraction_reduces_to_canonical_form() {
        let k = q1();
        let t = k.trans();
        let one = k.one();
        // (t−1)/(t²−1) = 1/(t+1)
        let lhs = (&t - &one).div(&(&t.pow(2).unwrap() - &one)).unwrap();
        let rhs = one.div(&(&t + &one)).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.literal(), "(1)/(t + 1)");
    }

    #[test]
    fn zeta_square_plus_zeta_is_minus_one() {
        let k = q3();
        let z = k.zeta();
        assert_eq!(&z.pow(2).unwrap() + &z, k.from_int(-1));
    }

    #[test]
    fn orders_of_constants() {
        let k = q3();
        assert_eq!(k.from_int(-1).multiplicative_order().unwrap(), Some(2));
        assert_eq!(k.trans().multiplicative_order().unwrap(), None);
        assert_eq!(k.zeta().multiplicative_order().unwrap(), Some(3));
        assert_eq!(k.from_int(2).multiplicative_order().unwrap(), None);
        assert_eq!(k.one().multiplicative_order().unwrap(), Some(1));
        assert!(k.zero().multiplicative_order().is_err());
    }

    #[test]
    fn order_of_zeta_powers() {
        // ord(ζ^k) = M / gcd(M, k), order computed here by brute force
        // multiplication as an independent route.
        for m in [3u32, 4, 6, 8, 12] {
            let k = GroundField::new(m, "t").unwrap();
            let z = k.zeta();
            for e in 1..m {
                let x = z.pow(e as i64).unwrap();
                let mut acc = x.clone();
                let mut brute = 1;
                while acc != k.one() {
                    acc = &acc * &x;
                    brute += 1;
                }
                assert_eq!(x.multiplicative_order().unwrap(), Some(brute));
                assert_eq!(brute, m / num_integer::gcd(m, e));
            }
        }
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let k = q1();
        assert!(k.zero().inv().is_err());
        assert!(k.one().div(&k.zero()).is_err());
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        // Small mixed scalars over Q(ζ_3)(t).
        (-3i64..=3, 0u32..3, -2i64..=2).prop_map(|(a, zp, tp)| {
            let k = q3();
            let base = &k.from_int(a) + &k.zeta().pow(zp as i64).unwrap();
            &base * &k.trans().pow(tp).unwrap()
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                let inv = a.inv().unwrap();
                prop_assert_eq!(&a * &inv, a.field().one());
            }
        }

        #[test]
        fn literal_round_trip(a in arb_scalar(), b in arb_scalar()) {
            let k = q3();
            let s = if b.is_zero() { a.clone() } else { a.div(&b).unwrap() };
            let text = s.literal();
            let back = parse_scalar(&text, &k, &BTreeMap::new()).unwrap();
            prop_assert_eq!(back, s);
        }
    }
}
