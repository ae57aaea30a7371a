//! Dense univariate polynomials in the transcendental, with coefficients
//! in the cyclotomic layer.

use num_rational::BigRational;

use super::cyclotomic::{cyc_inv, cyc_mul, Cyc};

/// Polynomial in `t` over `Q(ζ_M)`; no trailing zero coefficients, empty = 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly(pub Vec<Cyc>);

impl Poly {
    pub fn zero() -> Self {
        Poly(vec![])
    }

    pub fn constant(c: Cyc) -> Self {
        if c.is_zero() {
            Poly(vec![])
        } else {
            Poly(vec![c])
        }
    }

    pub fn one(dim: usize) -> Self {
        Poly(vec![Cyc::one(dim)])
    }

    /// The monomial `t`.
    pub fn var(dim: usize) -> Self {
        Poly(vec![Cyc::zero(dim), Cyc::one(dim)])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&Cyc> {
        self.0.last()
    }

    fn trim(mut v: Vec<Cyc>) -> Poly {
        while v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
        Poly(v)
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let dim = self
            .0
            .first()
            .map(|c| c.dim())
            .or_else(|| rhs.0.first().map(|c| c.dim()))
            .unwrap_or(1);
        let n = self.0.len().max(rhs.0.len());
        let mut out = vec![Cyc::zero(dim); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] = out[i].add(c);
        }
        for (i, c) in rhs.0.iter().enumerate() {
            out[i] = out[i].add(c);
        }
        Poly::trim(out)
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| c.neg()).collect())
    }
}

pub fn poly_mul(phi: &[BigRational], a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let dim = phi.len() - 1;
    let mut out = vec![Cyc::zero(dim); a.0.len() + b.0.len() - 1];
    for (i, ai) in a.0.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.0.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add(&cyc_mul(phi, ai, bj));
        }
    }
    Poly::trim(out)
}

pub fn poly_divrem(phi: &[BigRational], a: &Poly, b: &Poly) -> (Poly, Poly) {
    assert!(!b.is_zero(), "division by the zero polynomial");
    if a.0.len() < b.0.len() {
        return (Poly::zero(), a.clone());
    }
    let dim = phi.len() - 1;
    let lead_inv = cyc_inv(phi, b.leading().unwrap()).expect("nonzero leading coefficient");
    let mut rem = a.0.clone();
    let mut quot = vec![Cyc::zero(dim); a.0.len() - b.0.len() + 1];
    for k in (0..quot.len()).rev() {
        let coeff = cyc_mul(phi, &rem[k + b.0.len() - 1], &lead_inv);
        if !coeff.is_zero() {
            for (j, bj) in b.0.iter().enumerate() {
                let t = cyc_mul(phi, bj, &coeff);
                rem[k + j] = rem[k + j].sub(&t);
            }
        }
        quot[k] = coeff;
    }
    (Poly::trim(quot), Poly::trim(rem))
}

/// Monic gcd; the zero polynomial when both inputs are zero.
pub fn poly_gcd(phi: &[BigRational], a: &Poly, b: &Poly) -> Poly {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    while !r1.is_zero() {
        let (_, r) = poly_divrem(phi, &r0, &r1);
        r0 = r1;
        r1 = poly_monic(phi, &r);
    }
    poly_monic(phi, &r0)
}

/// Divide by the leading coefficient; zero stays zero.
pub fn poly_monic(phi: &[BigRational], p: &Poly) -> Poly {
    match p.leading() {
        None => Poly::zero(),
        Some(lead) if lead.is_one() => p.clone(),
        Some(lead) => {
            let inv = cyc_inv(phi, lead).expect("nonzero leading coefficient");
            Poly(p.0.iter().map(|c| cyc_mul(phi, c, &inv)).collect())
        }
    }
}
