//! Arithmetic in the cyclotomic layer `Q(ζ_M) = Q[x]/Φ_M(x)`.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Element of `Q(ζ_M)` in the power basis `1, ζ, …, ζ^{d−1}`, `d = deg Φ_M`.
/// The coordinate vector always has length exactly `d`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cyc(pub Vec<BigRational>);

impl Cyc {
    pub fn zero(dim: usize) -> Self {
        Cyc(vec![BigRational::zero(); dim])
    }

    pub fn one(dim: usize) -> Self {
        let mut v = vec![BigRational::zero(); dim];
        v[0] = BigRational::one();
        Cyc(v)
    }

    pub fn from_rational(dim: usize, r: BigRational) -> Self {
        let mut v = vec![BigRational::zero(); dim];
        v[0] = r;
        Cyc(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.0[0].is_one() && self.0[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value when no higher power of ζ appears.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.0[1..].iter().all(|c| c.is_zero()) {
            Some(&self.0[0])
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Cyc) -> Cyc {
        Cyc(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, rhs: &Cyc) -> Cyc {
        Cyc(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Cyc {
        Cyc(self.0.iter().map(|a| -a).collect())
    }
}

/// Multiply two elements and reduce modulo `Φ_M`.
pub fn cyc_mul(phi: &[BigRational], a: &Cyc, b: &Cyc) -> Cyc {
    let dim = a.dim();
    let mut prod = vec![BigRational::zero(); 2 * dim];
    for (i, ai) in a.0.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.0.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            prod[i + j] += ai * bj;
        }
    }
    reduce(phi, prod)
}

/// Invert a nonzero element via the extended Euclidean algorithm against `Φ_M`.
pub fn cyc_inv(phi: &[BigRational], a: &Cyc) -> Option<Cyc> {
    if a.is_zero() {
        return None;
    }
    // Bezout: s·a + t·Φ = gcd = nonzero constant (Φ irreducible over Q).
    let mut r0 = phi.to_vec();
    let mut r1 = trim(a.0.clone());
    let mut s0 = vec![];
    let mut s1 = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = rat_divrem(&r0, &r1);
        let s = rat_sub(&s0, &rat_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    debug_assert_eq!(r0.len(), 1, "Φ_M is irreducible so the gcd is constant");
    let c = r0[0].clone();
    let inv: Vec<BigRational> = s0.iter().map(|x| x / &c).collect();
    Some(reduce(phi, inv))
}

/// Reduce an arbitrary-length coordinate vector modulo `Φ_M` and pad to `dim`.
pub fn reduce(phi: &[BigRational], v: Vec<BigRational>) -> Cyc {
    let dim = phi.len() - 1;
    let (_, mut r) = rat_divrem(&trim(v), phi);
    r.resize(dim, BigRational::zero());
    Cyc(r)
}

/// The `M`-th cyclotomic polynomial, monic with integer coefficients.
///
/// `Φ_M(x) = (x^M − 1) / ∏_{d | M, d < M} Φ_d(x)`.
pub fn cyclotomic_polynomial(m: u32) -> Vec<BigRational> {
    assert!(m >= 1);
    let mut memo: Vec<Option<Vec<BigRational>>> = vec![None; (m + 1) as usize];
    for k in 1..=m {
        if m % k != 0 {
            continue;
        }
        // x^k − 1
        let mut p = vec![BigRational::zero(); (k + 1) as usize];
        p[0] = -BigRational::one();
        p[k as usize] = BigRational::one();
        for d in 1..k {
            if k % d == 0 {
                let q = memo[d as usize].as_ref().expect("divisors computed in order");
                let (quot, rem) = rat_divrem(&p, q);
                debug_assert!(rem.is_empty());
                p = quot;
            }
        }
        memo[k as usize] = Some(p);
    }
    memo[m as usize].take().expect("m divides m")
}

// Dense rational polynomials, no trailing zeros, empty = 0.

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn rat_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(out)
}

fn rat_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, ai) in a.iter().enumerate() {
        out[i] += ai;
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    trim(out)
}

fn rat_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.len() < b.len() {
        return (vec![], a.to_vec());
    }
    let mut rem = a.to_vec();
    let mut quot = vec![BigRational::zero(); a.len() - b.len() + 1];
    let lead = b.last().unwrap();
    for k in (0..quot.len()).rev() {
        let coeff = &rem[k + b.len() - 1] / lead;
        if !coeff.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                let t = bj * &coeff;
                rem[k + j] -= t;
            }
        }
        quot[k] = coeff;
    }
    (trim(quot), trim(rem))
}

/// Rational rendered as a literal: `p`, `-p`, `p/q` or `-p/q`.
pub fn rational_literal(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
