//! The braided free algebra `T(V)`.
//!
//! Words in the generators `x_1..x_θ`, `N_0^θ`-graded linear combinations,
//! braided commutators and iterated adjoints, the braided shuffle
//! coproduct and the primitivity defect. Everything is exact and
//! deterministic; maps are kept free of zero coefficients.

pub mod dsl;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::braiding::BraidingMatrix;
use crate::coeff::Scalar;
use crate::degree::MultiDegree;
use crate::error::{Error, Result};

pub use dsl::{eval_rel_expr, parse_rel_expr, RelExpr};

/// Word in the generators; letters are 0-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(i: usize) -> Self {
        Word(vec![i as u8])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, rhs: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&rhs.0);
        Word(v)
    }

    pub fn degree(&self, theta: usize) -> MultiDegree {
        let mut d = MultiDegree::zero(theta);
        for &l in &self.0 {
            d.0[l as usize] += 1;
        }
        d
    }

    /// 1-based letters, for JSON output.
    pub fn letters_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&l| l as usize + 1).collect()
    }
}

/// Length first, then lexicographic; within one multidegree this is plain
/// lexicographic order on letter sequences.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.0.len(), &self.0).cmp(&(other.0.len(), &other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (n, &l) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{}", l + 1)?;
        }
        Ok(())
    }
}

/// Finite linear combination of words; no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FreeElement(pub BTreeMap<Word, Scalar>);

impl FreeElement {
    pub fn zero() -> Self {
        FreeElement(BTreeMap::new())
    }

    pub fn one(q: &BraidingMatrix) -> Self {
        let mut m = BTreeMap::new();
        m.insert(Word::empty(), q.field().one());
        FreeElement(m)
    }

    pub fn generator(q: &BraidingMatrix, i: usize) -> Result<Self> {
        if i >= q.theta() {
            return Err(Error::IndexOutOfRange { index: i + 1, theta: q.theta() });
        }
        let mut m = BTreeMap::new();
        m.insert(Word::single(i), q.field().one());
        Ok(FreeElement(m))
    }

    pub fn from_term(word: Word, coeff: Scalar) -> Self {
        let mut e = FreeElement::zero();
        e.add_term(word, coeff);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, word: Word, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.0.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        for (w, c) in &rhs.0 {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        for (w, c) in &rhs.0 {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> FreeElement {
        if c.is_zero() {
            return FreeElement::zero();
        }
        FreeElement(self.0.iter().map(|(w, x)| (w.clone(), x * c)).collect())
    }

    pub fn neg(&self) -> FreeElement {
        FreeElement(self.0.iter().map(|(w, x)| (w.clone(), -x)).collect())
    }

    pub fn constant_term(&self) -> Option<&Scalar> {
        self.0.get(&Word::empty())
    }

    pub fn total_degree(&self) -> i64 {
        self.0.keys().map(|w| w.len() as i64).max().unwrap_or(0)
    }

    /// Common multidegree of all words, `None` for the zero element.
    pub fn homogeneous_degree(&self, theta: usize) -> Result<Option<MultiDegree>> {
        let mut iter = self.0.keys();
        let first = match iter.next() {
            None => return Ok(None),
            Some(w) => w.degree(theta),
        };
        for w in iter {
            if w.degree(theta) != first {
                return Err(Error::NonHomogeneous(format!(
                    "mixed degrees {} and {}",
                    first,
                    w.degree(theta)
                )));
            }
        }
        Ok(Some(first))
    }

    /// Bilinear concatenation product.
    pub fn multiply(&self, rhs: &FreeElement) -> FreeElement {
        let mut out = FreeElement::zero();
        for (w1, c1) in &self.0 {
            for (w2, c2) in &rhs.0 {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, q: &BraidingMatrix, n: u32) -> FreeElement {
        let mut acc = FreeElement::one(q);
        for _ in 0..n {
            acc = acc.multiply(self);
        }
        acc
    }

    /// Extract the part of one exact multidegree.
    pub fn component(&self, theta: usize, degree: &MultiDegree) -> FreeElement {
        FreeElement(
            self.0
                .iter()
                .filter(|(w, _)| &w.degree(theta) == degree)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        )
    }

    pub fn degrees(&self, theta: usize) -> Vec<MultiDegree> {
        let set: std::collections::BTreeSet<MultiDegree> =
            self.0.keys().map(|w| w.degree(theta)).collect();
        set.into_iter().collect()
    }
}

/// `[u, v]_c = u·v − χ(deg u, deg v)·v·u` on homogeneous arguments.
pub fn braided_commutator(
    q: &BraidingMatrix,
    u: &FreeElement,
    v: &FreeElement,
) -> Result<FreeElement> {
    let du = u.homogeneous_degree(q.theta())?;
    let dv = v.homogeneous_degree(q.theta())?;
    let (du, dv) = match (du, dv) {
        (Some(a), Some(b)) => (a, b),
        // A commutator with the zero element is zero.
        _ => return Ok(FreeElement::zero()),
    };
    let chi = q.bicharacter(&du, &dv)?;
    Ok(u.multiply(v).sub(&v.multiply(u).scale(&chi)))
}

/// `n`-fold braided adjoint `u ↦ [x_i, u]_c`.
pub fn ad_power(q: &BraidingMatrix, i: usize, v: &FreeElement, n: u32) -> Result<FreeElement> {
    let xi = FreeElement::generator(q, i)?;
    let mut acc = v.clone();
    acc.homogeneous_degree(q.theta())?;
    for _ in 0..n {
        acc = braided_commutator(q, &xi, &acc)?;
    }
    Ok(acc)
}

/// Element of the braided tensor square `T(V) ⊗ T(V)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorElement(pub BTreeMap<(Word, Word), Scalar>);

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement(BTreeMap::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, key: (Word, Word), coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.0.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (k, c) in &rhs.0 {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (k, c) in &rhs.0 {
            out.add_term(k.clone(), -c);
        }
        out
    }

    /// Braided product: `(a⊗b)(c⊗d) = χ(deg b, deg c)·(ac ⊗ bd)`.
    pub fn braided_multiply(&self, q: &BraidingMatrix, rhs: &TensorElement) -> TensorElement {
        let theta = q.theta();
        let mut out = TensorElement::zero();
        for ((a, b), c1) in &self.0 {
            let db = b.degree(theta);
            for ((c, d), c2) in &rhs.0 {
                let chi = q.bicharacter(&db, &c.degree(theta)).expect("matching rank");
                out.add_term((a.concat(c), b.concat(d)), &(c1 * c2) * &chi);
            }
        }
        out
    }
}

/// Braided shuffle coproduct, the algebra map with `Δ(x_i) = x_i⊗1 + 1⊗x_i`.
///
/// On a word it is the sum over subsets of letter positions, the letters
/// split in order, weighted by the q-statistic: one factor `q_{ab}` for
/// every pair (right letter `a` before left letter `b`).
pub fn coproduct(q: &BraidingMatrix, u: &FreeElement, cutoff: i64) -> Result<TensorElement> {
    if u.total_degree() > cutoff {
        return Err(Error::CutoffExceeded { requested: u.total_degree(), cutoff });
    }
    let mut out = TensorElement::zero();
    for (w, c) in &u.0 {
        let n = w.len();
        for mask in 0u64..(1u64 << n) {
            let mut left = Vec::new();
            let mut right = Vec::new();
            let mut coeff = c.clone();
            let mut right_degree = MultiDegree::zero(q.theta());
            for (p, &letter) in w.0.iter().enumerate() {
                if mask >> p & 1 == 1 {
                    // Letter goes left, crossing all earlier right letters.
                    coeff = &coeff * &q.pair_right(&right_degree, letter as usize);
                    left.push(letter);
                } else {
                    right_degree.0[letter as usize] += 1;
                    right.push(letter);
                }
            }
            out.add_term((Word(left), Word(right)), coeff);
        }
    }
    Ok(out)
}

/// `Δ(u) − u⊗1 − 1⊗u`; zero exactly when `u` is primitive in `T(V)`.
pub fn primitive_defect(q: &BraidingMatrix, u: &FreeElement) -> Result<TensorElement> {
    if u.constant_term().is_some() {
        return Err(Error::InvalidOperand(
            "primitivity defect requires a zero constant term".into(),
        ));
    }
    u.homogeneous_degree(q.theta())?;
    let mut out = coproduct(q, u, u.total_degree())?;
    for (w, c) in &u.0 {
        out.add_term((w.clone(), Word::empty()), -c);
        out.add_term((Word::empty(), w.clone()), -c);
    }
    Ok(out)
}
