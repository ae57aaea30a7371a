//! Multidegrees in `Z^θ`.
//!
//! Degrees of algebra elements are componentwise nonnegative; signed
//! vectors appear internally as reflection images of roots.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiDegree(pub Vec<i64>);

impl MultiDegree {
    pub fn zero(theta: usize) -> Self {
        MultiDegree(vec![0; theta])
    }

    /// The `i`-th canonical basis vector (0-based).
    pub fn unit(theta: usize, i: usize) -> Self {
        let mut v = vec![0; theta];
        v[i] = 1;
        MultiDegree(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &MultiDegree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Number of words of this degree: the multinomial `|α|! / ∏ α_i!`.
    pub fn word_count(&self) -> u64 {
        debug_assert!(self.is_nonnegative());
        let mut count: u64 = 1;
        let mut placed: u64 = 0;
        for &a in &self.0 {
            for k in 1..=(a as u64) {
                placed += 1;
                count = count * placed / k;
            }
        }
        count
    }
}

impl Add for &MultiDegree {
    type Output = MultiDegree;
    fn add(self, rhs: &MultiDegree) -> MultiDegree {
        debug_assert_eq!(self.len(), rhs.len());
        MultiDegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &MultiDegree {
    type Output = MultiDegree;
    fn sub(self, rhs: &MultiDegree) -> MultiDegree {
        debug_assert_eq!(self.len(), rhs.len());
        MultiDegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// Degree-lexicographic order: total degree first, then entries.
impl Ord for MultiDegree {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.total(), &self.0).cmp(&(other.total(), &other.0))
    }
}

impl PartialOrd for MultiDegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// All nonnegative degrees of length `theta` with total exactly `n`,
/// in lexicographic order.
pub fn degrees_of_total(theta: usize, n: i64) -> Vec<MultiDegree> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; theta];
    fill(&mut out, &mut cur, 0, n);
    out
}

fn fill(out: &mut Vec<MultiDegree>, cur: &mut Vec<i64>, pos: usize, rest: i64) {
    if pos + 1 == cur.len() {
        cur[pos] = rest;
        out.push(MultiDegree(cur.clone()));
        return;
    }
    for a in 0..=rest {
        cur[pos] = a;
        fill(out, cur, pos + 1, rest - a);
    }
    let last = cur.len() - 1;
    cur[last] = 0;
}

/// All nonnegative degrees with total at most `cap`, sorted degree-lex.
pub fn degrees_up_to(theta: usize, cap: i64) -> Vec<MultiDegree> {
    let mut out = Vec::new();
    for n in 0..=cap {
        out.extend(degrees_of_total(theta, n));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_counts_are_multinomials() {
        assert_eq!(MultiDegree(vec![1, 1, 1]).word_count(), 6);
        assert_eq!(MultiDegree(vec![3, 4, 2]).word_count(), 1260);
        assert_eq!(MultiDegree(vec![0, 0]).word_count(), 1);
        assert_eq!(MultiDegree(vec![2, 1]).word_count(), 3);
    }

    #[test]
    fn degree_lex_order() {
        let a = MultiDegree(vec![0, 2]);
        let b = MultiDegree(vec![1, 0]);
        assert!(b < a); // totals 1 < 2
        let c = MultiDegree(vec![1, 1]);
        let d = MultiDegree(vec![2, 0]);
        assert!(c < d); // same total, lex
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(degrees_of_total(3, 8).len(), 45);
        assert_eq!(degrees_up_to(3, 8).len(), 165);
    }
}
