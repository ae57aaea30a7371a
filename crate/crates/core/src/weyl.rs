//! Weyl-groupoid reflections and positive-root enumeration.
//!
//! Reflection at a vertex `i` sends `α_j ↦ α_j + m_ij·α_i` (`j ≠ i`) and
//! `α_i ↦ −α_i`; the reflected braiding pairs the images through the
//! bicharacter. Positive roots are collected by a breadth-first walk over
//! the groupoid, transporting the simple roots through the accumulated
//! degree maps. Enumeration is a semidecision: exceeding the cap reports
//! "presumed infinite", never a theorem.

use std::collections::{BTreeSet, VecDeque};

use serde_json::{json, Value};

use crate::braiding::{BraidingMatrix, DynkinDiagram};
use crate::degree::MultiDegree;
use crate::error::{Error, Result};

/// Outcome of a positive-root enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootSystemResult {
    Finite { roots: Vec<MultiDegree>, cap: u32 },
    Diverged { cap: u32 },
    UndefinedM { witness: (usize, usize), cap: u32 },
}

impl RootSystemResult {
    pub fn is_finite(&self) -> bool {
        matches!(self, RootSystemResult::Finite { .. })
    }

    pub fn to_json(&self) -> Value {
        match self {
            RootSystemResult::Finite { roots, cap } => json!({
                "status": "finite",
                "count": roots.len(),
                "roots": roots.iter().map(|r| r.0.clone()).collect::<Vec<_>>(),
                "cap": cap,
            }),
            RootSystemResult::Diverged { cap } => json!({
                "status": "diverged",
                "note": "presumed infinite (cap reached)",
                "cap": cap,
            }),
            RootSystemResult::UndefinedM { witness, cap } => json!({
                "status": "undefined_m",
                "witness": [witness.0 + 1, witness.1 + 1],
                "cap": cap,
            }),
        }
    }
}

/// The degree map of the reflection at `i`: images of the simple roots.
fn reflection_map(q: &BraidingMatrix, i: usize) -> Result<Vec<MultiDegree>> {
    let theta = q.theta();
    let mut images = Vec::with_capacity(theta);
    for j in 0..theta {
        if j == i {
            let mut v = MultiDegree::zero(theta);
            v.0[i] = -1;
            images.push(v);
        } else {
            let m = q.m_ij(i, j)?.ok_or(Error::UndefinedM { i, j })?;
            let mut v = MultiDegree::unit(theta, j);
            v.0[i] += m as i64;
            images.push(v);
        }
    }
    Ok(images)
}

/// Reflect the braiding at vertex `i`: `q'_{jk} = χ(s_i α_j, s_i α_k)`.
pub fn reflect(q: &BraidingMatrix, i: usize) -> Result<BraidingMatrix> {
    let images = reflection_map(q, i)?;
    reflect_with(q, &images)
}

fn reflect_with(q: &BraidingMatrix, images: &[MultiDegree]) -> Result<BraidingMatrix> {
    let theta = q.theta();
    let mut entries = Vec::with_capacity(theta);
    for j in 0..theta {
        let mut row = Vec::with_capacity(theta);
        for k in 0..theta {
            row.push(q.bicharacter(&images[j], &images[k])?);
        }
        entries.push(row);
    }
    BraidingMatrix::new(q.field().clone(), entries)
}

/// Enumerate the positive roots of the braiding, capped.
///
/// States are pairs (braiding, degree map back to the original
/// coordinates); two states coincide when their Dynkin diagrams and maps
/// agree, since reflections and `m_ij` only depend on the diagram.
pub fn positive_roots(q: &BraidingMatrix, cap: u32) -> Result<RootSystemResult> {
    let theta = q.theta();
    if (cap as usize) < theta {
        return Err(Error::InvalidParameter(format!("cap must be at least θ = {theta}")));
    }
    let identity: Vec<MultiDegree> = (0..theta).map(|j| MultiDegree::unit(theta, j)).collect();
    let mut roots: BTreeSet<MultiDegree> = BTreeSet::new();
    let mut visited: BTreeSet<(DynkinDiagram, Vec<Vec<i64>>)> = BTreeSet::new();
    let mut queue: VecDeque<(BraidingMatrix, Vec<MultiDegree>)> = VecDeque::new();

    let key = |mat: &BraidingMatrix, map: &[MultiDegree]| {
        (mat.dynkin_diagram(), map.iter().map(|d| d.0.clone()).collect::<Vec<_>>())
    };

    visited.insert(key(q, &identity));
    queue.push_back((q.clone(), identity));

    while let Some((mat, map)) = queue.pop_front() {
        for col in &map {
            if !col.is_zero() && col.is_nonnegative() {
                roots.insert(col.clone());
                if roots.len() > cap as usize {
                    return Ok(RootSystemResult::Diverged { cap });
                }
            }
        }
        for i in 0..theta {
            let local = match reflection_map(&mat, i) {
                Ok(images) => images,
                Err(Error::UndefinedM { i, j }) => {
                    return Ok(RootSystemResult::UndefinedM { witness: (i, j), cap })
                }
                Err(e) => return Err(e),
            };
            let next_mat = reflect_with(&mat, &local)?;
            // Transport: the new map sends α_j to map(s_i α_j).
            let next_map: Vec<MultiDegree> = (0..theta)
                .map(|j| {
                    let mut acc = MultiDegree::zero(theta);
                    for (l, &c) in local[j].0.iter().enumerate() {
                        if c != 0 {
                            acc = &acc + &MultiDegree(map[l].0.iter().map(|&x| x * c).collect());
                        }
                    }
                    acc
                })
                .collect();
            let k = key(&next_mat, &next_map);
            if !visited.contains(&k) {
                if visited.len() >= cap as usize {
                    return Ok(RootSystemResult::Diverged { cap });
                }
                visited.insert(k);
                queue.push_back((next_mat, next_map));
            }
        }
    }

    Ok(RootSystemResult::Finite { roots: roots.into_iter().collect(), cap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::GroundField;

    fn field() -> std::sync::Arc<GroundField> {
        GroundField::rationals("t").unwrap()
    }

    fn cartan_a2() -> BraidingMatrix {
        let k = field();
        let t = k.trans();
        BraidingMatrix::new(
            k.clone(),
            vec![vec![t.clone(), t.inv().unwrap()], vec![k.one(), t.clone()]],
        )
        .unwrap()
    }

    #[test]
    fn cartan_a2_has_three_roots() {
        let res = positive_roots(&cartan_a2(), 100).unwrap();
        match res {
            RootSystemResult::Finite { roots, .. } => {
                assert_eq!(
                    roots,
                    vec![
                        MultiDegree(vec![0, 1]),
                        MultiDegree(vec![1, 0]),
                        MultiDegree(vec![1, 1]),
                    ]
                );
            }
            other => panic!("expected finite, got {other:?}"),
        }
    }

    #[test]
    fn reflection_preserves_a2_diagram() {
        let q = cartan_a2();
        let r = reflect(&q, 0).unwrap();
        assert_eq!(r.dynkin_diagram(), q.dynkin_diagram());
        let rr = reflect(&r, 0).unwrap();
        assert_eq!(rr.dynkin_diagram(), q.dynkin_diagram());
    }

    #[test]
    fn rank_one_is_trivial() {
        let k = field();
        let q = BraidingMatrix::new(k.clone(), vec![vec![k.trans()]]).unwrap();
        let r = reflect(&q, 0).unwrap();
        assert_eq!(*r.entry(0, 0), k.trans());
        match positive_roots(&q, 10).unwrap() {
            RootSystemResult::Finite { roots, .. } => {
                assert_eq!(roots, vec![MultiDegree(vec![1])])
            }
            other => panic!("expected finite, got {other:?}"),
        }
    }

    #[test]
    fn undefined_m_is_witnessed() {
        let k = field();
        let t = k.trans();
        let q = BraidingMatrix::new(
            k.clone(),
            vec![vec![t.clone(), t.clone()], vec![k.one(), t.clone()]],
        )
        .unwrap();
        match positive_roots(&q, 100).unwrap() {
            RootSystemResult::UndefinedM { witness, .. } => assert_eq!(witness, (0, 1)),
            other => panic!("expected undefined_m, got {other:?}"),
        }
    }

    #[test]
    fn super_chain_has_seven_roots_and_closure() {
        // Chain t —1/t— (−1) —t— 1/t; seven positive roots.
        let k = field();
        let t = k.trans();
        let ti = t.inv().unwrap();
        let q = BraidingMatrix::new(
            k.clone(),
            vec![
                vec![t.clone(), ti.clone(), k.one()],
                vec![k.one(), k.from_int(-1), t.clone()],
                vec![k.one(), k.one(), ti.clone()],
            ],
        )
        .unwrap();
        let roots = match positive_roots(&q, 500).unwrap() {
            RootSystemResult::Finite { roots, .. } => roots,
            other => panic!("expected finite, got {other:?}"),
        };
        assert_eq!(roots.len(), 7);
        for i in 0..3 {
            assert!(roots.contains(&MultiDegree::unit(3, i)));
        }
        // Signed root set is stable under each simple reflection map.
        let signed: BTreeSet<MultiDegree> = roots
            .iter()
            .cloned()
            .chain(roots.iter().map(|r| MultiDegree(r.0.iter().map(|&x| -x).collect())))
            .collect();
        for i in 0..3 {
            let images = reflection_map(&q, i).unwrap();
            for r in &signed {
                let mut acc = MultiDegree::zero(3);
                for (l, &c) in r.0.iter().enumerate() {
                    if c != 0 {
                        acc = &acc
                            + &MultiDegree(images[l].0.iter().map(|&x| x * c).collect());
                    }
                }
                assert!(signed.contains(&acc), "reflection image {acc} escapes the root set");
            }
        }
    }
}
