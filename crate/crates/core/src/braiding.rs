//! Braiding matrices of diagonal type and their Dynkin diagrams.
//!
//! A braiding matrix is a `θ×θ` matrix of nonzero scalars `q_ij`. Its
//! Dynkin diagram carries the vertex labels `q_ii` and the edge labels
//! `q̃_ij = q_ij·q_ji` for the pairs with `q̃_ij ≠ 1`. This module
//! implements the bicharacter, the integers `m_ij`, the diagram criteria
//! that rule out finite Gelfand-Kirillov dimension, extension of a braided
//! space by a root vector, and recognition of the exceptional diagram
//! shapes handled by the catalog.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::coeff::{GroundField, Scalar};
use crate::degree::MultiDegree;
use crate::error::{Error, Result};

/// Fallback scan bound for `m_ij` when `q_ii` is a constant that is not a
/// root of unity (such inputs never arise from the catalog).
const CONSTANT_SCAN_BOUND: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidingMatrix {
    field: Arc<GroundField>,
    theta: usize,
    entries: Vec<Vec<Scalar>>,
}

impl BraidingMatrix {
    pub fn new(field: Arc<GroundField>, entries: Vec<Vec<Scalar>>) -> Result<Self> {
        let theta = entries.len();
        if theta == 0 {
            return Err(Error::InvalidParameter("braiding matrix must have θ ≥ 1".into()));
        }
        for row in &entries {
            if row.len() != theta {
                return Err(Error::LengthMismatch { expected: theta, got: row.len() });
            }
            for q in row {
                if q.is_zero() {
                    return Err(Error::InvalidParameter("braiding entries must be nonzero".into()));
                }
                if !q.field().compatible(&field) {
                    return Err(Error::FieldMismatch(
                        "braiding entry built over a different ground field".into(),
                    ));
                }
            }
        }
        Ok(BraidingMatrix { field, theta, entries })
    }

    pub fn field(&self) -> &Arc<GroundField> {
        &self.field
    }

    pub fn theta(&self) -> usize {
        self.theta
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i][j]
    }

    /// `q̃_ij = q_ij·q_ji`.
    pub fn tilde(&self, i: usize, j: usize) -> Scalar {
        &self.entries[i][j] * &self.entries[j][i]
    }

    /// The bicharacter `χ(a, b) = ∏_{i,j} q_ij^{a_i b_j}` on `Z^θ × Z^θ`.
    pub fn bicharacter(&self, a: &MultiDegree, b: &MultiDegree) -> Result<Scalar> {
        if a.len() != self.theta {
            return Err(Error::LengthMismatch { expected: self.theta, got: a.len() });
        }
        if b.len() != self.theta {
            return Err(Error::LengthMismatch { expected: self.theta, got: b.len() });
        }
        let mut acc = self.field.one();
        for (i, &ai) in a.0.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.0.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                acc = &acc * &self.entries[i][j].pow(ai * bj).expect("nonzero entry");
            }
        }
        Ok(acc)
    }

    /// `χ(a, α_j)` — pairing against a generator on the right.
    pub fn pair_right(&self, a: &MultiDegree, j: usize) -> Scalar {
        let mut acc = self.field.one();
        for (i, &ai) in a.0.iter().enumerate() {
            if ai != 0 {
                acc = &acc * &self.entries[i][j].pow(ai).expect("nonzero entry");
            }
        }
        acc
    }

    /// `χ(α_i, b)`.
    pub fn pair_left(&self, i: usize, b: &MultiDegree) -> Scalar {
        let mut acc = self.field.one();
        for (j, &bj) in b.0.iter().enumerate() {
            if bj != 0 {
                acc = &acc * &self.entries[i][j].pow(bj).expect("nonzero entry");
            }
        }
        acc
    }

    /// The smallest `m ≥ 0` with `q_ii^m·q̃_ij = 1`, or with
    /// `q_ii^{m+1} = 1` when no smaller `m` satisfies the first condition;
    /// `None` when neither ever holds.
    pub fn m_ij(&self, i: usize, j: usize) -> Result<Option<u32>> {
        if i == j {
            return Err(Error::InvalidOperand("m_ij requires i ≠ j".into()));
        }
        let qii = &self.entries[i][i];
        let qt = self.tilde(i, j);
        let ord = qii.multiplicative_order().expect("braiding entries are nonzero");

        // First condition: q_ii^m · q̃_ij = 1.
        let m1: Option<u32> = if let Some(n) = ord {
            let mut acc = qt.clone();
            let mut found = None;
            for m in 0..n {
                if acc.is_one() {
                    found = Some(m);
                    break;
                }
                acc = &acc * qii;
            }
            found
        } else if !qii.is_constant() {
            // Reduced powers scale the total degree linearly, so at most
            // one candidate exponent exists.
            let dq = qii.total_degree() as i64;
            let dt = qt.total_degree() as i64;
            if qt.is_one() {
                Some(0)
            } else if dq > 0 && dt > 0 && dt % dq == 0 {
                let m = (dt / dq) as u32;
                let hit = (&qii.pow(m as i64).unwrap() * &qt).is_one();
                hit.then_some(m)
            } else {
                None
            }
        } else {
            let mut acc = qt.clone();
            let mut found = None;
            for m in 0..=CONSTANT_SCAN_BOUND {
                if acc.is_one() {
                    found = Some(m);
                    break;
                }
                acc = &acc * qii;
            }
            found
        };

        // Second condition: q_ii^{m+1} = 1, i.e. m = ord(q_ii) − 1.
        let m2 = ord.map(|n| n - 1);
        Ok(match (m1, m2) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (Some(a), None) => Some(a),
            (None, Some(b)) => Some(b),
            (None, None) => None,
        })
    }

    /// Extend the braided space by a root vector of degree `β`: one new
    /// vertex whose pairings are `χ(α_i, β)`, `χ(β, α_i)` and `χ(β, β)`.
    pub fn extend_by_root(&self, beta: &MultiDegree) -> Result<BraidingMatrix> {
        if beta.len() != self.theta {
            return Err(Error::LengthMismatch { expected: self.theta, got: beta.len() });
        }
        if beta.is_zero() {
            return Err(Error::InvalidOperand("the extending root must be nonzero".into()));
        }
        if !beta.is_nonnegative() {
            return Err(Error::InvalidOperand("the extending root must be nonnegative".into()));
        }
        let n = self.theta + 1;
        let mut entries = Vec::with_capacity(n);
        for i in 0..self.theta {
            let mut row = self.entries[i].clone();
            row.push(self.pair_left(i, beta));
            entries.push(row);
        }
        let mut last: Vec<Scalar> = (0..self.theta).map(|j| self.pair_right(beta, j)).collect();
        last.push(self.bicharacter(beta, beta)?);
        entries.push(last);
        BraidingMatrix::new(self.field.clone(), entries)
    }

    /// Restriction to a subset of vertices (ascending indices).
    pub fn restrict(&self, vertices: &[usize]) -> BraidingMatrix {
        let entries = vertices
            .iter()
            .map(|&i| vertices.iter().map(|&j| self.entries[i][j].clone()).collect())
            .collect();
        BraidingMatrix::new(self.field.clone(), entries).expect("restriction of a valid matrix")
    }

    pub fn dynkin_diagram(&self) -> DynkinDiagram {
        let labels: Vec<Scalar> = (0..self.theta).map(|i| self.entries[i][i].clone()).collect();
        let mut edges = BTreeMap::new();
        for i in 0..self.theta {
            for j in (i + 1)..self.theta {
                let t = self.tilde(i, j);
                if !t.is_one() {
                    edges.insert((i, j), t);
                }
            }
        }
        DynkinDiagram { labels, edges }
    }

    /// Connected components of the edge graph `q̃_ij ≠ 1`, each sorted.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let d = self.dynkin_diagram();
        let mut seen = vec![false; self.theta];
        let mut out = Vec::new();
        for start in 0..self.theta {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in 0..self.theta {
                    if !seen[u] && d.has_edge(v, u) {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Necessary conditions for finite Gelfand-Kirillov dimension; an empty
    /// list means no violation was found, not a finiteness proof.
    pub fn check_necessary_conditions(&self) -> Vec<Violation> {
        let d = self.dynkin_diagram();
        let mut out = Vec::new();
        let one = self.field.one();
        let minus_one = self.field.from_int(-1);

        for cyc in d.chordless_cycles(self.theta) {
            out.push(Violation::ChordlessCycle { vertices: cyc });
        }

        for i in 0..self.theta {
            for j in (i + 1)..self.theta {
                for k in (j + 1)..self.theta {
                    if !(d.has_edge(i, j) && d.has_edge(j, k) && d.has_edge(i, k)) {
                        continue;
                    }
                    let verts = [i, j, k];
                    if !verts.iter().any(|&v| d.labels[v] == minus_one) {
                        out.push(Violation::TriangleVertexLabels { vertices: verts });
                    }
                    let prod = &(&d.edge(i, j) * &d.edge(j, k)) * &d.edge(i, k);
                    if prod != one {
                        out.push(Violation::TriangleEdgeProduct { vertices: verts });
                    }
                    // Refined condition when exactly one vertex is −1.
                    let flags: Vec<bool> =
                        verts.iter().map(|&v| d.labels[v] == minus_one).collect();
                    if flags.iter().filter(|&&b| b).count() == 1 {
                        let center = verts[flags.iter().position(|&b| b).unwrap()];
                        let others: Vec<usize> =
                            verts.iter().copied().filter(|&v| v != center).collect();
                        let ok =
                            others.iter().all(|&v| (&d.labels[v] * &d.edge(center, v)).is_one());
                        if !ok {
                            out.push(Violation::TriangleRefined {
                                center,
                                others: [others[0], others[1]],
                            });
                        }
                    }
                }
            }
        }

        for i in 0..self.theta {
            if d.labels[i] == one {
                for j in 0..self.theta {
                    if j != i && d.has_edge(i, j) {
                        out.push(Violation::UnitVertexEdge { vertex: i, other: j });
                    }
                }
            }
        }
        out
    }

    /// Optional stricter screen on 3-cycles (reported as `strict-3-cycle`
    /// advisories, excluded from pass/fail semantics).
    pub fn three_cycle_advisories(&self) -> Vec<Advisory> {
        let d = self.dynkin_diagram();
        let minus_one = self.field.from_int(-1);
        let mut out = Vec::new();
        for i in 0..self.theta {
            for j in (i + 1)..self.theta {
                for k in (j + 1)..self.theta {
                    if !(d.has_edge(i, j) && d.has_edge(j, k) && d.has_edge(i, k)) {
                        continue;
                    }
                    let verts = [i, j, k];
                    let minus = verts.iter().filter(|&&v| d.labels[v] == minus_one).count();
                    if minus < 2 {
                        out.push(Advisory {
                            vertices: verts.to_vec(),
                            message: "3-cycle with fewer than two vertices labelled -1".into(),
                        });
                    }
                    for &v in &verts {
                        let label = &d.labels[v];
                        if *label == minus_one {
                            continue;
                        }
                        if label.multiplicative_order().expect("nonzero").is_some() {
                            out.push(Advisory {
                                vertices: vec![v],
                                message: "3-cycle vertex label is a root of unity other than -1"
                                    .into(),
                            });
                        }
                        let others: Vec<usize> =
                            verts.iter().copied().filter(|&u| u != v).collect();
                        let inv = label.inv().expect("nonzero label");
                        let inv2 = inv.pow(2).expect("nonzero label");
                        let e1 = d.edge(v, others[0]);
                        let e2 = d.edge(v, others[1]);
                        let ok = (e1 == inv && e2 == inv)
                            || (e1 == inv && e2 == inv2)
                            || (e1 == inv2 && e2 == inv);
                        if !ok {
                            out.push(Advisory {
                                vertices: verts.to_vec(),
                                message: format!(
                                    "3-cycle edges at vertex {} are not {{q^-1, q^-1}} or {{q^-1, q^-2}}",
                                    v + 1
                                ),
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// Match the Dynkin diagram against the exceptional templates, up to
    /// vertex relabelling, including the order conditions on the
    /// parameters. `Other` when no template fits.
    pub fn recognize_exceptional_type(&self) -> ExceptionalType {
        if self.theta != 3 {
            return ExceptionalType::Other;
        }
        let d = self.dynkin_diagram();
        let one = self.field.one();
        let minus_one = self.field.from_int(-1);
        let ord = |s: &Scalar| s.multiplicative_order().expect("nonzero scalar");

        if d.edges.len() == 3 {
            let all_minus = (0..3).all(|v| d.labels[v] == minus_one);
            let e = [d.edge(0, 1), d.edge(0, 2), d.edge(1, 2)];
            let prod = &(&e[0] * &e[1]) * &e[2];
            if all_minus && prod == one {
                let roots = e.iter().filter(|s| ord(s).is_some()).count();
                if roots == 1 {
                    return ExceptionalType::D21a43;
                }
            }
            return ExceptionalType::Other;
        }
        if d.edges.len() != 2 {
            return ExceptionalType::Other;
        }

        for b in 0..3 {
            let rest: Vec<usize> = (0..3).filter(|&v| v != b).collect();
            for (a, c) in [(rest[0], rest[1]), (rest[1], rest[0])] {
                if !(d.has_edge(a, b) && d.has_edge(b, c)) || d.has_edge(a, c) {
                    continue;
                }
                let (qa, qb, qc) = (&d.labels[a], &d.labels[b], &d.labels[c]);
                let (eab, ebc) = (d.edge(a, b), d.edge(b, c));

                if *qa == minus_one && *qb == minus_one && *qc == minus_one {
                    if (&eab * &ebc).is_one() && ord(&eab).is_none() {
                        return ExceptionalType::SuperA3J123;
                    }
                    continue;
                }
                if *qb != minus_one {
                    continue;
                }
                // Both ends must carry the inverse of their incident edge.
                if !(&eab * qa).is_one() || !(&ebc * qc).is_one() {
                    continue;
                }
                match (ord(qa), ord(qc)) {
                    (Some(m), None) if m >= 2 => return ExceptionalType::D21a41,
                    (None, None) => {
                        let s = (qa * qc).inv().expect("nonzero labels");
                        if s.is_one() {
                            return ExceptionalType::SuperA3J2;
                        }
                        if let Some(l) = ord(&s) {
                            if l >= 2 {
                                return ExceptionalType::D21a42;
                            }
                        }
                    }
                    _ => {}
                }
            }
        }
        ExceptionalType::Other
    }
}

/// Dynkin diagram data: vertex labels and the edges with `q̃_ij ≠ 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DynkinDiagram {
    pub labels: Vec<Scalar>,
    pub edges: BTreeMap<(usize, usize), Scalar>,
}

impl DynkinDiagram {
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        let key = if i < j { (i, j) } else { (j, i) };
        self.edges.contains_key(&key)
    }

    /// Edge label, `1` for non-edges.
    pub fn edge(&self, i: usize, j: usize) -> Scalar {
        let key = if i < j { (i, j) } else { (j, i) };
        self.edges.get(&key).cloned().unwrap_or_else(|| self.labels[0].field().one())
    }

    /// Induced cycles of length ≥ 4: vertex subsets whose induced subgraph
    /// is connected and 2-regular. Exhaustive over subsets; θ stays small.
    fn chordless_cycles(&self, theta: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << theta) {
            let verts: Vec<usize> = (0..theta).filter(|&v| mask >> v & 1 == 1).collect();
            if verts.len() < 4 {
                continue;
            }
            let deg_ok = verts
                .iter()
                .all(|&v| verts.iter().filter(|&&u| u != v && self.has_edge(u, v)).count() == 2);
            if !deg_ok {
                continue;
            }
            let mut seen = vec![verts[0]];
            let mut stack = vec![verts[0]];
            while let Some(v) = stack.pop() {
                for &u in &verts {
                    if u != v && self.has_edge(u, v) && !seen.contains(&u) {
                        seen.push(u);
                        stack.push(u);
                    }
                }
            }
            if seen.len() == verts.len() {
                out.push(verts);
            }
        }
        out
    }

    /// Plain-text rendering: one line per vertex, one per edge.
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for (i, label) in self.labels.iter().enumerate() {
            s.push_str(&format!("vertex {}: {}\n", i + 1, label));
        }
        for ((i, j), label) in &self.edges {
            s.push_str(&format!("edge {}-{}: {}\n", i + 1, j + 1, label));
        }
        s
    }
}

/// One failed necessary condition. Vertex indices are stored 0-based and
/// rendered 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    ChordlessCycle { vertices: Vec<usize> },
    TriangleVertexLabels { vertices: [usize; 3] },
    TriangleEdgeProduct { vertices: [usize; 3] },
    TriangleRefined { center: usize, others: [usize; 2] },
    UnitVertexEdge { vertex: usize, other: usize },
}

impl Violation {
    pub fn to_json(&self) -> Value {
        fn up(vs: &[usize]) -> Vec<usize> {
            vs.iter().map(|&v| v + 1).collect()
        }
        match self {
            Violation::ChordlessCycle { vertices } => {
                json!({"kind": "chordless-cycle", "vertices": up(vertices)})
            }
            Violation::TriangleVertexLabels { vertices } => {
                json!({"kind": "triangle-vertex-labels", "vertices": up(vertices)})
            }
            Violation::TriangleEdgeProduct { vertices } => {
                json!({"kind": "triangle-edge-product", "vertices": up(vertices)})
            }
            Violation::TriangleRefined { center, others } => {
                json!({"kind": "triangle-refined", "center": center + 1, "others": up(others)})
            }
            Violation::UnitVertexEdge { vertex, other } => {
                json!({"kind": "unit-vertex-edge", "vertex": vertex + 1, "other": other + 1})
            }
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(vs: &[usize]) -> String {
            vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(",")
        }
        match self {
            Violation::ChordlessCycle { vertices } => {
                write!(f, "chordless cycle of length {} on vertices {}", vertices.len(), list(vertices))
            }
            Violation::TriangleVertexLabels { vertices } => {
                write!(f, "3-cycle {} has no vertex labelled -1", list(vertices))
            }
            Violation::TriangleEdgeProduct { vertices } => {
                write!(f, "3-cycle {} edge labels do not multiply to 1", list(vertices))
            }
            Violation::TriangleRefined { center, others } => write!(
                f,
                "3-cycle with single -1 at vertex {} fails q_jj*q~_ij = 1 at vertices {}",
                center + 1,
                list(others)
            ),
            Violation::UnitVertexEdge { vertex, other } => write!(
                f,
                "vertex {} labelled 1 has an incident edge to vertex {}",
                vertex + 1,
                other + 1
            ),
        }
    }
}

/// Advisory finding from the optional strict 3-cycle screen.
#[derive(Debug, Clone)]
pub struct Advisory {
    pub vertices: Vec<usize>,
    pub message: String,
}

impl Advisory {
    pub fn to_json(&self) -> Value {
        json!({
            "kind": "strict-3-cycle",
            "vertices": self.vertices.iter().map(|&v| v + 1).collect::<Vec<_>>(),
            "message": self.message,
        })
    }
}

/// Exceptional diagram shapes the catalog models.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExceptionalType {
    SuperA3J2,
    SuperA3J123,
    D21a41,
    D21a42,
    D21a43,
    Other,
}

impl fmt::Display for ExceptionalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ExceptionalType::SuperA3J2 => "SuperA3-J2",
            ExceptionalType::SuperA3J123 => "SuperA3-J123",
            ExceptionalType::D21a41 => "D21a-4.1",
            ExceptionalType::D21a42 => "D21a-4.2",
            ExceptionalType::D21a43 => "D21a-4.3",
            ExceptionalType::Other => "other",
        };
        write!(f, "{s}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn field() -> Arc<GroundField> {
        GroundField::rationals("t").unwrap()
    }

    /// Rank-2 matrix with prescribed vertex labels and `q̃_12`, using the
    /// twist `q_21 = 1`.
    fn rank2(q11: Scalar, q22: Scalar, tilde: Scalar) -> BraidingMatrix {
        let k = q11.field().clone();
        BraidingMatrix::new(
            k.clone(),
            vec![vec![q11, tilde], vec![k.one(), q22]],
        )
        .unwrap()
    }

    /// Cartan A2 with generic parameter `t`: q_11 = q_22 = t, q̃_12 = 1/t.
    pub(crate) fn cartan_a2() -> BraidingMatrix {
        let k = field();
        let t = k.trans();
        rank2(t.clone(), t.clone(), t.inv().unwrap())
    }

    #[test]
    fn bicharacter_on_basis_and_zero() {
        let q = cartan_a2();
        let a1 = MultiDegree::unit(2, 0);
        let a2 = MultiDegree::unit(2, 1);
        assert_eq!(q.bicharacter(&a1, &a2).unwrap(), *q.entry(0, 1));
        assert_eq!(q.bicharacter(&MultiDegree::zero(2), &a2).unwrap(), q.field().one());
    }

    #[test]
    fn bicharacter_on_repeated_degree() {
        // χ((2,1),(2,1)) = q^4 · q̃_12^2 · q = q^3 on Cartan A2.
        let q = cartan_a2();
        let d = MultiDegree(vec![2, 1]);
        assert_eq!(q.bicharacter(&d, &d).unwrap(), q.field().trans().pow(3).unwrap());
    }

    #[test]
    fn m_values() {
        let k = field();
        let t = k.trans();
        // q_ii = t, q̃ = 1/t → m = 1.
        let q = rank2(t.clone(), t.clone(), t.inv().unwrap());
        assert_eq!(q.m_ij(0, 1).unwrap(), Some(1));
        // q̃ = 1 → m = 0.
        let q = rank2(t.clone(), t.clone(), k.one());
        assert_eq!(q.m_ij(0, 1).unwrap(), Some(0));
        // q_ii = −1, q̃ = t → the (m+1)-condition fires at m = 1.
        let q = rank2(k.from_int(-1), t.clone(), t.clone());
        assert_eq!(q.m_ij(0, 1).unwrap(), Some(1));
        // q_ii = t, q̃ = t → no m exists.
        let q = rank2(t.clone(), t.clone(), t.clone());
        assert_eq!(q.m_ij(0, 1).unwrap(), None);
        // q_ii = 1 → m = 0 via the (m+1)-condition.
        let q = rank2(k.one(), t.clone(), t.clone());
        assert_eq!(q.m_ij(0, 1).unwrap(), Some(0));
        assert!(q.m_ij(1, 1).is_err());
    }

    #[test]
    fn extend_by_sum_of_disconnected_vertices() {
        // β = α_1 + α_2 with q̃_12 = 1: q̃_iβ = q_ii², q_ββ = q_11 q_22.
        let k = field();
        let t = k.trans();
        let q = rank2(t.clone(), t.pow(3).unwrap(), k.one());
        let w = q.extend_by_root(&MultiDegree(vec![1, 1])).unwrap();
        assert_eq!(w.tilde(0, 2), t.pow(2).unwrap());
        assert_eq!(w.tilde(1, 2), t.pow(6).unwrap());
        assert_eq!(*w.entry(2, 2), t.pow(4).unwrap());
    }

    #[test]
    fn extend_matches_serre_root_labels() {
        // Cartan A2, β = 2α_1 + α_2: q̃_1β = q^{m+2} = q³ and q̃_2β = 1.
        let q = cartan_a2();
        let t = q.field().trans();
        let w = q.extend_by_root(&MultiDegree(vec![2, 1])).unwrap();
        assert_eq!(w.tilde(0, 2), t.pow(3).unwrap());
        assert!(w.tilde(1, 2).is_one());
        assert_eq!(*w.entry(2, 2), t.pow(3).unwrap());
    }

    #[test]
    fn extend_by_unit_duplicates_vertex() {
        let q = cartan_a2();
        let w = q.extend_by_root(&MultiDegree::unit(2, 0)).unwrap();
        assert_eq!(*w.entry(2, 2), *q.entry(0, 0));
        assert_eq!(w.tilde(0, 2), q.tilde(0, 0).field().trans().pow(2).unwrap());
        assert_eq!(w.tilde(1, 2), q.tilde(1, 0));
    }

    #[test]
    fn restriction_inverts_extension() {
        let q = cartan_a2();
        let w = q.extend_by_root(&MultiDegree(vec![1, 1])).unwrap();
        assert_eq!(w.restrict(&[0, 1]), q);
    }

    #[test]
    fn components_split_and_join() {
        let k = field();
        let t = k.trans();
        let q = rank2(t.clone(), t.clone(), k.one());
        assert_eq!(q.connected_components(), vec![vec![0], vec![1]]);
        let chain = BraidingMatrix::new(
            k.clone(),
            vec![
                vec![t.clone(), t.clone(), k.one()],
                vec![k.one(), t.clone(), t.clone()],
                vec![k.one(), k.one(), t.clone()],
            ],
        )
        .unwrap();
        assert_eq!(chain.connected_components(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn four_cycle_is_reported() {
        let k = field();
        let t = k.trans();
        let m = k.from_int(-1);
        let one = k.one();
        // Square: edges 1-2, 2-3, 3-4, 4-1, all labelled t.
        let q = BraidingMatrix::new(
            k.clone(),
            vec![
                vec![m.clone(), t.clone(), one.clone(), t.clone()],
                vec![one.clone(), m.clone(), t.clone(), one.clone()],
                vec![one.clone(), one.clone(), m.clone(), t.clone()],
                vec![one.clone(), one.clone(), one.clone(), m.clone()],
            ],
        )
        .unwrap();
        let v = q.check_necessary_conditions();
        assert_eq!(v.len(), 1);
        assert!(matches!(&v[0], Violation::ChordlessCycle { vertices } if vertices.len() == 4));
    }

    #[test]
    fn unit_label_with_edge_is_reported() {
        let k = field();
        let q = rank2(k.one(), k.trans(), k.trans());
        let v = q.check_necessary_conditions();
        assert!(v.iter().any(|x| matches!(x, Violation::UnitVertexEdge { vertex: 0, other: 1 })));
    }

    #[test]
    fn valid_triangle_passes() {
        // Labels (t, −1, −1), edges q̃_12 = 1/t, q̃_13 = 1/t, q̃_23 = t².
        let k = field();
        let t = k.trans();
        let ti = t.inv().unwrap();
        let q = BraidingMatrix::new(
            k.clone(),
            vec![
                vec![t.clone(), ti.clone(), ti.clone()],
                vec![k.one(), k.from_int(-1), t.pow(2).unwrap()],
                vec![k.one(), k.one(), k.from_int(-1)],
            ],
        )
        .unwrap();
        assert!(q.check_necessary_conditions().is_empty());
    }

    #[test]
    fn recognizes_catalog_shapes() {
        let k = field();
        let t = k.trans();
        let ti = t.inv().unwrap();
        let m = k.from_int(-1);
        // Chain t —1/t— (−1) —t— 1/t.
        let j2 = BraidingMatrix::new(
            k.clone(),
            vec![
                vec![t.clone(), ti.clone(), k.one()],
                vec![k.one(), m.clone(), t.clone()],
                vec![k.one(), k.one(), ti.clone()],
            ],
        )
        .unwrap();
        assert_eq!(j2.recognize_exceptional_type(), ExceptionalType::SuperA3J2);

        // Triangle all −1, edges ζ_3, t, 1/(ζ_3 t).
        let k3 = GroundField::new(3, "t").unwrap();
        let z = k3.zeta();
        let t3 = k3.trans();
        let s = (&z * &t3).inv().unwrap();
        let tri = BraidingMatrix::new(
            k3.clone(),
            vec![
                vec![k3.from_int(-1), z.clone(), t3.clone()],
                vec![k3.one(), k3.from_int(-1), s.clone()],
                vec![k3.one(), k3.one(), k3.from_int(-1)],
            ],
        )
        .unwrap();
        assert_eq!(tri.recognize_exceptional_type(), ExceptionalType::D21a43);

        assert_eq!(cartan_a2().recognize_exceptional_type(), ExceptionalType::Other);
    }
}
