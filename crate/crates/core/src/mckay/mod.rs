//! McKay graphs of finite subgroups of `SU(2)`, their identification with
//! affine ADE diagrams, and the affine root combinatorics used for the
//! lower bound on zero fibers.

mod catalog;
mod roots;

pub use catalog::{find_isomorphism, AffineType, Diagram};
pub use roots::{
    character_of_l, dimension_bound, AlphaMode, LowerBoundCharacter, ParameterVector,
    RootContext,
};

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use thiserror::Error;

use crate::groups::{CharacterError, CharacterTable, FiniteGroup, Subgroup};

/// Integer coefficients indexed by the McKay vertices.
pub type GrothendieckVector = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum McKayError {
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error("McKay multiplicity between {0} and {1} is not a non-negative integer")]
    BadMultiplicity(usize, usize),
    #[error("McKay graph is not an affine ADE diagram")]
    Unidentified,
    #[error("degenerate type A0 has no finite root system")]
    Degenerate,
    #[error("parameter vector pairs to zero with delta, so R_c is infinite")]
    InfiniteRc,
    #[error("vector is not a positive real root")]
    NotPositiveRealRoot,
    #[error("no generic parameter found on the hyperplane")]
    SearchFailed,
    #[error("no admissible root for this normal subgroup")]
    NoAdmissibleRoot,
    #[error("admissible root has dimension {got}, expected {expected}")]
    AlphaCondition { got: i64, expected: i64 },
    #[error("vector length does not match the vertex count")]
    LengthMismatch,
}

/// The McKay graph: one vertex per irreducible character (vertex 0 is the
/// trivial one) and `m_ij` edges between `i` and `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McKayGraph {
    pub multiplicities: Vec<Vec<u32>>,
    /// `δ`, the vector of character degrees.
    pub dims: GrothendieckVector,
    pub linear: Vec<bool>,
    pub kind: AffineType,
    /// `embedding[i]` is the vertex of the catalogue diagram that vertex `i`
    /// corresponds to.
    pub embedding: Vec<usize>,
}

impl McKayGraph {
    pub fn new(table: &CharacterTable) -> Result<McKayGraph, McKayError> {
        let n = table.len();
        let v = table.defining();
        let mut m = vec![vec![0u32; n]; n];
        for i in 0..n {
            let t = table.get(i).product(v);
            for (j, row) in m.iter_mut().enumerate() {
                let x = table
                    .inner_rational(&t, table.get(j))
                    .filter(|x| x.is_integer())
                    .and_then(|x| u32::try_from(x.to_integer()).ok())
                    .ok_or(McKayError::BadMultiplicity(i, j))?;
                row[i] = x;
            }
        }
        let dims = table.degrees();
        let linear = (0..n).map(|i| table.get(i).is_linear()).collect();
        for d in Diagram::candidates(n) {
            if let Some(f) = find_isomorphism(&m, core::slice::from_ref(&dims), &d.adjacency, core::slice::from_ref(&d.labels), &[]) {
                if d.labels[f[0]] != 1 {
                    continue;
                }
                return Ok(McKayGraph {
                    multiplicities: m,
                    dims,
                    linear,
                    kind: d.kind,
                    embedding: f,
                });
            }
        }
        Err(McKayError::Unidentified)
    }

    pub fn from_group(g: &FiniteGroup) -> Result<McKayGraph, McKayError> {
        McKayGraph::new(&CharacterTable::for_group(g)?)
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// The affine Cartan matrix `2·Id − M`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (if i == j { 2 } else { 0 }) - self.multiplicities[i][j] as i64)
                    .collect()
            })
            .collect()
    }

    /// `Σ v_i n_i`.
    pub fn dim(&self, v: &[i64]) -> i64 {
        v.iter().zip(&self.dims).map(|(a, b)| a * b).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        let m = &self.multiplicities;
        (0..m.len()).all(|i| (0..m.len()).all(|j| m[i][j] == m[j][i]))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (j, &m) in self.multiplicities[i].iter().enumerate() {
                if !seen[j] && m > 0 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Whether `δ` lies in the kernel of the affine Cartan matrix.
    pub fn delta_in_cartan_kernel(&self) -> bool {
        self.cartan()
            .iter()
            .all(|row| row.iter().zip(&self.dims).map(|(a, b)| a * b).sum::<i64>() == 0)
    }

    /// Rewrites a vector given in the catalogue diagram's drawing order into
    /// this graph's vertex order.
    pub fn from_diagram_order(&self, v: &[i64]) -> GrothendieckVector {
        self.embedding.iter().map(|&d| v[d]).collect()
    }

    /// Whether some labeled-graph isomorphism carries the catalogue diagram
    /// with labels `(δ, pattern)` onto this graph with labels `(δ, v)`.
    pub fn matches_pattern(&self, pattern: &[i64], v: &[i64]) -> bool {
        let d = Diagram::new(self.kind);
        pattern.len() == d.labels.len()
            && find_isomorphism(
                &d.adjacency,
                &[d.labels.clone(), pattern.to_vec()],
                &self.multiplicities,
                &[self.dims.clone(), v.to_vec()],
                &[],
            )
            .is_some()
    }

    /// Graphviz source. `trivial_on_delta` marks the linear characters of
    /// `Γ/Δ`; each annotation adds a named coefficient vector to the labels.
    pub fn to_dot(&self, trivial_on_delta: Option<&[bool]>, annotations: &[(&str, &[i64])]) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph mckay {{");
        let _ = writeln!(s, "  label=\"{}\";", self.kind);
        for i in 0..self.len() {
            let mut label = alloc::format!("{i}\\ndim {}", self.dims[i]);
            if self.linear[i] {
                label.push_str("\\nlinear");
            }
            if trivial_on_delta.is_some_and(|t| t[i]) {
                label.push_str("\\ntrivial on Δ");
            }
            for (name, v) in annotations {
                let _ = write!(label, "\\n{name}={}", v[i]);
            }
            let shape = if i == 0 { "doublecircle" } else { "circle" };
            let _ = writeln!(s, "  v{i} [label=\"{label}\", shape={shape}];");
        }
        for i in 0..self.len() {
            for j in i..self.len() {
                let mut m = self.multiplicities[i][j];
                if i == j {
                    m /= 2;
                }
                for _ in 0..m {
                    let _ = writeln!(s, "  v{i} -- v{j};");
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Vertices whose character is linear and trivial on `Δ`, i.e. the
/// characters of `Γ/Δ`.
pub fn quotient_characters(g: &FiniteGroup, table: &CharacterTable, delta: &Subgroup) -> Vec<bool> {
    (0..table.len())
        .map(|i| table.get(i).is_linear() && table.kernel_contains(g, i, &delta.elements))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupSpec;

    fn graph(spec: GroupSpec) -> McKayGraph {
        McKayGraph::from_group(&FiniteGroup::from_spec(spec).unwrap()).unwrap()
    }

    #[test]
    fn catalogue_types() {
        for spec in GroupSpec::catalogue() {
            let m = graph(spec);
            let expected = match spec {
                GroupSpec::Cyclic(l) => AffineType::A(l as usize - 1),
                GroupSpec::BinaryDihedral(n) => AffineType::D(n as usize + 2),
                GroupSpec::BinaryTetrahedral => AffineType::E6,
                GroupSpec::BinaryOctahedral => AffineType::E7,
                GroupSpec::BinaryIcosahedral => AffineType::E8,
            };
            assert_eq!(m.kind, expected, "{spec}");
            assert!(m.is_symmetric() && m.is_connected() && m.delta_in_cartan_kernel());
            assert_eq!(m.dims.iter().map(|d| d * d).sum::<i64>(), spec.order() as i64);
        }
    }

    #[test]
    fn tetrahedral_delta_diagram() {
        let m = graph(GroupSpec::BinaryTetrahedral);
        assert!(m.matches_pattern(&[1, 2, 3, 2, 1, 2, 1], &m.dims));
        assert_eq!(m.from_diagram_order(&Diagram::new(AffineType::E6).labels), m.dims);
    }

    #[test]
    fn dot_lists_every_edge() {
        let m = graph(GroupSpec::Cyclic(2));
        let dot = m.to_dot(None, &[("delta", &m.dims)]);
        assert_eq!(dot.matches(" -- ").count(), 2);
        let m = graph(GroupSpec::BinaryDihedral(3));
        assert_eq!(m.to_dot(None, &[]).matches(" -- ").count(), 5);
    }
}
