//! The affine ADE diagrams with their `δ` labels, and labeled-graph
//! isomorphism.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AffineType {
    /// `A_r^{(1)}`, `r + 1` vertices.
    A(usize),
    /// `D_r^{(1)}`, `r ≥ 4`, `r + 1` vertices.
    D(usize),
    E6,
    E7,
    E8,
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineType::A(r) => write!(f, "A{r}^(1)"),
            AffineType::D(r) => write!(f, "D{r}^(1)"),
            AffineType::E6 => f.write_str("E6^(1)"),
            AffineType::E7 => f.write_str("E7^(1)"),
            AffineType::E8 => f.write_str("E8^(1)"),
        }
    }
}

impl AffineType {
    /// Short label without the affine marker, e.g. `D5`.
    pub fn short(&self) -> String {
        match self {
            AffineType::A(r) => alloc::format!("A{r}"),
            AffineType::D(r) => alloc::format!("D{r}"),
            AffineType::E6 => "E6".into(),
            AffineType::E7 => "E7".into(),
            AffineType::E8 => "E8".into(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            AffineType::A(r) | AffineType::D(r) => r + 1,
            AffineType::E6 => 7,
            AffineType::E7 => 8,
            AffineType::E8 => 9,
        }
    }
}

/// An affine diagram in a fixed drawing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub kind: AffineType,
    /// Symmetric edge multiplicities (a loop on `A0` is stored as 2).
    pub adjacency: Vec<Vec<u32>>,
    pub labels: Vec<i64>,
}

fn from_edges(kind: AffineType, n: usize, edges: &[(usize, usize)], labels: Vec<i64>) -> Diagram {
    let mut adjacency = vec![vec![0; n]; n];
    for &(a, b) in edges {
        adjacency[a][b] += 1;
        if a != b {
            adjacency[b][a] += 1;
        } else {
            adjacency[a][a] += 1;
        }
    }
    Diagram {
        kind,
        adjacency,
        labels,
    }
}

impl Diagram {
    /// The diagram in its drawing order:
    /// `A_r`: the cycle `0..=r`;
    /// `D_{m+2}`: chain `c_0..c_m`, then `b_1` on `c_1` and `b_2` on `c_{m−1}`;
    /// `E6`: chain `c_0..c_4`, then `b_0` on `c_2`, `b_1` on `b_0`;
    /// `E7`: chain `c_0..c_6`, then `b_0` on `c_3`;
    /// `E8`: chain `c_0..c_7`, then `b_0` on `c_5`.
    pub fn new(kind: AffineType) -> Diagram {
        match kind {
            AffineType::A(0) => from_edges(kind, 1, &[(0, 0)], vec![1]),
            AffineType::A(1) => from_edges(kind, 2, &[(0, 1), (0, 1)], vec![1, 1]),
            AffineType::A(r) => {
                let edges: Vec<_> = (0..=r).map(|i| (i, (i + 1) % (r + 1))).collect();
                from_edges(kind, r + 1, &edges, vec![1; r + 1])
            }
            AffineType::D(r) => {
                let m = r - 2;
                let mut edges: Vec<_> = (0..m).map(|i| (i, i + 1)).collect();
                edges.push((1, m + 1));
                edges.push((m - 1, m + 2));
                let mut labels = vec![2; m + 3];
                labels[0] = 1;
                labels[m] = 1;
                labels[m + 1] = 1;
                labels[m + 2] = 1;
                from_edges(kind, r + 1, &edges, labels)
            }
            AffineType::E6 => from_edges(
                kind,
                7,
                &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)],
                vec![1, 2, 3, 2, 1, 2, 1],
            ),
            AffineType::E7 => from_edges(
                kind,
                8,
                &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)],
                vec![1, 2, 3, 4, 3, 2, 1, 2],
            ),
            AffineType::E8 => from_edges(
                kind,
                9,
                &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)],
                vec![1, 2, 3, 4, 5, 6, 4, 2, 3],
            ),
        }
    }

    /// Candidates with a given number of vertices.
    pub fn candidates(vertices: usize) -> Vec<Diagram> {
        let mut v = Vec::new();
        if vertices >= 1 {
            v.push(Diagram::new(AffineType::A(vertices - 1)));
        }
        if vertices >= 5 {
            v.push(Diagram::new(AffineType::D(vertices - 1)));
        }
        match vertices {
            7 => v.push(Diagram::new(AffineType::E6)),
            8 => v.push(Diagram::new(AffineType::E7)),
            9 => v.push(Diagram::new(AffineType::E8)),
            _ => {}
        }
        v
    }
}

/// Finds a bijection `f` from the vertices of `a` to those of `b` preserving
/// edge multiplicities and the given vertex labels (each label vector is a
/// list of per-vertex keys that must agree), with the prescribed pins
/// `f(x) = y`. Returns `f` as a vector.
pub fn find_isomorphism(
    a: &[Vec<u32>],
    a_labels: &[Vec<i64>],
    b: &[Vec<u32>],
    b_labels: &[Vec<i64>],
    pins: &[(usize, usize)],
) -> Option<Vec<usize>> {
    let n = a.len();
    if b.len() != n {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for &(x, y) in pins {
        if map[x] != usize::MAX || used[y] {
            return None;
        }
        map[x] = y;
        used[y] = true;
    }
    fn label_ok(al: &[Vec<i64>], bl: &[Vec<i64>], x: usize, y: usize) -> bool {
        al.iter().zip(bl).all(|(la, lb)| la[x] == lb[y])
    }
    for &(x, y) in pins {
        if !label_ok(a_labels, b_labels, x, y) {
            return None;
        }
    }
    fn degree(adj: &[Vec<u32>], x: usize) -> u32 {
        adj[x].iter().sum()
    }
    #[allow(clippy::too_many_arguments)]
    fn extend(
        a: &[Vec<u32>],
        al: &[Vec<i64>],
        b: &[Vec<u32>],
        bl: &[Vec<i64>],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        x: usize,
    ) -> bool {
        let n = a.len();
        if x == n {
            return (0..n).all(|i| (0..n).all(|j| a[i][j] == b[map[i]][map[j]]));
        }
        if map[x] != usize::MAX {
            return extend(a, al, b, bl, map, used, x + 1);
        }
        for y in 0..n {
            if used[y] || degree(a, x) != degree(b, y) || !label_ok(al, bl, x, y) {
                continue;
            }
            let consistent = (0..n).all(|p| map[p] == usize::MAX || a[x][p] == b[y][map[p]])
                && a[x][x] == b[y][y];
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if extend(a, al, b, bl, map, used, x + 1) {
                return true;
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
        false
    }
    extend(a, a_labels, b, b_labels, &mut map, &mut used, 0).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cartan_kernel_ok(d: &Diagram) -> bool {
        let n = d.labels.len();
        (0..n).all(|i| {
            let s: i64 = (0..n).map(|j| d.adjacency[i][j] as i64 * d.labels[j]).sum();
            2 * d.labels[i] == s
        })
    }

    #[test]
    fn labels_span_cartan_kernel() {
        let mut kinds = vec![AffineType::E6, AffineType::E7, AffineType::E8];
        kinds.extend((0..8).map(AffineType::A));
        kinds.extend((4..9).map(AffineType::D));
        for k in kinds {
            let d = Diagram::new(k);
            assert_eq!(d.labels.len(), k.vertex_count());
            assert!(cartan_kernel_ok(&d), "{k}");
        }
    }

    #[test]
    fn symmetric_isomorphisms() {
        let d = Diagram::new(AffineType::D(6));
        let l = vec![d.labels.clone()];
        // the two forks can be swapped
        let f = find_isomorphism(&d.adjacency, &l, &d.adjacency, &l, &[(0, 4)]).unwrap();
        assert_eq!(f[0], 4);
        let e = Diagram::new(AffineType::E6);
        assert!(find_isomorphism(&d.adjacency, &l, &e.adjacency, core::slice::from_ref(&e.labels), &[]).is_none());
    }
}
