//! The finite subgroups of `SU(2) ≅ H^×` used throughout: their generating
//! matrices, enumeration by closure, multiplication tables and conjugacy
//! classes.

mod characters;
mod subgroup;

pub use characters::{CharacterError, CharacterTable, ClassFunction};
pub use subgroup::{Subgroup, SubgroupError, SubgroupSpec};

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::cyclotomic::{CycField, Cyclotomic};
use crate::linalg::Matrix;
use crate::quaternion::Quaternion;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupSpec {
    Cyclic(u32),
    BinaryDihedral(u32),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("unknown group spec `{0}` (expected cyclic:L, bd:N, bt, bo or bi)")]
    UnknownSpec(String),
    #[error("group parameter must be at least 1")]
    BadParameter,
    #[error("closure exceeded {0} elements")]
    CapExceeded(usize),
    #[error("generator is not in SU(2)")]
    NotSpecialUnitary,
}

impl GroupSpec {
    pub fn order(&self) -> usize {
        match *self {
            GroupSpec::Cyclic(l) => l as usize,
            GroupSpec::BinaryDihedral(n) => 4 * n as usize,
            GroupSpec::BinaryTetrahedral => 24,
            GroupSpec::BinaryOctahedral => 48,
            GroupSpec::BinaryIcosahedral => 120,
        }
    }

    /// The conductor of the smallest cyclotomic field containing every
    /// matrix entry of the group.
    pub fn conductor(&self) -> u32 {
        match *self {
            GroupSpec::Cyclic(l) => l.max(1),
            GroupSpec::BinaryDihedral(n) => lcm(2 * n, 4),
            GroupSpec::BinaryTetrahedral => 4,
            GroupSpec::BinaryOctahedral => 8,
            GroupSpec::BinaryIcosahedral => 20,
        }
    }

    pub fn is_abelian(&self) -> bool {
        matches!(
            self,
            GroupSpec::Cyclic(_) | GroupSpec::BinaryDihedral(1)
        )
    }

    /// Generating matrices: `diag(ζ, ζ⁻¹)` for the cyclic and dihedral
    /// rotations, `[[0, i], [i, 0]]`, the tetrahedral `(1−i)⁻¹[[1, i], [1, −i]]`
    /// and the icosahedral `(1/√5)[[ζ−ζ⁴, ζ³−ζ²], [ζ³−ζ², −ζ+ζ⁴]]`. The
    /// icosahedral group uses `[[0, 1], [−1, 0]]` in place of `[[0, i], [i, 0]]`,
    /// which does not normalize it. Its third generator is conjugated by
    /// `diag(i, −i)` so that `xy(x^10 + 11x^5y^5 − y^10)` is invariant.
    pub fn generators(&self) -> Vec<Matrix<Cyclotomic>> {
        let i = Cyclotomic::i();
        let zero = Cyclotomic::integer(0);
        let diag = |z: Cyclotomic| {
            Matrix::from_rows(vec![vec![z.clone(), zero.clone()], vec![zero.clone(), z.conj()]])
        };
        let w2 = Matrix::from_rows(vec![vec![zero.clone(), i.clone()], vec![i.clone(), zero.clone()]]);
        let tetra = || {
            let s = (Cyclotomic::integer(1) - &i).checked_inv().unwrap();
            Matrix::from_rows(vec![
                vec![s.clone(), s.clone() * &i],
                vec![s.clone(), -(s * &i)],
            ])
        };
        match *self {
            GroupSpec::Cyclic(l) => vec![diag(Cyclotomic::zeta(l.max(1), 1))],
            GroupSpec::BinaryDihedral(n) => vec![diag(Cyclotomic::zeta(2 * n, 1)), w2],
            GroupSpec::BinaryTetrahedral => vec![diag(i.clone()), w2, tetra()],
            GroupSpec::BinaryOctahedral => vec![diag(Cyclotomic::zeta(8, 1)), w2, tetra()],
            GroupSpec::BinaryIcosahedral => {
                let z = |k| Cyclotomic::zeta(5, k);
                let s = Cyclotomic::sqrt5().checked_inv().unwrap();
                let a = (z(1) - &z(4)) * &s;
                let b = (z(2) - &z(3)) * &s;
                let w3 = Matrix::from_rows(vec![vec![a.clone(), -b.clone()], vec![-b, -a]]);
                let t = Matrix::from_rows(vec![
                    vec![zero.clone(), Cyclotomic::integer(1)],
                    vec![Cyclotomic::integer(-1), zero.clone()],
                ]);
                vec![diag(Cyclotomic::zeta(10, 1)), t, w3]
            }
        }
    }

    /// Affine Dynkin label of the McKay graph, e.g. `E6`.
    pub fn ade_label(&self) -> String {
        match *self {
            GroupSpec::Cyclic(l) => alloc::format!("A{}", l.saturating_sub(1)),
            GroupSpec::BinaryDihedral(1) => "A3".to_string(),
            GroupSpec::BinaryDihedral(n) => alloc::format!("D{}", n + 2),
            GroupSpec::BinaryTetrahedral => "E6".to_string(),
            GroupSpec::BinaryOctahedral => "E7".to_string(),
            GroupSpec::BinaryIcosahedral => "E8".to_string(),
        }
    }

    /// Every group in the standard test catalogue.
    pub fn catalogue() -> Vec<GroupSpec> {
        let mut v: Vec<GroupSpec> = (2..=8).map(GroupSpec::Cyclic).collect();
        v.extend((2..=5).map(GroupSpec::BinaryDihedral));
        v.extend([
            GroupSpec::BinaryTetrahedral,
            GroupSpec::BinaryOctahedral,
            GroupSpec::BinaryIcosahedral,
        ]);
        v
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    num_integer::Integer::lcm(&a, &b)
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(l) => write!(f, "cyclic:{l}"),
            GroupSpec::BinaryDihedral(n) => write!(f, "bd:{n}"),
            GroupSpec::BinaryTetrahedral => f.write_str("bt"),
            GroupSpec::BinaryOctahedral => f.write_str("bo"),
            GroupSpec::BinaryIcosahedral => f.write_str("bi"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<GroupSpec, GroupError> {
        let s = s.trim();
        let unknown = || GroupError::UnknownSpec(s.to_string());
        let param = |p: &str| -> Result<u32, GroupError> {
            let v: u32 = p.trim().parse().map_err(|_| unknown())?;
            if v == 0 {
                Err(GroupError::BadParameter)
            } else {
                Ok(v)
            }
        };
        match s.split_once(':') {
            Some(("cyclic", p)) => Ok(GroupSpec::Cyclic(param(p)?)),
            Some(("bd", p)) => Ok(GroupSpec::BinaryDihedral(param(p)?)),
            None => match s {
                "bt" => Ok(GroupSpec::BinaryTetrahedral),
                "bo" => Ok(GroupSpec::BinaryOctahedral),
                "bi" => Ok(GroupSpec::BinaryIcosahedral),
                _ => Err(unknown()),
            },
            _ => Err(unknown()),
        }
    }
}

type Key = (Cyclotomic, Cyclotomic);

/// A finite subgroup of `SU(2)`, enumerated.
///
/// Elements are stored as unit quaternions `z1 + j z2`, equivalently the
/// matrices `[[z1, −conj z2], [z2, conj z1]]`, all with coefficients in one
/// cyclotomic field.
#[derive(Clone)]
pub struct FiniteGroup {
    spec: Option<GroupSpec>,
    field: Arc<CycField>,
    elements: Vec<Quaternion>,
    index: BTreeMap<Key, usize>,
    generators: Vec<usize>,
    mul: Vec<u32>,
    inv: Vec<usize>,
    orders: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("spec", &self.spec)
            .field("order", &self.order())
            .field("classes", &self.classes.len())
            .finish()
    }
}

impl FiniteGroup {
    /// Enumerates a catalogue group from its generators.
    pub fn from_spec(spec: GroupSpec) -> Result<FiniteGroup, GroupError> {
        let field = CycField::new(spec.conductor()).expect("catalogue conductors are small");
        let mut g = FiniteGroup::close(&spec.generators(), &field, spec.order())?;
        g.spec = Some(spec);
        Ok(g)
    }

    /// Breadth-first closure of the generated group, failing once more than
    /// `cap` elements have been found.
    pub fn close(
        generators: &[Matrix<Cyclotomic>],
        field: &Arc<CycField>,
        cap: usize,
    ) -> Result<FiniteGroup, GroupError> {
        let lift = |z: &Cyclotomic| z.lift_to(field).map_err(|_| GroupError::NotSpecialUnitary);
        let mut gens = Vec::new();
        for m in generators {
            let q = Quaternion::from_su2(m).ok_or(GroupError::NotSpecialUnitary)?;
            if q.norm_sq() != Cyclotomic::integer(1) {
                return Err(GroupError::NotSpecialUnitary);
            }
            gens.push(Quaternion::new(lift(&q.z1)?, lift(&q.z2)?));
        }
        let one = Quaternion::new(
            Cyclotomic::integer(1).lift_to(field).unwrap(),
            Cyclotomic::integer(0).lift_to(field).unwrap(),
        );
        let mut elements = vec![one.clone()];
        let mut index = BTreeMap::new();
        index.insert(key(&one), 0usize);
        let mut frontier = 0;
        while frontier < elements.len() {
            let x = elements[frontier].clone();
            for g in &gens {
                let y = x.clone() * g;
                let k = key(&y);
                if let alloc::collections::btree_map::Entry::Vacant(e) = index.entry(k) {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded(cap));
                    }
                    e.insert(elements.len());
                    elements.push(y);
                }
            }
            frontier += 1;
        }
        let n = elements.len();
        let generators = gens.iter().map(|g| index[&key(g)]).collect();
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let p = elements[a].clone() * &elements[b];
                mul[a * n + b] = index[&key(&p)] as u32;
            }
        }
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[a] = (0..n).find(|&b| mul[a * n + b] == 0).expect("finite group");
        }
        let mut orders = vec![0; n];
        for (a, o) in orders.iter_mut().enumerate() {
            let mut p = a;
            let mut k = 1;
            while p != 0 {
                p = mul[p * n + a] as usize;
                k += 1;
            }
            *o = k;
        }
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let mut cls: Vec<usize> = (0..n)
                .map(|g| mul[mul[g * n + a] as usize * n + inv[g]] as usize)
                .collect();
            cls.sort_unstable();
            cls.dedup();
            for &c in &cls {
                class_of[c] = classes.len();
            }
            classes.push(cls);
        }
        Ok(FiniteGroup {
            spec: None,
            field: field.clone(),
            elements,
            index,
            generators,
            mul,
            inv,
            orders,
            classes,
            class_of,
        })
    }

    pub fn spec(&self) -> Option<GroupSpec> {
        self.spec
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn element(&self, a: usize) -> &Quaternion {
        &self.elements[a]
    }

    pub fn elements(&self) -> &[Quaternion] {
        &self.elements
    }

    /// The 2×2 complex matrix of element `a`.
    pub fn matrix(&self, a: usize) -> Matrix<Cyclotomic> {
        self.elements[a].left_matrix()
    }

    pub fn index_of(&self, q: &Quaternion) -> Option<usize> {
        let q = Quaternion::new(q.z1.lift_to(&self.field).ok()?, q.z2.lift_to(&self.field).ok()?);
        self.index.get(&key(&q)).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a]
    }

    /// The trace of the defining two-dimensional representation.
    pub fn trace(&self, a: usize) -> Cyclotomic {
        let z = &self.elements[a].z1;
        z.clone() + &z.conj()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The subgroup generated by a set of elements, as a sorted index list.
    pub fn generated_by(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut list = vec![0];
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    list.push(y);
                }
            }
            i += 1;
        }
        list.sort_unstable();
        list
    }
}

fn key(q: &Quaternion) -> Key {
    (q.z1.clone(), q.z2.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_specs() {
        assert_eq!("cyclic:5".parse::<GroupSpec>(), Ok(GroupSpec::Cyclic(5)));
        assert_eq!("bd:3".parse::<GroupSpec>(), Ok(GroupSpec::BinaryDihedral(3)));
        assert_eq!("bi".parse::<GroupSpec>(), Ok(GroupSpec::BinaryIcosahedral));
        assert!("e8".parse::<GroupSpec>().is_err());
        assert_eq!("bd:0".parse::<GroupSpec>(), Err(GroupError::BadParameter));
        for s in GroupSpec::catalogue() {
            assert_eq!(s.to_string().parse::<GroupSpec>(), Ok(s));
        }
    }

    #[test]
    fn generators_match_reference_matrices() {
        let g = GroupSpec::Cyclic(3).generators();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0][(0, 0)], Cyclotomic::zeta(3, 1));
        assert_eq!(g[0][(1, 1)], Cyclotomic::zeta(3, -1));
        let bd = GroupSpec::BinaryDihedral(2).generators();
        assert_eq!(bd[0][(0, 0)], Cyclotomic::i());
        assert_eq!(bd[1][(0, 1)], Cyclotomic::i());
        assert_eq!(bd[1][(1, 0)], Cyclotomic::i());
        let bt = GroupSpec::BinaryTetrahedral.generators();
        assert_eq!(bt.len(), 3);
        // (1 - i) w3 = [[1, i], [1, -i]]
        let s = Cyclotomic::integer(1) - &Cyclotomic::i();
        assert_eq!(bt[2][(0, 0)].clone() * &s, Cyclotomic::integer(1));
        assert_eq!(bt[2][(1, 1)].clone() * &s, -Cyclotomic::i());
    }

    #[test]
    fn closure_orders() {
        for spec in GroupSpec::catalogue() {
            let g = FiniteGroup::from_spec(spec).unwrap();
            assert_eq!(g.order(), spec.order(), "{spec}");
            let total: usize = g.classes().iter().map(Vec::len).sum();
            assert_eq!(total, g.order());
            assert_eq!(g.classes()[0], vec![0]);
            for a in 0..g.order() {
                assert_eq!(g.order() % g.element_order(a), 0);
                assert_eq!(g.mul(a, g.inv(a)), 0);
                assert_eq!(g.matrix(a).rank(), 2);
            }
        }
    }

    #[test]
    fn closure_cap() {
        let spec = GroupSpec::BinaryIcosahedral;
        let field = CycField::new(20).unwrap();
        assert_eq!(
            FiniteGroup::close(&spec.generators(), &field, 100).unwrap_err(),
            GroupError::CapExceeded(100)
        );
    }
}
