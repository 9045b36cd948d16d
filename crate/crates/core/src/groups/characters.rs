//! Exact character tables.
//!
//! Cyclic and binary dihedral groups use closed forms, the three exceptional
//! groups use stored tables matched against the enumerated classes. Every
//! table is validated on construction, and an independent tensor sieve
//! rebuilds the table from the defining character where it terminates.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Signed;
use thiserror::Error;

use super::{FiniteGroup, GroupSpec};
use crate::cyclotomic::{CycField, Cyclotomic};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("no character method for this group (not in the catalogue and not abelian)")]
    Unsupported,
    #[error("stored table does not match the enumerated classes")]
    ClassMismatch,
    #[error("character table failed validation: {0}")]
    Invalid(&'static str),
}

/// A class function, one value per conjugacy class of the owning group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn degree(&self) -> Cyclotomic {
        self.values[0].clone()
    }

    pub fn degree_i64(&self) -> i64 {
        self.values[0].to_i64().expect("degrees are integers")
    }

    pub fn is_linear(&self) -> bool {
        self.values[0] == Cyclotomic::integer(1)
    }

    pub fn product(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.clone() * b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.clone() - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> ClassFunction {
        ClassFunction {
            values: self.values.iter().map(|a| a.clone() * c).collect(),
        }
    }
}

/// All irreducible characters of a group. Row 0 is the trivial character.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    field: Arc<CycField>,
    class_sizes: Vec<usize>,
    order: usize,
    chars: Vec<ClassFunction>,
    defining: ClassFunction,
}

impl CharacterTable {
    /// Builds and validates the table of a catalogue or abelian group.
    pub fn for_group(g: &FiniteGroup) -> Result<CharacterTable, CharacterError> {
        let field = character_field(g);
        let chars = match g.spec() {
            Some(GroupSpec::BinaryDihedral(n)) if n >= 2 => binary_dihedral(g, &field, n),
            Some(GroupSpec::BinaryTetrahedral) => stored(g, &field, &TETRAHEDRAL)?,
            Some(GroupSpec::BinaryOctahedral) => stored(g, &field, &OCTAHEDRAL)?,
            Some(GroupSpec::BinaryIcosahedral) => stored(g, &field, &ICOSAHEDRAL)?,
            _ if g.is_abelian() => cyclic(g, &field)?,
            _ => return Err(CharacterError::Unsupported),
        };
        let t = CharacterTable::assemble(g, field, chars);
        t.validate()?;
        Ok(t)
    }

    fn assemble(g: &FiniteGroup, field: Arc<CycField>, chars: Vec<ClassFunction>) -> CharacterTable {
        let defining = ClassFunction {
            values: g
                .classes()
                .iter()
                .map(|c| g.trace(c[0]).lift_to(&field).unwrap())
                .collect(),
        };
        CharacterTable {
            field,
            class_sizes: g.classes().iter().map(Vec::len).collect(),
            order: g.order(),
            chars,
            defining,
        }
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn characters(&self) -> &[ClassFunction] {
        &self.chars
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn get(&self, i: usize) -> &ClassFunction {
        &self.chars[i]
    }

    /// The character of the defining representation `C²`.
    pub fn defining(&self) -> &ClassFunction {
        &self.defining
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.chars.iter().map(ClassFunction::degree_i64).collect()
    }

    pub fn linear_indices(&self) -> Vec<usize> {
        (0..self.chars.len())
            .filter(|&i| self.chars[i].is_linear())
            .collect()
    }

    /// `(1/|G|) Σ_g a(g) conj(b(g))`.
    pub fn inner(&self, a: &ClassFunction, b: &ClassFunction) -> Cyclotomic {
        let mut acc = Cyclotomic::integer(0);
        for ((x, y), &s) in a.values.iter().zip(&b.values).zip(&self.class_sizes) {
            if x.is_zero() || y.is_zero() {
                continue;
            }
            acc = acc + &(x.clone() * &y.conj() * &Cyclotomic::integer(s as i64));
        }
        acc * &Cyclotomic::rational(BigRational::new(1.into(), (self.order as i64).into()))
    }

    /// The inner product, required to be rational.
    pub fn inner_rational(&self, a: &ClassFunction, b: &ClassFunction) -> Option<BigRational> {
        self.inner(a, b).to_rational()
    }

    /// Multiplicities of the irreducibles in a class function.
    pub fn decompose(&self, f: &ClassFunction) -> Option<Vec<BigRational>> {
        self.chars.iter().map(|c| self.inner_rational(f, c)).collect()
    }

    pub fn validate(&self) -> Result<(), CharacterError> {
        let k = self.class_sizes.len();
        if self.chars.len() != k {
            return Err(CharacterError::Invalid("row count differs from class count"));
        }
        if self.chars[0].values.iter().any(|v| *v != Cyclotomic::integer(1)) {
            return Err(CharacterError::Invalid("row 0 is not trivial"));
        }
        for (i, a) in self.chars.iter().enumerate() {
            for (j, b) in self.chars.iter().enumerate() {
                let expected = if i == j { 1 } else { 0 };
                if self.inner(a, b) != Cyclotomic::integer(expected) {
                    return Err(CharacterError::Invalid("row orthogonality"));
                }
            }
        }
        for c1 in 0..k {
            for c2 in 0..k {
                let mut s = Cyclotomic::integer(0);
                for ch in &self.chars {
                    s = s + &(ch.values[c1].clone() * &ch.values[c2].conj());
                }
                let expected = if c1 == c2 {
                    (self.order / self.class_sizes[c1]) as i64
                } else {
                    0
                };
                if s != Cyclotomic::integer(expected) {
                    return Err(CharacterError::Invalid("column orthogonality"));
                }
            }
        }
        let sum_sq: i64 = self.degrees().iter().map(|d| d * d).sum();
        if sum_sq != self.order as i64 {
            return Err(CharacterError::Invalid("sum of squared degrees"));
        }
        for a in &self.chars {
            let t = a.product(&self.defining);
            for b in &self.chars {
                let m = self
                    .inner_rational(&t, b)
                    .ok_or(CharacterError::Invalid("irrational multiplicity"))?;
                if !m.is_integer() || m.is_negative() {
                    return Err(CharacterError::Invalid("tensor multiplicity"));
                }
            }
        }
        Ok(())
    }

    /// Rebuilds the irreducible characters from the linear characters and
    /// the defining character by repeatedly decomposing products and
    /// stripping known constituents. Returns `None` if it gets stuck.
    pub fn tensor_sieve(g: &FiniteGroup) -> Option<Vec<ClassFunction>> {
        let field = character_field(g);
        let linear = linear_characters_by_generators(g, &field);
        let probe = CharacterTable::assemble(g, field.clone(), Vec::new());
        let k = g.classes().len();
        let mut known: Vec<ClassFunction> = linear.clone();
        let mut changed = true;
        let try_add = |known: &mut Vec<ClassFunction>, f: ClassFunction| -> bool {
            if known.contains(&f) {
                return false;
            }
            let mut r = f;
            for c in known.iter() {
                let m = probe.inner(&r, c);
                if !m.is_zero() {
                    r = r.sub(&c.scale(&m));
                }
            }
            if probe.inner(&r, &r) == Cyclotomic::integer(1) && r.values[0].to_i64().unwrap_or(0) > 0 {
                known.push(r);
                true
            } else {
                false
            }
        };
        try_add(&mut known, probe.defining.clone());
        while changed && known.len() < k {
            changed = false;
            let snapshot = known.clone();
            for a in &snapshot {
                changed |= try_add(&mut known, a.product(&probe.defining));
                for l in &linear {
                    changed |= try_add(&mut known, a.product(l));
                }
                for b in &snapshot {
                    changed |= try_add(&mut known, a.product(b));
                }
            }
        }
        (known.len() == k).then_some(known)
    }
}

/// Character values live in `Q(ζ_m)` with `m` the lcm of the matrix
/// conductor and the group exponent.
fn character_field(g: &FiniteGroup) -> Arc<CycField> {
    let mut m = g.field().conductor() as u64;
    for a in 0..g.order() {
        m = num_integer::Integer::lcm(&m, &(g.element_order(a) as u64));
    }
    CycField::new(m as u32).expect("character conductor within cap")
}

fn cyclic(g: &FiniteGroup, field: &Arc<CycField>) -> Result<Vec<ClassFunction>, CharacterError> {
    let n = g.order();
    // finite abelian subgroups of SU(2) are cyclic
    let gen = (0..n)
        .find(|&a| g.element_order(a) == n)
        .ok_or(CharacterError::Unsupported)?;
    let mut exponent = vec![0usize; n];
    let mut p = 0;
    for a in 0..n {
        exponent[p] = a;
        p = g.mul(p, gen);
    }
    let zeta = Cyclotomic::zeta(n as u32, 1).lift_to(field).unwrap();
    let powers: Vec<Cyclotomic> = (0..n).map(|e| zeta.pow(e as u32)).collect();
    Ok((0..n)
        .map(|k| ClassFunction {
            values: g
                .classes()
                .iter()
                .map(|c| powers[(k * exponent[c[0]]) % n].clone())
                .collect(),
        })
        .collect())
}

fn binary_dihedral(g: &FiniteGroup, field: &Arc<CycField>, n: u32) -> Vec<ClassFunction> {
    let (w1, w2) = (g.generator_indices()[0], g.generator_indices()[1]);
    let m = 2 * n as usize;
    // (a, s) with element = w1^a w2^s
    let mut coords = vec![(0usize, 0usize); g.order()];
    for a in 0..m {
        for s in 0..2 {
            coords[g.mul(g.pow(w1, a), g.pow(w2, s))] = (a, s);
        }
    }
    let zeta = Cyclotomic::zeta(m as u32, 1).lift_to(field).unwrap();
    let one = Cyclotomic::integer(1).lift_to(field).unwrap();
    let reps: Vec<(usize, usize)> = g.classes().iter().map(|c| coords[c[0]]).collect();
    let mut chars = Vec::new();
    for eps in [1i64, -1] {
        let tau_sq = if eps == -1 && n % 2 == 1 { -1 } else { 1 };
        let taus = if tau_sq == 1 {
            [one.clone(), -one.clone()]
        } else {
            [Cyclotomic::i().lift_to(field).unwrap(), -Cyclotomic::i().lift_to(field).unwrap()]
        };
        for tau in taus {
            let e = Cyclotomic::integer(eps).lift_to(field).unwrap();
            chars.push(ClassFunction {
                values: reps
                    .iter()
                    .map(|&(a, s)| {
                        let v = e.pow(a as u32);
                        if s == 1 {
                            v * &tau
                        } else {
                            v
                        }
                    })
                    .collect(),
            });
        }
    }
    for k in 1..n as usize {
        chars.push(ClassFunction {
            values: reps
                .iter()
                .map(|&(a, s)| {
                    if s == 1 {
                        Cyclotomic::integer(0).lift_to(field).unwrap()
                    } else {
                        zeta.pow(((k * a) % m) as u32) + &zeta.pow(((m - (k * a) % m) % m) as u32)
                    }
                })
                .collect(),
        });
    }
    chars
}

/// Linear characters found by assigning roots of unity to the generators
/// and propagating along the Cayley graph; assignments that are not
/// homomorphisms are discarded.
pub(crate) fn linear_characters_by_generators(g: &FiniteGroup, field: &Arc<CycField>) -> Vec<ClassFunction> {
    let gens = g.generator_indices();
    let m = field.conductor() as usize;
    let zeta = Cyclotomic::zeta_in(field, 1);
    let roots: Vec<Cyclotomic> = (0..m).map(|e| zeta.pow(e as u32)).collect();
    let mut result = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        // exponent of each generator's value, constrained by its order
        let valid = gens
            .iter()
            .zip(&choice)
            .all(|(&x, &c)| (c * g.element_order(x)).is_multiple_of(m));
        if valid {
            if let Some(values) = propagate(g, gens, &choice, m) {
                let f = ClassFunction {
                    values: g.classes().iter().map(|c| roots[values[c[0]]].clone()).collect(),
                };
                if !result.contains(&f) {
                    result.push(f);
                }
            }
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                result.sort_by(|a: &ClassFunction, b| {
                    let trivial = |f: &ClassFunction| f.values.iter().all(|v| *v == Cyclotomic::integer(1));
                    trivial(b).cmp(&trivial(a))
                });
                return result;
            }
            choice[i] += 1;
            if choice[i] < m {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn propagate(g: &FiniteGroup, gens: &[usize], choice: &[usize], m: usize) -> Option<Vec<usize>> {
    let n = g.order();
    let mut val = vec![usize::MAX; n];
    val[0] = 0;
    let mut queue = vec![0];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (&s, &c) in gens.iter().zip(choice) {
            let y = g.mul(x, s);
            let v = (val[x] + c) % m;
            if val[y] == usize::MAX {
                val[y] = v;
                queue.push(y);
            } else if val[y] != v {
                return None;
            }
        }
        i += 1;
    }
    Some(val)
}

/// A stored table: values `a + b·θ` for a fixed algebraic number `θ`.
struct StoredTable {
    theta: fn() -> Cyclotomic,
    /// (element order, class size, trace as (a, b), stored index of the
    /// class of squares)
    classes: &'static [(usize, usize, (i64, i64), usize)],
    rows: &'static [&'static [(i64, i64)]],
}

fn omega() -> Cyclotomic {
    Cyclotomic::zeta(3, 1)
}

fn golden() -> Cyclotomic {
    (Cyclotomic::integer(1) + &Cyclotomic::sqrt5()) * &Cyclotomic::rational(BigRational::new(1.into(), 2.into()))
}

const Z: (i64, i64) = (0, 0);

const fn n(a: i64) -> (i64, i64) {
    (a, 0)
}

static TETRAHEDRAL: StoredTable = StoredTable {
    theta: omega,
    classes: &[
        (1, 1, n(2), 0),
        (2, 1, n(-2), 0),
        (4, 6, Z, 1),
        (6, 4, n(1), 5),
        (6, 4, n(1), 6),
        (3, 4, n(-1), 6),
        (3, 4, n(-1), 5),
    ],
    rows: &[
        &[n(1), n(1), n(1), n(1), n(1), n(1), n(1)],
        &[n(1), n(1), n(1), (0, 1), (-1, -1), (-1, -1), (0, 1)],
        &[n(1), n(1), n(1), (-1, -1), (0, 1), (0, 1), (-1, -1)],
        &[n(2), n(-2), Z, n(1), n(1), n(-1), n(-1)],
        &[n(2), n(-2), Z, (0, 1), (-1, -1), (1, 1), (0, -1)],
        &[n(2), n(-2), Z, (-1, -1), (0, 1), (0, -1), (1, 1)],
        &[n(3), n(3), n(-1), Z, Z, Z, Z],
    ],
};

static OCTAHEDRAL: StoredTable = StoredTable {
    theta: Cyclotomic::sqrt2,
    classes: &[
        (1, 1, n(2), 0),
        (2, 1, n(-2), 0),
        (4, 6, Z, 1),
        (8, 6, (0, 1), 2),
        (8, 6, (0, -1), 2),
        (3, 8, n(-1), 5),
        (6, 8, n(1), 5),
        (4, 12, Z, 1),
    ],
    rows: &[
        &[n(1), n(1), n(1), n(1), n(1), n(1), n(1), n(1)],
        &[n(1), n(1), n(1), n(-1), n(-1), n(1), n(1), n(-1)],
        &[n(2), n(-2), Z, (0, 1), (0, -1), n(-1), n(1), Z],
        &[n(2), n(-2), Z, (0, -1), (0, 1), n(-1), n(1), Z],
        &[n(2), n(2), n(2), Z, Z, n(-1), n(-1), Z],
        &[n(3), n(3), n(-1), n(1), n(1), Z, Z, n(-1)],
        &[n(3), n(3), n(-1), n(-1), n(-1), Z, Z, n(1)],
        &[n(4), n(-4), Z, Z, Z, n(1), n(-1), Z],
    ],
};

static ICOSAHEDRAL: StoredTable = StoredTable {
    theta: golden,
    classes: &[
        (1, 1, n(2), 0),
        (2, 1, n(-2), 0),
        (4, 30, Z, 1),
        (6, 20, n(1), 4),
        (3, 20, n(-1), 4),
        (10, 12, (0, 1), 7),
        (10, 12, (1, -1), 8),
        (5, 12, (-1, 1), 8),
        (5, 12, (0, -1), 7),
    ],
    rows: &[
        &[n(1), n(1), n(1), n(1), n(1), n(1), n(1), n(1), n(1)],
        &[n(2), n(-2), Z, n(1), n(-1), (0, 1), (1, -1), (-1, 1), (0, -1)],
        &[n(3), n(3), n(-1), Z, Z, (0, 1), (1, -1), (1, -1), (0, 1)],
        &[n(4), n(-4), Z, n(-1), n(1), n(1), n(1), n(-1), n(-1)],
        &[n(5), n(5), n(1), n(-1), n(-1), Z, Z, Z, Z],
        &[n(6), n(-6), Z, Z, Z, n(-1), n(-1), n(1), n(1)],
        &[n(4), n(4), Z, n(1), n(1), n(-1), n(-1), n(-1), n(-1)],
        &[n(2), n(-2), Z, n(1), n(-1), (1, -1), (0, 1), (0, -1), (-1, 1)],
        &[n(3), n(3), n(-1), Z, Z, (1, -1), (0, 1), (0, 1), (1, -1)],
    ],
};

fn stored(
    g: &FiniteGroup,
    field: &Arc<CycField>,
    table: &StoredTable,
) -> Result<Vec<ClassFunction>, CharacterError> {
    let theta = (table.theta)().lift_to(field).unwrap();
    let value = |(a, b): (i64, i64)| {
        (Cyclotomic::integer(a) + &(theta.clone() * &Cyclotomic::integer(b)))
            .lift_to(field)
            .unwrap()
    };
    let k = g.classes().len();
    if table.classes.len() != k {
        return Err(CharacterError::ClassMismatch);
    }
    let enumerated: Vec<(usize, usize, Cyclotomic, usize)> = g
        .classes()
        .iter()
        .map(|c| {
            let r = c[0];
            (
                g.element_order(r),
                c.len(),
                g.trace(r),
                g.class_of(g.mul(r, r)),
            )
        })
        .collect();
    let mut assign = vec![usize::MAX; k];
    let mut used = vec![false; k];
    if !match_classes(table, &enumerated, &value, 0, &mut assign, &mut used) {
        return Err(CharacterError::ClassMismatch);
    }
    // assign[stored] = enumerated; invert to read values per enumerated class
    let mut stored_of = vec![0; k];
    for (s, &e) in assign.iter().enumerate() {
        stored_of[e] = s;
    }
    Ok(table
        .rows
        .iter()
        .map(|row| ClassFunction {
            values: (0..k).map(|e| value(row[stored_of[e]])).collect(),
        })
        .collect())
}

fn match_classes(
    table: &StoredTable,
    enumerated: &[(usize, usize, Cyclotomic, usize)],
    value: &dyn Fn((i64, i64)) -> Cyclotomic,
    s: usize,
    assign: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if s == table.classes.len() {
        return table
            .classes
            .iter()
            .enumerate()
            .all(|(i, c)| enumerated[assign[i]].3 == assign[c.3]);
    }
    let (order, size, trace, _) = table.classes[s];
    let trace = value(trace);
    for e in 0..enumerated.len() {
        if used[e] {
            continue;
        }
        let (eo, es, ref et, _) = enumerated[e];
        if eo == order && es == size && *et == trace {
            used[e] = true;
            assign[s] = e;
            if match_classes(table, enumerated, value, s + 1, assign, used) {
                return true;
            }
            used[e] = false;
        }
    }
    false
}

impl CharacterTable {
    /// Index of the row equal to `f`, if any.
    pub fn position(&self, f: &ClassFunction) -> Option<usize> {
        self.chars.iter().position(|c| c == f)
    }

    /// Values of a character on each element of the group (not each class).
    pub fn element_values(&self, g: &FiniteGroup, i: usize) -> Vec<Cyclotomic> {
        (0..g.order())
            .map(|a| self.chars[i].values[g.class_of(a)].clone())
            .collect()
    }

    /// Whether `χ(d) = 1` for every `d` in the given element list.
    pub fn kernel_contains(&self, g: &FiniteGroup, i: usize, elements: &[usize]) -> bool {
        let one = Cyclotomic::integer(1);
        elements
            .iter()
            .all(|&d| self.chars[i].values[g.class_of(d)] == one)
    }

    /// Restriction of character `i` to a list of elements.
    pub fn restrict(&self, g: &FiniteGroup, i: usize, elements: &[usize]) -> Vec<Cyclotomic> {
        elements
            .iter()
            .map(|&d| self.chars[i].values[g.class_of(d)].clone())
            .collect()
    }

    /// The rational number `(1/|G|) Σ_g f(g)` for a class function.
    pub fn average(&self, f: &ClassFunction) -> Cyclotomic {
        let one = ClassFunction {
            values: vec![Cyclotomic::integer(1); f.values.len()],
        };
        self.inner(f, &one)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(spec: GroupSpec) -> (FiniteGroup, CharacterTable) {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let t = CharacterTable::for_group(&g).unwrap();
        (g, t)
    }

    fn sorted_degrees(t: &CharacterTable) -> Vec<i64> {
        let mut d = t.degrees();
        d.sort_unstable();
        d
    }

    #[test]
    fn cyclic_four() {
        let (g, t) = table(GroupSpec::Cyclic(4));
        assert_eq!(t.len(), 4);
        assert_eq!(t.linear_indices().len(), 4);
        let w = g.generator_indices()[0];
        let i = Cyclotomic::i();
        for k in 0..4 {
            assert_eq!(t.get(k).values[g.class_of(w)].pow(4), Cyclotomic::integer(1));
        }
        assert!(t.characters().iter().any(|c| c.values[g.class_of(w)] == i));
    }

    #[test]
    fn degrees() {
        let (_, t) = table(GroupSpec::BinaryDihedral(2));
        assert_eq!(sorted_degrees(&t), vec![1, 1, 1, 1, 2]);
        let (_, t) = table(GroupSpec::BinaryIcosahedral);
        assert_eq!(t.degrees(), vec![1, 2, 3, 4, 5, 6, 4, 2, 3]);
        assert_eq!(t.linear_indices().len(), 1);
        let (_, t) = table(GroupSpec::BinaryTetrahedral);
        assert_eq!(t.linear_indices().len(), 3);
        let (_, t) = table(GroupSpec::Cyclic(7));
        assert_eq!(t.linear_indices().len(), 7);
    }

    #[test]
    fn sieve_agrees_where_it_terminates() {
        for spec in [
            GroupSpec::Cyclic(5),
            GroupSpec::BinaryDihedral(2),
            GroupSpec::BinaryDihedral(3),
            GroupSpec::BinaryDihedral(4),
            GroupSpec::BinaryTetrahedral,
            GroupSpec::BinaryOctahedral,
        ] {
            let (g, t) = table(spec);
            let sieve = CharacterTable::tensor_sieve(&g).unwrap_or_else(|| panic!("{spec}"));
            assert_eq!(sieve.len(), t.len());
            for c in &sieve {
                assert!(t.position(c).is_some(), "{spec}");
            }
        }
    }

    #[test]
    fn defining_character_is_real() {
        for spec in GroupSpec::catalogue() {
            let (_, t) = table(spec);
            assert!(t.defining().values.iter().all(Cyclotomic::is_real));
        }
    }
}
