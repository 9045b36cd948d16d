//! Semi-invariant dimensions in `L^{⊗n} ⊗ det` for `W_n(Γ, Δ)`, an
//! independent check by averaging the wreath character, the two product
//! formula tables, and the `(g + 1)^n` lower-bound report.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::cyclotomic::Cyclotomic;
use crate::groups::{CharacterError, CharacterTable, FiniteGroup, GroupError, GroupSpec, Subgroup, SubgroupError, SubgroupSpec};
use crate::invariants::{zero_fiber_degree, InvariantError};
use crate::mckay::{
    character_of_l, dimension_bound, quotient_characters, AlphaMode, GrothendieckVector, McKayError, McKayGraph,
    RootContext,
};
use crate::wreath::{binomial, WreathError, WreathGroup};

/// Default bound on `|W|` for the averaging oracle.
pub const DEFAULT_ORACLE_CAP: u128 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Subgroup(#[from] SubgroupError),
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error(transparent)]
    McKay(#[from] McKayError),
    #[error(transparent)]
    Wreath(#[from] WreathError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("character {0} is not linear")]
    NotLinear(usize),
    #[error("coefficient vector has the wrong length or a negative entry")]
    BadCharacter,
    #[error("averaged multiplicity is not a non-negative integer")]
    NonIntegral,
    #[error("no catalogue instance for this table row")]
    UnsupportedCase,
    #[error("rank must be at least 1")]
    ZeroRank,
}

/// The sign character of `S_n` that twists the tensor power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Eta {
    Triv,
    Det,
}

impl fmt::Display for Eta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Eta::Triv => "triv",
            Eta::Det => "det",
        })
    }
}

/// A group together with its character table and McKay graph; vertex `i`
/// of the graph is character `i` of the table.
#[derive(Debug, Clone)]
pub struct GroupData {
    pub spec: GroupSpec,
    pub group: FiniteGroup,
    pub table: CharacterTable,
    pub graph: McKayGraph,
}

impl GroupData {
    pub fn new(spec: GroupSpec) -> Result<GroupData, BoundsError> {
        let group = FiniteGroup::from_spec(spec)?;
        let table = CharacterTable::for_group(&group)?;
        let graph = McKayGraph::new(&table)?;
        Ok(GroupData {
            spec,
            group,
            table,
            graph,
        })
    }

    pub fn linear(&self) -> Vec<usize> {
        self.table.linear_indices()
    }

    fn restrictions_agree(&self, a: usize, b: usize, delta: &Subgroup) -> bool {
        delta
            .elements
            .iter()
            .all(|&d| {
                let c = self.group.class_of(d);
                self.table.get(a).values[c] == self.table.get(b).values[c]
            })
    }

    /// Linear `ψ` with `ψ|_Δ = χ|_Δ`.
    pub fn matching_linear(&self, chi: usize, delta: &Subgroup) -> Vec<usize> {
        self.linear()
            .into_iter()
            .filter(|&psi| self.restrictions_agree(psi, chi, delta))
            .collect()
    }
}

/// `dim (L^{⊗n} ⊗ det)^{(χ, η)}` for `W_n(Γ, Δ)`: the sum over linear `ψ`
/// with `ψ|_Δ = χ|_Δ` of `C(d_ψ, n)` (`η` trivial) or `C(d_ψ + n − 1, n)`
/// (`η = det`), with `d_ψ` the coefficient of `ch L` at `ψ`.
pub fn semiinv_dim_formula(
    data: &GroupData,
    delta: &Subgroup,
    n: usize,
    ch_l: &[i64],
    chi: usize,
    eta: Eta,
) -> Result<u64, BoundsError> {
    if chi >= data.table.len() || !data.table.get(chi).is_linear() {
        return Err(BoundsError::NotLinear(chi));
    }
    if ch_l.len() != data.table.len() || ch_l.iter().any(|&c| c < 0) {
        return Err(BoundsError::BadCharacter);
    }
    Ok(data
        .matching_linear(chi, delta)
        .into_iter()
        .map(|psi| {
            let d = ch_l[psi] as u64;
            match eta {
                Eta::Triv => binomial(d, n as u64),
                Eta::Det => binomial(d + n as u64 - 1, n as u64),
            }
        })
        .sum())
}

/// Counts of elements of `W_n(Γ, Δ)` by sign of the permutation, the
/// multiset of classes of the cycle products, and the class of `Π γ_i`.
/// The character of `L^{⊗n}` on `(γ; σ)` is the product of `χ_L` over
/// the cycle products, so these counts determine every multiplicity.
#[derive(Debug, Clone)]
pub struct WreathHistogram {
    pub order: u128,
    pub n: usize,
    counts: BTreeMap<(bool, Vec<usize>, usize), u64>,
}

impl WreathHistogram {
    pub fn new(data: &GroupData, delta: &Subgroup, n: usize, cap: u128) -> Result<WreathHistogram, BoundsError> {
        let g = &data.group;
        let w = WreathGroup::new(g, delta, n)?;
        let mut counts = BTreeMap::new();
        w.for_each_element(cap, |e| {
            let mut seen = vec![false; n];
            let mut inverse = vec![0; n];
            for (j, &p) in e.perm.iter().enumerate() {
                inverse[p] = j;
            }
            let mut classes = Vec::new();
            let mut odd = false;
            for start in 0..n {
                if seen[start] {
                    continue;
                }
                let mut prod = g.identity();
                let mut j = start;
                let mut len = 0;
                while !seen[j] {
                    seen[j] = true;
                    prod = g.mul(prod, e.gammas[j]);
                    j = inverse[j];
                    len += 1;
                }
                odd ^= len % 2 == 0;
                classes.push(g.class_of(prod));
            }
            classes.sort_unstable();
            let total = e.gammas.iter().fold(g.identity(), |acc, &x| g.mul(acc, x));
            *counts.entry((odd, classes, g.class_of(total))).or_insert(0) += 1;
        })?;
        Ok(WreathHistogram {
            order: w.order(),
            n,
            counts,
        })
    }

    /// `|W|⁻¹ Σ_w sgn(σ) χ_{L^{⊗n}}(w) · conj((χ, η)(w))`.
    pub fn multiplicity(&self, data: &GroupData, ch_l: &[i64], chi: usize, eta: Eta) -> Result<u64, BoundsError> {
        if !data.table.get(chi).is_linear() {
            return Err(BoundsError::NotLinear(chi));
        }
        let classes = data.group.classes().len();
        let l_values: Vec<Cyclotomic> = (0..classes)
            .map(|c| {
                ch_l.iter().enumerate().fold(Cyclotomic::integer(0), |acc, (i, &m)| {
                    acc + &(data.table.get(i).values[c].clone() * &Cyclotomic::integer(m))
                })
            })
            .collect();
        let chi_bar: Vec<Cyclotomic> = data.table.get(chi).values.iter().map(|v| v.conj()).collect();
        let mut sum = Cyclotomic::integer(0);
        for ((odd, cycles, total), &count) in &self.counts {
            let sign = if *odd && eta == Eta::Triv { -1 } else { 1 };
            let mut term = Cyclotomic::integer(sign * count as i64) * &chi_bar[*total];
            for &c in cycles {
                term = term * &l_values[c];
            }
            sum = sum + &term;
        }
        let q = sum.to_rational().ok_or(BoundsError::NonIntegral)?
            / BigRational::from_integer(self.order.into());
        if !q.is_integer() || q < BigRational::zero() {
            return Err(BoundsError::NonIntegral);
        }
        q.to_integer().to_u64().ok_or(BoundsError::NonIntegral)
    }
}

/// The oracle as a single call: builds the histogram and averages.
pub fn wreath_character_oracle(
    data: &GroupData,
    delta: &Subgroup,
    n: usize,
    ch_l: &[i64],
    chi: usize,
    eta: Eta,
    cap: u128,
) -> Result<u64, BoundsError> {
    WreathHistogram::new(data, delta, n, cap)?.multiplicity(data, ch_l, chi, eta)
}

/// Rows of the two product-formula tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TableCase {
    /// `Γ = Δ`, `χ ≠ 1`, `(χ, det)`.
    EqualNontrivial,
    /// `Γ = Δ`, `χ = 1`, `(χ, det)`.
    EqualTrivial,
    /// `|Γ : Δ| = 2`, `χ|_Δ ≠ 1`, `(χ, det)`.
    Index2Nontrivial,
    /// `|Γ : Δ| = 2`, `χ|_Δ = 1`, `(χ, det)`.
    Index2Trivial,
    /// Type `E6`, `|Γ : Δ| = 3`, `(χ, det)`.
    E6Index3,
    /// Type `D`, `|Γ : Δ| = 4`, `(χ, det)`.
    DIndex4,
    /// `Γ = Δ`, `χ ≠ 1`, `(χ, triv)`.
    TrivEqualNontrivial,
    /// `|Γ : Δ| = 2`, `χ|_Δ ≠ 1`, `(χ, triv)`.
    TrivIndex2Nontrivial,
}

impl TableCase {
    pub const DET_ROWS: [TableCase; 6] = [
        TableCase::EqualNontrivial,
        TableCase::EqualTrivial,
        TableCase::Index2Nontrivial,
        TableCase::Index2Trivial,
        TableCase::E6Index3,
        TableCase::DIndex4,
    ];
    pub const TRIV_ROWS: [TableCase; 2] = [TableCase::TrivEqualNontrivial, TableCase::TrivIndex2Nontrivial];

    pub fn eta(&self) -> Eta {
        match self {
            TableCase::TrivEqualNontrivial | TableCase::TrivIndex2Nontrivial => Eta::Triv,
            _ => Eta::Det,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            TableCase::EqualNontrivial | TableCase::TrivEqualNontrivial => "Γ=Δ, χ≠1",
            TableCase::EqualTrivial => "Γ=Δ, χ=1",
            TableCase::Index2Nontrivial | TableCase::TrivIndex2Nontrivial => "|Γ:Δ|=2, χ|Δ≠1",
            TableCase::Index2Trivial => "|Γ:Δ|=2, χ|Δ=1",
            TableCase::E6Index3 => "E6, |Γ:Δ|=3",
            TableCase::DIndex4 => "D, |Γ:Δ|=4",
        }
    }

    pub fn closed_form(&self) -> &'static str {
        match self {
            TableCase::EqualNontrivial => "2n(2n-1)(2n-2)...(n+2)(n+1)/n!",
            TableCase::EqualTrivial => "(2n-1)(2n-2)...(n+1)n/n!",
            TableCase::Index2Nontrivial => "(4n-2)(2n-2)(2n-3)...(n+1)n/n!",
            TableCase::Index2Trivial => "(3n-2)(2n-2)(2n-3)...(n+1)n/n!",
            TableCase::E6Index3 => "(4n-3)(2n-2)(2n-3)...(n+1)n/n!",
            TableCase::DIndex4 => "(5n-4)(2n-2)(2n-3)...(n+1)n/n!",
            TableCase::TrivEqualNontrivial => "n+1",
            TableCase::TrivIndex2Nontrivial => "2",
        }
    }

    /// The closed form evaluated at `n`.
    pub fn evaluate(&self, n: u64) -> BigUint {
        let range = |lo: u64, hi: u64| (lo..=hi).fold(BigUint::one(), |acc, k| acc * k);
        let fact = range(1, n);
        let tail = || range(n, 2 * n - 2);
        match self {
            TableCase::EqualNontrivial => range(n + 1, 2 * n) / fact,
            TableCase::EqualTrivial => range(n, 2 * n - 1) / fact,
            TableCase::Index2Nontrivial => BigUint::from(4 * n - 2) * tail() / fact,
            TableCase::Index2Trivial => BigUint::from(3 * n - 2) * tail() / fact,
            TableCase::E6Index3 => BigUint::from(4 * n - 3) * tail() / fact,
            TableCase::DIndex4 => BigUint::from(5 * n - 4) * tail() / fact,
            TableCase::TrivEqualNontrivial => BigUint::from(n + 1),
            TableCase::TrivIndex2Nontrivial => BigUint::from(2u32),
        }
    }

    /// The catalogue pairs `(Γ, Δ)` the row applies to.
    pub fn instances(&self) -> Vec<(GroupSpec, SubgroupSpec)> {
        let bd = || (2..=5).map(GroupSpec::BinaryDihedral);
        match self {
            TableCase::EqualNontrivial | TableCase::TrivEqualNontrivial => GroupSpec::catalogue()
                .into_iter()
                .filter(|s| *s != GroupSpec::BinaryIcosahedral)
                .map(|s| (s, SubgroupSpec::Whole))
                .collect(),
            TableCase::EqualTrivial => GroupSpec::catalogue()
                .into_iter()
                .map(|s| (s, SubgroupSpec::Whole))
                .collect(),
            TableCase::Index2Nontrivial | TableCase::Index2Trivial | TableCase::TrivIndex2Nontrivial => bd()
                .map(|s| (s, SubgroupSpec::Cyc2))
                .chain([(GroupSpec::BinaryOctahedral, SubgroupSpec::Commutator)])
                .collect(),
            TableCase::E6Index3 => vec![(GroupSpec::BinaryTetrahedral, SubgroupSpec::Commutator)],
            TableCase::DIndex4 => bd().map(|s| (s, SubgroupSpec::Commutator)).collect(),
        }
    }

    /// Whether `χ` satisfies the row's condition.
    fn accepts(&self, data: &GroupData, delta: &Subgroup, chi: usize) -> bool {
        let trivial_on_delta = data.table.kernel_contains(&data.group, chi, &delta.elements);
        match self {
            TableCase::EqualNontrivial | TableCase::TrivEqualNontrivial => chi != 0,
            TableCase::EqualTrivial => chi == 0,
            TableCase::Index2Nontrivial | TableCase::TrivIndex2Nontrivial => !trivial_on_delta,
            TableCase::Index2Trivial => trivial_on_delta,
            TableCase::E6Index3 | TableCase::DIndex4 => true,
        }
    }
}

impl fmt::Display for TableCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.label(), self.eta())
    }
}

/// One `(Γ, Δ, χ)` evaluation of a table row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableInstance {
    pub gamma: GroupSpec,
    pub delta: SubgroupSpec,
    pub chi: usize,
    pub formula: u64,
    /// `None` when `|W|` exceeds the oracle cap.
    pub oracle: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub case: TableCase,
    pub n: usize,
    pub closed_form: String,
    pub closed_value: BigUint,
    pub instances: Vec<TableInstance>,
}

impl TableRow {
    /// The common dimension, if every instance agrees.
    pub fn dimension(&self) -> Option<u64> {
        let first = self.instances.first()?.formula;
        self.instances.iter().all(|i| i.formula == first).then_some(first)
    }

    /// Every instance matches the closed form, and the oracle wherever it
    /// ran.
    pub fn consistent(&self) -> bool {
        !self.instances.is_empty()
            && self.instances.iter().all(|i| {
                BigUint::from(i.formula) == self.closed_value && i.oracle.is_none_or(|o| o == i.formula)
            })
    }

    pub fn oracle_checked(&self) -> usize {
        self.instances.iter().filter(|i| i.oracle.is_some()).count()
    }
}

/// Everything needed to evaluate `(Γ, Δ, n)`: the group data, `Δ`, the
/// root context and the character of `L`.
#[derive(Debug, Clone)]
pub struct LowerBoundSetup {
    pub data: GroupData,
    pub delta: Subgroup,
    pub quotient: Vec<bool>,
    pub roots: RootContext,
}

impl LowerBoundSetup {
    pub fn new(gamma: GroupSpec, delta: &SubgroupSpec) -> Result<LowerBoundSetup, BoundsError> {
        let data = GroupData::new(gamma)?;
        let delta = Subgroup::resolve(&data.group, delta)?;
        let quotient = quotient_characters(&data.group, &data.table, &delta);
        let roots = RootContext::new(&data.graph)?;
        Ok(LowerBoundSetup {
            data,
            delta,
            quotient,
            roots,
        })
    }

    pub fn character(&self, n: usize, mode: AlphaMode) -> Result<crate::mckay::LowerBoundCharacter, BoundsError> {
        if n == 0 {
            return Err(BoundsError::ZeroRank);
        }
        Ok(character_of_l(&self.roots, &self.quotient, self.delta.order(), n as i64, mode)?)
    }
}

/// Builds a table row for `n`, running the oracle where `|W| ≤ cap`.
pub fn catalan_table(case: TableCase, n: usize, cap: u128) -> Result<TableRow, BoundsError> {
    if n == 0 {
        return Err(BoundsError::ZeroRank);
    }
    let mut instances = Vec::new();
    for (gamma, delta) in case.instances() {
        let setup = LowerBoundSetup::new(gamma, &delta)?;
        let ch = setup.character(n, AlphaMode::Shifted)?.ch;
        let w = WreathGroup::new(&setup.data.group, &setup.delta, n)?;
        let histogram = if w.order() <= cap {
            Some(WreathHistogram::new(&setup.data, &setup.delta, n, cap)?)
        } else {
            None
        };
        for chi in setup.data.linear() {
            if !case.accepts(&setup.data, &setup.delta, chi) {
                continue;
            }
            let formula = semiinv_dim_formula(&setup.data, &setup.delta, n, &ch, chi, case.eta())?;
            let oracle = histogram
                .as_ref()
                .map(|h| h.multiplicity(&setup.data, &ch, chi, case.eta()))
                .transpose()?;
            instances.push(TableInstance {
                gamma,
                delta: delta.clone(),
                chi,
                formula,
                oracle,
            });
        }
    }
    if instances.is_empty() {
        return Err(BoundsError::UnsupportedCase);
    }
    Ok(TableRow {
        case,
        n,
        closed_form: case.closed_form().to_string(),
        closed_value: case.evaluate(n as u64),
        instances,
    })
}

/// Both tables for `n` in the given range, ordered by case then `n`.
pub fn catalan_tables(n_min: usize, n_max: usize, cap: u128) -> Result<Vec<TableRow>, BoundsError> {
    let mut rows = Vec::new();
    for case in TableCase::DET_ROWS.into_iter().chain(TableCase::TRIV_ROWS) {
        for n in n_min..=n_max {
            rows.push(catalan_table(case, n, cap)?);
        }
    }
    Ok(rows)
}

/// The semi-invariant dimension of one linear character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiInvariantRow {
    pub chi: usize,
    pub trivial_on_delta: bool,
    pub triv: u64,
    pub det: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundReport {
    pub gamma: GroupSpec,
    pub delta: SubgroupSpec,
    pub n: usize,
    /// `g` from the closed formula `(n − 1)|Γ| + 2(|Δ| − 1)`.
    pub g: i64,
    /// `(g + 1)^n`.
    pub bound: BigUint,
    /// The root `α` (or `φ` when `Δ = Γ`).
    pub alpha: GrothendieckVector,
    pub ch_l: GrothendieckVector,
    /// `dim L` as `Σ_i ch_i n_i`.
    pub dim_l: i64,
    /// `dim L` as `Σ_{i≠0} k_i n_i + (n − 1)|Γ|` (or `n|Γ| + |Γ| − 1`).
    pub dim_l_from_root: i64,
    /// `dim L^χ` at each character of `Γ/Δ`.
    pub quotient_dims: BTreeMap<usize, i64>,
    pub dimension_bound_ok: bool,
    /// The character of `Γ/Δ` attaining `dim L^χ = n`.
    pub equality_at: Option<usize>,
    pub semi_invariants: Vec<SemiInvariantRow>,
}

impl LowerBoundReport {
    pub fn ok(&self) -> bool {
        self.dim_l == self.g + 1 && self.dim_l_from_root == self.dim_l && self.dimension_bound_ok
    }
}

pub fn lower_bound_report(gamma: GroupSpec, delta: &SubgroupSpec, n: usize) -> Result<LowerBoundReport, BoundsError> {
    let setup = LowerBoundSetup::new(gamma, delta)?;
    let l = setup.character(n, AlphaMode::Shifted)?;
    let w = WreathGroup::new(&setup.data.group, &setup.delta, n)?;
    let g = w.g_formula();
    let order = gamma.order() as i64;
    let alpha_dim = setup.data.graph.dim(&l.root);
    let dim_l_from_root = if setup.delta.is_whole() {
        n as i64 * order + alpha_dim
    } else {
        alpha_dim + (n as i64 - 1) * order
    };
    let (quotient_dims, dimension_bound_ok) = dimension_bound(&l.ch, &setup.quotient, n as i64);
    let equality_at = quotient_dims
        .iter()
        .filter(|(_, &d)| d == n as i64)
        .map(|(&i, _)| i)
        .exactly_one()
        .ok();
    let mut semi_invariants = Vec::new();
    for chi in setup.data.linear() {
        semi_invariants.push(SemiInvariantRow {
            chi,
            trivial_on_delta: setup.quotient[chi],
            triv: semiinv_dim_formula(&setup.data, &setup.delta, n, &l.ch, chi, Eta::Triv)?,
            det: semiinv_dim_formula(&setup.data, &setup.delta, n, &l.ch, chi, Eta::Det)?,
        });
    }
    Ok(LowerBoundReport {
        gamma,
        delta: delta.clone(),
        n,
        g,
        bound: BigUint::from((g + 1) as u64).pow(n as u32),
        alpha: l.root,
        dim_l: setup.data.graph.dim(&l.ch),
        ch_l: l.ch,
        dim_l_from_root,
        quotient_dims,
        dimension_bound_ok,
        equality_at,
        semi_invariants,
    })
}

/// `|Γ| ≤ δ ≤ C(|Γ| + 1, 2)` for the zero-fiber degree `δ` of a rank-one
/// group acting on `C^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeBounds {
    pub lower: u64,
    pub degree: u64,
    pub upper: u64,
}

impl DegreeBounds {
    pub fn holds(&self) -> bool {
        self.lower <= self.degree && self.degree <= self.upper
    }
}

pub fn delta_bounds(spec: GroupSpec) -> Result<DegreeBounds, BoundsError> {
    let d = spec.order() as u64;
    Ok(DegreeBounds {
        lower: d,
        degree: zero_fiber_degree(spec)? as u64,
        upper: binomial(d + 1, 2),
    })
}

pub fn delta_bounds_check(spec: GroupSpec) -> Result<bool, BoundsError> {
    delta_bounds(spec).map(|b| b.holds())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(g: GroupSpec, d: SubgroupSpec) -> LowerBoundSetup {
        LowerBoundSetup::new(g, &d).unwrap()
    }

    #[test]
    fn formula_examples() {
        let s = setup(GroupSpec::Cyclic(2), SubgroupSpec::Whole);
        for n in 1..=5 {
            let ch = s.character(n, AlphaMode::Shifted).unwrap().ch;
            assert_eq!(
                semiinv_dim_formula(&s.data, &s.delta, n, &ch, 1, Eta::Det).unwrap(),
                binomial(2 * n as u64, n as u64)
            );
            assert_eq!(semiinv_dim_formula(&s.data, &s.delta, n, &ch, 0, Eta::Triv).unwrap(), 1);
        }
        let s = setup(GroupSpec::BinaryDihedral(2), SubgroupSpec::Cyc2);
        let ch = s.character(2, AlphaMode::Shifted).unwrap().ch;
        let chi = s.data.linear().into_iter().find(|&c| !s.quotient[c]).unwrap();
        assert_eq!(semiinv_dim_formula(&s.data, &s.delta, 2, &ch, chi, Eta::Det).unwrap(), 6);
    }

    #[test]
    fn oracle_examples() {
        let s = setup(GroupSpec::Cyclic(2), SubgroupSpec::Whole);
        let ch = vec![2, 3];
        assert_eq!(wreath_character_oracle(&s.data, &s.delta, 2, &ch, 1, Eta::Det, 100).unwrap(), 6);
        // n = 1 reads off the coefficient
        let s = setup(GroupSpec::BinaryTetrahedral, SubgroupSpec::Whole);
        let ch = vec![3, 1, 4, 1, 5, 9, 2];
        for chi in s.data.linear() {
            let m = wreath_character_oracle(&s.data, &s.delta, 1, &ch, chi, Eta::Det, 100).unwrap();
            assert_eq!(m as i64, ch[chi]);
        }
        let s = setup(GroupSpec::BinaryDihedral(2), SubgroupSpec::Cyc2);
        let ch = s.character(2, AlphaMode::Shifted).unwrap().ch;
        let h = WreathHistogram::new(&s.data, &s.delta, 2, 1000).unwrap();
        assert_eq!(h.order, 64);
        for chi in s.data.linear() {
            for eta in [Eta::Triv, Eta::Det] {
                let f = semiinv_dim_formula(&s.data, &s.delta, 2, &ch, chi, eta).unwrap();
                assert_eq!(h.multiplicity(&s.data, &ch, chi, eta).unwrap(), f);
            }
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(TableCase::EqualNontrivial.evaluate(3), BigUint::from(20u32));
        assert_eq!(TableCase::E6Index3.evaluate(2), BigUint::from(5u32));
        assert_eq!(TableCase::TrivEqualNontrivial.evaluate(4), BigUint::from(5u32));
        assert_eq!(TableCase::Index2Nontrivial.evaluate(2), BigUint::from(6u32));
    }

    #[test]
    fn small_rows() {
        let row = catalan_table(TableCase::E6Index3, 2, 10_000).unwrap();
        assert_eq!(row.dimension(), Some(5));
        assert!(row.consistent());
        assert_eq!(row.oracle_checked(), 3);
    }

    #[test]
    fn reports() {
        let r = lower_bound_report(GroupSpec::Cyclic(2), &SubgroupSpec::Whole, 2).unwrap();
        assert_eq!((r.g, r.dim_l), (4, 5));
        assert_eq!(r.bound, BigUint::from(25u32));
        assert!(r.ok());
        let r = lower_bound_report(GroupSpec::BinaryTetrahedral, &SubgroupSpec::Commutator, 2).unwrap();
        assert_eq!((r.g, r.dim_l), (38, 39));
        assert!(r.ok() && r.equality_at.is_some());
        let r = lower_bound_report(GroupSpec::BinaryIcosahedral, &SubgroupSpec::Whole, 1).unwrap();
        assert_eq!(r.dim_l, 239);
    }

    #[test]
    fn degree_bounds() {
        let b = delta_bounds(GroupSpec::Cyclic(2)).unwrap();
        assert_eq!((b.lower, b.degree, b.upper), (2, 3, 3));
        let b = delta_bounds(GroupSpec::Cyclic(5)).unwrap();
        assert_eq!((b.lower, b.degree, b.upper), (5, 9, 15));
    }
}
