//! Real roots of the affine root system attached to a McKay graph.
//!
//! Finite roots are stored over the full vertex set with coefficient 0 at
//! vertex 0. Every real root is `mδ + β` for a finite root `β`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{GrothendieckVector, McKayError, McKayGraph};

/// Rational coefficients `c_i` indexed by the McKay vertices.
pub type ParameterVector = Vec<BigRational>;

#[derive(Debug, Clone)]
pub struct RootContext {
    pub cartan: Vec<Vec<i64>>,
    pub delta: GrothendieckVector,
    /// Positive finite roots, sorted.
    pub positive: Vec<GrothendieckVector>,
    /// `δ − α_0`.
    pub phi: GrothendieckVector,
}

fn pairing(cartan: &[Vec<i64>], a: &[i64], b: &[i64]) -> i64 {
    let mut s = 0;
    for (i, row) in cartan.iter().enumerate() {
        if a[i] == 0 {
            continue;
        }
        for (j, c) in row.iter().enumerate() {
            s += a[i] * c * b[j];
        }
    }
    s
}

/// `Σ c_i v_i`.
pub fn dot(c: &[BigRational], v: &[i64]) -> BigRational {
    c.iter()
        .zip(v)
        .filter(|(_, &x)| x != 0)
        .fold(BigRational::zero(), |acc, (ci, &x)| acc + ci * BigInt::from(x))
}

impl RootContext {
    pub fn new(graph: &McKayGraph) -> Result<RootContext, McKayError> {
        let n = graph.len();
        if n < 2 {
            return Err(McKayError::Degenerate);
        }
        let cartan = graph.cartan();
        let mut known: BTreeSet<GrothendieckVector> = BTreeSet::new();
        let mut frontier = Vec::new();
        for i in 1..n {
            let mut e = vec![0; n];
            e[i] = 1;
            known.insert(e.clone());
            frontier.push(e);
        }
        while let Some(b) = frontier.pop() {
            for i in 1..n {
                let mut e = vec![0; n];
                e[i] = 1;
                if pairing(&cartan, &b, &e) == -1 {
                    let mut c = b.clone();
                    c[i] += 1;
                    if known.insert(c.clone()) {
                        frontier.push(c);
                    }
                }
            }
        }
        let mut phi = graph.dims.clone();
        phi[0] -= 1;
        Ok(RootContext {
            cartan,
            delta: graph.dims.clone(),
            positive: known.into_iter().collect(),
            phi,
        })
    }

    pub fn len(&self) -> usize {
        self.delta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.delta.is_empty()
    }

    pub fn pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        pairing(&self.cartan, a, b)
    }

    /// Positive and negative finite roots.
    pub fn finite_roots(&self) -> impl Iterator<Item = GrothendieckVector> + '_ {
        self.positive
            .iter()
            .cloned()
            .chain(self.positive.iter().map(|b| b.iter().map(|x| -x).collect()))
    }

    /// Splits a vector as `mδ + β`; `None` unless `β` is zero or a finite root.
    pub fn split(&self, v: &[i64]) -> Option<(i64, GrothendieckVector)> {
        if v.len() != self.len() {
            return None;
        }
        let m = v[0];
        let beta: GrothendieckVector = v.iter().zip(&self.delta).map(|(a, d)| a - m * d).collect();
        Some((m, beta))
    }

    pub fn is_finite_root(&self, beta: &[i64]) -> bool {
        let neg: GrothendieckVector = beta.iter().map(|x| -x).collect();
        self.positive.binary_search(&beta.to_vec()).is_ok() || self.positive.binary_search(&neg).is_ok()
    }

    /// `mδ + β` with `β` a finite root and either `m > 0` or `β > 0`.
    pub fn is_positive_real_root(&self, v: &[i64]) -> bool {
        match self.split(v) {
            Some((m, beta)) => {
                self.is_finite_root(&beta) && (m > 0 || (m == 0 && beta.iter().all(|&x| x >= 0)))
            }
            None => false,
        }
    }

    /// `Σ_c`: the coefficient-wise minimal positive roots `α` with
    /// `α·c = 0`. Requires `c·δ ≠ 0`, which makes `R_c` finite.
    pub fn sigma_c(&self, c: &[BigRational]) -> Result<Vec<GrothendieckVector>, McKayError> {
        let rc = self.positive_rc(c)?;
        Ok(minimal_elements(&rc))
    }

    /// The positive roots orthogonal to `c`.
    pub fn positive_rc(&self, c: &[BigRational]) -> Result<Vec<GrothendieckVector>, McKayError> {
        if c.len() != self.len() {
            return Err(McKayError::LengthMismatch);
        }
        let cd = dot(c, &self.delta);
        if cd.is_zero() {
            return Err(McKayError::InfiniteRc);
        }
        let mut out = BTreeSet::new();
        for beta in self.finite_roots() {
            let t = -dot(c, &beta) / &cd;
            if !t.is_integer() {
                continue;
            }
            let m = i64::try_from(t.to_integer()).expect("small shift");
            let positive = m > 0 || (m == 0 && beta.iter().all(|&x| x >= 0));
            if positive {
                out.insert(self.shifted(m, &beta));
            }
        }
        Ok(out.into_iter().collect())
    }

    /// `mδ + β`.
    pub fn shifted(&self, m: i64, beta: &[i64]) -> GrothendieckVector {
        beta.iter().zip(&self.delta).map(|(b, d)| b + m * d).collect()
    }

    /// A parameter `c` with `c·α = 0`, `c·δ = 1` and `c·β ∉ Z` for every
    /// finite root `β ≠ ±β_α`, so that `Σ_c = {α}`. Deterministic.
    pub fn generic_on_hyperplane(&self, alpha: &[i64]) -> Result<ParameterVector, McKayError> {
        if !self.is_positive_real_root(alpha) {
            return Err(McKayError::NotPositiveRealRoot);
        }
        let (m, beta) = self.split(alpha).expect("checked");
        let n = self.len();
        let pivot = (1..n).find(|&i| beta[i] != 0).expect("finite root is nonzero");
        let primes = primes_from(11, 64 * n);
        for attempt in 0..32 {
            let mut c = vec![BigRational::zero(); n];
            let mut k = attempt;
            for (i, ci) in c.iter_mut().enumerate().skip(1) {
                if i != pivot {
                    *ci = BigRational::new(BigInt::one(), BigInt::from(primes[k % primes.len()]));
                    k += 1;
                }
            }
            let rest = dot(&c, &beta);
            c[pivot] = (BigRational::from_integer(BigInt::from(-m)) - rest)
                / BigRational::from_integer(BigInt::from(beta[pivot]));
            let tail = dot(&c, &self.delta);
            c[0] = BigRational::one() - tail;
            let neg: GrothendieckVector = beta.iter().map(|x| -x).collect();
            let generic = self
                .finite_roots()
                .filter(|b| *b != beta && *b != neg)
                .all(|b| !dot(&c, &b).is_integer());
            if generic {
                return Ok(c);
            }
        }
        Err(McKayError::SearchFailed)
    }

    /// The admissible root for `Γ/Δ`, given which vertices are characters
    /// of `Γ/Δ`. For `Δ = Γ` this is `φ`. Otherwise it is a positive finite
    /// root of maximal dimension whose coefficients at the nontrivial
    /// characters of `Γ/Δ` are all 0 except for a single 1 (ties go to the
    /// lexicographically largest), and its dimension is checked to be
    /// `2|Δ| − 1`.
    pub fn admissible_alpha(
        &self,
        quotient: &[bool],
        delta_order: usize,
    ) -> Result<GrothendieckVector, McKayError> {
        let index = quotient.iter().filter(|&&q| q).count();
        if index == 1 {
            return Ok(self.phi.clone());
        }
        let dim = |v: &[i64]| -> i64 { v.iter().zip(&self.delta).map(|(a, b)| a * b).sum() };
        let best = self
            .positive
            .iter()
            .filter(|b| {
                let coeffs: Vec<i64> = (1..b.len()).filter(|&i| quotient[i]).map(|i| b[i]).collect();
                coeffs.iter().all(|&k| k == 0 || k == 1) && coeffs.iter().filter(|&&k| k == 1).count() == 1
            })
            .max_by(|a, b| dim(a).cmp(&dim(b)).then_with(|| a.cmp(b)))
            .ok_or(McKayError::NoAdmissibleRoot)?;
        let expected = 2 * delta_order as i64 - 1;
        let got = dim(best);
        if got != expected {
            return Err(McKayError::AlphaCondition { got, expected });
        }
        Ok(best.clone())
    }

    /// The positive finite roots `β` with coefficient 1 at every nontrivial
    /// character of `Γ/Δ` and dimension `|Γ| − 2|Δ|`, so that `nδ − β` has
    /// the same dimension as `(n − 1)δ + α`. Lexicographically largest wins.
    pub fn complement_beta(&self, quotient: &[bool], delta_order: usize) -> Option<GrothendieckVector> {
        let total: i64 = self.delta.iter().map(|d| d * d).sum();
        let target = total - 2 * delta_order as i64 + 1;
        self.positive
            .iter()
            .filter(|b| (1..b.len()).all(|i| !quotient[i] || b[i] == 1))
            .filter(|b| b.iter().zip(&self.delta).map(|(a, d)| a * d).sum::<i64>() == target)
            .max()
            .cloned()
    }
}

fn primes_from(start: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut p = start;
    while out.len() < count {
        if (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d)) {
            out.push(p);
        }
        p += 1;
    }
    out
}

/// The elements of `set` not dominating (coefficient-wise) another element.
pub fn minimal_elements(set: &[GrothendieckVector]) -> Vec<GrothendieckVector> {
    set.iter()
        .filter(|a| {
            !set
                .iter()
                .any(|b| b != *a && b.iter().zip(a.iter()).all(|(x, y)| x <= y))
        })
        .cloned()
        .collect()
}

/// Which construction of the module character to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AlphaMode {
    /// `nδ + φ` for `Δ = Γ`, otherwise `(n − 1)δ + α`.
    #[default]
    Shifted,
    /// `nδ − β` for a positive root `β`.
    Complement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundCharacter {
    /// The root `α` (or `β` in complement mode).
    pub root: GrothendieckVector,
    pub ch: GrothendieckVector,
    pub dim: i64,
}

/// The character and dimension of the rank-one module `L` used to bound
/// the zero fiber of `W_n(Γ, Δ)` from below.
pub fn character_of_l(
    ctx: &RootContext,
    quotient: &[bool],
    delta_order: usize,
    n: i64,
    mode: AlphaMode,
) -> Result<LowerBoundCharacter, McKayError> {
    let whole = quotient.iter().filter(|&&q| q).count() == 1;
    let (root, ch) = match mode {
        AlphaMode::Shifted => {
            let alpha = ctx.admissible_alpha(quotient, delta_order)?;
            let ch = if whole {
                ctx.shifted(n, &alpha)
            } else {
                ctx.shifted(n - 1, &alpha)
            };
            (alpha, ch)
        }
        AlphaMode::Complement => {
            let beta = ctx
                .complement_beta(quotient, delta_order)
                .ok_or(McKayError::NoAdmissibleRoot)?;
            let neg: Vec<i64> = beta.iter().map(|x| -x).collect();
            let ch = ctx.shifted(n, &neg);
            (beta, ch)
        }
    };
    let dim = ch.iter().zip(&ctx.delta).map(|(a, b)| a * b).sum();
    Ok(LowerBoundCharacter { root, ch, dim })
}

/// For each character of `Γ/Δ`, the multiplicity of that character in `L`
/// (the coefficient of `ch`). Returns the multiplicities and whether all are
/// at most `n` with equality exactly once.
pub fn dimension_bound(ch: &[i64], quotient: &[bool], n: i64) -> (BTreeMap<usize, i64>, bool) {
    let coeffs: BTreeMap<usize, i64> = (0..ch.len()).filter(|&i| quotient[i]).map(|i| (i, ch[i])).collect();
    let ok = coeffs.values().all(|&c| c <= n) && coeffs.values().filter(|&&c| c == n).count() == 1;
    (coeffs, ok)
}

impl RootContext {
    /// `max |c·β| / |c·δ|` over finite roots: the largest shift that can
    /// occur in `R_c`.
    pub fn shift_bound(&self, c: &[BigRational]) -> BigRational {
        let cd = dot(c, &self.delta).abs();
        self.positive
            .iter()
            .map(|b| dot(c, b).abs() / &cd)
            .max()
            .unwrap_or_else(BigRational::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;
    use crate::groups::{CharacterTable, FiniteGroup, GroupSpec, Subgroup, SubgroupSpec};
    use crate::mckay::quotient_characters;

    fn ctx(spec: GroupSpec) -> (McKayGraph, RootContext) {
        let g = McKayGraph::from_group(&FiniteGroup::from_spec(spec).unwrap()).unwrap();
        let r = RootContext::new(&g).unwrap();
        (g, r)
    }

    /// Every nonnegative vector below `φ` with norm 2, by brute force.
    fn brute_positive(r: &RootContext) -> Vec<GrothendieckVector> {
        let n = r.len();
        let mut out = Vec::new();
        let mut v = vec![0i64; n];
        loop {
            if v.iter().any(|&x| x != 0) && r.pairing(&v, &v) == 2 {
                out.push(v.clone());
            }
            let mut i = 1;
            loop {
                if i == n {
                    out.sort();
                    return out;
                }
                if v[i] < r.phi[i] {
                    v[i] += 1;
                    break;
                }
                v[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn positive_root_counts() {
        let cases = [
            (GroupSpec::Cyclic(2), 1),
            (GroupSpec::Cyclic(5), 10),
            (GroupSpec::BinaryDihedral(2), 12),
            (GroupSpec::BinaryDihedral(3), 20),
            (GroupSpec::BinaryTetrahedral, 36),
            (GroupSpec::BinaryOctahedral, 63),
            (GroupSpec::BinaryIcosahedral, 120),
        ];
        for (spec, count) in cases {
            let (_, r) = ctx(spec);
            assert_eq!(r.positive.len(), count, "{spec}");
            assert!(r.positive.iter().all(|b| r.pairing(b, b) == 2));
            assert!(r.positive.contains(&r.phi));
            assert!(r.positive.iter().all(|b| b.iter().zip(&r.phi).all(|(x, y)| x <= y)));
        }
        for spec in [GroupSpec::BinaryDihedral(2), GroupSpec::BinaryTetrahedral, GroupSpec::Cyclic(4)] {
            let (_, r) = ctx(spec);
            assert_eq!(brute_positive(&r), r.positive);
        }
    }

    #[test]
    fn sigma_c_rejects_zero_and_handles_generic() {
        let (_, r) = ctx(GroupSpec::Cyclic(3));
        assert_eq!(r.sigma_c(&[rat(0, 1), rat(0, 1), rat(0, 1)]), Err(McKayError::InfiniteRc));
        let c = vec![rat(1, 7), rat(1, 11), rat(1, 13)];
        assert!(r.sigma_c(&c).unwrap().is_empty());
    }

    #[test]
    fn generic_parameters_isolate_one_root() {
        let (_, r) = ctx(GroupSpec::Cyclic(3));
        let a1 = vec![0, 1, 0];
        let c = r.generic_on_hyperplane(&a1).unwrap();
        assert_eq!(r.sigma_c(&c).unwrap(), vec![a1]);

        let (g, r) = ctx(GroupSpec::Cyclic(2));
        let v = r.shifted(1, &r.phi);
        let c = r.generic_on_hyperplane(&v).unwrap();
        assert_eq!(r.sigma_c(&c).unwrap(), vec![v.clone()]);
        assert_eq!(g.dim(&v), 3);

        let (_, r) = ctx(GroupSpec::BinaryTetrahedral);
        let c = r.generic_on_hyperplane(&r.phi).unwrap();
        assert_eq!(r.sigma_c(&c).unwrap(), vec![r.phi.clone()]);
        assert_eq!(r.generic_on_hyperplane(&r.delta), Err(McKayError::NotPositiveRealRoot));
    }

    #[test]
    fn sigma_c_matches_brute_force() {
        let (_, r) = ctx(GroupSpec::BinaryDihedral(2));
        // coefficients at vertices 1..; c_0 is then fixed by c·δ = 1
        let tails = [
            vec![rat(1, 2), rat(0, 1), rat(1, 3), rat(1, 1)],
            vec![rat(-1, 1), rat(0, 1), rat(0, 1), rat(0, 1)],
            vec![rat(0, 1), rat(-1, 1), rat(0, 1), rat(1, 1)],
            vec![rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)],
        ];
        let params = tails.into_iter().map(|t| {
            let mut c = vec![rat(0, 1)];
            c.extend(t);
            let rest = dot(&c, &r.delta);
            c[0] = rat(1, 1) - rest;
            c
        });
        for c in params {
            let bound = r.shift_bound(&c).to_integer();
            let b = 2 * i64::try_from(bound).unwrap() + 2;
            let mut brute = Vec::new();
            for m in -b..=b {
                for beta in r.finite_roots() {
                    let v = r.shifted(m, &beta);
                    if r.is_positive_real_root(&v) && dot(&c, &v).is_zero() {
                        brute.push(v);
                    }
                }
            }
            brute.sort();
            assert_eq!(r.positive_rc(&c).unwrap(), brute);
            assert_eq!(r.sigma_c(&c).unwrap(), minimal_elements(&brute));
        }
    }

    fn alpha_for(spec: GroupSpec, sub: SubgroupSpec) -> (McKayGraph, RootContext, Vec<bool>, Subgroup, GrothendieckVector) {
        let grp = FiniteGroup::from_spec(spec).unwrap();
        let t = CharacterTable::for_group(&grp).unwrap();
        let g = McKayGraph::new(&t).unwrap();
        let r = RootContext::new(&g).unwrap();
        let d = Subgroup::resolve(&grp, &sub).unwrap();
        let q = quotient_characters(&grp, &t, &d);
        let a = r.admissible_alpha(&q, d.order()).unwrap();
        (g, r, q, d, a)
    }

    #[test]
    fn tetrahedral_alpha_matches_diagram() {
        let (g, _, _, _, a) = alpha_for(GroupSpec::BinaryTetrahedral, SubgroupSpec::Commutator);
        assert!(g.matches_pattern(&[1, 2, 2, 1, 0, 1, 0], &a));
        assert_eq!(g.dim(&a), 15);
    }

    #[test]
    fn dihedral_alpha_matches_diagram() {
        for n in 2..=5usize {
            let (g, _, _, _, a) = alpha_for(GroupSpec::BinaryDihedral(n as u32), SubgroupSpec::Commutator);
            // chain c_0..c_n then the two forks
            let mut pattern = vec![1; n];
            pattern.extend([0, 0, 0]);
            assert!(g.matches_pattern(&pattern, &a), "bd{n}: {a:?}");
        }
    }

    #[test]
    fn index_two_gives_phi() {
        let (_, r, _, _, a) = alpha_for(GroupSpec::BinaryDihedral(3), SubgroupSpec::Cyc2);
        assert_eq!(a, r.phi);
        let (_, r, _, _, a) = alpha_for(GroupSpec::Cyclic(2), SubgroupSpec::Commutator);
        assert_eq!(a, r.phi);
    }

    #[test]
    fn module_dimensions() {
        let (g, r, q, d, _) = alpha_for(GroupSpec::Cyclic(2), SubgroupSpec::Whole);
        let l = character_of_l(&r, &q, d.order(), 1, AlphaMode::Shifted).unwrap();
        assert_eq!((l.ch.clone(), l.dim), (vec![1, 2], 3));
        assert_eq!(g.dim(&l.ch), 3);

        let (_, r, q, d, _) = alpha_for(GroupSpec::BinaryDihedral(2), SubgroupSpec::Cyc2);
        let l = character_of_l(&r, &q, d.order(), 2, AlphaMode::Shifted).unwrap();
        assert_eq!(l.dim, 15);
        assert!(dimension_bound(&l.ch, &q, 2).1);

        let (_, r, q, d, _) = alpha_for(GroupSpec::BinaryTetrahedral, SubgroupSpec::Whole);
        let l = character_of_l(&r, &q, d.order(), 2, AlphaMode::Shifted).unwrap();
        assert_eq!(l.dim, 71);

        let (_, r, q, d, _) = alpha_for(GroupSpec::BinaryTetrahedral, SubgroupSpec::Commutator);
        let l = character_of_l(&r, &q, d.order(), 2, AlphaMode::Shifted).unwrap();
        assert_eq!(l.dim, 39);
        let (coeffs, ok) = dimension_bound(&l.ch, &q, 2);
        assert!(ok);
        assert_eq!(coeffs.len(), 3);
        let c = character_of_l(&r, &q, d.order(), 2, AlphaMode::Complement).unwrap();
        assert_eq!(c.dim, 39);
        assert!(dimension_bound(&c.ch, &q, 2).1);
    }
}
