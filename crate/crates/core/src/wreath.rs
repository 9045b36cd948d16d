//! The monomial groups `W_n(Γ, Δ)`: elements `diag(γ_1, …, γ_n)·w` with
//! `γ_1⋯γ_n ∈ Δ`, their reflections and reflecting hyperplanes, the numbers
//! `N, N*, g, h, k`, and exact checks of the trace, `f`-operator, pairing and
//! `|A^H|` identities.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::cyclotomic::{CycField, Cyclotomic};
use crate::groups::{FiniteGroup, Subgroup};
use crate::linalg::Matrix;
use crate::quaternion::{hermitian_form, to_complex_vec, vec_scale_right, QuatMatrix, Quaternion};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WreathError {
    #[error("group order {order} exceeds the cap {cap}")]
    CapExceeded { order: u128, cap: u128 },
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("appendix checks are limited to n <= {max_n} and |Γ| <= {max_gamma} (use a larger cap to force)")]
    AppendixGated { max_n: usize, max_gamma: usize },
    #[error("reflection detection disagrees with the exact rank computation")]
    RankMismatch,
}

/// `diag(γ_1, …, γ_n)·P_w`, where `P_w e_j = e_{w(j)}`. Column `j` carries
/// the single entry `γ_{w(j)}` in row `w(j)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialElement {
    pub perm: Vec<usize>,
    /// Element indices into `Γ`.
    pub gammas: Vec<usize>,
}

impl MonomialElement {
    pub fn identity(n: usize) -> MonomialElement {
        MonomialElement {
            perm: (0..n).collect(),
            gammas: vec![0; n],
        }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    /// `self · other`.
    pub fn mul(&self, g: &FiniteGroup, other: &MonomialElement) -> MonomialElement {
        // self·other e_j = self(γ'_{w'(j)} e_{w'(j)}) = γ_{w(w'(j))} γ'_{w'(j)} e_{w(w'(j))}
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut gammas = vec![0; n];
        for (j, &a) in other.perm.iter().enumerate() {
            let b = self.perm[a];
            perm[j] = b;
            gammas[b] = g.mul(self.gammas[b], other.gammas[a]);
        }
        MonomialElement { perm, gammas }
    }

    pub fn order(&self, g: &FiniteGroup) -> usize {
        let id = MonomialElement::identity(self.rank());
        let mut x = self.clone();
        let mut k = 1;
        while x != id {
            x = x.mul(g, self);
            k += 1;
        }
        k
    }

    pub fn matrix(&self, g: &FiniteGroup) -> QuatMatrix {
        let n = self.rank();
        let mut rows = vec![vec![Quaternion::zero(); n]; n];
        for (j, &i) in self.perm.iter().enumerate() {
            rows[i][j] = g.element(self.gammas[i]).clone();
        }
        QuatMatrix::from_rows(rows)
    }

    /// Quaternionic codimension of the fixed space, read off the cycles: a
    /// cycle of length `m` contributes `m − 1` if its entry product is 1 and
    /// `m` otherwise.
    pub fn fix_codimension(&self, g: &FiniteGroup) -> usize {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut codim = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            // v_{w(j)} = γ_{w(j)} v_j around the cycle
            let mut prod = g.identity();
            let mut j = start;
            let mut len = 0;
            loop {
                seen[j] = true;
                j = self.perm[j];
                prod = g.mul(self.gammas[j], prod);
                len += 1;
                if j == start {
                    break;
                }
            }
            codim += if prod == g.identity() { len - 1 } else { len };
        }
        codim
    }

    /// The fixed-space codimension from the complex rank of `r − 1` on `C^{2n}`.
    pub fn fix_codimension_exact(&self, g: &FiniteGroup) -> usize {
        let m = self.matrix(g).to_complex();
        m.sub(&Matrix::identity(m.rows())).rank() / 2
    }

    /// Complex trace on `C^{2n}`.
    pub fn trace(&self, g: &FiniteGroup) -> Cyclotomic {
        let mut t = Cyclotomic::integer(0);
        for j in 0..self.rank() {
            if self.perm[j] == j {
                t = t + &g.trace(self.gammas[j]);
            }
        }
        t
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ReflectionType {
    /// `γ^{(p)} (pq) (γ^{(p)})^{-1}`.
    A,
    /// `γ^{(p)}` with `γ ≠ 1`.
    B,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reflection {
    pub element: MonomialElement,
    pub kind: ReflectionType,
    pub order: usize,
}

/// A reflecting hyperplane `{v : (α, v) = 0}` with `α` normalized so its
/// first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Vec<Quaternion>,
    key: Vec<Cyclotomic>,
    /// Indices of the reflections fixing this hyperplane.
    pub reflections: Vec<usize>,
}

impl Hyperplane {
    pub fn key(&self) -> &[Cyclotomic] {
        &self.key
    }

    /// `|W_H|`, the reflections plus the identity.
    pub fn stabilizer_order(&self) -> usize {
        self.reflections.len() + 1
    }
}

/// `W_n(Γ, Δ)`.
#[derive(Debug, Clone)]
pub struct WreathGroup<'a> {
    pub gamma: &'a FiniteGroup,
    pub delta: &'a Subgroup,
    pub n: usize,
}

pub const DEFAULT_ELEMENT_CAP: u128 = 2_000_000;

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

impl<'a> WreathGroup<'a> {
    pub fn new(gamma: &'a FiniteGroup, delta: &'a Subgroup, n: usize) -> Result<WreathGroup<'a>, WreathError> {
        if n == 0 {
            return Err(WreathError::ZeroRank);
        }
        Ok(WreathGroup { gamma, delta, n })
    }

    /// `|Γ|^{n−1}·|Δ|·n!`.
    pub fn order(&self) -> u128 {
        (self.gamma.order() as u128).pow(self.n as u32 - 1) * self.delta.order() as u128 * factorial(self.n)
    }

    pub fn contains(&self, e: &MonomialElement) -> bool {
        let p = e.gammas.iter().fold(self.gamma.identity(), |acc, &x| self.gamma.mul(acc, x));
        e.rank() == self.n && self.delta.contains(p)
    }

    /// Visits every element exactly once. Fails if the order exceeds `cap`.
    pub fn for_each_element(&self, cap: u128, mut f: impl FnMut(&MonomialElement)) -> Result<(), WreathError> {
        let order = self.order();
        if order > cap {
            return Err(WreathError::CapExceeded { order, cap });
        }
        let g = self.gamma;
        let n = self.n;
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        let mut gammas = vec![0usize; n];
        loop {
            let prefix = gammas[..n - 1].iter().fold(g.identity(), |acc, &x| g.mul(acc, x));
            let inv = g.inv(prefix);
            for &d in &self.delta.elements {
                gammas[n - 1] = g.mul(inv, d);
                for p in &perms {
                    let e = MonomialElement {
                        perm: p.clone(),
                        gammas: gammas.clone(),
                    };
                    f(&e);
                }
            }
            let mut i = 0;
            loop {
                if i + 1 >= n {
                    return Ok(());
                }
                gammas[i] += 1;
                if gammas[i] < g.order() {
                    break;
                }
                gammas[i] = 0;
                i += 1;
            }
        }
    }

    /// All reflections, each confirmed by the exact complex rank of `r − 1`.
    pub fn reflections(&self, cap: u128) -> Result<Vec<Reflection>, WreathError> {
        let g = self.gamma;
        let mut out = Vec::new();
        self.for_each_element(cap, |e| {
            if e.fix_codimension(g) == 1 {
                let kind = if e.perm.iter().enumerate().all(|(i, &p)| i == p) {
                    ReflectionType::B
                } else {
                    ReflectionType::A
                };
                out.push(Reflection {
                    element: e.clone(),
                    kind,
                    order: e.order(g),
                });
            }
        })?;
        if out.iter().any(|r| r.element.fix_codimension_exact(g) != 1) {
            return Err(WreathError::RankMismatch);
        }
        Ok(out)
    }

    /// `N = C(n,2)|Γ| + n(|Δ| − 1)`.
    pub fn reflection_count_formula(&self) -> u64 {
        binomial(self.n as u64, 2) * self.gamma.order() as u64 + self.n as u64 * (self.delta.order() as u64 - 1)
    }

    /// `C(n,2)|Γ|` type-(a) hyperplanes plus the `n` coordinate hyperplanes
    /// when `Δ` is nontrivial.
    pub fn hyperplane_count_formula(&self) -> u64 {
        binomial(self.n as u64, 2) * self.gamma.order() as u64
            + if self.delta.order() > 1 { self.n as u64 } else { 0 }
    }

    /// `g = (n − 1)|Γ| + 2(|Δ| − 1)`.
    pub fn g_formula(&self) -> i64 {
        (self.n as i64 - 1) * self.gamma.order() as i64 + 2 * (self.delta.order() as i64 - 1)
    }
}

/// The normal `α` with `H = fix(r) = {v : (α, v) = 0}`: for unitary `r` the
/// image of `r − 1` is `fix(r)^⊥`, so any nonzero column works.
pub fn reflection_normal(g: &FiniteGroup, r: &MonomialElement) -> Vec<Quaternion> {
    let m = r.matrix(g);
    let n = m.rows();
    for j in 0..n {
        let col: Vec<Quaternion> = (0..n)
            .map(|i| {
                let x = m.get(i, j).clone();
                if i == j {
                    x - &Quaternion::one()
                } else {
                    x
                }
            })
            .collect();
        if let Some(first) = col.iter().find(|q| !q.is_zero()) {
            let inv = first.inv().expect("nonzero");
            return vec_scale_right(&col, &inv);
        }
    }
    Vec::new()
}

fn lift_vec(v: &[Cyclotomic], field: &Arc<CycField>) -> Vec<Cyclotomic> {
    v.iter().map(|x| x.lift_to(field).expect("field contains entries")).collect()
}

/// Groups reflections by their fixed hyperplane; sorted by key.
pub fn hyperplanes(g: &FiniteGroup, reflections: &[Reflection]) -> Vec<Hyperplane> {
    let mut map: BTreeMap<Vec<Cyclotomic>, (Vec<Quaternion>, Vec<usize>)> = BTreeMap::new();
    for (i, r) in reflections.iter().enumerate() {
        let normal = reflection_normal(g, &r.element);
        let key = lift_vec(&to_complex_vec(&normal), g.field());
        map.entry(key).or_insert_with(|| (normal, Vec::new())).1.push(i);
    }
    map.into_iter()
        .map(|(key, (normal, reflections))| Hyperplane {
            normal,
            key,
            reflections,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Irreducibility {
    /// `(1/|W|) Σ |χ_V(w)|²`.
    pub norm: BigRational,
    /// `(1/|W|) Σ χ_V(w²)`.
    pub indicator: BigRational,
    /// Whether `V` is irreducible as a quaternionic representation.
    pub irreducible: bool,
}

/// Decides quaternionic irreducibility of `V = H^n` from the complex
/// character on `C^{2n}`: irreducible exactly when `V` is complex
/// irreducible, or a sum of two non-self-dual conjugates, or twice a real
/// irreducible.
pub fn irreducibility(w: &WreathGroup<'_>, cap: u128) -> Result<Irreducibility, WreathError> {
    let g = w.gamma;
    let mut norm = Cyclotomic::integer(0);
    let mut ind = Cyclotomic::integer(0);
    w.for_each_element(cap, |e| {
        let t = e.trace(g);
        if !t.is_zero() {
            norm = norm.clone() + &t.abs_sq();
        }
        ind = ind.clone() + &e.mul(g, e).trace(g);
    })?;
    let order = BigRational::from_integer(BigInt::from(w.order()));
    let norm = norm.to_rational().expect("rational") / &order;
    let indicator = ind.to_rational().expect("rational") / &order;
    let int = |x: &BigRational, v: i64| *x == BigRational::from_integer(BigInt::from(v));
    let irreducible = int(&norm, 1) || (int(&norm, 2) && int(&indicator, 0)) || (int(&norm, 4) && int(&indicator, 2));
    Ok(Irreducibility {
        norm,
        indicator,
        irreducible,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Numerology {
    pub order: u128,
    pub n: usize,
    pub reflections: u64,
    pub hyperplanes: u64,
    pub type_a: u64,
    pub type_b: u64,
    pub g: BigRational,
    pub h: BigRational,
    pub k: BigRational,
    pub reflections_formula: u64,
    pub hyperplanes_formula: u64,
    pub g_formula: i64,
    pub all_order_two: bool,
    pub irreducibility: Irreducibility,
}

impl Numerology {
    pub fn integral(&self) -> [bool; 3] {
        [self.g.is_integer(), self.h.is_integer(), self.k.is_integer()]
    }

    /// `N` and `N*` agree with their closed forms, `g` agrees with its
    /// closed form, all three numbers are integers and `g + k = 2h`,
    /// `g ≥ h ≥ k`, with equality iff all reflections have order 2.
    pub fn consistent(&self) -> bool {
        let two = BigRational::from_integer(BigInt::from(2));
        let eq_all = self.g == self.h && self.h == self.k;
        self.reflections == self.reflections_formula
            && self.hyperplanes == self.hyperplanes_formula
            && self.g == BigRational::from_integer(BigInt::from(self.g_formula))
            && self.integral().iter().all(|&b| b)
            && self.g.clone() + &self.k == two * &self.h
            && self.g >= self.h
            && self.h >= self.k
            && (eq_all == self.all_order_two || self.reflections == 0)
    }
}

/// Reflections, hyperplanes and the report for `W_n(Γ, Δ)`.
pub fn numerology(w: &WreathGroup<'_>, cap: u128) -> Result<(Numerology, Vec<Reflection>, Vec<Hyperplane>), WreathError> {
    let refl = w.reflections(cap)?;
    let hyp = hyperplanes(w.gamma, &refl);
    let big_n = refl.len() as u64;
    let n_star = hyp.len() as u64;
    let n = BigRational::from_integer(BigInt::from(w.n));
    let r = |x: u64| BigRational::from_integer(BigInt::from(x));
    let report = Numerology {
        order: w.order(),
        n: w.n,
        reflections: big_n,
        hyperplanes: n_star,
        type_a: refl.iter().filter(|r| r.kind == ReflectionType::A).count() as u64,
        type_b: refl.iter().filter(|r| r.kind == ReflectionType::B).count() as u64,
        g: r(2 * big_n) / &n,
        h: r(big_n + n_star) / &n,
        k: r(2 * n_star) / &n,
        reflections_formula: w.reflection_count_formula(),
        hyperplanes_formula: w.hyperplane_count_formula(),
        g_formula: w.g_formula(),
        all_order_two: refl.iter().all(|r| r.order == 2),
        irreducibility: irreducibility(w, cap)?,
    };
    Ok((report, refl, hyp))
}

/// Outcome of the four appendix identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppendixReport {
    /// `Σ_r tr_C(1 − r)`.
    pub trace_sum: BigRational,
    /// `Σ_H 2|W_H|`.
    pub stabilizer_sum: u64,
    /// `2(N + N*)`.
    pub trace_expected: u64,
    pub trace_ok: bool,
    /// `Σ_H α_H (α_H, v)/(α_H, α_H) = (k/2) v` on each basis vector.
    pub f_operator_ok: bool,
    /// `2 Σ_K |(α_K, α_H)|² / ((α_K, α_K)(α_H, α_H)) = k` for every `H`.
    pub pairing_ok: bool,
    /// `|A^H|` for each hyperplane, in key order.
    pub intersection_counts: Vec<u64>,
    /// `|A^H| = N* + 1 − k` for every `H`.
    pub k_identity_ok: bool,
}

impl AppendixReport {
    pub fn all_ok(&self) -> bool {
        self.trace_ok && self.f_operator_ok && self.pairing_ok && self.k_identity_ok
    }
}

/// Default gate for the quadratic-cost identities.
pub const APPENDIX_MAX_N: usize = 3;
pub const APPENDIX_MAX_GAMMA: usize = 24;

fn quat_scalar(x: &Cyclotomic) -> Quaternion {
    Quaternion::from_complex(x.clone())
}

/// Right `H`-span of two vectors as a canonical complex row space.
fn span_key(a: &[Quaternion], b: &[Quaternion], field: &Arc<CycField>) -> Vec<Vec<Cyclotomic>> {
    let j = Quaternion::j();
    let rows = vec![
        lift_vec(&to_complex_vec(a), field),
        lift_vec(&to_complex_vec(&vec_scale_right(a, &j)), field),
        lift_vec(&to_complex_vec(b), field),
        lift_vec(&to_complex_vec(&vec_scale_right(b, &j)), field),
    ];
    Matrix::from_rows(rows).row_space().to_rows()
}

pub fn appendix_checks(
    w: &WreathGroup<'_>,
    report: &Numerology,
    refl: &[Reflection],
    hyp: &[Hyperplane],
    force: bool,
) -> Result<AppendixReport, WreathError> {
    if !force && (w.n > APPENDIX_MAX_N || w.gamma.order() > APPENDIX_MAX_GAMMA) {
        return Err(WreathError::AppendixGated {
            max_n: APPENDIX_MAX_N,
            max_gamma: APPENDIX_MAX_GAMMA,
        });
    }
    let g = w.gamma;
    let n = w.n;
    let two_n = Cyclotomic::integer(2 * n as i64);
    let trace_sum = refl
        .iter()
        .fold(Cyclotomic::integer(0), |acc, r| acc + &(two_n.clone() - &r.element.trace(g)))
        .to_rational()
        .expect("rational trace");
    let stabilizer_sum: u64 = hyp.iter().map(|h| 2 * h.stabilizer_order() as u64).sum();
    let trace_expected = 2 * (report.reflections + report.hyperplanes);
    let trace_ok = trace_sum == BigRational::from_integer(BigInt::from(trace_expected)) && stabilizer_sum == trace_expected;

    let norms: Vec<Cyclotomic> = hyp
        .iter()
        .map(|h| hermitian_form(&h.normal, &h.normal).expect("same length").z1)
        .collect();
    let half_k = Cyclotomic::rational(report.k.clone() / BigRational::from_integer(BigInt::from(2)));

    let mut f_operator_ok = true;
    for j in 0..n {
        let mut e = vec![Quaternion::zero(); n];
        e[j] = Quaternion::one();
        let mut acc = vec![Quaternion::zero(); n];
        for (h, nrm) in hyp.iter().zip(&norms) {
            let c = hermitian_form(&h.normal, &e).expect("same length");
            let c = c * &quat_scalar(&nrm.checked_inv().expect("positive norm"));
            for (a, x) in acc.iter_mut().zip(vec_scale_right(&h.normal, &c)) {
                *a = a.clone() + &x;
            }
        }
        let expected: Vec<Quaternion> = e.iter().map(|x| x.clone() * &quat_scalar(&half_k)).collect();
        f_operator_ok &= acc == expected;
    }

    let k = Cyclotomic::rational(report.k.clone());
    let mut pairing_ok = true;
    for (hh, nh) in hyp.iter().zip(&norms) {
        let mut s = Cyclotomic::integer(0);
        for (kk, nk) in hyp.iter().zip(&norms) {
            let p = hermitian_form(&kk.normal, &hh.normal).expect("same length").norm_sq();
            if !p.is_zero() {
                s = s + &(p * &(nk.clone() * nh).checked_inv().expect("positive"));
            }
        }
        pairing_ok &= s * &Cyclotomic::integer(2) == k;
    }

    let target = BigRational::from_integer(BigInt::from(report.hyperplanes + 1)) - &report.k;
    let mut intersection_counts = Vec::with_capacity(hyp.len());
    for (i, hh) in hyp.iter().enumerate() {
        let mut keys: Vec<Vec<Vec<Cyclotomic>>> = hyp
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, kk)| span_key(&hh.normal, &kk.normal, g.field()))
            .collect();
        keys.sort();
        keys.dedup();
        intersection_counts.push(keys.len() as u64);
    }
    let k_identity_ok = intersection_counts
        .iter()
        .all(|&c| BigRational::from_integer(BigInt::from(c)) == target);

    Ok(AppendixReport {
        trace_sum,
        stabilizer_sum,
        trace_expected,
        trace_ok,
        f_operator_ok,
        pairing_ok,
        intersection_counts,
        k_identity_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{GroupSpec, SubgroupSpec};

    fn setup(spec: GroupSpec, sub: SubgroupSpec) -> (FiniteGroup, Subgroup) {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let d = Subgroup::resolve(&g, &sub).unwrap();
        (g, d)
    }

    #[test]
    fn orders_and_enumeration() {
        let (g, d) = setup(GroupSpec::Cyclic(2), SubgroupSpec::Whole);
        let w = WreathGroup::new(&g, &d, 2).unwrap();
        assert_eq!(w.order(), 8);
        let (g, d) = setup(GroupSpec::BinaryDihedral(2), SubgroupSpec::Cyc2);
        let w = WreathGroup::new(&g, &d, 2).unwrap();
        assert_eq!(w.order(), 64);
        let mut seen = alloc::collections::BTreeSet::new();
        w.for_each_element(u128::MAX, |e| {
            assert!(w.contains(e));
            seen.insert(e.clone());
        })
        .unwrap();
        assert_eq!(seen.len(), 64);
        let w1 = WreathGroup::new(&g, &d, 1).unwrap();
        assert_eq!(w1.order(), 4);
        assert!(matches!(w.for_each_element(10, |_| {}), Err(WreathError::CapExceeded { .. })));
    }

    #[test]
    fn combinatorial_codimension_matches_rank() {
        let (g, d) = setup(GroupSpec::BinaryDihedral(2), SubgroupSpec::Cyc2);
        let w = WreathGroup::new(&g, &d, 2).unwrap();
        w.for_each_element(u128::MAX, |e| {
            assert_eq!(e.fix_codimension(&g), e.fix_codimension_exact(&g), "{e:?}");
        })
        .unwrap();
    }

    #[test]
    fn small_numerology() {
        let (g, d) = setup(GroupSpec::Cyclic(2), SubgroupSpec::Whole);
        let w = WreathGroup::new(&g, &d, 2).unwrap();
        let (rep, refl, hyp) = numerology(&w, u128::MAX).unwrap();
        assert_eq!((rep.reflections, rep.hyperplanes), (4, 4));
        assert!(rep.consistent());
        assert!(rep.irreducibility.irreducible);
        let app = appendix_checks(&w, &rep, &refl, &hyp, false).unwrap();
        assert!(app.all_ok(), "{app:?}");
        assert_eq!(rep.k, BigRational::from_integer(4.into()));

        let (g, d) = setup(GroupSpec::BinaryDihedral(2), SubgroupSpec::Cyc2);
        let w = WreathGroup::new(&g, &d, 2).unwrap();
        assert_eq!(numerology(&w, u128::MAX).unwrap().0.reflections, 14);

        let (g, d) = setup(GroupSpec::BinaryDihedral(2), SubgroupSpec::Whole);
        let w = WreathGroup::new(&g, &d, 2).unwrap();
        let (rep, _, _) = numerology(&w, u128::MAX).unwrap();
        assert_eq!(rep.hyperplanes, 10);
        assert_eq!(rep.g, BigRational::from_integer(22.into()));
    }

    #[test]
    fn rank_one() {
        for l in 2..=6u32 {
            let (g, d) = setup(GroupSpec::Cyclic(l), SubgroupSpec::Whole);
            let w = WreathGroup::new(&g, &d, 1).unwrap();
            let (rep, refl, hyp) = numerology(&w, u128::MAX).unwrap();
            let r = |x: i64| BigRational::from_integer(x.into());
            assert_eq!((rep.reflections, rep.hyperplanes), (l as u64 - 1, 1));
            assert_eq!((rep.g.clone(), rep.h.clone(), rep.k.clone()), (r(2 * l as i64 - 2), r(l as i64), r(2)));
            let app = appendix_checks(&w, &rep, &refl, &hyp, false).unwrap();
            assert_eq!(app.trace_sum, r(2 * l as i64));
            assert_eq!(app.intersection_counts, vec![0]);
            assert!(app.all_ok());
        }
    }

    #[test]
    fn symmetric_group_is_reducible() {
        let g = FiniteGroup::from_spec(GroupSpec::Cyclic(1)).unwrap();
        let d = Subgroup::resolve(&g, &SubgroupSpec::Whole).unwrap();
        let w = WreathGroup::new(&g, &d, 2).unwrap();
        assert!(!irreducibility(&w, u128::MAX).unwrap().irreducible);
    }
}
