//! Invariant theory of `Γ ⊂ SL_2` acting on `C[x, y]`: Reynolds averaging,
//! graded invariant spaces, the Molien series, the fundamental invariants
//! of each Kleinian group, and the zero-fiber ring `C[x, y]/I`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cyclotomic::Cyclotomic;
use crate::groebner::GroebnerBasis;
use crate::groups::{FiniteGroup, GroupSpec};
use crate::linalg::Matrix;
use crate::poly::{Monomial, Poly};

pub type QPoly = Poly<BigRational>;
pub type CPoly = Poly<Cyclotomic>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("fundamental invariant {index} of {spec} is not invariant")]
    NotInvariant { spec: String, index: usize },
    #[error("quotient by the invariant ideal of {0} is infinite-dimensional")]
    InfiniteQuotient(String),
    #[error("Molien coefficient in degree {0} is not an integer")]
    NonIntegralMolien(u32),
}

/// Whether `g · p = p` for every generator of `g`.
pub fn is_invariant(g: &FiniteGroup, p: &CPoly) -> bool {
    g.generator_indices().iter().all(|&a| p.act(&g.matrix(a)) == *p)
}

/// Whether every generator sends `p` to a scalar multiple of itself.
pub fn is_semi_invariant(g: &FiniteGroup, p: &CPoly) -> bool {
    semi_invariant_scalars(g, p).is_some()
}

/// The scalars `c_k` with `w_k · p = c_k p` for the generators `w_k`.
pub fn semi_invariant_scalars(g: &FiniteGroup, p: &CPoly) -> Option<Vec<Cyclotomic>> {
    let (m, c) = p.leading()?;
    let c = c.clone();
    g.generator_indices()
        .iter()
        .map(|&a| {
            let q = p.act(&g.matrix(a));
            let s = q.coeff(m) * &c.checked_inv().ok()?;
            (q == p.scale(&s)).then_some(s)
        })
        .collect()
}

/// `|G|⁻¹ Σ_g g · p`.
pub fn reynolds(g: &FiniteGroup, p: &CPoly) -> CPoly {
    let mut sum = Poly::zero();
    for a in 0..g.order() {
        sum = sum.add(&p.act(&g.matrix(a)));
    }
    let n = Cyclotomic::rational(BigRational::new(BigInt::one(), BigInt::from(g.order())));
    sum.scale(&n)
}

fn degree_monomials(d: u32) -> Vec<Monomial> {
    (0..=d).map(|a| (a, d - a)).collect()
}

/// The matrix of `p ↦ m · p` on degree-`d` forms in the basis
/// `y^d, x y^{d−1}, …, x^d`.
pub fn degree_action(m: &Matrix<Cyclotomic>, d: u32) -> Matrix<Cyclotomic> {
    let u = Poly::x().act(m);
    let v = Poly::y().act(m);
    let mut upow = vec![CPoly::one()];
    let mut vpow = vec![CPoly::one()];
    for k in 0..d as usize {
        upow.push(upow[k].mul(&u));
        vpow.push(vpow[k].mul(&v));
    }
    let basis = degree_monomials(d);
    let mut out = Matrix::zeros(basis.len(), basis.len());
    for (col, &(a, b)) in basis.iter().enumerate() {
        let image = upow[a as usize].mul(&vpow[b as usize]);
        for (&mono, c) in image.terms() {
            out[(mono.0 as usize, col)] = c.clone();
        }
    }
    out
}

/// A basis of the degree-`d` invariants: the common fixed space of the
/// generators, read off from the kernel of the stacked `w_k − 1`.
pub fn invariant_basis(g: &FiniteGroup, d: u32) -> Vec<CPoly> {
    let size = d as usize + 1;
    let id = Matrix::identity(size);
    let mut stacked: Option<Matrix<Cyclotomic>> = None;
    for &a in g.generator_indices() {
        let block = degree_action(&g.matrix(a), d).sub(&id);
        stacked = Some(match stacked {
            None => block,
            Some(s) => s.stack(&block),
        });
    }
    let stacked = stacked.unwrap_or_else(|| Matrix::zeros(1, size));
    stacked
        .kernel()
        .into_iter()
        .map(|v| Poly::from_terms(v.into_iter().enumerate().map(|(a, c)| ((a as u32, d - a as u32), c))))
        .collect()
}

pub fn invariant_dim(g: &FiniteGroup, d: u32) -> usize {
    invariant_basis(g, d).len()
}

/// Coefficients of `|G|⁻¹ Σ_g det(1 − t g)⁻¹` up to `t^max_degree`. For
/// `g ∈ SL_2` with trace `τ` the coefficients `s_d` of `det(1 − t g)⁻¹`
/// obey `s_d = τ s_{d−1} − s_{d−2}`.
pub fn molien_coeffs(g: &FiniteGroup, max_degree: u32) -> Result<Vec<u64>, InvariantError> {
    let mut totals = vec![Cyclotomic::integer(0); max_degree as usize + 1];
    for class in g.classes() {
        let tau = g.trace(class[0]);
        let size = Cyclotomic::integer(class.len() as i64);
        let (mut prev, mut cur) = (Cyclotomic::integer(0), Cyclotomic::integer(1));
        for total in totals.iter_mut() {
            *total = total.clone() + &(cur.clone() * &size);
            let next = tau.clone() * &cur - &prev;
            prev = cur;
            cur = next;
        }
    }
    let order = BigRational::from_integer(BigInt::from(g.order()));
    totals
        .iter()
        .enumerate()
        .map(|(d, t)| {
            t.to_rational()
                .map(|q| q / &order)
                .filter(|q| q.is_integer() && *q >= BigRational::zero())
                .and_then(|q| u64::try_from(q.to_integer()).ok())
                .ok_or(InvariantError::NonIntegralMolien(d as u32))
        })
        .collect()
}

fn q(s: &str) -> QPoly {
    QPoly::parse(s).expect("valid polynomial literal")
}

fn bd_phis(n: u32) -> [QPoly; 3] {
    let (xn, yn) = (QPoly::monomial((n, 0)), QPoly::monomial((0, n)));
    [xn.add(&yn), xn.sub(&yn), q("xy")]
}

/// Semi-invariants of the binary polyhedral groups that the fundamental
/// invariants are built from: `(φ_1, φ_2, φ_3)` in each case. `None` for
/// cyclic groups. The tetrahedral `φ_2, φ_3` involve `√−3`.
pub fn semi_invariants(spec: GroupSpec) -> Option<[CPoly; 3]> {
    let c = |p: QPoly| p.to_cyclotomic();
    match spec {
        GroupSpec::Cyclic(_) => None,
        GroupSpec::BinaryDihedral(n) => Some(bd_phis(n).map(c)),
        GroupSpec::BinaryTetrahedral => {
            let s = Cyclotomic::sqrt_minus3() * &Cyclotomic::integer(2);
            let mid = CPoly::term(s, (2, 2));
            let base = c(q("x^4 + y^4"));
            Some([c(q("x^5y - xy^5")), base.add(&mid), base.sub(&mid)])
        }
        GroupSpec::BinaryOctahedral => Some([
            c(q("x^5y - xy^5")),
            c(q("x^8 + 14x^4y^4 + y^8")),
            c(q("x^12 - 33x^8y^4 - 33x^4y^8 + y^12")),
        ]),
        GroupSpec::BinaryIcosahedral => None,
    }
}

/// The three fundamental invariants, in the order the generators are
/// usually listed: cyclic `x^ℓ, xy, y^ℓ`; dihedral `φ_3², φ_2², φ_1φ_2φ_3`
/// for even `n` and `φ_3², φ_1φ_2, φ_2²φ_3` for odd `n`; then the
/// polyhedral `f_1, f_2, f_3`.
pub fn fundamental_invariants(spec: GroupSpec) -> [QPoly; 3] {
    match spec {
        GroupSpec::Cyclic(l) => [QPoly::monomial((l, 0)), q("xy"), QPoly::monomial((0, l))],
        GroupSpec::BinaryDihedral(n) => {
            let [p1, p2, p3] = bd_phis(n);
            if n % 2 == 0 {
                [p3.pow(2), p2.pow(2), p1.mul(&p2).mul(&p3)]
            } else {
                [p3.pow(2), p1.mul(&p2), p2.pow(2).mul(&p3)]
            }
        }
        GroupSpec::BinaryTetrahedral => [
            q("x^5y - xy^5"),
            q("x^8 + 14x^4y^4 + y^8"),
            q("x^12 - 33x^8y^4 - 33x^4y^8 + y^12"),
        ],
        GroupSpec::BinaryOctahedral => [
            q("x^10y^2 - 2x^6y^6 + x^2y^10"),
            q("x^8 + 14x^4y^4 + y^8"),
            q("x^17y - 34x^13y^5 + 34x^5y^13 - xy^17"),
        ],
        GroupSpec::BinaryIcosahedral => [
            q("x^11y + 11x^6y^6 - xy^11"),
            q("-x^20 + 228x^15y^5 - 494x^10y^10 - 228x^5y^15 - y^20"),
            q("x^30 + 522x^25y^5 - 10005x^20y^10 - 10005x^10y^20 - 522x^5y^25 + y^30"),
        ],
    }
}

/// Fundamental invariants after checking each one against the generators.
pub fn checked_invariants(g: &FiniteGroup, spec: GroupSpec) -> Result<[QPoly; 3], InvariantError> {
    let fs = fundamental_invariants(spec);
    for (index, f) in fs.iter().enumerate() {
        if !is_invariant(g, &f.to_cyclotomic()) {
            return Err(InvariantError::NotInvariant {
                spec: alloc::format!("{spec}"),
                index: index + 1,
            });
        }
    }
    Ok(fs)
}

/// The zero-fiber ring `C[x, y]/I` of `V → V/Γ`, with `I` generated by the
/// fundamental invariants.
#[derive(Debug, Clone)]
pub struct ZeroFiber {
    pub spec: GroupSpec,
    pub generators: [QPoly; 3],
    pub basis: GroebnerBasis<BigRational>,
    pub standard: Vec<Monomial>,
}

impl ZeroFiber {
    pub fn new(spec: GroupSpec) -> Result<ZeroFiber, InvariantError> {
        ZeroFiber::from_generators(spec, fundamental_invariants(spec))
    }

    /// Like [`ZeroFiber::new`], but first checks the invariants against
    /// the group.
    pub fn checked(g: &FiniteGroup, spec: GroupSpec) -> Result<ZeroFiber, InvariantError> {
        ZeroFiber::from_generators(spec, checked_invariants(g, spec)?)
    }

    fn from_generators(spec: GroupSpec, generators: [QPoly; 3]) -> Result<ZeroFiber, InvariantError> {
        let basis = GroebnerBasis::new(&generators);
        let standard = basis
            .standard_monomials()
            .ok_or_else(|| InvariantError::InfiniteQuotient(alloc::format!("{spec}")))?;
        Ok(ZeroFiber {
            spec,
            generators,
            basis,
            standard,
        })
    }

    pub fn degree(&self) -> usize {
        self.standard.len()
    }

    /// Minimal generators of the initial ideal, ascending in lex order.
    pub fn initial_ideal(&self) -> Vec<Monomial> {
        self.basis.leading_monomials()
    }

    /// Number of standard monomials in each degree; the coefficients of the
    /// Hilbert series.
    pub fn hilbert(&self) -> Vec<usize> {
        let top = self.standard.iter().map(|m| m.0 + m.1).max().unwrap_or(0);
        let mut h = vec![0; top as usize + 1];
        for m in &self.standard {
            h[(m.0 + m.1) as usize] += 1;
        }
        h
    }

    /// Whether a monomial lies in the initial ideal.
    pub fn initial_contains(&self, m: Monomial) -> bool {
        self.initial_ideal().iter().any(|g| crate::poly::divides(*g, m))
    }

    /// Whether every invariant of degree `1..=max_degree` reduces to zero
    /// modulo `I`, i.e. the fundamental invariants generate the ideal of
    /// positive-degree invariants up to that degree.
    pub fn invariants_in_ideal(&self, g: &FiniteGroup, max_degree: u32) -> bool {
        let cyc: Vec<CPoly> = self.basis.polys.iter().map(|p| p.to_cyclotomic()).collect();
        (1..=max_degree).all(|d| {
            invariant_basis(g, d)
                .iter()
                .all(|p| crate::groebner::normal_form(p, &cyc).is_zero())
        })
    }

    /// `(min, max)` with `|Γ| ≤ degree ≤ C(|Γ| + 1, 2)`.
    pub fn degree_bounds(&self) -> (usize, usize) {
        let order = self.spec.order();
        (order, order * (order + 1) / 2)
    }
}

pub fn zero_fiber_degree(spec: GroupSpec) -> Result<usize, InvariantError> {
    ZeroFiber::new(spec).map(|z| z.degree())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(spec: GroupSpec) -> FiniteGroup {
        FiniteGroup::from_spec(spec).unwrap()
    }

    #[test]
    fn cyclic_generator_rule() {
        let w = GroupSpec::Cyclic(5).generators().remove(0);
        let z = Cyclotomic::zeta(5, 1);
        assert_eq!(CPoly::x().act(&w), CPoly::x().scale(&z.conj()));
        assert_eq!(CPoly::y().act(&w), CPoly::y().scale(&z));
    }

    #[test]
    fn reynolds_examples() {
        let g = group(GroupSpec::Cyclic(2));
        let x2 = q("x^2").to_cyclotomic();
        assert_eq!(reynolds(&g, &x2), x2);
        for spec in [GroupSpec::Cyclic(3), GroupSpec::BinaryDihedral(2)] {
            assert!(reynolds(&group(spec), &CPoly::x()).is_zero());
        }
        let g = group(GroupSpec::BinaryDihedral(2));
        let r = reynolds(&g, &q("x^4").to_cyclotomic());
        assert!(is_invariant(&g, &r));
    }

    #[test]
    fn small_invariant_dims() {
        let g = group(GroupSpec::Cyclic(3));
        assert_eq!(invariant_dim(&g, 2), 1);
        assert_eq!(invariant_basis(&g, 2)[0], q("xy").to_cyclotomic());
        assert_eq!(molien_coeffs(&group(GroupSpec::Cyclic(2)), 4).unwrap(), vec![1, 0, 3, 0, 5]);
    }

    #[test]
    fn tetrahedral_molien() {
        let m = molien_coeffs(&group(GroupSpec::BinaryTetrahedral), 12).unwrap();
        let nonzero: Vec<usize> = (1..=12).filter(|&d| m[d] > 0).collect();
        assert_eq!(nonzero, vec![6, 8, 12]);
    }

    #[test]
    fn cyclic_zero_fiber() {
        for l in 1..=8 {
            let z = ZeroFiber::new(GroupSpec::Cyclic(l)).unwrap();
            assert_eq!(z.degree(), 2 * l as usize - 1);
        }
    }

    #[test]
    fn semi_invariants_are_semi_invariant() {
        for spec in [
            GroupSpec::BinaryDihedral(3),
            GroupSpec::BinaryDihedral(4),
            GroupSpec::BinaryTetrahedral,
            GroupSpec::BinaryOctahedral,
        ] {
            let g = group(spec);
            for p in semi_invariants(spec).unwrap() {
                assert!(is_semi_invariant(&g, &p), "{spec}: {p}");
            }
        }
    }
}
