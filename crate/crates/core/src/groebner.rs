//! Buchberger's algorithm for bivariate ideals under the lex order, with the
//! coprime and chain criteria, division with quotients, and standard-monomial
//! counts.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::field::Field;
use crate::poly::{divides, lcm, Monomial, Poly};

/// Division of `f` by an ordered list: `f = Σ q_i g_i + r` with no term of
/// `r` divisible by a leading monomial of the `g_i`.
pub fn divide<K: Field>(f: &Poly<K>, divisors: &[Poly<K>]) -> (Vec<Poly<K>>, Poly<K>) {
    let mut quotients = vec![Poly::zero(); divisors.len()];
    let mut rem = Poly::zero();
    let mut p = f.clone();
    let leads: Vec<(Monomial, K)> = divisors
        .iter()
        .map(|g| {
            let (m, c) = g.leading().expect("nonzero divisor");
            (m, c.inv().expect("nonzero"))
        })
        .collect();
    while let Some((m, c)) = p.leading() {
        let c = c.clone();
        match leads.iter().position(|(lm, _)| divides(*lm, m)) {
            Some(i) => {
                let (lm, inv) = &leads[i];
                let t = (m.0 - lm.0, m.1 - lm.1);
                let k = c * inv;
                p = p.sub(&divisors[i].mul_term(&k, t));
                quotients[i].add_term(t, k);
            }
            None => {
                rem.add_term(m, c.clone());
                p = p.sub(&Poly::term(c, m));
            }
        }
    }
    (quotients, rem)
}

pub fn normal_form<K: Field>(f: &Poly<K>, basis: &[Poly<K>]) -> Poly<K> {
    divide(f, basis).1
}

pub fn s_polynomial<K: Field>(f: &Poly<K>, g: &Poly<K>) -> Poly<K> {
    let (mf, cf) = f.leading().expect("nonzero");
    let (mg, cg) = g.leading().expect("nonzero");
    let l = lcm(mf, mg);
    let a = f.mul_term(&cf.inv().expect("nonzero"), (l.0 - mf.0, l.1 - mf.1));
    let b = g.mul_term(&cg.inv().expect("nonzero"), (l.0 - mg.0, l.1 - mg.1));
    a.sub(&b)
}

/// A reduced Groebner basis, sorted by leading monomial (ascending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis<K: Field> {
    pub polys: Vec<Poly<K>>,
}

impl<K: Field> GroebnerBasis<K> {
    pub fn new(generators: &[Poly<K>]) -> GroebnerBasis<K> {
        let mut basis: Vec<Poly<K>> = Vec::new();
        for g in generators {
            let r = normal_form(g, &basis);
            if !r.is_zero() {
                basis.push(r.monic());
            }
        }
        let mut pairs: BTreeSet<(u32, Monomial, usize, usize)> = BTreeSet::new();
        let key = |basis: &[Poly<K>], i: usize, j: usize| {
            let l = lcm(basis[i].leading_monomial().unwrap(), basis[j].leading_monomial().unwrap());
            (l.0 + l.1, l, i, j)
        };
        for j in 0..basis.len() {
            for i in 0..j {
                pairs.insert(key(&basis, i, j));
            }
        }
        let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
        while let Some(p) = pairs.pop_first() {
            let (_, l, i, j) = p;
            done.insert((i, j));
            let mi = basis[i].leading_monomial().unwrap();
            let mj = basis[j].leading_monomial().unwrap();
            // coprime leading monomials
            if mi.0.min(mj.0) == 0 && mi.1.min(mj.1) == 0 {
                continue;
            }
            // chain criterion
            let ordered = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && divides(basis[k].leading_monomial().unwrap(), l)
                    && done.contains(&ordered(i, k))
                    && done.contains(&ordered(j, k))
            });
            if chain {
                continue;
            }
            let r = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
            if !r.is_zero() {
                basis.push(r.monic());
                let n = basis.len() - 1;
                for i in 0..n {
                    pairs.insert(key(&basis, i, n));
                }
            }
        }
        GroebnerBasis {
            polys: reduce(basis),
        }
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p.leading_monomial().unwrap()).collect()
    }

    pub fn normal_form(&self, f: &Poly<K>) -> Poly<K> {
        normal_form(f, &self.polys)
    }

    pub fn contains(&self, f: &Poly<K>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Every pairwise S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        (0..self.polys.len()).all(|j| {
            (0..j).all(|i| self.normal_form(&s_polynomial(&self.polys[i], &self.polys[j])).is_zero())
        })
    }

    /// Monic, no leading monomial divides another, and no term of any
    /// element is divisible by the leading monomial of another.
    pub fn is_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.polys.iter().enumerate().all(|(i, p)| {
            p.leading().unwrap().1.is_one()
                && p.terms()
                    .all(|(m, _)| lms.iter().enumerate().all(|(j, l)| j == i || !divides(*l, *m)))
        })
    }

    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        standard_monomials(&self.leading_monomials())
    }
}

/// Monomials outside the monomial ideal generated by `gens`; `None` when
/// there are infinitely many.
pub fn standard_monomials(gens: &[Monomial]) -> Option<Vec<Monomial>> {
    let max_x = gens.iter().filter(|m| m.1 == 0).map(|m| m.0).min()?;
    let max_y = gens.iter().filter(|m| m.0 == 0).map(|m| m.1).min()?;
    let mut out = Vec::new();
    for a in 0..max_x {
        for b in 0..max_y {
            if !gens.iter().any(|g| divides(*g, (a, b))) {
                out.push((a, b));
            }
        }
    }
    Some(out)
}

fn reduce<K: Field>(mut basis: Vec<Poly<K>>) -> Vec<Poly<K>> {
    // drop elements whose leading monomial is divisible by another's
    basis.sort_by_key(|p| p.leading_monomial());
    let mut minimal: Vec<Poly<K>> = Vec::new();
    for p in basis {
        let m = p.leading_monomial().unwrap();
        if !minimal.iter().any(|q| divides(q.leading_monomial().unwrap(), m)) {
            minimal.retain(|q| !divides(m, q.leading_monomial().unwrap()));
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly<K>> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| q.clone())
            .collect();
        let (m, c) = minimal[i].leading().unwrap();
        let head = Poly::term(c.clone(), m);
        let tail = normal_form(&minimal[i].sub(&head), &others);
        out.push(head.add(&tail).monic());
    }
    out.sort_by_key(|p| p.leading_monomial());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = Poly<BigRational>;

    fn p(s: &str) -> P {
        P::parse(s).unwrap()
    }

    #[test]
    fn trivial_bases() {
        let gb = GroebnerBasis::new(&[p("x"), p("y")]);
        assert_eq!(gb.polys, vec![p("y"), p("x")]);
        assert_eq!(gb.standard_monomials().unwrap(), vec![(0, 0)]);
        let gb = GroebnerBasis::new(&[p("x^2"), p("xy"), p("y^2")]);
        assert_eq!(gb.standard_monomials().unwrap().len(), 3);
    }

    #[test]
    fn cyclic_three() {
        let gb = GroebnerBasis::new(&[p("x^3"), p("xy"), p("y^3")]);
        assert_eq!(gb.standard_monomials().unwrap().len(), 5);
        assert!(gb.is_groebner() && gb.is_reduced());
    }

    #[test]
    fn division_identity() {
        let f = p("x^3y + 2xy^4 - y^7 + 5");
        let divs = [p("x^2 - y"), p("xy^2 + 1")];
        let (q, r) = divide(&f, &divs);
        let mut back = r.clone();
        for (qi, gi) in q.iter().zip(&divs) {
            back = back.add(&qi.mul(gi));
        }
        assert_eq!(back, f);
    }

    #[test]
    fn order_independent() {
        let gens = [p("x^2y - y^3"), p("x^4 + x^2y^2"), p("xy^3 + 2y^4")];
        let a = GroebnerBasis::new(&gens);
        let mut rev = gens.to_vec();
        rev.reverse();
        assert_eq!(a, GroebnerBasis::new(&rev));
        assert!(a.is_groebner() && a.is_reduced());
    }
}
