//! Sparse bivariate polynomials in `x, y` over a [`Field`], ordered
//! lexicographically with `x > y`: `x^a y^b > x^c y^d` iff `a > c`, or
//! `a = c` and `b > d`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclotomic::Cyclotomic;
use crate::field::{parse_rational, Field};
use crate::linalg::Matrix;

/// An exponent pair `(a, b)` for `x^a y^b`. The derived tuple order is the
/// lex order.
pub type Monomial = (u32, u32);

pub fn divides(m: Monomial, n: Monomial) -> bool {
    m.0 <= n.0 && m.1 <= n.1
}

pub fn lcm(m: Monomial, n: Monomial) -> Monomial {
    (m.0.max(n.0), m.1.max(n.1))
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly<K> {
    terms: BTreeMap<Monomial, K>,
}

impl<K: Field> Default for Poly<K> {
    fn default() -> Self {
        Poly::zero()
    }
}

impl<K: Field> Poly<K> {
    pub fn zero() -> Poly<K> {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: K) -> Poly<K> {
        Poly::term(c, (0, 0))
    }

    pub fn one() -> Poly<K> {
        Poly::constant(K::one())
    }

    pub fn x() -> Poly<K> {
        Poly::term(K::one(), (1, 0))
    }

    pub fn y() -> Poly<K> {
        Poly::term(K::one(), (0, 1))
    }

    pub fn monomial(m: Monomial) -> Poly<K> {
        Poly::term(K::one(), m)
    }

    pub fn term(c: K, m: Monomial) -> Poly<K> {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, K)>) -> Poly<K> {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> K {
        self.terms.get(&m).cloned().unwrap_or_else(K::zero)
    }

    pub fn leading(&self) -> Option<(Monomial, &K)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.keys().next_back().copied()
    }

    /// Total degree (`None` for zero).
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut d = self.terms.keys().map(|(a, b)| a + b);
        match d.next() {
            Some(first) => d.all(|e| e == first),
            None => true,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + &c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Poly<K>) -> Poly<K> {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly<K>) -> Poly<K> {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly<K> {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Poly<K> {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (*m, x.clone() * c)).collect(),
        }
    }

    /// `c · x^a y^b · self`.
    pub fn mul_term(&self, c: &K, m: Monomial) -> Poly<K> {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(n, x)| ((n.0 + m.0, n.1 + m.1), x.clone() * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly<K>) -> Poly<K> {
        let mut out = Poly::zero();
        for (m, c) in &other.terms {
            for (n, x) in &self.terms {
                out.add_term((n.0 + m.0, n.1 + m.1), x.clone() * c);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly<K> {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly<K> {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
            None => Poly::zero(),
        }
    }

    /// Substitutes `x ↦ u`, `y ↦ v`.
    pub fn substitute(&self, u: &Poly<K>, v: &Poly<K>) -> Poly<K> {
        let max_a = self.terms.keys().map(|m| m.0).max().unwrap_or(0);
        let max_b = self.terms.keys().map(|m| m.1).max().unwrap_or(0);
        let mut up = Vec::with_capacity(max_a as usize + 1);
        up.push(Poly::one());
        for i in 0..max_a as usize {
            up.push(up[i].mul(u));
        }
        let mut vp = Vec::with_capacity(max_b as usize + 1);
        vp.push(Poly::one());
        for i in 0..max_b as usize {
            vp.push(vp[i].mul(v));
        }
        let mut out = Poly::zero();
        for ((a, b), c) in &self.terms {
            out = out.add(&up[*a as usize].mul(&vp[*b as usize]).scale(c));
        }
        out
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> Poly<L> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }
}

impl Poly<BigRational> {
    /// Parses strings such as `15x^4y^5 + y^9`, `-3/2*x*y^2` or `x^2 - 2xy`.
    pub fn parse(s: &str) -> Option<Poly<BigRational>> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return None;
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (i, ch) in s.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 && !s[..i].ends_with('^') {
                terms.push(core::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut p = Poly::zero();
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, t.strip_prefix('+').unwrap_or(&t)),
            };
            let split = body.find(['x', 'y']).unwrap_or(body.len());
            let (num, vars) = body.split_at(split);
            let num = num.trim_end_matches('*');
            let mut c = if num.is_empty() {
                BigRational::from_integer(BigInt::from(1))
            } else {
                parse_rational(num)?
            };
            if sign < 0 {
                c = -c;
            }
            let (mut a, mut b) = (0u32, 0u32);
            let mut rest = vars;
            while !rest.is_empty() {
                rest = rest.trim_start_matches('*');
                let var = rest.chars().next()?;
                rest = &rest[1..];
                let mut e = 1u32;
                if let Some(r) = rest.strip_prefix('^') {
                    let end = r.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(r.len());
                    e = r[..end].parse().ok()?;
                    rest = &r[end..];
                }
                match var {
                    'x' => a += e,
                    'y' => b += e,
                    _ => return None,
                }
            }
            p.add_term((a, b), c);
        }
        Some(p)
    }

    pub fn to_cyclotomic(&self) -> Poly<Cyclotomic> {
        self.map(|c| Cyclotomic::rational(c.clone()))
    }
}

impl Poly<Cyclotomic> {
    /// `None` if some coefficient is irrational.
    pub fn to_rational(&self) -> Option<Poly<BigRational>> {
        let mut p = Poly::zero();
        for (m, c) in &self.terms {
            p.add_term(*m, c.to_rational()?);
        }
        Some(p)
    }

    /// `g · p = p ∘ g⁻¹` for `g ∈ SL_2`: with `g⁻¹ = [[a, b], [c, d]]`,
    /// `x ↦ a x + b y` and `y ↦ c x + d y`. Under this rule
    /// `diag(ζ, ζ⁻¹)` sends `x` to `ζ⁻¹ x` and `y` to `ζ y`.
    pub fn act(&self, g: &Matrix<Cyclotomic>) -> Poly<Cyclotomic> {
        // for det 1 the inverse is [[g11, −g01], [−g10, g00]]
        let (a, b) = (g[(1, 1)].clone(), -g[(0, 1)].clone());
        let (c, d) = (-g[(1, 0)].clone(), g[(0, 0)].clone());
        let u = Poly::term(a, (1, 0)).add(&Poly::term(b, (0, 1)));
        let v = Poly::term(c, (1, 0)).add(&Poly::term(d, (0, 1)));
        self.substitute(&u, &v)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, (a, b): Monomial) -> fmt::Result {
    match a {
        0 => {}
        1 => f.write_str("x")?,
        _ => write!(f, "x^{a}")?,
    }
    match b {
        0 => {}
        1 => f.write_str("y")?,
        _ => write!(f, "y^{b}")?,
    }
    Ok(())
}

/// Leading term first; coefficients in their canonical text form, wrapped
/// in parentheses unless they are plain rationals.
impl<K: Field> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let one = K::one();
        let minus_one = -K::one();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let text = alloc::format!("{c}");
            let plain = !text.contains(['z', ':', '+']) && !text[1..].contains('-');
            let is_const = *m == (0, 0);
            if *c == one && !is_const {
                if i > 0 {
                    f.write_str(" + ")?;
                }
            } else if *c == minus_one && !is_const {
                f.write_str(if i > 0 { " - " } else { "-" })?;
            } else if plain {
                match text.strip_prefix('-') {
                    Some(t) => write!(f, "{}{t}", if i > 0 { " - " } else { "-" })?,
                    None => write!(f, "{}{text}", if i > 0 { " + " } else { "" })?,
                }
            } else {
                write!(f, "{}({text})", if i > 0 { " + " } else { "" })?;
            }
            write_monomial(f, *m)?;
        }
        Ok(())
    }
}

impl<K: Field> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    type P = Poly<BigRational>;

    #[test]
    fn lex_order_and_leading_terms() {
        let p = P::parse("x^2y^3 + x^3 + y^10").unwrap();
        assert_eq!(p.leading_monomial(), Some((3, 0)));
        assert!((2, 5) > (1, 9) && (2, 5) > (2, 4));
    }

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["15x^4y^5 + y^9", "x^17y - 34x^13y^5 + 34x^5y^13 - xy^17", "-3/2x^2 + 7", "x"] {
            let p = P::parse(s).unwrap();
            assert_eq!(P::parse(&alloc::format!("{p}")).unwrap(), p, "{s}");
        }
        assert_eq!(P::parse("2*x*y^2").unwrap(), P::term(rat(2, 1), (1, 2)));
        assert!(P::parse("x^2z").is_none());
    }

    #[test]
    fn arithmetic() {
        let a = P::parse("x + y").unwrap();
        let b = P::parse("x - y").unwrap();
        assert_eq!(a.mul(&b), P::parse("x^2 - y^2").unwrap());
        assert_eq!(a.pow(3), P::parse("x^3 + 3x^2y + 3xy^2 + y^3").unwrap());
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.substitute(&b, &b), b.scale(&rat(2, 1)));
    }

    #[test]
    fn cyclic_generator_action() {
        let z = Cyclotomic::zeta(5, 1);
        let w = Matrix::from_rows(alloc::vec![
            alloc::vec![z.clone(), Cyclotomic::integer(0)],
            alloc::vec![Cyclotomic::integer(0), z.conj()],
        ]);
        let x = Poly::<Cyclotomic>::x();
        assert_eq!(x.act(&w), Poly::term(z.conj(), (1, 0)));
        assert_eq!(Poly::<Cyclotomic>::y().act(&w), Poly::term(z, (0, 1)));
    }
}
