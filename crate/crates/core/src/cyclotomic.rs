//! Exact elements of the cyclotomic fields `Q(ζ_m)`.
//!
//! An element is stored in the power basis `1, ζ, …, ζ^{φ(m)-1}` as a vector
//! of integer numerators over one positive common denominator, reduced modulo
//! the `m`-th cyclotomic polynomial. The representation is canonical for a
//! fixed conductor, so equality is coefficient-wise. Values of different
//! conductors are combined by lifting both to the least common multiple.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::field::{parse_rational, rational_to_string};

/// Largest conductor any computation may reach.
pub const CONDUCTOR_CAP: u32 = 2520;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {0} exceeds the cap {CONDUCTOR_CAP}")]
    ConductorOverflow(u64),
    #[error("conductor {from} does not divide {to}")]
    NotADivisor { from: u32, to: u32 },
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("cannot parse cyclotomic number: {0}")]
    Parse(String),
}

/// Euler's totient.
pub fn euler_phi(m: u32) -> usize {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// Integer coefficients (constant term first) of the `m`-th cyclotomic
/// polynomial, computed as `(x^m - 1) / Π_{d | m, d < m} Φ_d`.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    let mut poly = vec![0i64; m as usize + 1];
    poly[0] = -1;
    poly[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            let divisor = cyclotomic_polynomial(d);
            poly = exact_monic_division(&poly, &divisor);
        }
    }
    poly
}

fn exact_monic_division(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = num.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// The data shared by every element of one cyclotomic field.
#[derive(Debug)]
pub struct CycField {
    conductor: u32,
    degree: usize,
    /// Φ_m, monic, constant term first.
    minpoly: Vec<i64>,
}

impl CycField {
    pub fn new(conductor: u32) -> Result<Arc<CycField>, ArithError> {
        if conductor == 0 {
            return Err(ArithError::ZeroConductor);
        }
        if conductor > CONDUCTOR_CAP {
            return Err(ArithError::ConductorOverflow(conductor as u64));
        }
        let minpoly = cyclotomic_polynomial(conductor);
        Ok(Arc::new(CycField {
            conductor,
            degree: minpoly.len() - 1,
            minpoly,
        }))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn minimal_polynomial(&self) -> &[i64] {
        &self.minpoly
    }

    /// Reduces an arbitrary-length coefficient vector modulo Φ_m in place
    /// and truncates it to `φ(m)` entries.
    fn reduce(&self, coeffs: &mut Vec<BigInt>) {
        let phi = self.degree;
        if coeffs.len() > phi {
            for k in (phi..coeffs.len()).rev() {
                if coeffs[k].is_zero() {
                    continue;
                }
                let c = core::mem::take(&mut coeffs[k]);
                for (j, &pj) in self.minpoly[..phi].iter().enumerate() {
                    if pj != 0 {
                        coeffs[k - phi + j] -= &c * pj;
                    }
                }
            }
        }
        coeffs.resize(phi, BigInt::zero());
    }
}

/// An exact element of `Q(ζ_m)`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CycField>,
    num: Vec<BigInt>,
    den: BigInt,
}

fn rational_field() -> Arc<CycField> {
    Arc::new(CycField {
        conductor: 1,
        degree: 1,
        minpoly: vec![-1, 1],
    })
}

impl Cyclotomic {
    fn from_parts(field: Arc<CycField>, mut num: Vec<BigInt>, den: BigInt) -> Cyclotomic {
        field.reduce(&mut num);
        let mut c = Cyclotomic { field, num, den };
        c.normalize();
        c
    }

    fn normalize(&mut self) {
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for n in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(n);
        }
        if self.den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for n in &mut self.num {
                *n = &*n / &g;
            }
            self.den = &self.den / &g;
        }
    }

    pub fn rational(q: BigRational) -> Cyclotomic {
        let (n, d) = q.into_raw();
        Cyclotomic::from_parts(rational_field(), vec![n], d)
    }

    pub fn integer(n: i64) -> Cyclotomic {
        Cyclotomic::from_parts(rational_field(), vec![BigInt::from(n)], BigInt::one())
    }

    /// The rational number `q` viewed inside `field`.
    pub fn rational_in(field: &Arc<CycField>, q: &BigRational) -> Cyclotomic {
        let mut num = vec![BigInt::zero(); field.degree];
        num[0] = q.numer().clone();
        let mut c = Cyclotomic {
            field: field.clone(),
            num,
            den: q.denom().clone(),
        };
        c.normalize();
        c
    }

    /// `ζ_m^k` for any integer `k`.
    pub fn zeta_in(field: &Arc<CycField>, k: i64) -> Cyclotomic {
        let m = field.conductor as i64;
        let e = k.rem_euclid(m) as usize;
        let mut num = vec![BigInt::zero(); e.max(field.degree - 1) + 1];
        num[e] = BigInt::one();
        Cyclotomic::from_parts(field.clone(), num, BigInt::one())
    }

    /// `ζ_m^k`; panics if `m` exceeds [`CONDUCTOR_CAP`].
    pub fn zeta(m: u32, k: i64) -> Cyclotomic {
        let field = CycField::new(m).expect("conductor within cap");
        Cyclotomic::zeta_in(&field, k)
    }

    /// Builds `Σ coeffs[i] ζ_m^i` (any length; reduced on construction).
    pub fn from_coeffs(field: &Arc<CycField>, coeffs: &[BigRational]) -> Cyclotomic {
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Cyclotomic::from_parts(field.clone(), num, den)
    }

    /// `√5 = ζ_5 − ζ_5² − ζ_5³ + ζ_5⁴` (quadratic Gauss sum).
    pub fn sqrt5() -> Cyclotomic {
        let f = CycField::new(5).unwrap();
        Cyclotomic::zeta_in(&f, 1) - &Cyclotomic::zeta_in(&f, 2) - &Cyclotomic::zeta_in(&f, 3)
            + &Cyclotomic::zeta_in(&f, 4)
    }

    /// `√−3 = 1 + 2ζ_3`.
    pub fn sqrt_minus3() -> Cyclotomic {
        Cyclotomic::integer(1) + &(Cyclotomic::zeta(3, 1) * &Cyclotomic::integer(2))
    }

    /// `√2 = ζ_8 + ζ_8^{-1}`.
    pub fn sqrt2() -> Cyclotomic {
        Cyclotomic::zeta(8, 1) + &Cyclotomic::zeta(8, -1)
    }

    /// The imaginary unit `ζ_4`.
    pub fn i() -> Cyclotomic {
        Cyclotomic::zeta(4, 1)
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    /// Power-basis coefficients, length `φ(m)`.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|n| BigRational::new(n.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// The integer value, if this is a rational integer fitting in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        let q = self.to_rational()?;
        if q.is_integer() {
            q.to_integer().to_i64()
        } else {
            None
        }
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Lifts into `Q(ζ_{m'})` via `ζ_m ↦ ζ_{m'}^{m'/m}`.
    pub fn lift_conductor(&self, target: u32) -> Result<Cyclotomic, ArithError> {
        if target == 0 {
            return Err(ArithError::ZeroConductor);
        }
        if !target.is_multiple_of(self.field.conductor) {
            return Err(ArithError::NotADivisor {
                from: self.field.conductor,
                to: target,
            });
        }
        if target == self.field.conductor {
            return Ok(self.clone());
        }
        let field = CycField::new(target)?;
        Ok(self.lift_into(&field))
    }

    /// Lifts into an existing field object, sharing it.
    pub fn lift_to(&self, field: &Arc<CycField>) -> Result<Cyclotomic, ArithError> {
        if !field.conductor.is_multiple_of(self.field.conductor) {
            return Err(ArithError::NotADivisor {
                from: self.field.conductor,
                to: field.conductor,
            });
        }
        Ok(self.lift_into(field))
    }

    fn lift_into(&self, field: &Arc<CycField>) -> Cyclotomic {
        if Arc::ptr_eq(field, &self.field) || field.conductor == self.field.conductor {
            return Cyclotomic {
                field: field.clone(),
                num: self.num.clone(),
                den: self.den.clone(),
            };
        }
        let step = (field.conductor / self.field.conductor) as usize;
        let len = (self.num.len() - 1) * step + 1;
        let mut num = vec![BigInt::zero(); len.max(field.degree)];
        for (i, c) in self.num.iter().enumerate() {
            num[i * step] = c.clone();
        }
        Cyclotomic::from_parts(field.clone(), num, self.den.clone())
    }

    /// Brings two operands to a common field.
    fn unify(a: &Cyclotomic, b: &Cyclotomic) -> Result<(Cyclotomic, Cyclotomic), ArithError> {
        let (ma, mb) = (a.field.conductor, b.field.conductor);
        if ma == mb {
            return Ok((a.clone(), b.clone()));
        }
        if mb % ma == 0 {
            return Ok((a.lift_into(&b.field), b.clone()));
        }
        if ma % mb == 0 {
            return Ok((a.clone(), b.lift_into(&a.field)));
        }
        let l = (ma as u64).lcm(&(mb as u64));
        if l > CONDUCTOR_CAP as u64 {
            return Err(ArithError::ConductorOverflow(l));
        }
        let field = CycField::new(l as u32)?;
        Ok((a.lift_into(&field), b.lift_into(&field)))
    }

    pub fn checked_add(&self, rhs: &Cyclotomic) -> Result<Cyclotomic, ArithError> {
        if self.field.conductor != rhs.field.conductor {
            let (a, b) = Cyclotomic::unify(self, rhs)?;
            return a.checked_add(&b);
        }
        let num = if self.den == rhs.den {
            self.num.iter().zip(&rhs.num).map(|(x, y)| x + y).collect()
        } else {
            self.num
                .iter()
                .zip(&rhs.num)
                .map(|(x, y)| x * &rhs.den + y * &self.den)
                .collect()
        };
        let den = if self.den == rhs.den {
            self.den.clone()
        } else {
            &self.den * &rhs.den
        };
        let mut c = Cyclotomic {
            field: self.field.clone(),
            num,
            den,
        };
        c.normalize();
        Ok(c)
    }

    pub fn checked_sub(&self, rhs: &Cyclotomic) -> Result<Cyclotomic, ArithError> {
        self.checked_add(&-rhs.clone())
    }

    pub fn checked_mul(&self, rhs: &Cyclotomic) -> Result<Cyclotomic, ArithError> {
        if self.field.conductor != rhs.field.conductor {
            let (a, b) = Cyclotomic::unify(self, rhs)?;
            return a.checked_mul(&b);
        }
        if rhs.is_rational() {
            return Ok(self.scale(&rhs.num[0], &rhs.den));
        }
        if self.is_rational() {
            return Ok(rhs.scale(&self.num[0], &self.den));
        }
        let n = self.num.len();
        let mut prod = vec![BigInt::zero(); 2 * n - 1];
        for (i, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.num.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Ok(Cyclotomic::from_parts(
            self.field.clone(),
            prod,
            &self.den * &rhs.den,
        ))
    }

    fn scale(&self, n: &BigInt, d: &BigInt) -> Cyclotomic {
        let mut c = Cyclotomic {
            field: self.field.clone(),
            num: self.num.iter().map(|x| x * n).collect(),
            den: &self.den * d,
        };
        c.normalize();
        c
    }

    pub fn checked_div(&self, rhs: &Cyclotomic) -> Result<Cyclotomic, ArithError> {
        let inv = rhs.checked_inv()?;
        self.checked_mul(&inv)
    }

    /// Inverse by solving `a · x = 1` in the power basis.
    pub fn checked_inv(&self) -> Result<Cyclotomic, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if self.is_rational() {
            let mut num = vec![BigInt::zero(); self.field.degree];
            num[0] = self.den.clone();
            let mut c = Cyclotomic {
                field: self.field.clone(),
                num,
                den: self.num[0].clone(),
            };
            c.normalize();
            return Ok(c);
        }
        let phi = self.field.degree;
        // columns: a·ζ^j, integer matrix scaled by den
        let mut rows: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); phi + 1]; phi];
        for j in 0..phi {
            let mut shifted = vec![BigInt::zero(); phi + j];
            for (i, c) in self.num.iter().enumerate() {
                shifted[i + j] = c.clone();
            }
            self.field.reduce(&mut shifted);
            for (i, c) in shifted.into_iter().enumerate() {
                rows[i][j] = BigRational::from_integer(c);
            }
        }
        rows[0][phi] = BigRational::from_integer(self.den.clone());
        let sol = solve_augmented(rows).ok_or(ArithError::DivisionByZero)?;
        Ok(Cyclotomic::from_coeffs(&self.field, &sol))
    }

    /// Complex conjugation, the automorphism `ζ ↦ ζ^{m-1}`.
    pub fn conj(&self) -> Cyclotomic {
        self.galois(-1)
    }

    /// The Galois automorphism `ζ ↦ ζ^k`, `gcd(k, m) = 1`.
    pub fn galois(&self, k: i64) -> Cyclotomic {
        let m = self.field.conductor as i64;
        if m <= 2 {
            return self.clone();
        }
        let mut num = vec![BigInt::zero(); m as usize];
        for (i, c) in self.num.iter().enumerate() {
            let e = ((i as i64) * k).rem_euclid(m) as usize;
            num[e] += c;
        }
        Cyclotomic::from_parts(self.field.clone(), num, self.den.clone())
    }

    /// `self * conj(self)`.
    pub fn abs_sq(&self) -> Cyclotomic {
        self.clone() * &self.conj()
    }

    pub fn pow(&self, mut e: u32) -> Cyclotomic {
        let mut base = self.clone();
        let mut acc = Cyclotomic::rational_in(&self.field, &BigRational::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            base = base.clone() * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order if this is a root of unity in its field.
    pub fn root_of_unity_order(&self) -> Option<u32> {
        let m = self.field.conductor;
        let bound = if m.is_multiple_of(2) { m } else { 2 * m };
        let one = Cyclotomic::integer(1);
        let mut p = self.clone();
        for k in 1..=bound {
            if p == one {
                return Some(k);
            }
            p = p * self;
        }
        None
    }

    /// Canonical text form `cyc(m): a0+a1*z+a2*z^2`, or a plain rational.
    pub fn to_canonical_string(&self) -> String {
        use core::fmt::Write;
        if let Some(q) = self.to_rational() {
            return rational_to_string(&q);
        }
        let mut s = String::new();
        let _ = write!(s, "cyc({}): ", self.field.conductor);
        let mut first = true;
        for (i, q) in self.coeffs().iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let text = rational_to_string(q);
            if !first && !text.starts_with('-') {
                s.push('+');
            }
            first = false;
            s.push_str(&text);
            match i {
                0 => {}
                1 => s.push_str("*z"),
                _ => {
                    let _ = write!(s, "*z^{}", i);
                }
            }
        }
        s
    }

    /// The key used to order and deduplicate values of one conductor.
    fn cmp_same_field(&self, other: &Cyclotomic) -> Ordering {
        self.den
            .cmp(&other.den)
            .then_with(|| self.num.cmp(&other.num))
    }
}

/// Gauss–Jordan on an augmented square system; `None` if singular.
fn solve_augmented(mut rows: Vec<Vec<BigRational>>) -> Option<Vec<BigRational>> {
    let n = rows.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        let inv = rows[col][col].recip();
        for x in rows[col].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = &*x - &factor * p;
                }
            }
        }
    }
    Some(rows.into_iter().map(|r| r[n].clone()).collect())
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Cyclotomic) -> bool {
        if self.field.conductor == other.field.conductor {
            return self.den == other.den && self.num == other.num;
        }
        match Cyclotomic::unify(self, other) {
            Ok((a, b)) => a.den == b.den && a.num == b.num,
            Err(_) => false,
        }
    }
}

impl Eq for Cyclotomic {}

/// A total order intended for keys sharing one conductor (the usual case
/// inside a computation context); mixed conductors are compared after
/// lifting to their lcm.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Cyclotomic) -> Ordering {
        if self.field.conductor == other.field.conductor {
            return self.cmp_same_field(other);
        }
        match Cyclotomic::unify(self, other) {
            Ok((a, b)) => a.cmp_same_field(&b),
            Err(_) => self.field.conductor.cmp(&other.field.conductor),
        }
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Cyclotomic) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl FromStr for Cyclotomic {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Cyclotomic, ArithError> {
        let err = || ArithError::Parse(String::from(s));
        let s = s.trim();
        let Some(rest) = s.strip_prefix("cyc(") else {
            return parse_rational(s).map(Cyclotomic::rational).ok_or_else(err);
        };
        let (m, body) = rest.split_once("):").ok_or_else(err)?;
        let m: u32 = m.trim().parse().map_err(|_| err())?;
        let field = CycField::new(m)?;
        let mut coeffs = vec![BigRational::zero(); field.degree()];
        // split into signed terms
        let body: String = body.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = body.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' && bytes[i - 1] != b'/' {
                terms.push(&body[start..i]);
                start = i;
            }
        }
        terms.push(&body[start..]);
        for term in terms {
            let term = term.strip_prefix('+').unwrap_or(term);
            let (c, power) = match term.split_once("*z") {
                Some((c, p)) => {
                    let e = if p.is_empty() {
                        1
                    } else {
                        p.strip_prefix('^')
                            .and_then(|e| e.parse::<usize>().ok())
                            .ok_or_else(err)?
                    };
                    (c, e)
                }
                None => (term, 0),
            };
            let q = parse_rational(c).ok_or_else(err)?;
            if power >= coeffs.len() {
                coeffs.resize(power + 1, BigRational::zero());
            }
            coeffs[power] += q;
        }
        Ok(Cyclotomic::from_coeffs(&field, &coeffs))
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;

    fn neg(mut self) -> Cyclotomic {
        for n in &mut self.num {
            *n = -core::mem::take(n);
        }
        self
    }
}

impl<'a> Add<&'a Cyclotomic> for Cyclotomic {
    type Output = Cyclotomic;

    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.checked_add(rhs).expect("cyclotomic addition")
    }
}

impl<'a> Sub<&'a Cyclotomic> for Cyclotomic {
    type Output = Cyclotomic;

    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.checked_sub(rhs).expect("cyclotomic subtraction")
    }
}

impl<'a> Mul<&'a Cyclotomic> for Cyclotomic {
    type Output = Cyclotomic;

    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.checked_mul(rhs).expect("cyclotomic multiplication")
    }
}

impl<'a> Div<&'a Cyclotomic> for Cyclotomic {
    type Output = Cyclotomic;

    /// Panics on division by zero; use [`Cyclotomic::checked_div`] otherwise.
    fn div(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.checked_div(rhs).expect("cyclotomic division")
    }
}

impl crate::field::Field for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::integer(0)
    }

    fn one() -> Self {
        Cyclotomic::integer(1)
    }

    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }

    fn inv(&self) -> Option<Self> {
        self.checked_inv().ok()
    }

    fn from_rational(q: BigRational) -> Self {
        Cyclotomic::rational(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn z(m: u32, k: i64) -> Cyclotomic {
        Cyclotomic::zeta(m, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(10), vec![1, -1, 1, -1, 1]);
        for m in 1..60 {
            assert_eq!(cyclotomic_polynomial(m).len() - 1, euler_phi(m));
        }
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(z(4, 1) * &z(4, 1), Cyclotomic::integer(-1));
    }

    #[test]
    fn vanishing_root_sum() {
        let s = (0..5).fold(Cyclotomic::integer(0), |acc, k| acc + &z(5, k));
        assert!(crate::field::Field::is_zero(&s));
    }

    #[test]
    fn inverse_of_one_minus_zeta3() {
        let a = Cyclotomic::integer(1) - &z(3, 1);
        let expected = (Cyclotomic::integer(2) + &z(3, 1)) * &Cyclotomic::rational(rat(1, 3));
        let inv = a.checked_inv().unwrap();
        assert_eq!(inv, expected);
        assert_eq!(a * &inv, Cyclotomic::integer(1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            Cyclotomic::integer(1).checked_div(&Cyclotomic::integer(0)),
            Err(ArithError::DivisionByZero)
        );
        assert_eq!(
            z(5, 1).checked_div(&(z(5, 1) - &z(5, 1))),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn lifting() {
        assert_eq!(z(2, 1).lift_conductor(4).unwrap(), z(4, 2));
        assert_eq!(z(4, 2), Cyclotomic::integer(-1));
        let seven = Cyclotomic::rational_in(&CycField::new(3).unwrap(), &rat(7, 1));
        let lifted = seven.lift_conductor(12).unwrap();
        assert_eq!(lifted.conductor(), 12);
        assert_eq!(lifted.to_rational(), Some(rat(7, 1)));
        let w = z(3, 1).lift_conductor(12).unwrap();
        assert_eq!(w, z(12, 4));
        // x^2 + x + 1 still vanishes
        let v = w.clone() * &w + &w + &Cyclotomic::integer(1);
        assert!(crate::field::Field::is_zero(&v));
        assert_eq!(
            z(3, 1).lift_conductor(8),
            Err(ArithError::NotADivisor { from: 3, to: 8 })
        );
        assert!(matches!(
            z(4, 1).lift_conductor(4 * CONDUCTOR_CAP),
            Err(ArithError::ConductorOverflow(_))
        ));
    }

    #[test]
    fn square_roots() {
        assert_eq!(Cyclotomic::sqrt5().abs_sq(), Cyclotomic::integer(5));
        assert_eq!(
            Cyclotomic::sqrt5() * &Cyclotomic::sqrt5(),
            Cyclotomic::integer(5)
        );
        assert_eq!(
            Cyclotomic::sqrt_minus3() * &Cyclotomic::sqrt_minus3(),
            Cyclotomic::integer(-3)
        );
        assert_eq!(
            Cyclotomic::sqrt2() * &Cyclotomic::sqrt2(),
            Cyclotomic::integer(2)
        );
        assert!(Cyclotomic::sqrt5().is_real());
        assert!(!Cyclotomic::sqrt_minus3().is_real());
    }

    #[test]
    fn conjugation_and_rationality() {
        assert_eq!(z(7, 2).conj(), z(7, 5));
        assert!(z(6, 1).abs_sq().is_rational());
        assert!(!z(6, 1).is_rational());
        assert_eq!(z(12, 3).root_of_unity_order(), Some(4));
        assert_eq!((-z(5, 1)).root_of_unity_order(), Some(10));
    }

    #[test]
    fn canonical_text_round_trip() {
        let a = z(12, 1) * &Cyclotomic::rational(rat(-3, 7)) + &Cyclotomic::rational(rat(1, 2));
        let s = a.to_canonical_string();
        assert_eq!(s, "cyc(12): 1/2-3/7*z");
        assert_eq!(s.parse::<Cyclotomic>().unwrap(), a);
        assert_eq!("5/3".parse::<Cyclotomic>().unwrap(), Cyclotomic::rational(rat(5, 3)));
    }
}
