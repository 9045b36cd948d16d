//! Quaternions `q = z1 + j·z2` with cyclotomic components, quaternionic
//! vectors and matrices, the Hermitian form and its split into a complex
//! Hermitian part and a complex symplectic part.
//!
//! Multiplication follows from `j·z = conj(z)·j` and `j² = −1`:
//! `(z1 + j z2)(w1 + j w2) = (z1 w1 − conj(z2) w2) + j (conj(z1) w2 + z2 w1)`.
//! Left multiplication by `q` on `H = C ⊕ jC` has the complex matrix
//! `[[z1, −conj z2], [z2, conj z1]]`, which is how quaternionic matrices are
//! embedded into complex matrices of twice the size.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::cyclotomic::Cyclotomic;
use crate::linalg::Matrix;

#[derive(Clone, PartialEq, Eq)]
pub struct Quaternion {
    pub z1: Cyclotomic,
    pub z2: Cyclotomic,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuatError {
    #[error("vector lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
}

impl Quaternion {
    pub fn new(z1: Cyclotomic, z2: Cyclotomic) -> Quaternion {
        Quaternion { z1, z2 }
    }

    pub fn from_complex(z: Cyclotomic) -> Quaternion {
        Quaternion::new(z, Cyclotomic::integer(0))
    }

    pub fn zero() -> Quaternion {
        Quaternion::from_complex(Cyclotomic::integer(0))
    }

    pub fn one() -> Quaternion {
        Quaternion::from_complex(Cyclotomic::integer(1))
    }

    pub fn i() -> Quaternion {
        Quaternion::from_complex(Cyclotomic::i())
    }

    pub fn j() -> Quaternion {
        Quaternion::new(Cyclotomic::integer(0), Cyclotomic::integer(1))
    }

    /// `k = i·j = −j·i`.
    pub fn k() -> Quaternion {
        Quaternion::new(Cyclotomic::integer(0), -Cyclotomic::i())
    }

    /// Reads the quaternion off a complex 2×2 matrix of the form
    /// `[[z1, −conj z2], [z2, conj z1]]`; `None` if the shape is wrong.
    pub fn from_su2(m: &Matrix<Cyclotomic>) -> Option<Quaternion> {
        let q = Quaternion::new(m[(0, 0)].clone(), m[(1, 0)].clone());
        (q.left_matrix() == *m).then_some(q)
    }

    pub fn is_zero(&self) -> bool {
        self.z1.is_zero() && self.z2.is_zero()
    }

    pub fn conj(&self) -> Quaternion {
        Quaternion::new(self.z1.conj(), -self.z2.clone())
    }

    /// `conj(q)·q = |z1|² + |z2|²`, a non-negative rational when the
    /// components lie in a real-closed-under-conjugation field.
    pub fn norm_sq(&self) -> Cyclotomic {
        self.z1.abs_sq() + &self.z2.abs_sq()
    }

    pub fn inv(&self) -> Option<Quaternion> {
        let n = self.norm_sq().checked_inv().ok()?;
        let c = self.conj();
        Some(Quaternion::new(c.z1 * &n, c.z2 * &n))
    }

    /// Multiplication by a complex scalar on the right.
    pub fn scale_right(&self, z: &Cyclotomic) -> Quaternion {
        self.clone() * &Quaternion::from_complex(z.clone())
    }

    /// The 2×2 complex matrix of left multiplication.
    pub fn left_matrix(&self) -> Matrix<Cyclotomic> {
        Matrix::from_rows(alloc::vec![
            alloc::vec![self.z1.clone(), -self.z2.conj()],
            alloc::vec![self.z2.clone(), self.z1.conj()],
        ])
    }

    pub fn conductor(&self) -> u32 {
        let (a, b) = (self.z1.conductor() as u64, self.z2.conductor() as u64);
        num_integer::Integer::lcm(&a, &b) as u32
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + j({})", self.z1, self.z2)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        Quaternion::new(-self.z1, -self.z2)
    }
}

impl<'a> Add<&'a Quaternion> for Quaternion {
    type Output = Quaternion;

    fn add(self, rhs: &'a Quaternion) -> Quaternion {
        Quaternion::new(self.z1 + &rhs.z1, self.z2 + &rhs.z2)
    }
}

impl<'a> Sub<&'a Quaternion> for Quaternion {
    type Output = Quaternion;

    fn sub(self, rhs: &'a Quaternion) -> Quaternion {
        Quaternion::new(self.z1 - &rhs.z1, self.z2 - &rhs.z2)
    }
}

impl<'a> Mul<&'a Quaternion> for Quaternion {
    type Output = Quaternion;

    fn mul(self, rhs: &'a Quaternion) -> Quaternion {
        let a = self.z1.clone() * &rhs.z1 - &(self.z2.conj() * &rhs.z2);
        let b = self.z1.conj() * &rhs.z2 + &(self.z2 * &rhs.z1);
        Quaternion::new(a, b)
    }
}

/// `(x, y) = Σ conj(x_p) · y_p`.
pub fn hermitian_form(x: &[Quaternion], y: &[Quaternion]) -> Result<Quaternion, QuatError> {
    if x.len() != y.len() {
        return Err(QuatError::LengthMismatch(x.len(), y.len()));
    }
    Ok(x.iter()
        .zip(y)
        .fold(Quaternion::zero(), |acc, (a, b)| acc + &(a.conj() * b)))
}

/// Writes `(x, y) = h + j·s` and returns `(h, s)`: the complex Hermitian part
/// and the complex symplectic part of the quaternionic form.
pub fn split_form(
    x: &[Quaternion],
    y: &[Quaternion],
) -> Result<(Cyclotomic, Cyclotomic), QuatError> {
    let q = hermitian_form(x, y)?;
    Ok((q.z1, q.z2))
}

/// A quaternionic vector multiplied on the right by `q`.
pub fn vec_scale_right(v: &[Quaternion], q: &Quaternion) -> Vec<Quaternion> {
    v.iter().map(|x| x.clone() * q).collect()
}

/// An `n × m` quaternionic matrix acting on column vectors from the left.
#[derive(Clone, PartialEq)]
pub struct QuatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

impl QuatMatrix {
    pub fn from_rows(rows: Vec<Vec<Quaternion>>) -> QuatMatrix {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        QuatMatrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn identity(n: usize) -> QuatMatrix {
        let mut rows = alloc::vec![alloc::vec![Quaternion::zero(); n]; n];
        for (i, r) in rows.iter_mut().enumerate() {
            r[i] = Quaternion::one();
        }
        QuatMatrix::from_rows(rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Quaternion {
        &self.data[i * self.cols + j]
    }

    pub fn mul(&self, rhs: &QuatMatrix) -> QuatMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = Vec::with_capacity(rhs.cols);
            for j in 0..rhs.cols {
                let mut acc = Quaternion::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = rhs.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + &(a.clone() * b);
                    }
                }
                row.push(acc);
            }
            rows.push(row);
        }
        QuatMatrix::from_rows(rows)
    }

    pub fn apply(&self, v: &[Quaternion]) -> Vec<Quaternion> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(Quaternion::zero(), |acc, k| acc + &(self.get(i, k).clone() * &v[k]))
            })
            .collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> QuatMatrix {
        let rows = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j).conj()).collect())
            .collect();
        QuatMatrix::from_rows(rows)
    }

    /// Whether `A* A = 1`.
    pub fn is_unitary(&self) -> bool {
        self.rows == self.cols && self.adjoint().mul(self) == QuatMatrix::identity(self.rows)
    }

    /// The `2n × 2m` complex matrix obtained by replacing each entry with its
    /// left-multiplication block.
    pub fn to_complex(&self) -> Matrix<Cyclotomic> {
        let mut m = Matrix::zeros(2 * self.rows, 2 * self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let q = self.get(i, j);
                if q.is_zero() {
                    continue;
                }
                let b = q.left_matrix();
                for (di, dj) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                    m[(2 * i + di, 2 * j + dj)] = b[(di, dj)].clone();
                }
            }
        }
        m
    }

    /// Rank by Gaussian elimination over `H` (rows scaled on the left).
    pub fn quaternionic_rank(&self) -> usize {
        let mut a: Vec<Vec<Quaternion>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].inv().expect("nonzero pivot");
            a[r] = a[r].iter().map(|x| inv.clone() * x).collect();
            for i in 0..self.rows {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    let pivot_row = a[r].clone();
                    for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                        *x = x.clone() - &(f.clone() * y);
                    }
                }
            }
            r += 1;
            if r == self.rows {
                break;
            }
        }
        r
    }
}

/// Complex coordinates `(z1_1, z2_1, z1_2, z2_2, …)` of a quaternionic
/// vector, matching [`QuatMatrix::to_complex`].
pub fn to_complex_vec(v: &[Quaternion]) -> Vec<Cyclotomic> {
    v.iter()
        .flat_map(|q| [q.z1.clone(), q.z2.clone()])
        .collect()
}

pub fn from_complex_vec(v: &[Cyclotomic]) -> Vec<Quaternion> {
    v.chunks(2)
        .map(|c| Quaternion::new(c[0].clone(), c[1].clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Cyclotomic {
        Cyclotomic::integer(n)
    }

    #[test]
    fn basis_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        let m1 = -Quaternion::one();
        assert_eq!(i.clone() * &i, m1);
        assert_eq!(j.clone() * &j, m1);
        assert_eq!(k.clone() * &k, m1);
        assert_eq!(i.clone() * &j * &k, m1);
        assert_eq!(i.clone() * &j, k);
    }

    #[test]
    fn conjugate_and_norm() {
        let q = Quaternion::one() + &(Quaternion::j() * &Quaternion::from_complex(c(2)));
        assert_eq!(q.conj(), Quaternion::new(c(1), c(-2)));
        assert_eq!(q.norm_sq(), c(5));
        let q1 = Quaternion::one() + &Quaternion::i();
        let q2 = Quaternion::j();
        assert_eq!((q1.clone() * &q2).norm_sq(), c(2));
        assert_eq!(q1.clone() * &q1.inv().unwrap(), Quaternion::one());
    }

    #[test]
    fn hermitian_form_examples() {
        let e1 = [Quaternion::one(), Quaternion::zero()];
        let e2 = [Quaternion::zero(), Quaternion::one()];
        assert_eq!(hermitian_form(&e1, &e1).unwrap(), Quaternion::one());
        assert_eq!(hermitian_form(&e1, &e2).unwrap(), Quaternion::zero());
        let x = [Quaternion::j(), Quaternion::zero()];
        let y = [Quaternion::i(), Quaternion::zero()];
        assert_eq!(hermitian_form(&x, &y).unwrap(), Quaternion::k());
        assert_eq!(
            hermitian_form(&e1, &[Quaternion::one()]),
            Err(QuatError::LengthMismatch(2, 1))
        );
    }

    #[test]
    fn split_form_examples() {
        let e1 = [Quaternion::one(), Quaternion::zero()];
        assert_eq!(split_form(&e1, &e1).unwrap(), (c(1), c(0)));
        let y = [Quaternion::j(), Quaternion::zero()];
        assert_eq!(split_form(&e1, &y).unwrap(), (c(0), c(1)));
        assert_eq!(split_form(&y, &e1).unwrap(), (c(0), c(-1)));
    }

    #[test]
    fn embedding_is_multiplicative() {
        let a = Quaternion::new(Cyclotomic::zeta(8, 1), c(2));
        let b = Quaternion::new(c(-1), Cyclotomic::zeta(3, 1));
        assert_eq!(
            (a.clone() * &b).left_matrix(),
            a.left_matrix().mul(&b.left_matrix())
        );
        assert_eq!(Quaternion::from_su2(&a.left_matrix()), Some(a));
    }

    #[test]
    fn ranks_agree() {
        let i = Quaternion::i();
        let j = Quaternion::j();
        let m = QuatMatrix::from_rows(alloc::vec![
            alloc::vec![Quaternion::one(), i.clone()],
            alloc::vec![j.clone(), j.clone() * &i],
        ]);
        assert_eq!(m.quaternionic_rank(), 1);
        assert_eq!(m.to_complex().rank(), 2);
        assert!(QuatMatrix::identity(3).is_unitary());
    }
}
