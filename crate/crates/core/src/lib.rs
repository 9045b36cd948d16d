//! Exact computations around quaternionic reflection groups built from the
//! finite subgroups of the unit quaternions: cyclotomic and quaternionic
//! arithmetic, group enumeration and character tables, McKay graphs and
//! affine root systems, wreath-product numerology, invariant theory with
//! Groebner bases, and semi-invariant dimension counts.
//!
//! Everything is exact. The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod cyclotomic;
pub mod field;
pub mod groups;
pub mod invariants;
pub mod ledger;
pub mod linalg;
pub mod groebner;
pub mod mckay;
pub mod poly;
pub mod quaternion;
pub mod wreath;

pub use cyclotomic::{ArithError, CycField, Cyclotomic};
pub use field::Field;
