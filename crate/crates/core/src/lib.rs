//! Characteristic polynomial, determinant and adjugate of dense square
//! matrices over exact commutative rings.
//!
//! The trace-based algorithms ([`charpoly::faddeev_leverrier`] and its
//! baby-step giant-step refinement [`charpoly::preparata_sarwate`]) only
//! divide exactly by the small integers `1..=n`. [`charpoly::berkowitz`] is
//! fully division-free; [`elimination`] holds pivoting comparators.
//!
//! ```
//! use charpoly_core::{charpoly::preparata_sarwate, Integers, Matrix, OpCounter};
//! use num_bigint::BigInt;
//!
//! let a = Matrix::from_ints(Integers, [[1, 2], [3, 4]]);
//! let out = preparata_sarwate(&a, None, &mut OpCounter::new()).unwrap();
//! assert_eq!(out.coeffs, [-2, -5, 1].map(BigInt::from));
//! assert_eq!(out.det, BigInt::from(-2));
//! ```

#![no_std]

extern crate alloc;

pub mod charpoly;
pub mod elimination;
mod error;
pub mod matrix;
pub mod ring;

pub use charpoly::CharOutput;
pub use error::{Error, Result};
pub use matrix::{random_matrix, random_matrix_with_degree, Matrix, OpCounter};
pub use ring::{IntPoly, Integers, IntegersMod, PolyOverIntegers, Rationals, Ring};
