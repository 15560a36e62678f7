//! Characteristic polynomial, determinant and adjugate.
//!
//! [`faddeev_leverrier`] and [`preparata_sarwate`] are nearly division-free:
//! the only divisions are exact divisions by `1, ..., n`, so they need a ring
//! whose characteristic is coprime to those. [`berkowitz`] is fully
//! division-free and works over any commutative ring.

mod berkowitz;
mod leverrier;
mod oracle;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::matrix::{Matrix, OpCounter};
use crate::ring::{signed, Ring};

pub use berkowitz::berkowitz;
pub use leverrier::{faddeev_leverrier, preparata_sarwate, preparata_sarwate_report, BlockReport};
pub use oracle::{charpoly_oracle, ORACLE_MAX_N};

/// Result of a characteristic polynomial computation.
#[derive(Debug, Clone, PartialEq)]
pub struct CharOutput<R: Ring> {
    /// `c_0, ..., c_n` of `det(xI - A)`, ascending; `coeffs[n]` is one.
    pub coeffs: Vec<R::Elem>,
    pub det: R::Elem,
    pub adjugate: Option<Matrix<R>>,
}

impl<R: Ring> CharOutput<R> {
    /// Output for the empty matrix: `p(x) = 1`, `det = 1`, empty adjugate.
    pub(crate) fn empty(ring: &R) -> Self {
        CharOutput {
            coeffs: vec![ring.one()],
            det: ring.one(),
            adjugate: Some(Matrix::zero(ring.clone(), 0)),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// `(-1)^n c_0`.
pub(crate) fn det_from_constant<R: Ring>(ring: &R, n: usize, c0: &R::Elem) -> R::Elem {
    signed(ring, c0.clone(), n % 2 == 1)
}

/// `-(x / k)` with the exact small-integer division counted.
pub(crate) fn neg_div_small<R: Ring>(
    ring: &R,
    x: &R::Elem,
    k: usize,
    counter: &mut OpCounter,
) -> Result<R::Elem> {
    counter.ring_divexact += 1;
    Ok(ring.neg(&ring.divexact_small(x, k as u64)?))
}

/// Adjugate from the characteristic polynomial by Cayley-Hamilton:
/// `adj(A) = (-1)^(n-1) (A^(n-1) + c_(n-1) A^(n-2) + ... + c_1 I)`,
/// evaluated by Horner's rule with `n - 2` products.
///
/// `coeffs` must be the characteristic polynomial of `a`; nothing is checked.
pub fn adjugate_from_charpoly<R: Ring>(
    a: &Matrix<R>,
    coeffs: &[R::Elem],
    counter: &mut OpCounter,
) -> Result<Matrix<R>> {
    let ring = a.ring();
    let n = a.n();
    if n == 0 {
        return Ok(Matrix::zero(ring.clone(), 0));
    }
    if coeffs.len() != n + 1 {
        return Err(crate::Error::DimensionMismatch {
            expected: n + 1,
            found: coeffs.len(),
        });
    }
    if n == 1 {
        return Ok(Matrix::identity(ring.clone(), 1));
    }
    let mut x = a.add_scalar_diag(&coeffs[n - 1], counter)?;
    for k in (1..n - 1).rev() {
        x = a
            .mat_mul(&x, counter)?
            .add_scalar_diag(&coeffs[k], counter)?;
    }
    Ok(if n.is_multiple_of(2) { x.neg() } else { x })
}
