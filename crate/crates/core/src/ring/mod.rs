//! Commutative rings with exact division by small integers.
//!
//! A ring is an explicit descriptor value; elements carry no reference back
//! to it. Every algorithm in this crate is generic over [`Ring`].

mod integers;
mod kernel;
mod modular;
mod multimod;
mod poly;
mod rationals;

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use rand::Rng as RandRng;

use crate::error::{Error, Result};

pub use integers::Integers;
pub use modular::IntegersMod;
pub use poly::{IntPoly, PolyOverIntegers};
pub use rationals::Rationals;

/// A commutative ring with unit.
///
/// All operations return elements in canonical form, so element equality is
/// structural.
#[allow(clippy::wrong_self_convention)]
pub trait Ring: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;

    /// Image of an integer under the canonical map from the integers.
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;

    fn from_i64(&self, v: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(v))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// Whether `a` is a canonical element of this ring.
    fn contains(&self, a: &Self::Elem) -> bool;

    /// Exact division by the small integer `k`.
    ///
    /// Fails with `InexactDivision` when the quotient does not exist in the
    /// ring, or `Characteristic` when `k` is not invertible modulo the
    /// characteristic.
    fn divexact_small(&self, a: &Self::Elem, k: u64) -> Result<Self::Elem>;

    /// Smallest `k` in `1..=n` for which [`Ring::divexact_small`] is not
    /// defined on all elements, if any.
    fn bad_small_divisor(&self, n: usize) -> Option<u64>;

    fn characteristic_ok(&self, n: usize) -> bool {
        self.bad_small_divisor(n).is_none()
    }

    /// Smallest positive `k` with `k * 1 = 0`, or 0.
    fn characteristic(&self) -> u64 {
        0
    }

    /// `Err(Characteristic)` naming the first divisor in `1..=n` the ring
    /// cannot divide by exactly.
    fn require_small_divisors(&self, n: usize) -> Result<()> {
        match self.bad_small_divisor(n) {
            None => Ok(()),
            Some(divisor) => Err(Error::Characteristic {
                divisor,
                characteristic: self.characteristic(),
            }),
        }
    }

    /// Exact division by an arbitrary ring element.
    ///
    /// Used only by the elimination comparators, which divide by pivots.
    fn divexact(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    fn is_integral_domain(&self) -> bool;
    fn is_field(&self) -> bool;

    /// Random element with integer data drawn uniformly from `lo..=hi`.
    /// `degree` only matters for polynomial rings.
    fn sample<G: RandRng + ?Sized>(
        &self,
        rng: &mut G,
        lo: i64,
        hi: i64,
        degree: usize,
    ) -> Self::Elem {
        let _ = degree;
        self.from_i64(rng.gen_range(lo..=hi))
    }

    /// `sum(a_i * b_i)` over the given pairs.
    fn dot<'a, I>(&self, pairs: I) -> Self::Elem
    where
        I: Iterator<Item = (&'a Self::Elem, &'a Self::Elem)>,
        Self::Elem: 'a,
    {
        let mut acc = self.zero();
        for (a, b) in pairs {
            let p = self.mul(a, b);
            self.add_assign(&mut acc, &p);
        }
        acc
    }

    /// Classical product of two row-major `n x n` arrays.
    fn matmul_kernel(&self, n: usize, a: &[Self::Elem], b: &[Self::Elem]) -> Vec<Self::Elem> {
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            let row = &a[i * n..(i + 1) * n];
            for j in 0..n {
                out.push(self.dot(row.iter().zip(b[j..].iter().step_by(n))));
            }
        }
        out
    }
}

/// `(-1)^e` as a ring element applied to `a`.
pub(crate) fn signed<R: Ring>(ring: &R, a: R::Elem, negate: bool) -> R::Elem {
    if negate {
        ring.neg(&a)
    } else {
        a
    }
}
