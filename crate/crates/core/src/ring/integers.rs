use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::kernel::{DotScratch, LimbTable, SignedAcc};
use super::multimod::{matmul_multimod, primes_needed};
use super::Ring;
use crate::error::{Error, Result};

/// The integers, with arbitrary-precision elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn from_bigint(&self, v: &BigInt) -> BigInt {
        v.clone()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn add_assign(&self, a: &mut BigInt, b: &BigInt) {
        *a += b;
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn contains(&self, _a: &BigInt) -> bool {
        true
    }

    fn divexact_small(&self, a: &BigInt, k: u64) -> Result<BigInt> {
        if k == 0 {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = a.div_rem(&BigInt::from(k));
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    fn bad_small_divisor(&self, _n: usize) -> Option<u64> {
        None
    }

    fn divexact(&self, a: &BigInt, b: &BigInt) -> Result<BigInt> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = a.div_rem(b);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    fn is_integral_domain(&self) -> bool {
        true
    }

    fn is_field(&self) -> bool {
        false
    }

    fn dot<'a, I>(&self, pairs: I) -> BigInt
    where
        I: Iterator<Item = (&'a BigInt, &'a BigInt)>,
    {
        let mut scratch = DotScratch::default();
        for (a, b) in pairs {
            scratch.push(a, b);
        }
        scratch.finish()
    }

    fn matmul_kernel(&self, n: usize, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        if prefer_multimod(n, a, b) {
            return matmul_multimod(n, a, b);
        }
        let rows = LimbTable::new(a.iter());
        let cols = LimbTable::new((0..n * n).map(|idx| &b[(idx % n) * n + idx / n]));
        let mut acc = SignedAcc::default();
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                acc.clear();
                for k in 0..n {
                    let (sa, la) = rows.get(i * n + k);
                    let (sb, lb) = cols.get(j * n + k);
                    acc.add_product(sa != sb, la, lb);
                }
                out.push(acc.finish());
            }
        }
        out
    }
}

fn prefer_multimod(n: usize, a: &[BigInt], b: &[BigInt]) -> bool {
    if n < MULTIMOD_MIN_N {
        return false;
    }
    let bits_a = a.iter().map(BigInt::bits).max().unwrap_or(0);
    let bits_b = b.iter().map(BigInt::bits).max().unwrap_or(0);
    let limbs = bits_a.div_ceil(64) * bits_b.div_ceil(64);
    let primes = primes_needed(n, bits_a, bits_b) as u64;
    primes * MULTIMOD_COST_PER_PRIME < limbs * 8 + 8
}

const MULTIMOD_MIN_N: usize = 8;
const MULTIMOD_COST_PER_PRIME: u64 = 1;
