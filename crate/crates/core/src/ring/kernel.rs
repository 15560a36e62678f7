//! Limb-level dot products for arbitrary-precision integers.
//!
//! Products are accumulated into two unsigned magnitude buffers (one per
//! sign) so a whole dot product costs a single bignum allocation.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};

#[derive(Default)]
pub(crate) struct SignedAcc {
    pos: Vec<u64>,
    neg: Vec<u64>,
}

impl SignedAcc {
    pub(crate) fn clear(&mut self) {
        self.pos.iter_mut().for_each(|w| *w = 0);
        self.neg.iter_mut().for_each(|w| *w = 0);
    }

    #[inline]
    pub(crate) fn add_product(&mut self, negative: bool, a: &[u64], b: &[u64]) {
        if negative {
            mul_add_into(&mut self.neg, a, b);
        } else {
            mul_add_into(&mut self.pos, a, b);
        }
    }

    pub(crate) fn finish(&self) -> BigInt {
        let pos = BigInt::from_biguint(Sign::Plus, limbs_to_biguint(&self.pos));
        let neg = BigInt::from_biguint(Sign::Plus, limbs_to_biguint(&self.neg));
        pos - neg
    }
}

/// `acc += a * b` on little-endian limb vectors; `acc` grows as needed.
#[inline]
pub(crate) fn mul_add_into(acc: &mut Vec<u64>, a: &[u64], b: &[u64]) {
    if a.is_empty() || b.is_empty() {
        return;
    }
    let need = a.len() + b.len() + 1;
    if acc.len() < need {
        acc.resize(need, 0);
    }
    for (i, &ai) in a.iter().enumerate() {
        let ai = ai as u128;
        let mut carry: u64 = 0;
        let row = &mut acc[i..];
        for (slot, &bj) in row.iter_mut().zip(b) {
            // Cannot overflow: (2^64 - 1)^2 + 2 (2^64 - 1) = 2^128 - 1.
            let t = (*slot as u128)
                .wrapping_add(ai.wrapping_mul(bj as u128))
                .wrapping_add(carry as u128);
            *slot = t as u64;
            carry = (t >> 64) as u64;
        }
        let mut idx = i + b.len();
        while carry != 0 {
            if idx == acc.len() {
                acc.push(0);
            }
            let (s, overflow) = acc[idx].overflowing_add(carry);
            acc[idx] = s;
            carry = overflow as u64;
            idx += 1;
        }
    }
}

pub(crate) fn limbs_to_biguint(limbs: &[u64]) -> BigUint {
    let mut digits = Vec::with_capacity(limbs.len() * 2);
    for &w in limbs {
        digits.push(w as u32);
        digits.push((w >> 32) as u32);
    }
    BigUint::new(digits)
}

/// Magnitudes of a list of integers packed into one limb buffer.
pub(crate) struct LimbTable {
    limbs: Vec<u64>,
    offsets: Vec<usize>,
    negative: Vec<bool>,
}

impl LimbTable {
    pub(crate) fn new<'a>(values: impl Iterator<Item = &'a BigInt>) -> Self {
        let mut limbs = Vec::new();
        let mut offsets = Vec::new();
        let mut negative = Vec::new();
        offsets.push(0);
        for v in values {
            limbs.extend(v.magnitude().iter_u64_digits());
            offsets.push(limbs.len());
            negative.push(v.sign() == Sign::Minus);
        }
        LimbTable {
            limbs,
            offsets,
            negative,
        }
    }

    #[inline]
    pub(crate) fn get(&self, idx: usize) -> (bool, &[u64]) {
        (
            self.negative[idx],
            &self.limbs[self.offsets[idx]..self.offsets[idx + 1]],
        )
    }
}

/// Reusable scratch for dot products over borrowed integers.
#[derive(Default)]
pub(crate) struct DotScratch {
    acc: SignedAcc,
    a: Vec<u64>,
    b: Vec<u64>,
}

impl DotScratch {
    pub(crate) fn push(&mut self, x: &BigInt, y: &BigInt) {
        if x.sign() == Sign::NoSign || y.sign() == Sign::NoSign {
            return;
        }
        self.a.clear();
        self.a.extend(x.magnitude().iter_u64_digits());
        self.b.clear();
        self.b.extend(y.magnitude().iter_u64_digits());
        let negative = (x.sign() == Sign::Minus) != (y.sign() == Sign::Minus);
        self.acc.add_product(negative, &self.a, &self.b);
    }

    pub(crate) fn finish(&self) -> BigInt {
        self.acc.finish()
    }
}
