//! Multimodular classical matrix product for arbitrary-precision integers.
//!
//! Entries are reduced modulo enough word-size primes to cover the output
//! bound, each residue product is an ordinary triple loop over `u32` data
//! accumulated in `u64`, and results are lifted back by explicit CRT. Cost
//! per output term grows with the sum of the operand sizes rather than
//! their product.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};

use super::kernel::{limbs_to_biguint, mul_add_into};

/// Barrett reduction for a modulus below `2^31`.
#[derive(Clone, Copy)]
struct Modulus {
    p: u64,
    /// `floor(2^64 / p)`
    inv: u64,
}

impl Modulus {
    fn new(p: u64) -> Self {
        Modulus {
            p,
            inv: (u128::from(u64::MAX) + 1).div_euclid(p as u128) as u64,
        }
    }

    #[inline]
    fn reduce(self, x: u64) -> u64 {
        let q = ((x as u128 * self.inv as u128) >> 64) as u64;
        let r = x - q * self.p;
        if r >= self.p {
            r - self.p
        } else {
            r
        }
    }

    fn mul(self, a: u64, b: u64) -> u64 {
        self.reduce(a * b)
    }

    fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    fn inverse(self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }
}

/// Deterministic Miller-Rabin for `n < 2^32`.
fn is_prime_u32(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2, 3, 5, 7, 11, 13, 61] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let m = Modulus::new(n);
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2, 7, 61] {
        let mut x = m.pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = m.mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime bit size such that `n` products of residues fit in a `u64`.
fn prime_bits(n: usize) -> u32 {
    let log_n = usize::BITS - n.leading_zeros();
    ((64 - log_n) / 2).clamp(16, 31)
}

fn primes_below(bits: u32, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut c = (1u64 << bits) - 1;
    while out.len() < count {
        if is_prime_u32(c) {
            out.push(c);
        }
        c -= 2;
    }
    out
}

/// Little-endian `u32` digits of a list of integers, packed.
struct DigitTable {
    digits: Vec<u32>,
    offsets: Vec<usize>,
    negative: Vec<bool>,
}

impl DigitTable {
    fn new<'a>(values: impl Iterator<Item = &'a BigInt>) -> Self {
        let mut t = DigitTable {
            digits: Vec::new(),
            offsets: vec![0],
            negative: Vec::new(),
        };
        for v in values {
            t.digits.extend(v.magnitude().iter_u32_digits());
            t.offsets.push(t.digits.len());
            t.negative.push(v.sign() == Sign::Minus);
        }
        t
    }

    /// Residues of every entry modulo `md`, given `weights[k] = 2^(32k) mod p`.
    fn reduce_all(&self, md: Modulus, weights: &[u64], out: &mut [u32]) {
        // d * w < 2^(32 + bits), so this many terms fit in a u64 with room
        // for the running residue.
        let chunk = ((1u64 << (64 - 32 - prime_bits_of(md.p))) - 1).max(1) as usize;
        for (idx, slot) in out.iter_mut().enumerate() {
            let ds = &self.digits[self.offsets[idx]..self.offsets[idx + 1]];
            let mut acc = 0u64;
            for (dc, wc) in ds.chunks(chunk).zip(weights.chunks(chunk)) {
                let s = wrapping_dot(dc.iter().zip(wc).map(|(&d, &w)| (d as u64, w)));
                acc = md.reduce(acc + s);
            }
            if self.negative[idx] && acc != 0 {
                acc = md.p - acc;
            }
            *slot = acc as u32;
        }
    }
}

/// Plain `u64` dot product. Callers bound the terms so the sum never wraps;
/// wrapping ops keep the loop vectorizable when overflow checks are on.
#[inline(always)]
fn wrapping_dot(pairs: impl Iterator<Item = (u64, u64)>) -> u64 {
    pairs.fold(0u64, |s, (x, y)| s.wrapping_add(x.wrapping_mul(y)))
}

fn prime_bits_of(p: u64) -> u32 {
    u64::BITS - p.leading_zeros()
}

fn max_bits(xs: &[BigInt]) -> u64 {
    xs.iter().map(BigInt::bits).max().unwrap_or(0)
}

/// Number of primes the product of two `n x n` matrices with the given
/// maximum entry sizes would need.
pub(crate) fn primes_needed(n: usize, bits_a: u64, bits_b: u64) -> usize {
    let bits = prime_bits(n) as u64;
    let bound = bits_a + bits_b + (usize::BITS - n.leading_zeros()) as u64 + 2;
    bound.div_ceil(bits - 1) as usize
}

fn cmp_limbs(a: &[u64], b: &[u64]) -> Ordering {
    let len = a.len().max(b.len());
    for i in (0..len).rev() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        match x.cmp(&y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// `a -= b`, requires `a >= b`.
fn sub_limbs(a: &mut [u64], b: &[u64]) {
    let mut borrow = false;
    for (i, slot) in a.iter_mut().enumerate() {
        let y = b.get(i).copied().unwrap_or(0);
        let (d1, o1) = slot.overflowing_sub(y);
        let (d2, o2) = d1.overflowing_sub(borrow as u64);
        *slot = d2;
        borrow = o1 || o2;
    }
    debug_assert!(!borrow);
}

fn biguint_limbs(x: &BigUint) -> Vec<u64> {
    x.iter_u64_digits().collect()
}

struct Crt {
    moduli: Vec<Modulus>,
    /// `(M / p_i)^-1 mod p_i`
    inverses: Vec<u64>,
    /// `M / p_i`
    cofactors: Vec<Vec<u64>>,
    /// `q * M` for `q` in `0..=primes`
    multiples: Vec<Vec<u64>>,
    modulus: Vec<u64>,
    half: Vec<u64>,
}

impl Crt {
    fn new(primes: &[u64]) -> Self {
        let moduli: Vec<Modulus> = primes.iter().map(|&p| Modulus::new(p)).collect();
        let m: BigUint = primes.iter().map(|&p| BigUint::from(p)).product();
        let mut inverses = Vec::with_capacity(primes.len());
        let mut cofactors = Vec::with_capacity(primes.len());
        for (i, &p) in primes.iter().enumerate() {
            let cof = &m / p;
            let r = (&cof % p).iter_u64_digits().next().unwrap_or(0);
            inverses.push(moduli[i].inverse(r));
            cofactors.push(biguint_limbs(&cof));
        }
        let multiples = (0..=primes.len() as u64)
            .map(|q| biguint_limbs(&(&m * q)))
            .collect();
        let half = biguint_limbs(&(&m >> 1u32));
        Crt {
            moduli,
            inverses,
            cofactors,
            multiples,
            modulus: biguint_limbs(&m),
            half,
        }
    }

    /// Symmetric lift of the residues `r[i] mod p_i`.
    fn lift(&self, residues: impl Iterator<Item = u32>, acc: &mut Vec<u64>) -> BigInt {
        acc.clear();
        let mut frac = 0.0f64;
        for (i, r) in residues.enumerate() {
            let md = self.moduli[i];
            let y = md.mul(r as u64, self.inverses[i]);
            if y != 0 {
                mul_add_into(acc, &[y], &self.cofactors[i]);
                frac += y as f64 / md.p as f64;
            }
        }
        // sum(y_i M/p_i) = M * sum(y_i/p_i); the float sum locates the
        // quotient up to one unit either way.
        let mut q = (frac as usize).min(self.multiples.len() - 1);
        while q > 0 && cmp_limbs(acc, &self.multiples[q]) == Ordering::Less {
            q -= 1;
        }
        sub_limbs(acc, &self.multiples[q]);
        while cmp_limbs(acc, &self.modulus) != Ordering::Less {
            sub_limbs(acc, &self.modulus);
        }
        if cmp_limbs(acc, &self.half) == Ordering::Greater {
            let mut neg = self.modulus.clone();
            sub_limbs(&mut neg, acc);
            BigInt::from_biguint(Sign::Minus, limbs_to_biguint(&neg))
        } else {
            BigInt::from_biguint(Sign::Plus, limbs_to_biguint(acc))
        }
    }
}

/// Classical product of row-major `n x n` integer matrices via CRT.
pub(crate) fn matmul_multimod(n: usize, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (bits_a, bits_b) = (max_bits(a), max_bits(b));
    if n == 0 || bits_a == 0 || bits_b == 0 {
        return vec![BigInt::default(); n * n];
    }
    let count = primes_needed(n, bits_a, bits_b);
    let primes = primes_below(prime_bits(n), count);
    let max_digits = (bits_a.max(bits_b).div_ceil(32)) as usize;

    let nn = n * n;
    // residues[t * nn + idx] = C[idx] mod p_t
    let mut residues = vec![0u32; count * nn];
    let mut ra = vec![0u32; nn];
    let mut rbt = vec![0u32; nn];
    let da = DigitTable::new(a.iter());
    let dbt = DigitTable::new((0..nn).map(|idx| &b[(idx % n) * n + idx / n]));
    for (t, &p) in primes.iter().enumerate() {
        let md = Modulus::new(p);
        let two32 = (1u64 << 32) % p;
        let mut weights = Vec::with_capacity(max_digits);
        let mut w = 1u64;
        for _ in 0..max_digits {
            weights.push(w);
            w = md.mul(w, two32);
        }
        da.reduce_all(md, &weights, &mut ra);
        dbt.reduce_all(md, &weights, &mut rbt);
        let out = &mut residues[t * nn..(t + 1) * nn];
        for i in 0..n {
            let row = &ra[i * n..(i + 1) * n];
            for j in 0..n {
                let col = &rbt[j * n..(j + 1) * n];
                let s = wrapping_dot(row.iter().zip(col).map(|(&x, &y)| (x as u64, y as u64)));
                out[i * n + j] = md.reduce(s) as u32;
            }
        }
    }

    let crt = Crt::new(&primes);
    let mut acc = Vec::new();
    (0..nn)
        .map(|idx| crt.lift((0..count).map(|t| residues[t * nn + idx]), &mut acc))
        .collect()
}
