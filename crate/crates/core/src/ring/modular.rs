use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng as RandRng;

use super::Ring;
use crate::error::{Error, Result};

/// Integers modulo `m >= 2`, with residues in `[0, m)`.
///
/// Need not be a domain: `IntegersMod::new(6)` has zero divisors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntegersMod {
    modulus: u64,
}

impl IntegersMod {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus));
        }
        Ok(IntegersMod { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Inverse of `a` when `gcd(a, m) = 1`.
    pub fn inverse(&self, a: u64) -> Option<u64> {
        let (g, x) = ext_gcd(a as i128, self.modulus as i128);
        if g != 1 {
            return None;
        }
        Some(x.rem_euclid(self.modulus as i128) as u64)
    }

    fn reduce_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.modulus as i128) as u64
    }
}

/// Returns `(g, x)` with `a*x = g (mod b)`, `g = gcd(a, b)`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r, old_s)
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl Ring for IntegersMod {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_bigint(&self, v: &BigInt) -> u64 {
        let r = v.mod_floor(&BigInt::from(self.modulus));
        r.to_u64().expect("residue fits in u64")
    }

    fn from_i64(&self, v: i64) -> u64 {
        self.reduce_i128(v as i128)
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.modulus as u128) as u64
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.reduce_i128(*a as i128 - *b as i128)
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.modulus)
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn contains(&self, a: &u64) -> bool {
        *a < self.modulus
    }

    fn divexact_small(&self, a: &u64, k: u64) -> Result<u64> {
        if k == 0 {
            return Err(Error::DivisionByZero);
        }
        match self.inverse(k % self.modulus) {
            Some(inv) => Ok(mul_mod(*a, inv, self.modulus)),
            None => Err(Error::Characteristic {
                divisor: k,
                characteristic: self.modulus,
            }),
        }
    }

    fn characteristic(&self) -> u64 {
        self.modulus
    }

    fn bad_small_divisor(&self, n: usize) -> Option<u64> {
        // Any k <= n sharing a factor with m implies a prime factor of m is <= n.
        (2..=n as u64).find(|&k| gcd_u64(k, self.modulus) != 1)
    }

    fn divexact(&self, a: &u64, b: &u64) -> Result<u64> {
        if *b == 0 {
            return Err(Error::DivisionByZero);
        }
        match self.inverse(*b) {
            Some(inv) => Ok(mul_mod(*a, inv, self.modulus)),
            None => Err(Error::InexactDivision),
        }
    }

    fn is_integral_domain(&self) -> bool {
        is_prime_u64(self.modulus)
    }

    fn is_field(&self) -> bool {
        is_prime_u64(self.modulus)
    }

    fn sample<G: RandRng + ?Sized>(&self, rng: &mut G, lo: i64, hi: i64, _degree: usize) -> u64 {
        self.from_i64(rng.gen_range(lo..=hi))
    }
}
