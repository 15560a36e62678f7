use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng as RandRng;

use super::Ring;
use crate::error::{Error, Result};

/// Dense univariate polynomial with integer coefficients, ascending degree,
/// never ending in a zero coefficient. The zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn is_canonical(&self) -> bool {
        self.0.last().is_none_or(|c| !c.is_zero())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Univariate polynomials over the integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PolyOverIntegers;

fn zip_with(a: &IntPoly, b: &IntPoly, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> IntPoly {
    let zero = BigInt::zero();
    let len = a.0.len().max(b.0.len());
    IntPoly::new(
        (0..len)
            .map(|i| f(a.0.get(i).unwrap_or(&zero), b.0.get(i).unwrap_or(&zero)))
            .collect(),
    )
}

impl Ring for PolyOverIntegers {
    type Elem = IntPoly;

    fn zero(&self) -> IntPoly {
        IntPoly::default()
    }

    fn one(&self) -> IntPoly {
        IntPoly::constant(BigInt::one())
    }

    fn from_bigint(&self, v: &BigInt) -> IntPoly {
        IntPoly::constant(v.clone())
    }

    fn add(&self, a: &IntPoly, b: &IntPoly) -> IntPoly {
        zip_with(a, b, |x, y| x + y)
    }

    fn sub(&self, a: &IntPoly, b: &IntPoly) -> IntPoly {
        zip_with(a, b, |x, y| x - y)
    }

    fn mul(&self, a: &IntPoly, b: &IntPoly) -> IntPoly {
        if a.is_zero() || b.is_zero() {
            return IntPoly::default();
        }
        let mut out = vec![BigInt::zero(); a.0.len() + b.0.len() - 1];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        IntPoly::new(out)
    }

    fn neg(&self, a: &IntPoly) -> IntPoly {
        IntPoly(a.0.iter().map(|c| -c).collect())
    }

    fn is_zero(&self, a: &IntPoly) -> bool {
        a.is_zero()
    }

    fn contains(&self, a: &IntPoly) -> bool {
        a.is_canonical()
    }

    fn divexact_small(&self, a: &IntPoly, k: u64) -> Result<IntPoly> {
        if k == 0 {
            return Err(Error::DivisionByZero);
        }
        let k = BigInt::from(k);
        let coeffs =
            a.0.iter()
                .map(|c| {
                    let (q, r) = c.div_rem(&k);
                    if r.is_zero() {
                        Ok(q)
                    } else {
                        Err(Error::InexactDivision)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
        Ok(IntPoly(coeffs))
    }

    fn bad_small_divisor(&self, _n: usize) -> Option<u64> {
        None
    }

    fn divexact(&self, a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
        let Some(db) = b.degree() else {
            return Err(Error::DivisionByZero);
        };
        let Some(da) = a.degree() else {
            return Ok(IntPoly::default());
        };
        if da < db {
            return Err(Error::InexactDivision);
        }
        let lead = &b.0[db];
        let mut rem = a.0.clone();
        let mut quot = vec![BigInt::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let (q, r) = rem[i + db].div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            if !q.is_zero() {
                for (j, bc) in b.0.iter().enumerate() {
                    rem[i + j] -= &q * bc;
                }
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(IntPoly::new(quot))
    }

    fn is_integral_domain(&self) -> bool {
        true
    }

    fn is_field(&self) -> bool {
        false
    }

    fn sample<G: RandRng + ?Sized>(&self, rng: &mut G, lo: i64, hi: i64, degree: usize) -> IntPoly {
        IntPoly::new(
            (0..=degree)
                .map(|_| BigInt::from(rng.gen_range(lo..=hi)))
                .collect(),
        )
    }
}
