use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Ring;
use crate::error::{Error, Result};

/// The rationals. Elements are kept in lowest terms with a positive
/// denominator after every operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_bigint(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn add_assign(&self, a: &mut BigRational, b: &BigRational) {
        *a += b;
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn contains(&self, a: &BigRational) -> bool {
        a.denom().is_positive() && a.numer().gcd(a.denom()).is_one()
    }

    fn divexact_small(&self, a: &BigRational, k: u64) -> Result<BigRational> {
        if k == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(a / BigRational::from_integer(BigInt::from(k)))
    }

    fn bad_small_divisor(&self, _n: usize) -> Option<u64> {
        None
    }

    fn divexact(&self, a: &BigRational, b: &BigRational) -> Result<BigRational> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a / b)
    }

    fn is_integral_domain(&self) -> bool {
        true
    }

    fn is_field(&self) -> bool {
        true
    }
}
