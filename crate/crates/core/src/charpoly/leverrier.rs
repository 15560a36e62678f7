//! Trace-recursion algorithms: plain Faddeev-Leverrier and its
//! baby-step giant-step refinement.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Roots;

use super::{det_from_constant, neg_div_small, CharOutput};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, OpCounter};
use crate::ring::Ring;

/// Faddeev-Leverrier: `n - 1` full products, one trace each.
///
/// `B` runs through `A^k + c_(n-1) A^(k-1) + ... + c_(n-k) I`; the last one
/// is `(-1)^(n+1) adj(A)`. The final coefficient comes from the product
/// trace `Tr(A, B)`, so the product `A B` is never formed.
pub fn faddeev_leverrier<R: Ring>(a: &Matrix<R>, counter: &mut OpCounter) -> Result<CharOutput<R>> {
    let ring = a.ring();
    let n = a.n();
    if n == 0 {
        return Ok(CharOutput::empty(ring));
    }
    ring.require_small_divisors(n)?;

    let mut coeffs = vec![ring.zero(); n + 1];
    coeffs[n] = ring.one();
    let mut b = Matrix::identity(ring.clone(), n);
    for k in 1..n {
        b = a.mat_mul(&b, counter)?;
        coeffs[n - k] = neg_div_small(ring, &b.trace(), k, counter)?;
        counter.ring_add += n as u64;
        b = b.add_scalar_diag(&coeffs[n - k], counter)?;
    }
    let tr = a.product_trace(&b, counter)?;
    coeffs[0] = neg_div_small(ring, &tr, n, counter)?;

    Ok(finish(ring, n, coeffs, b))
}

/// Block plan of a baby-step giant-step run, for inspecting its footprint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockReport {
    /// Block size the run started with.
    pub block_size: usize,
    /// Number of precomputed power matrices `A^1..A^m` held during the run.
    pub stored_powers: usize,
    /// Number of running accumulator matrices (always one: `B`).
    pub accumulators: usize,
    /// Number of giant steps `B <- A^m B` taken.
    pub giant_steps: usize,
}

/// Baby-step giant-step Faddeev-Leverrier (Preparata-Sarwate), in the
/// variant that keeps only `A^1..A^m` and advances one accumulator `B` by
/// `A^m` per block instead of storing giant-step powers.
///
/// `block_size` defaults to `floor(sqrt(n))`. Performs
/// `(m - 1) + ceil((n - 1) / m)` full products.
pub fn preparata_sarwate<R: Ring>(
    a: &Matrix<R>,
    block_size: Option<usize>,
    counter: &mut OpCounter,
) -> Result<CharOutput<R>> {
    preparata_sarwate_report(a, block_size, counter).map(|(out, _)| out)
}

/// [`preparata_sarwate`] also returning the block plan it executed.
pub fn preparata_sarwate_report<R: Ring>(
    a: &Matrix<R>,
    block_size: Option<usize>,
    counter: &mut OpCounter,
) -> Result<(CharOutput<R>, BlockReport)> {
    let ring = a.ring();
    let n = a.n();
    if let Some(m) = block_size {
        if m == 0 || m > n.max(1) {
            return Err(Error::InvalidBlockSize { m, n });
        }
    }
    if n == 0 {
        let report = BlockReport {
            block_size: 0,
            stored_powers: 0,
            accumulators: 0,
            giant_steps: 0,
        };
        return Ok((CharOutput::empty(ring), report));
    }
    ring.require_small_divisors(n)?;

    let mut m = block_size.unwrap_or_else(|| n.sqrt()).max(1);
    // powers[j] = A^(j+1)
    let powers = a.power_list(m, counter)?;
    let traces: Vec<R::Elem> = powers.iter().map(Matrix::trace).collect();
    counter.ring_add += (m * n) as u64;
    let mut report = BlockReport {
        block_size: m,
        stored_powers: powers.len(),
        accumulators: 1,
        giant_steps: 0,
    };

    let mut coeffs = vec![ring.zero(); n + 1];
    coeffs[n] = ring.one();
    let mut b = Matrix::identity(ring.clone(), n);
    let mut k = 1;
    while k < n {
        m = m.min(n - k);
        let tr = a.product_trace(&b, counter)?;
        coeffs[n - k] = neg_div_small(ring, &tr, k, counter)?;
        for j in 1..m {
            let mut s = powers[j].product_trace(&b, counter)?;
            for i in 0..j {
                let t = ring.mul(&traces[j - i - 1], &coeffs[n - k - i]);
                ring.add_assign(&mut s, &t);
            }
            counter.ring_mul += j as u64;
            counter.ring_add += j as u64;
            coeffs[n - k - j] = neg_div_small(ring, &s, k + j, counter)?;
        }
        b = powers[m - 1].mat_mul(&b, counter)?;
        report.giant_steps += 1;
        // B <- B + sum_j c_(n-k-j) A^(m-j-1), with A^0 = I on the diagonal.
        let block: Vec<&R::Elem> = (0..m - 1).map(|j| &coeffs[n - k - j]).collect();
        let pows: Vec<&Matrix<R>> = (0..m - 1).map(|j| &powers[m - j - 2]).collect();
        b = b.add_combination(&block, &pows, Some(&coeffs[n - k - m + 1]), counter)?;
        k += m;
    }
    let tr = a.product_trace(&b, counter)?;
    coeffs[0] = neg_div_small(ring, &tr, n, counter)?;

    Ok((finish(ring, n, coeffs, b), report))
}

fn finish<R: Ring>(ring: &R, n: usize, coeffs: Vec<R::Elem>, b: Matrix<R>) -> CharOutput<R> {
    let det = det_from_constant(ring, n, &coeffs[0]);
    let adjugate = if n.is_multiple_of(2) { b.neg() } else { b };
    CharOutput {
        coeffs,
        det,
        adjugate: Some(adjugate),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, IntegersMod};
    use num_bigint::BigInt;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn identity_three() {
        let mut c = OpCounter::new();
        let id = Matrix::identity(Integers, 3);
        for out in [
            faddeev_leverrier(&id, &mut c).unwrap(),
            preparata_sarwate(&id, None, &mut c).unwrap(),
        ] {
            assert_eq!(out.coeffs, ints(&[-1, 3, -3, 1]));
            assert_eq!(out.det, BigInt::from(1));
            assert_eq!(out.adjugate, Some(id.clone()));
        }
    }

    #[test]
    fn one_by_one() {
        let mut c = OpCounter::new();
        let a = Matrix::from_ints(Integers, [[5]]);
        let out = faddeev_leverrier(&a, &mut c).unwrap();
        assert_eq!(out.coeffs, ints(&[-5, 1]));
        assert_eq!(out.det, BigInt::from(5));
        assert_eq!(out.adjugate, Some(Matrix::identity(Integers, 1)));
        assert_eq!(c.full_matmul, 0);
        assert_eq!(preparata_sarwate(&a, None, &mut c).unwrap(), out);
    }

    #[test]
    fn two_by_two() {
        let mut c = OpCounter::new();
        let a = Matrix::from_ints(Integers, [[1, 2], [3, 4]]);
        let fl = faddeev_leverrier(&a, &mut c).unwrap();
        assert_eq!(fl.coeffs, ints(&[-2, -5, 1]));
        assert_eq!(fl.det, BigInt::from(-2));
        assert_eq!(
            fl.adjugate,
            Some(Matrix::from_ints(Integers, [[4, -2], [-3, 1]]))
        );
        for m in 1..=2 {
            assert_eq!(preparata_sarwate(&a, Some(m), &mut c).unwrap(), fl);
        }
    }

    #[test]
    fn zero_matrix() {
        let mut c = OpCounter::new();
        let z = Matrix::zero(Integers, 2);
        let out = preparata_sarwate(&z, None, &mut c).unwrap();
        assert_eq!(out.coeffs, ints(&[0, 0, 1]));
        assert_eq!(out.det, BigInt::from(0));
        assert_eq!(out.adjugate, Some(z));
    }

    #[test]
    fn empty_matrix_convention() {
        let mut c = OpCounter::new();
        let e = Matrix::zero(Integers, 0);
        let out = preparata_sarwate(&e, None, &mut c).unwrap();
        assert_eq!(out.coeffs, ints(&[1]));
        assert_eq!(out.det, BigInt::from(1));
        assert_eq!(out.adjugate, Some(e.clone()));
        assert_eq!(faddeev_leverrier(&e, &mut c).unwrap(), out);
    }

    #[test]
    fn rejects_bad_block_size_and_characteristic() {
        let mut c = OpCounter::new();
        let a = Matrix::from_ints(Integers, [[1, 2], [3, 4]]);
        assert_eq!(
            preparata_sarwate(&a, Some(0), &mut c),
            Err(Error::InvalidBlockSize { m: 0, n: 2 })
        );
        assert_eq!(
            preparata_sarwate(&a, Some(3), &mut c),
            Err(Error::InvalidBlockSize { m: 3, n: 2 })
        );
        let z6 = IntegersMod::new(6).unwrap();
        let b = Matrix::from_ints(z6, [[1, 2, 3], [4, 5, 0], [1, 1, 1]]);
        let err = Error::Characteristic {
            divisor: 2,
            characteristic: 6,
        };
        assert_eq!(faddeev_leverrier(&b, &mut c), Err(err.clone()));
        assert_eq!(preparata_sarwate(&b, None, &mut c), Err(err));
    }

    #[test]
    fn matmul_counts() {
        let a = crate::matrix::random_matrix(Integers, 10, -3, 3, 1);
        let mut c = OpCounter::new();
        faddeev_leverrier(&a, &mut c).unwrap();
        assert_eq!(c.full_matmul, 9);
        for m in 1..=10usize {
            let mut c = OpCounter::new();
            let (_, report) = preparata_sarwate_report(&a, Some(m), &mut c).unwrap();
            assert_eq!(c.full_matmul as usize, (m - 1) + 9usize.div_ceil(m));
            assert_eq!(report.stored_powers, m);
            assert_eq!(report.giant_steps, 9usize.div_ceil(m));
        }
    }
}
