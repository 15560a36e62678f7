use alloc::vec;
use alloc::vec::Vec;

use super::{det_from_constant, CharOutput};
use crate::error::Result;
use crate::matrix::{Matrix, OpCounter};
use crate::ring::Ring;

/// Division-free characteristic polynomial (Samuelson-Berkowitz).
///
/// Grows the leading principal submatrix one row and column at a time. For
/// the step adding row/column `r` with corner `a`, row part `R`, column part
/// `C` and leading block `M`, the coefficient vector is multiplied by the
/// lower-triangular Toeplitz matrix with first column
/// `(1, -a, -R C, -R M C, -R M^2 C, ...)`. The column is built with one
/// matrix-vector product per entry. No adjugate is produced.
pub fn berkowitz<R: Ring>(a: &Matrix<R>, counter: &mut OpCounter) -> Result<CharOutput<R>> {
    let ring = a.ring();
    let n = a.n();
    if n == 0 {
        let mut out = CharOutput::empty(ring);
        out.adjugate = None;
        return Ok(out);
    }

    // Descending coefficients of the current principal submatrix.
    let mut poly = vec![ring.one()];
    for r in 0..n {
        // Toeplitz first column for the (r+1) x (r+1) leading submatrix.
        let mut column = Vec::with_capacity(r + 2);
        column.push(ring.one());
        column.push(ring.neg(a.get(r, r)));
        let row_part = &a.row(r)[..r];
        let mut v: Vec<R::Elem> = (0..r).map(|i| a.get(i, r).clone()).collect();
        for step in 0..r {
            if step > 0 {
                v = (0..r)
                    .map(|i| ring.dot(a.row(i)[..r].iter().zip(v.iter())))
                    .collect();
                counter.ring_mul += (r * r) as u64;
                counter.ring_add += (r * r) as u64;
            }
            column.push(ring.neg(&ring.dot(row_part.iter().zip(v.iter()))));
            counter.ring_mul += r as u64;
            counter.ring_add += r as u64;
        }

        let mut next = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let terms = (0..=i.min(r)).map(|j| (&column[i - j], &poly[j]));
            next.push(ring.dot(terms));
            counter.ring_mul += (i.min(r) + 1) as u64;
        }
        poly = next;
    }

    poly.reverse();
    let det = det_from_constant(ring, n, &poly[0]);
    Ok(CharOutput {
        coeffs: poly,
        det,
        adjugate: None,
    })
}
