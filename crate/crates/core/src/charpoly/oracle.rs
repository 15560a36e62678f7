use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::Ring;

/// Largest dimension the cofactor oracle accepts.
pub const ORACLE_MAX_N: usize = 8;

/// `det(xI - A)` by cofactor expansion along the first row, with all
/// arithmetic done on polynomials over the matrix ring. `O(n!)`; intended
/// as ground truth for small inputs only.
pub fn charpoly_oracle<R: Ring>(a: &Matrix<R>) -> Result<Vec<R::Elem>> {
    let n = a.n();
    if n > ORACLE_MAX_N {
        return Err(Error::OracleTooLarge {
            n,
            limit: ORACLE_MAX_N,
        });
    }
    let ring = a.ring();
    let entries: Vec<Vec<Vec<R::Elem>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = ring.neg(a.get(i, j));
                    if i == j {
                        vec![c, ring.one()]
                    } else {
                        vec![c]
                    }
                })
                .collect()
        })
        .collect();
    let cols: Vec<usize> = (0..n).collect();
    let mut p = expand(ring, &entries, 0, &cols);
    p.resize(n + 1, ring.zero());
    Ok(p)
}

fn expand<R: Ring>(ring: &R, m: &[Vec<Vec<R::Elem>>], row: usize, cols: &[usize]) -> Vec<R::Elem> {
    if cols.is_empty() {
        return vec![ring.one()];
    }
    let mut acc = vec![ring.zero()];
    for (pos, &c) in cols.iter().enumerate() {
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = expand(ring, m, row + 1, &rest);
        let term = poly_mul(ring, &m[row][c], &minor);
        poly_accumulate(ring, &mut acc, &term, pos % 2 == 1);
    }
    acc
}

fn poly_mul<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let mut out = vec![ring.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let p = ring.mul(x, y);
            ring.add_assign(&mut out[i + j], &p);
        }
    }
    out
}

fn poly_accumulate<R: Ring>(ring: &R, acc: &mut Vec<R::Elem>, term: &[R::Elem], subtract: bool) {
    if acc.len() < term.len() {
        acc.resize(term.len(), ring.zero());
    }
    for (slot, t) in acc.iter_mut().zip(term) {
        *slot = if subtract {
            ring.sub(slot, t)
        } else {
            ring.add(slot, t)
        };
    }
}
