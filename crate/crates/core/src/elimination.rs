//! Elimination-based comparators: Bareiss fraction-free LU, LU over a field
//! and Hessenberg reduction.
//!
//! Unlike the trace-based algorithms these divide by general ring elements
//! (pivots), so they need an integral domain or a field.

use alloc::vec;
use alloc::vec::Vec;

use crate::charpoly::{adjugate_from_charpoly, berkowitz, CharOutput};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, OpCounter};
use crate::ring::{signed, Ring};

/// Output of fraction-free LU.
#[derive(Debug, Clone, PartialEq)]
pub struct FfluResult<R: Ring> {
    pub det: R::Elem,
    /// Sign of the row permutation applied, `1` or `-1`.
    pub permutation_sign: i8,
    /// Working matrix after elimination: the fraction-free `U` on and above
    /// the diagonal, the eliminated column values below it.
    pub reduced: Matrix<R>,
    /// `permutation[i]` is the original index of row `i`.
    pub permutation: Vec<usize>,
}

struct Elimination {
    sign: i8,
    permutation: Vec<usize>,
    /// False when a column had no nonzero pivot.
    nonsingular: bool,
}

/// Bareiss elimination on the first `n` columns of an `n x width` row-major
/// array, applying the same row operations to all `width` columns.
fn bareiss_in_place<R: Ring>(
    ring: &R,
    n: usize,
    width: usize,
    data: &mut [R::Elem],
    counter: &mut OpCounter,
) -> Result<Elimination> {
    let mut elim = Elimination {
        sign: 1,
        permutation: (0..n).collect(),
        nonsingular: true,
    };
    let mut prev = ring.one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !ring.is_zero(&data[r * width + k])) else {
            elim.nonsingular = false;
            return Ok(elim);
        };
        if p != k {
            for j in 0..width {
                data.swap(k * width + j, p * width + j);
            }
            elim.permutation.swap(k, p);
            elim.sign = -elim.sign;
        }
        let pivot = data[k * width + k].clone();
        for i in k + 1..n {
            let factor = data[i * width + k].clone();
            for j in k + 1..width {
                let v = ring.sub(
                    &ring.mul(&pivot, &data[i * width + j]),
                    &ring.mul(&factor, &data[k * width + j]),
                );
                data[i * width + j] = ring.divexact(&v, &prev)?;
            }
            let w = (width - k - 1) as u64;
            counter.ring_mul += 2 * w;
            counter.ring_add += w;
            counter.ring_divexact += w;
        }
        prev = pivot;
    }
    Ok(elim)
}

fn require_domain<R: Ring>(ring: &R, algorithm: &'static str) -> Result<()> {
    if ring.is_integral_domain() {
        Ok(())
    } else {
        Err(Error::UnsupportedRing {
            algorithm,
            requires: "an integral domain",
        })
    }
}

fn require_field<R: Ring>(ring: &R, algorithm: &'static str) -> Result<()> {
    if ring.is_field() {
        Ok(())
    } else {
        Err(Error::UnsupportedRing {
            algorithm,
            requires: "a field",
        })
    }
}

/// Determinant by Bareiss fraction-free elimination with first-nonzero
/// pivoting. Every update divides exactly by the previous pivot.
pub fn bareiss_det<R: Ring>(a: &Matrix<R>, counter: &mut OpCounter) -> Result<FfluResult<R>> {
    let ring = a.ring();
    require_domain(ring, "fraction-free LU")?;
    let n = a.n();
    let mut work = a.clone();
    let elim = bareiss_in_place(ring, n, n, work.entries_mut(), counter)?;
    let det = if n == 0 {
        ring.one()
    } else if elim.nonsingular {
        signed(ring, work.get(n - 1, n - 1).clone(), elim.sign < 0)
    } else {
        ring.zero()
    };
    Ok(FfluResult {
        det,
        permutation_sign: elim.sign,
        reduced: work,
        permutation: elim.permutation,
    })
}

/// Determinant and adjugate from fraction-free LU, solving `A X = det I`.
///
/// Bareiss runs on `[A | I]`; back substitution
/// `X_i = (d b_i - sum_(j>i) U_ij X_j) / U_ii` with `d` the last pivot keeps
/// every quotient in the ring. Singular input falls back to the
/// Cayley-Hamilton adjugate over Berkowitz coefficients.
pub fn fflu_adjugate<R: Ring>(
    a: &Matrix<R>,
    counter: &mut OpCounter,
) -> Result<(R::Elem, Matrix<R>)> {
    let ring = a.ring();
    require_domain(ring, "fraction-free LU")?;
    let n = a.n();
    if n == 0 {
        return Ok((ring.one(), Matrix::zero(ring.clone(), 0)));
    }
    let width = 2 * n;
    let mut data = Vec::with_capacity(n * width);
    for i in 0..n {
        data.extend_from_slice(a.row(i));
        data.extend((0..n).map(|j| if i == j { ring.one() } else { ring.zero() }));
    }
    let elim = bareiss_in_place(ring, n, width, &mut data, counter)?;
    if !elim.nonsingular {
        let coeffs = berkowitz(a, counter)?.coeffs;
        let adj = adjugate_from_charpoly(a, &coeffs, counter)?;
        return Ok((ring.zero(), adj));
    }

    let d = data[(n - 1) * width + (n - 1)].clone();
    let mut x = Matrix::zero(ring.clone(), n);
    for col in 0..n {
        for i in (0..n).rev() {
            let mut s = ring.mul(&d, &data[i * width + n + col]);
            for j in i + 1..n {
                let t = ring.mul(&data[i * width + j], x.get(j, col));
                s = ring.sub(&s, &t);
            }
            x.set(i, col, ring.divexact(&s, &data[i * width + i])?);
            counter.ring_mul += (n - i) as u64;
            counter.ring_add += (n - i - 1) as u64;
            counter.ring_divexact += 1;
        }
    }
    let negate = elim.sign < 0;
    let det = signed(ring, d, negate);
    let adj = if negate { x.neg() } else { x };
    Ok((det, adj))
}

/// Determinant by Gaussian elimination over a field.
pub fn field_lu_det<R: Ring>(a: &Matrix<R>, counter: &mut OpCounter) -> Result<R::Elem> {
    let ring = a.ring();
    require_field(ring, "LU determinant")?;
    let n = a.n();
    let mut m = a.clone().into_entries();
    let mut det = ring.one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !ring.is_zero(&m[r * n + k])) else {
            return Ok(ring.zero());
        };
        if p != k {
            for j in 0..n {
                m.swap(k * n + j, p * n + j);
            }
            det = ring.neg(&det);
        }
        let pivot = m[k * n + k].clone();
        det = ring.mul(&det, &pivot);
        for i in k + 1..n {
            if ring.is_zero(&m[i * n + k]) {
                continue;
            }
            let f = ring.divexact(&m[i * n + k], &pivot)?;
            for j in k + 1..n {
                let t = ring.mul(&f, &m[k * n + j]);
                m[i * n + j] = ring.sub(&m[i * n + j], &t);
            }
            let w = (n - k - 1) as u64;
            counter.ring_mul += w;
            counter.ring_add += w;
            counter.ring_divexact += 1;
        }
    }
    Ok(det)
}

/// Characteristic polynomial over a field by similarity reduction to upper
/// Hessenberg form followed by the Hessenberg recurrence
/// `p_k = (x - h_kk) p_(k-1) - sum_(i<k) h_ik (prod_(j=i+1..k) h_(j,j-1)) p_(i-1)`.
pub fn hessenberg_charpoly<R: Ring>(
    a: &Matrix<R>,
    counter: &mut OpCounter,
) -> Result<CharOutput<R>> {
    let ring = a.ring();
    require_field(ring, "Hessenberg reduction")?;
    let h = hessenberg_form(a, counter)?;
    let n = h.n();

    // polys[k] = charpoly of the leading k x k block, ascending.
    let mut polys: Vec<Vec<R::Elem>> = vec![vec![ring.one()]];
    for k in 1..=n {
        let hkk = h.get(k - 1, k - 1);
        let prev = &polys[k - 1];
        // (x - h_kk) p_(k-1)
        let mut p = vec![ring.zero(); k + 1];
        for (d, c) in prev.iter().enumerate() {
            p[d + 1] = ring.add(&p[d + 1], c);
            let t = ring.mul(hkk, c);
            p[d] = ring.sub(&p[d], &t);
        }
        let mut prod = ring.one();
        for i in (1..k).rev() {
            prod = ring.mul(&prod, h.get(i, i - 1));
            if ring.is_zero(&prod) {
                break;
            }
            let coef = ring.mul(h.get(i - 1, k - 1), &prod);
            for (d, c) in polys[i - 1].iter().enumerate() {
                let t = ring.mul(&coef, c);
                p[d] = ring.sub(&p[d], &t);
            }
            counter.ring_mul += i as u64 + 2;
            counter.ring_add += i as u64;
        }
        counter.ring_mul += k as u64;
        counter.ring_add += k as u64;
        polys.push(p);
    }
    let coeffs = polys.pop().expect("nonempty");
    let det = crate::charpoly::det_from_constant(ring, n, &coeffs[0]);
    Ok(CharOutput {
        coeffs,
        det,
        adjugate: None,
    })
}

/// Upper Hessenberg matrix similar to `a`.
pub fn hessenberg_form<R: Ring>(a: &Matrix<R>, counter: &mut OpCounter) -> Result<Matrix<R>> {
    let ring = a.ring();
    require_field(ring, "Hessenberg reduction")?;
    let n = a.n();
    let mut h = a.clone().into_entries();
    for j in 0..n.saturating_sub(2) {
        let Some(p) = (j + 1..n).find(|&r| !ring.is_zero(&h[r * n + j])) else {
            continue;
        };
        let t = j + 1;
        if p != t {
            for c in 0..n {
                h.swap(p * n + c, t * n + c);
            }
            for r in 0..n {
                h.swap(r * n + p, r * n + t);
            }
        }
        let pivot = h[t * n + j].clone();
        for r in t + 1..n {
            if ring.is_zero(&h[r * n + j]) {
                continue;
            }
            let f = ring.divexact(&h[r * n + j], &pivot)?;
            // row_r -= f row_t
            for c in 0..n {
                let v = ring.mul(&f, &h[t * n + c]);
                h[r * n + c] = ring.sub(&h[r * n + c], &v);
            }
            // col_t += f col_r
            for q in 0..n {
                let v = ring.mul(&f, &h[q * n + r]);
                h[q * n + t] = ring.add(&h[q * n + t], &v);
            }
            counter.ring_mul += 2 * n as u64;
            counter.ring_add += 2 * n as u64;
            counter.ring_divexact += 1;
        }
    }
    Matrix::from_entries(ring.clone(), n, h)
}
