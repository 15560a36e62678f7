//! Dense square matrices over a [`Ring`].

use alloc::vec::Vec;
use core::ops::Index;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Tally of the work done by an algorithm run.
///
/// `full_matmul` counts complete `n x n` products; product traces are
/// counted separately and never increment it.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounter {
    pub ring_mul: u64,
    pub ring_add: u64,
    pub ring_divexact: u64,
    pub full_matmul: u64,
    pub product_trace_calls: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }
}

/// Row-major `n x n` matrix tagged with its ring.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<R: Ring> {
    ring: R,
    n: usize,
    entries: Vec<R::Elem>,
}

impl<R: Ring> Matrix<R> {
    /// Builds a matrix from row-major entries, checking shape and that
    /// every entry is a canonical element of `ring`.
    pub fn from_entries(ring: R, n: usize, entries: Vec<R::Elem>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: entries.len(),
            });
        }
        if let Some(idx) = entries.iter().position(|e| !ring.contains(e)) {
            return Err(Error::NotAnElement {
                row: idx / n,
                col: idx % n,
            });
        }
        Ok(Matrix { ring, n, entries })
    }

    pub fn from_rows(ring: R, rows: Vec<Vec<R::Elem>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Self::from_entries(ring, n, entries)
    }

    /// Embeds a small integer matrix into `ring`.
    pub fn from_ints<const N: usize>(ring: R, rows: [[i64; N]; N]) -> Self {
        let entries = rows.iter().flatten().map(|&v| ring.from_i64(v)).collect();
        Matrix {
            ring,
            n: N,
            entries,
        }
    }

    pub fn from_fn(ring: R, n: usize, mut f: impl FnMut(usize, usize) -> R::Elem) -> Result<Self> {
        let entries = (0..n * n).map(|idx| f(idx / n, idx % n)).collect();
        Self::from_entries(ring, n, entries)
    }

    pub fn zero(ring: R, n: usize) -> Self {
        let entries = (0..n * n).map(|_| ring.zero()).collect();
        Matrix { ring, n, entries }
    }

    pub fn identity(ring: R, n: usize) -> Self {
        let mut m = Self::zero(ring, n);
        for i in 0..n {
            m.entries[i * n + i] = m.ring.one();
        }
        m
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[R::Elem] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<R::Elem> {
        self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &R::Elem {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[R::Elem] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R::Elem]> {
        // chunks(0) panics, so the empty matrix gets an empty iterator.
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    fn check_scalar(&self, c: &R::Elem) -> Result<()> {
        if self.ring.contains(c) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Classical product `self * other`.
    pub fn mat_mul(&self, other: &Self, counter: &mut OpCounter) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.n as u64;
        counter.full_matmul += 1;
        counter.ring_mul += n * n * n;
        counter.ring_add += n * n * n.saturating_sub(1);
        let entries = self
            .ring
            .matmul_kernel(self.n, &self.entries, &other.entries);
        Ok(Matrix {
            ring: self.ring.clone(),
            n: self.n,
            entries,
        })
    }

    /// `Tr(self * other)` from the diagonal dot products alone, using
    /// exactly `n^2` ring multiplications.
    pub fn product_trace(&self, other: &Self, counter: &mut OpCounter) -> Result<R::Elem> {
        self.check_compatible(other)?;
        let n = self.n;
        counter.product_trace_calls += 1;
        counter.ring_mul += (n * n) as u64;
        counter.ring_add += (n * n).saturating_sub(1) as u64;
        let pairs = (0..n * n).map(|idx| {
            let (i, j) = (idx / n, idx % n);
            (&self.entries[i * n + j], &other.entries[j * n + i])
        });
        Ok(self.ring.dot(pairs))
    }

    pub fn trace(&self) -> R::Elem {
        let mut acc = self.ring.zero();
        for i in 0..self.n {
            self.ring.add_assign(&mut acc, self.get(i, i));
        }
        acc
    }

    /// `self + c * I`.
    pub fn add_scalar_diag(&self, c: &R::Elem, counter: &mut OpCounter) -> Result<Self> {
        self.check_scalar(c)?;
        let mut out = self.clone();
        for i in 0..self.n {
            let idx = i * self.n + i;
            out.ring.add_assign(&mut out.entries[idx], c);
        }
        counter.ring_add += self.n as u64;
        Ok(out)
    }

    /// `self + c * p`, entrywise.
    pub fn axpy(&self, c: &R::Elem, p: &Self, counter: &mut OpCounter) -> Result<Self> {
        self.check_compatible(p)?;
        self.check_scalar(c)?;
        let entries = self
            .entries
            .iter()
            .zip(&p.entries)
            .map(|(b, x)| self.ring.add(b, &self.ring.mul(c, x)))
            .collect();
        let nn = (self.n * self.n) as u64;
        counter.ring_mul += nn;
        counter.ring_add += nn;
        Ok(Matrix {
            ring: self.ring.clone(),
            n: self.n,
            entries,
        })
    }

    /// `self + sum_j coeffs[j] * mats[j] + diag * I` in one pass, with one
    /// fused dot product per entry. Equivalent to a chain of [`Matrix::axpy`]
    /// calls followed by [`Matrix::add_scalar_diag`].
    pub fn add_combination(
        &self,
        coeffs: &[&R::Elem],
        mats: &[&Self],
        diag: Option<&R::Elem>,
        counter: &mut OpCounter,
    ) -> Result<Self> {
        if coeffs.len() != mats.len() {
            return Err(Error::DimensionMismatch {
                expected: mats.len(),
                found: coeffs.len(),
            });
        }
        for (c, p) in coeffs.iter().zip(mats) {
            self.check_compatible(p)?;
            self.check_scalar(c)?;
        }
        if let Some(d) = diag {
            self.check_scalar(d)?;
        }
        let n = self.n;
        let one = self.ring.one();
        let entries = (0..n * n)
            .map(|idx| {
                let on_diag = diag.filter(|_| idx % (n + 1) == 0);
                let terms = coeffs
                    .iter()
                    .zip(mats)
                    .map(|(c, p)| (*c, &p.entries[idx]))
                    .chain(core::iter::once((&one, &self.entries[idx])))
                    .chain(on_diag.map(|d| (d, &one)));
                self.ring.dot(terms)
            })
            .collect();
        let nn = (n * n) as u64;
        counter.ring_mul += nn * mats.len() as u64;
        counter.ring_add += nn * mats.len() as u64 + if diag.is_some() { n as u64 } else { 0 };
        Ok(Matrix {
            ring: self.ring.clone(),
            n,
            entries,
        })
    }

    /// `-self`.
    pub fn neg(&self) -> Self {
        let entries = self.entries.iter().map(|e| self.ring.neg(e)).collect();
        Matrix {
            ring: self.ring.clone(),
            n: self.n,
            entries,
        }
    }

    /// Entrywise `self - other`.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.ring.sub(a, b))
            .collect();
        Ok(Matrix {
            ring: self.ring.clone(),
            n: self.n,
            entries,
        })
    }

    /// `c * self`.
    pub fn scale(&self, c: &R::Elem) -> Result<Self> {
        self.check_scalar(c)?;
        let entries = self.entries.iter().map(|e| self.ring.mul(c, e)).collect();
        Ok(Matrix {
            ring: self.ring.clone(),
            n: self.n,
            entries,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    /// The powers `A^1, ..., A^m`, using `m - 1` products.
    pub fn power_list(&self, m: usize, counter: &mut OpCounter) -> Result<Vec<Self>> {
        if m == 0 {
            return Err(Error::InvalidBlockSize { m, n: self.n });
        }
        let mut powers: Vec<Self> = Vec::with_capacity(m);
        powers.push(self.clone());
        for _ in 1..m {
            let next = self.mat_mul(powers.last().expect("nonempty"), counter)?;
            powers.push(next);
        }
        Ok(powers)
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: R::Elem) {
        self.entries[i * self.n + j] = v;
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [R::Elem] {
        &mut self.entries
    }
}

impl<R: Ring> Index<(usize, usize)> for Matrix<R> {
    type Output = R::Elem;

    fn index(&self, (i, j): (usize, usize)) -> &R::Elem {
        self.get(i, j)
    }
}

/// Seeded random matrix with integer data uniform on `lo..=hi`.
///
/// Entries are drawn row-major from ChaCha8 seeded with `seed` via
/// `SeedableRng::seed_from_u64`; polynomial entries draw `degree + 1`
/// coefficients in ascending order.
pub fn random_matrix_with_degree<R: Ring>(
    ring: R,
    n: usize,
    lo: i64,
    hi: i64,
    degree: usize,
    seed: u64,
) -> Matrix<R> {
    assert!(lo <= hi, "empty sampling range {lo}..={hi}");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = (0..n * n)
        .map(|_| ring.sample(&mut rng, lo, hi, degree))
        .collect();
    Matrix { ring, n, entries }
}

/// [`random_matrix_with_degree`] with degree-1 polynomial entries.
pub fn random_matrix<R: Ring>(ring: R, n: usize, lo: i64, hi: i64, seed: u64) -> Matrix<R> {
    random_matrix_with_degree(ring, n, lo, hi, 1, seed)
}
