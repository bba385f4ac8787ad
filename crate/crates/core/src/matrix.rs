//! Square matrices over a local ring and the division-free Berkowitz
//! characteristic polynomial.
//!
//! The coefficient rings have zero divisors, so no elimination that divides
//! by a pivot is used anywhere.

use crate::error::{Error, Result};
use crate::ring::{LocalRing, RingElem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix {
    ring: LocalRing,
    dim: usize,
    /// Row-major.
    entries: Vec<RingElem>,
}

impl SquareMatrix {
    pub fn zero(ring: LocalRing, dim: usize) -> Self {
        SquareMatrix { ring, dim, entries: vec![ring.zero(); dim * dim] }
    }

    pub fn identity(ring: LocalRing, dim: usize) -> Self {
        let mut m = Self::zero(ring, dim);
        for i in 0..dim {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_rows(ring: LocalRing, rows: Vec<Vec<RingElem>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::InvalidArgument(format!("row of length {} in a {dim}x{dim} matrix", row.len())));
            }
            for e in &row {
                Error::check_same_ring(&ring, e.ring())?;
            }
            entries.extend(row);
        }
        Ok(SquareMatrix { ring, dim, entries })
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(ring: LocalRing, columns: Vec<Vec<RingElem>>) -> Result<Self> {
        let mut m = Self::from_rows(ring, columns)?;
        m.transpose_in_place();
        Ok(m)
    }

    pub fn from_int_rows(ring: LocalRing, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(ring, rows.iter().map(|r| r.iter().map(|&v| ring.from_int(v)).collect()).collect())
    }

    fn transpose_in_place(&mut self) {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                self.entries.swap(i * self.dim + j, j * self.dim + i);
            }
        }
    }

    pub fn ring(&self) -> &LocalRing {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElem {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RingElem) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn mul_vec(&self, x: &[RingElem]) -> Vec<RingElem> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim).fold(self.ring.zero(), |acc, j| &acc + &(self.get(i, j) * &x[j]))
            })
            .collect()
    }

    /// Coefficients `[1, c_1, ..., c_n]` of `det(lambda I - A) = lambda^n + c_1 lambda^{n-1} + ... + c_n`.
    ///
    /// Berkowitz: peel the trailing principal submatrices `A_k` off from the
    /// bottom right. Writing `A_k = [[a, r], [c, A_{k+1}]]`, the polynomial of
    /// `A_k` is the lower-triangular Toeplitz matrix with first column
    /// `(1, -a, -r c, -r A_{k+1} c, -r A_{k+1}^2 c, ...)` applied to the
    /// polynomial of `A_{k+1}`. Only ring additions and multiplications occur.
    pub fn charpoly(&self) -> Vec<RingElem> {
        let n = self.dim;
        let ring = self.ring;
        let mut poly = vec![ring.one()];
        for k in (0..n).rev() {
            let s = n - k;
            let mut toeplitz = Vec::with_capacity(s + 1);
            toeplitz.push(ring.one());
            toeplitz.push(-self.get(k, k));
            // v = A_{k+1}^j c, starting from the column c below the pivot.
            let mut v: Vec<RingElem> = (k + 1..n).map(|i| self.get(i, k).clone()).collect();
            for j in 0..s.saturating_sub(1) {
                if j > 0 {
                    v = (k + 1..n)
                        .map(|i| {
                            (k + 1..n).fold(ring.zero(), |acc, l| &acc + &(self.get(i, l) * &v[l - k - 1]))
                        })
                        .collect();
                }
                let rc = (k + 1..n).fold(ring.zero(), |acc, l| &acc + &(self.get(k, l) * &v[l - k - 1]));
                toeplitz.push(-&rc);
            }
            poly = (0..=s)
                .map(|i| {
                    (0..s.min(i + 1))
                        .filter(|&j| i - j < toeplitz.len())
                        .fold(ring.zero(), |acc, j| &acc + &(&toeplitz[i - j] * &poly[j]))
                })
                .collect();
        }
        poly
    }

    pub fn det_berkowitz(&self) -> RingElem {
        let cp = self.charpoly();
        let c_n = &cp[self.dim];
        if self.dim.is_multiple_of(2) {
            c_n.clone()
        } else {
            -c_n
        }
    }

    /// `adj(A) x`, from Cayley-Hamilton:
    /// `adj(A) = (-1)^{n-1} (A^{n-1} + c_1 A^{n-2} + ... + c_{n-1} I)`.
    pub fn adjugate_times(&self, x: &[RingElem]) -> Vec<RingElem> {
        let n = self.dim;
        if n == 0 {
            return Vec::new();
        }
        let cp = self.charpoly();
        let mut acc: Vec<RingElem> = x.to_vec();
        for c in &cp[1..n] {
            acc = self.mul_vec(&acc).iter().zip(x).map(|(a, xi)| a + &(c * xi)).collect();
        }
        if n.is_multiple_of(2) {
            acc.iter().map(|a| -a).collect()
        } else {
            acc
        }
    }
}
