//! Dense polynomials over a [`LocalRing`], low degree first.
//!
//! Used for the remainder `C`, the Weierstrass polynomial `P = t^d + Q`, and
//! the Sylvester oracle. Coefficient vectors are not trimmed: a remainder of
//! degree `< d` always carries exactly `d` coefficients.

use crate::error::{Error, Result};
use crate::ring::{LocalRing, RingElem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    ring: LocalRing,
    coeffs: Vec<RingElem>,
}

impl Poly {
    pub fn new(ring: LocalRing, coeffs: Vec<RingElem>) -> Result<Self> {
        for c in &coeffs {
            Error::check_same_ring(&ring, c.ring())?;
        }
        Ok(Poly { ring, coeffs })
    }

    pub(crate) fn from_vec(ring: LocalRing, coeffs: Vec<RingElem>) -> Self {
        debug_assert!(coeffs.iter().all(|c| *c.ring() == ring));
        Poly { ring, coeffs }
    }

    pub fn from_ints(ring: LocalRing, coeffs: &[i64]) -> Self {
        Poly { ring, coeffs: coeffs.iter().map(|&c| ring.from_int(c)).collect() }
    }

    pub fn zero(ring: LocalRing, len: usize) -> Self {
        Poly { ring, coeffs: vec![ring.zero(); len] }
    }

    /// `t - alpha`.
    pub fn linear_root(alpha: &RingElem) -> Self {
        let ring = *alpha.ring();
        Poly { ring, coeffs: vec![-alpha, ring.one()] }
    }

    pub fn ring(&self) -> &LocalRing {
        &self.ring
    }

    pub fn coeffs(&self) -> &[RingElem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<RingElem> {
        self.coeffs
    }

    /// Number of stored coefficients.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Index of the highest nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    pub fn coeff(&self, i: usize) -> RingElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// Same polynomial stored with exactly `len` coefficients; fails if a
    /// nonzero coefficient would be dropped.
    pub fn padded(&self, len: usize) -> Result<Poly> {
        if self.degree().is_some_and(|d| d >= len) {
            return Err(Error::InvalidArgument(format!("polynomial does not fit in {len} coefficients")));
        }
        Ok(Poly { ring: self.ring, coeffs: (0..len).map(|i| self.coeff(i)).collect() })
    }

    pub fn eval(&self, x: &RingElem) -> RingElem {
        self.coeffs.iter().rev().fold(self.ring.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.len().max(other.len());
        Poly::from_vec(self.ring, (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.len().max(other.len());
        Poly::from_vec(self.ring, (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly::from_vec(self.ring, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_empty() || other.is_empty() {
            return Poly::zero(self.ring, 0);
        }
        let mut out = vec![self.ring.zero(); self.len() + other.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::from_vec(self.ring, out)
    }

    /// Division by a monic polynomial `m` whose top stored coefficient is 1.
    /// Returns `(quotient, remainder)` with the remainder stored with exactly
    /// `deg m` coefficients.
    pub fn div_rem_monic(&self, m: &Poly) -> Result<(Poly, Poly)> {
        Error::check_same_ring(&self.ring, &m.ring)?;
        let d = m.len().checked_sub(1).ok_or_else(|| Error::InvalidArgument("empty divisor".into()))?;
        if !m.coeffs[d].is_one() {
            return Err(Error::InvalidArgument("divisor is not monic".into()));
        }
        let mut rem = self.coeffs.clone();
        if rem.len() < d {
            rem.resize(d, self.ring.zero());
        }
        let qlen = rem.len() - d;
        let mut quot = vec![self.ring.zero(); qlen];
        for k in (0..qlen).rev() {
            let lead = rem[k + d].clone();
            if lead.is_zero() {
                continue;
            }
            for (i, mc) in m.coeffs.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&lead * mc);
            }
            quot[k] = lead;
        }
        rem.truncate(d);
        Ok((Poly::from_vec(self.ring, quot), Poly::from_vec(self.ring, rem)))
    }

    /// Coefficientwise image in a smaller ring of the same family.
    pub fn reduce_to(&self, target: &LocalRing) -> Result<Poly> {
        Ok(Poly {
            ring: *target,
            coeffs: self.coeffs.iter().map(|c| c.reduce_to(target)).collect::<Result<_>>()?,
        })
    }
}
