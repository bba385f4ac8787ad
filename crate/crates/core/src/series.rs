//! Elements of the henselized series ring `R<t>`, handled through their image
//! in `R[[t]]/(t^M)`.
//!
//! `M` is the t-precision of a value and is tracked explicitly: binary
//! operations on operands of different precision produce a result at the
//! smaller one, never at a fabricated larger one.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{LocalRing, RingElem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    ring: LocalRing,
    coeffs: Vec<RingElem>,
}

/// Order of an `I`-normal series: `a_d` is a unit and `a_i` lies in `I` for `i < d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalOrder {
    pub d: usize,
    pub leading: RingElem,
}

impl TruncatedSeries {
    /// Series with the given low coefficients at t-precision `t_prec`;
    /// missing trailing coefficients are zero.
    pub fn new(ring: LocalRing, mut coeffs: Vec<RingElem>, t_prec: usize) -> Result<Self> {
        if t_prec == 0 {
            return Err(Error::PrecisionTooLow("t_prec must be at least 1".into()));
        }
        if coeffs.len() > t_prec {
            return Err(Error::InvalidArgument(format!(
                "{} coefficients given for t_prec {t_prec}",
                coeffs.len()
            )));
        }
        for c in &coeffs {
            Error::check_same_ring(&ring, c.ring())?;
        }
        coeffs.resize(t_prec, ring.zero());
        Ok(TruncatedSeries { ring, coeffs })
    }

    pub fn from_ints(ring: LocalRing, coeffs: &[i64], t_prec: usize) -> Result<Self> {
        Self::new(ring, coeffs.iter().map(|&c| ring.from_int(c)).collect(), t_prec)
    }

    /// Image of a polynomial; terms of degree `>= t_prec` are dropped.
    pub fn from_poly(p: &Poly, t_prec: usize) -> Result<Self> {
        let coeffs = p.coeffs().iter().take(t_prec).cloned().collect();
        Self::new(*p.ring(), coeffs, t_prec)
    }

    pub(crate) fn from_vec(ring: LocalRing, coeffs: Vec<RingElem>) -> Self {
        debug_assert!(!coeffs.is_empty());
        TruncatedSeries { ring, coeffs }
    }

    pub fn zero(ring: LocalRing, t_prec: usize) -> Result<Self> {
        Self::new(ring, Vec::new(), t_prec)
    }

    pub fn one(ring: LocalRing, t_prec: usize) -> Result<Self> {
        Self::new(ring, vec![ring.one()], t_prec)
    }

    /// `t^k`; requires `k < t_prec`.
    pub fn monomial(ring: LocalRing, k: usize, t_prec: usize) -> Result<Self> {
        if k >= t_prec {
            return Err(Error::PrecisionTooLow(format!("t^{k} vanishes at t_prec {t_prec}")));
        }
        let mut coeffs = vec![ring.zero(); k + 1];
        coeffs[k] = ring.one();
        Self::new(ring, coeffs, t_prec)
    }

    pub fn ring(&self) -> &LocalRing {
        &self.ring
    }

    pub fn t_prec(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[RingElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &RingElem {
        &self.coeffs[i]
    }

    /// All `t_prec` coefficients as a polynomial.
    pub fn to_poly(&self) -> Poly {
        Poly::from_vec(self.ring, self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RingElem::is_zero)
    }

    pub fn try_add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        Error::check_same_ring(&self.ring, &other.ring)?;
        Ok(Self::from_vec(self.ring, self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect()))
    }

    pub fn try_sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        Error::check_same_ring(&self.ring, &other.ring)?;
        Ok(Self::from_vec(self.ring, self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect()))
    }

    pub fn try_mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        Error::check_same_ring(&self.ring, &other.ring)?;
        let n = self.t_prec().min(other.t_prec());
        Ok(Self::from_vec(self.ring, mul_trunc(&self.ring, &self.coeffs, &other.coeffs, n)))
    }

    pub fn neg(&self) -> TruncatedSeries {
        Self::from_vec(self.ring, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, s: &RingElem) -> Result<TruncatedSeries> {
        Error::check_same_ring(&self.ring, s.ring())?;
        Ok(Self::from_vec(self.ring, self.coeffs.iter().map(|c| c * s).collect()))
    }

    /// Inverse in `R[t]/(t^M)`; exists iff the constant term is a unit.
    pub fn invert(&self) -> Result<TruncatedSeries> {
        let a0_inv = self.coeffs[0].invert_unit()?;
        Ok(Self::from_vec(self.ring, invert_with(&self.coeffs, &a0_inv, self.t_prec())))
    }

    /// Least `d` with `a_d` a unit. By locality every earlier coefficient is
    /// then in `I`, which is exactly `I`-normality of order `d`.
    pub fn normal_order(&self) -> Result<NormalOrder> {
        self.coeffs
            .iter()
            .position(RingElem::is_unit)
            .map(|d| NormalOrder { d, leading: self.coeffs[d].clone() })
            .ok_or(Error::NotNormal { last: self.t_prec() - 1 })
    }

    /// `f(alpha)` for `alpha` in `I`. Terms of degree `>= N` vanish because
    /// `alpha^i` lies in `I^i = 0`, so the sum is finite and exact provided
    /// `t_prec >= N`.
    pub fn evaluate(&self, alpha: &RingElem) -> Result<RingElem> {
        Error::check_same_ring(&self.ring, alpha.ring())?;
        if !alpha.in_ideal_power(1) {
            return Err(Error::IdealMembership(alpha.to_string()));
        }
        let n = self.ring.nilpotence() as usize;
        if self.t_prec() < n {
            return Err(Error::PrecisionTooLow(format!(
                "evaluation needs t_prec >= N = {n}, have {}",
                self.t_prec()
            )));
        }
        Ok(self.coeffs[..n].iter().rev().fold(self.ring.zero(), |acc, c| &(&acc * alpha) + c))
    }

    pub fn truncate_to(&self, t_prec: usize) -> Result<TruncatedSeries> {
        if t_prec == 0 {
            return Err(Error::PrecisionTooLow("t_prec must be at least 1".into()));
        }
        if t_prec > self.t_prec() {
            return Err(Error::PrecisionTooLow(format!(
                "cannot extend t_prec {} to {t_prec}",
                self.t_prec()
            )));
        }
        Ok(Self::from_vec(self.ring, self.coeffs[..t_prec].to_vec()))
    }

    /// Coefficientwise image under a reduction map of the coefficient ring.
    pub fn reduce_to(&self, target: &LocalRing) -> Result<TruncatedSeries> {
        let coeffs = self.coeffs.iter().map(|c| c.reduce_to(target)).collect::<Result<_>>()?;
        Ok(Self::from_vec(*target, coeffs))
    }
}

/// `a * b mod t^n`; missing coefficients of either operand count as zero.
pub(crate) fn mul_trunc(ring: &LocalRing, a: &[RingElem], b: &[RingElem], n: usize) -> Vec<RingElem> {
    let mut out = vec![ring.zero(); n];
    for (i, ai) in a.iter().enumerate().take(n) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

/// Series inverse by the recurrence `b_k = -a_0^{-1} sum_{i=1..k} a_i b_{k-i}`.
pub(crate) fn invert_with(a: &[RingElem], a0_inv: &RingElem, n: usize) -> Vec<RingElem> {
    let ring = *a0_inv.ring();
    let mut b: Vec<RingElem> = Vec::with_capacity(n);
    b.push(a0_inv.clone());
    for k in 1..n {
        let mut acc = ring.zero();
        for i in 1..=k.min(a.len() - 1) {
            if !a[i].is_zero() {
                acc = &acc + &(&a[i] * &b[k - i]);
            }
        }
        b.push(-&(&acc * a0_inv));
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::BaseField;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn zp(p: u64, n: u32) -> LocalRing {
        LocalRing::p_adic(p, n).unwrap()
    }

    fn s(r: LocalRing, c: &[i64], m: usize) -> TruncatedSeries {
        TruncatedSeries::from_ints(r, c, m).unwrap()
    }

    #[test]
    fn add_examples() {
        let r = zp(5, 3);
        assert_eq!(s(r, &[1, 1], 4).try_add(&s(r, &[0, 1], 4)).unwrap(), s(r, &[1, 2], 4));
        let f = s(r, &[3, 7, 9], 3);
        assert_eq!(f.try_add(&TruncatedSeries::zero(r, 3).unwrap()).unwrap(), f);
        assert_eq!(s(r, &[120], 1).try_add(&s(r, &[10], 1)).unwrap(), s(r, &[5], 1));
    }

    #[test]
    fn mixed_precision_resolves_to_minimum() {
        let r = zp(5, 3);
        let sum = s(r, &[1, 1, 1], 5).try_add(&s(r, &[1], 2)).unwrap();
        assert_eq!(sum.t_prec(), 2);
        let prod = s(r, &[1, 1, 1], 5).try_mul(&s(r, &[1], 3)).unwrap();
        assert_eq!(prod, s(r, &[1, 1, 1], 3));
    }

    #[test]
    fn mul_examples() {
        let r = zp(5, 2);
        // (t^2 + 5)(1 + 5t) = 5 + 25t + t^2 + 5t^3 = 5 + t^2 + 5t^3 mod 25
        let prod = s(r, &[5, 0, 1], 8).try_mul(&s(r, &[1, 5], 8)).unwrap();
        assert_eq!(prod, s(r, &[5, 0, 1, 5], 8));
        let f = s(r, &[3, 1, 4, 1], 4);
        assert_eq!(f.try_mul(&TruncatedSeries::one(r, 4).unwrap()).unwrap(), f);
        let t = s(r, &[0, 1], 2);
        assert!(t.try_mul(&t).unwrap().is_zero());
    }

    #[test]
    fn invert_examples() {
        let r = zp(5, 2);
        // 1/(1 + 5t) = 1 - 5t + 25t^2 = 1 + 20t mod (25, t^3)
        assert_eq!(s(r, &[1, 5], 3).invert().unwrap(), s(r, &[1, 20], 3));
        assert_eq!(s(r, &[1], 3).invert().unwrap(), s(r, &[1], 3));
        assert!(matches!(s(r, &[5, 1], 3).invert(), Err(Error::NotUnit(_))));
    }

    #[test]
    fn invert_random_unit_series() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let rings = [zp(3, 4), zp(7, 2), LocalRing::truncated_series(BaseField::PrimeField(2), 5).unwrap()];
        for i in 0..500 {
            let r = rings[i % rings.len()];
            let mut c: Vec<RingElem> = (0..9).map(|_| r.random_elem(&mut rng)).collect();
            c[0] = r.random_unit(&mut rng);
            let f = TruncatedSeries::new(r, c, 9).unwrap();
            let prod = f.try_mul(&f.invert().unwrap()).unwrap();
            assert_eq!(prod, TruncatedSeries::one(r, 9).unwrap());
        }
    }

    #[test]
    fn normal_order_examples() {
        let r = zp(5, 3);
        let o = s(r, &[3, 5, 1], 3).normal_order().unwrap();
        assert_eq!((o.d, o.leading), (0, r.from_int(3)));
        let o = s(r, &[5, 5, 1], 3).normal_order().unwrap();
        assert_eq!((o.d, o.leading), (2, r.one()));
        assert_eq!(s(r, &[5, 10, 20], 3).normal_order(), Err(Error::NotNormal { last: 2 }));
    }

    #[test]
    fn normal_order_is_invariant_under_units() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let r = zp(2, 5);
        for _ in 0..200 {
            let mut c: Vec<RingElem> = (0..3).map(|_| r.random_in_ideal(&mut rng)).collect();
            c.push(r.random_unit(&mut rng));
            c.extend((0..6).map(|_| r.random_elem(&mut rng)));
            let f = TruncatedSeries::new(r, c, 10).unwrap();
            let mut u: Vec<RingElem> = (0..10).map(|_| r.random_elem(&mut rng)).collect();
            u[0] = r.random_unit(&mut rng);
            let u = TruncatedSeries::new(r, u, 10).unwrap();
            assert_eq!(f.try_mul(&u).unwrap().normal_order().unwrap().d, 3);
        }
    }

    #[test]
    fn evaluate_examples() {
        let r = zp(5, 3);
        let f = s(r, &[5, 0, 1, 5], 8);
        assert_eq!(f.evaluate(&r.from_int(5)).unwrap(), r.from_int(30));
        assert_eq!(f.evaluate(&r.zero()).unwrap(), r.from_int(5));
        assert_eq!(s(r, &[1, 1, 1], 3).evaluate(&r.from_int(5)).unwrap(), r.from_int(31));
        assert!(matches!(f.evaluate(&r.from_int(2)), Err(Error::IdealMembership(_))));
        assert!(matches!(s(r, &[1, 1], 2).evaluate(&r.from_int(5)), Err(Error::PrecisionTooLow(_))));
    }

    #[test]
    fn evaluate_is_a_ring_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for r in [zp(3, 4), LocalRing::truncated_series(BaseField::Rationals, 3).unwrap()] {
            for _ in 0..100 {
                let m = r.nilpotence() as usize + 2;
                let f = TruncatedSeries::new(r, (0..m).map(|_| r.random_elem(&mut rng)).collect(), m).unwrap();
                let g = TruncatedSeries::new(r, (0..m).map(|_| r.random_elem(&mut rng)).collect(), m).unwrap();
                let a = r.random_in_ideal(&mut rng);
                let (fa, ga) = (f.evaluate(&a).unwrap(), g.evaluate(&a).unwrap());
                assert_eq!(f.try_add(&g).unwrap().evaluate(&a).unwrap(), &fa + &ga);
                assert_eq!(f.try_mul(&g).unwrap().evaluate(&a).unwrap(), &fa * &ga);
            }
        }
    }

    #[test]
    fn truncate_examples() {
        let r = zp(5, 3);
        let f = s(r, &[1, 1, 1], 3);
        assert_eq!(f.truncate_to(2).unwrap(), s(r, &[1, 1], 2));
        assert_eq!(f.truncate_to(3).unwrap(), f);
        assert_eq!(f.truncate_to(2).unwrap().truncate_to(1).unwrap(), f.truncate_to(1).unwrap());
        assert!(matches!(f.truncate_to(0), Err(Error::PrecisionTooLow(_))));
    }
}
