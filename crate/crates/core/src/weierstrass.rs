//! Weierstrass division and preparation for an `I`-normal series `f` of
//! order `d`.
//!
//! Division writes `g = B f + C` with `deg C < d`; preparation writes
//! `f = (t^d + Q) v` with `Q` in `I[t]` of degree `< d` and `v` a unit. The
//! classes of `1, t, ..., t^{d-1}` form a basis of `R<t>/(f)`, and `C` holds
//! the coordinates of `g` in it.
//!
//! # Precision
//!
//! With `f` and `g` known modulo `t^M`, `B` is returned at t-precision
//! `M - d` and `g - B f - C` vanishes modulo `t^M` (hence modulo `t^{M-d}`
//! once `B` is truncated). A coefficient of degree `j >= d` of `f` or `g`
//! reaches `C` only through `I^ceil((j-d+1)/d)`, so `C` and `Q` agree with
//! the untruncated values as soon as `M >= N d`; `M >= (N+1) d` is the
//! recommended working precision.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{LocalRing, RingElem};
use crate::series::{invert_with, mul_trunc, TruncatedSeries};

/// `g = B f + C` with `deg C < d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult {
    quotient: TruncatedSeries,
    remainder: Poly,
}

impl DivisionResult {
    /// `B`, at t-precision `M - d`.
    pub fn quotient(&self) -> &TruncatedSeries {
        &self.quotient
    }

    /// `C`, stored with exactly `d` coefficients.
    pub fn remainder(&self) -> &Poly {
        &self.remainder
    }

    pub fn into_parts(self) -> (TruncatedSeries, Poly) {
        (self.quotient, self.remainder)
    }
}

/// `f = P v` with `P = t^d + Q` a Weierstrass polynomial and `v` a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreparedForm {
    polynomial: Poly,
    unit: TruncatedSeries,
}

impl PreparedForm {
    /// `P`, stored with `d + 1` coefficients, the last one equal to 1.
    pub fn polynomial(&self) -> &Poly {
        &self.polynomial
    }

    /// `v`, at t-precision `M - d`.
    pub fn unit(&self) -> &TruncatedSeries {
        &self.unit
    }

    pub fn order(&self) -> usize {
        self.polynomial.len() - 1
    }

    /// The coefficients of `Q = P - t^d`.
    pub fn tail(&self) -> &[RingElem] {
        &self.polynomial.coeffs()[..self.order()]
    }
}

/// Weierstrass division of `g` by `f`.
///
/// With `f = U + t^d W` (`U` the part below degree `d`, coefficients in `I`;
/// `W` with unit constant term), `B` is the fixed point of
/// `B <- W^{-1} * (g - B U) / t^d`. The map is `I`-contracting, so starting
/// from `B = 0` it is reached after at most `N` steps.
pub fn divide(g: &TruncatedSeries, f: &TruncatedSeries) -> Result<DivisionResult> {
    Error::check_same_ring(g.ring(), f.ring())?;
    let ring = *f.ring();
    let m = g.t_prec().min(f.t_prec());
    let f = &f.coeffs()[..m];
    let g = &g.coeffs()[..m];
    let order = TruncatedSeries::from_vec(ring, f.to_vec()).normal_order()?;
    let d = order.d;
    if m <= d {
        return Err(Error::PrecisionTooLow(format!("t_prec {m} must exceed the order {d}")));
    }

    let low = &f[..d];
    let w_inv = invert_with(&f[d..], &order.leading.invert_unit()?, m - d);

    let mut b = vec![ring.zero(); m - d];
    for _ in 0..ring.nilpotence() {
        let bu = mul_trunc(&ring, &b, low, m);
        let shifted: Vec<RingElem> = (d..m).map(|i| &g[i] - &bu[i]).collect();
        let next = mul_trunc(&ring, &w_inv, &shifted, m - d);
        if next == b {
            break;
        }
        b = next;
    }

    let bu = mul_trunc(&ring, &b, low, d);
    let c = (0..d).map(|i| &g[i] - &bu[i]).collect();
    Ok(DivisionResult {
        quotient: TruncatedSeries::from_vec(ring, b),
        remainder: Poly::from_vec(ring, c),
    })
}

/// Coordinates of the class of `g` in the basis `1, t, ..., t^{d-1}` of
/// `R<t>/(f)`: the remainder of [`divide`].
pub fn reduce_mod(g: &TruncatedSeries, f: &TruncatedSeries) -> Result<Poly> {
    Ok(divide(g, f)?.remainder)
}

/// Weierstrass preparation of `f`, obtained by dividing `t^d` by `f`:
/// `t^d = B f + C` gives `P = t^d - C = B f` and `v = B^{-1}`.
///
/// The constant term of `v` is congruent to `a_d` modulo `I` (equivalently
/// `B_0` is congruent to `a_d^{-1}`); for `I`-monic `f` both are `1 mod I`.
pub fn prepare(f: &TruncatedSeries) -> Result<PreparedForm> {
    Ok(prepare_with_quotient(f)?.0)
}

/// [`prepare`] together with `B = v^{-1}`, the series with `P = B f`.
pub(crate) fn prepare_with_quotient(f: &TruncatedSeries) -> Result<(PreparedForm, TruncatedSeries)> {
    let ring = *f.ring();
    let d = f.normal_order()?.d;
    let t_d = TruncatedSeries::monomial(ring, d, f.t_prec())
        .map_err(|_| Error::PrecisionTooLow(format!("t_prec {} must exceed the order {d}", f.t_prec())))?;
    let (b, c) = divide(&t_d, f)?.into_parts();
    let unit = b.invert().map_err(|_| {
        Error::Internal("quotient of t^d by f has a non-unit constant term".into())
    })?;
    let mut p = c.neg().into_coeffs();
    p.push(ring.one());
    let polynomial = Poly::from_vec(ring, p);
    if !polynomial.coeffs()[..d].iter().all(|q| q.in_ideal_power(1)) {
        return Err(Error::Internal("Weierstrass polynomial has a coefficient outside I".into()));
    }
    Ok((PreparedForm { polynomial, unit }, b))
}

/// Whether `p` is a Weierstrass polynomial: monic (top stored coefficient 1)
/// with all lower coefficients in `I`.
pub fn is_weierstrass_polynomial(p: &Poly) -> bool {
    match p.coeffs().split_last() {
        Some((top, rest)) => top.is_one() && rest.iter().all(|c| c.in_ideal_power(1)),
        None => false,
    }
}

/// Recommended working precision `(N + 1) d` for an order-`d` series.
pub fn recommended_t_prec(ring: &LocalRing, d: usize) -> usize {
    (ring.nilpotence() as usize + 1) * d
}
