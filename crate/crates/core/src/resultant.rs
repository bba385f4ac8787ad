//! The henselian resultant `Res(f, g) = N_{S/R}(g)` for `S = R<t>/(f)`,
//! elimination cofactors, and the classical Sylvester resultant.
//!
//! `S` is free with basis `1, t, ..., t^{d-1}` and, through `f = P v`, equal
//! to `R[t]/(P)`. The norm is the determinant of multiplication by the
//! remainder of `g` modulo `f`, reduced modulo the monic `P`.

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::poly::Poly;
use crate::ring::RingElem;
use crate::series::TruncatedSeries;
use crate::weierstrass::{self, PreparedForm};

/// `u f + v g = res` modulo `t^cert_prec`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofactorPair {
    pub u: TruncatedSeries,
    pub v: TruncatedSeries,
    pub res: RingElem,
    pub cert_prec: usize,
}

struct NormData {
    prep: PreparedForm,
    p_quotient: TruncatedSeries,
    g_quotient: TruncatedSeries,
    g_rem: Poly,
    matrix: SquareMatrix,
}

fn norm_data(f: &TruncatedSeries, g: &TruncatedSeries) -> Result<NormData> {
    Error::check_same_ring(f.ring(), g.ring())?;
    let m = f.t_prec().min(g.t_prec());
    let f = f.truncate_to(m)?;
    let g = g.truncate_to(m)?;
    let (prep, p_quotient) = weierstrass::prepare_with_quotient(&f)?;
    let (g_quotient, g_rem) = weierstrass::divide(&g, &f)?.into_parts();
    let matrix = mul_matrix(&g_rem, prep.polynomial())?;
    Ok(NormData { prep, p_quotient, g_quotient, g_rem, matrix })
}

/// `Res(f, g)`, the norm of the class of `g` in `R<t>/(f)`.
///
/// `f` may be any `I`-normal series: the value depends on `f` only through
/// the ideal it generates. For order 0 the quotient is zero and the norm is 1.
pub fn resultant(f: &TruncatedSeries, g: &TruncatedSeries) -> Result<RingElem> {
    Ok(det_berkowitz(&norm_data(f, g)?.matrix))
}

/// Matrix of multiplication by `gbar` on `R[t]/(P)` in the basis
/// `1, ..., t^{d-1}`; column `j` holds `gbar t^j mod P`.
pub fn mul_matrix(gbar: &Poly, p: &Poly) -> Result<SquareMatrix> {
    Error::check_same_ring(gbar.ring(), p.ring())?;
    let ring = *p.ring();
    let d = p.len().checked_sub(1).ok_or_else(|| Error::InvalidArgument("empty modulus".into()))?;
    if !p.coeffs()[d].is_one() {
        return Err(Error::InvalidArgument("modulus is not monic".into()));
    }
    let mut col = gbar.padded(d)?.into_coeffs();
    let mut columns = Vec::with_capacity(d);
    for _ in 0..d {
        let top = col[d - 1].clone();
        let mut next = Vec::with_capacity(d);
        next.push(ring.zero());
        next.extend(col[..d - 1].iter().cloned());
        for (c, q) in next.iter_mut().zip(p.coeffs()) {
            *c = &*c - &(&top * q);
        }
        columns.push(std::mem::replace(&mut col, next));
    }
    SquareMatrix::from_columns(ring, columns)
}

pub fn det_berkowitz(a: &SquareMatrix) -> RingElem {
    a.det_berkowitz()
}

/// Cofactors `u, v` with `u f + v g = Res(f, g)`, certifying that the
/// resultant lies in the ideal `(f, g)`.
///
/// Writing `A` for multiplication by `gbar = g mod f` on `R[t]/(P)`,
/// `A adj(A) = det(A) Id` gives `u0` of degree `< d` with `u0 gbar = Res mod P`.
/// Exact division by the monic `P` yields `w` with `u0 gbar - w P = Res`, and
/// substituting `gbar = g - B_g f`, `P = B_P f` gives
/// `u = -(u0 B_g + w B_P)`, `v = u0`, valid modulo `t^{M-d}`.
pub fn cofactors(f: &TruncatedSeries, g: &TruncatedSeries) -> Result<CofactorPair> {
    let data = norm_data(f, g)?;
    let ring = *f.ring();
    let d = data.prep.order();
    let res = det_berkowitz(&data.matrix);
    let cert_prec = data.g_quotient.t_prec();

    if d == 0 {
        // f is a unit: f^{-1} f + 0 g = 1.
        return Ok(CofactorPair {
            u: data.p_quotient,
            v: TruncatedSeries::zero(ring, cert_prec)?,
            res,
            cert_prec,
        });
    }

    let mut e0 = vec![ring.zero(); d];
    e0[0] = ring.one();
    let u0 = Poly::from_vec(ring, data.matrix.adjugate_times(&e0));
    let lhs = u0.mul(&data.g_rem).sub(&Poly::from_vec(ring, vec![res.clone()]));
    let (w, rem) = lhs.div_rem_monic(data.prep.polynomial())?;
    if !rem.is_zero() {
        return Err(Error::Internal("adjugate cofactor does not reduce to the resultant".into()));
    }

    let u0_series = TruncatedSeries::from_poly(&u0, cert_prec)?;
    let w_series = TruncatedSeries::from_poly(&w, cert_prec)?;
    let u = u0_series
        .try_mul(&data.g_quotient)?
        .try_add(&w_series.try_mul(&data.p_quotient)?)?
        .neg();
    Ok(CofactorPair { u, v: u0_series, res, cert_prec })
}

/// Determinant of the Sylvester matrix of `fp` and `gp` taken with declared
/// degrees `degf` and `degg`: `degg` shifted rows of `fp` (top coefficient
/// first) followed by `degf` shifted rows of `gp`. For monic `fp` this is
/// `prod gp(alpha_i)` over the roots of `fp`.
pub fn sylvester(fp: &Poly, gp: &Poly, degf: usize, degg: usize) -> Result<RingElem> {
    Error::check_same_ring(fp.ring(), gp.ring())?;
    if fp.degree().is_some_and(|k| k > degf) || gp.degree().is_some_and(|k| k > degg) {
        return Err(Error::InvalidArgument("declared degree below actual degree".into()));
    }
    let ring = *fp.ring();
    let size = degf + degg;
    let mut rows = Vec::with_capacity(size);
    for (p, deg, count) in [(fp, degf, degg), (gp, degg, degf)] {
        for i in 0..count {
            let mut row = vec![ring.zero(); size];
            for k in 0..=deg {
                row[i + k] = p.coeff(deg - k);
            }
            rows.push(row);
        }
    }
    Ok(SquareMatrix::from_rows(ring, rows)?.det_berkowitz())
}
