//! Random instances for property checks and benchmarks.

use rand::Rng;

use crate::poly::Poly;
use crate::ring::{BaseField, LocalRing, RingElem};
use crate::series::TruncatedSeries;

const PRIMES: [u64; 4] = [2, 3, 5, 7];

/// Which coefficient families [`random_ring`] may return.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Families {
    PAdicOnly,
    /// `Z/p^N`, `F_p[x]/(x^N)` and, less often, `Q[x]/(x^N)`.
    All,
}

/// A ring with `p` in `{2, 3, 5, 7}` and `N` in `n_range`.
pub fn random_ring<G: Rng + ?Sized>(rng: &mut G, families: Families, n_range: std::ops::RangeInclusive<u32>) -> LocalRing {
    let p = PRIMES[rng.gen_range(0..PRIMES.len())];
    let n = rng.gen_range(n_range);
    let roll = rng.gen_range(0..20);
    match families {
        Families::All if roll >= 17 => LocalRing::truncated_series(BaseField::Rationals, n),
        Families::All if roll >= 10 => LocalRing::truncated_series(BaseField::PrimeField(p), n),
        _ => LocalRing::p_adic(p, n),
    }
    .expect("small primes and exponents are valid")
}

pub fn random_coeffs<G: Rng + ?Sized>(rng: &mut G, ring: &LocalRing, len: usize) -> Vec<RingElem> {
    (0..len).map(|_| ring.random_elem(rng)).collect()
}

pub fn random_series<G: Rng + ?Sized>(rng: &mut G, ring: &LocalRing, t_prec: usize) -> TruncatedSeries {
    TruncatedSeries::new(*ring, random_coeffs(rng, ring, t_prec), t_prec).expect("valid series")
}

/// `I`-normal series of order `d`: `a_i` in `I` below `d`, `a_d` a unit.
pub fn random_normal_series<G: Rng + ?Sized>(rng: &mut G, ring: &LocalRing, d: usize, t_prec: usize) -> TruncatedSeries {
    let lead = ring.random_unit(rng);
    normal_with_leading(rng, ring, d, t_prec, lead)
}

/// `I`-monic series of order `d`: `I`-normal with `a_d = 1`.
pub fn random_monic_series<G: Rng + ?Sized>(rng: &mut G, ring: &LocalRing, d: usize, t_prec: usize) -> TruncatedSeries {
    normal_with_leading(rng, ring, d, t_prec, ring.one())
}

fn normal_with_leading<G: Rng + ?Sized>(
    rng: &mut G,
    ring: &LocalRing,
    d: usize,
    t_prec: usize,
    lead: RingElem,
) -> TruncatedSeries {
    assert!(d < t_prec);
    let mut c: Vec<RingElem> = (0..d).map(|_| ring.random_in_ideal(rng)).collect();
    c.push(lead);
    c.extend(random_coeffs(rng, ring, t_prec - d - 1));
    TruncatedSeries::new(*ring, c, t_prec).expect("valid series")
}

/// Series with unit constant term.
pub fn random_unit_series<G: Rng + ?Sized>(rng: &mut G, ring: &LocalRing, t_prec: usize) -> TruncatedSeries {
    random_normal_series(rng, ring, 0, t_prec)
}

/// Weierstrass polynomial `t^d + Q` with `Q` of degree `< d` in `I[t]`.
pub fn random_weierstrass_poly<G: Rng + ?Sized>(rng: &mut G, ring: &LocalRing, d: usize) -> Poly {
    let mut c: Vec<RingElem> = (0..d).map(|_| ring.random_in_ideal(rng)).collect();
    c.push(ring.one());
    Poly::new(*ring, c).expect("coefficients from the ring")
}

/// Polynomial with `len` random coefficients.
pub fn random_poly<G: Rng + ?Sized>(rng: &mut G, ring: &LocalRing, len: usize) -> Poly {
    Poly::new(*ring, random_coeffs(rng, ring, len)).expect("coefficients from the ring")
}
