//! Base fields for the `k[x]/(x^N)` family and the truncated `x`-series
//! arithmetic built on them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) trait Field {
    type E: Clone + PartialEq;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    /// Caller guarantees `a != 0`.
    fn inv(&self, a: &Self::E) -> Self::E;
}

/// `F_p` with residues in `[0, p)`.
#[derive(Clone, Copy)]
pub(crate) struct PrimeField(pub u64);

impl Field for PrimeField {
    type E = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.0 as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.0 as u128 - *b as u128) % self.0 as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.0 - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        mod_inverse(*a, self.0).expect("nonzero element of a prime field is invertible")
    }
}

/// `Q` as reduced fractions over arbitrary-precision integers.
#[derive(Clone, Copy)]
pub(crate) struct Rationals;

impl Field for Rationals {
    type E = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm, if `gcd(a, m) = 1`.
pub(crate) fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

pub(crate) fn rational_from_int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub(crate) fn x_add<F: Field>(field: &F, a: &[F::E], b: &[F::E]) -> Vec<F::E> {
    a.iter().zip(b).map(|(x, y)| field.add(x, y)).collect()
}

pub(crate) fn x_sub<F: Field>(field: &F, a: &[F::E], b: &[F::E]) -> Vec<F::E> {
    a.iter().zip(b).map(|(x, y)| field.sub(x, y)).collect()
}

pub(crate) fn x_neg<F: Field>(field: &F, a: &[F::E]) -> Vec<F::E> {
    a.iter().map(|x| field.neg(x)).collect()
}

/// Product in `k[x]/(x^n)`; inputs have length at least `n`.
pub(crate) fn x_mul<F: Field>(field: &F, a: &[F::E], b: &[F::E], n: usize) -> Vec<F::E> {
    let mut out = vec![field.zero(); n];
    for (i, ai) in a.iter().enumerate().take(n) {
        if field.is_zero(ai) {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n - i) {
            if field.is_zero(bj) {
                continue;
            }
            out[i + j] = field.add(&out[i + j], &field.mul(ai, bj));
        }
    }
    out
}

/// Inverse in `k[x]/(x^n)` of an element with nonzero constant term, by
/// Newton iteration `y <- y(2 - a y)` with doubling precision.
pub(crate) fn x_inv<F: Field>(field: &F, a: &[F::E], n: usize) -> Vec<F::E> {
    let mut y = vec![field.zero(); n];
    y[0] = field.inv(&a[0]);
    let mut prec = 1;
    while prec < n {
        prec = (2 * prec).min(n);
        let ay = x_mul(field, a, &y, prec);
        let mut two_minus = x_neg(field, &ay);
        two_minus[0] = field.add(&two_minus[0], &field.add(&field.one(), &field.one()));
        let next = x_mul(field, &y, &two_minus, prec);
        y[..prec].clone_from_slice(&next);
    }
    y
}
