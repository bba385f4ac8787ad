//! `Q[x]/(x^n)` with integer numerators over one shared denominator.
//!
//! Canonical form: the denominator is positive and coprime to the content of
//! the numerators, and zero is stored over 1. Derived equality and hashing
//! are therefore equality of elements.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::base::{x_inv, Rationals};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct QPoly {
    num: Vec<BigInt>,
    den: BigInt,
}

impl QPoly {
    pub(crate) fn constant(v: BigInt, n: usize) -> Self {
        let mut num = vec![BigInt::zero(); n];
        num[0] = v;
        QPoly { num, den: BigInt::one() }
    }

    pub(crate) fn from_rationals(c: &[BigRational], n: usize) -> Self {
        let den = c.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
        let mut num: Vec<BigInt> = c.iter().map(|q| q.numer() * (&den / q.denom())).collect();
        num.resize(n, BigInt::zero());
        Self::normalized(num, den)
    }

    pub(crate) fn to_rationals(&self) -> Vec<BigRational> {
        self.num.iter().map(|a| BigRational::new(a.clone(), self.den.clone())).collect()
    }

    fn normalized(mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if num.iter().all(Zero::is_zero) {
            return QPoly { num, den: BigInt::one() };
        }
        if !den.is_one() {
            let mut g = den.clone();
            for a in &num {
                if g.is_one() {
                    break;
                }
                if !a.is_zero() {
                    g = g.gcd(a);
                }
            }
            if !g.is_one() {
                num.iter_mut().for_each(|a| *a /= &g);
                den /= &g;
            }
        }
        if den.sign() == Sign::Minus {
            num.iter_mut().for_each(|a| *a = -&*a);
            den = -den;
        }
        QPoly { num, den }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub(crate) fn order(&self) -> Option<usize> {
        self.num.iter().position(|a| !a.is_zero())
    }

    fn combine(&self, other: &Self, sub: bool) -> Self {
        let op = |a: &BigInt, b: &BigInt| if sub { a - b } else { a + b };
        if self.den == other.den {
            let num = self.num.iter().zip(&other.num).map(|(a, b)| op(a, b)).collect();
            return Self::normalized(num, self.den.clone());
        }
        let num = self.num.iter().zip(&other.num).map(|(a, b)| op(&(a * &other.den), &(b * &self.den))).collect();
        Self::normalized(num, &self.den * &other.den)
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub(crate) fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub(crate) fn neg(&self) -> Self {
        QPoly { num: self.num.iter().map(|a| -a).collect(), den: self.den.clone() }
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        let n = self.num.len();
        let mut num = vec![BigInt::zero(); n];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    num[i + j] += a * b;
                }
            }
        }
        Self::normalized(num, &self.den * &other.den)
    }

    /// Caller guarantees a nonzero constant term.
    pub(crate) fn inv(&self) -> Self {
        let n = self.num.len();
        Self::from_rationals(&x_inv(&Rationals, &self.to_rationals(), n), n)
    }

    pub(crate) fn truncate(&self, k: usize) -> Self {
        Self::normalized(self.num[..k].to_vec(), self.den.clone())
    }
}
