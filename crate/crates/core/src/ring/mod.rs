//! Local coefficient rings `(R, I)` with `I^N = 0`.
//!
//! Two families are supported: `Z/p^N` with `I = (p)`, and `k[x]/(x^N)` with
//! `I = (x)` over `k = Q` or `k = F_p`. Both are local with nilpotent maximal
//! ideal, hence henselian pairs, and every element has a finite exact
//! canonical form. An element outside `I` is a unit.

mod base;
mod qpoly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use base::PrimeField;
use qpoly::QPoly;

pub(crate) use base::mod_inverse;

/// Largest accepted `p^N`; keeps sums in `u64` and products in `u128`.
const MAX_MODULUS: u64 = 1 << 62;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseField {
    Rationals,
    PrimeField(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    /// `Z/p^N`, `I = (p)`.
    PAdic { p: u64 },
    /// `k[x]/(x^N)`, `I = (x)`.
    TruncatedSeries { base: BaseField },
}

/// The pair `(R, I)` together with the nilpotence exponent `N` of `I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LocalRing {
    kind: RingKind,
    n: u32,
    /// `p^N` for the p-adic family, unused otherwise.
    modulus: u64,
}

impl LocalRing {
    pub fn p_adic(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        if n == 0 {
            return Err(Error::InvalidRing("N must be at least 1".into()));
        }
        let modulus = p
            .checked_pow(n)
            .filter(|m| *m <= MAX_MODULUS)
            .ok_or_else(|| Error::InvalidRing(format!("{p}^{n} exceeds 2^62")))?;
        Ok(LocalRing { kind: RingKind::PAdic { p }, n, modulus })
    }

    pub fn truncated_series(base: BaseField, n: u32) -> Result<Self> {
        if let BaseField::PrimeField(p) = base {
            if !is_prime(p) || p > MAX_MODULUS {
                return Err(Error::InvalidRing(format!("{p} is not an admissible prime")));
            }
        }
        if n == 0 {
            return Err(Error::InvalidRing("N must be at least 1".into()));
        }
        Ok(LocalRing { kind: RingKind::TruncatedSeries { base }, n, modulus: 0 })
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    /// Nilpotence exponent `N`: `I^N = 0` and `I^(N-1) != 0`.
    pub fn nilpotence(&self) -> u32 {
        self.n
    }

    /// `p^N` for the p-adic family.
    pub fn modulus(&self) -> Option<u64> {
        match self.kind {
            RingKind::PAdic { .. } => Some(self.modulus),
            RingKind::TruncatedSeries { .. } => None,
        }
    }

    /// The same family with a smaller nilpotence exponent; the target of the
    /// reduction map `R -> R/I^n`.
    pub fn with_nilpotence(&self, n: u32) -> Result<Self> {
        if n == 0 || n > self.n {
            return Err(Error::InvalidRing(format!("cannot reduce N={} to N={n}", self.n)));
        }
        match self.kind {
            RingKind::PAdic { p } => LocalRing::p_adic(p, n),
            RingKind::TruncatedSeries { base } => LocalRing::truncated_series(base, n),
        }
    }

    pub fn zero(&self) -> RingElem {
        self.from_int(0)
    }

    pub fn one(&self) -> RingElem {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> RingElem {
        let repr = match self.kind {
            RingKind::PAdic { .. } => Repr::Residue(reduce_signed(v as i128, self.modulus)),
            RingKind::TruncatedSeries { base: BaseField::PrimeField(p) } => {
                let mut c = vec![0; self.len()];
                c[0] = reduce_signed(v as i128, p);
                Repr::Fp(c)
            }
            RingKind::TruncatedSeries { base: BaseField::Rationals } => {
                Repr::Rat(QPoly::constant(BigInt::from(v), self.len()))
            }
        };
        RingElem { ring: *self, repr }
    }

    /// A generator of `I`: `p` or `x`.
    pub fn uniformizer(&self) -> RingElem {
        match self.kind {
            RingKind::PAdic { p } => self.from_int(p as i64),
            RingKind::TruncatedSeries { base } => {
                let mut coeffs = vec![0i64; self.len()];
                if coeffs.len() > 1 {
                    coeffs[1] = 1;
                }
                match base {
                    BaseField::PrimeField(_) => self.from_fp_coeffs(coeffs.iter().map(|&c| c as u64).collect()),
                    BaseField::Rationals => {
                        self.from_rational_coeffs(coeffs.into_iter().map(base::rational_from_int).collect())
                    }
                }
                .expect("uniformizer coefficients fit the ring")
            }
        }
    }

    /// Residue `v mod p^N` (p-adic family only).
    pub fn from_residue(&self, v: u64) -> Result<RingElem> {
        match self.kind {
            RingKind::PAdic { .. } => Ok(RingElem { ring: *self, repr: Repr::Residue(v % self.modulus) }),
            _ => Err(Error::Parse(format!("ring {self} does not take integer residues"))),
        }
    }

    /// Arbitrary-size integer, reduced into the ring (any family).
    pub fn from_bigint(&self, v: &BigInt) -> RingElem {
        match self.kind {
            RingKind::PAdic { .. } => {
                let r = v.mod_floor(&BigInt::from(self.modulus));
                RingElem {
                    ring: *self,
                    repr: Repr::Residue(u64::try_from(r).expect("residue below modulus")),
                }
            }
            RingKind::TruncatedSeries { base: BaseField::PrimeField(p) } => {
                let r = v.mod_floor(&BigInt::from(p));
                let mut c = vec![0; self.len()];
                c[0] = u64::try_from(r).expect("residue below p");
                RingElem { ring: *self, repr: Repr::Fp(c) }
            }
            RingKind::TruncatedSeries { base: BaseField::Rationals } => {
                RingElem { ring: *self, repr: Repr::Rat(QPoly::constant(v.clone(), self.len())) }
            }
        }
    }

    /// `sum c_i x^i` over `F_p`; missing trailing coefficients are zero.
    pub fn from_fp_coeffs(&self, mut coeffs: Vec<u64>) -> Result<RingElem> {
        match self.kind {
            RingKind::TruncatedSeries { base: BaseField::PrimeField(p) } => {
                self.fit_len(coeffs.len())?;
                coeffs.resize(self.len(), 0);
                coeffs.iter_mut().for_each(|c| *c %= p);
                Ok(RingElem { ring: *self, repr: Repr::Fp(coeffs) })
            }
            _ => Err(Error::Parse(format!("ring {self} does not take F_p coefficient arrays"))),
        }
    }

    /// `sum c_i x^i` over `Q`; missing trailing coefficients are zero.
    pub fn from_rational_coeffs(&self, coeffs: Vec<BigRational>) -> Result<RingElem> {
        match self.kind {
            RingKind::TruncatedSeries { base: BaseField::Rationals } => {
                self.fit_len(coeffs.len())?;
                Ok(RingElem { ring: *self, repr: Repr::Rat(QPoly::from_rationals(&coeffs, self.len())) })
            }
            _ => Err(Error::Parse(format!("ring {self} does not take rational coefficient arrays"))),
        }
    }

    fn fit_len(&self, len: usize) -> Result<()> {
        if len > self.len() {
            Err(Error::Parse(format!("{len} coefficients exceed N={} in {self}", self.n)))
        } else {
            Ok(())
        }
    }

    fn len(&self) -> usize {
        self.n as usize
    }

    /// Uniform element of the ring. Over `Q` there is no uniform law; each
    /// coefficient is `a/b` with `a` uniform in `[-9, 9]` and `b` in `[1, 4]`.
    pub fn random_elem<G: Rng + ?Sized>(&self, rng: &mut G) -> RingElem {
        let repr = match self.kind {
            RingKind::PAdic { .. } => Repr::Residue(rng.gen_range(0..self.modulus)),
            RingKind::TruncatedSeries { base: BaseField::PrimeField(p) } => {
                Repr::Fp((0..self.len()).map(|_| rng.gen_range(0..p)).collect())
            }
            RingKind::TruncatedSeries { base: BaseField::Rationals } => {
                let c: Vec<BigRational> = (0..self.len())
                    .map(|_| {
                        BigRational::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=4)))
                    })
                    .collect();
                Repr::Rat(QPoly::from_rationals(&c, self.len()))
            }
        };
        RingElem { ring: *self, repr }
    }

    /// Uniform element of `I` (a random multiple of the uniformizer).
    pub fn random_in_ideal<G: Rng + ?Sized>(&self, rng: &mut G) -> RingElem {
        &self.uniformizer() * &self.random_elem(rng)
    }

    /// Random unit: a random element with its class mod `I` forced nonzero.
    pub fn random_unit<G: Rng + ?Sized>(&self, rng: &mut G) -> RingElem {
        loop {
            let x = self.random_elem(rng);
            if x.is_unit() {
                return x;
            }
        }
    }
}

impl fmt::Display for LocalRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RingKind::PAdic { p } => write!(f, "p-adic:p={p},N={}", self.n),
            RingKind::TruncatedSeries { base: BaseField::Rationals } => write!(f, "tseries:base=Q,N={}", self.n),
            RingKind::TruncatedSeries { base: BaseField::PrimeField(p) } => {
                write!(f, "tseries:base=F{p},N={}", self.n)
            }
        }
    }
}

impl FromStr for LocalRing {
    type Err = Error;

    /// `p-adic:p=<prime>,N=<int>` or `tseries:base=Q|F<p>,N=<int>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRing(format!("cannot parse ring spec '{s}'"));
        let (family, params) = s.trim().split_once(':').ok_or_else(bad)?;
        let mut p = None;
        let mut n = None;
        let mut base = None;
        for kv in params.split(',') {
            let (k, v) = kv.split_once('=').ok_or_else(bad)?;
            match k.trim() {
                "p" => p = Some(v.trim().parse::<u64>().map_err(|_| bad())?),
                "N" => n = Some(v.trim().parse::<u32>().map_err(|_| bad())?),
                "base" => base = Some(v.trim().to_string()),
                _ => return Err(bad()),
            }
        }
        let n = n.ok_or_else(bad)?;
        match family.trim() {
            "p-adic" if base.is_none() => LocalRing::p_adic(p.ok_or_else(bad)?, n),
            "tseries" if p.is_none() => {
                let base = match base.ok_or_else(bad)?.as_str() {
                    "Q" => BaseField::Rationals,
                    b => BaseField::PrimeField(b.strip_prefix('F').and_then(|q| q.parse().ok()).ok_or_else(bad)?),
                };
                LocalRing::truncated_series(base, n)
            }
            _ => Err(bad()),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2u64;
    while q.saturating_mul(q) <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

fn reduce_signed(v: i128, m: u64) -> u64 {
    v.rem_euclid(m as i128) as u64
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Residue(u64),
    Fp(Vec<u64>),
    Rat(QPoly),
}

/// An element of a [`LocalRing`], always in canonical form: a residue in
/// `[0, p^N)`, or exactly `N` base-field coefficients (low degree first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElem {
    ring: LocalRing,
    repr: Repr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// Checked ring arithmetic; `Neg` ignores `y` apart from the ring check.
pub fn ring_arith(op: ArithOp, x: &RingElem, y: &RingElem) -> Result<RingElem> {
    Error::check_same_ring(&x.ring, &y.ring)?;
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Neg => -x,
    })
}

impl RingElem {
    pub fn ring(&self) -> &LocalRing {
        &self.ring
    }

    /// The integer residue, for the p-adic family.
    pub fn as_residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Residue(v) => Some(*v),
            _ => None,
        }
    }

    pub fn fp_coeffs(&self) -> Option<&[u64]> {
        match &self.repr {
            Repr::Fp(c) => Some(c),
            _ => None,
        }
    }

    pub fn rational_coeffs(&self) -> Option<Vec<BigRational>> {
        match &self.repr {
            Repr::Rat(c) => Some(c.to_rationals()),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Residue(v) => *v == 0,
            Repr::Fp(c) => c.iter().all(|v| *v == 0),
            Repr::Rat(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring.one()
    }

    /// Units are exactly the elements outside `I`.
    pub fn is_unit(&self) -> bool {
        self.ival() == 0
    }

    /// Largest `k <= N` with `self` in `I^k`; zero has valuation `N`.
    pub fn ival(&self) -> u32 {
        let n = self.ring.n;
        match &self.repr {
            Repr::Residue(v) => {
                let RingKind::PAdic { p } = self.ring.kind else { unreachable!() };
                if *v == 0 {
                    return n;
                }
                let (mut v, mut k) = (*v, 0);
                while v % p == 0 {
                    v /= p;
                    k += 1;
                }
                k
            }
            Repr::Fp(c) => c.iter().position(|v| *v != 0).map_or(n, |k| k as u32),
            Repr::Rat(c) => c.order().map_or(n, |k| k as u32),
        }
    }

    /// Whether `self` lies in `I^k`.
    pub fn in_ideal_power(&self, k: u32) -> bool {
        self.ival() >= k
    }

    /// Multiplicative inverse of a unit.
    pub fn invert_unit(&self) -> Result<RingElem> {
        if !self.is_unit() {
            return Err(Error::NotUnit(self.to_string()));
        }
        let n = self.ring.len();
        let repr = match (&self.repr, self.ring.kind) {
            (Repr::Residue(v), _) => {
                Repr::Residue(mod_inverse(*v, self.ring.modulus).expect("units are coprime to p"))
            }
            (Repr::Fp(c), RingKind::TruncatedSeries { base: BaseField::PrimeField(p) }) => {
                Repr::Fp(base::x_inv(&PrimeField(p), c, n))
            }
            (Repr::Rat(c), _) => Repr::Rat(c.inv()),
            _ => unreachable!("representation matches ring kind"),
        };
        Ok(RingElem { ring: self.ring, repr })
    }

    pub fn pow(&self, mut e: u64) -> RingElem {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Image under the reduction map `R -> R/I^n` of `target`, which must be
    /// the same family with a nilpotence exponent no larger than ours.
    pub fn reduce_to(&self, target: &LocalRing) -> Result<RingElem> {
        let same_family = match (self.ring.kind, target.kind) {
            (RingKind::PAdic { p }, RingKind::PAdic { p: q }) => p == q,
            (RingKind::TruncatedSeries { base: a }, RingKind::TruncatedSeries { base: b }) => a == b,
            _ => false,
        };
        if !same_family || target.n > self.ring.n {
            return Err(Error::RingMismatch { left: self.ring, right: *target });
        }
        let k = target.len();
        let repr = match &self.repr {
            Repr::Residue(v) => Repr::Residue(v % target.modulus),
            Repr::Fp(c) => Repr::Fp(c[..k].to_vec()),
            Repr::Rat(c) => Repr::Rat(c.truncate(k)),
        };
        Ok(RingElem { ring: *target, repr })
    }

    fn binary(&self, other: &RingElem, op: ArithOp) -> RingElem {
        assert_eq!(self.ring, other.ring, "ring mismatch in arithmetic");
        let n = self.ring.len();
        let repr = match (&self.repr, &other.repr) {
            (Repr::Residue(a), Repr::Residue(b)) => {
                let m = self.ring.modulus as u128;
                let (a, b) = (*a as u128, *b as u128);
                Repr::Residue(match op {
                    ArithOp::Add => (a + b) % m,
                    ArithOp::Sub => (a + m - b) % m,
                    ArithOp::Mul => (a * b) % m,
                    ArithOp::Neg => unreachable!(),
                } as u64)
            }
            (Repr::Fp(a), Repr::Fp(b)) => {
                let RingKind::TruncatedSeries { base: BaseField::PrimeField(p) } = self.ring.kind else {
                    unreachable!()
                };
                let f = PrimeField(p);
                Repr::Fp(match op {
                    ArithOp::Add => base::x_add(&f, a, b),
                    ArithOp::Sub => base::x_sub(&f, a, b),
                    ArithOp::Mul => base::x_mul(&f, a, b, n),
                    ArithOp::Neg => unreachable!(),
                })
            }
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(match op {
                ArithOp::Add => a.add(b),
                ArithOp::Sub => a.sub(b),
                ArithOp::Mul => a.mul(b),
                ArithOp::Neg => unreachable!(),
            }),
            _ => unreachable!("same ring implies same representation"),
        };
        RingElem { ring: self.ring, repr }
    }
}

impl Add for &RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        self.binary(rhs, ArithOp::Add)
    }
}

impl Sub for &RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        self.binary(rhs, ArithOp::Sub)
    }
}

impl Mul for &RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        self.binary(rhs, ArithOp::Mul)
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        let repr = match &self.repr {
            Repr::Residue(a) => Repr::Residue(if *a == 0 { 0 } else { self.ring.modulus - a }),
            Repr::Fp(a) => {
                let RingKind::TruncatedSeries { base: BaseField::PrimeField(p) } = self.ring.kind else {
                    unreachable!()
                };
                Repr::Fp(base::x_neg(&PrimeField(p), a))
            }
            Repr::Rat(a) => Repr::Rat(a.neg()),
        };
        RingElem { ring: self.ring, repr }
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn terms<T: fmt::Display>(f: &mut fmt::Formatter<'_>, c: &[T], nonzero: impl Fn(&T) -> bool) -> fmt::Result {
            let mut first = true;
            for (i, v) in c.iter().enumerate().filter(|(_, v)| nonzero(v)) {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                match i {
                    0 => write!(f, "{v}")?,
                    1 => write!(f, "({v})*x")?,
                    _ => write!(f, "({v})*x^{i}")?,
                }
            }
            if first {
                write!(f, "0")?;
            }
            Ok(())
        }
        match &self.repr {
            Repr::Residue(v) => write!(f, "{v}"),
            Repr::Fp(c) => terms(f, c, |v| *v != 0),
            Repr::Rat(c) => terms(f, &c.to_rationals(), |v| !v.is_zero()),
        }
    }
}
