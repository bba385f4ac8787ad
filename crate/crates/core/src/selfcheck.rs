//! Built-in invariant suites on small random instances, run by the
//! `selfcheck` subcommand.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::batch::{run_cases, Execution};
use crate::error::Result;
use crate::gen::{self, Families};
use crate::poly::Poly;
use crate::resultant::{cofactors, resultant, sylvester};
use crate::ring::LocalRing;
use crate::series::TruncatedSeries;
use crate::weierstrass::{divide, prepare};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfcheckReport {
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
}

impl SelfcheckReport {
    pub fn failed(&self) -> usize {
        self.suites.iter().map(|s| s.failed).sum()
    }

    pub fn passed(&self) -> usize {
        self.suites.iter().map(|s| s.cases - s.failed).sum()
    }
}

type Case = fn(&mut ChaCha8Rng) -> Result<bool>;

const SUITES: [(&str, Case); 7] = [
    ("unit_inverse", unit_inverse),
    ("series_inverse", series_inverse),
    ("division_identity", division_identity),
    ("preparation", preparation),
    ("resultant_vs_sylvester", resultant_vs_sylvester),
    ("mod_f_invariance", mod_f_invariance),
    ("cofactor_identity", cofactor_identity),
];

pub fn run(seed: u64, cases: usize, exec: Execution) -> SelfcheckReport {
    let suites = SUITES
        .iter()
        .enumerate()
        .map(|(k, (name, case))| {
            let suite_seed = seed.wrapping_add((k as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let outcomes = run_cases(exec, suite_seed, cases, |_, rng| matches!(case(rng), Ok(true)));
            SuiteReport { name, cases, failed: outcomes.iter().filter(|ok| !**ok).count() }
        })
        .collect();
    SelfcheckReport { seed, suites }
}

fn small_ring(rng: &mut ChaCha8Rng) -> LocalRing {
    gen::random_ring(rng, Families::All, 1..=4)
}

fn unit_inverse(rng: &mut ChaCha8Rng) -> Result<bool> {
    let ring = small_ring(rng);
    let x = ring.random_elem(rng);
    if x.is_unit() == x.in_ideal_power(1) {
        return Ok(false);
    }
    let u = ring.random_unit(rng);
    Ok((&u * &u.invert_unit()?).is_one())
}

fn series_inverse(rng: &mut ChaCha8Rng) -> Result<bool> {
    let ring = small_ring(rng);
    let m = rng.gen_range(1..=10);
    let f = gen::random_unit_series(rng, &ring, m);
    Ok(f.try_mul(&f.invert()?)? == TruncatedSeries::one(ring, m)?)
}

fn division_identity(rng: &mut ChaCha8Rng) -> Result<bool> {
    let ring = small_ring(rng);
    let d = rng.gen_range(1..=3);
    let m = (ring.nilpotence() as usize + 2) * d;
    let f = gen::random_normal_series(rng, &ring, d, m);
    let g = gen::random_series(rng, &ring, m);
    let div = divide(&g, &f)?;
    let c = TruncatedSeries::from_poly(div.remainder(), m - d)?;
    let lhs = div.quotient().try_mul(&f)?.try_add(&c)?;
    Ok(lhs == g.truncate_to(m - d)?)
}

fn preparation(rng: &mut ChaCha8Rng) -> Result<bool> {
    let ring = small_ring(rng);
    let d = rng.gen_range(0..=3);
    let m = (ring.nilpotence() as usize + 2) * d.max(1);
    let f = gen::random_normal_series(rng, &ring, d, m);
    let prep = prepare(&f)?;
    let pv = TruncatedSeries::from_poly(prep.polynomial(), m - d)?.try_mul(prep.unit())?;
    let lead = f.coeff(d);
    Ok(pv == f.truncate_to(m - d)?
        && prep.tail().iter().all(|q| q.in_ideal_power(1))
        && (prep.unit().coeff(0) - lead).in_ideal_power(1))
}

fn resultant_vs_sylvester(rng: &mut ChaCha8Rng) -> Result<bool> {
    let ring = small_ring(rng);
    let d = rng.gen_range(1..=3);
    let m = (ring.nilpotence() as usize + 2) * d;
    let p = gen::random_weierstrass_poly(rng, &ring, d);
    let len = rng.gen_range(1..=2 * d + 1);
    let g = gen::random_poly(rng, &ring, len);
    let (_, g_mod) = g.div_rem_monic(&p)?;
    let res = resultant(&TruncatedSeries::from_poly(&p, m)?, &TruncatedSeries::from_poly(&g, m)?)?;
    Ok(res == sylvester(&p, &g_mod, d, d.saturating_sub(1))?)
}

fn mod_f_invariance(rng: &mut ChaCha8Rng) -> Result<bool> {
    let ring = small_ring(rng);
    let d = rng.gen_range(1..=3);
    let m = (ring.nilpotence() as usize + 2) * d;
    let f = gen::random_normal_series(rng, &ring, d, m);
    let g = gen::random_series(rng, &ring, m);
    let h = gen::random_series(rng, &ring, m);
    let shifted = g.try_add(&h.try_mul(&f)?)?;
    Ok(resultant(&f, &g)? == resultant(&f, &shifted)?)
}

fn cofactor_identity(rng: &mut ChaCha8Rng) -> Result<bool> {
    let ring = small_ring(rng);
    let d = rng.gen_range(1..=3);
    let m = (ring.nilpotence() as usize + 2) * d;
    let f = gen::random_normal_series(rng, &ring, d, m);
    let g = gen::random_series(rng, &ring, m);
    let pair = cofactors(&f, &g)?;
    let combo = pair.u.try_mul(&f)?.try_add(&pair.v.try_mul(&g)?)?;
    let res = TruncatedSeries::from_poly(&Poly::new(ring, vec![pair.res.clone()])?, pair.cert_prec)?;
    Ok(combo == res && pair.res == resultant(&f, &g)?)
}
