//! Exact Weierstrass division and preparation for henselian pairs, and the
//! henselian resultant, over local rings with nilpotent maximal ideal.
//!
//! Coefficients live in `Z/p^N` or `k[x]/(x^N)` ([`ring`]). An element of the
//! henselized series ring is handled through its image in `R[[t]]/(t^M)`
//! ([`series`]). On top of that sit the division and preparation theorems
//! ([`weierstrass`]) and the norm-based resultant with its Sylvester
//! cross-check and elimination cofactors ([`resultant`]).
//!
//! ```
//! use hensel_weier::{ring::LocalRing, series::TruncatedSeries, weierstrass};
//!
//! let r: LocalRing = "p-adic:p=5,N=2".parse().unwrap();
//! let f = TruncatedSeries::from_ints(r, &[5, 0, 1, 5], 8).unwrap();
//! let prep = weierstrass::prepare(&f).unwrap();
//! assert_eq!(prep.polynomial().coeffs(), &[r.from_int(5), r.zero(), r.one()]);
//! ```

pub mod batch;
pub mod cli;
pub mod error;
pub mod gen;
pub mod matrix;
pub mod poly;
pub mod resultant;
pub mod ring;
pub mod selfcheck;
pub mod series;
pub mod weierstrass;

pub use error::{Error, Result};
