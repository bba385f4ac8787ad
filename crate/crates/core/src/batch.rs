//! Batch evaluation of independent randomized cases.
//!
//! Every case draws from its own ChaCha stream derived from `(seed, index)`,
//! so results are identical whichever [`Execution`] mode runs them. With the
//! `parallel` feature disabled, [`Execution::Parallel`] falls back to the
//! sequential path.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this build can actually run cases concurrently.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

/// The random stream for case `index` of a batch seeded with `seed`.
pub fn case_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Runs `count` cases and returns their results in index order.
pub fn run_cases<T, F>(exec: Execution, seed: u64, count: usize, case: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize, &mut ChaCha8Rng) -> T + Sync + Send,
{
    let one = |i: usize| case(i, &mut case_rng(seed, i as u64));
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..count).into_par_iter().map(one).collect()
        }
        _ => (0..count).map(one).collect(),
    }
}
