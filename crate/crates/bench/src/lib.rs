//! Inputs shared by the benchmarks.

use posflag::sample::totally_positive_matrix;
use posflag::{FlagRep, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A totally positive flag in `Fl(n)`, fixed by `seed`.
pub fn tp_flag(n: usize, seed: u64) -> FlagRep {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    FlagRep::new(totally_positive_matrix(&mut rng, n)).expect("totally positive matrices are invertible")
}

/// The negative roots `-1, ..., -m`.
pub fn negative_roots(m: usize) -> Vec<Rational> {
    (1..=m as i64).map(|i| Rational::from_integer((-i).into())).collect()
}
