#![allow(dead_code)]

use posflag::exact::rational::int;
use posflag::{Poly, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A polynomial in `Q[x]_{<= bound}` with integer coefficients in `[-5, 5]`.
pub fn random_poly<R: Rng>(rng: &mut R, bound: usize) -> Poly {
    let coeffs: Vec<Rational> = (0..=bound).map(|_| int(rng.gen_range(-5..=5))).collect();
    Poly::with_bound(coeffs, bound).expect("degree within bound")
}

pub fn same_coeffs(a: &Poly, b: &Poly) -> bool {
    a.coeffs() == b.coeffs()
}
