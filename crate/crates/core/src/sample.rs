//! Seeded generators for random subspaces and flags, including totally
//! positive and totally nonnegative ones built from shift matrices and
//! elementary Jacobi factors.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::actions::shift_rev_product;
use crate::exact::{ExactMatrix, Rational};
use crate::flag::FlagRep;
use crate::grassmann::SubspaceRep;

pub fn rational_in<R: Rng>(rng: &mut R, lo: i64, hi: i64, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    Rational::new(rng.gen_range(lo * den..=hi * den).into(), den.into())
}

pub fn int_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, lo: i64, hi: i64) -> ExactMatrix {
    let entries = (0..rows * cols)
        .map(|_| Rational::from_integer(rng.gen_range(lo..=hi).into()))
        .collect();
    ExactMatrix::new(rows, cols, entries).expect("sized")
}

/// A random element of `Gr(k, n)` with integer basis entries in `[-5, 5]`.
pub fn random_subspace<R: Rng>(rng: &mut R, n: usize, k: usize) -> SubspaceRep {
    loop {
        if let Ok(v) = SubspaceRep::new(int_matrix(rng, n, k, -5, 5)) {
            return v;
        }
    }
}

/// A dense integer flag with entries in `[-5, 5]`.
pub fn random_flag<R: Rng>(rng: &mut R, n: usize) -> FlagRep {
    loop {
        if let Ok(f) = FlagRep::new(int_matrix(rng, n, n, -5, 5)) {
            return f;
        }
    }
}

/// `I + a E_{i,i+1}` or `I + a E_{i+1,i}`.
fn jacobi_factor(n: usize, i: usize, upper: bool, a: Rational) -> ExactMatrix {
    let mut m = ExactMatrix::identity(n);
    if upper {
        m.set(i, i + 1, a);
    } else {
        m.set(i + 1, i, a);
    }
    m
}

/// Product of random elementary Jacobi factors with nonnegative parameters
/// and a positive diagonal: an invertible totally nonnegative matrix, often
/// with vanishing minors. Passing `sign_flip` makes one parameter negative,
/// which gives near misses.
pub fn jacobi_product<R: Rng>(rng: &mut R, n: usize, factors: usize, sign_flip: bool) -> ExactMatrix {
    let mut m = ExactMatrix::identity(n);
    for i in 0..n {
        m.set(i, i, Rational::from_integer(rng.gen_range(1..=3).into()));
    }
    let flip = if sign_flip && n > 1 { Some(rng.gen_range(0..factors.max(1))) } else { None };
    for f in 0..factors {
        if n < 2 {
            break;
        }
        let i = rng.gen_range(0..n - 1);
        let mut a = Rational::from_integer(rng.gen_range(0..=3).into());
        if flip == Some(f) {
            a = -(a + Rational::one());
        }
        let factor = jacobi_factor(n, i, rng.gen_bool(0.5), a);
        m = if rng.gen_bool(0.5) { m.mul(&factor) } else { factor.mul(&m) }.expect("square");
    }
    m
}

/// `rev ∘ Θ_s ∘ rev ∘ Θ_t` times a Jacobi product: a totally positive
/// matrix.
pub fn totally_positive_matrix<R: Rng>(rng: &mut R, n: usize) -> ExactMatrix {
    let choices = [Rational::one(), Rational::from_integer(2.into()), Rational::new(1.into(), 2.into())];
    let s = choices.choose(rng).unwrap().clone();
    let t = choices.choose(rng).unwrap().clone();
    let factors = rng.gen_range(0..=n);
    shift_rev_product(n, &s, &t)
        .mul(&jacobi_product(rng, n, factors, false))
        .expect("square")
}

/// Right multiplication by an upper-triangular integer matrix with nonzero
/// diagonal: the same flag with each level rescaled, possibly by a negative
/// factor.
pub fn obfuscate<R: Rng>(rng: &mut R, basis: &ExactMatrix) -> ExactMatrix {
    let n = basis.cols();
    let mut u = ExactMatrix::zeros(n, n);
    for i in 0..n {
        let d = rng.gen_range(1..=2) * if rng.gen_bool(0.5) { 1 } else { -1 };
        u.set(i, i, Rational::from_integer(d.into()));
        for j in i + 1..n {
            u.set(i, j, Rational::from_integer(rng.gen_range(-2..=2).into()));
        }
    }
    basis.mul(&u).expect("square")
}

/// Flag families for exercising both sides of the positivity tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlagFamily {
    Generic,
    TotallyPositive,
    TotallyNonnegative,
    NearMiss,
}

pub const FLAG_FAMILIES: [FlagFamily; 4] = [
    FlagFamily::Generic,
    FlagFamily::TotallyPositive,
    FlagFamily::TotallyNonnegative,
    FlagFamily::NearMiss,
];

/// A random flag of the given family, basis obfuscated by a random
/// upper-triangular factor.
pub fn family_flag<R: Rng>(rng: &mut R, n: usize, family: FlagFamily) -> FlagRep {
    let m = match family {
        FlagFamily::Generic => return random_flag(rng, n),
        FlagFamily::TotallyPositive => totally_positive_matrix(rng, n),
        FlagFamily::TotallyNonnegative => {
            let factors = rng.gen_range(0..=2 * n);
            jacobi_product(rng, n, factors, false)
        }
        FlagFamily::NearMiss => {
            let factors = rng.gen_range(1..=2 * n);
            jacobi_product(rng, n, factors, true)
        }
    };
    FlagRep::new(obfuscate(rng, &m)).expect("product of invertible matrices")
}

/// Random plausibly nonzero rational, never zero.
pub fn nonzero_rational<R: Rng>(rng: &mut R, lo: i64, hi: i64, max_den: i64) -> Rational {
    loop {
        let q = rational_in(rng, lo, hi, max_den);
        if !q.is_zero() {
            return q;
        }
    }
}
