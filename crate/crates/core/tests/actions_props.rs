mod common;

use common::rng;
use num_traits::{One, Signed, Zero};
use posflag::actions::{
    apply_moebius, derivative_matrix, lgv_path_count, moebius_subspace, rev, rev_subspace, shift_matrix,
    shift_rev_product, Moebius,
};
use posflag::exact::rational::{factorial, frac, int, pow};
use posflag::sample::{nonzero_rational, random_subspace};
use posflag::subsets::{gale_le, initial, k_subsets, sum};
use posflag::{beta, wronskian_det, ExactMatrix, Rational};
use proptest::prelude::*;
use rand::Rng;

fn random_moebius<R: Rng>(r: &mut R) -> Moebius {
    // products of shifts and an inversion x -> -1/x, with occasional scaling
    let a = nonzero_rational(r, -3, 3, 2);
    let scale = Moebius::new(a.clone(), int(0), int(0), Rational::one() / a).unwrap();
    let inv = Moebius::new(int(0), int(-1), int(1), int(0)).unwrap();
    let s = Moebius::shift(posflag::sample::rational_in(r, -3, 3, 2));
    let t = Moebius::shift(posflag::sample::rational_in(r, -3, 3, 2));
    s.compose(&inv).compose(&t).compose(&scale)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wronskian_is_moebius_equivariant(seed in any::<u64>(), n in 2usize..=5, k_raw in 1usize..5) {
        let k = 1 + (k_raw - 1) % (n - 1);
        let mut r = rng(seed);
        let v = random_subspace(&mut r, n, k);
        let alpha = random_moebius(&mut r);
        let moved = moebius_subspace(&alpha, &v).unwrap();
        let lhs = wronskian_det(&moved.polys()).unwrap();
        let w = wronskian_det(&v.polys()).unwrap();
        let rhs = apply_moebius(&alpha, &w, k * (n - k) + 1).unwrap();
        prop_assert!(lhs.is_proportional(&rhs));
    }

    #[test]
    fn wronskian_commutes_with_rev(seed in any::<u64>(), n in 2usize..=6, k_raw in 1usize..6) {
        let k = 1 + (k_raw - 1) % (n - 1);
        let v = random_subspace(&mut rng(seed), n, k);
        let lhs = wronskian_det(&rev_subspace(&v).polys()).unwrap();
        let rhs = rev(&wronskian_det(&v.polys()).unwrap(), k * (n - k) + 1).unwrap();
        prop_assert!(lhs.is_proportional(&rhs));
    }
}

#[test]
fn shift_minors_count_paths() {
    for n in 1..=6 {
        for t in [int(1), int(2), frac(1, 3)] {
            let m = shift_matrix(n, &t);
            for k in 1..=n {
                for i in k_subsets(n, k) {
                    for j in k_subsets(n, k) {
                        let minor = m.minor(&i, &j).unwrap();
                        if !gale_le(&i, &j) {
                            assert!(minor.is_zero());
                            continue;
                        }
                        let c = lgv_path_count(&i, &j, n).unwrap();
                        let e = sum(&j) - sum(&i);
                        assert_eq!(minor, Rational::from_integer(c) * pow(&t, e), "n={n} I={i:?} J={j:?}");
                    }
                }
                for j in k_subsets(n, k) {
                    assert_eq!(lgv_path_count(&initial(k), &j, n).unwrap(), beta(&j));
                }
            }
        }
    }
}

#[test]
fn shift_rev_products_are_totally_positive() {
    for n in 1..=5 {
        for s in [int(1), int(2)] {
            for t in [int(1), int(2)] {
                let m = shift_rev_product(n, &s, &t);
                for k in 1..=n {
                    for i in k_subsets(n, k) {
                        for j in k_subsets(n, k) {
                            assert!(m.minor(&i, &j).unwrap().is_positive());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn shift_is_a_truncated_exponential() {
    for n in 1..=7 {
        for t in [int(1), int(-2), frac(3, 5)] {
            let td = derivative_matrix(n);
            let mut term = ExactMatrix::identity(n);
            let mut acc = ExactMatrix::zeros(n, n);
            for i in 0..n {
                let scale = pow(&t, i) / Rational::from_integer(factorial(i as u64));
                for a in 0..n {
                    for b in 0..n {
                        let v = acc.get(a, b) + term.get(a, b) * &scale;
                        acc.set(a, b, v);
                    }
                }
                term = term.mul(&td).unwrap();
            }
            assert_eq!(acc, shift_matrix(n, &t));
        }
    }
}
