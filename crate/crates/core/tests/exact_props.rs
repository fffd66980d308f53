mod common;

use common::{random_poly, rng, same_coeffs};
use num_traits::Zero;
use posflag::exact::rational::{frac, int};
use posflag::exact::sturm::root_count_with_multiplicity;
use posflag::{descartes_sign_changes, sturm_root_count, wronskian_det, ExactMatrix, Poly, ProjInterval, Rational};
use proptest::prelude::*;
use rand::Rng;

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    posflag::subsets::k_subsets(n, k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wronskian_is_multilinear_and_alternating(seed in any::<u64>(), k in 1usize..=4, a in -4i64..=4, b in -4i64..=4) {
        let mut r = rng(seed);
        let bound = 5;
        let mut fs: Vec<Poly> = (0..k).map(|_| random_poly(&mut r, bound)).collect();
        let g = random_poly(&mut r, bound);
        let w = wronskian_det(&fs).unwrap();

        let mut mixed = fs.clone();
        mixed[0] = &fs[0].scale(&int(a)) + &g.scale(&int(b));
        let mixed = mixed.iter().map(|p| p.clone().bounded(bound).unwrap()).collect::<Vec<_>>();
        let mut with_g = fs.clone();
        with_g[0] = g;
        let lhs = wronskian_det(&mixed).unwrap();
        let rhs = &w.scale(&int(a)) + &wronskian_det(&with_g).unwrap().scale(&int(b));
        prop_assert!(same_coeffs(&lhs, &rhs));

        if k >= 2 {
            let i = r.gen_range(0..k);
            let j = (i + 1 + r.gen_range(0..k - 1)) % k;
            fs.swap(i, j);
            let swapped = wronskian_det(&fs).unwrap();
            prop_assert!(same_coeffs(&swapped, &w.scale(&int(-1))));
        }
    }

    #[test]
    fn sturm_counts_add_over_adjacent_intervals(
        roots in prop::collection::vec((-12i64..=12, 1i64..=3), 1..6),
        extra in 0i64..=3,
        cut in -25i64..=25,
    ) {
        let rs: Vec<Rational> = roots.iter().map(|&(p, q)| frac(p, q)).collect();
        // times x^2 + extra + 1, which has no real roots
        let p = &Poly::from_roots(&rs) * &Poly::from_i64(&[extra + 1, 0, 1]);
        let c = frac(cut, 2);
        prop_assume!(!p.eval(&c).is_zero());
        let (lo, hi) = (int(-20), int(20));
        let whole = sturm_root_count(&p, &ProjInterval::open(lo.clone(), hi.clone()).unwrap(), None).unwrap();
        let left = sturm_root_count(&p, &ProjInterval::open(lo, c.clone()).unwrap(), None).unwrap();
        let right = sturm_root_count(&p, &ProjInterval::open(c, hi).unwrap(), None).unwrap();
        prop_assert_eq!(left + right, whole);

        let mut distinct = rs.clone();
        distinct.sort();
        distinct.dedup();
        prop_assert_eq!(sturm_root_count(&p, &ProjInterval::real_line(), Some(p.degree().unwrap())).unwrap(), distinct.len());
        prop_assert_eq!(root_count_with_multiplicity(&p, &ProjInterval::real_line(), Some(p.degree().unwrap())).unwrap(), rs.len());
    }

    #[test]
    fn descartes_bounds_distinct_positive_roots(roots in prop::collection::vec((-9i64..=9, 1i64..=3), 1..7)) {
        let rs: Vec<Rational> = roots.iter().map(|&(p, q)| frac(p, q)).collect();
        let p = Poly::from_roots(&rs);
        let positive = sturm_root_count(&p, &ProjInterval::positive_open(), None).unwrap();
        prop_assert!(descartes_sign_changes(p.coeffs()) >= positive);
    }

    #[test]
    fn cauchy_binet_on_4x4(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = posflag::sample::int_matrix(&mut r, 4, 4, -4, 4);
        let b = posflag::sample::int_matrix(&mut r, 4, 4, -4, 4);
        let ab = a.mul(&b).unwrap();
        for k in 1..=4 {
            let sets = subsets(4, k);
            let i = &sets[r.gen_range(0..sets.len())];
            let j = &sets[r.gen_range(0..sets.len())];
            let sum = sets.iter().fold(Rational::zero(), |acc, s| {
                acc + a.minor(i, s).unwrap() * b.minor(s, j).unwrap()
            });
            prop_assert_eq!(ab.minor(i, j).unwrap(), sum);
        }
    }
}

#[test]
fn full_matrix_determinant_is_multiplicative() {
    let mut r = rng(3);
    for _ in 0..50 {
        let a: ExactMatrix = posflag::sample::int_matrix(&mut r, 5, 5, -3, 3);
        let b = posflag::sample::int_matrix(&mut r, 5, 5, -3, 3);
        assert_eq!(a.mul(&b).unwrap().det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }
}
