mod common;

use common::{random_poly, rng};
use num_traits::Zero;
use posflag::exact::rational::int;
use posflag::grassmann::pairing;
use posflag::sample::random_subspace;
use posflag::schubert::{gamma_jet, intersects_nontrivially, rnc_span, zeros_space};
use posflag::{perp, plucker_coordinates, wronskian_from_pluckers, PointMultiset, Poly, ProjPoint, SubspaceRep};
use proptest::prelude::*;
use rand::Rng;

/// A multiset of total size `size` with points in `{-3, ..., 3, inf}`.
fn random_multiset<R: Rng>(r: &mut R, size: usize) -> PointMultiset {
    let mut entries: Vec<(ProjPoint, usize)> = Vec::new();
    let mut left = size;
    while left > 0 {
        let m = r.gen_range(1..=left);
        let p = match r.gen_range(-3..=4) {
            4 => ProjPoint::Infinity,
            v => ProjPoint::Finite(int(v)),
        };
        match entries.iter_mut().find(|(q, _)| *q == p) {
            Some((_, mult)) => *mult += m,
            None => entries.push((p, m)),
        }
        left -= m;
    }
    PointMultiset::new(entries).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn perp_of_a_span_is_a_zero_space(seed in any::<u64>(), n in 2usize..=6, size_raw in 1usize..6) {
        let size = 1 + (size_raw - 1) % (n - 1);
        let x = random_multiset(&mut rng(seed), size);
        let span = rnc_span(n, &x).unwrap();
        let zeros = zeros_space(n, &x.negated()).unwrap();
        prop_assert!(plucker_coordinates(&perp(&span)).is_proportional(&plucker_coordinates(&zeros)));
    }

    #[test]
    fn pairing_with_jets_evaluates_derivatives(seed in any::<u64>(), n in 1usize..=6, x in -4i64..=4, j_raw in 0usize..6) {
        let j = j_raw % n;
        let f = random_poly(&mut rng(seed), n - 1);
        let g = gamma_jet(n, &ProjPoint::Finite(int(x)), j).unwrap();
        let lhs = pairing(&g, &f.padded_coeffs(n)).unwrap();
        let sign = if (n - j - 1) % 2 == 0 { int(1) } else { int(-1) };
        prop_assert_eq!(lhs, sign * f.nth_derivative(j).eval(&int(-x)));
    }

    #[test]
    fn schubert_conditions_are_dual(seed in any::<u64>(), n in 2usize..=6, k_raw in 1usize..6) {
        let k = 1 + (k_raw - 1) % (n - 1);
        let mut r = rng(seed);
        let v = random_subspace(&mut r, n, k);
        let x = random_multiset(&mut r, k);
        let a = intersects_nontrivially(&perp(&v), &rnc_span(n, &x).unwrap()).unwrap();
        let b = intersects_nontrivially(&v, &zeros_space(n, &x.negated()).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn osculating_condition_is_a_wronskian_zero(seed in any::<u64>(), n in 2usize..=6, k_raw in 1usize..6, x in -3i64..=3, planted in any::<bool>()) {
        let k = 1 + (k_raw - 1) % (n - 1);
        let mut r = rng(seed);
        let v = if planted {
            // one basis vector vanishing to order k at -x forces the condition
            let mut polys = random_subspace(&mut r, n, k).polys();
            let cofactor = random_poly(&mut r, n - 1 - k);
            let f = &Poly::linear_factor(&int(-x)).pow(k) * &cofactor;
            if f.is_zero() {
                return Ok(());
            }
            polys[0] = f.bounded(n - 1).unwrap();
            match SubspaceRep::from_polys(n, &polys) {
                Ok(v) => v,
                Err(_) => return Ok(()),
            }
        } else {
            random_subspace(&mut r, n, k)
        };
        let osc = PointMultiset::new(vec![(ProjPoint::Finite(int(x)), k)]).unwrap();
        let meets = intersects_nontrivially(&perp(&v), &rnc_span(n, &osc).unwrap()).unwrap();
        let vanishes = wronskian_from_pluckers(&plucker_coordinates(&v)).eval(&int(-x)).is_zero();
        prop_assert_eq!(meets, vanishes);
        if planted {
            prop_assert!(meets);
        }
    }
}

#[test]
fn plane_span_fixture() {
    let x = PointMultiset::parse("0^2, 1").unwrap();
    let span = rnc_span(5, &x).unwrap();
    let zeros = zeros_space(5, &x.negated()).unwrap();
    assert!(perp(&span).same_subspace(&zeros));
    // Z_{-X}: multiples of x^2 (x + 1) of degree at most 4
    for p in zeros.polys() {
        assert!(p.coeff(0).is_zero() && p.coeff(1).is_zero());
        assert!(p.eval(&int(-1)).is_zero());
    }
}
