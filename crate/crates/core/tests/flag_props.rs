mod common;

use common::rng;
use num_traits::Zero;
use posflag::actions::apply_shift;
use posflag::exact::rational::int;
use posflag::grassmann::maximal_minors;
use posflag::sample::{family_flag, int_matrix, random_subspace, FLAG_FAMILIES};
use posflag::subsets::{initial, terminal};
use posflag::{
    classify_positivity, flag_positivity_plucker, flag_positivity_wronskian, plucker_coordinates, wronskian_det, Mode,
    PositivityTag, SubspaceRep,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn plucker_and_wronskian_verdicts_agree(seed in any::<u64>(), n in 2usize..=5, fam in 0usize..4) {
        let f = family_flag(&mut rng(seed), n, FLAG_FAMILIES[fam]);
        let plucker = flag_positivity_plucker(&f).tag;
        let tnn = flag_positivity_wronskian(&f, Mode::Nonnegative);
        let tp = flag_positivity_wronskian(&f, Mode::Positive);
        prop_assert_eq!(plucker >= PositivityTag::TotallyNonnegative, tnn.passes());
        prop_assert_eq!(plucker == PositivityTag::TotallyPositive, tp.passes());
        prop_assert_eq!(plucker, tp.verdict);
    }

    #[test]
    fn boundary_minors_match_wronskian_ends(seed in any::<u64>(), n in 2usize..=6, k_raw in 1usize..6) {
        let k = 1 + (k_raw - 1) % (n - 1);
        let mut r = rng(seed);
        // entries in {-1, 0, 1} make vanishing boundary minors common
        let w = loop {
            if let Ok(w) = SubspaceRep::new(int_matrix(&mut r, n, k, -1, 1)) {
                break w;
            }
        };
        let p = maximal_minors(&w);
        let wr = wronskian_det(&w.polys()).unwrap();
        prop_assert_eq!(p.get(&initial(k)).is_zero(), wr.coeff(0).is_zero());
        prop_assert_eq!(p.get(&terminal(n, k)).is_zero(), wr.degree() < Some(k * (n - k)));
    }
}

#[test]
fn large_shifts_make_subspaces_positive() {
    let mut r = rng(5);
    let mut tried = 0;
    while tried < 60 {
        let n = 2 + tried % 5;
        let k = 1 + tried % (n - 1);
        let v = random_subspace(&mut r, n, k);
        if maximal_minors(&v).get(&terminal(n, k)).is_zero() {
            continue;
        }
        tried += 1;
        let hit = (0..=10).any(|e| {
            let t = int(1 << e);
            classify_positivity(&plucker_coordinates(&apply_shift(&v, &t))).tag == PositivityTag::TotallyPositive
        });
        assert!(hit, "no shift up to 2^10 made {:?} positive", v.basis());
    }
}
