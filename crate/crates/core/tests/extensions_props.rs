use proptest::prelude::*;
use supclose_core::arith;
use supclose_core::extensions::{
    semigroup_make, sg_analyze, sg_conductor, sg_denominator_ideal, zloc_analyze, zloc_ass_transfer,
    SemigroupExtension, ZLocExtension,
};
use supclose_core::zspec::ZIdeal;

fn coprime_pair() -> impl Strategy<Value = (u64, u64)> {
    (2u64..12, 2u64..12).prop_filter("coprime, a < b", |&(a, b)| a < b && arith::gcd_all([a, b]) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conductor_radical_is_the_maximal_ideal((a, b) in coprime_pair()) {
        let ext = SemigroupExtension::over_naturals(semigroup_make(&[a, b]).unwrap());
        let c = sg_conductor(&ext);
        prop_assert!(!c.contains(0));
        // every positive g in Γ has a multiple in the conductor
        for g in (1..=ext.truncation_bound()).filter(|&g| ext.small().contains(g)) {
            prop_assert!((1..=ext.truncation_bound() + 1).any(|k| c.contains(k * g)));
        }
        for n in ext.new_exponents() {
            let d = sg_denominator_ideal(&ext, n).unwrap();
            prop_assert!(d.radical(ext.small()).agrees_with(&ext.maximal_ideal(), ext.truncation_bound()));
        }
        let analysis = sg_analyze(&ext).unwrap();
        prop_assert!(analysis.support_matches_conductor);
        prop_assert!(analysis.crucial.is_some() && analysis.critical.is_some());
    }

    #[test]
    fn zloc_invariants(n in 1u64..=10_000) {
        let a = zloc_analyze(&ZLocExtension::new(n).unwrap());
        prop_assert_eq!(a.oda, ZIdeal(arith::radical(n)));
        let prime_power = arith::prime_power_base(n).is_some();
        prop_assert_eq!(a.crucial.is_some(), prime_power);
        prop_assert_eq!(a.critical.is_some(), prime_power);
        prop_assert_eq!(a.ass_chain, prime_power);
        if n > 1 {
            prop_assert_eq!(a.conductor, ZIdeal(0));
        }
    }

    #[test]
    fn ass_transfers_along_localization(n in 1u64..500, p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 17, 19])) {
        let ext = ZLocExtension::new(n).unwrap();
        prop_assume!(n % p != 0);
        let (over_z, image) = zloc_ass_transfer(&ext, p).unwrap();
        prop_assert_eq!(over_z, image);
    }
}
