use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use supclose_core::{ideal_member, Ideal, Monomial, PolyRing, Polynomial};

fn ring() -> Arc<PolyRing> {
    PolyRing::rational(&["x", "y"])
}

fn poly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = Vec<(u32, u32, i64)>> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, -5i64..6), 1..=max_terms)
}

fn build(ring: &Arc<PolyRing>, terms: &[(u32, u32, i64)]) -> Polynomial {
    Polynomial::from_terms(
        ring,
        terms.iter().map(|&(a, b, c)| (Monomial::new(vec![a, b]), BigRational::from_integer(BigInt::from(c)))),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn combinations_are_members(
        gens in prop::collection::vec(poly(2, 3), 1..3),
        mults in prop::collection::vec(poly(2, 3), 2),
        h in poly(2, 3),
    ) {
        let r = ring();
        let gens: Vec<Polynomial> = gens.iter().map(|g| build(&r, g)).collect();
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        let f = &build(&r, &mults[0]) * &gens[0];
        let g = &build(&r, &mults[1]) * gens.last().unwrap();
        prop_assert!(ideal_member(&f, &ideal).unwrap());
        prop_assert!(ideal_member(&(&f + &g), &ideal).unwrap());
        prop_assert!(ideal_member(&(&build(&r, &h) * &f), &ideal).unwrap());
    }

    #[test]
    fn bases_are_deterministic(gens in prop::collection::vec(poly(3, 3), 1..4)) {
        let r = ring();
        let gens: Vec<Polynomial> = gens.iter().map(|g| build(&r, g)).collect();
        let a = Ideal::new(&r, gens.clone()).unwrap();
        let b = Ideal::new(&r, gens).unwrap();
        let show = |i: &Ideal| i.canonical_gens().iter().map(|p| p.to_string()).collect::<Vec<_>>();
        prop_assert_eq!(show(&a), show(&b));
    }
}
