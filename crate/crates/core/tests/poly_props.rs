use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use supclose_core::{Monomial, PolyRing, Polynomial};

fn ring() -> Arc<PolyRing> {
    PolyRing::rational(&["x", "y", "z"])
}

fn term() -> impl Strategy<Value = (Vec<u32>, i64, i64)> {
    (prop::collection::vec(0u32..4, 3), -9i64..10, 1i64..5)
}

fn build(ring: &Arc<PolyRing>, terms: &[(Vec<u32>, i64, i64)]) -> Polynomial {
    Polynomial::from_terms(
        ring,
        terms.iter().map(|(e, n, d)| (Monomial::new(e.clone()), BigRational::new(BigInt::from(*n), BigInt::from(*d)))),
    )
}

fn poly() -> impl Strategy<Value = Vec<(Vec<u32>, i64, i64)>> {
    prop::collection::vec(term(), 0..6)
}

proptest! {
    #[test]
    fn canonical_form_ignores_term_order(terms in poly(), seed in any::<u64>()) {
        let r = ring();
        let mut shuffled = terms.clone();
        // deterministic permutation driven by the seed
        let n = shuffled.len();
        for i in (1..n).rev() {
            let j = (seed.wrapping_mul(6364136223846793005).wrapping_add(i as u64) % (i as u64 + 1)) as usize;
            shuffled.swap(i, j);
        }
        let (a, b) = (build(&r, &terms), build(&r, &shuffled));
        prop_assert_eq!(a.to_string(), b.to_string());
        prop_assert_eq!(&a, &b);
        let reparsed = Polynomial::parse(&a.to_string(), &r).unwrap();
        prop_assert_eq!(reparsed, a);
    }

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        let r = ring();
        let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }
}
