#![allow(dead_code)]

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use supclose_core::ideal::monomial_ideal;
use supclose_core::module::CyclicSumModule;
use supclose_core::{Ideal, Monomial, PolyRing, Polynomial};

pub fn ring() -> Arc<PolyRing> {
    PolyRing::rational(&["x", "y", "z"])
}

/// Exponent vectors of a proper monomial ideal in three variables.
pub fn monomial_gens(max_exp: u32) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(
        prop::collection::vec(0..=max_exp, 3).prop_filter("nonconstant", |e| e.iter().any(|&x| x > 0)),
        1..4,
    )
}

pub fn mono_ideal(r: &Arc<PolyRing>, gens: &[Vec<u32>]) -> Ideal {
    monomial_ideal(r, gens.iter().map(|e| Monomial::new(e.clone())).collect())
}

pub fn module_of(r: &Arc<PolyRing>, comps: &[Vec<Vec<u32>>]) -> CyclicSumModule {
    CyclicSumModule::new(r, comps.iter().map(|g| mono_ideal(r, g)).collect()).unwrap()
}

pub fn modules() -> impl Strategy<Value = Vec<Vec<Vec<u32>>>> {
    prop::collection::vec(monomial_gens(4), 1..=4)
}

/// Small polynomials with integer coefficients, zero allowed.
pub fn test_poly() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), -3i64..4), 0..3)
}

pub fn build(r: &Arc<PolyRing>, terms: &[(Vec<u32>, i64)]) -> Polynomial {
    Polynomial::from_terms(
        r,
        terms.iter().map(|(e, c)| (Monomial::new(e.clone()), BigRational::from_integer(BigInt::from(*c)))),
    )
}

pub fn monomial(r: &Arc<PolyRing>, e: &[u32]) -> Polynomial {
    Polynomial::monomial(r, Monomial::new(e.to_vec()), BigRational::from_integer(1.into()))
}
