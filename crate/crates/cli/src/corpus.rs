//! Random instances for the verification suites. Every generator takes the
//! RNG explicitly so that a case is a pure function of its seed.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use supclose_core::ideal::monomial_ideal;
use supclose_core::module::CyclicSumModule;
use supclose_core::nagata::{semigroup_ring, TPoly};
use supclose_core::zspec::ZModule;
use supclose_core::{Ideal, Monomial, PolyRing, Polynomial};

const VARS: [&str; 3] = ["x", "y", "z"];

/// Per-case generator, decorrelated across suites and case indices.
pub fn case_rng(seed: u64, suite: &str, case: usize) -> ChaCha8Rng {
    let tag = suite.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ tag);
    rng.set_stream(case as u64);
    rng
}

pub fn ring_with(nvars: usize) -> Arc<PolyRing> {
    PolyRing::rational(&VARS[..nvars])
}

/// `Σ c·x^e` written in the polynomial grammar.
pub fn poly_text(terms: &[(Vec<u32>, i64)], vars: &[String]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, c)) in terms.iter().enumerate() {
        let sign = if *c < 0 {
            "-"
        } else if i > 0 {
            "+"
        } else {
            ""
        };
        let mut factors = vec![c.unsigned_abs().to_string()];
        for (v, &k) in vars.iter().zip(e) {
            match k {
                0 => {}
                1 => factors.push(v.clone()),
                _ => factors.push(format!("{v}^{k}")),
            }
        }
        if i > 0 {
            out.push(' ');
        }
        out.push_str(sign);
        out.push_str(&factors.join("*"));
    }
    out
}

pub fn polynomial(ring: &Arc<PolyRing>, terms: &[(Vec<u32>, i64)]) -> Polynomial {
    Polynomial::parse(&poly_text(terms, ring.vars()), ring).expect("generated text parses")
}

fn exponent(rng: &mut impl Rng, nvars: usize, max: u32) -> Vec<u32> {
    (0..nvars).map(|_| rng.gen_range(0..=max)).collect()
}

/// A proper monomial ideal with up to 3 generators, exponents at most
/// `max_exp`.
pub fn monomial_ideal_in(rng: &mut impl Rng, ring: &Arc<PolyRing>, max_exp: u32) -> Ideal {
    let n = ring.nvars();
    let count = rng.gen_range(1..=3);
    let gens = (0..count)
        .map(|_| loop {
            let e = exponent(rng, n, max_exp);
            if e.iter().any(|&k| k > 0) {
                break Monomial::new(e);
            }
        })
        .collect();
    monomial_ideal(ring, gens)
}

/// `⊕ R/I_i` with at most 3 variables, 4 summands and exponents at most 4.
pub fn monomial_module(rng: &mut impl Rng) -> CyclicSumModule {
    let ring = ring_with(rng.gen_range(1..=3));
    let k = rng.gen_range(1..=4);
    let comps = (0..k).map(|_| monomial_ideal_in(rng, &ring, 4)).collect();
    CyclicSumModule::new(&ring, comps).expect("nonempty, same ring")
}

/// Up to 3 terms of degree at most 3 per variable, small coefficients.
pub fn test_polynomial(rng: &mut impl Rng, ring: &Arc<PolyRing>) -> Polynomial {
    let n = rng.gen_range(1..=3);
    let terms: Vec<(Vec<u32>, i64)> =
        (0..n).map(|_| (exponent(rng, ring.nvars(), 3), [-3, -2, -1, 1, 2, 3][rng.gen_range(0..6)])).collect();
    polynomial(ring, &terms)
}

pub fn monomial_in(rng: &mut impl Rng, ring: &Arc<PolyRing>, max: u32) -> Polynomial {
    polynomial(ring, &[(exponent(rng, ring.nvars(), max), 1)])
}

/// `ℤ/n_1 ⊕ … ⊕ ℤ/n_k ⊕ ℤ^r` with `n_i ≤ 10⁴`, `k ≤ 3`, `r ≤ 2`, half of
/// them torsion.
pub fn zmodule(rng: &mut impl Rng) -> ZModule {
    let k = rng.gen_range(0..=3);
    let torsion = (0..k).map(|_| rng.gen_range(2..=10_000)).collect();
    let free = if rng.gen_bool(0.5) { 0 } else { rng.gen_range(1..=2) };
    ZModule::finitely_generated(torsion, free).expect("valid orders")
}

/// A polynomial in `T` of degree at most `deg` with coefficients of total
/// degree at most `coeff_deg` in `ring`.
pub fn t_polynomial(rng: &mut impl Rng, ring: &Arc<PolyRing>, deg: usize, coeff_deg: u32) -> TPoly {
    let coeffs = (0..=rng.gen_range(0..=deg))
        .map(|_| {
            let n = rng.gen_range(0..=3);
            let terms: Vec<(Vec<u32>, i64)> = (0..n)
                .filter_map(|_| {
                    let e = exponent(rng, ring.nvars(), coeff_deg);
                    (e.iter().sum::<u32>() <= coeff_deg).then(|| (e, rng.gen_range(-3..=3)))
                })
                .collect();
            polynomial(ring, &terms)
        })
        .collect();
    TPoly::new(ring, coeffs).expect("same ring")
}

/// `P ∈ k[x][T]` with monomial-sum coefficients whose exponents pass
/// `allowed`.
pub fn semigroup_t_polynomial(rng: &mut impl Rng, allowed: impl Fn(u64) -> bool) -> TPoly {
    let ring = semigroup_ring();
    let coeffs = (0..=rng.gen_range(0..=3))
        .map(|_| {
            let n = rng.gen_range(0..=2);
            let terms: Vec<(Vec<u32>, i64)> = (0..n)
                .filter_map(|_| {
                    let e = rng.gen_range(0..=12u32);
                    let c = rng.gen_range(1..=3);
                    allowed(e as u64).then(|| (vec![e], c))
                })
                .collect();
            polynomial(&ring, &terms)
        })
        .collect();
    TPoly::new(&ring, coeffs).expect("same ring")
}

/// Pairs `(a, b)` with `2 ≤ a < b ≤ 9` and `gcd(a, b) = 1`.
pub fn coprime_pairs() -> Vec<(u64, u64)> {
    (2..=9u64)
        .flat_map(|a| (a + 1..=9).map(move |b| (a, b)))
        .filter(|&(a, b)| supclose_core::arith::gcd_all([a, b]) == 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rngs_are_reproducible_and_distinct() {
        let a: u64 = case_rng(7, "cars", 3).gen();
        let b: u64 = case_rng(7, "cars", 3).gen();
        let c: u64 = case_rng(7, "cars", 4).gen();
        let d: u64 = case_rng(7, "pro", 3).gen();
        assert_eq!(a, b);
        assert!(a != c && a != d);
    }

    #[test]
    fn text_round_trips() {
        let r = ring_with(2);
        let p = polynomial(&r, &[(vec![2, 0], -3), (vec![0, 1], 1), (vec![0, 0], 2)]);
        assert_eq!(p.to_string(), "-3*x^2 + y + 2");
        assert!(polynomial(&r, &[]).is_zero());
    }

    #[test]
    fn pair_enumeration() {
        let pairs = coprime_pairs();
        assert!(pairs.contains(&(2, 3)) && pairs.contains(&(8, 9)));
        assert!(!pairs.contains(&(2, 4)) && !pairs.contains(&(3, 9)));
        assert_eq!(pairs.len(), 19);
    }
}
