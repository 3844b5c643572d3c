//! Buchberger's algorithm with the normal selection strategy and the product
//! and chain criteria; normal forms, ideal membership and elimination.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::poly::{same_ring, Monomial, MonomialOrder, PolyError, PolyRing, Polynomial, Term};

/// Reduced Gröbner basis: monic elements sorted ascending by leading
/// monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_unit(&self) -> bool {
        self.elements.first().is_some_and(Polynomial::is_unit)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, PolyError> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(PolyError::RingMismatch);
        }
        Ok(reduce(f, &self.elements))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, PolyError> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

/// Full reduction of `f` modulo `basis` (no term of the result is divisible
/// by a leading monomial of `basis`).
pub(crate) fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let field = ring.field().clone();
    let mut rest = f.clone();
    let mut remainder: Vec<Term> = Vec::new();
    while let Some((m, c)) = rest.leading_term().cloned() {
        let divisor = basis.iter().find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)));
        match divisor {
            Some(g) => {
                let (lm, lc) = g.leading_term().expect("nonzero basis element");
                let q = m.div(lm).expect("divisible");
                let qc = field.mul(&c, &field.inv(lc));
                rest = &rest - &g.mul_term(&q, &qc);
            }
            None => {
                rest.pop_leading();
                remainder.push((m, c));
            }
        }
    }
    Polynomial::from_sorted_terms(&ring, remainder)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = f.ring().field();
    let (lf, cf) = f.leading_term().expect("nonzero");
    let (lg, cg) = g.leading_term().expect("nonzero");
    let l = lf.lcm(lg);
    let a = f.mul_term(&l.div(lf).expect("lcm"), &field.inv(cf));
    let b = g.mul_term(&l.div(lg).expect("lcm"), &field.inv(cg));
    &a - &b
}

fn lm(p: &Polynomial) -> &Monomial {
    p.leading_monomial().expect("nonzero basis element")
}

/// Normal strategy key: lcm degree, then lex on the lcm, then indices.
fn pair_key(basis: &[Polynomial], (i, j): (usize, usize)) -> (u32, Monomial, usize, usize) {
    let l = lm(&basis[i]).lcm(lm(&basis[j]));
    (l.degree(), l, i, j)
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ring`.
pub fn groebner_basis(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> GroebnerBasis {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        debug_assert!(same_ring(g.ring(), ring));
        if !g.is_zero() {
            basis.push(g.monic());
        }
    }
    if basis.iter().any(Polynomial::is_unit) {
        return unit_basis(ring);
    }
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    while !pending.is_empty() {
        let pair = *pending.iter().min_by(|a, b| pair_key(&basis, **a).cmp(&pair_key(&basis, **b))).expect("nonempty");
        pending.remove(&pair);
        let (i, j) = pair;
        let (li, lj) = (lm(&basis[i]), lm(&basis[j]));
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis[k]).divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let h = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return unit_basis(ring);
        }
        let k = basis.len();
        basis.push(h.monic());
        for i in 0..k {
            pending.insert((i, k));
        }
    }
    GroebnerBasis { ring: ring.clone(), elements: interreduce(basis) }
}

fn unit_basis(ring: &Arc<PolyRing>) -> GroebnerBasis {
    GroebnerBasis { ring: ring.clone(), elements: vec![Polynomial::one(ring)] }
}

fn interreduce(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let Some(ring) = basis.first().map(|p| p.ring().clone()) else {
        return basis;
    };
    basis.sort_by(|a, b| ring.order().cmp(lm(a), lm(b)));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| lm(h).divides(lm(&g))) {
            minimal.push(g);
        }
    }
    let reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|k| {
            let (head, tail) = (&minimal[..k], &minimal[k + 1..]);
            let others: Vec<Polynomial> = head.iter().chain(tail).cloned().collect();
            reduce(&minimal[k], &others).monic()
        })
        .collect();
    reduced
}

/// An ideal given by generators, with a lazily computed reduced Gröbner
/// basis in the ring's order.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Ideal, PolyError> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(PolyError::RingMismatch);
        }
        Ok(Ideal { ring: ring.clone(), gens: gens.into_iter().filter(|g| !g.is_zero()).collect(), gb: OnceLock::new() })
    }

    pub fn parse(ring: &Arc<PolyRing>, gens: &[&str]) -> Result<Ideal, PolyError> {
        let polys = gens.iter().map(|s| Polynomial::parse(s, ring)).collect::<Result<Vec<_>, _>>()?;
        Ideal::new(ring, polys)
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal { ring: ring.clone(), gens: Vec::new(), gb: OnceLock::new() }
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Ideal {
        Ideal { ring: ring.clone(), gens: vec![Polynomial::one(ring)], gb: OnceLock::new() }
    }

    pub fn principal(f: &Polynomial) -> Ideal {
        Ideal::new(f.ring(), vec![f.clone()]).expect("same ring")
    }

    fn from_basis(basis: GroebnerBasis) -> Ideal {
        Ideal { ring: basis.ring.clone(), gens: basis.elements.clone(), gb: OnceLock::from(basis) }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Every generator is a single term.
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(Polynomial::is_monomial)
    }

    /// Leading monomials of the generators; meaningful for monomial ideals.
    pub fn monomial_gens(&self) -> Vec<Monomial> {
        self.gens.iter().filter_map(|g| g.leading_monomial().cloned()).collect()
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| groebner_basis(&self.ring, &self.gens))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, PolyError> {
        if f.is_zero() && same_ring(f.ring(), &self.ring) {
            return Ok(true);
        }
        self.groebner().contains(f)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool, PolyError> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality by mutual generator membership.
    pub fn equals(&self, other: &Ideal) -> Result<bool, PolyError> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Polynomial::is_unit) || self.groebner().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, PolyError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(PolyError::RingMismatch);
        }
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal, PolyError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(PolyError::RingMismatch);
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f * g);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Canonical generator list: the reduced Gröbner basis.
    pub fn canonical_gens(&self) -> &[Polynomial] {
        self.groebner().elements()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        write!(f, "({})", gens.join(", "))
    }
}

pub fn buchberger(ideal: &Ideal) -> GroebnerBasis {
    ideal.groebner().clone()
}

pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial, PolyError> {
    basis.normal_form(f)
}

pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> Result<bool, PolyError> {
    if !same_ring(f.ring(), ideal.ring()) {
        return Err(PolyError::RingMismatch);
    }
    ideal.contains(f)
}

/// `I ∩ k[remaining variables]`, as an ideal of the original ring. Uses a
/// block order with the dropped variables in the first block.
pub fn eliminate(ideal: &Ideal, drop_vars: &[usize]) -> Ideal {
    let ring = ideal.ring();
    let n = ring.nvars();
    let dropped: BTreeSet<usize> = drop_vars.iter().copied().collect();
    assert!(dropped.iter().all(|&v| v < n), "variable index out of range");
    if dropped.is_empty() {
        return Ideal::from_basis(ideal.groebner().clone());
    }
    let k = dropped.len();
    let order: Vec<usize> = dropped.iter().copied().chain((0..n).filter(|v| !dropped.contains(v))).collect();
    // forward[old] = new position
    let mut forward = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        forward[old] = new;
    }
    let vars = order.iter().map(|&v| ring.vars()[v].clone()).collect();
    let block = PolyRing::new(ring.field().clone(), vars, MonomialOrder::Block(k)).expect("permuted ring is valid");
    let gens: Vec<Polynomial> = ideal.gens().iter().map(|g| g.remap(&block, &forward)).collect();
    let basis = groebner_basis(&block, &gens);
    let survivors = basis
        .elements()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0)))
        .map(|g| g.remap(ring, &order))
        .collect();
    Ideal::new(ring, survivors).expect("same ring")
}

/// Compare leading monomials in `ring`'s order.
pub fn cmp_leading(ring: &PolyRing, a: &Polynomial, b: &Polynomial) -> Ordering {
    ring.order().cmp(lm(a), lm(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(ring: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
        Ideal::parse(ring, gens).unwrap()
    }

    fn strings(b: &GroebnerBasis) -> Vec<String> {
        b.elements().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn single_generator() {
        let r = PolyRing::rational(&["x", "y"]);
        assert_eq!(strings(&buchberger(&ideal(&r, &["x"]))), ["x"]);
    }

    #[test]
    fn hand_computed_basis() {
        let r = PolyRing::rational(&["x", "y"]);
        let b = buchberger(&ideal(&r, &["x^2 - 1", "x*y - 1"]));
        assert_eq!(strings(&b), ["x - y", "y^2 - 1"]);
    }

    #[test]
    fn unit_ideal() {
        let r = PolyRing::rational(&["x"]);
        assert_eq!(strings(&buchberger(&ideal(&r, &["2", "x"]))), ["1"]);
        assert!(buchberger(&Ideal::zero(&r)).elements().is_empty());
    }

    #[test]
    fn normal_forms() {
        let r = PolyRing::rational(&["x", "y"]);
        let f = Polynomial::parse("x^3*y - 2*x + 1", &r).unwrap();
        let g = buchberger(&Ideal::principal(&f));
        assert!(normal_form(&f, &g).unwrap().is_zero());
        let b = buchberger(&ideal(&r, &["x^2 - 1", "x*y - 1"]));
        let x2 = Polynomial::parse("x^2", &r).unwrap();
        assert_eq!(normal_form(&x2, &b).unwrap(), Polynomial::one(&r));
        let one = Polynomial::one(&r);
        assert_eq!(normal_form(&one, &buchberger(&ideal(&r, &["x"]))).unwrap(), one);
        let nf = normal_form(&f, &b).unwrap();
        assert_eq!(normal_form(&nf, &b).unwrap(), nf);
        let other = PolyRing::rational(&["z"]);
        assert_eq!(normal_form(&Polynomial::one(&other), &b), Err(PolyError::RingMismatch));
    }

    #[test]
    fn membership() {
        let r = PolyRing::rational(&["x", "y"]);
        let p = |s: &str| Polynomial::parse(s, &r).unwrap();
        assert!(ideal_member(&p("x + y"), &ideal(&r, &["x", "y"])).unwrap());
        assert!(ideal_member(&p("1"), &ideal(&r, &["x - 1", "x"])).unwrap());
        assert!(!ideal_member(&p("x"), &ideal(&r, &["x^2"])).unwrap());
    }

    #[test]
    fn elimination_examples() {
        let r = PolyRing::rational(&["t", "x", "y"]);
        assert!(eliminate(&ideal(&r, &["t"]), &[0]).is_zero());
        let e = eliminate(&ideal(&r, &["t*x", "y - t*y"]), &[0]);
        assert!(e.equals(&ideal(&r, &["x*y"])).unwrap());
        let i = ideal(&r, &["x^2 - t", "x*y - 1"]);
        assert_eq!(eliminate(&i, &[]).groebner(), i.groebner());
    }

    #[test]
    fn prime_field_basis() {
        let r = PolyRing::new(crate::poly::CoeffField::Prime(5), vec!["x".into(), "y".into()], MonomialOrder::Grevlex)
            .unwrap();
        // x^2 + 4 = (x - 1)(x + 1) mod 5; together with 5x = 0 nothing changes
        let b = buchberger(&ideal(&r, &["x^2 + 4", "x*y + 4"]));
        assert_eq!(strings(&b), ["x + 4*y", "y^2 + 4"]);
    }

    #[test]
    fn lex_basis_is_triangular() {
        let r =
            PolyRing::new(crate::poly::CoeffField::Rational, vec!["x".into(), "y".into()], MonomialOrder::Lex).unwrap();
        let b = buchberger(&ideal(&r, &["x^2 + y^2 - 1", "x - y"]));
        assert_eq!(strings(&b), ["y^2 - 1/2", "x - y"]);
    }
}
