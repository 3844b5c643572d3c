//! Ideal calculus: intersection, quotient, saturation, radical membership,
//! and exact radicals, minimal primes and associated primes of monomial
//! ideals.
//!
//! Radicals of general ideals are never materialized; `√I` is available as
//! the membership test [`radical_member`].

use std::collections::BTreeSet;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::groebner::{eliminate, groebner_basis, Ideal};
use crate::poly::{same_ring, Monomial, PolyError, PolyRing, Polynomial};

/// The prime ideal generated by a set of variables, stored as sorted
/// variable indices. The empty set is the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialPrime(Vec<usize>);

impl MonomialPrime {
    pub fn new<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        let set: BTreeSet<usize> = vars.into_iter().collect();
        MonomialPrime(set.into_iter().collect())
    }

    pub fn vars(&self) -> &[usize] {
        &self.0
    }

    /// `self ⊆ other` as ideals.
    pub fn is_subset(&self, other: &MonomialPrime) -> bool {
        self.0.iter().all(|v| other.0.contains(v))
    }

    pub fn to_ideal(&self, ring: &Arc<PolyRing>) -> Ideal {
        let gens = self.0.iter().map(|&v| Polynomial::var(ring, v)).collect();
        Ideal::new(ring, gens).expect("same ring")
    }

    pub fn names(&self, ring: &PolyRing) -> Vec<String> {
        self.0.iter().map(|&v| ring.vars()[v].clone()).collect()
    }
}

/// Canonical order for prime lists: by number of variables, then by the
/// variable indices.
pub fn sort_primes(primes: &mut Vec<MonomialPrime>) {
    primes.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    primes.dedup();
}

/// Elements of `primes` not strictly containing another element.
pub fn minimal_primes_of(primes: &[MonomialPrime]) -> Vec<MonomialPrime> {
    let mut out: Vec<MonomialPrime> =
        primes.iter().filter(|p| !primes.iter().any(|q| q != *p && q.is_subset(p))).cloned().collect();
    sort_primes(&mut out);
    out
}

fn check_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(PolyError::RingMismatch.into())
    }
}

fn require_monomial(ideal: &Ideal) -> Result<()> {
    if ideal.is_monomial() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("ideal {ideal} is not monomial")))
    }
}

/// Drops monomials divisible by another one in the list and sorts the rest.
pub fn minimalize(monomials: Vec<Monomial>) -> Vec<Monomial> {
    let mut set: Vec<Monomial> = monomials.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    set.sort_by_key(Monomial::degree);
    let mut out: Vec<Monomial> = Vec::new();
    for m in set {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out.sort();
    out
}

pub fn monomial_ideal(ring: &Arc<PolyRing>, monomials: Vec<Monomial>) -> Ideal {
    let gens = minimalize(monomials).into_iter().map(|m| Polynomial::monomial(ring, m, BigRational::one())).collect();
    Ideal::new(ring, gens).expect("same ring")
}

fn monomial_member(m: &Monomial, gens: &[Monomial]) -> bool {
    gens.iter().any(|g| g.divides(m))
}

/// `I ∩ J`. Monomial inputs use the pairwise-lcm rule; otherwise
/// `(t·I + (1 − t)·J) ∩ k[x]` is computed by elimination.
pub fn ideal_intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_ring(i.ring(), j.ring())?;
    let ring = i.ring();
    if i.is_monomial() && j.is_monomial() {
        let (a, b) = (i.monomial_gens(), j.monomial_gens());
        let lcms = a.iter().flat_map(|x| b.iter().map(move |y| x.lcm(y))).collect();
        return Ok(monomial_ideal(ring, lcms));
    }
    let ext = ring.extended("t");
    let t = Polynomial::var(&ext, ring.nvars());
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens = Vec::with_capacity(i.gens().len() + j.gens().len());
    gens.extend(i.gens().iter().map(|g| &g.embed(&ext) * &t));
    gens.extend(j.gens().iter().map(|g| &g.embed(&ext) * &one_minus_t));
    let eliminated = eliminate(&Ideal::new(&ext, gens)?, &[ring.nvars()]);
    let back = eliminated.gens().iter().map(|g| g.restrict(ring)).collect();
    Ok(Ideal::new(ring, back)?)
}

/// Intersection of a nonempty list of ideals.
pub fn intersect_all<'a, I>(ideals: I) -> Result<Ideal>
where
    I: IntoIterator<Item = &'a Ideal>,
{
    let mut iter = ideals.into_iter();
    let first = iter.next().ok_or_else(|| Error::InvalidArgument("empty intersection".into()))?.clone();
    iter.try_fold(first, |acc, next| ideal_intersect(&acc, next))
}

/// `(I : g)`. `(I : 0)` is the unit ideal.
pub fn quotient_by(i: &Ideal, g: &Polynomial) -> Result<Ideal> {
    check_ring(i.ring(), g.ring())?;
    let ring = i.ring();
    if g.is_zero() {
        return Ok(Ideal::unit(ring));
    }
    if i.is_monomial() && g.is_monomial() {
        let m = g.leading_monomial().expect("nonzero");
        let gens = i.monomial_gens().iter().map(|h| h.div(&h.gcd(m)).expect("gcd divides")).collect();
        return Ok(monomial_ideal(ring, gens));
    }
    let meet = ideal_intersect(i, &Ideal::principal(g))?;
    let gens = meet.gens().iter().map(|h| h.div_exact(g).expect("element of (g) is divisible by g")).collect();
    Ok(Ideal::new(ring, gens)?)
}

/// `(I : J) = {f | f·J ⊆ I}`, as the intersection of `(I : g)` over the
/// generators `g` of `J`. `(I : (0))` is the unit ideal.
pub fn ideal_quotient(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_ring(i.ring(), j.ring())?;
    if j.is_zero() {
        return Ok(Ideal::unit(i.ring()));
    }
    let parts = j.gens().iter().map(|g| quotient_by(i, g)).collect::<Result<Vec<_>>>()?;
    intersect_all(&parts)
}

/// `(I : f^∞) = (I + (1 − t·f)) ∩ k[x]`.
pub fn saturate(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    check_ring(i.ring(), f.ring())?;
    if f.is_zero() {
        return Err(Error::InvalidArgument("cannot saturate by the zero polynomial".into()));
    }
    let ring = i.ring();
    let ext = ring.extended("t");
    let mut gens: Vec<Polynomial> = i.gens().iter().map(|g| g.embed(&ext)).collect();
    gens.push(rabinowitsch_generator(f, &ext));
    let eliminated = eliminate(&Ideal::new(&ext, gens)?, &[ring.nvars()]);
    let back = eliminated.gens().iter().map(|g| g.restrict(ring)).collect();
    Ok(Ideal::new(ring, back)?)
}

/// `1 − t·f` in `ext`, where `t` is the last variable of `ext`.
fn rabinowitsch_generator(f: &Polynomial, ext: &Arc<PolyRing>) -> Polynomial {
    let t = Polynomial::var(ext, ext.nvars() - 1);
    &Polynomial::one(ext) - &(&t * &f.embed(ext))
}

/// `f ∈ √I`, decided by `1 ∈ I + (1 − t·f)` in `k[x, t]`.
pub fn radical_member(f: &Polynomial, i: &Ideal) -> Result<bool> {
    check_ring(i.ring(), f.ring())?;
    if f.is_zero() {
        return Ok(true);
    }
    if i.is_monomial() {
        // √I is monomial, so membership is decided term by term
        let rad: Vec<Monomial> = i.monomial_gens().iter().map(Monomial::squarefree).collect();
        return Ok(f.terms().iter().all(|(m, _)| rad.iter().any(|g| g.divides(m))));
    }
    Ok(rabinowitsch(f, i))
}

fn rabinowitsch(f: &Polynomial, i: &Ideal) -> bool {
    let ext = i.ring().extended("t");
    let mut gens: Vec<Polynomial> = i.gens().iter().map(|g| g.embed(&ext)).collect();
    gens.push(rabinowitsch_generator(f, &ext));
    groebner_basis(&ext, &gens).is_unit()
}

/// Radical of a monomial ideal: squarefree parts of the generators.
pub fn monomial_radical(i: &Ideal) -> Result<Ideal> {
    require_monomial(i)?;
    let gens = i.monomial_gens().iter().map(Monomial::squarefree).collect();
    Ok(monomial_ideal(i.ring(), gens))
}

fn require_proper_monomial(i: &Ideal) -> Result<Vec<Monomial>> {
    require_monomial(i)?;
    let gens = i.monomial_gens();
    if gens.iter().any(Monomial::is_one) {
        return Err(Error::InvalidArgument("the unit ideal has no primes".into()));
    }
    Ok(gens)
}

fn covers(supports: &[Vec<usize>], chosen: &mut Vec<usize>, out: &mut Vec<MonomialPrime>) {
    match supports.iter().find(|s| !s.iter().any(|v| chosen.contains(v))) {
        None => out.push(MonomialPrime::new(chosen.iter().copied())),
        Some(open) => {
            for &v in open {
                chosen.push(v);
                covers(supports, chosen, out);
                chosen.pop();
            }
        }
    }
}

/// Minimal primes of a proper monomial ideal: the minimal vertex covers of
/// the generator supports.
pub fn monomial_min_primes(i: &Ideal) -> Result<Vec<MonomialPrime>> {
    let gens = require_proper_monomial(i)?;
    let supports: Vec<Vec<usize>> = gens.iter().map(Monomial::support).collect();
    let mut found = Vec::new();
    covers(&supports, &mut Vec::new(), &mut found);
    Ok(minimal_primes_of(&found))
}

/// When `√(I : m)` of a monomial colon is generated by variables, that set.
fn prime_radical(colon: &[Monomial]) -> Option<MonomialPrime> {
    let radical = minimalize(colon.iter().map(Monomial::squarefree).collect());
    if radical.iter().all(|g| g.degree() == 1) {
        Some(MonomialPrime::new(radical.iter().flat_map(Monomial::support)))
    } else {
        None
    }
}

/// Associated primes of `R/I` for a proper monomial ideal, by searching the
/// monomials `m` dividing the lcm of the generators for colons `(I : m)`
/// with prime radical.
pub fn monomial_ass(i: &Ideal) -> Result<Vec<MonomialPrime>> {
    let gens = require_proper_monomial(i)?;
    let n = i.ring().nvars();
    let lcm = gens.iter().fold(Monomial::one(n), |acc, g| acc.lcm(g));
    let mut found: BTreeSet<MonomialPrime> = BTreeSet::new();
    let mut exps = vec![0u32; n];
    loop {
        let m = Monomial::new(exps.clone());
        if !monomial_member(&m, &gens) {
            let colon: Vec<Monomial> = gens.iter().map(|g| g.div(&g.gcd(&m)).expect("gcd divides")).collect();
            if let Some(p) = prime_radical(&colon) {
                found.insert(p);
            }
        }
        // odometer over 0..=lcm
        let mut k = 0;
        while k < n && exps[k] == lcm.exponents()[k] {
            exps[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        exps[k] += 1;
    }
    let mut out: Vec<MonomialPrime> = found.into_iter().collect();
    sort_primes(&mut out);
    Ok(out)
}
