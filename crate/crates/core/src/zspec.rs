//! Subsets of Spec(ℤ) and supports of ℤ-modules.
//!
//! Subsets are restricted to finite or cofinite sets of nonzero primes plus
//! an optional generic point `(0)`. That family is closed under the set
//! operations used here and contains every support, assassinator and
//! closure produced by modules `ℤ/n_1 ⊕ … ⊕ ℤ/n_k ⊕ ℤ^r`, optionally with one
//! infinite family `⊕ ℤ/p` over all primes outside a finite set.

use std::collections::BTreeSet;
use std::fmt;

use crate::arith;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrimeSetMode {
    /// The listed primes.
    Finite,
    /// Every nonzero prime except the listed ones.
    Cofinite,
}

/// A subset of Spec(ℤ).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZPrimeSet {
    mode: PrimeSetMode,
    primes: Vec<u64>,
    include_zero: bool,
}

fn checked_primes<I: IntoIterator<Item = u64>>(primes: I) -> Result<Vec<u64>> {
    let set: BTreeSet<u64> = primes.into_iter().collect();
    if let Some(bad) = set.iter().find(|p| !arith::is_prime(**p)) {
        return Err(Error::InvalidArgument(format!("{bad} is not prime")));
    }
    Ok(set.into_iter().collect())
}

impl ZPrimeSet {
    pub fn empty() -> Self {
        ZPrimeSet { mode: PrimeSetMode::Finite, primes: Vec::new(), include_zero: false }
    }

    /// All of Spec(ℤ).
    pub fn spec() -> Self {
        ZPrimeSet { mode: PrimeSetMode::Cofinite, primes: Vec::new(), include_zero: true }
    }

    /// `{(0)}`.
    pub fn generic_point() -> Self {
        ZPrimeSet { mode: PrimeSetMode::Finite, primes: Vec::new(), include_zero: true }
    }

    pub fn finite<I: IntoIterator<Item = u64>>(primes: I) -> Result<Self> {
        Ok(ZPrimeSet { mode: PrimeSetMode::Finite, primes: checked_primes(primes)?, include_zero: false })
    }

    /// All nonzero primes except `exclude`; the generic point is not
    /// included.
    pub fn cofinite<I: IntoIterator<Item = u64>>(exclude: I) -> Result<Self> {
        Ok(ZPrimeSet { mode: PrimeSetMode::Cofinite, primes: checked_primes(exclude)?, include_zero: false })
    }

    pub fn with_zero(mut self) -> Self {
        self.include_zero = true;
        self
    }

    pub fn mode(&self) -> PrimeSetMode {
        self.mode
    }

    /// Members (finite mode) or exceptions (cofinite mode), increasing.
    pub fn listed_primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn contains_zero(&self) -> bool {
        self.include_zero
    }

    pub fn contains_prime(&self, p: u64) -> bool {
        let listed = self.primes.binary_search(&p).is_ok();
        match self.mode {
            PrimeSetMode::Finite => listed,
            PrimeSetMode::Cofinite => !listed,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.mode == PrimeSetMode::Finite && self.primes.is_empty() && !self.include_zero
    }

    pub fn is_spec(&self) -> bool {
        self.mode == PrimeSetMode::Cofinite && self.primes.is_empty() && self.include_zero
    }

    pub fn is_finite(&self) -> bool {
        self.mode == PrimeSetMode::Finite
    }

    /// Zariski-closed: a finite set of maximal ideals, or everything.
    pub fn is_closed(&self) -> bool {
        (self.mode == PrimeSetMode::Finite && !self.include_zero) || self.is_spec()
    }

    pub fn union(&self, other: &ZPrimeSet) -> ZPrimeSet {
        use PrimeSetMode::*;
        let a: BTreeSet<u64> = self.primes.iter().copied().collect();
        let b: BTreeSet<u64> = other.primes.iter().copied().collect();
        let (mode, primes): (PrimeSetMode, BTreeSet<u64>) = match (self.mode, other.mode) {
            (Finite, Finite) => (Finite, &a | &b),
            (Cofinite, Cofinite) => (Cofinite, &a & &b),
            (Finite, Cofinite) => (Cofinite, &b - &a),
            (Cofinite, Finite) => (Cofinite, &a - &b),
        };
        ZPrimeSet { mode, primes: primes.into_iter().collect(), include_zero: self.include_zero || other.include_zero }
    }

    pub fn is_subset(&self, other: &ZPrimeSet) -> bool {
        use PrimeSetMode::*;
        if self.include_zero && !other.include_zero {
            return false;
        }
        match (self.mode, other.mode) {
            (Finite, _) => self.primes.iter().all(|&p| other.contains_prime(p)),
            // a cofinite set sits inside a finite one never
            (Cofinite, Finite) => false,
            (Cofinite, Cofinite) => other.primes.iter().all(|p| self.primes.binary_search(p).is_ok()),
        }
    }

    /// Zariski closure `V(∩ X)`. A finite set of maximal ideals is closed;
    /// anything containing `(0)` or infinitely many primes has intersection
    /// `0`, so its closure is Spec(ℤ).
    pub fn closure(&self) -> ZPrimeSet {
        if self.mode == PrimeSetMode::Finite && !self.include_zero {
            self.clone()
        } else {
            ZPrimeSet::spec()
        }
    }

    /// `X↑`: all primes containing a member of `X`.
    pub fn specialization(&self) -> ZPrimeSet {
        if self.include_zero {
            ZPrimeSet::spec()
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for ZPrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let listed: Vec<String> = self.primes.iter().map(u64::to_string).collect();
        let zero = if self.include_zero { " + (0)" } else { "" };
        match self.mode {
            PrimeSetMode::Finite => write!(f, "{{{}}}{zero}", listed.join(", ")),
            PrimeSetMode::Cofinite => write!(f, "primes not in {{{}}}{zero}", listed.join(", ")),
        }
    }
}

pub fn zset_closure(x: &ZPrimeSet) -> ZPrimeSet {
    x.closure()
}

/// The ideal `nℤ`, `n ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZIdeal(pub u64);

impl ZIdeal {
    pub fn generator(self) -> u64 {
        self.0
    }

    /// `V(nℤ)`.
    pub fn vanishing_set(self) -> ZPrimeSet {
        match self.0 {
            0 => ZPrimeSet::spec(),
            n => ZPrimeSet::finite(arith::prime_divisors(n)).expect("prime divisors"),
        }
    }

    pub fn radical(self) -> ZIdeal {
        ZIdeal(arith::radical(self.0))
    }

    pub fn is_prime(self) -> bool {
        self.0 == 0 || arith::is_prime(self.0)
    }

    pub fn is_maximal(self) -> bool {
        arith::is_prime(self.0)
    }
}

impl fmt::Display for ZIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `ℤ/n_1 ⊕ … ⊕ ℤ/n_k ⊕ ℤ^r`, optionally `⊕ [ℤ/p | p ∉ exclude]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZModule {
    torsion: Vec<u64>,
    free: u32,
    cofinite_exclude: Option<Vec<u64>>,
}

impl ZModule {
    pub fn new(torsion: Vec<u64>, free: u32, cofinite_exclude: Option<Vec<u64>>) -> Result<Self> {
        if let Some(bad) = torsion.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidArgument(format!("torsion order {bad} must be at least 2")));
        }
        let cofinite_exclude = cofinite_exclude.map(checked_primes).transpose()?;
        Ok(ZModule { torsion, free, cofinite_exclude })
    }

    pub fn finitely_generated(torsion: Vec<u64>, free: u32) -> Result<Self> {
        Self::new(torsion, free, None)
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn free_rank(&self) -> u32 {
        self.free
    }

    pub fn cofinite_exclude(&self) -> Option<&[u64]> {
        self.cofinite_exclude.as_deref()
    }

    pub fn is_finitely_generated(&self) -> bool {
        self.cofinite_exclude.is_none()
    }

    pub fn is_zero(&self) -> bool {
        self.torsion.is_empty() && self.free == 0 && self.cofinite_exclude.is_none()
    }

    fn torsion_primes(&self) -> Vec<u64> {
        let set: BTreeSet<u64> = self.torsion.iter().flat_map(|&n| arith::prime_divisors(n)).collect();
        set.into_iter().collect()
    }

    fn family_set(&self) -> Option<ZPrimeSet> {
        self.cofinite_exclude
            .as_ref()
            .map(|ex| ZPrimeSet::cofinite(ex.iter().copied()).expect("checked on construction"))
    }
}

/// `Supp(E)`: `(ℤ/n)_P ≠ 0` iff `P = pℤ` with `p | n`; a free summand is
/// supported everywhere; the family `⊕ ℤ/p` is supported exactly at its
/// primes.
pub fn z_supp(e: &ZModule) -> ZPrimeSet {
    let mut out = ZPrimeSet::finite(e.torsion_primes()).expect("prime divisors");
    if e.free > 0 {
        out = out.union(&ZPrimeSet::spec());
    }
    if let Some(family) = e.family_set() {
        out = out.union(&family);
    }
    out
}

/// `O(E)`: `rad(lcm n_i)ℤ` for torsion modules, `0` as soon as a free
/// summand or the infinite family is present.
pub fn z_oda(e: &ZModule) -> ZIdeal {
    if e.free > 0 || e.cofinite_exclude.is_some() {
        return ZIdeal(0);
    }
    ZIdeal(arith::radical(arith::lcm_all(e.torsion.iter().copied())))
}

/// `0 : E`.
pub fn z_ann(e: &ZModule) -> ZIdeal {
    if e.free > 0 || e.cofinite_exclude.is_some() {
        return ZIdeal(0);
    }
    ZIdeal(arith::lcm_all(e.torsion.iter().copied()))
}

/// `Ass(E)`: the primes dividing some torsion order, `(0)` when free rank is
/// positive, and the family's primes.
pub fn z_ass(e: &ZModule) -> Result<ZPrimeSet> {
    if e.free > 0 && e.cofinite_exclude.is_some() {
        return Err(Error::Unsupported("free summands combined with an infinite family of ℤ/p".into()));
    }
    let mut out = ZPrimeSet::finite(e.torsion_primes()).expect("prime divisors");
    if e.free > 0 {
        out = out.with_zero();
    }
    if let Some(family) = e.family_set() {
        out = out.union(&family);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZCrucialCritical {
    /// `M` with `Supp(E) = {M}`.
    pub crucial: Option<ZIdeal>,
    /// `J` with `√(0 : x) = J` for all nonzero `x`.
    pub critical: Option<ZIdeal>,
}

/// Crucial and critical ideals of a nonzero finitely generated ℤ-module.
///
/// `√(0 : x)` is `rad(ord x)ℤ` for torsion `x` and `0` for `x` of infinite
/// order, so a critical ideal exists iff either all orders are powers of one
/// prime `p` and there is no free part (then `J = pℤ`), or the module is free
/// (then `J = 0`). A crucial ideal needs a one-point support, which rules
/// out free summands.
pub fn z_crucial_critical(e: &ZModule) -> Result<ZCrucialCritical> {
    if !e.is_finitely_generated() {
        return Err(Error::Unsupported("module is not finitely generated".into()));
    }
    if e.is_zero() {
        return Err(Error::InvalidArgument("the zero module has no crucial or critical ideal".into()));
    }
    let primes = e.torsion_primes();
    let result = match (primes.as_slice(), e.free) {
        ([p], 0) => {
            let m = Some(ZIdeal(*p));
            ZCrucialCritical { crucial: m, critical: m }
        }
        ([], _) => ZCrucialCritical { crucial: None, critical: Some(ZIdeal(0)) },
        _ => ZCrucialCritical { crucial: None, critical: None },
    };
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(p: &[u64]) -> ZPrimeSet {
        ZPrimeSet::finite(p.iter().copied()).unwrap()
    }

    #[test]
    fn closures() {
        assert_eq!(zset_closure(&fin(&[2, 3])), fin(&[2, 3]));
        assert_eq!(zset_closure(&ZPrimeSet::generic_point()), ZPrimeSet::spec());
        let co = ZPrimeSet::cofinite([2, 3]).unwrap();
        assert!(!co.is_closed());
        assert_eq!(zset_closure(&co), ZPrimeSet::spec());
        assert_eq!(zset_closure(&ZPrimeSet::empty()), ZPrimeSet::empty());
        assert!(ZPrimeSet::finite([4]).is_err());
    }

    #[test]
    fn set_algebra() {
        let co = ZPrimeSet::cofinite([2, 3, 5]).unwrap();
        let u = co.union(&fin(&[3, 7]));
        assert_eq!(u, ZPrimeSet::cofinite([2, 5]).unwrap());
        assert!(fin(&[7]).is_subset(&co));
        assert!(!fin(&[2]).is_subset(&co));
        assert!(co.is_subset(&ZPrimeSet::cofinite([2]).unwrap()));
        assert!(!co.is_subset(&fin(&[2])));
        assert!(co.is_subset(&ZPrimeSet::spec()));
        assert!(!ZPrimeSet::generic_point().is_subset(&co));
        assert_eq!(ZPrimeSet::generic_point().specialization(), ZPrimeSet::spec());
    }

    #[test]
    fn supports() {
        let e = ZModule::finitely_generated(vec![12, 18], 0).unwrap();
        assert_eq!(z_supp(&e), fin(&[2, 3]));
        assert_eq!(z_supp(&ZModule::finitely_generated(vec![], 1).unwrap()), ZPrimeSet::spec());
        let fam = ZModule::new(vec![], 0, Some(vec![2, 3])).unwrap();
        let s = z_supp(&fam);
        assert_eq!(s, ZPrimeSet::cofinite([2, 3]).unwrap());
        assert!(!s.is_closed());
        assert_eq!(s.closure(), ZPrimeSet::spec());
    }

    #[test]
    fn oda_ideals() {
        assert_eq!(z_oda(&ZModule::finitely_generated(vec![12, 18], 0).unwrap()), ZIdeal(6));
        assert_eq!(z_oda(&ZModule::finitely_generated(vec![], 1).unwrap()), ZIdeal(0));
        let fam = ZModule::new(vec![], 0, Some(vec![2, 3])).unwrap();
        assert_eq!(z_oda(&fam), ZIdeal(0));
        assert_eq!(z_oda(&fam).vanishing_set(), z_supp(&fam).closure());
        assert_eq!(z_oda(&ZModule::finitely_generated(vec![], 0).unwrap()), ZIdeal(1));
    }

    #[test]
    fn assassinators() {
        assert_eq!(z_ass(&ZModule::finitely_generated(vec![12], 0).unwrap()).unwrap(), fin(&[2, 3]));
        assert_eq!(z_ass(&ZModule::finitely_generated(vec![], 1).unwrap()).unwrap(), ZPrimeSet::generic_point());
        assert_eq!(z_ass(&ZModule::finitely_generated(vec![125], 0).unwrap()).unwrap(), fin(&[5]));
        assert!(z_ass(&ZModule::new(vec![], 1, Some(vec![])).unwrap()).is_err());
    }

    #[test]
    fn crucial_and_critical() {
        let r = z_crucial_critical(&ZModule::finitely_generated(vec![8, 2], 0).unwrap()).unwrap();
        assert_eq!(r, ZCrucialCritical { crucial: Some(ZIdeal(2)), critical: Some(ZIdeal(2)) });
        let r = z_crucial_critical(&ZModule::finitely_generated(vec![6], 0).unwrap()).unwrap();
        assert_eq!(r, ZCrucialCritical { crucial: None, critical: None });
        let r = z_crucial_critical(&ZModule::finitely_generated(vec![], 1).unwrap()).unwrap();
        assert_eq!(r.crucial, None);
        assert_eq!(r.critical, Some(ZIdeal(0)));
        let r = z_crucial_critical(&ZModule::finitely_generated(vec![4], 1).unwrap()).unwrap();
        assert_eq!(r, ZCrucialCritical { crucial: None, critical: None });
        assert!(z_crucial_critical(&ZModule::finitely_generated(vec![], 0).unwrap()).is_err());
        assert!(z_crucial_critical(&ZModule::new(vec![], 0, Some(vec![])).unwrap()).is_err());
    }
}
