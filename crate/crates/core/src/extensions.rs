//! Ring extensions with decidable arithmetic: numerical semigroup rings
//! `k[Γ] ⊆ k[Γ′]`, the localizations `ℤ ⊆ ℤ[1/n]`, and `R ⊂ R[X]`.
//!
//! # Monomial reduction for semigroup rings
//!
//! For `s = x^n` with `n ∈ Γ′`, the denominator ideal
//! `d(s) = {r ∈ k[Γ] | rs ∈ k[Γ]}` is spanned by the monomials `x^g` with
//! `g + n ∈ Γ`, because multiplying by a monomial sends distinct monomials to
//! distinct monomials and membership in `k[Γ]` is decided term by term. A
//! monomial ideal is radical-tested on monomials: a sum of monomials each
//! having a power in a monomial ideal `D` has a power in `D` (expand
//! `(m_1 + … + m_t)^N` with `N` large: every term contains some `m_i` to a
//! power at least `N/t`). A general `s ∈ k[Γ′]` has
//! `d(s) ⊇ ∩ d(x^n)` over its terms, with `√d(s) ⊆ m_Γ` whenever `s ∉ k[Γ]`
//! (no element with nonzero constant term multiplies a non-member into
//! `k[Γ]` up to a power, by the grading). Consequently the Oda ideal computed
//! over monomials coincides with the Oda ideal over all of `k[Γ′]`, and all
//! extension-level ideals below are sets of exponents.
//!
//! Exponent sets are truncated at a finite bound; every ideal produced here
//! contains all integers above the Frobenius number of `Γ`, so the
//! truncation is lossless.

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::zspec::{z_ass, ZIdeal, ZModule, ZPrimeSet};

/// A cofinite additive submonoid of ℕ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    frobenius: i64,
    /// Membership of `0..table.len()`; everything beyond is a member.
    table: Vec<bool>,
}

impl NumericalSemigroup {
    /// Semigroup generated by `gens`, which must be positive with gcd 1.
    pub fn new(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidArgument("a semigroup needs generators".into()));
        }
        if gens.contains(&0) {
            return Err(Error::InvalidArgument("generators must be positive".into()));
        }
        let g = arith::gcd_all(gens.iter().copied());
        if g != 1 {
            return Err(Error::Unsupported(format!("generators have gcd {g}; the complement in ℕ is infinite")));
        }
        let mut generators: Vec<u64> = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        let (lo, hi) = (generators[0], *generators.last().expect("nonempty"));
        // F < lo * hi for any generating set with gcd 1
        let cap = (lo * hi + 1) as usize;
        let mut member = vec![false; cap];
        member[0] = true;
        for n in 1..cap {
            member[n] = generators.iter().any(|&g| g as usize <= n && member[n - g as usize]);
        }
        let frobenius = member.iter().rposition(|&m| !m).map_or(-1, |f| f as i64);
        let keep = (frobenius + hi as i64 + 1).max(1) as usize;
        member.truncate(keep);
        Ok(NumericalSemigroup { generators, frobenius, table: member })
    }

    /// ℕ itself.
    pub fn naturals() -> Self {
        Self::new(&[1]).expect("valid")
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Largest gap, `-1` for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn contains(&self, n: u64) -> bool {
        (n as usize) >= self.table.len() || self.table[n as usize]
    }

    pub fn gaps(&self) -> Vec<u64> {
        (1..=self.frobenius.max(0) as u64).filter(|&n| !self.contains(n)).collect()
    }

    /// Smallest positive element.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn max_generator(&self) -> u64 {
        *self.generators.last().expect("nonempty")
    }

    /// Minimal generating set: positive elements that are not a sum of two
    /// positive elements.
    pub fn minimal_generators(&self) -> Vec<u64> {
        self.generators.iter().copied().filter(|&g| !(1..g).any(|a| self.contains(a) && self.contains(g - a))).collect()
    }

    pub fn is_subset(&self, other: &NumericalSemigroup) -> bool {
        self.generators.iter().all(|&g| other.contains(g))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.minimal_generators().iter().map(u64::to_string).collect();
        write!(f, "<{}>", gens.join(","))
    }
}

pub fn semigroup_make(gens: &[u64]) -> Result<NumericalSemigroup> {
    NumericalSemigroup::new(gens)
}

/// A monomial ideal of `k[Γ]` as a set of exponents in `Γ`, closed under
/// adding elements of `Γ`. Membership is listed up to `bound`; every element
/// of `Γ` above `bound` is a member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentIdeal {
    members: Vec<u64>,
    bound: u64,
    /// Listed membership of `Γ ∩ [0, bound]`.
    in_semigroup: Vec<bool>,
}

impl ExponentIdeal {
    /// Collects `{g ∈ Γ ∩ [0, bound] | pred(g)}`. The caller guarantees that
    /// the set is an ideal containing every integer above `bound`.
    fn collect(semigroup: &NumericalSemigroup, bound: u64, pred: impl Fn(u64) -> bool) -> Self {
        let members: Vec<u64> = (0..=bound).filter(|&g| semigroup.contains(g) && pred(g)).collect();
        let in_semigroup = (0..=bound).map(|g| semigroup.contains(g)).collect();
        let ideal = ExponentIdeal { members, bound, in_semigroup };
        debug_assert!(ideal.is_closed_under(semigroup));
        ideal
    }

    fn is_closed_under(&self, semigroup: &NumericalSemigroup) -> bool {
        self.members.iter().all(|&g| (0..=self.bound - g).all(|s| !semigroup.contains(s) || self.contains(g + s)))
    }

    pub fn contains(&self, g: u64) -> bool {
        if g > self.bound {
            return true;
        }
        self.members.binary_search(&g).is_ok()
    }

    /// Contains `0`, i.e. is all of `k[Γ]`.
    pub fn is_unit(&self) -> bool {
        self.contains(0)
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Members up to the listing bound.
    pub fn listed(&self) -> &[u64] {
        &self.members
    }

    fn semigroup_has(&self, s: u64) -> bool {
        (s as usize) >= self.in_semigroup.len() || self.in_semigroup[s as usize]
    }

    /// Minimal generators: members that are not another member plus a
    /// positive element of `Γ`.
    pub fn generators(&self) -> Vec<u64> {
        self.members
            .iter()
            .copied()
            .filter(|&g| !self.members.iter().any(|&h| h < g && self.semigroup_has(g - h)))
            .collect()
    }

    /// Exponents `g ≥ 0` with some multiple `kg` (`k ≥ 1`) in the ideal.
    pub fn radical(&self, semigroup: &NumericalSemigroup) -> ExponentIdeal {
        ExponentIdeal::collect(semigroup, self.bound, |g| {
            if g == 0 {
                return self.contains(0);
            }
            (1..).map(|k| k * g).take_while(|&m| m <= self.bound + g).any(|m| self.contains(m))
        })
    }

    /// Agreement of membership on `[0, up_to]`.
    pub fn agrees_with(&self, other: &ExponentIdeal, up_to: u64) -> bool {
        (0..=up_to).all(|g| self.contains(g) == other.contains(g))
    }
}

impl fmt::Display for ExponentIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().iter().map(u64::to_string).collect();
        write!(f, "({})", gens.join(","))
    }
}

/// `k[Γ] ⊆ k[Γ′]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupExtension {
    small: NumericalSemigroup,
    large: NumericalSemigroup,
}

impl SemigroupExtension {
    pub fn new(small: NumericalSemigroup, large: NumericalSemigroup) -> Result<Self> {
        if !small.is_subset(&large) {
            return Err(Error::InvalidArgument(format!("{small} is not contained in {large}")));
        }
        Ok(SemigroupExtension { small, large })
    }

    pub fn over_naturals(small: NumericalSemigroup) -> Self {
        SemigroupExtension { small, large: NumericalSemigroup::naturals() }
    }

    pub fn small(&self) -> &NumericalSemigroup {
        &self.small
    }

    pub fn large(&self) -> &NumericalSemigroup {
        &self.large
    }

    /// Exponents of `Γ′ ∖ Γ`; all of them are gaps of `Γ`.
    pub fn new_exponents(&self) -> Vec<u64> {
        self.small.gaps().into_iter().filter(|&n| self.large.contains(n)).collect()
    }

    pub fn is_proper(&self) -> bool {
        !self.new_exponents().is_empty()
    }

    /// Truncation bound `F(Γ) + max(generators of Γ′) + 2`.
    pub fn truncation_bound(&self) -> u64 {
        (self.small.frobenius() + self.large.max_generator() as i64 + 2) as u64
    }

    /// Listing bound for exponent ideals: large enough that no minimal
    /// generator of an ideal containing `(F(Γ), ∞)` lies above it.
    fn listing_bound(&self) -> u64 {
        let f = self.small.frobenius().max(0) as u64;
        self.truncation_bound().max(f + self.small.multiplicity() + 1)
    }

    /// `m_Γ = Γ ∖ {0}`.
    pub fn maximal_ideal(&self) -> ExponentIdeal {
        ExponentIdeal::collect(&self.small, self.listing_bound(), |g| g > 0)
    }

    pub fn unit_ideal(&self) -> ExponentIdeal {
        ExponentIdeal::collect(&self.small, self.listing_bound(), |_| true)
    }
}

/// `(R : S) = {g ∈ Γ | g + Γ′ ⊆ Γ}`.
pub fn sg_conductor(ext: &SemigroupExtension) -> ExponentIdeal {
    let f = ext.small.frobenius();
    // g + h with h > F(Γ) is always in Γ
    let probes: Vec<u64> = (0..=f.max(0) as u64).filter(|&h| ext.large.contains(h)).collect();
    ExponentIdeal::collect(&ext.small, ext.listing_bound(), |g| probes.iter().all(|&h| ext.small.contains(g + h)))
}

/// `d(x^n) = {g ∈ Γ | g + n ∈ Γ}` for `n ∈ Γ′`.
pub fn sg_denominator_ideal(ext: &SemigroupExtension, n: u64) -> Result<ExponentIdeal> {
    if !ext.large.contains(n) {
        return Err(Error::InvalidArgument(format!("{n} is not an exponent of {}", ext.large)));
    }
    Ok(ExponentIdeal::collect(&ext.small, ext.listing_bound(), |g| ext.small.contains(g + n)))
}

/// `O(R, S) = ∩ √d(x^n)` over `n ∈ Γ′ ∖ Γ`; the unit ideal when `Γ = Γ′`.
pub fn sg_oda(ext: &SemigroupExtension) -> Result<ExponentIdeal> {
    let radicals = ext
        .new_exponents()
        .into_iter()
        .map(|n| Ok(sg_denominator_ideal(ext, n)?.radical(&ext.small)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExponentIdeal::collect(&ext.small, ext.listing_bound(), |g| radicals.iter().all(|r| r.contains(g))))
}

/// Per-gap certificate: `√d(x^n) = m_Γ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenominatorCertificate {
    pub exponent: u64,
    pub denominator: ExponentIdeal,
    pub radical_is_maximal: bool,
}

#[derive(Debug, Clone)]
pub struct SemigroupAnalysis {
    pub proper: bool,
    pub maximal: ExponentIdeal,
    pub oda: ExponentIdeal,
    /// `Supp(S/R) = V(O)`: the single point `m_Γ` when the extension is
    /// proper, empty otherwise.
    pub support: Vec<ExponentIdeal>,
    pub crucial: Option<ExponentIdeal>,
    pub critical: Option<ExponentIdeal>,
    pub conductor: ExponentIdeal,
    pub conductor_radical_is_maximal: bool,
    pub certificates: Vec<DenominatorCertificate>,
    /// `V(O) = V(√(R : S))`.
    pub support_matches_conductor: bool,
    pub bound: u64,
}

/// Oda ideal, support, crucial and critical ideals of `k[Γ] ⊆ k[Γ′]`, each
/// with the certificates they rest on.
///
/// The only monomial primes of `k[Γ]` are `0` and `m_Γ`, and `m_Γ` is
/// maximal, so `V(O)` is a single point iff `O = m_Γ`; the critical ideal
/// exists iff all `√d(x^n)` coincide and are prime.
pub fn sg_analyze(ext: &SemigroupExtension) -> Result<SemigroupAnalysis> {
    let bound = ext.truncation_bound();
    let maximal = ext.maximal_ideal();
    let oda = sg_oda(ext)?;
    let conductor = sg_conductor(ext);
    let conductor_radical = conductor.radical(&ext.small);
    let certificates = ext
        .new_exponents()
        .into_iter()
        .map(|n| {
            let denominator = sg_denominator_ideal(ext, n)?;
            let radical_is_maximal = denominator.radical(&ext.small).agrees_with(&maximal, bound);
            Ok(DenominatorCertificate { exponent: n, denominator, radical_is_maximal })
        })
        .collect::<Result<Vec<_>>>()?;
    let proper = !certificates.is_empty();
    let oda_is_maximal = oda.agrees_with(&maximal, bound);
    let crucial = (proper && oda_is_maximal).then(|| maximal.clone());
    let common_radical = certificates.first().map(|c| c.denominator.radical(&ext.small));
    let critical = match common_radical {
        Some(r)
            if certificates.iter().all(|c| c.denominator.radical(&ext.small).agrees_with(&r, bound))
                && (r.agrees_with(&maximal, bound) || r.listed().is_empty()) =>
        {
            Some(r)
        }
        _ => None,
    };
    let support = if proper && oda_is_maximal { vec![maximal.clone()] } else { Vec::new() };
    let support_matches_conductor = oda.agrees_with(&conductor_radical, bound);
    Ok(SemigroupAnalysis {
        proper,
        conductor_radical_is_maximal: conductor_radical.agrees_with(&maximal, bound),
        maximal,
        oda,
        support,
        crucial,
        critical,
        conductor,
        certificates,
        support_matches_conductor,
        bound,
    })
}

/// For `Γ ⊆ Γ″ ⊆ Γ′`: `O(R, T)` agrees with `O(R, S) ∩ (O(S, T) ∩ R)`
/// on all exponents up to the truncation bound.
pub fn sg_tower_check(
    small: &NumericalSemigroup,
    middle: &NumericalSemigroup,
    large: &NumericalSemigroup,
) -> Result<bool> {
    let whole = SemigroupExtension::new(small.clone(), large.clone())?;
    let lower = SemigroupExtension::new(small.clone(), middle.clone())?;
    let upper = SemigroupExtension::new(middle.clone(), large.clone())?;
    let (o_whole, o_lower, o_upper) = (sg_oda(&whole)?, sg_oda(&lower)?, sg_oda(&upper)?);
    let bound = whole.truncation_bound().max(lower.truncation_bound()).max(upper.truncation_bound());
    Ok((0..=bound)
        .filter(|&g| small.contains(g))
        .all(|g| o_whole.contains(g) == (o_lower.contains(g) && o_upper.contains(g))))
}

/// `ℤ ⊆ ℤ[1/n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZLocExtension {
    n: u64,
    factorization: Vec<(u64, u32)>,
}

impl ZLocExtension {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("cannot invert 0".into()));
        }
        Ok(ZLocExtension { n, factorization: arith::factorize(n) })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factorization(&self) -> &[(u64, u32)] {
        &self.factorization
    }

    fn primes(&self) -> Vec<u64> {
        self.factorization.iter().map(|(p, _)| *p).collect()
    }

    /// Denominators `m > 1` of reduced fractions `a/m` in `ℤ[1/n]`, up to
    /// radical: the divisors of `rad(n)` other than 1.
    fn denominator_classes(&self) -> Vec<u64> {
        let primes = self.primes();
        (1u64..(1 << primes.len()))
            .map(|mask| primes.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| p).product())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZLocAnalysis {
    pub oda: ZIdeal,
    pub support: ZPrimeSet,
    pub conductor: ZIdeal,
    pub crucial: Option<ZIdeal>,
    pub critical: Option<ZIdeal>,
    pub ass: ZPrimeSet,
    /// `Ass(S/R)` is nonempty and totally ordered by inclusion.
    pub ass_chain: bool,
    /// `(m, rad(m))` for each denominator class `m`: `√(ℤ : a/m) = rad(m)ℤ`.
    pub denominator_radicals: Vec<(u64, u64)>,
}

/// Invariants of `ℤ ⊆ ℤ[1/n]` from the denominators of its elements: a
/// reduced fraction `a/m` has `ℤ : a/m = mℤ`, so the Oda ideal is the
/// intersection of the `rad(m)ℤ`, the support is `{pℤ | pℤ[1/n] = ℤ[1/n]}`,
/// and the conductor is `0` since no nonzero integer clears every power of
/// `n`.
pub fn zloc_analyze(ext: &ZLocExtension) -> ZLocAnalysis {
    let denominator_radicals: Vec<(u64, u64)> =
        ext.denominator_classes().into_iter().map(|m| (m, arith::radical(m))).collect();
    let oda = if denominator_radicals.is_empty() {
        ZIdeal(1)
    } else {
        ZIdeal(arith::lcm_all(denominator_radicals.iter().map(|(_, r)| *r)))
    };
    // p becomes a unit in ℤ[1/n] iff p | n
    let support = ZPrimeSet::finite(ext.primes()).expect("prime factors");
    let conductor = if ext.n == 1 { ZIdeal(1) } else { ZIdeal(0) };
    let crucial = match support.listed_primes() {
        [p] => Some(ZIdeal(*p)),
        _ => None,
    };
    let critical = match denominator_radicals.first() {
        Some(&(_, r)) if denominator_radicals.iter().all(|&(_, s)| s == r) && arith::is_prime(r) => Some(ZIdeal(r)),
        _ => None,
    };
    // S/R ≅ ⊕_{p | n} ℤ(p^∞): each summand has Ass {pℤ}
    let ass = support.clone();
    let primes = ass.listed_primes();
    let ass_chain = !primes.is_empty() && primes.len() == 1;
    ZLocAnalysis { oda, support, conductor, crucial, critical, ass, ass_chain, denominator_radicals }
}

/// For `T = ℤ[1/n]` and `E = T/pT` with `p ∤ n`: `(Ass_ℤ(E), image of
/// Ass_T(E))`. `E ≅ ℤ/p` as a group, and `Ass_T(E) = {pT}` contracts to
/// `pℤ`.
pub fn zloc_ass_transfer(ext: &ZLocExtension, p: u64) -> Result<(ZPrimeSet, ZPrimeSet)> {
    if !arith::is_prime(p) || ext.n % p == 0 {
        return Err(Error::InvalidArgument(format!("{p} must be a prime not dividing {}", ext.n)));
    }
    let over_z = z_ass(&ZModule::finitely_generated(vec![p], 0)?)?;
    // pT ∩ ℤ = {a | n^k a ∈ pℤ for some k} = pℤ since gcd(p, n) = 1
    let mut contracted = p;
    for q in ext.primes() {
        while contracted % q == 0 {
            contracted /= q;
        }
    }
    let image = ZPrimeSet::finite([contracted])?;
    Ok((over_z, image))
}

/// Base ring of `R ⊂ R[X]`, described symbolically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomainMarker {
    Integers,
    Polynomial(Vec<String>),
    Field(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyExtensionInfo {
    pub base: DomainMarker,
    /// `O(R, R[X]) = 0`.
    pub oda_is_zero: bool,
    /// The critical ideal is `0`.
    pub critical_is_zero: bool,
    /// `Supp(R[X]/R) = Spec(R)`.
    pub support_is_spec: bool,
    /// `Spec(R) = {0}`: the support is a single point and `0` is also the
    /// crucial ideal.
    pub base_is_field: bool,
    pub crucial_is_zero: bool,
}

/// `R ⊂ R[X]` over a domain: `(R : P) = 0` for every `P ∉ R`, so `0` is the
/// Oda and critical ideal and the support is all of Spec(R). It is the
/// crucial ideal only when Spec(R) is a point, i.e. `R` is a field.
pub fn polyext_info(base: DomainMarker) -> PolyExtensionInfo {
    let base_is_field = matches!(base, DomainMarker::Field(_));
    PolyExtensionInfo {
        base,
        oda_is_zero: true,
        critical_is_zero: true,
        support_is_spec: true,
        base_is_field,
        crucial_is_zero: base_is_field,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        semigroup_make(gens).unwrap()
    }

    fn gap_oracle(gens: &[u64], limit: u64) -> Vec<u64> {
        // reachable sums by brute force over bounded coefficient vectors
        let mut reach = vec![false; limit as usize + 1];
        reach[0] = true;
        let mut frontier = vec![0u64];
        while let Some(n) = frontier.pop() {
            for &g in gens {
                let m = n + g;
                if m <= limit && !reach[m as usize] {
                    reach[m as usize] = true;
                    frontier.push(m);
                }
            }
        }
        (1..=limit).filter(|&n| !reach[n as usize]).collect()
    }

    #[test]
    fn semigroup_tables() {
        let s = sg(&[2, 3]);
        assert_eq!((s.gaps(), s.frobenius()), (vec![1], 1));
        let n = sg(&[1]);
        assert_eq!((n.gaps(), n.frobenius()), (vec![], -1));
        let s = sg(&[3, 4, 5]);
        assert_eq!((s.gaps(), s.frobenius()), (vec![1, 2], 2));
        for gens in [&[5, 7][..], &[4, 6, 9], &[6, 10, 15], &[3, 7]] {
            assert_eq!(sg(gens).gaps(), gap_oracle(gens, 200), "{gens:?}");
        }
        assert!(matches!(semigroup_make(&[4, 6]), Err(Error::Unsupported(_))));
        assert!(semigroup_make(&[]).is_err());
        assert_eq!(sg(&[2, 3, 4, 5]).minimal_generators(), vec![2, 3]);
    }

    #[test]
    fn conductors() {
        let c = sg_conductor(&SemigroupExtension::over_naturals(sg(&[2, 3])));
        assert_eq!(c.generators(), vec![2, 3]);
        let same = SemigroupExtension::new(sg(&[2, 3]), sg(&[2, 3])).unwrap();
        assert!(sg_conductor(&same).is_unit());
        let c = sg_conductor(&SemigroupExtension::over_naturals(sg(&[2, 5])));
        assert_eq!(c.generators(), vec![4, 5]);
        assert!(!c.contains(2) && c.contains(4) && c.contains(100));
        let c = sg_conductor(&SemigroupExtension::over_naturals(sg(&[4, 5, 6, 7])));
        assert_eq!(c.generators(), vec![4, 5, 6, 7]);
    }

    #[test]
    fn denominators() {
        let ext = SemigroupExtension::over_naturals(sg(&[2, 3]));
        let d = sg_denominator_ideal(&ext, 1).unwrap();
        assert_eq!(d.generators(), vec![2, 3]);
        assert!(sg_denominator_ideal(&ext, 4).unwrap().is_unit());
        let ext = SemigroupExtension::over_naturals(sg(&[2, 5]));
        let d = sg_denominator_ideal(&ext, 1).unwrap();
        assert!(!d.contains(0) && !d.contains(2));
        assert!(d.contains(4) && d.contains(5) && d.contains(6));
        assert_eq!(d.generators(), vec![4, 5]);
        let small = SemigroupExtension::new(sg(&[4, 5]), sg(&[2, 5])).unwrap();
        assert!(sg_denominator_ideal(&small, 1).is_err());
    }

    #[test]
    fn analysis_of_cusp() {
        let a = sg_analyze(&SemigroupExtension::over_naturals(sg(&[2, 3]))).unwrap();
        let m = &a.maximal;
        assert_eq!(m.generators(), vec![2, 3]);
        assert!(a.oda.agrees_with(m, a.bound));
        assert!(a.crucial.as_ref().unwrap().agrees_with(m, a.bound));
        assert!(a.critical.as_ref().unwrap().agrees_with(m, a.bound));
        assert_eq!(a.support.len(), 1);
        assert!(a.conductor_radical_is_maximal);
        assert!(a.certificates.iter().all(|c| c.radical_is_maximal));
        assert_eq!(a.bound, 1 + 1 + 2);
    }

    #[test]
    fn analysis_separates_conductor_from_oda() {
        let a = sg_analyze(&SemigroupExtension::over_naturals(sg(&[2, 5]))).unwrap();
        assert_eq!(a.maximal.generators(), vec![2, 5]);
        assert!(a.maximal.contains(4));
        assert!(a.oda.agrees_with(&a.maximal, a.bound));
        assert!(a.conductor.contains(4) && !a.conductor.contains(2));
        assert!(!a.conductor.agrees_with(&a.maximal, a.bound));
        assert!(a.conductor_radical_is_maximal);
    }

    #[test]
    fn analysis_of_trivial_extension() {
        let a = sg_analyze(&SemigroupExtension::new(sg(&[2, 3]), sg(&[2, 3])).unwrap()).unwrap();
        assert!(!a.proper);
        assert!(a.oda.is_unit());
        assert!(a.crucial.is_none() && a.critical.is_none() && a.support.is_empty());
    }

    #[test]
    fn towers() {
        let n = NumericalSemigroup::naturals();
        assert!(sg_tower_check(&sg(&[4, 5, 6, 7]), &sg(&[2, 3]), &n).unwrap());
        assert!(sg_tower_check(&sg(&[2, 3]), &sg(&[2, 3]), &sg(&[2, 3])).unwrap());
        assert!(sg_tower_check(&sg(&[3, 4, 5]), &sg(&[2, 3]), &n).unwrap());
        assert!(sg_tower_check(&sg(&[2, 3]), &sg(&[3, 4, 5]), &n).is_err());
    }

    #[test]
    fn zloc_examples() {
        let a = zloc_analyze(&ZLocExtension::new(6).unwrap());
        assert_eq!(a.oda, ZIdeal(6));
        assert_eq!(a.support, ZPrimeSet::finite([2, 3]).unwrap());
        assert_eq!((a.crucial, a.critical, a.ass_chain), (None, None, false));
        assert_eq!(a.conductor, ZIdeal(0));
        assert!(a.denominator_radicals.contains(&(6, 6)));
        assert!(!ZIdeal(6).is_prime());
        let a = zloc_analyze(&ZLocExtension::new(2).unwrap());
        assert_eq!((a.crucial, a.critical, a.oda), (Some(ZIdeal(2)), Some(ZIdeal(2)), ZIdeal(2)));
        let a = zloc_analyze(&ZLocExtension::new(1).unwrap());
        assert_eq!(a.oda, ZIdeal(1));
        assert!(a.support.is_empty());
        assert!(ZLocExtension::new(0).is_err());
    }

    #[test]
    fn ass_transfer() {
        let ext = ZLocExtension::new(6).unwrap();
        let (over_z, image) = zloc_ass_transfer(&ext, 5).unwrap();
        assert_eq!(over_z, ZPrimeSet::finite([5]).unwrap());
        assert_eq!(over_z, image);
        assert!(zloc_ass_transfer(&ext, 3).is_err());
    }

    #[test]
    fn polynomial_extensions() {
        let z = polyext_info(DomainMarker::Integers);
        assert!(z.oda_is_zero && z.critical_is_zero && !z.crucial_is_zero && z.support_is_spec);
        let qx = polyext_info(DomainMarker::Polynomial(vec!["x".into()]));
        assert_eq!((qx.oda_is_zero, qx.crucial_is_zero), (true, false));
        let q = polyext_info(DomainMarker::Field("Q".into()));
        assert!(q.oda_is_zero && q.base_is_field);
    }
}
