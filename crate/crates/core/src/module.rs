//! Finitely generated modules `E = R/I_1 ⊕ … ⊕ R/I_k` over a polynomial ring.
//!
//! The generator `e_i` of the `i`-th summand has annihilator `I_i`, so
//! `0 : E = ∩ I_i` and the Oda ideal `O(E) = {a | E_a = 0}` is
//! `√(0 : E) = ∩ √I_i`. Membership in `O(E)` is decided summand by summand
//! with the Rabinowitsch test; when every `I_i` is monomial, `O(E)` also has
//! exact generators and `V(O(E))` is described by its minimal primes.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ideal::{
    intersect_all, minimal_primes_of, monomial_ass, monomial_min_primes, monomial_radical, quotient_by, radical_member,
    saturate, sort_primes, MonomialPrime,
};
use crate::poly::{same_ring, PolyError, PolyRing, Polynomial};

/// `R/I_1 ⊕ … ⊕ R/I_k`, `k ≥ 1`.
#[derive(Debug, Clone)]
pub struct CyclicSumModule {
    ring: Arc<PolyRing>,
    components: Vec<Ideal>,
}

impl CyclicSumModule {
    pub fn new(ring: &Arc<PolyRing>, components: Vec<Ideal>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidArgument("a module needs at least one summand".into()));
        }
        if components.iter().any(|i| !same_ring(i.ring(), ring)) {
            return Err(PolyError::RingMismatch.into());
        }
        Ok(CyclicSumModule { ring: ring.clone(), components })
    }

    /// The cyclic module `R/I`.
    pub fn cyclic(ideal: Ideal) -> Self {
        CyclicSumModule { ring: ideal.ring().clone(), components: vec![ideal] }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn components(&self) -> &[Ideal] {
        &self.components
    }

    /// `E = 0` iff every summand is `R/R`.
    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Ideal::is_unit)
    }

    pub fn is_monomial(&self) -> bool {
        self.components.iter().all(Ideal::is_monomial)
    }

    /// The `i`-th standard generator.
    pub fn generator(&self, i: usize) -> ModuleElement {
        let reps = (0..self.components.len())
            .map(|k| if k == i { Polynomial::one(&self.ring) } else { Polynomial::zero(&self.ring) })
            .collect();
        ModuleElement { reps }
    }

    fn check_ring(&self, f: &Polynomial) -> Result<()> {
        if same_ring(f.ring(), &self.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch.into())
        }
    }

    fn require_monomial(&self) -> Result<()> {
        if self.is_monomial() {
            Ok(())
        } else {
            Err(Error::Unsupported("component ideals must be monomial".into()))
        }
    }

    fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::InvalidArgument("the zero module has no crucial or critical ideal".into()))
        } else {
            Ok(())
        }
    }
}

/// An element of a [`CyclicSumModule`] given by one coset representative
/// per summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleElement {
    reps: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn new(module: &CyclicSumModule, reps: Vec<Polynomial>) -> Result<Self> {
        if reps.len() != module.components.len() {
            return Err(Error::InvalidArgument(format!(
                "element has {} coordinates, module has {} summands",
                reps.len(),
                module.components.len()
            )));
        }
        for f in &reps {
            module.check_ring(f)?;
        }
        Ok(ModuleElement { reps })
    }

    pub fn reps(&self) -> &[Polynomial] {
        &self.reps
    }

    pub fn scale(&self, a: &Polynomial) -> ModuleElement {
        ModuleElement { reps: self.reps.iter().map(|f| a * f).collect() }
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        ModuleElement { reps: self.reps.iter().zip(&other.reps).map(|(f, g)| f + g).collect() }
    }

    pub fn is_zero_in(&self, module: &CyclicSumModule) -> Result<bool> {
        for (f, i) in self.reps.iter().zip(&module.components) {
            if !i.contains(f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `0 : x = ∩ (I_i : f_i)`.
pub fn ann_element(module: &CyclicSumModule, x: &ModuleElement) -> Result<Ideal> {
    if x.reps.len() != module.components.len() {
        return Err(Error::InvalidArgument("element length does not match the module".into()));
    }
    let parts = module.components.iter().zip(&x.reps).map(|(i, f)| quotient_by(i, f)).collect::<Result<Vec<_>>>()?;
    intersect_all(&parts)
}

/// `0 : E = ∩ I_i`.
pub fn ann_module(module: &CyclicSumModule) -> Result<Ideal> {
    intersect_all(&module.components)
}

/// `a ∈ O(E)`, i.e. `a ∈ √I_i` for every summand.
pub fn oda_member(module: &CyclicSumModule, a: &Polynomial) -> Result<bool> {
    module.check_ring(a)?;
    for i in &module.components {
        if !radical_member(a, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The Oda ideal of a module: always a membership oracle over the summand
/// ideals; exact generators and minimal primes when the summands are
/// monomial.
#[derive(Debug, Clone)]
pub struct OdaIdealView {
    components: Vec<Ideal>,
    generators: Option<Ideal>,
    min_primes: Option<Vec<MonomialPrime>>,
}

impl OdaIdealView {
    pub fn contains(&self, a: &Polynomial) -> Result<bool> {
        for i in &self.components {
            if !radical_member(a, i)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn generators(&self) -> Option<&Ideal> {
        self.generators.as_ref()
    }

    /// Minimal primes of `O(E)`; empty when `O(E) = R`.
    pub fn min_primes(&self) -> Option<&[MonomialPrime]> {
        self.min_primes.as_deref()
    }

    pub fn is_unit(&self) -> bool {
        self.components.iter().all(Ideal::is_unit)
    }
}

pub fn oda_generators(module: &CyclicSumModule) -> Result<OdaIdealView> {
    let components = module.components.clone();
    if !module.is_monomial() {
        return Ok(OdaIdealView { components, generators: None, min_primes: None });
    }
    let generators = monomial_radical(&ann_module(module)?)?;
    let min_primes = if generators.is_unit() { Vec::new() } else { monomial_min_primes(&generators)? };
    Ok(OdaIdealView { components, generators: Some(generators), min_primes: Some(min_primes) })
}

/// `V(O(E))`, the Zariski closure of `Supp(E)`.
#[derive(Debug, Clone)]
pub struct SupportClosure {
    pub oda: OdaIdealView,
    /// Irreducible components `V(P)`; `None` outside the monomial case.
    pub min_primes: Option<Vec<MonomialPrime>>,
    /// `Supp(E)` is already closed; always the case for finitely generated
    /// modules.
    pub closed: bool,
}

impl SupportClosure {
    /// `Supp(E) = ∅`, i.e. `E = 0`.
    pub fn is_empty(&self) -> bool {
        self.oda.is_unit()
    }
}

pub fn support_closure(module: &CyclicSumModule) -> Result<SupportClosure> {
    let oda = oda_generators(module)?;
    let min_primes = oda.min_primes.clone();
    Ok(SupportClosure { oda, min_primes, closed: true })
}

/// `Ass(E) = ∪ Ass(R/I_i)`, skipping unit summands.
pub fn ass_module(module: &CyclicSumModule) -> Result<Vec<MonomialPrime>> {
    module.require_monomial()?;
    let mut out = Vec::new();
    for i in module.components.iter().filter(|i| !i.is_unit()) {
        out.extend(monomial_ass(i)?);
    }
    sort_primes(&mut out);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrucialResult {
    /// The maximal ideal `M` with `Supp(E) = {M}`, if it exists.
    pub ideal: Option<MonomialPrime>,
}

impl CrucialResult {
    pub fn exists(&self) -> bool {
        self.ideal.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalResult {
    /// The prime `J` with `√(0 : x) = J` for every nonzero `x`, if it exists.
    pub ideal: Option<MonomialPrime>,
}

impl CriticalResult {
    pub fn exists(&self) -> bool {
        self.ideal.is_some()
    }
}

/// Over a field, the only monomial prime `P` with `V(P)` a single point is
/// the ideal of all variables, so a crucial ideal exists iff `0 : E` has
/// that ideal as its unique minimal prime.
pub fn crucial_ideal(module: &CyclicSumModule) -> Result<CrucialResult> {
    module.require_monomial()?;
    module.require_nonzero()?;
    let maximal = MonomialPrime::new(0..module.ring.nvars());
    let primes = monomial_min_primes(&ann_module(module)?)?;
    let ideal = (primes == [maximal.clone()]).then_some(maximal);
    Ok(CrucialResult { ideal })
}

/// A critical ideal exists iff all proper summands are primary to one
/// common prime `P`: then every `0 : x = ∩ (I_i : f_i)` is `P`-primary or
/// the unit ideal.
pub fn critical_ideal(module: &CyclicSumModule) -> Result<CriticalResult> {
    module.require_monomial()?;
    module.require_nonzero()?;
    let mut common: Option<MonomialPrime> = None;
    for i in module.components.iter().filter(|i| !i.is_unit()) {
        match monomial_ass(i)?.as_slice() {
            [p] if common.as_ref().is_none_or(|c| c == p) => common = Some(p.clone()),
            _ => return Ok(CriticalResult { ideal: None }),
        }
    }
    Ok(CriticalResult { ideal: common })
}

/// Nagata idealization `R(+)E`: pairs `(r, x)` with
/// `(r, x)(s, y) = (rs, ry + sx)`.
#[derive(Debug, Clone)]
pub struct Idealization {
    module: CyclicSumModule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealizationElement {
    pub scalar: Polynomial,
    pub vector: ModuleElement,
}

impl Idealization {
    pub fn new(module: CyclicSumModule) -> Self {
        Idealization { module }
    }

    pub fn module(&self) -> &CyclicSumModule {
        &self.module
    }

    /// `(r, 0)`: the copy of `R`.
    pub fn scalar(&self, r: Polynomial) -> IdealizationElement {
        let zero = ModuleElement { reps: vec![Polynomial::zero(&self.module.ring); self.module.components.len()] };
        IdealizationElement { scalar: r, vector: zero }
    }

    /// `(0, e_i)`.
    pub fn generator(&self, i: usize) -> IdealizationElement {
        IdealizationElement { scalar: Polynomial::zero(&self.module.ring), vector: self.module.generator(i) }
    }

    pub fn mul(&self, a: &IdealizationElement, b: &IdealizationElement) -> IdealizationElement {
        IdealizationElement {
            scalar: &a.scalar * &b.scalar,
            vector: b.vector.scale(&a.scalar).add(&a.vector.scale(&b.scalar)),
        }
    }

    /// Whether the element lies in the subring `R`, i.e. its module part is
    /// zero in `E`.
    pub fn in_base(&self, z: &IdealizationElement) -> Result<bool> {
        z.vector.is_zero_in(&self.module)
    }

    /// `(R : R(+)E) = {r ∈ R | r·(R(+)E) ⊆ R}`, computed as the intersection
    /// over the generators `(0, e_i)` of the annihilator of the module part
    /// of `(1, 0)·(0, e_i)`.
    pub fn conductor(&self) -> Result<Ideal> {
        let one = self.scalar(Polynomial::one(&self.module.ring));
        let parts = (0..self.module.components.len())
            .map(|i| {
                let image = self.mul(&one, &self.generator(i));
                ann_element(&self.module, &image.vector)
            })
            .collect::<Result<Vec<_>>>()?;
        intersect_all(&parts)
    }
}

/// `a ∈ O(R, R(+)E)`: `a` is nilpotent on `(R(+)E)/R`, i.e.
/// `a ∈ √(R : R(+)E)`. Agrees with [`oda_member`].
pub fn idealization_oda_member(module: &CyclicSumModule, a: &Polynomial) -> Result<bool> {
    module.check_ring(a)?;
    let conductor = Idealization::new(module.clone()).conductor()?;
    radical_member(a, &conductor)
}

/// `a/1 ∈ O(E_f)`, via `a ∈ √(I_i : f^∞)` for every summand.
pub fn localized_oda_member(module: &CyclicSumModule, f: &Polynomial, a: &Polynomial) -> Result<bool> {
    module.check_ring(f)?;
    module.check_ring(a)?;
    if f.is_zero() {
        return Err(Error::InvalidArgument("cannot localize at zero".into()));
    }
    for i in &module.components {
        if !radical_member(a, &saturate(i, f)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Bound on `k` in the equivalence `a/1 ∈ O(E_f) ⇔ ∃k: f^k·a ∈ O(E)`
/// used when testing [`localized_oda_member`] by search: the product of the
/// largest generator degree and the number of summands, plus 4.
pub fn localization_search_bound(module: &CyclicSumModule) -> u32 {
    let max_deg =
        module.components.iter().flat_map(|i| i.gens().iter().map(Polynomial::total_degree)).max().unwrap_or(0);
    max_deg * module.components.len() as u32 + 4
}

/// Minimal elements of `∪ minprimes(I_i)` over the proper summands.
pub fn minimalized_component_primes(module: &CyclicSumModule) -> Result<Vec<MonomialPrime>> {
    module.require_monomial()?;
    let mut all = Vec::new();
    for i in module.components.iter().filter(|i| !i.is_unit()) {
        all.extend(monomial_min_primes(i)?);
    }
    Ok(minimal_primes_of(&all))
}

/// `R/(0 : E)`, the cyclic module with the same annihilator.
pub fn faithful_quotient(module: &CyclicSumModule) -> Result<CyclicSumModule> {
    Ok(CyclicSumModule::cyclic(ann_module(module)?))
}

/// For `M = R/I` and `N = f·M ≅ R/(I : f)`: the pair `(N, M/N)` with
/// `M/N = R/(I + (f))`.
pub fn cyclic_split(ideal: &Ideal, f: &Polynomial) -> Result<(CyclicSumModule, CyclicSumModule)> {
    let sub = CyclicSumModule::cyclic(quotient_by(ideal, f)?);
    let quotient = CyclicSumModule::cyclic(ideal.sum(&Ideal::principal(f))?);
    Ok((sub, quotient))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<PolyRing> {
        PolyRing::rational(&["x", "y"])
    }

    fn id(r: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        Polynomial::parse(s, r).unwrap()
    }

    fn module(r: &Arc<PolyRing>, comps: &[&[&str]]) -> CyclicSumModule {
        CyclicSumModule::new(r, comps.iter().map(|g| id(r, g)).collect()).unwrap()
    }

    fn elem(m: &CyclicSumModule, r: &Arc<PolyRing>, reps: &[&str]) -> ModuleElement {
        ModuleElement::new(m, reps.iter().map(|s| p(r, s)).collect()).unwrap()
    }

    fn primes(list: &[&[usize]]) -> Vec<MonomialPrime> {
        list.iter().map(|v| MonomialPrime::new(v.iter().copied())).collect()
    }

    #[test]
    fn element_annihilators() {
        let r = ring();
        let e = module(&r, &[&["x^2"], &["y"]]);
        let ann = ann_element(&e, &elem(&e, &r, &["1", "1"])).unwrap();
        assert!(ann.equals(&id(&r, &["x^2*y"])).unwrap());
        assert!(ann_element(&e, &elem(&e, &r, &["0", "0"])).unwrap().is_unit());
        let ann = ann_element(&e, &elem(&e, &r, &["x", "0"])).unwrap();
        assert!(ann.equals(&id(&r, &["x"])).unwrap());
        assert!(ModuleElement::new(&e, vec![p(&r, "1")]).is_err());
    }

    #[test]
    fn module_annihilators() {
        let r = ring();
        assert!(ann_module(&module(&r, &[&["x^2"], &["y"]])).unwrap().equals(&id(&r, &["x^2*y"])).unwrap());
        assert!(ann_module(&module(&r, &[&[]])).unwrap().is_zero());
        assert!(ann_module(&module(&r, &[&["x"], &["x"]])).unwrap().equals(&id(&r, &["x"])).unwrap());
    }

    #[test]
    fn oda_membership() {
        let r = ring();
        let e = module(&r, &[&["x^2"], &["x*y"]]);
        assert!(oda_member(&e, &p(&r, "x*y")).unwrap());
        assert!(oda_member(&e, &Polynomial::zero(&r)).unwrap());
        assert!(!oda_member(&e, &p(&r, "x")).unwrap());
    }

    #[test]
    fn oda_generator_examples() {
        let r = ring();
        let v = oda_generators(&module(&r, &[&["x^2"], &["x*y"]])).unwrap();
        assert!(v.generators().unwrap().equals(&id(&r, &["x*y"])).unwrap());
        let v = oda_generators(&module(&r, &[&[], &["x"]])).unwrap();
        assert!(v.generators().unwrap().is_zero());
        let v = oda_generators(&module(&r, &[&["x^2", "y^3"]])).unwrap();
        assert!(v.generators().unwrap().equals(&id(&r, &["x", "y"])).unwrap());
        let v = oda_generators(&module(&r, &[&["x^2 + y"]])).unwrap();
        assert!(v.generators().is_none());
        assert!(v.contains(&p(&r, "x^2 + y")).unwrap());
    }

    #[test]
    fn support_closures() {
        let r = ring();
        let s = support_closure(&module(&r, &[&["x^2"], &["x*y"]])).unwrap();
        assert_eq!(s.min_primes.as_deref(), Some(&primes(&[&[0], &[1]])[..]));
        assert!(s.closed);
        let s = support_closure(&module(&r, &[&[]])).unwrap();
        assert_eq!(s.min_primes.as_deref(), Some(&primes(&[&[]])[..]));
        let s = support_closure(&module(&r, &[&["x^2", "x*y", "y^2"]])).unwrap();
        assert_eq!(s.min_primes.as_deref(), Some(&primes(&[&[0, 1]])[..]));
        let s = support_closure(&module(&r, &[&["1"], &["1"]])).unwrap();
        assert!(s.is_empty());
        assert_eq!(s.min_primes.as_deref(), Some(&[][..]));
    }

    #[test]
    fn assassinators() {
        let r = ring();
        assert_eq!(ass_module(&module(&r, &[&["x^2"], &["x*y"]])).unwrap(), primes(&[&[0], &[1]]));
        assert_eq!(ass_module(&module(&r, &[&["x", "y"]])).unwrap(), primes(&[&[0, 1]]));
        assert_eq!(ass_module(&module(&r, &[&["x^2", "x*y", "y^2"]])).unwrap(), primes(&[&[0, 1]]));
        assert!(matches!(ass_module(&module(&r, &[&["x + y"]])), Err(Error::Unsupported(_))));
    }

    #[test]
    fn crucial_examples() {
        let r = ring();
        let c = crucial_ideal(&module(&r, &[&["x^2", "x*y", "y^2"]])).unwrap();
        assert_eq!(c.ideal, Some(MonomialPrime::new([0, 1])));
        assert!(!crucial_ideal(&module(&r, &[&["x"]])).unwrap().exists());
        let r1 = PolyRing::rational(&["x"]);
        let c = crucial_ideal(&module(&r1, &[&["x^2"]])).unwrap();
        assert_eq!(c.ideal, Some(MonomialPrime::new([0])));
        assert!(matches!(crucial_ideal(&module(&r, &[&["1"]])), Err(Error::InvalidArgument(_))));
        assert!(matches!(crucial_ideal(&module(&r, &[&["x + 1"]])), Err(Error::Unsupported(_))));
    }

    #[test]
    fn critical_examples() {
        let r = ring();
        let c = critical_ideal(&module(&r, &[&["x^2"], &["x^3"]])).unwrap();
        assert_eq!(c.ideal, Some(MonomialPrime::new([0])));
        assert!(!critical_ideal(&module(&r, &[&["x"], &["y"]])).unwrap().exists());
        let m = module(&r, &[&["x^2", "x*y", "y^2"]]);
        let c = critical_ideal(&m).unwrap();
        assert_eq!(c.ideal, Some(MonomialPrime::new([0, 1])));
        assert_eq!(c.ideal, crucial_ideal(&m).unwrap().ideal);
        assert!(matches!(critical_ideal(&module(&r, &[&["1"]])), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn idealization_examples() {
        let r = ring();
        let e = module(&r, &[&["x^2"]]);
        assert!(idealization_oda_member(&e, &p(&r, "x")).unwrap());
        let z = module(&r, &[&["1"]]);
        assert!(idealization_oda_member(&z, &p(&r, "x + 7")).unwrap());
        let e = module(&r, &[&["x*y"]]);
        assert!(!idealization_oda_member(&e, &p(&r, "x")).unwrap());
    }

    #[test]
    fn idealization_ring_laws() {
        let r = ring();
        let rr = Idealization::new(module(&r, &[&["x^2"], &["y"]]));
        let a = rr.generator(0);
        let b = rr.generator(1);
        // (0, x)(0, y) = 0
        let prod = rr.mul(&a, &b);
        assert!(prod.scalar.is_zero());
        assert!(rr.in_base(&prod).unwrap());
        let s = rr.scalar(p(&r, "x"));
        let xa = rr.mul(&s, &a);
        assert_eq!(xa.vector.reps()[0], p(&r, "x"));
        assert!(!rr.in_base(&xa).unwrap());
        assert!(rr.in_base(&rr.mul(&s, &xa)).unwrap());
        assert!(rr.conductor().unwrap().equals(&id(&r, &["x^2*y"])).unwrap());
    }

    #[test]
    fn localization_examples() {
        let r = ring();
        let e = module(&r, &[&["x^2"], &["x*y"]]);
        assert!(localized_oda_member(&e, &p(&r, "y"), &p(&r, "x")).unwrap());
        assert!(localized_oda_member(&e, &p(&r, "x"), &p(&r, "y")).unwrap());
        for a in ["x", "y", "x*y", "x + y", "1"] {
            assert_eq!(
                localized_oda_member(&e, &Polynomial::one(&r), &p(&r, a)).unwrap(),
                oda_member(&e, &p(&r, a)).unwrap()
            );
        }
        assert!(!localized_oda_member(&e, &p(&r, "y"), &p(&r, "y")).unwrap());
        assert!(matches!(localized_oda_member(&e, &Polynomial::zero(&r), &p(&r, "x")), Err(Error::InvalidArgument(_))));
    }
}
