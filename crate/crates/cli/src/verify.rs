//! The verification harness: randomized and exhaustive corpora checking the
//! structural identities the engine is built on.
//!
//! Each case is generated from `(seed, suite, index)` alone and cases run in
//! parallel; results are collected in index order, so a report depends only
//! on its inputs.

use std::sync::Arc;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use supclose_core::arith;
use supclose_core::extensions::{
    semigroup_make, sg_analyze, sg_tower_check, zloc_analyze, zloc_ass_transfer, NumericalSemigroup,
    SemigroupExtension, ZLocExtension,
};
use supclose_core::ideal::{minimal_primes_of, monomial_min_primes, monomial_radical, MonomialPrime};
use supclose_core::module::{
    ann_module, ass_module, critical_ideal, crucial_ideal, cyclic_split, faithful_quotient, idealization_oda_member,
    minimalized_component_primes, oda_generators, oda_member, CyclicSumModule,
};
use supclose_core::nagata::{
    conductor_converse_witness, dedekind_mertens_check, nagata_conductor_member, nagata_oda_member, semigroup_ring,
    NagataElement, TPoly,
};
use supclose_core::zspec::{z_ann, z_ass, z_oda, z_supp, zset_closure, ZIdeal, ZModule, ZPrimeSet};
use supclose_core::{ideal_member, CoeffField, Ideal, MonomialOrder, PolyRing, Polynomial};

use crate::corpus;
use crate::error::CliError;
use crate::oracle;

pub const SUITES: &[&str] =
    &["cars", "proco4", "pro", "con1", "con2", "idealization", "sg", "zloc", "nagata", "ass", "groebner-oracle"];

/// Test polynomials per module in the membership suites.
pub const PROBES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseFailure {
    pub case: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<CaseFailure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("serializable");
        v["passed"] = json!(self.passed());
        v
    }
}

type Check = Result<(), String>;

fn ensure(cond: bool, detail: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

fn engine<T>(r: supclose_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| format!("engine error: {e}"))
}

fn describe(module: &CyclicSumModule) -> String {
    let comps: Vec<String> = module.components().iter().map(|i| i.to_string()).collect();
    format!("⊕ R/I over {:?} with I = {}", module.ring().vars(), comps.join(", "))
}

/// Runs `cases` checks in parallel and gathers failures in index order.
pub fn run_cases<F>(name: &str, cases: usize, check: F) -> SuiteOutcome
where
    F: Fn(usize) -> Check + Sync,
{
    let failures = (0..cases)
        .into_par_iter()
        .map(|i| check(i).err().map(|detail| CaseFailure { case: i, detail }))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    let warning = (cases == 0).then(|| "no cases were run".to_string());
    SuiteOutcome { name: name.into(), cases, failures, notes: Vec::new(), warning }
}

fn format_primes(ps: &[MonomialPrime], ring: &PolyRing) -> String {
    format!("{:?}", ps.iter().map(|p| p.names(ring)).collect::<Vec<_>>())
}

/// Minimal primes of `O(E)` equal the minimal component primes and the
/// minimal primes of `√(0 : E)`.
pub fn check_cars(e: &CyclicSumModule) -> Check {
    let ring = e.ring();
    let oda = engine(oda_generators(e))?;
    let got = oda.min_primes().ok_or("no monomial data")?.to_vec();
    let components = engine(minimalized_component_primes(e))?;
    let ann = engine(ann_module(e))?;
    let via_ann =
        if ann.is_unit() { Vec::new() } else { engine(monomial_min_primes(&engine(monomial_radical(&ann))?))? };
    ensure(got == components && got == via_ann, || {
        format!(
            "{}: oda {} components {} ann {}",
            describe(e),
            format_primes(&got, ring),
            format_primes(&components, ring),
            format_primes(&via_ann, ring)
        )
    })
}

/// Over ℤ: `closure(Supp) = V(O)`.
pub fn check_z_cars(e: &ZModule) -> Check {
    let closure = zset_closure(&z_supp(e));
    let v = z_oda(e).vanishing_set();
    ensure(closure == v, || format!("{e:?}: closure {closure}, V(O) {v}"))
}

/// Over ℤ: `closure(Supp) = closure(Ass)`, `Supp = Ass↑`, and
/// `√(0 : E) = 0 ⇔ (0) ∈ Supp ⇔ r > 0`; finite length gives finitely many
/// maximal primes.
pub fn check_z_ass(e: &ZModule) -> Check {
    let supp = z_supp(e);
    let ass = engine(z_ass(e))?;
    ensure(zset_closure(&supp) == zset_closure(&ass), || format!("{e:?}: closures of {supp} and {ass} differ"))?;
    ensure(supp == ass.specialization(), || format!("{e:?}: Supp {supp} is not Ass↑ of {ass}"))?;
    let nil = z_ann(e).radical() == ZIdeal(0);
    ensure(nil == supp.contains_zero() && nil == (e.free_rank() > 0), || {
        format!("{e:?}: nilradical test {nil}, generic point {}", supp.contains_zero())
    })?;
    if e.free_rank() == 0 {
        ensure(supp.is_finite() && supp.listed_primes().iter().all(|&p| ZIdeal(p).is_maximal()), || {
            format!("{e:?}: finite-length support {supp}")
        })?;
    }
    Ok(())
}

/// The infinite family `⊕_{p ∉ {2,3}} ℤ/p`: support not closed, closure
/// Spec(ℤ), Oda ideal 0.
pub fn check_cofinite_example() -> Check {
    let e = engine(ZModule::new(vec![], 0, Some(vec![2, 3])))?;
    let supp = z_supp(&e);
    ensure(supp != zset_closure(&supp), || format!("support {supp} is closed"))?;
    ensure(zset_closure(&supp) == ZPrimeSet::spec(), || format!("closure of {supp} is not Spec(ℤ)"))?;
    ensure(z_oda(&e) == ZIdeal(0), || format!("Oda ideal {:?}", z_oda(&e)))
}

fn probes(rng: &mut impl Rng, ring: &Arc<PolyRing>) -> Vec<Polynomial> {
    (0..PROBES).map(|_| corpus::test_polynomial(rng, ring)).collect()
}

fn agree(e: &CyclicSumModule, a: &Polynomial, what: &str, other: bool) -> Check {
    let ours = engine(oda_member(e, a))?;
    ensure(ours == other, || format!("{}: a = {a}: oda_member {ours}, {what} {other}", describe(e)))
}

/// `O(E) = √(0 : E)`: as ideals and on probes.
pub fn check_proco4(e: &CyclicSumModule, rng: &mut impl Rng) -> Check {
    let rad = engine(monomial_radical(&engine(ann_module(e))?))?;
    let oda = engine(oda_generators(e))?;
    let gens = oda.generators().ok_or("no monomial data")?;
    ensure(engine(gens.equals(&rad).map_err(Into::into))?, || format!("{}: O(E) = {gens}, √ann = {rad}", describe(e)))?;
    for a in probes(rng, e.ring()) {
        agree(e, &a, "√ann membership", engine(ideal_member(&a, &rad).map_err(Into::into))?)?;
    }
    Ok(())
}

/// `O(E) = O(R/(0 : E))` on probes.
pub fn check_pro(e: &CyclicSumModule, rng: &mut impl Rng) -> Check {
    let faithful = engine(faithful_quotient(e))?;
    for a in probes(rng, e.ring()) {
        agree(e, &a, "faithful quotient", engine(oda_member(&faithful, &a))?)?;
    }
    Ok(())
}

/// `O(M) = O(N) ∩ O(M/N)` for `M = R/I`, `N = f·M`.
pub fn check_con1(rng: &mut impl Rng) -> Check {
    let ring = corpus::ring_with(rng.gen_range(1..=3));
    let i = corpus::monomial_ideal_in(rng, &ring, 4);
    let f = corpus::monomial_in(rng, &ring, 3);
    let whole = CyclicSumModule::cyclic(i.clone());
    let (sub, quot) = engine(cyclic_split(&i, &f))?;
    for a in probes(rng, &ring) {
        let split = engine(oda_member(&sub, &a))? && engine(oda_member(&quot, &a))?;
        agree(&whole, &a, &format!("split along f = {f}"), split)?;
    }
    Ok(())
}

/// `O(E) = O(R, R(+)E)` on probes.
pub fn check_idealization(e: &CyclicSumModule, rng: &mut impl Rng) -> Check {
    for a in probes(rng, e.ring()) {
        agree(e, &a, "idealization", engine(idealization_oda_member(e, &a))?)?;
    }
    Ok(())
}

/// Minimal elements of `Ass(E)` are the minimal primes of `0 : E`, and
/// every associated prime contains one.
pub fn check_ass(e: &CyclicSumModule) -> Check {
    let ring = e.ring();
    let ass = engine(ass_module(e))?;
    let min = engine(monomial_min_primes(&engine(ann_module(e))?))?;
    ensure(minimal_primes_of(&ass) == min, || {
        format!("{}: Ass {} min primes {}", describe(e), format_primes(&ass, ring), format_primes(&min, ring))
    })?;
    ensure(ass.iter().all(|q| min.iter().any(|p| p.is_subset(q))), || {
        format!("{}: stray associated prime", describe(e))
    })?;
    let maximal = MonomialPrime::new(0..ring.nvars());
    let crucial = engine(crucial_ideal(e))?.exists();
    let critical_max = engine(critical_ideal(e))?.ideal == Some(maximal.clone());
    let oda_max = engine(oda_generators(e))?.min_primes() == Some(&[maximal][..]);
    ensure(crucial == critical_max && crucial == oda_max, || {
        format!("{}: crucial {crucial}, critical maximal {critical_max}, O maximal {oda_max}", describe(e))
    })
}

fn sg(gens: &[u64]) -> NumericalSemigroup {
    semigroup_make(gens).expect("coprime generators")
}

/// `⟨a, b⟩ ⊆ ℕ`: `O = crucial = critical = m_Γ`, `√C = m_Γ`, and
/// `√d(x^n) = m_Γ` for every gap `n`.
pub fn check_semigroup_pair(a: u64, b: u64) -> Check {
    let ext = SemigroupExtension::over_naturals(sg(&[a, b]));
    let an = engine(sg_analyze(&ext))?;
    let m = &an.maximal;
    let is_m = |i: Option<&supclose_core::extensions::ExponentIdeal>| i.is_some_and(|i| i.agrees_with(m, an.bound));
    ensure(an.oda.agrees_with(m, an.bound), || format!("<{a},{b}>: O = {}", an.oda))?;
    ensure(is_m(an.crucial.as_ref()), || {
        format!("<{a},{b}>: crucial {:?}", an.crucial.as_ref().map(|c| c.to_string()))
    })?;
    ensure(is_m(an.critical.as_ref()), || {
        format!("<{a},{b}>: critical {:?}", an.critical.as_ref().map(|c| c.to_string()))
    })?;
    ensure(an.conductor_radical_is_maximal, || format!("<{a},{b}>: √C ≠ m, C = {}", an.conductor))?;
    ensure(an.support_matches_conductor, || format!("<{a},{b}>: V(O) ≠ V(√C)"))?;
    ensure(an.certificates.len() == ext.small().gaps().len(), || format!("<{a},{b}>: certificate count"))?;
    for c in &an.certificates {
        ensure(c.radical_is_maximal, || format!("<{a},{b}>: √d(x^{}) = √{} ≠ m", c.exponent, c.denominator))?;
    }
    Ok(())
}

/// Towers `Γ ⊆ Γ″ ⊆ ℕ` through one intermediate semigroup: another
/// coprime pair containing `Γ`, or `Γ` with one gap adjoined.
pub fn towers() -> Vec<(Vec<u64>, Vec<u64>)> {
    let pairs = corpus::coprime_pairs();
    let mut out = Vec::new();
    for &(a, b) in &pairs {
        let small = sg(&[a, b]);
        for &(c, d) in &pairs {
            if (c, d) != (a, b) && small.is_subset(&sg(&[c, d])) {
                out.push((vec![a, b], vec![c, d]));
            }
        }
        for g in small.gaps() {
            out.push((vec![a, b], vec![a, b, g]));
        }
    }
    out
}

pub fn check_tower(small: &[u64], middle: &[u64]) -> Check {
    let ok = engine(sg_tower_check(&sg(small), &sg(middle), &NumericalSemigroup::naturals()))?;
    ensure(ok, || format!("O(R,T) ≠ O(R,S) ∩ O(S,T) for {small:?} ⊆ {middle:?} ⊆ ℕ"))
}

const TRANSFER_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

/// `ℤ ⊆ ℤ[1/n]`: `O = rad(n)`, crucial ⇔ critical ⇔ chain ⇔ prime power,
/// conductor `0` for `n > 1`, and the Ass transfer for small `p ∤ n`.
pub fn check_zloc(n: u64) -> Check {
    let ext = engine(ZLocExtension::new(n))?;
    let a = zloc_analyze(&ext);
    ensure(a.oda == ZIdeal(arith::radical(n)), || format!("n = {n}: O = {:?}", a.oda))?;
    let pp = arith::prime_power_base(n).is_some();
    ensure(a.crucial.is_some() == pp && a.critical.is_some() == pp && a.ass_chain == pp, || {
        format!("n = {n}: crucial {:?} critical {:?} chain {} prime power {pp}", a.crucial, a.critical, a.ass_chain)
    })?;
    ensure(n == 1 || a.conductor == ZIdeal(0), || format!("n = {n}: conductor {:?}", a.conductor))?;
    for p in TRANSFER_PRIMES.into_iter().filter(|p| n % p != 0) {
        let (over_z, image) = engine(zloc_ass_transfer(&ext, p))?;
        ensure(over_z == image && over_z == engine(ZPrimeSet::finite([p]))?, || {
            format!("n = {n}, p = {p}: Ass {over_z} vs image {image}")
        })?;
    }
    Ok(())
}

/// Random Dedekind–Mertens pair over `ℚ[x, y]` with `deg_T ≤ 3` and
/// coefficient degree at most 2.
pub fn check_dedekind_mertens(rng: &mut impl Rng) -> Check {
    let ring = PolyRing::rational(&["x", "y"]);
    let f = corpus::t_polynomial(rng, &ring, 3, 2);
    let g = corpus::t_polynomial(rng, &ring, 3, 2);
    ensure(engine(dedekind_mertens_check(&f, &g))?, || format!("f = {f}, g = {g}"))
}

fn random_extension(rng: &mut impl Rng) -> SemigroupExtension {
    let pairs = corpus::coprime_pairs();
    let (a, b) = pairs[rng.gen_range(0..pairs.len())];
    SemigroupExtension::over_naturals(sg(&[a, b]))
}

/// Conductor membership implies Oda membership; Oda membership of an
/// element of `R[T]` is unchanged by powering its coefficients.
pub fn check_nagata_element(rng: &mut impl Rng) -> Check {
    let ext = random_extension(rng);
    let p = corpus::semigroup_t_polynomial(rng, |_| true);
    let elem = engine(NagataElement::polynomial(&ext, p.clone()))?;
    if nagata_conductor_member(&ext, &elem) {
        ensure(engine(nagata_oda_member(&ext, &elem))?, || format!("{}: {p} in C·R(T) but not O·R(T)", ext.small()))?;
    }
    let q = corpus::semigroup_t_polynomial(rng, |e| ext.small().contains(e));
    let k = rng.gen_range(2..=4);
    let powered = engine(TPoly::new(q.ring(), q.coeffs().iter().map(|c| c.pow(k)).collect()))?;
    let base = engine(nagata_oda_member(&ext, &engine(NagataElement::polynomial(&ext, q.clone()))?))?;
    let after = engine(nagata_oda_member(&ext, &engine(NagataElement::polynomial(&ext, powered))?))?;
    ensure(base == after, || format!("{}: Oda membership of {q} changes under the power {k}", ext.small()))
}

/// `x²T` over `⟨2,5⟩ ⊆ ℕ` lies in `O·R(T)` but not in `C·R(T)`.
pub fn check_nagata_discriminator() -> Check {
    let ext = SemigroupExtension::over_naturals(sg(&[2, 5]));
    let p = engine(TPoly::parse(&semigroup_ring(), &["0", "x^2"]))?;
    let elem = engine(NagataElement::polynomial(&ext, p))?;
    ensure(engine(nagata_oda_member(&ext, &elem))?, || "x^2*T is not an Oda member".into())?;
    ensure(!nagata_conductor_member(&ext, &elem), || "x^2*T is a conductor member".into())
}

/// For a few `P` with a coefficient outside `C`, a witness `s = x^n` exists
/// that no unit-content `U` of degree at most 4 repairs.
pub fn check_converse_falsification() -> Check {
    let cases: [(&[u64], &[&str]); 3] =
        [(&[2, 5], &["0", "x^2"]), (&[2, 3], &["1", "x"]), (&[3, 4], &["x^3", "0", "x^4"])];
    for (gens, coeffs) in cases {
        let ext = SemigroupExtension::over_naturals(sg(gens));
        let p = engine(TPoly::parse(&semigroup_ring(), coeffs))?;
        let elem = engine(NagataElement::polynomial(&ext, p.clone()))?;
        ensure(!nagata_conductor_member(&ext, &elem), || format!("{p} is a conductor member"))?;
        ensure(conductor_converse_witness(&ext, &p, 4, 6).is_some(), || {
            format!("{}: no witness for {p}", ext.small())
        })?;
    }
    Ok(())
}

/// Gröbner membership of every monomial of degree at most 6 against the
/// linear-algebra oracle for a random ideal over `F_32003`.
pub fn check_groebner_oracle(rng: &mut impl Rng) -> Check {
    let p = oracle::PRIME;
    let gens = oracle::random_ideal(rng, p);
    let ring = PolyRing::new(CoeffField::Prime(p), vec!["x".into(), "y".into()], MonomialOrder::Grevlex)
        .map_err(|e| e.to_string())?;
    let polys = gens
        .iter()
        .map(|g| Polynomial::parse(&oracle::sparse_text(g), &ring))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let ideal = Ideal::new(&ring, polys).map_err(|e| e.to_string())?;
    let expected = oracle::monomial_membership(&gens, 6, 30, 6, p);
    let targets = (0..=6u32).flat_map(|s| (0..=s).map(move |b| (s - b, b)));
    for ((a, b), want) in targets.zip(expected) {
        let m = Polynomial::parse(&format!("x^{a}*y^{b}"), &ring).map_err(|e| e.to_string())?;
        let got = ideal_member(&m, &ideal).map_err(|e| e.to_string())?;
        ensure(got == want, || {
            let text: Vec<String> = gens.iter().map(oracle::sparse_text).collect();
            format!("x^{a}*y^{b} in ({}): engine {got}, oracle {want}", text.join(", "))
        })?;
    }
    Ok(())
}

fn default_count(name: &str) -> usize {
    match name {
        "groebner-oracle" => 50,
        _ => 100,
    }
}

/// Runs one suite. Randomized suites draw `count` cases (a per-suite
/// default when `None`); exhaustive suites ignore `count` unless it is 0.
pub fn run_suite(name: &str, count: Option<usize>, seed: u64) -> Result<SuiteOutcome, CliError> {
    let n = count.unwrap_or_else(|| default_count(name));
    let all_or_none = |total: usize| if count == Some(0) { 0 } else { total };
    let rng = |i| corpus::case_rng(seed, name, i);
    let outcome = match name {
        "cars" => {
            let mut out = run_cases(name, n, |i| {
                let mut r = rng(i);
                check_cars(&corpus::monomial_module(&mut r))?;
                check_z_cars(&corpus::zmodule(&mut r))
            });
            if n > 0 {
                if let Err(detail) = check_cofinite_example() {
                    out.failures.push(CaseFailure { case: n, detail });
                }
                out.notes.push("cofinite family ⊕ ℤ/p (p ∉ {2,3}): Supp not closed, O = 0".into());
            }
            out
        }
        "proco4" => run_cases(name, n, |i| {
            let mut r = rng(i);
            let e = corpus::monomial_module(&mut r);
            check_proco4(&e, &mut r)
        }),
        "pro" => run_cases(name, n, |i| {
            let mut r = rng(i);
            let e = corpus::monomial_module(&mut r);
            check_pro(&e, &mut r)
        }),
        "con1" => run_cases(name, n, |i| check_con1(&mut rng(i))),
        "idealization" => run_cases(name, n, |i| {
            let mut r = rng(i);
            let e = corpus::monomial_module(&mut r);
            check_idealization(&e, &mut r)
        }),
        "ass" => run_cases(name, n, |i| {
            let mut r = rng(i);
            check_ass(&corpus::monomial_module(&mut r))?;
            check_z_ass(&corpus::zmodule(&mut r))
        }),
        "con2" => {
            let towers = towers();
            run_cases(name, all_or_none(towers.len()), |i| check_tower(&towers[i].0, &towers[i].1))
        }
        "sg" => {
            let pairs = corpus::coprime_pairs();
            let towers = towers();
            let total = all_or_none(pairs.len() + towers.len());
            run_cases(name, total, |i| match pairs.get(i) {
                Some(&(a, b)) => check_semigroup_pair(a, b),
                None => {
                    let (s, m) = &towers[i - pairs.len()];
                    check_tower(s, m)
                }
            })
        }
        "zloc" => {
            let total = all_or_none(10_000);
            let mut out = run_cases(name, total, |i| check_zloc(i as u64 + 1));
            if total > 0 {
                let six = zloc_analyze(&engine(ZLocExtension::new(6)).map_err(CliError::internal)?);
                out.notes.push(format!(
                    "n = 6: O = 6ℤ, Supp = {}, Ass chain {}, crucial {}",
                    six.support,
                    six.ass_chain,
                    six.crucial.is_some()
                ));
            }
            out
        }
        "nagata" => {
            let mut out = run_cases(name, n, |i| {
                let mut r = rng(i);
                check_dedekind_mertens(&mut r)?;
                check_nagata_element(&mut r)
            });
            if n > 0 {
                for (k, check) in [check_nagata_discriminator(), check_converse_falsification()].into_iter().enumerate()
                {
                    if let Err(detail) = check {
                        out.failures.push(CaseFailure { case: n + k, detail });
                    }
                }
                out.notes.push("⟨2,5⟩ ⊆ ℕ: x^2*T ∈ O·R(T), ∉ C·R(T)".into());
            }
            out
        }
        "groebner-oracle" => run_cases(name, n, |i| check_groebner_oracle(&mut rng(i))),
        other => return Err(CliError::parse(format!("unknown suite `{other}`"))),
    };
    Ok(outcome)
}

/// Expands `all` and validates names, keeping the canonical suite order.
pub fn resolve_filter(filter: &[String]) -> Result<Vec<&'static str>, CliError> {
    if filter.is_empty() || filter.iter().any(|f| f == "all") {
        return Ok(SUITES.to_vec());
    }
    for f in filter {
        if !SUITES.contains(&f.as_str()) {
            return Err(CliError::parse(format!("unknown suite `{f}`; expected one of {SUITES:?} or all")));
        }
    }
    Ok(SUITES.iter().copied().filter(|s| filter.iter().any(|f| f == s)).collect())
}

/// Runs the selected suites; the boolean is the overall verdict.
pub fn verify_suites(filter: &[String], seed: u64, count: Option<usize>) -> Result<(Value, bool), CliError> {
    let names = resolve_filter(filter)?;
    let outcomes = names.iter().map(|n| run_suite(n, count, seed)).collect::<Result<Vec<_>, _>>()?;
    let passed = outcomes.iter().all(SuiteOutcome::passed);
    let result = json!({
        "seed": seed,
        "count": count,
        "passed": passed,
        "suites": outcomes.iter().map(SuiteOutcome::to_json).collect::<Vec<_>>(),
    });
    Ok((result, passed))
}

/// The ℤ-module checks alone, on `count` random finitely generated modules.
pub fn run_zspec(count: usize, seed: u64) -> SuiteOutcome {
    run_cases("zspec", count, |i| {
        let e = corpus::zmodule(&mut corpus::case_rng(seed, "zspec", i));
        check_z_cars(&e)?;
        check_z_ass(&e)
    })
}
