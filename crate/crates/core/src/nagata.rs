//! Polynomials in an auxiliary variable `T`, their content ideals, and
//! membership in the conductor and Oda ideal of `R(T) ⊆ S(T)` for semigroup
//! extensions `R = k[Γ] ⊆ S = k[Γ′]`.
//!
//! `R(T)` is the localization of `R[T]` at polynomials of unit content. It
//! is never built; an element is a pair `(P, Q)` and only membership
//! questions are answered. For an ideal `I` of `R`, `P/Q ∈ IR(T)` iff
//! `c(P) ⊆ I`: if `HP ∈ I[T]` with `c(H) = R`, Dedekind–Mertens gives
//! `c(P) = c(H)^{m+1}c(P) = c(H)^m c(HP) ⊆ I`. For the monomial ideals of
//! `k[Γ]` this is an exponent check on every coefficient.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::extensions::{sg_conductor, sg_oda, ExponentIdeal, SemigroupExtension};
use crate::groebner::Ideal;
use crate::poly::{same_ring, PolyRing, Polynomial};

/// `Σ c_i T^i` with `c_i` in a polynomial ring; `coeffs[i]` is `c_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPoly {
    ring: Arc<PolyRing>,
    coeffs: Vec<Polynomial>,
}

impl TPoly {
    pub fn new(ring: &Arc<PolyRing>, coeffs: Vec<Polynomial>) -> Result<Self> {
        if coeffs.iter().any(|c| !same_ring(c.ring(), ring)) {
            return Err(crate::poly::PolyError::RingMismatch.into());
        }
        let mut p = TPoly { ring: ring.clone(), coeffs };
        p.trim();
        Ok(p)
    }

    /// Coefficients written lowest degree first.
    pub fn parse(ring: &Arc<PolyRing>, coeffs: &[&str]) -> Result<Self> {
        let coeffs = coeffs.iter().map(|c| Polynomial::parse(c, ring)).collect::<Result<Vec<_>, _>>()?;
        Self::new(ring, coeffs)
    }

    /// Splits a polynomial over `ring + [t]` by powers of the variable `t`.
    pub fn from_polynomial(p: &Polynomial, t: usize, ring: &Arc<PolyRing>) -> Result<Self> {
        let outer = p.ring();
        if t >= outer.nvars() || outer.nvars() != ring.nvars() + 1 {
            return Err(Error::InvalidArgument("variable layout does not match".into()));
        }
        let mut coeffs: Vec<Vec<_>> = Vec::new();
        for (m, c) in p.terms() {
            let e = m.exponents();
            let deg = e[t] as usize;
            let rest: Vec<u32> = e.iter().enumerate().filter(|(i, _)| *i != t).map(|(_, &x)| x).collect();
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, Vec::new());
            }
            coeffs[deg].push((crate::poly::Monomial::new(rest), c.clone()));
        }
        let coeffs = coeffs.into_iter().map(|terms| Polynomial::from_terms(ring, terms)).collect();
        Self::new(ring, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Polynomial::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &TPoly) -> TPoly {
        if self.is_zero() || other.is_zero() {
            return TPoly { ring: self.ring.clone(), coeffs: Vec::new() };
        }
        let mut out = vec![Polynomial::zero(&self.ring); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        let mut p = TPoly { ring: self.ring.clone(), coeffs: out };
        p.trim();
        p
    }

    pub fn scale(&self, c: &Polynomial) -> TPoly {
        let mut p = TPoly { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|a| a * c).collect() };
        p.trim();
        p
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})*T"),
                _ => format!("({c})*T^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The ideal generated by the `T`-coefficients.
pub fn content(p: &TPoly) -> Ideal {
    Ideal::new(&p.ring, p.coeffs.clone()).expect("coefficients share the ring")
}

fn ideal_power(i: &Ideal, k: usize) -> Result<Ideal> {
    let mut out = Ideal::unit(i.ring());
    for _ in 0..k {
        // keep the generator count down between steps
        let step = out.product(i)?;
        out = Ideal::new(i.ring(), step.canonical_gens().to_vec())?;
    }
    Ok(out)
}

/// `c(f)^{m+1} c(g) = c(f)^m c(fg)` with `m = deg g`.
pub fn dedekind_mertens_check(f: &TPoly, g: &TPoly) -> Result<bool> {
    if !same_ring(&f.ring, &g.ring) {
        return Err(crate::poly::PolyError::RingMismatch.into());
    }
    let m = g.degree().unwrap_or(0);
    let cf = content(f);
    let lhs = ideal_power(&cf, m + 1)?.product(&content(g))?;
    let rhs = ideal_power(&cf, m)?.product(&content(&f.mul(g)))?;
    Ok(lhs.equals(&rhs)?)
}

/// `P/Q` with `P ∈ S[T]`, `Q ∈ R[T]` of unit content, over the univariate
/// ring `k[x] ⊇ k[Γ′]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NagataElement {
    numerator: TPoly,
    denominator: TPoly,
}

fn exponents_of(p: &Polynomial) -> impl Iterator<Item = u64> + '_ {
    p.terms().iter().map(|(m, _)| m.exponents()[0] as u64)
}

impl NagataElement {
    /// Checks that `P` has coefficients in `k[Γ′]`, `Q` in `k[Γ]`, and
    /// `c(Q) = k[Γ]`. The last is tested in `k[x]`: the extension is
    /// integral, so a proper ideal of `k[Γ]` stays proper in `k[x]`.
    pub fn new(ext: &SemigroupExtension, numerator: TPoly, denominator: TPoly) -> Result<Self> {
        if numerator.ring.nvars() != 1 || !same_ring(&numerator.ring, &denominator.ring) {
            return Err(Error::InvalidArgument("expected polynomials in T over k[x]".into()));
        }
        let in_large = numerator.coeffs.iter().flat_map(exponents_of).all(|e| ext.large().contains(e));
        if !in_large {
            return Err(Error::InvalidArgument(format!("numerator {numerator} is not over {}", ext.large())));
        }
        let in_small = denominator.coeffs.iter().flat_map(exponents_of).all(|e| ext.small().contains(e));
        if !in_small {
            return Err(Error::InvalidArgument(format!("denominator {denominator} is not over {}", ext.small())));
        }
        if !content(&denominator).is_unit() {
            return Err(Error::InvalidArgument(format!("denominator {denominator} lacks unit content")));
        }
        Ok(NagataElement { numerator, denominator })
    }

    /// `P/1`.
    pub fn polynomial(ext: &SemigroupExtension, numerator: TPoly) -> Result<Self> {
        let one = TPoly::new(&numerator.ring, vec![Polynomial::one(&numerator.ring)])?;
        Self::new(ext, numerator, one)
    }

    pub fn numerator(&self) -> &TPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &TPoly {
        &self.denominator
    }
}

/// Univariate ring `ℚ[x]` hosting `k[Γ] ⊆ k[Γ′]`.
pub fn semigroup_ring() -> Arc<PolyRing> {
    PolyRing::rational(&["x"])
}

fn coefficients_in(ideal: &ExponentIdeal, elem: &NagataElement) -> bool {
    elem.numerator.coeffs.iter().flat_map(exponents_of).all(|e| ideal.contains(e))
}

/// `P/Q ∈ (R(T) : S(T)) = C·R(T)` where `C` is the conductor.
pub fn nagata_conductor_member(ext: &SemigroupExtension, elem: &NagataElement) -> bool {
    coefficients_in(&sg_conductor(ext), elem)
}

/// `P/Q ∈ O(R(T), S(T)) = O(R, S)·R(T)`.
pub fn nagata_oda_member(ext: &SemigroupExtension, elem: &NagataElement) -> Result<bool> {
    if !ext.is_proper() {
        return Err(Error::InvalidArgument("the extension is trivial".into()));
    }
    Ok(coefficients_in(&sg_oda(ext)?, elem))
}

/// Whether `P` stays in `R[T]`.
fn over_small(ext: &SemigroupExtension, p: &TPoly) -> bool {
    p.coeffs.iter().flat_map(exponents_of).all(|e| ext.small().contains(e))
}

/// Bounded search for `P ∉ C·R(T)`: a monomial `s = x^n ∈ S` such that no
/// `U` of degree at most `max_deg`, with monomial coefficients `x^e`
/// (`e ∈ Γ`, `e ≤ max_exp`) or zero and some coefficient equal to 1, puts
/// `sUP` in `R[T]`. Returns the first such exponent `n`, or `None` when `P`
/// is a conductor element or every candidate witness is defeated.
pub fn conductor_converse_witness(ext: &SemigroupExtension, p: &TPoly, max_deg: usize, max_exp: u64) -> Option<u64> {
    let ring = p.ring().clone();
    let x_pow = |e: u64| {
        Polynomial::monomial(
            &ring,
            crate::poly::Monomial::new(vec![e as u32]),
            num_rational::BigRational::from_integer(1.into()),
        )
    };
    let options: Vec<Option<u64>> =
        std::iter::once(None).chain((0..=max_exp).filter(|&e| ext.small().contains(e)).map(Some)).collect();
    let witnesses: Vec<u64> = (0..=ext.truncation_bound())
        .filter(|&n| ext.large().contains(n))
        .filter(|&n| !over_small(ext, &p.scale(&x_pow(n))))
        .collect();
    let slots = max_deg + 1;
    'witness: for n in witnesses {
        let sp = p.scale(&x_pow(n));
        let mut choice = vec![0usize; slots];
        loop {
            if choice.iter().any(|&c| options[c] == Some(0)) {
                let coeffs =
                    choice.iter().map(|&c| options[c].map_or_else(|| Polynomial::zero(&ring), x_pow)).collect();
                let u = TPoly::new(&ring, coeffs).expect("same ring");
                if over_small(ext, &u.mul(&sp)) {
                    continue 'witness;
                }
            }
            let mut i = 0;
            while i < slots {
                choice[i] += 1;
                if choice[i] < options.len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == slots {
                return Some(n);
            }
        }
    }
    None
}
