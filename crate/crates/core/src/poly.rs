//! Exact multivariate polynomials over ℚ or ℤ/p.
//!
//! A [`Polynomial`] is a list of `(Monomial, coefficient)` pairs kept sorted
//! strictly descending in the ring's monomial order, with no zero
//! coefficients. Coefficients are [`BigRational`]; over a prime field they are
//! integers in `0..p`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("zero denominator at position {pos}")]
    ZeroDenominator { pos: usize },
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
}

/// Coefficient field of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CoeffField {
    Rational,
    Prime(u64),
}

impl CoeffField {
    fn modulus(&self) -> Option<BigInt> {
        match self {
            CoeffField::Rational => None,
            CoeffField::Prime(p) => Some(BigInt::from(*p)),
        }
    }

    /// Canonical representative of `c`; `None` if `c` has a denominator that
    /// vanishes in the field.
    pub fn try_normalize(&self, c: BigRational) -> Option<BigRational> {
        match self.modulus() {
            None => Some(c),
            Some(p) => {
                let numer = c.numer().mod_floor(&p);
                let denom = c.denom().mod_floor(&p);
                if denom.is_zero() {
                    return None;
                }
                let inv = mod_inverse(&denom, &p);
                Some(BigRational::from_integer((numer * inv).mod_floor(&p)))
            }
        }
    }

    pub fn normalize(&self, c: BigRational) -> BigRational {
        self.try_normalize(c).expect("denominator divisible by the field characteristic")
    }

    fn reduce(&self, c: BigRational) -> BigRational {
        match self.modulus() {
            None => c,
            Some(p) => BigRational::from_integer(c.to_integer().mod_floor(&p)),
        }
    }

    pub fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &BigRational) -> BigRational {
        self.reduce(-a)
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        match self.modulus() {
            None => a.recip(),
            Some(p) => BigRational::from_integer(mod_inverse(&a.to_integer(), &p)),
        }
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let ext = a.extended_gcd(p);
    ext.x.mod_floor(p)
}

/// Monomial orders. `Block(k)` compares the first `k` variables by grevlex
/// and breaks ties by grevlex on the remaining ones; it is an elimination
/// order for the first block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    Block(usize),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex(&a.0, &b.0),
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Block(k) => {
                let k = k.min(a.0.len());
                grevlex(&a.0[..k], &b.0[..k]).then_with(|| grevlex(&a.0[k..], &b.0[k..]))
            }
        }
    }
}

/// Exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[index] = exp;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    pub fn squarefree(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| e.min(1)).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|&e| e * k).collect())
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A polynomial ring `k[x_1, ..., x_n]` with a fixed variable order and
/// monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: CoeffField,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: CoeffField, vars: Vec<String>, order: MonomialOrder) -> Result<Arc<PolyRing>, PolyError> {
        if let CoeffField::Prime(p) = field {
            if !arith::is_prime(p) {
                return Err(PolyError::InvalidRing(format!("{p} is not prime")));
            }
        }
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(PolyError::InvalidRing(format!("bad variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(PolyError::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    /// `ℚ[vars]` with grevlex. Panics on invalid names; meant for tests and
    /// internal fixed rings.
    pub fn rational(vars: &[&str]) -> Arc<PolyRing> {
        Self::new(CoeffField::Rational, vars.iter().map(|s| s.to_string()).collect(), MonomialOrder::Grevlex)
            .expect("valid ring")
    }

    pub fn field(&self) -> &CoeffField {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Arc<PolyRing> {
        Arc::new(PolyRing { order, ..self.clone() })
    }

    /// A variable name not used in this ring, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        let mut k = 0;
        while self.var_index(&name).is_some() {
            k += 1;
            name = format!("{base}{k}");
        }
        name
    }

    /// This ring with one extra variable appended last.
    pub fn extended(&self, base: &str) -> Arc<PolyRing> {
        let mut vars = self.vars.clone();
        vars.push(self.fresh_name(base));
        Arc::new(PolyRing { vars, ..self.clone() })
    }

    pub(crate) fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub type Term = (Monomial, BigRational);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: BigRational) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_int(ring: &Arc<PolyRing>, c: i64) -> Self {
        Self::constant(ring, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), index, 1), BigRational::one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: BigRational) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "exponent vector length");
        let c = ring.field.normalize(c);
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Canonicalizes an arbitrary term list: normalizes coefficients, merges
    /// equal monomials, drops zeros and sorts.
    pub fn from_terms<I>(ring: &Arc<PolyRing>, terms: I) -> Self
    where
        I: IntoIterator<Item = Term>,
    {
        let mut acc: HashMap<Monomial, BigRational> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "exponent vector length");
            let c = ring.field.normalize(c);
            let slot = acc.entry(m).or_insert_with(BigRational::zero);
            *slot = ring.field.add(slot, &c);
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &Arc<PolyRing>, acc: HashMap<Monomial, BigRational>) -> Self {
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds from terms already sorted descending with nonzero, normalized
    /// coefficients.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Drops the leading term in place.
    pub(crate) fn pop_leading(&mut self) -> Option<Term> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.iter().find(|(t, _)| t == m).map(|(_, c)| c.clone()).unwrap_or_else(BigRational::zero)
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        same_ring(&self.ring, &other.ring)
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&self.ring.field.inv(lc)),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        let f = &self.ring.field;
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), f.mul(a, c))).collect(),
        }
    }

    /// `self * c * m`. Monomial multiplication preserves the order, so no
    /// resort is needed.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Polynomial {
        let f = &self.ring.field;
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(t, a)| (t.mul(m), f.mul(a, c))).collect() }
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        assert!(self.same_ring(other), "ring mismatch");
        let f = &self.ring.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match self.ring.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { f.neg(cb) } else { cb.clone() };
                    out.push((mb.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { f.sub(ca, cb) } else { f.add(ca, cb) };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for (m, c) in &other.terms[j..] {
            let c = if negate_other { f.neg(c) } else { c.clone() };
            out.push((m.clone(), c));
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn pow(&self, mut exp: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide `self`
    /// (or `g = 0`).
    pub fn div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        assert!(self.same_ring(g), "ring mismatch");
        let (lm, lc) = g.leading_term()?;
        let inv = self.ring.field.inv(lc);
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.leading_term() {
            let q = m.div(lm)?;
            let qc = self.ring.field.mul(c, &inv);
            rest = &rest - &g.mul_term(&q, &qc);
            quotient.push((q, qc));
        }
        Some(Polynomial { ring: self.ring.clone(), terms: quotient })
    }

    /// Reinterprets this polynomial in `target`, sending variable `i` to
    /// position `map[i]`. Variables of `target` not hit get exponent 0.
    pub fn remap(&self, target: &Arc<PolyRing>, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.ring.nvars());
        let n = target.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; n];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[map[i]] += x;
            }
            (Monomial(e), c.clone())
        });
        Polynomial::from_terms(target, terms)
    }

    /// Embeds into a ring whose first `nvars()` variables coincide with
    /// this ring's.
    pub fn embed(&self, target: &Arc<PolyRing>) -> Polynomial {
        let map: Vec<usize> = (0..self.ring.nvars()).collect();
        self.remap(target, &map)
    }

    /// Inverse of [`embed`](Self::embed): drops trailing variables, which
    /// must not occur.
    pub fn restrict(&self, target: &Arc<PolyRing>) -> Polynomial {
        let n = target.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            debug_assert!(m.exponents()[n..].iter().all(|&e| e == 0));
            (Monomial(m.exponents()[..n].to_vec()), c.clone())
        });
        Polynomial::from_terms(target, terms)
    }

    pub fn parse(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial, PolyError> {
        parse_polynomial(text, ring)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let f = &self.ring.field;
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), f.neg(c))).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(self.same_ring(rhs), "ring mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(m, c);
        }
        let f = &self.ring.field;
        let mut acc: HashMap<Monomial, BigRational> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let slot = acc.entry(ma.mul(mb)).or_insert_with(BigRational::zero);
                *slot = f.add(slot, &f.mul(ca, cb));
            }
        }
        Polynomial::from_map(&self.ring, acc)
    }
}

fn write_coeff(out: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.is_integer() {
        write!(out, "{}", c.numer())
    } else {
        write!(out, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(out, "-")?,
                (0, false) => {}
                (_, true) => write!(out, " - ")?,
                (_, false) => write!(out, " + ")?,
            }
            let abs = c.abs();
            let factors: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { self.ring.vars[i].clone() } else { format!("{}^{}", self.ring.vars[i], e) })
                .collect();
            if factors.is_empty() {
                write_coeff(out, &abs)?;
            } else {
                if !abs.is_one() {
                    write_coeff(out, &abs)?;
                    write!(out, "*")?;
                }
                write!(out, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Syntax { pos: self.pos, message: message.into() })
    }

    fn nat(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.syntax("expected a natural number");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("decimal digits"))
    }

    fn small_nat(&mut self) -> Result<u32, PolyError> {
        let start = self.pos;
        let n = self.nat()?;
        u32::try_from(n).map_err(|_| PolyError::Syntax { pos: start, message: "exponent too large".into() })
    }

    fn coeff(&mut self) -> Result<BigRational, PolyError> {
        let numer = self.nat()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let denom_pos = self.pos;
            let denom = self.nat()?;
            if denom.is_zero() {
                return Err(PolyError::ZeroDenominator { pos: denom_pos });
            }
            let c = BigRational::new(numer, denom);
            return self.ring.field.try_normalize(c).ok_or(PolyError::ZeroDenominator { pos: denom_pos });
        }
        Ok(BigRational::from_integer(numer))
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<(), PolyError> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => {}
            _ => return self.syntax("expected a variable"),
        }
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        let index = self
            .ring
            .var_index(name)
            .ok_or_else(|| PolyError::UnknownVariable { name: name.to_string(), pos: start })?;
        let mut e = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            e = self.small_nat()?;
        }
        exps[index] += e;
        Ok(())
    }

    fn factors(&mut self, exps: &mut [u32]) -> Result<(), PolyError> {
        self.factor(exps)?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(exps)?;
        }
        Ok(())
    }

    fn term(&mut self) -> Result<Term, PolyError> {
        let mut exps = vec![0; self.ring.nvars()];
        let c = match self.peek() {
            Some(d) if d.is_ascii_digit() => {
                let c = self.coeff()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.factors(&mut exps)?;
                }
                c
            }
            Some(_) => {
                self.factors(&mut exps)?;
                BigRational::one()
            }
            None => return self.syntax("unexpected end of input"),
        };
        Ok((Monomial(exps), c))
    }

    fn polynomial(&mut self) -> Result<Polynomial, PolyError> {
        let mut terms = Vec::new();
        let mut negative = false;
        match self.peek() {
            Some(b'-') => {
                negative = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negative { -c } else { c }));
            match self.peek() {
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                None => break,
                Some(_) => return self.syntax("expected `+`, `-` or end of input"),
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(self.ring, terms))
    }
}

/// Parses the textual polynomial grammar:
///
/// ```text
/// poly    := [sign] term { sign term }     sign := "+" | "-"
/// term    := coeff [ "*" factors ] | factors
/// factors := var [ "^" nat ] { "*" var [ "^" nat ] }
/// coeff   := nat [ "/" nat ]
/// ```
///
/// Whitespace between tokens is ignored.
pub fn parse_polynomial(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial, PolyError> {
    Parser { src: text.as_bytes(), pos: 0, ring }.polynomial()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    Pow,
}

#[derive(Debug, Clone, Copy)]
pub enum Operand<'a> {
    Poly(&'a Polynomial),
    Nat(u32),
}

/// Checked entry point for the four ring operations.
pub fn poly_arith(kind: ArithKind, f: &Polynomial, g: Operand<'_>) -> Result<Polynomial, PolyError> {
    match (kind, g) {
        (ArithKind::Pow, Operand::Nat(e)) => Ok(f.pow(e)),
        (ArithKind::Pow, Operand::Poly(_)) => {
            Err(PolyError::Syntax { pos: 0, message: "pow expects a natural exponent".into() })
        }
        (_, Operand::Nat(_)) => Err(PolyError::Syntax { pos: 0, message: "expected a polynomial operand".into() }),
        (kind, Operand::Poly(g)) => {
            if !f.same_ring(g) {
                return Err(PolyError::RingMismatch);
            }
            Ok(match kind {
                ArithKind::Add => f + g,
                ArithKind::Sub => f - g,
                _ => f * g,
            })
        }
    }
}
