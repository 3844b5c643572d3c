//! Ideal membership by linear algebra, independent of the Gröbner engine.
//!
//! Over `F_p[x, y]`, `f ∈ I` iff `f` lies in the span of the products
//! `m·g` (`m` a monomial, `g` a generator) of degree at most `D` for some
//! `D`. A fixed `D` certifies membership; failing to certify at every `D`
//! up to a cap is taken as non-membership. For homogeneous generators
//! `D = deg f` is already exact.

use rand::Rng;

/// Sparse polynomial in two variables over `F_p`: `((a, b), c)` is
/// `c·x^a·y^b`.
pub type SparsePoly = Vec<((u32, u32), u64)>;

pub const PRIME: u64 = 32003;

fn inverse(a: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn degree(p: &SparsePoly) -> u32 {
    p.iter().map(|((a, b), _)| a + b).max().unwrap_or(0)
}

/// Column index of `x^a y^b` among monomials of degree at most `d`,
/// ordered by degree then by the power of `y`.
fn column(a: u32, b: u32) -> usize {
    let deg = (a + b) as usize;
    deg * (deg + 1) / 2 + b as usize
}

fn columns(d: u32) -> usize {
    let d = d as usize + 1;
    d * (d + 1) / 2
}

/// Row-echelon span of `{m·g : deg(m·g) ≤ D}`.
pub struct Macaulay {
    p: u64,
    width: usize,
    /// Pivot column to normalized row (pivot entry 1).
    rows: Vec<Option<Vec<u64>>>,
}

impl Macaulay {
    pub fn new(gens: &[SparsePoly], d: u32, p: u64) -> Self {
        let width = columns(d);
        let mut m = Macaulay { p, width, rows: vec![None; width] };
        for g in gens {
            let dg = degree(g);
            if g.iter().all(|(_, c)| c % p == 0) || dg > d {
                continue;
            }
            for s in 0..=(d - dg) {
                for b in 0..=s {
                    let a = s - b;
                    let mut row = vec![0u64; width];
                    for &((ga, gb), c) in g {
                        let k = column(ga + a, gb + b);
                        row[k] = (row[k] + c) % p;
                    }
                    m.insert(row);
                }
            }
        }
        m
    }

    /// Reduces `row` against the pivots, highest column first, and returns
    /// the remainder.
    fn reduce(&self, mut row: Vec<u64>) -> Vec<u64> {
        for k in (0..self.width).rev() {
            if row[k] == 0 {
                continue;
            }
            if let Some(pivot) = &self.rows[k] {
                let factor = row[k];
                for (r, &q) in row.iter_mut().zip(pivot).take(k + 1) {
                    if q != 0 {
                        *r = (*r + self.p - factor * q % self.p) % self.p;
                    }
                }
            }
        }
        row
    }

    fn insert(&mut self, row: Vec<u64>) {
        let row = self.reduce(row);
        if let Some(k) = (0..self.width).rev().find(|&k| row[k] != 0) {
            let inv = inverse(row[k], self.p);
            self.rows[k] = Some(row.iter().map(|&c| c * inv % self.p).collect());
        }
    }

    pub fn contains(&self, f: &SparsePoly) -> bool {
        if degree(f) as usize >= self.width {
            return false;
        }
        let mut row = vec![0u64; self.width];
        for &((a, b), c) in f {
            let k = column(a, b);
            if k >= self.width {
                return false;
            }
            row[k] = (row[k] + c) % self.p;
        }
        self.reduce(row).iter().all(|&c| c == 0)
    }
}

/// Membership of every monomial of degree at most `max_deg`, in the order
/// `(a, b)` by degree then power of `y`. Degrees `D` run from `max_deg` to
/// `cap` in steps of `step`.
pub fn monomial_membership(gens: &[SparsePoly], max_deg: u32, cap: u32, step: u32, p: u64) -> Vec<bool> {
    let targets: Vec<(u32, u32)> = (0..=max_deg).flat_map(|s| (0..=s).map(move |b| (s - b, b))).collect();
    let mut known = vec![false; targets.len()];
    let mut d = max_deg;
    loop {
        let span = Macaulay::new(gens, d, p);
        for (flag, &(a, b)) in known.iter_mut().zip(&targets) {
            if !*flag {
                *flag = span.contains(&vec![((a, b), 1)]);
            }
        }
        if known.iter().all(|&k| k) || d >= cap {
            return known;
        }
        d = (d + step).min(cap);
    }
}

/// Up to 3 generators of degree at most 3 in `x, y` over `F_p`; half of the
/// draws are homogeneous.
pub fn random_ideal(rng: &mut impl Rng, p: u64) -> Vec<SparsePoly> {
    let homogeneous = rng.gen_bool(0.5);
    let k = rng.gen_range(1..=3);
    (0..k)
        .map(|_| {
            let top = rng.gen_range(1..=3u32);
            let n = rng.gen_range(1..=4);
            (0..n)
                .map(|_| {
                    let s = if homogeneous { top } else { rng.gen_range(0..=top) };
                    let b = rng.gen_range(0..=s);
                    ((s - b, b), rng.gen_range(1..p))
                })
                .collect()
        })
        .collect()
}

pub fn sparse_text(p: &SparsePoly) -> String {
    if p.is_empty() {
        return "0".into();
    }
    p.iter().map(|((a, b), c)| format!("{c}*x^{a}*y^{b}")).collect::<Vec<_>>().join(" + ")
}
