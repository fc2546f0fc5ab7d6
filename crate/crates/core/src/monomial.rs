//! Dense exponent-vector monomials and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Hard upper bound on the number of ring variables (including auxiliary
/// elimination variables).
pub const MAX_VARS: usize = 20;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        Self {
            exps: [0; MAX_VARS],
            nvars: nvars as u8,
            degree: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut m = Self::one(exps.len());
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent overflow");
            m.degree += e;
        }
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Bitmask of the variables with positive exponent.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for (i, &e) in self.exponents().iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents().iter().all(|&e| e <= 1)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = *self;
        for i in 0..self.nvars() {
            out.exps[i] += other.exps[i];
        }
        out.degree += other.degree;
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self.exponents()
                .iter()
                .zip(other.exponents())
                .all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = *other;
        for i in 0..self.nvars() {
            out.exps[i] -= self.exps[i];
        }
        out.degree -= self.degree;
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        let mut deg = 0;
        for i in 0..self.nvars() {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            deg += out.exps[i] as u32;
        }
        out.degree = deg;
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        let mut deg = 0;
        for i in 0..self.nvars() {
            out.exps[i] = self.exps[i].min(other.exps[i]);
            deg += out.exps[i] as u32;
        }
        out.degree = deg;
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.support_mask() & other.support_mask() == 0
    }

    /// Divide by a single variable if possible.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut out = *self;
        out.exps[i] -= 1;
        out.degree -= 1;
        Some(out)
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut out = *self;
        out.exps[i] += 1;
        out.degree += 1;
        out
    }

    /// Reindex exponents: `map[i]` is the new position of variable `i`.
    pub fn remap(&self, new_nvars: usize, map: &[usize]) -> Monomial {
        let mut out = Monomial::one(new_nvars);
        for (i, &e) in self.exponents().iter().enumerate() {
            if e > 0 {
                out.exps[map[i]] += e;
            }
        }
        out.degree = self.degree;
        out
    }

    #[inline]
    pub fn cmp_by(&self, other: &Monomial, order: MonomialOrder) -> Ordering {
        debug_assert_eq!(self.nvars, other.nvars);
        let n = self.nvars();
        match order {
            MonomialOrder::Grevlex => grevlex(&self.exps[..n], &other.exps[..n], self.degree, other.degree),
            MonomialOrder::Lex => self.exps[..n].cmp(&other.exps[..n]),
            MonomialOrder::Elimination(k) => {
                let (a1, a2) = self.exps[..n].split_at(k);
                let (b1, b2) = other.exps[..n].split_at(k);
                let da: u32 = a1.iter().map(|&e| e as u32).sum();
                let db: u32 = b1.iter().map(|&e| e as u32).sum();
                grevlex(a1, b1, da, db)
                    .then_with(|| grevlex(a2, b2, self.degree - da, other.degree - db))
            }
        }
    }
}

#[inline]
fn grevlex(a: &[u16], b: &[u16], da: u32, db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {
            for i in (0..a.len()).rev() {
                if a[i] != b[i] {
                    // smaller exponent in the last differing variable wins
                    return b[i].cmp(&a[i]);
                }
            }
            Ordering::Equal
        }
        ord => ord,
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Block order: the first `k` variables are compared (by grevlex) before
    /// the remaining ones; eliminates the first block.
    Elimination(usize),
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Elimination(k) => write!(f, "elim({k})"),
        }
    }
}

pub fn compare_monomials(a: &Monomial, b: &Monomial, order: MonomialOrder) -> Result<Ordering> {
    if a.nvars != b.nvars {
        return Err(Error::LengthMismatch(a.nvars(), b.nvars()));
    }
    if let MonomialOrder::Elimination(k) = order {
        if k == 0 || k >= a.nvars() {
            return Err(Error::InvalidRing(format!(
                "elimination block {k} out of range for {} variables",
                a.nvars()
            )));
        }
    }
    Ok(a.cmp_by(b, order))
}

/// All monomials of total degree `d` in `nvars` variables, in decreasing
/// order for `order`.
pub fn graded_monomial_basis(nvars: usize, d: u32, order: MonomialOrder) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fill(&mut exps, 0, d, &mut out);
    out.sort_by(|a, b| b.cmp_by(a, order));
    out
}

fn fill(exps: &mut [u32], i: usize, rest: u32, out: &mut Vec<Monomial>) {
    if exps.is_empty() {
        if rest == 0 {
            out.push(Monomial::one(0));
        }
        return;
    }
    if i + 1 == exps.len() {
        exps[i] = rest;
        out.push(Monomial::from_exponents(exps));
        exps[i] = 0;
        return;
    }
    for e in (0..=rest).rev() {
        exps[i] = e;
        fill(exps, i + 1, rest - e, out);
    }
    exps[i] = 0;
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
