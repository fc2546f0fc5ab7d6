//! Monomial ideals: dimension via independent sets, Hilbert series
//! numerators via pivot recursion, standard monomials.

use crate::monomial::{binomial, Monomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        Self {
            nvars,
            gens: minimalize(gens),
        }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|m| m.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        let mask = m.support_mask();
        self.gens
            .iter()
            .any(|g| g.support_mask() & !mask == 0 && g.divides(m))
    }

    /// Krull dimension of k[x]/M: the largest set of variables containing
    /// no generator's support. `-1` for the unit ideal.
    pub fn dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        let mut supports: Vec<u32> = self.gens.iter().map(|g| g.support_mask()).collect();
        supports.sort_unstable();
        supports.dedup();
        let cover = min_vertex_cover(&supports, self.nvars);
        (self.nvars - cover) as i64
    }

    /// Numerator N(t) with HS(k[x]/M) = N(t) / (1-t)^n.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        let mut n = numerator(self.gens.clone());
        while n.len() > 1 && *n.last().unwrap() == 0 {
            n.pop();
        }
        n
    }

    /// Number of degree-`d` monomials outside M.
    pub fn standard_count(&self, d: u32) -> u64 {
        self.standard_monomials(d).len() as u64
    }

    /// Degree-`d` monomials outside M (unsorted).
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.nvars];
        self.walk(&mut exps, 0, d, &mut out);
        out
    }

    fn walk(&self, exps: &mut [u32], i: usize, rest: u32, out: &mut Vec<Monomial>) {
        // prune: if the partial monomial (remaining degree unassigned) is
        // already in M, every completion is too
        let partial = Monomial::from_exponents(exps);
        if self.contains(&partial) {
            return;
        }
        if self.nvars == 0 {
            if rest == 0 {
                out.push(partial);
            }
            return;
        }
        if i + 1 == self.nvars {
            exps[i] = rest;
            let m = Monomial::from_exponents(exps);
            if !self.contains(&m) {
                out.push(m);
            }
            exps[i] = 0;
            return;
        }
        for e in (0..=rest).rev() {
            exps[i] = e;
            self.walk(exps, i + 1, rest - e, out);
        }
        exps[i] = 0;
    }

    /// The squarefree monomial ideal generated by the supports.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let e: Vec<u32> = g.exponents().iter().map(|&x| (x > 0) as u32).collect();
                Monomial::from_exponents(&e)
            })
            .collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Minimal primes, each given as a variable bitmask (squarefree case:
    /// the minimal vertex covers of the support hypergraph).
    pub fn minimal_primes(&self) -> Vec<u32> {
        let supports: Vec<u32> = self.radical().gens.iter().map(|g| g.support_mask()).collect();
        let mut covers = Vec::new();
        all_covers(&supports, 0, 0, &mut covers);
        covers.sort_unstable();
        covers.dedup();
        let minimal: Vec<u32> = covers
            .iter()
            .copied()
            .filter(|&c| !covers.iter().any(|&d| d != c && d & c == d))
            .collect();
        minimal
    }
}

pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn min_vertex_cover(supports: &[u32], nvars: usize) -> usize {
    let mut best = nvars;
    cover_search(supports, 0, 0, &mut best);
    best
}

fn cover_search(supports: &[u32], chosen: u32, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    match supports.iter().find(|&&s| s & chosen == 0) {
        None => *best = size,
        Some(&s) => {
            let mut bits = s;
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                cover_search(supports, chosen | b, size + 1, best);
                bits &= bits - 1;
            }
        }
    }
}

fn all_covers(supports: &[u32], chosen: u32, start: usize, out: &mut Vec<u32>) {
    match supports.iter().find(|&&s| s & chosen == 0) {
        None => out.push(chosen),
        Some(&s) => {
            let mut bits = s;
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                all_covers(supports, chosen | b, start, out);
                bits &= bits - 1;
            }
        }
    }
}

fn poly_sub(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (k, &c) in b.iter().enumerate() {
        a[k + shift] -= c;
    }
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn numerator(gens: Vec<Monomial>) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    let nvars = gens[0].nvars();
    // variable dividing the most generators
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for i in g.support() {
            counts[i] += 1;
        }
    }
    let (pivot_var, &most) = counts.iter().enumerate().max_by_key(|&(i, c)| (*c, std::cmp::Reverse(i))).unwrap();
    if most <= 1 {
        // pairwise coprime: product of (1 - t^deg)
        let mut acc = vec![1i64];
        for g in &gens {
            let mut f = vec![0i64; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    let e = gens
        .iter()
        .map(|g| g.exponent(pivot_var))
        .filter(|&e| e > 0)
        .min()
        .unwrap();
    let mut pe = vec![0u32; nvars];
    pe[pivot_var] = e;
    let pivot = Monomial::from_exponents(&pe);

    // N(M) = N(M + (p)) + t^deg(p) N(M : p)
    let mut with_pivot = gens.clone();
    with_pivot.push(pivot);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut ex: Vec<u32> = g.exponents().iter().map(|&x| x as u32).collect();
            ex[pivot_var] = ex[pivot_var].saturating_sub(e);
            Monomial::from_exponents(&ex)
        })
        .collect();
    let mut out = numerator(with_pivot);
    let tail = numerator(colon);
    poly_sub(&mut out, &tail.iter().map(|c| -c).collect::<Vec<_>>(), e as usize);
    out
}

/// Coefficients of N(t) / (1-t)^n up to degree `up_to`.
pub fn series_from_numerator(numer: &[i64], nvars: usize, up_to: u32) -> Vec<i64> {
    (0..=up_to)
        .map(|d| {
            numer
                .iter()
                .enumerate()
                .filter(|(k, _)| *k as u32 <= d)
                .map(|(k, &c)| {
                    let m = d as u64 - k as u64;
                    if nvars == 0 {
                        if m == 0 {
                            c
                        } else {
                            0
                        }
                    } else {
                        c * binomial(m + nvars as u64 - 1, nvars as u64 - 1) as i64
                    }
                })
                .sum()
        })
        .collect()
}
