//! Graded Betti numbers of R/I from Koszul homology, projective dimension,
//! the Cohen–Macaulay test and the shift-bound certificate.
//!
//! `Tor_i(R/I, k)_j` is the homology of the strand
//! `∧^{i+1} V ⊗ (R/I)_{j-i-1} → ∧^i V ⊗ (R/I)_{j-i} → ∧^{i-1} V ⊗ (R/I)_{j-i+1}`,
//! computed with standard-monomial bases of R/I and dense ranks over GF(p).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::hilbert::MonomialIdeal;
use crate::ideal::Ideal;
use crate::linalg::rank;
use crate::monomial::{binomial, Monomial};
use crate::poly::Polynomial;
use crate::ring::Ring;

pub const DEFAULT_BETTI_CAP: u32 = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBettiTable {
    entries: BTreeMap<(usize, u32), u64>,
    degree_cap: u32,
    euler_certified: bool,
}

impl GradedBettiTable {
    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries keyed by (homological index, internal degree).
    pub fn entries(&self) -> &BTreeMap<(usize, u32), u64> {
        &self.entries
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn is_certified(&self) -> bool {
        self.euler_certified
    }

    /// Total Betti number β_i.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, v)| v)
            .sum()
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Internal degrees of homological column `i`.
    pub fn shifts(&self, i: usize) -> Vec<u32> {
        self.entries
            .keys()
            .filter(|(k, _)| *k == i)
            .map(|&(_, j)| j)
            .collect()
    }

    /// Σ_{i,j} (-1)^i β_{i,j} t^j.
    pub fn euler_polynomial(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut out = vec![0i64; top as usize + 1];
        for (&(i, j), &b) in &self.entries {
            let s = if i % 2 == 0 { 1 } else { -1 };
            out[j as usize] += s * b as i64;
        }
        out
    }

    fn require_certified(&self) -> Result<()> {
        if self.euler_certified {
            Ok(())
        } else {
            Err(Error::Uncertified { cap: self.degree_cap })
        }
    }
}

impl fmt::Display for GradedBettiTable {
    /// Macaulay2-style layout: column i, row j - i.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = self.projective_dimension();
        let max_row = self.entries.keys().map(|&(i, j)| j as usize - i).max().unwrap_or(0);
        write!(f, "      ")?;
        for i in 0..=pd {
            write!(f, "{i:>6}")?;
        }
        writeln!(f)?;
        write!(f, "total:")?;
        for i in 0..=pd {
            write!(f, "{:>6}", self.total(i))?;
        }
        writeln!(f)?;
        for row in 0..=max_row {
            write!(f, "{row:>5}:")?;
            for i in 0..=pd {
                let b = self.get(i, (i + row) as u32);
                if b == 0 {
                    write!(f, "{:>6}", "-")?;
                } else {
                    write!(f, "{b:>6}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Standard monomials of R/I by degree, with multiplication-by-variable
/// maps expressed in those bases.
struct Quotient<'a> {
    ring: &'a Ring,
    gb: &'a GroebnerBasis,
    lead: MonomialIdeal,
    bases: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
    /// mult[d][b][k] = x_k * basis[d][b] in basis[d+1]
    mult: Vec<Vec<Vec<Vec<(usize, u32)>>>>,
}

impl<'a> Quotient<'a> {
    fn new(ring: &'a Ring, gb: &'a GroebnerBasis) -> Self {
        Self {
            ring,
            gb,
            lead: MonomialIdeal::new(ring.nvars(), gb.leading_monomials()),
            bases: Vec::new(),
            index: Vec::new(),
            mult: Vec::new(),
        }
    }

    fn ensure_basis(&mut self, d: usize) {
        while self.bases.len() <= d {
            let deg = self.bases.len() as u32;
            let mut b = self.lead.standard_monomials(deg);
            b.sort_by(|x, y| y.cmp_by(x, self.ring.order()));
            self.index.push(b.iter().enumerate().map(|(i, m)| (*m, i)).collect());
            self.bases.push(b);
        }
    }

    fn dim(&mut self, d: i64) -> usize {
        if d < 0 {
            return 0;
        }
        self.ensure_basis(d as usize);
        self.bases[d as usize].len()
    }

    fn ensure_mult(&mut self, d: usize) {
        self.ensure_basis(d + 1);
        while self.mult.len() <= d {
            let deg = self.mult.len();
            let n = self.ring.nvars();
            let mut table = Vec::with_capacity(self.bases[deg].len());
            for m in &self.bases[deg] {
                let mut row = Vec::with_capacity(n);
                for k in 0..n {
                    let prod = m.mul_var(k);
                    let image: Vec<(usize, u32)> = if let Some(&idx) = self.index[deg + 1].get(&prod) {
                        vec![(idx, 1)]
                    } else {
                        let nf = self.gb.normal_form(&Polynomial::monomial(prod));
                        nf.terms()
                            .iter()
                            .map(|(t, c)| (self.index[deg + 1][t], *c))
                            .collect()
                    };
                    row.push(image);
                }
                table.push(row);
            }
            self.mult.push(table);
        }
    }
}

/// Subsets of {0..n} of size i, as sorted index vectors.
fn subsets(n: usize, i: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == i {
            out.push(cur.clone());
            return;
        }
        for s in start..n {
            cur.push(s);
            rec(s + 1, n, i, cur, out);
            cur.pop();
        }
    }
    rec(0, n, i, &mut cur, &mut out);
    out
}

/// Rank of the Koszul differential `∧^i ⊗ (R/I)_{j-i} → ∧^{i-1} ⊗ (R/I)_{j-i+1}`.
fn koszul_rank(q: &mut Quotient<'_>, n: usize, i: usize, j: u32) -> usize {
    if i == 0 || i > n || (j as usize) < i {
        return 0;
    }
    let src_deg = j as usize - i;
    let rows_b = q.dim(src_deg as i64);
    if rows_b == 0 {
        return 0;
    }
    q.ensure_mult(src_deg);
    let tgt_b = q.dim(src_deg as i64 + 1);
    if tgt_b == 0 {
        return 0;
    }
    let src_sets = subsets(n, i);
    let tgt_sets = subsets(n, i - 1);
    let tgt_pos: HashMap<&[usize], usize> = tgt_sets.iter().enumerate().map(|(k, s)| (s.as_slice(), k)).collect();
    let field = *q.ring.field();
    let ncols = tgt_sets.len() * tgt_b;
    let mut rows = Vec::with_capacity(src_sets.len() * rows_b);
    for s in &src_sets {
        for b in 0..rows_b {
            let mut row = vec![0u32; ncols];
            for (r, &var) in s.iter().enumerate() {
                let mut rest = s.clone();
                rest.remove(r);
                let block = tgt_pos[rest.as_slice()] * tgt_b;
                for &(t, c) in &q.mult[src_deg][b][var] {
                    let c = if r % 2 == 0 { c } else { field.neg(c) };
                    row[block + t] = field.add(row[block + t], c);
                }
            }
            rows.push(row);
        }
    }
    rank(rows, &field)
}

/// Graded Betti numbers of R/I, computed column by column in internal
/// degree until the Euler identity has balanced past the degree of the
/// Hilbert numerator and an empty column follows, or until `cap`.
pub fn graded_betti(ideal: &Ideal, cap: u32) -> Result<GradedBettiTable> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let ring = ideal.ring();
    let n = ring.nvars();
    let gb = ideal.gb();
    let numer = ideal.hilbert_numerator();
    let top = (numer.len() as u32 - 1).max(ideal.max_generator_degree().unwrap_or(0));
    let mut q = Quotient::new(ring, gb);
    let mut entries = BTreeMap::new();
    let mut certified = false;
    let mut last = 0;
    for j in 0..=cap {
        last = j;
        let mut column_empty = true;
        let mut euler = 0i64;
        // rank of d_{i} for i = 0..=n+1
        let ranks: Vec<usize> = (0..=n + 1).map(|i| koszul_rank(&mut q, n, i, j)).collect();
        for i in 0..=n {
            if (j as usize) < i {
                break;
            }
            let dim = binomial(n as u64, i as u64) as usize * q.dim(j as i64 - i as i64);
            let beta = dim - ranks[i] - ranks[i + 1];
            if beta > 0 {
                entries.insert((i, j), beta as u64);
                column_empty = false;
                euler += if i % 2 == 0 { beta as i64 } else { -(beta as i64) };
            }
        }
        let expected = numer.get(j as usize).copied().unwrap_or(0);
        assert_eq!(euler, expected, "Euler identity failed in degree {j}");
        if j > top && column_empty {
            certified = true;
            break;
        }
    }
    Ok(GradedBettiTable {
        entries,
        degree_cap: last,
        euler_certified: certified,
    })
}

pub fn projective_dimension(ideal: &Ideal) -> Result<usize> {
    let t = graded_betti(ideal, DEFAULT_BETTI_CAP)?;
    t.require_certified()?;
    Ok(t.projective_dimension())
}

/// R/I is Cohen–Macaulay iff pd(R/I) = codim(I).
pub fn is_cohen_macaulay(ideal: &Ideal) -> Result<bool> {
    if ideal.is_unit() {
        return Ok(false);
    }
    Ok(projective_dimension(ideal)? == ideal.codimension())
}

pub fn is_cohen_macaulay_with(ideal: &Ideal, table: &GradedBettiTable) -> Result<bool> {
    table.require_certified()?;
    Ok(table.projective_dimension() == ideal.codimension())
}

/// Shift data for the bound `∫I ⊆ m^d`: CM of codimension g with the last
/// shifts at most (g - 1) times the initial degree d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftData {
    pub codimension: usize,
    pub initial_degree: u32,
    pub max_last_shift: u32,
}

impl ShiftData {
    pub fn holds(&self) -> bool {
        self.max_last_shift as u64 <= (self.codimension as u64).saturating_sub(1) * self.initial_degree as u64
    }
}

/// Shift data of a CM ideal; `None` when I is not CM.
pub fn shift_data(ideal: &Ideal) -> Result<Option<ShiftData>> {
    let table = graded_betti(ideal, DEFAULT_BETTI_CAP)?;
    if !is_cohen_macaulay_with(ideal, &table)? {
        return Ok(None);
    }
    let g = ideal.codimension();
    if g == 0 {
        return Ok(None);
    }
    let initial_degree = table.shifts(1).into_iter().min().unwrap_or(0);
    let max_last_shift = table.shifts(g).into_iter().max().unwrap_or(0);
    Ok(Some(ShiftData {
        codimension: g,
        initial_degree,
        max_last_shift,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;
    use crate::ring::Ring;

    fn table(vars: &[&str], gens: &str) -> (Ideal, GradedBettiTable) {
        let r = Ring::grevlex(vars).unwrap();
        let i = parse_ideal(gens, &r).unwrap();
        let t = graded_betti(&i, DEFAULT_BETTI_CAP).unwrap();
        (i, t)
    }

    #[test]
    fn koszul_of_two_variables() {
        let (_, t) = table(&["x", "y"], "x, y");
        assert!(t.is_certified());
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(1, 1), 2);
        assert_eq!(t.get(2, 2), 1);
        assert_eq!(t.entries().len(), 3);
    }

    #[test]
    fn twisted_cubic_hilbert_burch() {
        let (i, t) = table(&["x", "y", "z", "w"], "x*z - y^2, x*w - y*z, y*w - z^2");
        assert_eq!(t.get(1, 2), 3);
        assert_eq!(t.get(2, 3), 2);
        assert_eq!(t.projective_dimension(), 2);
        assert!(is_cohen_macaulay_with(&i, &t).unwrap());
    }

    #[test]
    fn line_union_plane_is_not_cm() {
        let (i, t) = table(&["x", "y", "z"], "x*y, x*z");
        assert_eq!(i.codimension(), 1);
        assert_eq!(t.projective_dimension(), 2);
        assert!(!is_cohen_macaulay(&i).unwrap());
    }

    #[test]
    fn complete_intersections_follow_the_koszul_pattern() {
        // degrees 2, 3: shifts are subset sums {0}, {2, 3}, {5}
        let (_, t) = table(&["x", "y", "z"], "x^2 + y*z, y^3 - z^3");
        let expected: BTreeMap<(usize, u32), u64> =
            [((0, 0), 1), ((1, 2), 1), ((1, 3), 1), ((2, 5), 1)].into_iter().collect();
        assert_eq!(t.entries(), &expected);
    }

    #[test]
    fn shift_data_examples() {
        let r = Ring::grevlex(&["x", "y", "z"]).unwrap();
        let m2 = parse_ideal("x^2, x*y, y^2, x*z, y*z, z^2", &r).unwrap();
        let s = shift_data(&m2).unwrap().unwrap();
        assert_eq!((s.codimension, s.initial_degree, s.max_last_shift), (3, 2, 4));
        assert!(s.holds());
        let r4 = Ring::grevlex(&["x", "y", "z", "w"]).unwrap();
        let cubic = parse_ideal("x*z - y^2, x*w - y*z, y*w - z^2", &r4).unwrap();
        let s = shift_data(&cubic).unwrap().unwrap();
        assert_eq!((s.codimension, s.initial_degree, s.max_last_shift), (2, 2, 3));
        assert!(!s.holds());
    }

    #[test]
    fn uncertified_when_cap_is_too_small() {
        let r = Ring::grevlex(&["x", "y", "z"]).unwrap();
        let i = parse_ideal("x^2, y^2, z^2", &r).unwrap();
        let t = graded_betti(&i, 3).unwrap();
        assert!(!t.is_certified());
        assert!(is_cohen_macaulay_with(&i, &t).is_err());
    }
}
