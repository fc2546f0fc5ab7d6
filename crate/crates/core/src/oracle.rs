//! Degree-by-degree Macaulay-matrix oracle. Everything here works with
//! dense linear algebra on graded pieces and never touches Gröbner bases,
//! so it is an independent check on the ideal arithmetic.

use std::collections::HashMap;
use std::sync::Arc;

use crate::ideal::Ideal;
use crate::linalg::{kernel, EchelonBasis};
use crate::monomial::{graded_monomial_basis, Monomial};
use crate::parse::parse_ideal;
use crate::poly::Polynomial;
use crate::ring::Ring;

fn ideal(ring: &Arc<Ring>, text: &str) -> Ideal {
    parse_ideal(text, ring).expect("corpus ideal parses")
}

fn ring(vars: &[&str]) -> Arc<Ring> {
    Ring::grevlex(vars).expect("corpus ring")
}

pub struct Piece {
    pub index: HashMap<Monomial, usize>,
    pub monomials: Vec<Monomial>,
    pub span: EchelonBasis,
}

impl Piece {
    pub fn vector(&self, f: &Polynomial) -> Vec<u32> {
        let mut v = vec![0u32; self.monomials.len()];
        for (m, c) in f.terms() {
            v[self.index[m]] = *c;
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }
}

/// `I_d` as the span of all monomial multiples of the generators.
pub fn degree_piece(ring: &Ring, gens: &[Polynomial], d: u32) -> Piece {
    let monomials = graded_monomial_basis(ring.nvars(), d, ring.order());
    let index: HashMap<Monomial, usize> = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut span = EchelonBasis::new(*ring.field());
    let mut piece = Piece {
        index,
        monomials,
        span: EchelonBasis::new(*ring.field()),
    };
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg > d {
            continue;
        }
        for m in graded_monomial_basis(ring.nvars(), d - dg, ring.order()) {
            let v = piece.vector(&g.mul_term(&m, 1, ring));
            span.insert(&v);
        }
    }
    piece.span = span;
    piece
}

pub fn oracle_contains(ring: &Ring, gens: &[Polynomial], f: &Polynomial) -> bool {
    let Some(d) = f.degree() else { return true };
    let piece = degree_piece(ring, gens, d);
    piece.span.contains(&piece.vector(f))
}

/// Basis of `(I : J)_d = {f ∈ R_d : f·g ∈ I for every generator g of J}`.
pub fn colon_piece(ring: &Ring, i_gens: &[Polynomial], j_gens: &[Polynomial], d: u32) -> Vec<Polynomial> {
    let monomials = graded_monomial_basis(ring.nvars(), d, ring.order());
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for g in j_gens {
        let dg = g.degree().unwrap();
        let target = degree_piece(ring, i_gens, d + dg);
        let cols: Vec<Vec<u32>> = monomials
            .iter()
            .map(|m| target.span.remainder(&target.vector(&g.mul_term(m, 1, ring))))
            .collect();
        for r in 0..target.monomials.len() {
            rows.push(cols.iter().map(|c| c[r]).collect());
        }
    }
    let ker = if rows.is_empty() {
        (0..monomials.len())
            .map(|i| {
                let mut v = vec![0; monomials.len()];
                v[i] = 1;
                v
            })
            .collect()
    } else {
        kernel(&rows, monomials.len(), ring.field())
    };
    ker.into_iter()
        .map(|v| Polynomial::from_terms(monomials.iter().zip(v).map(|(m, c)| (*m, c)), ring))
        .collect()
}

/// dim (I ∩ J)_d = dim I_d + dim J_d - dim (I + J)_d.
pub fn intersection_dim(ring: &Ring, a: &[Polynomial], b: &[Polynomial], d: u32) -> usize {
    let mut both = a.to_vec();
    both.extend(b.iter().cloned());
    degree_piece(ring, a, d).dim() + degree_piece(ring, b, d).dim() - degree_piece(ring, &both, d).dim()
}

/// Thirty ideals in at most four variables, grouped so that consecutive
/// entries share a ring.
pub fn corpus() -> Vec<Ideal> {
    let r4 = ring(&["x", "y", "z", "w"]);
    let r3 = ring(&["x", "y", "z"]);
    let r2 = ring(&["x", "y"]);
    let src4 = [
        "x^2, x*y, y^2, z^2, z*w, w^2",
        "x*z - y^2, x*w - y*z, y*w - z^2",
        "x*z - y^2, y*w - z^2",
        "y, z",
        "x^2, y^2, z^2, w^2",
        "x*y, z*w",
        "x, y^2 - z*w",
        "x*y - z*w, x^2 + y^2 - 3*z*w",
        "x^2, y^2, x*z, y*w",
        "x*y*z, x*y*w, x*z*w, y*z*w",
        "x + y + z + w",
        "x^2 - y*w, x*y - z*w, y^2 - x*z",
        "x*y, y*z, z*w, w*x",
        "x^3 - y^2*z, z^2 - x*w",
        "x, y, z, w",
        "x*z, y*w",
    ];
    let src3 = [
        "x^2, x*y, y^2, x*z, y*z, z^2",
        "x*y, x*z, y*z",
        "x*y, x*z",
        "x^2, x*y",
        "x^2 - y*z, y^2 - x*z",
        "x^3, y^3, z^3, x*y*z",
        "x + 2*y - z, x^2 - y^2",
        "x*y - z^2",
        "x^2, y^2, z^2",
        "x - y, y - z",
    ];
    let src2 = ["x^2, x*y, y^2", "x*y", "x^3 - y^3, x^2*y", "x"];
    let mut out = Vec::new();
    out.extend(src4.iter().map(|s| ideal(&r4, s)));
    out.extend(src3.iter().map(|s| ideal(&r3, s)));
    out.extend(src2.iter().map(|s| ideal(&r2, s)));
    assert_eq!(out.len(), 30);
    out
}

/// Consecutive corpus pairs that share a ring.
pub fn corpus_pairs() -> Vec<(Ideal, Ideal)> {
    let c = corpus();
    c.windows(2)
        .filter(|w| w[0].ring() == w[1].ring())
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect()
}

/// Check `computed` against the oracle colon in all degrees `0..=max_d`.
pub fn colon_agrees(i: &Ideal, j: &Ideal, computed: &Ideal, max_d: u32) -> Result<(), String> {
    let ring = i.ring();
    let comp_gens = computed.generators().to_vec();
    for d in 0..=max_d {
        let oracle = colon_piece(ring, i.generators(), j.generators(), d);
        let comp = degree_piece(ring, &comp_gens, d);
        if oracle.len() != comp.dim() {
            return Err(format!("degree {d}: oracle dim {} vs computed {}", oracle.len(), comp.dim()));
        }
        for f in &oracle {
            if !comp.span.contains(&comp.vector(f)) {
                return Err(format!("degree {d}: oracle element {} missing", f.to_string(ring)));
            }
        }
    }
    Ok(())
}

pub fn intersection_agrees(i: &Ideal, j: &Ideal, computed: &Ideal, max_d: u32) -> Result<(), String> {
    let ring = i.ring();
    for d in 0..=max_d {
        let expected = intersection_dim(ring, i.generators(), j.generators(), d);
        let comp = degree_piece(ring, computed.generators(), d);
        if expected != comp.dim() {
            return Err(format!("degree {d}: oracle dim {expected} vs computed {}", comp.dim()));
        }
        let ip = degree_piece(ring, i.generators(), d);
        let jp = degree_piece(ring, j.generators(), d);
        for row in comp.span.rows() {
            if !ip.span.contains(row) || !jp.span.contains(row) {
                return Err(format!("degree {d}: computed element outside one of the factors"));
            }
        }
    }
    Ok(())
}
