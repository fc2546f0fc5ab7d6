//! Buchberger's algorithm with sugar-degree pair selection and the
//! Gebauer–Möller installation of the coprime and chain criteria.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::Ring;

/// A Gröbner basis; when `reduced`, the unique reduced basis of its ideal,
/// sorted by decreasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    elements: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| *g.leading_monomial().expect("nonzero basis element"))
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let refs: Vec<&Polynomial> = self.elements.iter().collect();
        full_reduce(f, &refs, &self.ring)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Wrap elements already known to form the reduced basis.
    pub(crate) fn from_reduced(ring: Arc<Ring>, mut elements: Vec<Polynomial>) -> Self {
        let order = ring.order();
        elements.sort_by(|a, b| b.leading_monomial().unwrap().cmp_by(a.leading_monomial().unwrap(), order));
        Self {
            ring,
            elements,
            reduced: true,
        }
    }
}

pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(f)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Entry {
    poly: Polynomial,
    lm: Monomial,
    mask: u32,
    sugar: u32,
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ring`'s order.
pub fn groebner_basis(gens: &[Polynomial], ring: &Arc<Ring>) -> GroebnerBasis {
    let order = ring.order();
    let mut input: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic(ring))
        .collect();
    if input.iter().any(|g| g.is_constant()) {
        return GroebnerBasis::from_reduced(ring.clone(), vec![Polynomial::one(ring)]);
    }
    // lowest degree first keeps the intermediate basis small
    input.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.leading_monomial().unwrap().cmp_by(b.leading_monomial().unwrap(), order))
    });
    input.dedup();

    let mut store: Vec<Entry> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for g in input {
        let g = {
            let refs: Vec<&Polynomial> = active.iter().map(|&k| &store[k].poly).collect();
            full_reduce(&g, &refs, ring)
        };
        if g.is_zero() {
            continue;
        }
        let g = g.monic(ring);
        if g.is_constant() {
            return GroebnerBasis::from_reduced(ring.clone(), vec![Polynomial::one(ring)]);
        }
        let sugar = g.degree().unwrap();
        insert(&mut store, &mut active, &mut pairs, g, sugar);
    }

    while let Some(pair) = pop_pair(&mut pairs, order) {
        let s = spoly(&store[pair.i].poly, &store[pair.j].poly, &pair.lcm, ring);
        let h = top_reduce(s, &store, &active, ring);
        if h.is_zero() {
            continue;
        }
        let h = h.monic(ring);
        if h.is_constant() {
            return GroebnerBasis::from_reduced(ring.clone(), vec![Polynomial::one(ring)]);
        }
        insert(&mut store, &mut active, &mut pairs, h, pair.sugar);
    }

    let basis: Vec<Polynomial> = active.iter().map(|&k| store[k].poly.clone()).collect();
    GroebnerBasis::from_reduced(ring.clone(), interreduce(basis, ring))
}

fn pop_pair(pairs: &mut Vec<Pair>, order: MonomialOrder) -> Option<Pair> {
    if pairs.is_empty() {
        return None;
    }
    let mut best = 0;
    for k in 1..pairs.len() {
        let (a, b) = (&pairs[k], &pairs[best]);
        let better = match a.sugar.cmp(&b.sugar) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => a.lcm.cmp_by(&b.lcm, order) == Ordering::Less,
        };
        if better {
            best = k;
        }
    }
    Some(pairs.swap_remove(best))
}

/// Gebauer–Möller update: add `h` to the basis, pruning redundant pairs.
fn insert(store: &mut Vec<Entry>, active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: Polynomial, sugar: u32) {
    let lm_h = *h.leading_monomial().unwrap();
    let idx = store.len();
    store.push(Entry {
        mask: lm_h.support_mask(),
        lm: lm_h,
        poly: h,
        sugar,
    });
    let h_sugar = sugar;

    let sugar_of = |k: usize, lcm: &Monomial| -> u32 {
        let e = &store[k];
        let a = e.sugar + lcm.degree() - e.lm.degree();
        let b = h_sugar + lcm.degree() - lm_h.degree();
        a.max(b)
    };

    // candidate new pairs (g, h)
    let cands: Vec<(usize, Monomial, bool)> = active
        .iter()
        .map(|&k| {
            let lm = store[k].lm;
            (k, lm.lcm(&lm_h), lm.is_coprime(&lm_h))
        })
        .collect();

    // chain criterion among the new pairs
    let mut keep = vec![true; cands.len()];
    for a in 0..cands.len() {
        let (_, lcm_a, coprime_a) = cands[a];
        if coprime_a {
            continue;
        }
        for b in 0..cands.len() {
            if a == b || !keep[b] {
                continue;
            }
            let lcm_b = cands[b].1;
            if lcm_b.divides(&lcm_a) && (lcm_b != lcm_a || b < a) {
                keep[a] = false;
                break;
            }
        }
    }
    // among pairs with equal lcm keep one; drop coprime ones (product criterion)
    let mut new_pairs = Vec::new();
    for (a, &(k, lcm, coprime)) in cands.iter().enumerate() {
        if !keep[a] {
            continue;
        }
        if coprime {
            continue;
        }
        new_pairs.push(Pair {
            i: k,
            j: idx,
            lcm,
            sugar: sugar_of(k, &lcm),
        });
    }

    // old pairs made redundant by h
    pairs.retain(|p| {
        if !lm_h.divides(&p.lcm) {
            return true;
        }
        let li = store[p.i].lm.lcm(&lm_h);
        let lj = store[p.j].lm.lcm(&lm_h);
        li == p.lcm || lj == p.lcm
    });
    pairs.extend(new_pairs);

    active.retain(|&k| !lm_h.divides(&store[k].lm));
    active.push(idx);
}

fn spoly(f: &Polynomial, g: &Polynomial, lcm: &Monomial, ring: &Ring) -> Polynomial {
    let mf = f.leading_monomial().unwrap().quotient_of(lcm).unwrap();
    let mg = g.leading_monomial().unwrap().quotient_of(lcm).unwrap();
    // both monic
    let a = f.mul_term(&mf, 1, ring);
    a.add_scaled(g, ring.field().neg(1), &mg, ring)
}

#[inline]
fn find_divisor<'a>(m: &Monomial, cands: impl Iterator<Item = (&'a Monomial, u32, &'a Polynomial)>) -> Option<&'a Polynomial> {
    let mask = m.support_mask();
    for (lm, lmask, p) in cands {
        if lmask & !mask == 0 && lm.divides(m) {
            return Some(p);
        }
    }
    None
}

fn top_reduce(mut f: Polynomial, store: &[Entry], active: &[usize], ring: &Ring) -> Polynomial {
    let field = ring.field();
    loop {
        let Some((m, c)) = f.terms().first().copied() else {
            return f;
        };
        let div = find_divisor(&m, active.iter().map(|&k| (&store[k].lm, store[k].mask, &store[k].poly)));
        match div {
            None => return f,
            Some(g) => {
                let q = g.leading_monomial().unwrap().quotient_of(&m).unwrap();
                f = f.add_scaled(g, field.neg(c), &q, ring);
            }
        }
    }
}

/// Reduce every term of `f` by `basis` (which need not be a Gröbner basis).
pub(crate) fn full_reduce(f: &Polynomial, basis: &[&Polynomial], ring: &Ring) -> Polynomial {
    if basis.is_empty() || f.is_zero() {
        return f.clone();
    }
    let field = ring.field();
    let lead: Vec<(Monomial, u32, &Polynomial, u32)> = basis
        .iter()
        .map(|g| {
            let lm = *g.leading_monomial().unwrap();
            (lm, lm.support_mask(), *g, g.leading_coeff().unwrap())
        })
        .collect();
    let mut rem: Vec<(Monomial, u32)> = Vec::new();
    let mut work = f.clone();
    loop {
        let Some((m, c)) = work.terms().first().copied() else {
            break;
        };
        let mask = m.support_mask();
        let hit = lead
            .iter()
            .find(|(lm, lmask, _, _)| lmask & !mask == 0 && lm.divides(&m));
        match hit {
            Some(&(lm, _, g, lc)) => {
                let q = lm.quotient_of(&m).unwrap();
                let coef = field.neg(field.mul(c, field.inv(lc)));
                work = work.add_scaled(g, coef, &q, ring);
            }
            None => {
                rem.push((m, c));
                let mut terms = work.into_terms();
                terms.remove(0);
                work = Polynomial::from_sorted(terms);
            }
        }
    }
    Polynomial::from_sorted(rem)
}

/// Minimalize and fully inter-reduce a Gröbner basis.
pub(crate) fn interreduce(mut basis: Vec<Polynomial>, ring: &Ring) -> Vec<Polynomial> {
    let order = ring.order();
    basis.sort_by(|a, b| a.leading_monomial().unwrap().cmp_by(b.leading_monomial().unwrap(), order));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = *g.leading_monomial().unwrap();
        if minimal.iter().any(|h| h.leading_monomial().unwrap().divides(&lm)) {
            continue;
        }
        minimal.push(g);
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, g)| g)
            .collect();
        let head = Polynomial::from_sorted(vec![minimal[k].terms()[0]]);
        let tail = Polynomial::from_sorted(minimal[k].terms()[1..].to_vec());
        let tail = full_reduce(&tail, &others, ring);
        out.push(head.add(&tail, ring).monic(ring));
    }
    out
}

/// Generators of `I ∩ k[x_{k+1}, ..., x_n]`. `ring` must carry the
/// `Elimination(k)` order; the result lives in the subring on the remaining
/// variables with grevlex order.
pub fn eliminate(gens: &[Polynomial], ring: &Arc<Ring>, k: usize) -> (Arc<Ring>, Vec<Polynomial>) {
    assert_eq!(ring.order(), MonomialOrder::Elimination(k), "eliminate needs an elimination(k) ring");
    let gb = groebner_basis(gens, ring);
    let keep: Vec<usize> = (k..ring.nvars()).collect();
    let sub = ring.subring(&keep).expect("subring");
    let mut map = vec![0usize; ring.nvars()];
    for (new, &old) in keep.iter().enumerate() {
        map[old] = new;
    }
    let out = gb
        .elements()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0)))
        .map(|g| g.remap(&map, &sub))
        .collect();
    (sub, out)
}

/// Every S-polynomial of the basis reduces to zero.
pub fn satisfies_buchberger_criterion(gb: &GroebnerBasis) -> bool {
    let ring = gb.ring();
    let els = gb.elements();
    for i in 0..els.len() {
        for j in i + 1..els.len() {
            let lcm = els[i].leading_monomial().unwrap().lcm(els[j].leading_monomial().unwrap());
            let s = spoly(&els[i].monic(ring), &els[j].monic(ring), &lcm, ring);
            if !gb.normal_form(&s).is_zero() {
                return false;
            }
        }
    }
    true
}
