//! Sparse polynomials over GF(p), terms sorted decreasingly by the ring's
//! monomial order. The ring is passed explicitly to every operation that
//! needs the order or the field.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Write as _;

use crate::monomial::Monomial;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn constant(c: i64, ring: &Ring) -> Self {
        let c = ring.field().from_i64(c);
        Self::term(Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(1, ring)
    }

    pub fn var(i: usize, ring: &Ring) -> Self {
        Self::term(Monomial::var(ring.nvars(), i), 1)
    }

    pub fn term(m: Monomial, c: u32) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            Self { terms: vec![(m, c)] }
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, 1)
    }

    /// Build from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, u32)>>(terms: I, ring: &Ring) -> Self {
        let f = ring.field();
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert(0);
            *e = f.add(*e, c);
        }
        let mut terms: Vec<(Monomial, u32)> = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        terms.sort_by(|a, b| b.0.cmp_by(&a.0, ring.order()));
        Self { terms }
    }

    /// Caller guarantees sortedness and nonzero coefficients.
    pub(crate) fn from_sorted(terms: Vec<(Monomial, u32)>) -> Self {
        Self { terms }
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<(Monomial, u32)> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    #[inline]
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    #[inline]
    pub fn leading_coeff(&self) -> Option<u32> {
        self.terms.first().map(|&(_, c)| c)
    }

    /// Maximum total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    /// Bitmask of variables occurring in some term.
    pub fn support_mask(&self) -> u32 {
        self.terms.iter().fold(0, |acc, (m, _)| acc | m.support_mask())
    }

    pub fn add(&self, other: &Polynomial, ring: &Ring) -> Polynomial {
        merge(&self.terms, &other.terms, 1, None, ring)
    }

    pub fn sub(&self, other: &Polynomial, ring: &Ring) -> Polynomial {
        let minus_one = ring.field().neg(1);
        merge(&self.terms, &other.terms, minus_one, None, ring)
    }

    /// `self + c * m * other`.
    pub fn add_scaled(&self, other: &Polynomial, c: u32, m: &Monomial, ring: &Ring) -> Polynomial {
        merge(&self.terms, &other.terms, c, Some(m), ring)
    }

    pub fn neg(&self, ring: &Ring) -> Polynomial {
        let f = ring.field();
        Polynomial {
            terms: self.terms.iter().map(|&(m, c)| (m, f.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: u32, ring: &Ring) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        let f = ring.field();
        Polynomial {
            terms: self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: u32, ring: &Ring) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        let f = ring.field();
        Polynomial {
            terms: self.terms.iter().map(|&(t, a)| (t.mul(m), f.mul(a, c))).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial, ring: &Ring) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        if self.len() == 1 {
            let (m, c) = self.terms[0];
            return other.mul_term(&m, c, ring);
        }
        if other.len() == 1 {
            let (m, c) = other.terms[0];
            return self.mul_term(&m, c, ring);
        }
        let f = ring.field();
        Polynomial::from_terms(
            self.terms
                .iter()
                .flat_map(|&(a, ca)| other.terms.iter().map(move |&(b, cb)| (a.mul(&b), f.mul(ca, cb)))),
            ring,
        )
    }

    pub fn pow(&self, e: u32, ring: &Ring) -> Polynomial {
        let mut acc = Polynomial::one(ring);
        for _ in 0..e {
            acc = acc.mul(self, ring);
        }
        acc
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self, ring: &Ring) -> Polynomial {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(ring.field().inv(c), ring),
        }
    }

    /// Re-sort terms for a ring with the same variables but another order.
    pub fn reorder(&self, ring: &Ring) -> Polynomial {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| b.0.cmp_by(&a.0, ring.order()));
        Polynomial { terms }
    }

    /// Move into another ring: variable `i` becomes variable `map[i]` of `target`.
    pub fn remap(&self, map: &[usize], target: &Ring) -> Polynomial {
        Polynomial::from_terms(
            self.terms.iter().map(|&(m, c)| (m.remap(target.nvars(), map), c)),
            target,
        )
    }

    /// Substitute `images[i]` for variable `i`; images live in `target`.
    pub fn substitute(&self, images: &[Polynomial], ring: &Ring, target: &Ring) -> Polynomial {
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut acc = Polynomial::zero();
        for &(m, c) in &self.terms {
            let mut t = Polynomial::constant(ring.field().to_signed(c), target);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers
                    .entry((i, e as u32))
                    .or_insert_with(|| images[i].pow(e as u32, target))
                    .clone();
                t = t.mul(&p, target);
            }
            acc = acc.add(&t, target);
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &Polynomial, ring: &Ring) -> Option<Polynomial> {
        let f = ring.field();
        let (lm, lc) = *divisor.terms.first()?;
        let lc_inv = f.inv(lc);
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some(&(m, c)) = rest.terms.first() {
            let q = lm.quotient_of(&m)?;
            let qc = f.mul(c, lc_inv);
            quotient.push((q, qc));
            rest = rest.add_scaled(divisor, f.neg(qc), &q, ring);
        }
        Some(Polynomial::from_sorted(quotient))
    }

    pub fn to_string(&self, ring: &Ring) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let f = ring.field();
        let mut out = String::new();
        for (k, &(m, c)) in self.terms.iter().enumerate() {
            let s = f.to_signed(c);
            let (neg, abs) = (s < 0, s.unsigned_abs());
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = monomial_string(&m, ring);
            match (abs, mono.is_empty()) {
                (_, true) => write!(out, "{abs}").unwrap(),
                (1, false) => out.push_str(&mono),
                (_, false) => write!(out, "{abs}*{mono}").unwrap(),
            }
        }
        out
    }
}

pub fn monomial_string(m: &Monomial, ring: &Ring) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.variables()[i].clone()),
            _ => parts.push(format!("{}^{}", ring.variables()[i], e)),
        }
    }
    parts.join("*")
}

/// `a + c * m * b` by a sorted merge.
fn merge(a: &[(Monomial, u32)], b: &[(Monomial, u32)], c: u32, m: Option<&Monomial>, ring: &Ring) -> Polynomial {
    let f = ring.field();
    let order = ring.order();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let shifted = |j: usize| -> (Monomial, u32) {
        let (bm, bc) = b[j];
        (m.map_or(bm, |m| bm.mul(m)), f.mul(bc, c))
    };
    while i < a.len() && j < b.len() {
        let (bm, bc) = shifted(j);
        match a[i].0.cmp_by(&bm, order) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                if bc != 0 {
                    out.push((bm, bc));
                }
                j += 1;
            }
            Ordering::Equal => {
                let s = f.add(a[i].1, bc);
                if s != 0 {
                    out.push((bm, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        let t = shifted(j);
        if t.1 != 0 {
            out.push(t);
        }
        j += 1;
    }
    Polynomial { terms: out }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn ring() -> Arc<Ring> {
        Ring::new(101, &["x", "y", "z"], MonomialOrder::Grevlex).unwrap()
    }

    fn arb_poly() -> impl Strategy<Value = Vec<([u32; 3], i64)>> {
        proptest::collection::vec(([0u32..3, 0u32..3, 0u32..3], -50i64..50), 0..5)
    }

    fn build(spec: &[([u32; 3], i64)], r: &Ring) -> Polynomial {
        Polynomial::from_terms(
            spec.iter()
                .map(|(e, c)| (Monomial::from_exponents(e), r.field().from_i64(*c))),
            r,
        )
    }

    fn homogeneous(spec: &[([u32; 3], i64)], d: u32, r: &Ring) -> Polynomial {
        Polynomial::from_terms(
            spec.iter().map(|(e, c)| {
                let mut e = *e;
                e[0] = e[0].min(d);
                e[1] = e[1].min(d - e[0]);
                e[2] = d - e[0] - e[1];
                (Monomial::from_exponents(&e), r.field().from_i64(*c))
            }),
            r,
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let r = ring();
            let (a, b, c) = (build(&a, &r), build(&b, &r), build(&c, &r));
            prop_assert_eq!(a.mul(&b, &r).mul(&c, &r), a.mul(&b.mul(&c, &r), &r));
            prop_assert_eq!(a.mul(&b.add(&c, &r), &r), a.mul(&b, &r).add(&a.mul(&c, &r), &r));
            prop_assert_eq!(a.add(&b, &r).add(&c, &r), a.add(&b.add(&c, &r), &r));
            prop_assert_eq!(a.mul(&b, &r), b.mul(&a, &r));
            prop_assert!(a.sub(&a, &r).is_zero());
        }

        #[test]
        fn homogeneous_products(a in arb_poly(), b in arb_poly(), da in 0u32..4, db in 0u32..4) {
            let r = ring();
            let (a, b) = (homogeneous(&a, da, &r), homogeneous(&b, db, &r));
            let p = a.mul(&b, &r);
            prop_assert!(p.is_homogeneous());
            if !p.is_zero() {
                prop_assert_eq!(p.degree(), Some(da + db));
            }
        }

        #[test]
        fn exact_division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            let r = ring();
            let (a, b) = (build(&a, &r), build(&b, &r));
            prop_assume!(!b.is_zero());
            let p = a.mul(&b, &r);
            prop_assert_eq!(p.exact_div(&b, &r), Some(a));
        }
    }

    #[test]
    fn printing() {
        let r = ring();
        let x = Polynomial::var(0, &r);
        let y = Polynomial::var(1, &r);
        let f = x.mul(&x, &r).sub(&y.scale(3, &r), &r);
        assert_eq!(f.to_string(&r), "x^2 - 3*y");
        assert_eq!(Polynomial::zero().to_string(&r), "0");
        assert_eq!(Polynomial::constant(-2, &r).to_string(&r), "-2");
    }
}
