//! Homogeneous ideals with a lazily cached reduced Gröbner basis, and the
//! ideal arithmetic built on it.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, interreduce, GroebnerBasis};
use crate::hilbert::{series_from_numerator, MonomialIdeal};
use crate::linalg::EchelonBasis;
use crate::monomial::{binomial, graded_monomial_basis, Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Clone)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    gb: OnceLock<Arc<GroebnerBasis>>,
    mingens: OnceLock<Arc<Vec<Polynomial>>>,
}

impl Ideal {
    /// Ideal generated by homogeneous `gens`; zero generators are dropped.
    pub fn new(ring: Arc<Ring>, gens: Vec<Polynomial>) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| !g.is_homogeneous()) {
            return Err(Error::NotHomogeneous(bad.to_string(&ring)));
        }
        Ok(Self::from_parts(ring, gens))
    }

    fn from_parts(ring: Arc<Ring>, gens: Vec<Polynomial>) -> Self {
        Self {
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            ring,
            gb: OnceLock::new(),
            mingens: OnceLock::new(),
        }
    }

    pub(crate) fn from_basis(gb: GroebnerBasis) -> Self {
        let ring = gb.ring().clone();
        let cell = OnceLock::new();
        let gens = gb.elements().to_vec();
        let _ = cell.set(Arc::new(gb));
        Self {
            ring,
            gens,
            gb: cell,
            mingens: OnceLock::new(),
        }
    }

    pub fn zero(ring: Arc<Ring>) -> Self {
        Self::from_parts(ring, Vec::new())
    }

    pub fn unit(ring: Arc<Ring>) -> Self {
        let one = Polynomial::one(&ring);
        Self::from_parts(ring, vec![one])
    }

    /// The homogeneous maximal ideal (x_1, ..., x_n).
    pub fn maximal(ring: Arc<Ring>) -> Self {
        Self::maximal_power(ring, 1)
    }

    /// `m^d`, generated by all monomials of degree `d`.
    pub fn maximal_power(ring: Arc<Ring>, d: u32) -> Self {
        let gens = graded_monomial_basis(ring.nvars(), d, ring.order())
            .into_iter()
            .map(Polynomial::monomial)
            .collect();
        Self::from_parts(ring, gens)
    }

    /// Ideal generated by the given variables.
    pub fn variables(ring: Arc<Ring>, vars: &[usize]) -> Self {
        let gens = vars.iter().map(|&i| Polynomial::var(i, &ring)).collect();
        Self::from_parts(ring, gens)
    }

    pub fn from_monomials(ring: Arc<Ring>, monomials: &[Monomial]) -> Self {
        let gens = monomials.iter().map(|&m| Polynomial::monomial(m)).collect();
        Self::from_parts(ring, gens)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.gb
            .get_or_init(|| Arc::new(groebner_basis(&self.gens, &self.ring)))
    }

    /// Hash of the reduced Gröbner basis; equal ideals have equal keys.
    pub fn canonical_key(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.gb().elements().hash(&mut h);
        h.finish()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    fn check_ring(&self, other: &Ideal) {
        assert_eq!(self.ring, other.ring, "ideals live in different rings");
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.gb().contains(f)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.gb().normal_form(f)
    }

    /// `self ⊆ other`.
    pub fn is_subideal(&self, other: &Ideal) -> bool {
        self.check_ring(other);
        self.gens.iter().all(|g| other.contains(g))
    }

    /// First generator of `self` not in `other`.
    pub fn witness_outside(&self, other: &Ideal) -> Option<Polynomial> {
        self.check_ring(other);
        self.minimal_generators()
            .iter()
            .find(|g| !other.contains(g))
            .cloned()
    }

    pub fn equals(&self, other: &Ideal) -> bool {
        self.check_ring(other);
        self.gb().elements() == other.gb().elements()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        self.check_ring(other);
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Self::from_parts(self.ring.clone(), gens)
    }

    pub fn with_generators(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        self.check_ring(other);
        let a = self.minimal_generators();
        let b = other.minimal_generators();
        let gens = a
            .iter()
            .flat_map(|f| b.iter().map(move |g| (f, g)))
            .map(|(f, g)| f.mul(g, &self.ring))
            .collect();
        Self::from_parts(self.ring.clone(), gens)
    }

    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::unit(self.ring.clone());
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    /// `I ∩ J`, by eliminating `t` from `t·I + (1 - t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        self.check_ring(other);
        if self.is_unit() {
            return other.clone();
        }
        if other.is_unit() {
            return self.clone();
        }
        if self.is_zero() || other.is_zero() {
            return Ideal::zero(self.ring.clone());
        }
        let ring = &self.ring;
        let t_name = ring.fresh_name("t_");
        let mut names = vec![t_name];
        names.extend(ring.variables().iter().cloned());
        let big = Ring::new(ring.characteristic() as u64, &names, MonomialOrder::Elimination(1))
            .expect("elimination ring");
        let shift: Vec<usize> = (1..=ring.nvars()).collect();
        let t = Polynomial::var(0, &big);
        let mut gens = Vec::new();
        for f in self.minimal_generators().iter() {
            gens.push(f.remap(&shift, &big).mul(&t, &big));
        }
        for g in other.minimal_generators().iter() {
            let g = g.remap(&shift, &big);
            gens.push(g.sub(&g.mul(&t, &big), &big));
        }
        let (_, elim) = crate::groebner::eliminate(&gens, &big, 1);
        // the eliminated elements are already a reduced grevlex basis
        let elim: Vec<Polynomial> = elim.into_iter().map(|p| p.reorder(ring)).collect();
        if ring.order() == MonomialOrder::Grevlex {
            Ideal::from_basis(GroebnerBasis::from_reduced(ring.clone(), elim))
        } else {
            Ideal::from_basis(groebner_basis(&elim, ring))
        }
    }

    /// `I : f`.
    pub fn quotient(&self, f: &Polynomial) -> Ideal {
        if f.is_zero() || self.contains(f) {
            return Ideal::unit(self.ring.clone());
        }
        let principal = Ideal::from_parts(self.ring.clone(), vec![f.clone()]);
        let meet = self.intersect(&principal);
        let quotients: Vec<Polynomial> = meet
            .gb()
            .elements()
            .iter()
            .map(|g| g.exact_div(f, &self.ring).expect("elements of I ∩ (f) are divisible by f"))
            .collect();
        // f·G is a Gröbner basis of f·(I:f), hence G is one of I:f
        let reduced = interreduce(quotients, &self.ring);
        Ideal::from_basis(GroebnerBasis::from_reduced(self.ring.clone(), reduced))
    }

    /// `I : J = {f : f·J ⊆ I}`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other);
        if other.is_zero() {
            return Err(Error::ColonByZero);
        }
        let mut acc: Option<Ideal> = None;
        for g in other.minimal_generators().iter() {
            if self.contains(g) {
                continue;
            }
            let q = self.quotient(g);
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q),
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(self.ring.clone())))
    }

    /// `I : f^∞`, iterating colons until the ideal stabilizes.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::Invalid("saturation by zero".into()));
        }
        let mut cur = self.clone();
        loop {
            let next = cur.quotient(f);
            if next.equals(&cur) {
                return Ok(cur);
            }
            cur = next;
        }
    }

    pub fn leading_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ring.nvars(), self.gb().leading_monomials())
    }

    /// Krull dimension of R/I; `-1` for the unit ideal.
    pub fn dimension(&self) -> i64 {
        self.leading_ideal().dimension()
    }

    /// `n - dim(R/I)`; `n + 1` for the unit ideal.
    pub fn codimension(&self) -> usize {
        (self.ring.nvars() as i64 - self.dimension()) as usize
    }

    /// `dim_k (R/I)_d`.
    pub fn hilbert_function(&self, d: u32) -> u64 {
        self.leading_ideal().standard_count(d)
    }

    /// N(t) with HS(R/I) = N(t)/(1-t)^n.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        self.leading_ideal().hilbert_numerator()
    }

    /// Hilbert function values `0..=up_to` read off the numerator.
    pub fn hilbert_series(&self, up_to: u32) -> Vec<i64> {
        series_from_numerator(&self.hilbert_numerator(), self.ring.nvars(), up_to)
    }

    pub fn initial_degree(&self) -> Option<u32> {
        self.gb().elements().iter().filter_map(|g| g.degree()).min()
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.minimal_generators().iter().filter_map(|g| g.degree()).max()
    }

    pub fn is_monomial(&self) -> bool {
        self.gb().elements().iter().all(|g| g.is_monomial())
    }

    /// A minimal homogeneous generating set, chosen degree by degree from
    /// the reduced Gröbner basis.
    pub fn minimal_generators(&self) -> Arc<Vec<Polynomial>> {
        self.mingens
            .get_or_init(|| Arc::new(self.compute_minimal_generators()))
            .clone()
    }

    fn compute_minimal_generators(&self) -> Vec<Polynomial> {
        let ring = &self.ring;
        let gb = self.gb();
        if gb.is_unit() {
            return vec![Polynomial::one(ring)];
        }
        let mut cands: Vec<Polynomial> = gb.elements().to_vec();
        cands.reverse(); // ascending leading monomial, hence ascending degree
        cands.sort_by_key(|g| g.degree());
        let mut kept: Vec<Polynomial> = Vec::new();
        let mut i = 0;
        while i < cands.len() {
            let d = cands[i].degree().unwrap();
            let lower = groebner_basis(&kept, ring);
            let mut index: HashMap<Monomial, usize> = HashMap::new();
            let mut echelon = EchelonBasis::new(*ring.field());
            let mut pending: Vec<(Polynomial, Polynomial)> = Vec::new();
            while i < cands.len() && cands[i].degree() == Some(d) {
                let r = lower.normal_form(&cands[i]);
                for (m, _) in r.terms() {
                    let n = index.len();
                    index.entry(*m).or_insert(n);
                }
                pending.push((cands[i].clone(), r));
                i += 1;
            }
            for (g, r) in pending {
                let mut v = vec![0u32; index.len()];
                for (m, c) in r.terms() {
                    v[index[m]] = *c;
                }
                if echelon.insert(&v) {
                    kept.push(g);
                }
            }
        }
        kept
    }

    pub fn num_generators(&self) -> usize {
        self.minimal_generators().len()
    }

    /// μ(I) = codim(I) for a proper ideal.
    pub fn is_complete_intersection(&self) -> bool {
        self.is_proper() && self.num_generators() == self.codimension()
    }

    /// Move the ideal into `target`, sending variable `i` to `map[i]`.
    pub fn map_into(&self, map: &[usize], target: &Arc<Ring>) -> Ideal {
        let gens = self.gens.iter().map(|g| g.remap(map, target)).collect();
        Ideal::from_parts(target.clone(), gens)
    }

    /// Bitmask of variables occurring in the minimal generators.
    pub fn support_mask(&self) -> u32 {
        self.minimal_generators()
            .iter()
            .fold(0, |acc, g| acc | g.support_mask())
    }

    /// Canonical generator strings: minimal generators, monic, sorted by
    /// degree and then by leading monomial.
    pub fn generator_strings(&self) -> Vec<String> {
        let ring = &self.ring;
        let mut gens: Vec<Polynomial> = self.minimal_generators().iter().map(|g| g.monic(ring)).collect();
        gens.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| b.leading_monomial().unwrap().cmp_by(a.leading_monomial().unwrap(), ring.order()))
        });
        gens.iter().map(|g| g.to_string(ring)).collect()
    }

    /// Dimension of I in each degree `0..=up_to`, from the Hilbert function.
    pub fn graded_dimensions(&self, up_to: u32) -> Vec<u64> {
        let n = self.ring.nvars() as u64;
        (0..=up_to)
            .map(|d| binomial(n - 1 + d as u64, d as u64) - self.hilbert_function(d))
            .collect()
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gb().elements() == other.gb().elements()
    }
}

impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({})", self.generator_strings().join(", "))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator_strings().join(", "))
    }
}
