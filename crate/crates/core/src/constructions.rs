//! Joins, hypersurface sections, symbolic powers and polarization of
//! monomial ideals, transversality, and linear substitutions.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hilbert::MonomialIdeal;
use crate::ideal::Ideal;
use crate::linalg::rank;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::Ring;

/// Join of ideals over disjoint variable blocks: `(I, J)` in the ring on
/// the union of the variables (I's block first).
pub fn join(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let (ra, rb) = (i.ring(), j.ring());
    if ra.characteristic() != rb.characteristic() {
        return Err(Error::Invalid("join of rings over different fields".into()));
    }
    let overlap: Vec<&str> = ra
        .variables()
        .iter()
        .filter(|v| rb.var_index(v).is_some())
        .map(|v| v.as_str())
        .collect();
    if !overlap.is_empty() {
        return Err(Error::OverlappingVariables(overlap.join(",")));
    }
    let mut names: Vec<String> = ra.variables().to_vec();
    names.extend(rb.variables().iter().cloned());
    let ring = Ring::new(ra.characteristic() as u64, &names, MonomialOrder::Grevlex)?;
    let map_a: Vec<usize> = (0..ra.nvars()).collect();
    let map_b: Vec<usize> = (ra.nvars()..names.len()).collect();
    Ok(i.map_into(&map_a, &ring).sum(&j.map_into(&map_b, &ring)))
}

/// Join of two ideals of the same ring whose generators involve disjoint
/// sets of variables; the result is their sum.
pub fn join_in_ring(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let (a, b) = (i.support_mask(), j.support_mask());
    if a & b != 0 {
        let ring = i.ring();
        let shared: Vec<&str> = (0..ring.nvars())
            .filter(|k| (a & b) >> k & 1 == 1)
            .map(|k| ring.variables()[k].as_str())
            .collect();
        return Err(Error::OverlappingVariables(shared.join(",")));
    }
    Ok(i.sum(j))
}

/// The element cut by a hypersurface section.
#[derive(Clone, Debug)]
pub enum Section {
    Element(Polynomial),
    /// Adjoin a new variable and cut by it; always a valid section.
    FreshVariable(String),
}

/// `(I, f)` for `f` a nonzerodivisor modulo I.
pub fn hypersurface_section(i: &Ideal, section: &Section) -> Result<Ideal> {
    match section {
        Section::Element(f) => {
            let ring = i.ring();
            if f.is_zero() || !f.is_homogeneous() {
                return Err(Error::NotHomogeneous(f.to_string(ring)));
            }
            let colon = i.quotient(f);
            if !colon.equals(i) {
                return Err(Error::Zerodivisor {
                    element: f.to_string(ring),
                    colon: colon.to_string(),
                });
            }
            i.with_generators(std::slice::from_ref(f))
        }
        Section::FreshVariable(name) => {
            let ring = i.ring();
            if ring.var_index(name).is_some() {
                return Err(Error::OverlappingVariables(name.clone()));
            }
            let mut names = ring.variables().to_vec();
            names.push(name.clone());
            let big = Ring::new(ring.characteristic() as u64, &names, ring.order())?;
            let map: Vec<usize> = (0..ring.nvars()).collect();
            let x = Polynomial::var(ring.nvars(), &big);
            i.map_into(&map, &big).with_generators(&[x])
        }
    }
}

fn squarefree_monomial_ideal(i: &Ideal) -> Result<MonomialIdeal> {
    if !i.is_monomial() {
        return Err(Error::NotMonomial);
    }
    let lead = i.leading_ideal();
    if !lead.generators().iter().all(|m| m.is_squarefree()) {
        return Err(Error::NotSquarefree);
    }
    Ok(lead)
}

/// `P^t` for the prime generated by the variables in `mask`.
pub fn prime_power(ring: &Arc<Ring>, mask: u32, t: u32) -> Ideal {
    let vars: Vec<usize> = (0..ring.nvars()).filter(|k| mask >> k & 1 == 1).collect();
    let mut gens = Vec::new();
    let mut exps = vec![0u32; ring.nvars()];
    fn rec(vars: &[usize], rest: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        match vars {
            [] => {
                if rest == 0 {
                    out.push(Monomial::from_exponents(exps));
                }
            }
            [v, tail @ ..] => {
                for e in 0..=rest {
                    exps[*v] = e;
                    rec(tail, rest - e, exps, out);
                }
                exps[*v] = 0;
            }
        }
    }
    rec(&vars, t, &mut exps, &mut gens);
    Ideal::from_monomials(ring.clone(), &gens)
}

/// Minimal primes of a squarefree monomial ideal, as variable bitmasks.
pub fn minimal_primes_squarefree(i: &Ideal) -> Result<Vec<u32>> {
    Ok(squarefree_monomial_ideal(i)?.minimal_primes())
}

/// `I^(t) = ∩ P^t` over the minimal primes of a squarefree monomial ideal.
pub fn symbolic_power_monomial(i: &Ideal, t: u32) -> Result<Ideal> {
    if t == 0 {
        return Err(Error::Invalid("symbolic power needs t >= 1".into()));
    }
    let primes = minimal_primes_squarefree(i)?;
    let ring = i.ring();
    let mut acc: Option<Ideal> = None;
    for p in primes {
        let pt = prime_power(ring, p, t);
        acc = Some(match acc {
            None => pt,
            Some(a) => a.intersect(&pt),
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::zero(ring.clone())))
}

/// Standard polarization of a monomial ideal.
#[derive(Clone, Debug)]
pub struct Polarization {
    pub ideal: Ideal,
    /// Original variable index of each new variable.
    pub origin: Vec<usize>,
    /// Linear forms `x_1 - x_k` cutting the polarization back to the input.
    pub forms: Vec<Polynomial>,
    source: Arc<Ring>,
}

impl Polarization {
    /// Image of the polarization under `x_k ↦ x`.
    pub fn specialize(&self) -> Ideal {
        let ring = self.ideal.ring();
        let images: Vec<Polynomial> = self
            .origin
            .iter()
            .map(|&o| Polynomial::var(o, &self.source))
            .collect();
        let gens = self
            .ideal
            .generators()
            .iter()
            .map(|g| g.substitute(&images, ring, &self.source))
            .collect();
        Ideal::new(self.source.clone(), gens).expect("specialization stays homogeneous")
    }
}

pub fn polarize(i: &Ideal) -> Result<Polarization> {
    if !i.is_monomial() {
        return Err(Error::NotMonomial);
    }
    let ring = i.ring();
    let n = ring.nvars();
    let lead = i.leading_ideal();
    let mut max_exp = vec![0u32; n];
    for g in lead.generators() {
        for (k, &e) in g.exponents().iter().enumerate() {
            max_exp[k] = max_exp[k].max(e as u32);
        }
    }
    let mut names = Vec::new();
    let mut origin = Vec::new();
    // first new index of each original variable
    let mut first = vec![usize::MAX; n];
    for k in 0..n {
        let name = &ring.variables()[k];
        if max_exp[k] <= 1 {
            first[k] = names.len();
            names.push(name.clone());
            origin.push(k);
        } else {
            first[k] = names.len();
            for c in 1..=max_exp[k] {
                names.push(format!("{name}_{c}"));
                origin.push(k);
            }
        }
    }
    let big = Ring::new(ring.characteristic() as u64, &names, MonomialOrder::Grevlex)?;
    let gens: Vec<Monomial> = lead
        .generators()
        .iter()
        .map(|g| {
            let mut e = vec![0u32; names.len()];
            for (k, &x) in g.exponents().iter().enumerate() {
                for c in 0..x as usize {
                    e[first[k] + c] = 1;
                }
            }
            Monomial::from_exponents(&e)
        })
        .collect();
    let mut forms = Vec::new();
    for k in 0..n {
        for c in 1..max_exp[k] as usize {
            let a = Polynomial::var(first[k], &big);
            let b = Polynomial::var(first[k] + c, &big);
            forms.push(a.sub(&b, &big));
        }
    }
    Ok(Polarization {
        ideal: Ideal::from_monomials(big, &gens),
        origin,
        forms,
        source: ring.clone(),
    })
}

/// `I ∩ J = IJ`.
pub fn is_transversal(i: &Ideal, j: &Ideal) -> bool {
    i.intersect(j).equals(&i.product(j))
}

/// A linear change of coordinates `x_i ↦ images[i]`.
#[derive(Clone, Debug)]
pub struct Substitution {
    ring: Arc<Ring>,
    images: Vec<Polynomial>,
    invertible: bool,
}

impl Substitution {
    /// Images must be linear forms; invertibility is certified by the rank
    /// of the coefficient matrix.
    pub fn new(ring: Arc<Ring>, images: Vec<Polynomial>) -> Result<Self> {
        let n = ring.nvars();
        if images.len() != n {
            return Err(Error::Invalid(format!("substitution needs {n} images, got {}", images.len())));
        }
        let mut rows = Vec::with_capacity(n);
        for img in &images {
            if img.is_zero() || !img.is_homogeneous() || img.degree() != Some(1) {
                return Err(Error::Invalid(format!(
                    "substitution image `{}` is not a linear form",
                    img.to_string(&ring)
                )));
            }
            let mut row = vec![0u32; n];
            for (m, c) in img.terms() {
                row[m.support().next().unwrap()] = *c;
            }
            rows.push(row);
        }
        let invertible = rank(rows, ring.field()) == n;
        Ok(Self {
            ring,
            images,
            invertible,
        })
    }

    pub fn identity(ring: Arc<Ring>) -> Self {
        let images = (0..ring.nvars()).map(|i| Polynomial::var(i, &ring)).collect();
        Self {
            ring,
            images,
            invertible: true,
        }
    }

    /// `x_i ↦ x_i + Σ_{j<i} c_ij x_j` with random `c_ij`.
    pub fn random_unitriangular<R: rand::Rng>(ring: Arc<Ring>, rng: &mut R) -> Self {
        let p = ring.characteristic();
        let images = (0..ring.nvars())
            .map(|i| {
                let mut img = Polynomial::var(i, &ring);
                for j in 0..i {
                    let c = rng.gen_range(0..p);
                    img = img.add(&Polynomial::var(j, &ring).scale(c, &ring), &ring);
                }
                img
            })
            .collect();
        Self {
            ring,
            images,
            invertible: true,
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.invertible
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn apply_polynomial(&self, f: &Polynomial) -> Polynomial {
        f.substitute(&self.images, &self.ring, &self.ring)
    }

    pub fn describe(&self) -> Vec<String> {
        self.ring
            .variables()
            .iter()
            .zip(&self.images)
            .map(|(v, img)| format!("{v} -> {}", img.to_string(&self.ring)))
            .collect()
    }
}

/// `g(I)` for an invertible linear substitution `g`.
pub fn apply_substitution(i: &Ideal, g: &Substitution) -> Result<Ideal> {
    if !g.invertible {
        return Err(Error::NotInvertible);
    }
    assert_eq!(i.ring(), &g.ring, "substitution and ideal live in different rings");
    let gens = i.generators().iter().map(|f| g.apply_polynomial(f)).collect();
    Ideal::new(i.ring().clone(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_ideal, parse_polynomial};
    use rand::SeedableRng;

    fn ring(vars: &[&str]) -> Arc<Ring> {
        Ring::grevlex(vars).unwrap()
    }

    #[test]
    fn join_basics() {
        let a = ring(&["x"]);
        let b = ring(&["u"]);
        let k = join(&parse_ideal("x", &a).unwrap(), &parse_ideal("u", &b).unwrap()).unwrap();
        assert_eq!(k.codimension(), 2);
        assert_eq!(k.ring().variables(), ["x", "u"]);
        assert!(matches!(
            join(&parse_ideal("x", &a).unwrap(), &parse_ideal("x", &a).unwrap()),
            Err(Error::OverlappingVariables(_))
        ));
    }

    #[test]
    fn zerodivisor_sections_are_rejected() {
        let r = ring(&["x", "y"]);
        let i = parse_ideal("x*y", &r).unwrap();
        let x = parse_polynomial("x", &r).unwrap();
        assert!(matches!(
            hypersurface_section(&i, &Section::Element(x)),
            Err(Error::Zerodivisor { .. })
        ));
        let xy = parse_polynomial("x + y", &r).unwrap();
        let s = hypersurface_section(&i, &Section::Element(xy)).unwrap();
        assert_eq!(s.codimension(), 2);
    }

    #[test]
    fn fresh_variable_sections() {
        let r = ring(&["x", "y", "z"]);
        let m2 = parse_ideal("x^2, x*y, y^2, x*z, y*z, z^2", &r).unwrap();
        let s = hypersurface_section(&m2, &Section::FreshVariable("w".into())).unwrap();
        assert_eq!(s.ring().nvars(), 4);
        assert_eq!(s.codimension(), m2.codimension() + 1);
        assert!(hypersurface_section(&m2, &Section::FreshVariable("x".into())).is_err());
    }

    #[test]
    fn symbolic_powers() {
        let r = ring(&["x", "y", "z"]);
        let ci = parse_ideal("x, y", &r).unwrap();
        assert_eq!(symbolic_power_monomial(&ci, 2).unwrap(), ci.power(2));
        let tri = parse_ideal("x*y, x*z, y*z", &r).unwrap();
        assert_eq!(symbolic_power_monomial(&tri, 1).unwrap(), tri);
        let sym2 = symbolic_power_monomial(&tri, 2).unwrap();
        let xyz = parse_polynomial("x*y*z", &r).unwrap();
        assert!(sym2.contains(&xyz));
        assert!(!tri.power(2).contains(&xyz));
        assert!(tri.power(2).is_subideal(&sym2));
        let nonsq = parse_ideal("x^2, y", &r).unwrap();
        assert_eq!(symbolic_power_monomial(&nonsq, 2), Err(Error::NotSquarefree));
        let nonmono = parse_ideal("x + y", &r).unwrap();
        assert_eq!(symbolic_power_monomial(&nonmono, 2), Err(Error::NotMonomial));
    }

    #[test]
    fn polarization() {
        let r = ring(&["x"]);
        let p = polarize(&parse_ideal("x^2", &r).unwrap()).unwrap();
        assert_eq!(p.ideal.ring().variables(), ["x_1", "x_2"]);
        assert_eq!(p.ideal.generator_strings(), ["x_1*x_2"]);
        assert_eq!(p.forms.len(), 1);
        assert_eq!(p.forms[0].to_string(p.ideal.ring()), "x_1 - x_2");

        let r2 = ring(&["x", "y"]);
        let i = parse_ideal("x^2, x*y, y^2", &r2).unwrap();
        let p = polarize(&i).unwrap();
        let target = parse_ideal("x_1*x_2, x_1*y_1, y_1*y_2", p.ideal.ring()).unwrap();
        assert_eq!(p.ideal, target);
        assert_eq!(p.specialize(), i);

        let r3 = ring(&["x", "y", "z"]);
        let sq = parse_ideal("x*y, y*z", &r3).unwrap();
        let p = polarize(&sq).unwrap();
        assert_eq!(p.ideal.ring().variables(), r3.variables());
        assert!(p.forms.is_empty());
        assert_eq!(p.specialize(), sq);
    }

    #[test]
    fn transversality() {
        let r = ring(&["x", "y", "z"]);
        assert!(is_transversal(&parse_ideal("x", &r).unwrap(), &parse_ideal("y", &r).unwrap()));
        assert!(!is_transversal(&parse_ideal("x, y", &r).unwrap(), &parse_ideal("y, z", &r).unwrap()));
    }

    #[test]
    fn substitutions() {
        let r = ring(&["x", "y"]);
        let i = parse_ideal("x, y", &r).unwrap();
        assert_eq!(apply_substitution(&i, &Substitution::identity(r.clone())).unwrap(), i);
        let g = Substitution::new(
            r.clone(),
            vec![parse_polynomial("x", &r).unwrap(), parse_polynomial("y + 5*x", &r).unwrap()],
        )
        .unwrap();
        assert!(g.is_invertible());
        assert_eq!(apply_substitution(&i, &g).unwrap(), i);
        let singular = Substitution::new(
            r.clone(),
            vec![parse_polynomial("x + y", &r).unwrap(), parse_polynomial("2*x + 2*y", &r).unwrap()],
        )
        .unwrap();
        assert_eq!(apply_substitution(&i, &singular), Err(Error::NotInvertible));

        let r3 = ring(&["x", "y", "z"]);
        let m2 = parse_ideal("x^2, x*y, y^2, x*z, y*z, z^2", &r3).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let g = Substitution::random_unitriangular(r3.clone(), &mut rng);
        assert_eq!(apply_substitution(&m2, &g).unwrap(), m2);
    }
}
