//! Proof-carrying upper bounds `U ⊇ ∫I` and class separation.
//!
//! A bound is assembled from rules: the Betti-shift bound `m^d`, the
//! hypersurface formula `∫(I, f) = (∫I, f)` for `f` in variables disjoint
//! from I, the join bound `∫(I, J) ⊆ (∫I, J)` for J monomial and CM in a
//! disjoint block, maximality of symbolic powers, flat extension from the
//! subring of the variables actually used, and the licci case `∫I = R`.
//! Every rule that fires yields a candidate; the tightest one is kept.

use std::fmt;
use std::sync::Arc;

use crate::betti::{is_cohen_macaulay, shift_data, ShiftData};
use crate::constructions::symbolic_power_monomial;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundRule {
    ShiftBound,
    Hypersurface,
    Join,
    MaximalInput,
    FlatExtension,
    LicciUnit,
}

impl fmt::Display for BoundRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundRule::ShiftBound => "shift-bound",
            BoundRule::Hypersurface => "hypersurface",
            BoundRule::Join => "join",
            BoundRule::MaximalInput => "maximal-input",
            BoundRule::FlatExtension => "flat-extension",
            BoundRule::LicciUnit => "licci-unit",
        })
    }
}

#[derive(Clone, Debug)]
pub struct UpperBoundCertificate {
    pub ideal: Ideal,
    pub bound: Ideal,
    pub rule: BoundRule,
    /// One line of rule-specific evidence.
    pub detail: String,
    pub premises: Vec<UpperBoundCertificate>,
}

impl UpperBoundCertificate {
    pub fn is_proper(&self) -> bool {
        self.bound.is_proper()
    }

    /// Number of rule applications in the tree.
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(|p| p.size()).sum::<usize>()
    }

    /// Check the structural invariants of the tree: every bound contains
    /// its ideal unless the rule is licci-unit, in which case it is R.
    pub fn validate(&self) -> bool {
        let own = match self.rule {
            BoundRule::LicciUnit => self.bound.is_unit(),
            _ => self.bound.is_proper() && self.ideal.is_subideal(&self.bound),
        };
        own && self.premises.iter().all(|p| p.validate())
    }

    fn write_tree(&self, f: &mut fmt::Formatter<'_>, indent: usize) -> fmt::Result {
        writeln!(
            f,
            "{:indent$}{}: {} <= {} [{}]",
            "",
            self.rule,
            self.ideal,
            self.bound,
            self.detail,
            indent = indent
        )?;
        for p in &self.premises {
            p.write_tree(f, indent + 2)?;
        }
        Ok(())
    }
}

impl fmt::Display for UpperBoundCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_tree(f, 0)
    }
}

/// A proper-or-unit ideal `U` with `∫I ⊆ U`, or `None` when no rule fires
/// (in particular when I is not Cohen–Macaulay).
pub fn certified_upper_bound(ideal: &Ideal) -> Result<Option<UpperBoundCertificate>> {
    if !ideal.is_proper() {
        return Err(Error::UnitIdeal);
    }
    if ideal.is_zero() {
        return Ok(None);
    }
    if ideal.is_complete_intersection() {
        return Ok(Some(licci(ideal, "complete intersection")));
    }
    if !is_cohen_macaulay(ideal)? {
        return Ok(None);
    }
    if ideal.codimension() <= 2 {
        return Ok(Some(licci(ideal, "perfect of codimension 2")));
    }

    let mut candidates = Vec::new();
    if let Some(data) = shift_data(ideal)? {
        if data.holds() {
            candidates.push(shift_certificate(ideal, &data));
        }
    }
    let (from_components, licci_section) = component_rules(ideal)?;
    if let Some(c) = licci_section {
        return Ok(Some(c));
    }
    candidates.extend(from_components);
    if let Some(c) = maximal_input(ideal)? {
        candidates.push(c);
    }
    if let Some(c) = flat_extension(ideal)? {
        candidates.push(c);
    }
    Ok(tightest(candidates))
}

fn licci(ideal: &Ideal, why: &str) -> UpperBoundCertificate {
    UpperBoundCertificate {
        ideal: ideal.clone(),
        bound: Ideal::unit(ideal.ring().clone()),
        rule: BoundRule::LicciUnit,
        detail: why.to_string(),
        premises: Vec::new(),
    }
}

fn shift_certificate(ideal: &Ideal, data: &ShiftData) -> UpperBoundCertificate {
    UpperBoundCertificate {
        ideal: ideal.clone(),
        bound: Ideal::maximal_power(ideal.ring().clone(), data.initial_degree),
        rule: BoundRule::ShiftBound,
        detail: format!(
            "g={} d={} max last shift {} <= {}",
            data.codimension,
            data.initial_degree,
            data.max_last_shift,
            (data.codimension - 1) as u32 * data.initial_degree
        ),
        premises: Vec::new(),
    }
}

/// Candidate with the smallest bound: one contained in every other bound
/// if it exists, else the one contained in the most others. Earlier
/// candidates win ties.
fn tightest(candidates: Vec<UpperBoundCertificate>) -> Option<UpperBoundCertificate> {
    let n = candidates.len();
    let score = |i: usize| {
        (0..n)
            .filter(|&j| candidates[i].bound.is_subideal(&candidates[j].bound))
            .count()
    };
    let best = (0..n).max_by_key(|&i| (score(i), n - i))?;
    candidates.into_iter().nth(best)
}

/// Connected components of the graph on variables joining two variables
/// when they occur in a common minimal generator; returns the generators
/// grouped by component.
fn split_by_support(ideal: &Ideal) -> Vec<(u32, Vec<Polynomial>)> {
    let mut groups: Vec<(u32, Vec<Polynomial>)> = Vec::new();
    for g in ideal.minimal_generators().iter() {
        let mut mask = g.support_mask();
        let mut members = vec![g.clone()];
        let mut k = 0;
        while k < groups.len() {
            if groups[k].0 & mask != 0 {
                let (m, gs) = groups.swap_remove(k);
                mask |= m;
                members.extend(gs);
                k = 0;
            } else {
                k += 1;
            }
        }
        groups.push((mask, members));
    }
    groups.sort_by_key(|(m, _)| *m);
    groups
}

/// Hypersurface and join candidates; a hypersurface section of a licci
/// ideal is licci, which is returned separately.
fn component_rules(ideal: &Ideal) -> Result<(Vec<UpperBoundCertificate>, Option<UpperBoundCertificate>)> {
    let ring = ideal.ring();
    let groups = split_by_support(ideal);
    let mut out = Vec::new();
    if groups.len() < 2 {
        return Ok((out, None));
    }
    for (k, (_, gens)) in groups.iter().enumerate() {
        let part = Ideal::new(ring.clone(), gens.clone())?;
        let rest_gens: Vec<Polynomial> = groups
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .flat_map(|(_, (_, g))| g.iter().cloned())
            .collect();
        let rest = Ideal::new(ring.clone(), rest_gens)?;
        let (rule, detail) = if gens.len() == 1 {
            (
                BoundRule::Hypersurface,
                format!("{} is regular modulo the rest (disjoint variables)", gens[0].monic(ring).to_string(ring)),
            )
        } else if part.is_monomial() && is_cohen_macaulay(&part)? {
            (BoundRule::Join, format!("{part} is monomial and Cohen-Macaulay in a disjoint block"))
        } else {
            continue;
        };
        let Some(sub) = certified_upper_bound(&rest)? else {
            continue;
        };
        if !sub.is_proper() {
            if rule == BoundRule::Hypersurface {
                let mut c = licci(ideal, "hypersurface section of a licci ideal");
                c.premises.push(sub);
                return Ok((Vec::new(), Some(c)));
            }
            continue;
        }
        out.push(UpperBoundCertificate {
            ideal: ideal.clone(),
            bound: sub.bound.sum(&part),
            rule,
            detail,
            premises: vec![sub],
        });
    }
    Ok((out, None))
}

/// I monomial and equal to `rad(I)^(t)` with `t >= 2`, `rad(I)` unmixed of
/// codimension at least 3: symbolic powers of such ideals are maximal in
/// their linkage class, so `∫I = I`.
fn maximal_input(ideal: &Ideal) -> Result<Option<UpperBoundCertificate>> {
    if !ideal.is_monomial() {
        return Ok(None);
    }
    let lead = ideal.leading_ideal();
    let radical = lead.radical();
    let primes = radical.minimal_primes();
    let g = ideal.codimension();
    if g < 3 || primes.iter().any(|p| p.count_ones() as usize != g) {
        return Ok(None);
    }
    let rad = Ideal::from_monomials(ideal.ring().clone(), radical.generators());
    let top = ideal.max_generator_degree().unwrap_or(0);
    for t in 2..=top {
        if symbolic_power_monomial(&rad, t)?.equals(ideal) {
            return Ok(Some(UpperBoundCertificate {
                ideal: ideal.clone(),
                bound: ideal.clone(),
                rule: BoundRule::MaximalInput,
                detail: format!("symbolic power t={t} of the unmixed radical {rad}"),
                premises: Vec::new(),
            }));
        }
    }
    Ok(None)
}

/// When I only involves some of the variables, bound it in the subring of
/// those variables and extend: the polynomial extension is flat with a
/// Gorenstein closed fibre, so `∫(IT) = (∫I)T`.
fn flat_extension(ideal: &Ideal) -> Result<Option<UpperBoundCertificate>> {
    let ring = ideal.ring();
    let mask = ideal.support_mask();
    let keep: Vec<usize> = (0..ring.nvars()).filter(|k| mask >> k & 1 == 1).collect();
    if keep.len() == ring.nvars() || keep.is_empty() {
        return Ok(None);
    }
    let sub = ring.subring(&keep)?;
    let mut down = vec![0usize; ring.nvars()];
    for (new, &old) in keep.iter().enumerate() {
        down[old] = new;
    }
    let gens = ideal.minimal_generators().iter().map(|g| g.remap(&down, &sub)).collect();
    let small = Ideal::new(sub.clone(), gens)?;
    let Some(inner) = certified_upper_bound(&small)? else {
        return Ok(None);
    };
    let bound = if inner.bound.is_unit() {
        Ideal::unit(ring.clone())
    } else {
        inner.bound.map_into(&keep, ring)
    };
    let dropped: Vec<&str> = (0..ring.nvars())
        .filter(|k| mask >> k & 1 == 0)
        .map(|k| ring.variables()[k].as_str())
        .collect();
    Ok(Some(UpperBoundCertificate {
        ideal: ideal.clone(),
        bound,
        rule: if inner.rule == BoundRule::LicciUnit {
            BoundRule::LicciUnit
        } else {
            BoundRule::FlatExtension
        },
        detail: format!("extended from the subring without {}", dropped.join(",")),
        premises: vec![inner],
    }))
}

#[derive(Clone, Debug)]
pub enum Separation {
    /// `certificate` bounds `∫` of one ideal, and `witness` is a generator
    /// of the other ideal outside that bound, so the classes differ.
    Separated {
        certificate: Box<UpperBoundCertificate>,
        witness: Polynomial,
        /// 0 if the bound belongs to the first ideal, 1 for the second.
        bounded: usize,
    },
    Inconclusive,
}

impl Separation {
    pub fn is_separated(&self) -> bool {
        matches!(self, Separation::Separated { .. })
    }
}

pub fn separate_classes(k1: &Ideal, k2: &Ideal) -> Result<Separation> {
    if !Arc::ptr_eq(k1.ring(), k2.ring()) && k1.ring() != k2.ring() {
        return Err(Error::Invalid("ideals live in different rings".into()));
    }
    for (bounded, (a, b)) in [(k1, k2), (k2, k1)].into_iter().enumerate() {
        let Some(cert) = certified_upper_bound(a)? else {
            continue;
        };
        if !cert.is_proper() {
            continue;
        }
        if let Some(witness) = b.witness_outside(&cert.bound) {
            return Ok(Separation::Separated {
                certificate: Box::new(cert),
                witness,
                bounded,
            });
        }
    }
    Ok(Separation::Inconclusive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;
    use crate::ring::Ring;

    fn ideal(vars: &[&str], gens: &str) -> Ideal {
        parse_ideal(gens, &Ring::grevlex(vars).unwrap()).unwrap()
    }

    fn bound(i: &Ideal) -> UpperBoundCertificate {
        let c = certified_upper_bound(i).unwrap().expect("a rule fires");
        assert!(c.validate());
        c
    }

    #[test]
    fn example_ideal_bounded_by_square_of_maximal_ideal() {
        let i = ideal(&["x", "y", "z", "w"], "x^2, x*y, y^2, z^2, z*w, w^2");
        let c = bound(&i);
        assert_eq!(c.rule, BoundRule::ShiftBound);
        assert!(c.bound.equals(&Ideal::maximal_power(i.ring().clone(), 2)));
    }

    #[test]
    fn square_of_maximal_ideal_is_its_own_bound() {
        let i = ideal(&["x", "y", "z"], "x^2, x*y, x*z, y^2, y*z, z^2");
        let c = bound(&i);
        assert_eq!(c.rule, BoundRule::ShiftBound);
        assert!(c.bound.equals(&i));
    }

    #[test]
    fn hypersurface_rule_on_a_section() {
        let i = ideal(&["x", "y", "z", "w"], "x^2, x*y, x*z, y^2, y*z, z^2, w");
        let c = bound(&i);
        assert_eq!(c.rule, BoundRule::Hypersurface);
        assert!(c.bound.equals(&i));
        assert!(c.premises[0].bound.equals(&ideal(&["x", "y", "z", "w"], "x^2, x*y, x*z, y^2, y*z, z^2")));
    }

    #[test]
    fn join_rule_with_monomial_factor() {
        let i = ideal(
            &["x", "y", "z", "u", "v", "w"],
            "x^2, x*y, x*z, y^2, y*z, z^2, u*v, u*w, v*w",
        );
        let c = bound(&i);
        assert_eq!(c.rule, BoundRule::Join);
        assert!(c.bound.equals(&i));
    }

    #[test]
    fn licci_inputs_get_the_unit_ideal() {
        let cubic = ideal(&["x", "y", "z", "w"], "x*z - y^2, x*w - y*z, y*w - z^2");
        assert_eq!(bound(&cubic).rule, BoundRule::LicciUnit);
        let ci = ideal(&["x", "y"], "x^2, y^3");
        assert!(bound(&ci).bound.is_unit());
    }

    #[test]
    fn non_cm_input_has_no_bound() {
        let i = ideal(&["x", "y", "z"], "x*y, x*z");
        assert!(certified_upper_bound(&i).unwrap().is_none());
    }

    #[test]
    fn symbolic_square_of_a_codim3_prime_ideal() {
        // the shift rule only gives m^2 here; (x,y,z)^2 itself comes from
        // maximality of symbolic powers
        let i = ideal(&["x", "y", "z", "w"], "x^2, x*y, x*z, y^2, y*z, z^2");
        let c = bound(&i);
        assert!(c.bound.equals(&i));
        assert_eq!(c.rule, BoundRule::MaximalInput);
        let j = ideal(&["x", "y", "z", "w", "v"], "x^2, x*y, y^2, z^2, z*w, w^2");
        let c = bound(&j);
        assert_eq!(c.rule, BoundRule::FlatExtension);
        assert_eq!(c.premises[0].rule, BoundRule::ShiftBound);
        assert!(c.bound.equals(&ideal(&["x", "y", "z", "w", "v"], "x^2, x*y, x*z, x*w, y^2, y*z, y*w, z^2, z*w, w^2")));
    }

    #[test]
    fn section_of_a_licci_ideal_is_licci() {
        let c = bound(&ideal(&["x", "y", "z", "w"], "x^2, x*y, y^2, z^2"));
        assert_eq!(c.rule, BoundRule::LicciUnit);
        assert!(c.bound.is_unit());
    }

    #[test]
    fn generic_sections_are_separated() {
        let r = Ring::grevlex(&["x", "y", "z", "u", "v"]).unwrap();
        let k1 = parse_ideal("x^2, x*y, x*z, y^2, y*z, z^2, u", &r).unwrap();
        let k2 = parse_ideal("x^2, x*y, x*z, y^2, y*z, z^2, v", &r).unwrap();
        match separate_classes(&k1, &k2).unwrap() {
            Separation::Separated { witness, bounded, .. } => {
                assert_eq!(bounded, 0);
                assert_eq!(witness.to_string(&r), "v");
            }
            Separation::Inconclusive => panic!("expected separation"),
        }
        assert!(!separate_classes(&k1, &k1).unwrap().is_separated());
    }
}
