//! Complete-intersection links: drawing regular sequences inside an ideal,
//! direct links with their postconditions, seeded link walks, the
//! truncated sum of a linkage class, licci search, maximality checks and
//! the literal first generic link.
//!
//! All randomness flows from a master seed. Chain `k` of a walk draws from
//! its own stream derived from `(seed, k)`, so chains are independent of
//! scheduling and a deeper walk extends a shallower one step for step.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::betti::is_cohen_macaulay;
use crate::bound::{certified_upper_bound, UpperBoundCertificate};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::{graded_monomial_basis, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::Ring;

/// Degrees of the linking complete intersection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DegreePolicy {
    /// Lowest available degrees: the sorted degrees of minimal generators,
    /// raised only when a draw fails to be regular.
    #[default]
    Minimal,
    /// Every element of degree `D`, which must be at least the largest
    /// generator degree.
    Uniform(u32),
}

impl fmt::Display for DegreePolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreePolicy::Minimal => write!(f, "minimal"),
            DegreePolicy::Uniform(d) => write!(f, "uniform:{d}"),
        }
    }
}

impl std::str::FromStr for DegreePolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "minimal" {
            return Ok(DegreePolicy::Minimal);
        }
        if let Some(d) = s.strip_prefix("uniform:") {
            if let Ok(d) = d.parse() {
                return Ok(DegreePolicy::Uniform(d));
            }
        }
        Err(Error::Invalid(format!("unknown degree policy `{s}` (expected minimal or uniform:D)")))
    }
}

#[derive(Clone, Debug)]
pub struct LinkConfig {
    pub policy: DegreePolicy,
    /// Draw attempts before giving up on a regular sequence.
    pub max_attempts: usize,
    /// Verify that every link is Cohen–Macaulay via its Betti table.
    pub check_cm: bool,
}

impl Default for LinkConfig {
    fn default() -> Self {
        Self {
            policy: DegreePolicy::Minimal,
            max_attempts: 40,
            check_cm: true,
        }
    }
}

/// Homogeneous elements of an ideal generating a complete intersection of
/// the ideal's codimension.
#[derive(Clone, Debug)]
pub struct RegularSequence {
    elements: Vec<Polynomial>,
    degrees: Vec<u32>,
    codim: usize,
    seed: Option<u64>,
}

impl RegularSequence {
    /// Certify `elements` as a linking sequence inside `target`.
    pub fn new(target: &Ideal, elements: Vec<Polynomial>) -> Result<Self> {
        let ring = target.ring();
        let g = target.codimension();
        if elements.len() != g {
            return Err(Error::Invalid(format!(
                "need {g} elements for a codimension-{g} ideal, got {}",
                elements.len()
            )));
        }
        if let Some(out) = elements.iter().find(|f| !target.contains(f)) {
            return Err(Error::Invalid(format!("{} is not in the ideal", out.to_string(ring))));
        }
        let ci = Ideal::new(ring.clone(), elements.clone())?;
        if ci.codimension() != g {
            return Err(Error::Invalid("elements do not form a regular sequence".into()));
        }
        let degrees = elements.iter().map(|f| f.degree().unwrap_or(0)).collect();
        Ok(Self {
            elements,
            degrees,
            codim: g,
            seed: None,
        })
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn certified_codim(&self) -> usize {
        self.codim
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn ideal(&self, ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring.clone(), self.elements.clone()).expect("homogeneous")
    }

    pub fn strings(&self, ring: &Ring) -> Vec<String> {
        self.elements.iter().map(|f| f.to_string(ring)).collect()
    }
}

/// Derive an independent stream seed from a master seed and an index.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    fn mix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
    mix(mix(master) ^ index.wrapping_mul(0xd6e8_feb8_6659_fd93))
}

fn random_form<R: Rng>(ring: &Ring, degree: u32, rng: &mut R) -> Polynomial {
    let p = ring.characteristic();
    Polynomial::from_terms(
        graded_monomial_basis(ring.nvars(), degree, ring.order())
            .into_iter()
            .map(|m| (m, rng.gen_range(0..p))),
        ring,
    )
}

/// Random element of `I_d`: `Σ h_j f_j` with random forms `h_j`.
fn random_element<R: Rng>(gens: &[Polynomial], ring: &Ring, d: u32, rng: &mut R) -> Polynomial {
    let mut acc = Polynomial::zero();
    for f in gens {
        let df = f.degree().unwrap();
        if df > d {
            continue;
        }
        let h = random_form(ring, d - df, rng);
        acc = acc.add(&h.mul(f, ring), ring);
    }
    acc
}

fn draw_with_degrees<R: Rng>(
    ideal: &Ideal,
    mut degrees: Vec<u32>,
    bump: bool,
    rng: &mut R,
    max_attempts: usize,
    seed: u64,
) -> Result<RegularSequence> {
    let ring = ideal.ring();
    let gens = ideal.minimal_generators();
    let g = degrees.len();
    let mut elements: Vec<Polynomial> = Vec::with_capacity(g);
    let mut attempts = 0;
    let mut failures_here = 0;
    while elements.len() < g {
        let k = elements.len();
        attempts += 1;
        if attempts > max_attempts {
            return Err(Error::RetryLimit { attempts: max_attempts, seed });
        }
        let f = random_element(&gens, ring, degrees[k], rng);
        if f.is_zero() {
            failures_here += 1;
        } else {
            let mut trial = elements.clone();
            trial.push(f.clone());
            let ci = Ideal::new(ring.clone(), trial).expect("homogeneous");
            if ci.codimension() == k + 1 {
                elements.push(f);
                failures_here = 0;
                continue;
            }
            failures_here += 1;
        }
        if bump && failures_here >= 3 {
            for d in degrees[k..].iter_mut() {
                *d += 1;
            }
            failures_here = 0;
        }
    }
    Ok(RegularSequence {
        degrees: elements.iter().map(|f| f.degree().unwrap()).collect(),
        elements,
        codim: g,
        seed: Some(seed),
    })
}

fn policy_degrees(ideal: &Ideal, policy: DegreePolicy) -> Result<(Vec<u32>, bool)> {
    let g = ideal.codimension();
    let mut gdeg: Vec<u32> = ideal
        .minimal_generators()
        .iter()
        .map(|f| f.degree().unwrap())
        .collect();
    gdeg.sort_unstable();
    match policy {
        DegreePolicy::Minimal => Ok((gdeg.into_iter().take(g).collect(), true)),
        DegreePolicy::Uniform(d) => {
            let top = gdeg.last().copied().unwrap_or(0);
            if d < top {
                return Err(Error::Invalid(format!(
                    "uniform degree {d} is below the largest generator degree {top}"
                )));
            }
            Ok((vec![d; g], false))
        }
    }
}

/// Draw `g = codim(I)` random homogeneous elements of I forming a regular
/// sequence, with degrees chosen by `policy`.
pub fn sample_ci_in_ideal<R: Rng>(
    ideal: &Ideal,
    policy: DegreePolicy,
    rng: &mut R,
    max_attempts: usize,
    seed: u64,
) -> Result<RegularSequence> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if ideal.codimension() == 0 {
        return Err(Error::Invalid("zero ideal has no linking sequence".into()));
    }
    let (degrees, bump) = policy_degrees(ideal, policy)?;
    draw_with_degrees(ideal, degrees, bump, rng, max_attempts, seed)
}

/// Draw used inside walks: like [`sample_ci_in_ideal`], but for a complete
/// intersection the top degree is raised by one so the link is proper.
fn draw_for_link<R: Rng>(ideal: &Ideal, cfg: &LinkConfig, rng: &mut R, seed: u64) -> Result<RegularSequence> {
    let (mut degrees, bump) = policy_degrees(ideal, cfg.policy)?;
    if ideal.is_complete_intersection() && cfg.policy == DegreePolicy::Minimal {
        if let Some(last) = degrees.last_mut() {
            *last += 1;
        }
    }
    draw_with_degrees(ideal, degrees, bump, rng, cfg.max_attempts, seed)
}

/// `J = (α) : I`, with the link postconditions verified: J proper, of the
/// same codimension, `(α) : J = I`, and (optionally) J Cohen–Macaulay.
pub fn direct_link(ideal: &Ideal, alpha: &RegularSequence, check_cm: bool) -> Result<Ideal> {
    let ring = ideal.ring();
    let seed = alpha.seed.unwrap_or(0);
    let invalid = |reason: String| Error::InvalidLink { seed, reason };
    let ci = alpha.ideal(ring);
    if !ci.is_subideal(ideal) {
        return Err(invalid("linking sequence is not inside the ideal".into()));
    }
    let link = ci.colon(ideal)?;
    if link.is_unit() {
        return Err(invalid("link is the unit ideal (the ideal equals the complete intersection)".into()));
    }
    let g = ideal.codimension();
    if link.codimension() != g {
        return Err(invalid(format!("link has codimension {} instead of {g}", link.codimension())));
    }
    let back = ci.colon(&link)?;
    if !back.equals(ideal) {
        return Err(invalid(format!("double link {back} differs from the input")));
    }
    if check_cm && !is_cohen_macaulay(&link)? {
        return Err(invalid(format!("link {link} is not Cohen-Macaulay")));
    }
    Ok(link)
}

#[derive(Clone, Debug)]
pub struct LinkStep {
    pub alpha: RegularSequence,
    pub ideal: Ideal,
}

/// A recorded sequence of direct links `I = I_0 ~ I_1 ~ ... ~ I_e`.
#[derive(Clone, Debug)]
pub struct LinkChain {
    pub start: Ideal,
    pub steps: Vec<LinkStep>,
    pub seed: u64,
    pub policy: DegreePolicy,
}

impl LinkChain {
    pub fn last(&self) -> &Ideal {
        self.steps.last().map_or(&self.start, |s| &s.ideal)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct ChainFailure {
    pub chain: usize,
    pub step: usize,
    pub seed: u64,
    pub error: Error,
}

#[derive(Clone, Debug)]
pub struct WalkNode {
    pub ideal: Ideal,
    pub key: u64,
    /// Smallest link distance at which the node was reached.
    pub depth: usize,
    pub is_ci: bool,
}

/// All chains of a walk plus the deduplicated set of ideals they reach.
#[derive(Clone, Debug)]
pub struct WalkResult {
    pub start: Ideal,
    pub seed: u64,
    pub chains: Vec<LinkChain>,
    pub failures: Vec<ChainFailure>,
    /// Distinct ideals (the start included), ordered by canonical key.
    pub nodes: Vec<WalkNode>,
    /// Number of links whose involution `(α):((α):I) = I` was verified.
    pub edges_checked: usize,
}

impl WalkResult {
    pub fn contains_ci(&self) -> bool {
        self.nodes.iter().any(|n| n.is_ci)
    }
}

fn run_chain(
    start: &Ideal,
    depth: usize,
    chain_index: usize,
    chain_seed: u64,
    forced_first: Option<&RegularSequence>,
    cfg: &LinkConfig,
) -> (LinkChain, Option<ChainFailure>) {
    let mut rng = ChaCha8Rng::seed_from_u64(chain_seed);
    let mut chain = LinkChain {
        start: start.clone(),
        steps: Vec::new(),
        seed: chain_seed,
        policy: cfg.policy,
    };
    for step in 0..depth {
        let current = chain.last().clone();
        let drawn = match (step, forced_first) {
            (0, Some(alpha)) => Ok(alpha.clone().with_seed(chain_seed)),
            _ => draw_for_link(&current, cfg, &mut rng, chain_seed),
        };
        let outcome = drawn.and_then(|alpha| direct_link(&current, &alpha, cfg.check_cm).map(|j| (alpha, j)));
        match outcome {
            Ok((alpha, ideal)) => chain.steps.push(LinkStep { alpha, ideal }),
            Err(error) => {
                let failure = ChainFailure {
                    chain: chain_index,
                    step,
                    seed: chain_seed,
                    error,
                };
                return (chain, Some(failure));
            }
        }
    }
    (chain, None)
}

/// Seeded random walk: `width` independent chains of up to `depth` links,
/// plus one chain per entry of `forced` whose first link uses that
/// sequence. Failures are collected, not propagated.
pub fn link_walk(
    ideal: &Ideal,
    depth: usize,
    width: usize,
    seed: u64,
    cfg: &LinkConfig,
    forced: &[RegularSequence],
) -> WalkResult {
    let jobs: Vec<(usize, Option<&RegularSequence>)> = forced
        .iter()
        .map(Some)
        .chain(std::iter::repeat_n(None, width))
        .enumerate()
        .collect();
    let results: Vec<(LinkChain, Option<ChainFailure>)> = jobs
        .par_iter()
        .map(|&(k, f)| run_chain(ideal, depth, k, derive_seed(seed, k as u64), f, cfg))
        .collect();

    let mut chains = Vec::with_capacity(results.len());
    let mut failures = Vec::new();
    let mut nodes: BTreeMap<u64, Vec<WalkNode>> = BTreeMap::new();
    let mut edges_checked = 0;
    let mut add = |ideal: &Ideal, depth: usize| {
        let key = ideal.canonical_key();
        let bucket = nodes.entry(key).or_default();
        if let Some(n) = bucket.iter_mut().find(|n| n.ideal.equals(ideal)) {
            n.depth = n.depth.min(depth);
        } else {
            bucket.push(WalkNode {
                ideal: ideal.clone(),
                key,
                depth,
                is_ci: ideal.is_complete_intersection(),
            });
        }
    };
    add(ideal, 0);
    for (chain, failure) in results {
        for (k, step) in chain.steps.iter().enumerate() {
            add(&step.ideal, k + 1);
            edges_checked += 1;
        }
        chains.push(chain);
        failures.extend(failure);
    }
    WalkResult {
        start: ideal.clone(),
        seed,
        chains,
        failures,
        nodes: nodes.into_values().flatten().collect(),
        edges_checked,
    }
}

/// Truncated linkage-class sum.
#[derive(Clone, Debug)]
pub struct IntegralResult {
    /// Sum of the start ideal and every walk node; the unit ideal when a
    /// complete intersection was reached.
    pub ideal: Ideal,
    pub depth: usize,
    pub trials: usize,
    /// The accumulations at depth `e` and `e - 1` agree.
    pub stabilized: bool,
    pub licci_detected: bool,
    /// Accumulated sum after links of length `0..=depth`.
    pub per_depth: Vec<Ideal>,
    pub walk: WalkResult,
}

pub fn integral_truncated(
    ideal: &Ideal,
    depth: usize,
    trials: usize,
    seed: u64,
    cfg: &LinkConfig,
    forced: &[RegularSequence],
) -> IntegralResult {
    let walk = link_walk(ideal, depth, trials, seed, cfg, forced);
    let ring = ideal.ring();
    let mut per_depth = Vec::with_capacity(depth + 1);
    let mut acc = ideal.clone();
    per_depth.push(acc.clone());
    for level in 1..=depth {
        let mut gens: Vec<Polynomial> = acc.gb().elements().to_vec();
        for chain in &walk.chains {
            if let Some(step) = chain.steps.get(level - 1) {
                gens.extend(step.ideal.minimal_generators().iter().cloned());
            }
        }
        acc = Ideal::new(ring.clone(), gens).expect("homogeneous");
        per_depth.push(acc.clone());
    }
    let licci_detected = walk.contains_ci();
    let stabilized = depth >= 1 && per_depth[depth].equals(&per_depth[depth - 1]);
    let ideal = if licci_detected {
        Ideal::unit(ring.clone())
    } else {
        acc
    };
    IntegralResult {
        ideal,
        depth,
        trials,
        stabilized,
        licci_detected,
        per_depth,
        walk,
    }
}

/// Outcome of a licci search; `chain == None` is not a proof of non-licci.
#[derive(Clone, Debug)]
pub struct LicciSearch {
    pub chain: Option<LinkChain>,
    pub explored: usize,
    pub failures: Vec<ChainFailure>,
}

/// Beam search over random links for a complete intersection. Each level
/// draws `beam` links spread over the current frontier and keeps the
/// `beam` smallest new ideals (fewest generators, then lowest degrees).
pub fn licci_search(ideal: &Ideal, max_depth: usize, beam: usize, seed: u64, cfg: &LinkConfig) -> LicciSearch {
    let mut out = LicciSearch {
        chain: None,
        explored: 0,
        failures: Vec::new(),
    };
    let empty = LinkChain {
        start: ideal.clone(),
        steps: Vec::new(),
        seed,
        policy: cfg.policy,
    };
    if ideal.is_complete_intersection() {
        out.chain = Some(empty);
        return out;
    }
    let mut seen: BTreeMap<u64, Vec<Ideal>> = BTreeMap::new();
    seen.entry(ideal.canonical_key()).or_default().push(ideal.clone());
    let mut frontier = vec![empty];
    for level in 0..max_depth {
        if frontier.is_empty() || beam == 0 {
            break;
        }
        let draws: Vec<(usize, u64)> = (0..beam)
            .map(|k| (k % frontier.len(), derive_seed(seed, (level * beam + k) as u64)))
            .collect();
        let mut next: Vec<LinkChain> = Vec::new();
        // draws are evaluated a chunk at a time so a complete intersection
        // early in the schedule stops the level; the first hit in draw
        // order wins whatever the chunk size
        let chunk = rayon::current_num_threads().max(1);
        for (c, batch) in draws.chunks(chunk).enumerate() {
            let results: Vec<(usize, u64, Result<LinkStep>)> = batch
                .par_iter()
                .map(|&(parent, s)| {
                    let mut rng = ChaCha8Rng::seed_from_u64(s);
                    let current = frontier[parent].last();
                    let step = draw_for_link(current, cfg, &mut rng, s).and_then(|alpha| {
                        direct_link(current, &alpha, cfg.check_cm).map(|ideal| LinkStep { alpha, ideal })
                    });
                    (parent, s, step)
                })
                .collect();
            for (k, (parent, s, step)) in results.into_iter().enumerate() {
                out.explored += 1;
                let step = match step {
                    Ok(step) => step,
                    Err(error) => {
                        out.failures.push(ChainFailure {
                            chain: c * chunk + k,
                            step: level,
                            seed: s,
                            error,
                        });
                        continue;
                    }
                };
                let mut chain = frontier[parent].clone();
                chain.seed = s;
                let is_ci = step.ideal.is_complete_intersection();
                let key = step.ideal.canonical_key();
                let bucket = seen.entry(key).or_default();
                let fresh = !bucket.iter().any(|i| i.equals(&step.ideal));
                if fresh {
                    bucket.push(step.ideal.clone());
                }
                chain.steps.push(step);
                if is_ci {
                    out.chain = Some(chain);
                    return out;
                }
                if fresh {
                    next.push(chain);
                }
            }
        }
        next.sort_by_cached_key(|c| {
            let last = c.last();
            let degs: u32 = last.minimal_generators().iter().filter_map(|f| f.degree()).sum();
            (last.num_generators(), degs, last.canonical_key())
        });
        next.truncate(beam);
        frontier = next;
    }
    out
}

#[derive(Clone, Debug)]
pub enum MaximalityVerdict {
    /// A certified upper bound for the class sum equals the ideal.
    Proven(Box<UpperBoundCertificate>),
    /// A linked ideal not contained in the input, with a generator outside.
    Refuted { node: Ideal, witness: Polynomial },
    /// No refutation found and no certificate; randomized evidence only.
    Consistent,
}

#[derive(Clone, Debug)]
pub struct MaximalityReport {
    pub verdict: MaximalityVerdict,
    /// Every walk node not contained in the ideal, with a witness.
    pub refutations: Vec<(Ideal, Polynomial)>,
    pub certificate: Option<UpperBoundCertificate>,
    pub walk: WalkResult,
}

pub fn is_maximal_in_class_truncated(
    ideal: &Ideal,
    depth: usize,
    trials: usize,
    seed: u64,
    cfg: &LinkConfig,
) -> Result<MaximalityReport> {
    if ideal.equals(&Ideal::maximal(ideal.ring().clone())) {
        return Err(Error::Invalid("the maximal ideal is excluded".into()));
    }
    let walk = link_walk(ideal, depth, trials, seed, cfg, &[]);
    let refutations: Vec<(Ideal, Polynomial)> = walk
        .nodes
        .iter()
        .filter_map(|n| n.ideal.witness_outside(ideal).map(|w| (n.ideal.clone(), w)))
        .collect();
    let certificate = certified_upper_bound(ideal)?;
    let verdict = if let Some((node, witness)) = refutations.first() {
        MaximalityVerdict::Refuted {
            node: node.clone(),
            witness: witness.clone(),
        }
    } else {
        match &certificate {
            Some(c) if c.is_proper() && c.bound.is_subideal(ideal) => MaximalityVerdict::Proven(Box::new(c.clone())),
            _ => MaximalityVerdict::Consistent,
        }
    };
    Ok(MaximalityReport {
        verdict,
        refutations,
        certificate,
        walk,
    })
}

pub const DEFAULT_VARIABLE_CAP: usize = 16;

/// The first generic link `(α) : I` over `R[X]` with `α_i = Σ_j X_ij f_j`
/// for a `g × n` matrix of fresh variables.
#[derive(Clone, Debug)]
pub struct GenericLink {
    pub ideal: Ideal,
    pub alpha: Vec<Polynomial>,
    /// Indices of the matrix variables in the extended ring, row-major.
    pub matrix_vars: Vec<Vec<usize>>,
    pub generators: Vec<Polynomial>,
    base: Arc<Ring>,
}

impl GenericLink {
    /// Specialize the matrix variables to `values` (row-major), returning
    /// the image ideal and the specialized linking elements in the base ring.
    pub fn specialize(&self, values: &[Vec<u32>]) -> (Ideal, Vec<Polynomial>) {
        let big = self.ideal.ring();
        let base = &self.base;
        let mut images: Vec<Polynomial> = (0..base.nvars()).map(|i| Polynomial::var(i, base)).collect();
        images.resize(big.nvars(), Polynomial::zero());
        for (row, vals) in self.matrix_vars.iter().zip(values) {
            for (&v, &c) in row.iter().zip(vals) {
                images[v] = Polynomial::term(crate::monomial::Monomial::one(base.nvars()), c);
            }
        }
        // specialization of X-variables breaks the standard grading of the
        // extended ring, so the image is assembled without homogeneity checks
        let gens: Vec<Polynomial> = self
            .ideal
            .gb()
            .elements()
            .iter()
            .map(|g| g.substitute(&images, big, base))
            .collect();
        let alpha: Vec<Polynomial> = self.alpha.iter().map(|a| a.substitute(&images, big, base)).collect();
        (Ideal::new(base.clone(), gens).expect("specialized link is homogeneous"), alpha)
    }
}

pub fn generic_link_literal(ideal: &Ideal, cap: usize) -> Result<GenericLink> {
    let ring = ideal.ring();
    let gens: Vec<Polynomial> = ideal.minimal_generators().to_vec();
    let g = ideal.codimension();
    let needed = gens.len() * g + ring.nvars();
    if needed > cap {
        return Err(Error::VariableCap { needed, cap });
    }
    let d0 = gens.first().and_then(|f| f.degree()).unwrap_or(0);
    if gens.iter().any(|f| f.degree() != Some(d0)) {
        return Err(Error::Invalid("the generic link needs generators of a single degree".into()));
    }
    let mut names: Vec<String> = ring.variables().to_vec();
    let mut matrix_vars = Vec::with_capacity(g);
    for i in 0..g {
        let mut row = Vec::with_capacity(gens.len());
        for j in 0..gens.len() {
            let base = format!("X{}_{}", i + 1, j + 1);
            let tmp = Ring::new(ring.characteristic() as u64, &names, MonomialOrder::Grevlex)?;
            names.push(tmp.fresh_name(&base));
            row.push(names.len() - 1);
        }
        matrix_vars.push(row);
    }
    let big = Ring::new(ring.characteristic() as u64, &names, MonomialOrder::Grevlex)?;
    let map: Vec<usize> = (0..ring.nvars()).collect();
    let lifted: Vec<Polynomial> = gens.iter().map(|f| f.remap(&map, &big)).collect();
    let alpha: Vec<Polynomial> = matrix_vars
        .iter()
        .map(|row| {
            row.iter().zip(&lifted).fold(Polynomial::zero(), |acc, (&v, f)| {
                acc.add(&Polynomial::var(v, &big).mul(f, &big), &big)
            })
        })
        .collect();
    let extended = ideal.map_into(&map, &big);
    let ci = Ideal::new(big.clone(), alpha.clone())?;
    let link = ci.colon(&extended)?;
    Ok(GenericLink {
        ideal: link,
        alpha,
        matrix_vars,
        generators: gens,
        base: ring.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_ideal, parse_polynomial};

    fn ring(vars: &[&str]) -> Arc<Ring> {
        Ring::grevlex(vars).unwrap()
    }

    fn polys(text: &[&str], r: &Ring) -> Vec<Polynomial> {
        text.iter().map(|t| parse_polynomial(t, r).unwrap()).collect()
    }

    #[test]
    fn twisted_cubic_links_to_a_linear_ci() {
        let r = ring(&["x", "y", "z", "w"]);
        let cubic = parse_ideal("x*z - y^2, x*w - y*z, y*w - z^2", &r).unwrap();
        let alpha = RegularSequence::new(&cubic, polys(&["x*z - y^2", "y*w - z^2"], &r)).unwrap();
        let j = direct_link(&cubic, &alpha, true).unwrap();
        assert!(j.equals(&parse_ideal("y, z", &r).unwrap()));
    }

    #[test]
    fn example_ideal_link_contains_mixed_products() {
        let r = ring(&["x", "y", "z", "w"]);
        let i = parse_ideal("x^2, x*y, y^2, z^2, z*w, w^2", &r).unwrap();
        let alpha = RegularSequence::new(&i, polys(&["x^2", "y^2", "z^2", "w^2"], &r)).unwrap();
        let j = direct_link(&i, &alpha, true).unwrap();
        let mixed = parse_ideal("x*z, x*w, y*z, y*w", &r).unwrap();
        assert!(mixed.is_subideal(&j));
        assert!(i.sum(&j).equals(&Ideal::maximal_power(r.clone(), 2)));
    }

    #[test]
    fn principal_ideal_self_links() {
        let r = ring(&["x"]);
        let i = parse_ideal("x", &r).unwrap();
        let alpha = RegularSequence::new(&i, polys(&["x^2"], &r)).unwrap();
        assert!(direct_link(&i, &alpha, true).unwrap().equals(&i));
    }

    #[test]
    fn rejects_sequences_that_are_not_regular() {
        let r = ring(&["x", "y", "z", "w"]);
        let cubic = parse_ideal("x*z - y^2, x*w - y*z, y*w - z^2", &r).unwrap();
        let twice = polys(&["x*z - y^2", "2*x*z - 2*y^2"], &r);
        assert!(RegularSequence::new(&cubic, twice).is_err());
        let outside = polys(&["x*z - y^2", "x*y"], &r);
        assert!(RegularSequence::new(&cubic, outside).is_err());
    }

    #[test]
    fn sampled_sequences_are_certified() {
        let r = ring(&["x", "y", "z", "w"]);
        let cubic = parse_ideal("x*z - y^2, x*w - y*z, y*w - z^2", &r).unwrap();
        for s in 0..20 {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let a = sample_ci_in_ideal(&cubic, DegreePolicy::Minimal, &mut rng, 40, s).unwrap();
            assert_eq!(a.degrees(), &[2, 2]);
            assert!(RegularSequence::new(&cubic, a.elements().to_vec()).is_ok());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let a = sample_ci_in_ideal(&cubic, DegreePolicy::Uniform(3), &mut rng, 40, 0).unwrap();
        assert_eq!(a.degrees(), &[3, 3]);
        assert!(sample_ci_in_ideal(&cubic, DegreePolicy::Uniform(1), &mut rng, 40, 0).is_err());
    }

    #[test]
    fn walk_of_depth_zero_is_the_input() {
        let r = ring(&["x", "y", "z"]);
        let i = parse_ideal("x^2, x*y, x*z, y^2, y*z, z^2", &r).unwrap();
        let w = link_walk(&i, 0, 5, 1, &LinkConfig::default(), &[]);
        assert_eq!(w.nodes.len(), 1);
        assert!(w.nodes[0].ideal.equals(&i));
    }

    #[test]
    fn walks_are_reproducible() {
        let r = ring(&["x", "y", "z", "w"]);
        let cubic = parse_ideal("x*z - y^2, x*w - y*z, y*w - z^2", &r).unwrap();
        let cfg = LinkConfig::default();
        let a = link_walk(&cubic, 2, 3, 7, &cfg, &[]);
        let b = link_walk(&cubic, 2, 3, 7, &cfg, &[]);
        let keys = |w: &WalkResult| w.nodes.iter().map(|n| n.key).collect::<Vec<_>>();
        assert_eq!(keys(&a), keys(&b));
        assert!(a.contains_ci());
    }

    #[test]
    fn integral_of_a_principal_ideal_is_the_unit_ideal() {
        let r = ring(&["x", "y"]);
        let i = parse_ideal("x", &r).unwrap();
        let res = integral_truncated(&i, 1, 2, 3, &LinkConfig::default(), &[]);
        assert!(res.licci_detected);
        assert!(res.ideal.is_unit());
    }

    #[test]
    fn licci_search_on_small_inputs() {
        let r = ring(&["x", "y", "z", "w"]);
        let ci = parse_ideal("x^2, y^3", &r).unwrap();
        assert_eq!(licci_search(&ci, 2, 4, 0, &LinkConfig::default()).chain.unwrap().len(), 0);
        let cubic = parse_ideal("x*z - y^2, x*w - y*z, y*w - z^2", &r).unwrap();
        let found = licci_search(&cubic, 2, 4, 0, &LinkConfig::default()).chain.unwrap();
        assert_eq!(found.len(), 1);
        assert!(found.last().is_complete_intersection());
    }

    #[test]
    fn maximality_verdicts() {
        let r = ring(&["x", "y", "z", "w"]);
        let cfg = LinkConfig::default();
        let cubic = parse_ideal("x*z - y^2, x*w - y*z, y*w - z^2", &r).unwrap();
        let rep = is_maximal_in_class_truncated(&cubic, 1, 3, 0, &cfg).unwrap();
        assert!(matches!(rep.verdict, MaximalityVerdict::Refuted { .. }));
        let m = Ideal::maximal(r.clone());
        assert!(is_maximal_in_class_truncated(&m, 1, 1, 0, &cfg).is_err());

        let r3 = ring(&["x", "y", "z"]);
        let sq = Ideal::maximal_power(r3, 2);
        let rep = is_maximal_in_class_truncated(&sq, 1, 3, 0, &cfg).unwrap();
        assert!(matches!(rep.verdict, MaximalityVerdict::Proven(_)));
    }

    #[test]
    fn generic_link_of_a_variable() {
        let r = ring(&["x"]);
        let i = parse_ideal("x", &r).unwrap();
        let gl = generic_link_literal(&i, DEFAULT_VARIABLE_CAP).unwrap();
        let big = gl.ideal.ring().clone();
        assert_eq!(big.variables(), &["x".to_string(), "X1_1".to_string()]);
        assert!(gl.ideal.equals(&Ideal::variables(big, &[1])));
    }

    #[test]
    fn generic_link_guard_and_specialization() {
        let r = ring(&["x", "y", "z", "w"]);
        let ex = parse_ideal("x^2, x*y, y^2, z^2, z*w, w^2", &r).unwrap();
        assert!(matches!(
            generic_link_literal(&ex, DEFAULT_VARIABLE_CAP),
            Err(Error::VariableCap { needed: 28, .. })
        ));

        let cubic = parse_ideal("x*z - y^2, x*w - y*z, y*w - z^2", &r).unwrap();
        let gl = generic_link_literal(&cubic, DEFAULT_VARIABLE_CAP).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let p = r.characteristic();
        let values: Vec<Vec<u32>> = (0..2).map(|_| (0..3).map(|_| rng.gen_range(0..p)).collect()).collect();
        let (special, alpha) = gl.specialize(&values);
        let alpha = RegularSequence::new(&cubic, alpha).unwrap();
        let direct = direct_link(&cubic, &alpha, true).unwrap();
        assert!(special.equals(&direct));
    }
}
