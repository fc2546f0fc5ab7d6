//! Named verification suites: fixed inputs and seeds, one check per
//! statement, results collected into a [`Report`].

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::betti::{graded_betti, is_cohen_macaulay, DEFAULT_BETTI_CAP};
use crate::bound::{certified_upper_bound, separate_classes, BoundRule, Separation};
use crate::constructions::{apply_substitution, join, Substitution};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linkage::{
    derive_seed, direct_link, integral_truncated, is_maximal_in_class_truncated, licci_search, link_walk,
    sample_ci_in_ideal, LinkConfig, MaximalityVerdict, RegularSequence, WalkResult,
};
use crate::oracle::{colon_agrees, corpus, corpus_pairs, intersection_agrees};
use crate::parse::{parse_ideal, parse_polynomial};
use crate::report::{certificate_value, ideal_value, Report};
use crate::ring::Ring;

pub const SUITES: &[&str] = &[
    "example-integral-m2",
    "shift-bound",
    "symbolic-power-maximal",
    "hypersurface-formula",
    "join-maximality",
    "class-separation",
    "licci-codim2",
    "kernel-oracles",
    "equivariance",
];

pub const EXAMPLE_IDEAL: &str = "x^2, x*y, y^2, z^2, z*w, w^2";
pub const SQUARE_OF_XYZ: &str = "x^2, x*y, x*z, y^2, y*z, z^2";
pub const TWISTED_CUBIC: &str = "x*z - y^2, x*w - y*z, y*w - z^2";

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Default)]
struct Checks {
    list: Vec<Check>,
    data: serde_json::Map<String, Value>,
}

impl Checks {
    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.list.push(Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    fn data(&mut self, key: &str, value: Value) {
        self.data.insert(key.to_string(), value);
    }
}

fn grevlex(vars: &[&str]) -> Arc<Ring> {
    Ring::grevlex(vars).expect("suite ring")
}

fn ideal(r: &Arc<Ring>, text: &str) -> Ideal {
    parse_ideal(text, r).expect("suite ideal")
}

fn nodes_outside(walk: &WalkResult, target: &Ideal) -> usize {
    walk.nodes.iter().filter(|n| !n.ideal.is_subideal(target)).count()
}

/// Run a named suite with the given master seed. `all` runs every suite.
pub fn run_verification_suite(name: &str, seed: u64) -> Result<Report> {
    if name == "all" {
        let mut report = Report::new("verify all", Some(seed));
        let mut results = serde_json::Map::new();
        for suite in SUITES {
            let sub = run_verification_suite(suite, seed)?;
            report.ok &= sub.ok;
            report.lines.extend(sub.lines);
            results.insert(suite.to_string(), sub.result);
        }
        report.result = Value::Object(results);
        return Ok(report);
    }
    let mut c = Checks::default();
    match name {
        "example-integral-m2" => example_integral(&mut c, seed)?,
        "shift-bound" => shift_bound(&mut c)?,
        "symbolic-power-maximal" => symbolic_power(&mut c, seed)?,
        "hypersurface-formula" => hypersurface(&mut c, seed)?,
        "join-maximality" => join_maximality(&mut c, seed)?,
        "class-separation" => class_separation(&mut c)?,
        "licci-codim2" => licci_codim2(&mut c, seed),
        "kernel-oracles" => kernel_oracles(&mut c)?,
        "equivariance" => equivariance(&mut c, seed)?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    }
    let mut report = Report::new(format!("verify {name}"), Some(seed));
    report.ok = c.list.iter().all(|k| k.passed);
    for k in &c.list {
        let mark = if k.passed { "pass" } else { "FAIL" };
        report.line(format!("[{mark}] {name}/{}: {}", k.name, k.detail));
    }
    let checks: Vec<Value> = c
        .list
        .iter()
        .map(|k| json!({ "name": k.name, "passed": k.passed, "detail": k.detail }))
        .collect();
    c.data.insert("checks".into(), Value::Array(checks));
    report.result = Value::Object(c.data);
    Ok(report)
}

fn example_integral(c: &mut Checks, seed: u64) -> Result<()> {
    let r = grevlex(&["x", "y", "z", "w"]);
    let i = ideal(&r, EXAMPLE_IDEAL);
    let m2 = Ideal::maximal_power(r.clone(), 2);
    let alpha = ["x^2", "y^2", "z^2", "w^2"]
        .iter()
        .map(|t| parse_polynomial(t, &r))
        .collect::<Result<Vec<_>>>()?;
    let forced = [RegularSequence::new(&i, alpha)?];
    let cfg = LinkConfig::default();
    let one = integral_truncated(&i, 1, 5, seed, &cfg, &forced);
    c.check(
        "depth-1",
        one.ideal.equals(&m2) && one.ideal.num_generators() == 10,
        format!("depth 1 with the draw (x^2,y^2,z^2,w^2): {}", one.ideal),
    );
    let two = integral_truncated(&i, 2, 25, seed, &cfg, &[]);
    c.check(
        "depth-2",
        two.ideal.equals(&m2) && two.stabilized,
        format!("depth 2, 25 trials: {} (stabilized: {})", two.ideal, two.stabilized),
    );
    c.data("depth_1", ideal_value(&one.ideal));
    c.data("depth_2", ideal_value(&two.ideal));
    Ok(())
}

fn shift_bound(c: &mut Checks) -> Result<()> {
    let r = grevlex(&["x", "y", "z", "w"]);
    let i = ideal(&r, EXAMPLE_IDEAL);
    let t = graded_betti(&i, DEFAULT_BETTI_CAP)?;
    c.check(
        "resolution",
        t.is_certified() && t.projective_dimension() == 4 && t.get(1, 2) == 6 && t.total(1) == 6 && t.get(4, 6) == 4 && t.total(4) == 4,
        format!("pd {}, beta_1,2 = {}, beta_4,6 = {}", t.projective_dimension(), t.get(1, 2), t.get(4, 6)),
    );
    match certified_upper_bound(&i)? {
        Some(cert) => {
            c.check(
                "bound",
                cert.rule == BoundRule::ShiftBound && cert.bound.equals(&Ideal::maximal_power(r, 2)),
                format!("{} via {}", cert.bound, cert.rule),
            );
            c.data("certificate", certificate_value(&cert));
        }
        None => c.check("bound", false, "no rule fired"),
    }
    Ok(())
}

fn symbolic_power(c: &mut Checks, seed: u64) -> Result<()> {
    let r = grevlex(&["x", "y", "z"]);
    let i = ideal(&r, SQUARE_OF_XYZ);
    let rep = is_maximal_in_class_truncated(&i, 3, 50, seed, &LinkConfig::default())?;
    let proven = matches!(&rep.verdict, MaximalityVerdict::Proven(cert) if cert.bound.equals(&i));
    c.check(
        "maximal",
        proven && rep.refutations.is_empty(),
        format!("verdict {}, {} refutations", verdict_name(&rep.verdict), rep.refutations.len()),
    );
    Ok(())
}

fn verdict_name(v: &MaximalityVerdict) -> &'static str {
    match v {
        MaximalityVerdict::Proven(_) => "proven",
        MaximalityVerdict::Refuted { .. } => "refuted",
        MaximalityVerdict::Consistent => "consistent",
    }
}

fn hypersurface(c: &mut Checks, seed: u64) -> Result<()> {
    let r = grevlex(&["x", "y", "z", "w"]);
    let i = ideal(&r, &format!("{SQUARE_OF_XYZ}, w"));
    let walk = link_walk(&i, 2, 30, seed, &LinkConfig::default(), &[]);
    let outside = nodes_outside(&walk, &i);
    c.check(
        "walk",
        outside == 0,
        format!("{} nodes, {outside} outside the ideal", walk.nodes.len()),
    );
    match certified_upper_bound(&i)? {
        Some(cert) => {
            c.check(
                "bound",
                cert.rule == BoundRule::Hypersurface && cert.bound.equals(&i),
                format!("{} via {}", cert.bound, cert.rule),
            );
            c.data("certificate", certificate_value(&cert));
        }
        None => c.check("bound", false, "no rule fired"),
    }
    Ok(())
}

fn join_maximality(c: &mut Checks, seed: u64) -> Result<()> {
    let a = ideal(&grevlex(&["x", "y", "z"]), SQUARE_OF_XYZ);
    let b = ideal(&grevlex(&["u", "v", "w"]), "u*v, u*w, v*w");
    let k = join(&a, &b)?;
    c.check(
        "join",
        k.codimension() == 5 && k.num_generators() == 9 && is_cohen_macaulay(&k)?,
        format!("{k}: codim {}, {} generators", k.codimension(), k.num_generators()),
    );
    let walk = link_walk(&k, 2, 20, seed, &LinkConfig::default(), &[]);
    let outside = nodes_outside(&walk, &k);
    c.check(
        "walk",
        outside == 0,
        format!("{} nodes, {outside} outside the join", walk.nodes.len()),
    );
    if let Some(cert) = certified_upper_bound(&k)? {
        c.check(
            "bound",
            cert.bound.equals(&k),
            format!("{} via {}", cert.bound, cert.rule),
        );
        c.data("certificate", certificate_value(&cert));
    }
    Ok(())
}

fn class_separation(c: &mut Checks) -> Result<()> {
    let r = grevlex(&["x", "y", "z", "u", "v"]);
    let k1 = ideal(&r, &format!("{SQUARE_OF_XYZ}, u"));
    let k2 = ideal(&r, &format!("{SQUARE_OF_XYZ}, v"));
    let s = separate_classes(&k1, &k2)?;
    let detail = match &s {
        Separation::Separated { witness, certificate, .. } => {
            c.data("certificate", certificate_value(certificate));
            format!("{} is outside {}", witness.to_string(&r), certificate.bound)
        }
        Separation::Inconclusive => "inconclusive".to_string(),
    };
    c.check("generic-sections", s.is_separated(), detail);
    let same = separate_classes(&k1, &k1)?;
    c.check("same-ideal", !same.is_separated(), "an ideal is not separated from itself");
    Ok(())
}

fn licci_codim2(c: &mut Checks, seed: u64) {
    let cubic = ideal(&grevlex(&["x", "y", "z", "w"]), TWISTED_CUBIC);
    let three = ideal(&grevlex(&["u", "v", "w"]), "u*v, u*w, v*w");
    let cfg = LinkConfig::default();
    for (name, i) in [("twisted-cubic", &cubic), ("three-lines", &three)] {
        let hits = (0..100u64)
            .filter(|&k| {
                licci_search(i, 2, 30, derive_seed(seed, k), &cfg)
                    .chain
                    .is_some_and(|ch| ch.last().is_complete_intersection())
            })
            .count();
        c.check(name, hits >= 95, format!("{hits}/100 searches reached a complete intersection"));
    }
}

fn kernel_oracles(c: &mut Checks) -> Result<()> {
    let mut bad = Vec::new();
    let mut count = 0;
    for (i, j) in corpus_pairs() {
        for (a, b) in [(&i, &j), (&j, &i)] {
            if !b.is_zero() {
                count += 1;
                if let Err(e) = colon_agrees(a, b, &a.colon(b)?, 6) {
                    bad.push(format!("{a} : {b}: {e}"));
                }
            }
        }
        count += 1;
        if let Err(e) = intersection_agrees(&i, &j, &i.intersect(&j), 6) {
            bad.push(format!("{i} cap {j}: {e}"));
        }
    }
    c.check("colon-intersection", bad.is_empty(), format!("{count} operations, {} disagreements {bad:?}", bad.len()));
    let mut uncertified = 0;
    for i in corpus().iter().filter(|i| i.is_proper()) {
        if !graded_betti(i, DEFAULT_BETTI_CAP)?.is_certified() {
            uncertified += 1;
        }
    }
    c.check("euler", uncertified == 0, format!("{uncertified} corpus tables uncertified"));
    Ok(())
}

fn equivariance(c: &mut Checks, seed: u64) -> Result<()> {
    let r = grevlex(&["x", "y", "z", "w"]);
    let i = ideal(&r, TWISTED_CUBIC);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alpha = sample_ci_in_ideal(&i, Default::default(), &mut rng, 40, seed)?;
    let j = direct_link(&i, &alpha, true)?;
    let mut agree = 0;
    for k in 0..20u64 {
        let mut g_rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, k));
        let g = Substitution::random_unitriangular(r.clone(), &mut g_rng);
        let gi = apply_substitution(&i, &g)?;
        let galpha = RegularSequence::new(&gi, alpha.elements().iter().map(|f| g.apply_polynomial(f)).collect())?;
        if direct_link(&gi, &galpha, true)?.equals(&apply_substitution(&j, &g)?) {
            agree += 1;
        }
    }
    c.check("links", agree == 20, format!("{agree}/20 substitutions commute with the link"));
    Ok(())
}
