//! Human-readable and JSON renderings of results.
//!
//! JSON objects use sorted keys, ideals are written as their minimal
//! generators made monic and sorted, and nothing time-dependent goes into
//! the JSON, so a fixed session and seed give byte-identical documents.
//! Wall-clock time is only shown in the text rendering.

use std::time::Duration;

use serde_json::{json, Value};

use crate::betti::GradedBettiTable;
use crate::bound::{Separation, UpperBoundCertificate};
use crate::ideal::Ideal;
use crate::linkage::{ChainFailure, IntegralResult, LicciSearch, LinkChain, MaximalityReport, MaximalityVerdict, WalkResult};

/// Scope note carried by every liaison report.
pub const HOMOGENEOUS_SCOPE: &str =
    "links are homogeneous; truncated sums are lower bounds for homogeneous linkage classes only";

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub seed: Option<u64>,
    /// False when a check or verdict failed.
    pub ok: bool,
    pub lines: Vec<String>,
    pub result: Value,
    pub elapsed: Option<Duration>,
}

impl Report {
    pub fn new(command: impl Into<String>, seed: Option<u64>) -> Self {
        Self {
            command: command.into(),
            seed,
            ok: true,
            lines: Vec::new(),
            result: Value::Null,
            elapsed: None,
        }
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn to_json(&self) -> String {
        let doc = json!({
            "command": self.command,
            "seed": self.seed,
            "ok": self.ok,
            "result": self.result,
            "scope": HOMOGENEOUS_SCOPE,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut head = format!("== {}", self.command);
        if let Some(seed) = self.seed {
            head.push_str(&format!(" (seed {seed})"));
        }
        if let Some(t) = self.elapsed {
            head.push_str(&format!(" [{:.2}s]", t.as_secs_f64()));
        }
        out.push_str(&head);
        out.push('\n');
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out.push_str(if self.ok { "status: ok\n" } else { "status: FAILED\n" });
        out
    }
}

pub fn ideal_value(i: &Ideal) -> Value {
    json!(i.generator_strings())
}

pub fn ideal_summary(i: &Ideal) -> Value {
    if i.is_unit() {
        return json!({ "generators": ["1"], "unit": true });
    }
    json!({
        "generators": i.generator_strings(),
        "codimension": i.codimension(),
        "num_generators": i.num_generators(),
        "complete_intersection": i.is_complete_intersection(),
    })
}

pub fn betti_value(t: &GradedBettiTable) -> Value {
    let entries: Vec<Value> = t.entries().iter().map(|(&(i, j), &b)| json!([i, j, b])).collect();
    json!({
        "entries": entries,
        "degree_cap": t.degree_cap(),
        "euler_certified": t.is_certified(),
        "projective_dimension": t.projective_dimension(),
    })
}

pub fn certificate_value(c: &UpperBoundCertificate) -> Value {
    json!({
        "rule": c.rule.to_string(),
        "ideal": ideal_value(&c.ideal),
        "bound": ideal_value(&c.bound),
        "detail": c.detail,
        "premises": c.premises.iter().map(certificate_value).collect::<Vec<_>>(),
    })
}

pub fn chain_value(c: &LinkChain) -> Value {
    let ring = c.start.ring();
    let steps: Vec<Value> = c
        .steps
        .iter()
        .map(|s| {
            json!({
                "alpha": s.alpha.strings(ring),
                "degrees": s.alpha.degrees(),
                "ideal": ideal_value(&s.ideal),
            })
        })
        .collect();
    json!({ "seed": c.seed, "policy": c.policy.to_string(), "steps": steps })
}

pub fn failure_value(f: &ChainFailure) -> Value {
    json!({ "chain": f.chain, "step": f.step, "seed": f.seed, "error": f.error.to_string() })
}

pub fn walk_value(w: &WalkResult) -> Value {
    json!({
        "seed": w.seed,
        "chains": w.chains.iter().map(chain_value).collect::<Vec<_>>(),
        "failures": w.failures.iter().map(failure_value).collect::<Vec<_>>(),
        "nodes": w.nodes.iter().map(|n| json!({
            "ideal": ideal_value(&n.ideal),
            "depth": n.depth,
            "complete_intersection": n.is_ci,
        })).collect::<Vec<_>>(),
        "edges_checked": w.edges_checked,
    })
}

pub fn integral_value(r: &IntegralResult) -> Value {
    json!({
        "ideal": ideal_value(&r.ideal),
        "depth": r.depth,
        "trials": r.trials,
        "stabilized": r.stabilized,
        "licci_detected": r.licci_detected,
        "per_depth": r.per_depth.iter().map(ideal_value).collect::<Vec<_>>(),
        "walk": walk_value(&r.walk),
    })
}

pub fn licci_value(s: &LicciSearch) -> Value {
    json!({
        "found": s.chain.is_some(),
        "chain": s.chain.as_ref().map(chain_value),
        "explored": s.explored,
        "failures": s.failures.iter().map(failure_value).collect::<Vec<_>>(),
        "note": "no chain within budget does not prove the ideal is not licci",
    })
}

pub fn maximality_value(r: &MaximalityReport) -> Value {
    let ring = r.walk.start.ring();
    let verdict = match &r.verdict {
        MaximalityVerdict::Proven(_) => json!({ "verdict": "proven" }),
        MaximalityVerdict::Refuted { node, witness } => json!({
            "verdict": "refuted",
            "node": ideal_value(node),
            "witness": witness.monic(ring).to_string(ring),
        }),
        MaximalityVerdict::Consistent => json!({ "verdict": "consistent" }),
    };
    json!({
        "verdict": verdict,
        "certificate": r.certificate.as_ref().map(certificate_value),
        "refutations": r.refutations.len(),
        "walk": walk_value(&r.walk),
    })
}

pub fn separation_value(s: &Separation, k1: &Ideal) -> Value {
    let ring = k1.ring();
    match s {
        Separation::Separated {
            certificate,
            witness,
            bounded,
        } => json!({
            "verdict": "separated",
            "witness": witness.monic(ring).to_string(ring),
            "bounded": bounded,
            "certificate": certificate_value(certificate),
        }),
        Separation::Inconclusive => json!({ "verdict": "inconclusive" }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;
    use crate::ring::Ring;

    #[test]
    fn generator_strings_round_trip() {
        let r = Ring::grevlex(&["x", "y", "z", "w"]).unwrap();
        let i = parse_ideal("3*x*z - 3*y^2, y*w - z^2, -x*w + y*z", &r).unwrap();
        let strings: Vec<String> = serde_json::from_value(ideal_value(&i)).unwrap();
        let back = parse_ideal(&strings.join(", "), &r).unwrap();
        assert!(back.equals(&i));
    }

    #[test]
    fn json_keys_are_sorted() {
        let mut rep = Report::new("dim", Some(3));
        rep.result = json!({ "zeta": 1, "alpha": 2 });
        let text = rep.to_json();
        assert!(text.find("\"alpha\"").unwrap() < text.find("\"zeta\"").unwrap());
        assert!(text.find("\"command\"").unwrap() < text.find("\"seed\"").unwrap());
    }
}
