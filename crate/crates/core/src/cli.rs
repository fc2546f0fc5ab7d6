//! Command-line front end. Every command reads a session file, runs one
//! operation and prints a text report; `--json` also writes the JSON
//! document. Exit codes: 0 success, 1 failed check or verdict, 2 bad input.

use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::betti::{graded_betti, is_cohen_macaulay_with, DEFAULT_BETTI_CAP};
use crate::bound::{certified_upper_bound, separate_classes, Separation};
use crate::constructions::{
    apply_substitution, hypersurface_section, is_transversal, join_in_ring, polarize, symbolic_power_monomial,
    Section, Substitution,
};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linkage::{
    direct_link, integral_truncated, is_maximal_in_class_truncated, licci_search, link_walk, sample_ci_in_ideal,
    DegreePolicy, LinkConfig, MaximalityVerdict, RegularSequence,
};
use crate::parse::{parse_polynomial, parse_session, Session};
use crate::poly::Polynomial;
use crate::report::{
    betti_value, certificate_value, ideal_summary, ideal_value, integral_value, licci_value,
    maximality_value, separation_value, walk_value, Report,
};
use crate::suites::{run_verification_suite, SUITES};

#[derive(Parser, Debug)]
#[command(name = "liaison", version, about = "Complete-intersection liaison experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Session file with one `ring` statement and named ideals.
    #[arg(long, global = true)]
    pub session: Option<PathBuf>,
    /// Ideal name from the session; repeat for binary operations.
    #[arg(long = "ideal", global = true)]
    pub ideals: Vec<String>,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 1)]
    pub depth: usize,
    /// Chains per walk, or beam width for `licci`.
    #[arg(long, global = true, default_value_t = 10)]
    pub width: usize,
    /// Random chains for `integral` and `maximal`.
    #[arg(long, global = true, default_value_t = 10)]
    pub trials: usize,
    /// `minimal` or `uniform:D`.
    #[arg(long = "degree-policy", global = true, default_value = "minimal")]
    pub degree_policy: DegreePolicy,
    /// Degree cap for Betti tables and Hilbert functions.
    #[arg(long, global = true)]
    pub cap: Option<u32>,
    /// Also write the JSON report to this path.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    /// Session ideal whose generators are used as the linking sequence.
    #[arg(long, global = true)]
    pub alpha: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced Gröbner basis.
    Gb,
    /// Graded Betti table and Cohen–Macaulay status.
    Betti,
    /// Dimension and codimension.
    Dim,
    /// Hilbert function up to the cap, and the Hilbert numerator.
    Hf,
    /// One direct link, drawn at random or given by `--alpha`.
    Link,
    /// Random link walk.
    Walk,
    /// Truncated sum of the linkage class.
    Integral,
    /// Search for a link chain ending in a complete intersection.
    Licci,
    /// Maximality of the ideal in its linkage class.
    Maximal,
    /// Certified upper bound for the class sum.
    Bound,
    /// Try to separate the linkage classes of two ideals.
    Separate,
    /// Join of two ideals in disjoint variables of the session ring.
    Join,
    /// Hypersurface section by an element or a fresh variable.
    Hyp {
        /// Section element, e.g. `w`.
        #[arg(long, conflicts_with = "fresh")]
        element: Option<String>,
        /// Adjoin a new variable with this name and cut by it.
        #[arg(long)]
        fresh: Option<String>,
    },
    /// Symbolic power of a squarefree monomial ideal.
    Sympow {
        #[arg(long, default_value_t = 2)]
        power: u32,
    },
    /// Polarization of a monomial ideal.
    Polarize,
    /// Linear substitution; random unitriangular unless `--map` is given.
    Subst {
        /// `var=linear form`, repeatable; unlisted variables are fixed.
        #[arg(long = "map")]
        maps: Vec<String>,
    },
    /// Run a verification suite (`all` runs every suite).
    Verify { suite: String },
}

/// Parse arguments, run, print, and return the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let start = Instant::now();
    match run(&cli) {
        Ok(mut report) => {
            report.elapsed = Some(start.elapsed());
            print!("{}", report.to_text());
            if let Some(path) = &cli.json {
                if let Err(e) = std::fs::write(path, report.to_json()) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 2;
                }
            }
            if report.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidLink { .. } | Error::RetryLimit { .. } | Error::Uncertified { .. } | Error::Zerodivisor { .. } => 1,
        _ => 2,
    }
}

fn load_session(cli: &Cli) -> Result<Session> {
    let path = cli
        .session
        .as_ref()
        .ok_or_else(|| Error::Invalid("--session is required for this command".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    parse_session(&text)
}

fn nth_ideal<'a>(cli: &Cli, session: &'a Session, k: usize) -> Result<&'a Ideal> {
    let name = cli.ideals.get(k).ok_or_else(|| {
        Error::Invalid(format!("this command needs {} --ideal argument(s)", k + 1))
    })?;
    session.ideal(name)
}

fn config(cli: &Cli) -> LinkConfig {
    LinkConfig {
        policy: cli.degree_policy,
        ..LinkConfig::default()
    }
}

fn alpha_from(cli: &Cli, session: &Session, target: &Ideal) -> Result<Option<RegularSequence>> {
    let Some(name) = &cli.alpha else { return Ok(None) };
    let gens = session.ideal(name)?.generators().to_vec();
    Ok(Some(RegularSequence::new(target, gens)?.with_seed(cli.seed)))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Gb => "gb",
        Command::Betti => "betti",
        Command::Dim => "dim",
        Command::Hf => "hf",
        Command::Link => "link",
        Command::Walk => "walk",
        Command::Integral => "integral",
        Command::Licci => "licci",
        Command::Maximal => "maximal",
        Command::Bound => "bound",
        Command::Separate => "separate",
        Command::Join => "join",
        Command::Hyp { .. } => "hyp",
        Command::Sympow { .. } => "sympow",
        Command::Polarize => "polarize",
        Command::Subst { .. } => "subst",
        Command::Verify { .. } => "verify",
    }
}

fn uses_seed(c: &Command) -> bool {
    matches!(
        c,
        Command::Link
            | Command::Walk
            | Command::Integral
            | Command::Licci
            | Command::Maximal
            | Command::Subst { .. }
            | Command::Verify { .. }
    )
}

pub fn run(cli: &Cli) -> Result<Report> {
    if let Command::Verify { suite } = &cli.command {
        if suite != "all" && !SUITES.contains(&suite.as_str()) {
            return Err(Error::UnknownSuite(format!("{suite} (known: all, {})", SUITES.join(", "))));
        }
        return run_verification_suite(suite, cli.seed);
    }
    let session = load_session(cli)?;
    let i = nth_ideal(cli, &session, 0)?;
    let ring = i.ring().clone();
    let name = command_name(&cli.command);
    let echo = format!("{name} {}", cli.ideals.join(" "));
    let mut rep = Report::new(echo.trim_end(), uses_seed(&cli.command).then_some(cli.seed));
    let cap = cli.cap.unwrap_or(DEFAULT_BETTI_CAP);
    let cfg = config(cli);
    match &cli.command {
        Command::Gb => {
            let gb: Vec<String> = i.gb().elements().iter().map(|g| g.to_string(&ring)).collect();
            rep.line(format!("ring: {ring}"));
            rep.line(format!("gb ({} elements):", gb.len()));
            for g in &gb {
                rep.line(format!("  {g}"));
            }
            rep.result = json!({ "gb": gb, "order": ring.order().to_string() });
        }
        Command::Betti => {
            let t = graded_betti(i, cap)?;
            rep.line(t.to_string());
            rep.line(format!("euler certified: {}", t.is_certified()));
            let mut out = json!({ "table": betti_value(&t) });
            if t.is_certified() {
                let cm = is_cohen_macaulay_with(i, &t)?;
                rep.line(format!("projective dimension {}, codimension {}, CM: {cm}", t.projective_dimension(), i.codimension()));
                out["cohen_macaulay"] = json!(cm);
            } else {
                rep.ok = false;
                rep.line("table not certified; raise --cap");
            }
            rep.result = out;
        }
        Command::Dim => {
            rep.line(format!("dimension {}, codimension {}", i.dimension(), i.codimension()));
            rep.line(format!("minimal generators {}, complete intersection: {}", i.num_generators(), i.is_complete_intersection()));
            rep.result = json!({
                "dimension": i.dimension(),
                "codimension": i.codimension(),
                "num_generators": i.num_generators(),
                "complete_intersection": i.is_complete_intersection(),
            });
        }
        Command::Hf => {
            let up_to = cli.cap.unwrap_or(10);
            let hf: Vec<u64> = (0..=up_to).map(|d| i.hilbert_function(d)).collect();
            let num = i.hilbert_numerator();
            rep.line(format!("HF(0..={up_to}) = {hf:?}"));
            rep.line(format!("numerator = {num:?}"));
            rep.result = json!({ "hilbert_function": hf, "numerator": num });
        }
        Command::Link => {
            let alpha = match alpha_from(cli, &session, i)? {
                Some(a) => a,
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                    sample_ci_in_ideal(i, cli.degree_policy, &mut rng, cfg.max_attempts, cli.seed)?
                }
            };
            let j = direct_link(i, &alpha, cfg.check_cm)?;
            rep.line(format!("alpha = ({})", alpha.strings(&ring).join(", ")));
            rep.line(format!("link  = {j}"));
            rep.line("checked: proper, same codimension, double link returns the input, Cohen-Macaulay");
            rep.result = json!({
                "alpha": alpha.strings(&ring),
                "degrees": alpha.degrees(),
                "link": ideal_summary(&j),
            });
        }
        Command::Walk => {
            let forced: Vec<RegularSequence> = alpha_from(cli, &session, i)?.into_iter().collect();
            let w = link_walk(i, cli.depth, cli.width, cli.seed, &cfg, &forced);
            rep.line(format!(
                "{} chains, {} distinct ideals, {} failed chains, {} links checked",
                w.chains.len(),
                w.nodes.len(),
                w.failures.len(),
                w.edges_checked
            ));
            for (k, c) in w.chains.iter().enumerate() {
                let degs: Vec<String> = c.steps.iter().map(|s| format!("{:?}", s.alpha.degrees())).collect();
                rep.line(format!("  chain {k} seed {}: alpha degrees {}", c.seed, degs.join(" ")));
            }
            for n in &w.nodes {
                rep.line(format!("  depth {} {}{}", n.depth, n.ideal, if n.is_ci { " [CI]" } else { "" }));
            }
            for f in &w.failures {
                rep.line(format!("  failure chain {} step {} seed {}: {}", f.chain, f.step, f.seed, f.error));
            }
            rep.result = walk_value(&w);
        }
        Command::Integral => {
            let forced: Vec<RegularSequence> = alpha_from(cli, &session, i)?.into_iter().collect();
            let r = integral_truncated(i, cli.depth, cli.trials, cli.seed, &cfg, &forced);
            rep.line(format!("depth {}, trials {}", r.depth, r.trials));
            for (d, s) in r.per_depth.iter().enumerate() {
                rep.line(format!("  sum to depth {d}: {s}"));
            }
            rep.line(format!("result: {}", r.ideal));
            rep.line(format!("stabilized: {}, licci detected: {}", r.stabilized, r.licci_detected));
            if !r.walk.failures.is_empty() {
                rep.line(format!("{} chains stopped early", r.walk.failures.len()));
            }
            rep.result = integral_value(&r);
        }
        Command::Licci => {
            let s = licci_search(i, cli.depth, cli.width, cli.seed, &cfg);
            match &s.chain {
                Some(c) => {
                    rep.line(format!("complete intersection reached in {} links", c.len()));
                    for step in &c.steps {
                        rep.line(format!("  via ({}) -> {}", step.alpha.strings(&ring).join(", "), step.ideal));
                    }
                }
                None => rep.line(format!(
                    "no complete intersection within depth {} and beam {} (not a proof of non-licci)",
                    cli.depth, cli.width
                )),
            };
            rep.line(format!("{} links explored", s.explored));
            rep.result = licci_value(&s);
        }
        Command::Maximal => {
            let r = is_maximal_in_class_truncated(i, cli.depth, cli.trials, cli.seed, &cfg)?;
            match &r.verdict {
                MaximalityVerdict::Proven(c) => rep.line(format!("proven: certified bound equals the ideal\n{c}")),
                MaximalityVerdict::Refuted { node, witness } => rep.line(format!(
                    "refuted: linked ideal {node} contains {}",
                    witness.monic(&ring).to_string(&ring)
                )),
                MaximalityVerdict::Consistent => rep.line("consistent: no linked ideal escapes, no certificate"),
            };
            rep.line(format!("{} walk nodes, {} refutations", r.walk.nodes.len(), r.refutations.len()));
            rep.result = maximality_value(&r);
        }
        Command::Bound => match certified_upper_bound(i)? {
            Some(c) => {
                rep.line(c.to_string().trim_end().to_string());
                rep.result = json!({ "certificate": certificate_value(&c) });
            }
            None => {
                rep.line("no rule applies");
                rep.result = json!({ "certificate": null });
            }
        },
        Command::Separate => {
            let j = nth_ideal(cli, &session, 1)?;
            let s = separate_classes(i, j)?;
            match &s {
                Separation::Separated { certificate, witness, bounded } => {
                    rep.line(format!(
                        "separated: {} lies outside the bound for the {} ideal",
                        witness.monic(&ring).to_string(&ring),
                        if *bounded == 0 { "first" } else { "second" }
                    ));
                    rep.line(certificate.to_string().trim_end().to_string());
                }
                Separation::Inconclusive => rep.line("inconclusive"),
            }
            rep.result = separation_value(&s, i);
        }
        Command::Join => {
            let j = nth_ideal(cli, &session, 1)?;
            let k = join_in_ring(i, j)?;
            let transversal = is_transversal(i, j);
            let cm = crate::betti::is_cohen_macaulay(&k)?;
            rep.line(format!("join: {k}"));
            rep.line(format!(
                "codim {} = {} + {}, transversal: {transversal}, CM: {cm}",
                k.codimension(),
                i.codimension(),
                j.codimension()
            ));
            rep.result = json!({ "join": ideal_summary(&k), "transversal": transversal, "cohen_macaulay": cm });
        }
        Command::Hyp { element, fresh } => {
            let section = match (element, fresh) {
                (Some(e), _) => Section::Element(parse_polynomial(e, &ring)?),
                (None, Some(name)) => Section::FreshVariable(name.clone()),
                (None, None) => return Err(Error::Invalid("hyp needs --element or --fresh".into())),
            };
            let s = hypersurface_section(i, &section)?;
            rep.line(format!("section: {s} in {}", s.ring()));
            rep.line(format!("codim {} -> {}", i.codimension(), s.codimension()));
            let bound = certified_upper_bound(&s)?;
            if let Some(c) = &bound {
                rep.line(c.to_string().trim_end().to_string());
            }
            rep.result = json!({
                "section": ideal_summary(&s),
                "variables": s.ring().variables(),
                "certificate": bound.as_ref().map(certificate_value),
            });
        }
        Command::Sympow { power } => {
            let s = symbolic_power_monomial(i, *power)?;
            let ordinary = i.power(*power);
            rep.line(format!("symbolic power {power}: {s}"));
            rep.line(format!("equals the ordinary power: {}", s.equals(&ordinary)));
            rep.result = json!({ "symbolic_power": ideal_value(&s), "equals_ordinary_power": s.equals(&ordinary) });
        }
        Command::Polarize => {
            let p = polarize(i)?;
            let pr = p.ideal.ring();
            let forms: Vec<String> = p.forms.iter().map(|f| f.to_string(pr)).collect();
            let back = p.specialize().equals(i);
            rep.line(format!("polarization: {} in {pr}", p.ideal));
            rep.line(format!("forms: {}", forms.join(", ")));
            rep.line(format!("specializes back to the input: {back}"));
            rep.ok = back;
            rep.result = json!({
                "polarization": ideal_value(&p.ideal),
                "variables": pr.variables(),
                "forms": forms,
                "specializes_back": back,
            });
        }
        Command::Subst { maps } => {
            let g = if maps.is_empty() {
                Substitution::random_unitriangular(ring.clone(), &mut ChaCha8Rng::seed_from_u64(cli.seed))
            } else {
                substitution_from_maps(&ring, maps)?
            };
            let gi = apply_substitution(i, &g)?;
            let same_betti = graded_betti(i, cap)? == graded_betti(&gi, cap)?;
            rep.line(format!("g: {}", g.describe().join(", ")));
            rep.line(format!("gI = {gi}"));
            rep.line(format!("Betti table preserved: {same_betti}"));
            rep.ok = same_betti;
            rep.result = json!({ "substitution": g.describe(), "image": ideal_value(&gi), "betti_preserved": same_betti });
        }
        Command::Verify { .. } => unreachable!(),
    }
    Ok(rep)
}

fn substitution_from_maps(ring: &Arc<crate::ring::Ring>, maps: &[String]) -> Result<Substitution> {
    let mut images: Vec<Polynomial> = (0..ring.nvars()).map(|k| Polynomial::var(k, ring)).collect();
    for m in maps {
        let (var, form) = m
            .split_once('=')
            .ok_or_else(|| Error::Invalid(format!("--map expects var=form, got `{m}`")))?;
        let k = ring
            .var_index(var.trim())
            .ok_or_else(|| Error::UnknownVariable(var.trim().to_string()))?;
        images[k] = parse_polynomial(form, ring)?;
    }
    Substitution::new(ring.clone(), images)
}
