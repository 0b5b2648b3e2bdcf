//! Driver behind the `lattice-ramsey` binary.
//!
//! Every command writes one JSON document (DOT text for `export-dot`) and
//! finishes with an exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, or the arrow holds |
//! | 1 | a lemma-suite violation or a corpus mismatch |
//! | 2 | invalid input |
//! | 3 | the arrow fails; a certificate is printed |
//! | 4 | a size bound or the time limit was hit |

pub mod corpus;
pub mod dot;
pub mod input;

use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use lattice_ramsey::bits::to_bitstring;
use lattice_ramsey::duality::{j_object, DualityWitness};
use lattice_ramsey::json::{CongruenceJson, LatticeJson, MapJson, NaturalOrderJson, PosetJson};
use lattice_ramsey::lattice::{
    enumerate_congruences_bounded, enumerate_surjective_homomorphisms, validate_homomorphism, DEFAULT_CONGRUENCE_BOUND,
};
use lattice_ramsey::lemmas::run_lemma_suite;
use lattice_ramsey::ordered::{
    collapsed_set_congruence, collapsed_set_hom, enumerate_natural_orders, enumerate_positive_surjections,
    is_natural_order, is_positive_congruence, is_positive_homomorphism, Positivity,
};
use lattice_ramsey::poset::{down_sets, enumerate_posets_up_to_iso, linear_extensions};
use lattice_ramsey::ramsey::{
    arrow_holds_hom, dual_arrow_congruence_form, find_ramsey_witness, transport_witness, verify_certificate,
    DEFAULT_COLORING_BOUND,
};
use lattice_ramsey::{
    AnyPoset, ArrowCertificate, DistLattice, Error, Flags, Flavor, Object, OrderedLattice, SearchConfig, Verdict,
};

use input::{DocKind, Structure};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_ARROW_FAILS: i32 = 3;
pub const EXIT_LIMIT: i32 = 4;

/// Overrides the default of every `--bound` option.
pub const BOUND_ENV: &str = "LATTICE_RAMSEY_BOUND";

#[derive(Parser, Debug)]
#[command(
    name = "lattice-ramsey",
    version,
    about = "Finite posets, distributive lattices, natural orders and Ramsey arrows",
    after_help = "EXIT CODES:\n  0 success / arrow holds\n  1 lemma violation / corpus mismatch\n  2 invalid input\n  3 arrow fails\n  4 bound or timeout"
)]
pub struct Cli {
    /// Admit the empty poset.
    #[arg(long, global = true)]
    pub allow_empty: bool,
    /// Admit the one-element lattice.
    #[arg(long, global = true)]
    pub allow_trivial: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a poset, lattice or table document and summarize it
    Validate {
        path: PathBuf,
        #[arg(long, value_enum)]
        kind: Option<DocKind>,
    },
    /// Poset to lattice of down-sets, or lattice to poset of join-irreducibles
    Dualize {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Direction::Auto)]
        direction: Direction,
        /// Also print the natural isomorphisms eta and epsilon
        #[arg(long)]
        witness: bool,
    },
    /// List structures derived from a document
    Enumerate {
        #[arg(value_enum)]
        what: Enumerable,
        path: PathBuf,
        /// Target lattice for surjections
        #[arg(long)]
        target: Option<PathBuf>,
        #[arg(long)]
        bound: Option<usize>,
    },
    #[command(subcommand)]
    Check(CheckCommand),
    /// Hasse diagram of a poset or lattice as DOT
    ExportDot { path: PathBuf },
    #[command(subcommand)]
    Ramsey(RamseyCommand),
    /// Run a golden corpus and compare outputs byte for byte
    Corpus {
        manifest: PathBuf,
        /// Rewrite the expected outputs instead of comparing
        #[arg(long)]
        update: bool,
        /// Worker threads for every ramsey case
        #[arg(long)]
        workers: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Auto,
    ToLattice,
    ToPoset,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Enumerable {
    Downsets,
    Congruences,
    Surjections,
    PositiveSurjections,
    NaturalOrders,
    LinearExtensions,
}

#[derive(Subcommand, Debug)]
pub enum CheckCommand {
    /// Positivity of a homomorphism between naturally ordered lattices
    PositiveHom {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Positivity of a congruence of a naturally ordered lattice
    PositiveCongruence {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long)]
        congruence: PathBuf,
    },
    /// Whether a linear order of the elements is natural
    NaturalOrder {
        #[arg(long)]
        lattice: PathBuf,
        /// Elements from least to greatest, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        sequence: Vec<usize>,
    },
    /// Exhaustive lemma battery over all posets up to a size, or over a directory of posets
    LemmaSuite {
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct SearchArgs {
    /// Number of colors
    #[arg(short, default_value_t = 2)]
    pub k: usize,
    /// Maximum number of colored morphisms
    #[arg(long)]
    pub bound: Option<usize>,
    #[arg(long)]
    pub timeout_secs: Option<u64>,
    /// Worker threads; never changes the output
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
    pub workers: u64,
}

#[derive(Subcommand, Debug)]
pub enum RamseyCommand {
    /// Decide C -> (B)^A_k in one category
    Check {
        #[arg(long)]
        flavor: Flavor,
        #[arg(long = "C", visible_alias = "c")]
        c: PathBuf,
        #[arg(long = "B", visible_alias = "b")]
        b: PathBuf,
        #[arg(long = "A", visible_alias = "a")]
        a: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Smallest linearly ordered C with C -> (B)^A_k
    Search {
        #[arg(long = "B", visible_alias = "b")]
        b: PathBuf,
        #[arg(long = "A", visible_alias = "a")]
        a: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Carry an arrow of linearly ordered posets to naturally ordered lattices
    Transport {
        #[arg(long = "A", visible_alias = "a")]
        a: PathBuf,
        #[arg(long = "B", visible_alias = "b")]
        b: PathBuf,
        #[arg(long = "C", visible_alias = "c")]
        c: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// The lattice arrow N -> (L)^{L/Phi}_k phrased with positive congruences
    CongruenceForm {
        #[arg(long = "N", visible_alias = "n")]
        n: PathBuf,
        #[arg(long = "L", visible_alias = "l")]
        l: PathBuf,
        #[arg(long)]
        congruence: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
}

/// Exit code and everything written to stdout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

impl Outcome {
    pub fn json(code: i32, value: &impl Serialize) -> Outcome {
        let mut stdout = serde_json::to_string_pretty(value).expect("output is serializable");
        stdout.push('\n');
        Outcome { code, stdout }
    }

    pub fn text(code: i32, stdout: String) -> Outcome {
        Outcome { code, stdout }
    }
}

/// Exit code and error kind for a failure.
pub fn classify(err: &anyhow::Error) -> (i32, &'static str) {
    if let Some(e) = err.downcast_ref::<Error>() {
        return (if e.is_limit() { EXIT_LIMIT } else { EXIT_INVALID }, e.kind());
    }
    if err.downcast_ref::<serde_json::Error>().is_some() {
        return (EXIT_INVALID, "ParseError");
    }
    if err.downcast_ref::<std::io::Error>().is_some() {
        return (EXIT_INVALID, "Io");
    }
    (EXIT_INVALID, "Invalid")
}

fn error_json(err: &anyhow::Error) -> (i32, Value) {
    let (code, kind) = classify(err);
    (code, json!({ "kind": kind, "message": format!("{err:#}") }))
}

pub fn error_outcome(err: &anyhow::Error) -> Outcome {
    let (code, e) = error_json(err);
    Outcome::json(code, &json!({ "error": e }))
}

/// Runs one parsed command line.
pub fn run(cli: Cli) -> Outcome {
    let flags = Flags { allow_empty_poset: cli.allow_empty, allow_trivial_lattice: cli.allow_trivial };
    let result = match cli.command {
        Command::Validate { path, kind } => Ok(validate(&path, kind, flags)),
        Command::Dualize { path, direction, witness } => dualize(&path, direction, witness, flags),
        Command::Enumerate { what, path, target, bound } => enumerate(what, &path, target.as_deref(), bound, flags),
        Command::Check(c) => check(c, flags),
        Command::ExportDot { path } => export_dot(&path, flags),
        Command::Ramsey(r) => ramsey(r, flags),
        Command::Corpus { manifest, update, workers } => corpus::command(&manifest, update, workers),
    };
    result.unwrap_or_else(|e| error_outcome(&e))
}

/// Parses and runs an argument list (without the program name).
pub fn run_args<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("lattice-ramsey")).chain(args.into_iter().map(Into::into));
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(cli),
        Err(e) => Outcome::text(if e.use_stderr() { EXIT_INVALID } else { EXIT_OK }, e.to_string()),
    }
}

fn env_bound() -> Result<Option<usize>> {
    match std::env::var(BOUND_ENV) {
        Ok(v) => {
            let b = v.trim().parse().map_err(|_| Error::Invalid(format!("{BOUND_ENV} must be a number, got {v:?}")))?;
            Ok(Some(b))
        }
        Err(_) => Ok(None),
    }
}

fn resolve_bound(explicit: Option<usize>, default: usize) -> Result<usize> {
    Ok(match explicit {
        Some(b) => b,
        None => env_bound()?.unwrap_or(default),
    })
}

fn search_config(args: &SearchArgs) -> Result<SearchConfig> {
    Ok(SearchConfig {
        bound: resolve_bound(args.bound, DEFAULT_COLORING_BOUND)?,
        workers: args.workers as usize,
        timeout: args.timeout_secs.map(Duration::from_secs),
    })
}

fn bitstrings(l: &DistLattice) -> Vec<String> {
    l.elements().iter().map(|&m| to_bitstring(m, l.base().len())).collect()
}

fn pairs(v: &[(usize, usize)]) -> Vec<[usize; 2]> {
    v.iter().map(|&(a, b)| [a, b]).collect()
}

fn validate(path: &Path, kind: Option<DocKind>, flags: Flags) -> Outcome {
    let s = match input::load(path, kind, flags) {
        Ok(s) => s,
        Err(e) => {
            let (code, err) = error_json(&e);
            return Outcome::json(code, &json!({ "valid": false, "error": err }));
        }
    };
    let report = match &s {
        Structure::Poset(p) => json!({
            "valid": true,
            "kind": s.kind(),
            "size": p.poset().len(),
            "covers": pairs(&p.poset().covers()),
            "linearly_ordered": p.is_ordered(),
        }),
        Structure::Lattice { lattice, ordered } => json!({
            "valid": true,
            "kind": s.kind(),
            "size": lattice.len(),
            "join_irreducibles": lattice.irreducibles(),
            "naturally_ordered": ordered.is_some(),
        }),
        Structure::Tables { lattice, relabel } => json!({
            "valid": true,
            "kind": s.kind(),
            "size": lattice.len(),
            "join_irreducibles": lattice.irreducibles(),
            "canonical": LatticeJson::from_lattice(lattice),
            "relabel": relabel,
        }),
    };
    Outcome::json(EXIT_OK, &report)
}

fn dualize(path: &Path, direction: Direction, witness: bool, flags: Flags) -> Result<Outcome> {
    let s = input::load(path, None, flags)?;
    let to_lattice = matches!(s, Structure::Poset(_));
    match (direction, to_lattice) {
        (Direction::ToLattice, false) => return Err(Error::Invalid("to-lattice needs a poset document".into()).into()),
        (Direction::ToPoset, true) => return Err(Error::Invalid("to-poset needs a lattice document".into()).into()),
        _ => {}
    }
    let (result, w) = match &s {
        Structure::Poset(p) => {
            let lattice = DistLattice::from_poset_with(p.poset(), flags)?;
            let doc = match p {
                AnyPoset::Ordered(lp) => LatticeJson::from_ordered(&OrderedLattice::new(lattice, &lp.sequence())?),
                AnyPoset::Plain(_) => LatticeJson::from_lattice(&lattice),
            };
            let w = if witness { Some(DualityWitness::for_poset(p.poset())?) } else { None };
            (serde_json::to_value(doc)?, w)
        }
        Structure::Lattice { lattice, ordered } => {
            let doc = match ordered {
                Some(ol) => PosetJson::from_linear(&ol.j_prime()),
                None => PosetJson::from_poset(&j_object(lattice)),
            };
            let w = if witness { Some(DualityWitness::for_lattice(lattice)?) } else { None };
            (serde_json::to_value(doc)?, w)
        }
        Structure::Tables { lattice, .. } => {
            let w = if witness { Some(DualityWitness::for_lattice(lattice)?) } else { None };
            (serde_json::to_value(PosetJson::from_poset(&j_object(lattice)))?, w)
        }
    };
    Ok(match w {
        Some(w) => Outcome::json(EXIT_OK, &json!({ "result": result, "witness": w })),
        None => Outcome::json(EXIT_OK, &result),
    })
}

fn listing<T: Serialize>(items: Vec<T>) -> Outcome {
    Outcome::json(EXIT_OK, &json!({ "count": items.len(), "items": items }))
}

fn enumerate(
    what: Enumerable,
    path: &Path,
    target: Option<&Path>,
    bound: Option<usize>,
    flags: Flags,
) -> Result<Outcome> {
    let need_target =
        || -> Result<&Path> { target.ok_or_else(|| Error::Invalid("this enumeration needs --target".into()).into()) };
    Ok(match what {
        Enumerable::Downsets => match input::load(path, None, flags)? {
            Structure::Poset(p) => {
                let n = p.poset().len();
                listing(down_sets(p.poset()).into_iter().map(|m| to_bitstring(m, n)).collect())
            }
            Structure::Lattice { lattice, .. } | Structure::Tables { lattice, .. } => listing(bitstrings(&lattice)),
        },
        Enumerable::LinearExtensions => {
            let p = input::load_poset(path, flags)?;
            listing(linear_extensions(p.poset()).iter().map(|e| e.positions().to_vec()).collect())
        }
        Enumerable::NaturalOrders => {
            let (l, _) = input::load_lattice(path, flags)?;
            let items: Vec<Value> = enumerate_natural_orders(&l)
                .iter()
                .map(|o| json!({ "irr_order": o.irr_order(), "sequence": o.sequence() }))
                .collect();
            listing(items)
        }
        Enumerable::Congruences => {
            let (l, ordered) = input::load_lattice(path, flags)?;
            let bound = resolve_bound(bound, DEFAULT_CONGRUENCE_BOUND)?;
            let items: Vec<Value> = enumerate_congruences_bounded(&l, bound)?
                .iter()
                .map(|c| match &ordered {
                    Some(ol) => {
                        json!({ "blocks": c.blocks(), "positive": is_positive_congruence(c, ol).is_positive() })
                    }
                    None => json!({ "blocks": c.blocks() }),
                })
                .collect();
            listing(items)
        }
        Enumerable::Surjections => {
            let (l, _) = input::load_lattice(path, flags)?;
            let (k, _) = input::load_lattice(need_target()?, flags)?;
            listing(enumerate_surjective_homomorphisms(&l, &k).into_iter().map(|f| MapJson::plain(f.map)).collect())
        }
        Enumerable::PositiveSurjections => {
            let lo = input::load_ordered_lattice(path, flags)?;
            let ko = input::load_ordered_lattice(need_target()?, flags)?;
            let items: Vec<Value> = enumerate_positive_surjections(&lo, &ko)
                .into_iter()
                .map(|f| json!({ "map": f.hom.map, "collapsed": f.collapsed }))
                .collect();
            listing(items)
        }
    })
}

fn with_order(
    l: &DistLattice,
    given: Option<&OrderedLattice>,
    over: Option<&NaturalOrderJson>,
    what: &str,
) -> Result<OrderedLattice> {
    match (over, given) {
        (Some(o), _) => Ok(OrderedLattice::new(l.clone(), &o.irr_order)?),
        (None, Some(ol)) => Ok(ol.clone()),
        (None, None) => Err(Error::Invalid(format!("no natural order for the {what} lattice")).into()),
    }
}

fn check(c: CheckCommand, flags: Flags) -> Result<Outcome> {
    match c {
        CheckCommand::PositiveHom { source, target, map } => {
            let (l, lo) = input::load_lattice(&source, flags)?;
            let (k, ko) = input::load_lattice(&target, flags)?;
            let m: MapJson = input::load_json(&map)?;
            let src = with_order(&l, lo.as_ref(), m.orders.as_ref().map(|o| &o.source), "source")?;
            let tgt = with_order(&k, ko.as_ref(), m.orders.as_ref().map(|o| &o.target), "target")?;
            let f = validate_homomorphism(m.map, &l, &k, false)?;
            let positivity = is_positive_homomorphism(&f, &src, &tgt)?;
            let mut report = json!({
                "positive": positivity.is_positive(),
                "surjective": f.surjective,
                "collapsed": collapsed_set_hom(&l, &f),
            });
            if let Positivity::Violated { x, y } = positivity {
                report["counterexample"] = json!({ "x": x, "y": y, "fx": f.apply(x), "fy": f.apply(y) });
            }
            Ok(Outcome::json(EXIT_OK, &report))
        }
        CheckCommand::PositiveCongruence { lattice, congruence } => {
            let (l, lo) = input::load_lattice(&lattice, flags)?;
            let doc: CongruenceJson = input::load_json(&congruence)?;
            let ol = with_order(&l, lo.as_ref(), doc.orders.as_ref().map(|o| &o.lattice), "congruence's")?;
            let phi = doc.to_congruence(&l)?;
            let positivity = is_positive_congruence(&phi, &ol);
            let mut report = json!({
                "positive": positivity.is_positive(),
                "collapsed": collapsed_set_congruence(&l, &phi),
            });
            if !positivity.is_positive() {
                report["counterexample"] = serde_json::to_value(positivity)?;
            }
            Ok(Outcome::json(EXIT_OK, &report))
        }
        CheckCommand::NaturalOrder { lattice, sequence } => {
            let (l, _) = input::load_lattice(&lattice, flags)?;
            let report = match is_natural_order(&l, &sequence) {
                Some(irr) => json!({ "natural": true, "irr_order": irr }),
                None => json!({ "natural": false }),
            };
            Ok(Outcome::json(EXIT_OK, &report))
        }
        CheckCommand::LemmaSuite { max_size, corpus } => {
            let posets = match corpus {
                Some(dir) => corpus_posets(&dir, flags)?,
                None => {
                    let mut all = Vec::new();
                    for n in 1..=max_size {
                        all.extend(enumerate_posets_up_to_iso(n)?);
                    }
                    all
                }
            };
            let report = run_lemma_suite(&posets)?;
            let code = if report.all_pass() { EXIT_OK } else { EXIT_CHECK_FAILED };
            Ok(Outcome::json(code, &json!({ "all_pass": report.all_pass(), "report": report })))
        }
    }
}

/// Every poset document (`*.json` with an `"n"` field) directly inside `dir`, by file name.
fn corpus_posets(dir: &Path, flags: Flags) -> Result<Vec<lattice_ramsey::Poset>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .with_context(|| format!("reading directory {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let mut out = Vec::new();
    for f in files {
        let value: Value = input::load_json(&f)?;
        if input::detect(&value).ok() == Some(DocKind::Poset) {
            out.push(input::load_poset(&f, flags)?.poset().clone());
        }
    }
    Ok(out)
}

fn export_dot(path: &Path, flags: Flags) -> Result<Outcome> {
    let text = match input::load(path, None, flags)? {
        Structure::Poset(p) => dot::poset_dot(p.poset()),
        Structure::Lattice { lattice, .. } | Structure::Tables { lattice, .. } => dot::lattice_dot(&lattice),
    };
    Ok(Outcome::text(EXIT_OK, text))
}

fn load_object(flavor: Flavor, path: &Path, flags: Flags) -> Result<Object> {
    Ok(match flavor {
        Flavor::PosetEmb => match input::load_poset(path, flags)? {
            AnyPoset::Plain(p) => Object::Poset(p),
            AnyPoset::Ordered(_) => return Err(Error::FlavorMismatch.into()),
        },
        Flavor::OrderedPosetEmb => Object::OrderedPoset(input::load_linear(path, flags)?),
        Flavor::LatticeSurj => match input::load_lattice(path, flags)? {
            (l, None) => Object::Lattice(l),
            (_, Some(_)) => return Err(Error::FlavorMismatch.into()),
        },
        Flavor::OrderedLatticePos => Object::OrderedLattice(input::load_ordered_lattice(path, flags)?),
    })
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Holds => EXIT_OK,
        Verdict::Fails => EXIT_ARROW_FAILS,
    }
}

/// The certificate, with failing ones re-checked against the objects.
fn certificate_json(cert: &ArrowCertificate, c: &Object, b: &Object, a: &Object) -> Result<Value> {
    let mut v = json!({ "certificate": cert });
    if !cert.holds() {
        let ok = verify_certificate(c, b, a, cert)?;
        if !ok {
            anyhow::bail!("internal error: failing certificate did not re-verify");
        }
        v["reverified"] = json!(ok);
    }
    Ok(v)
}

fn ramsey(r: RamseyCommand, flags: Flags) -> Result<Outcome> {
    match r {
        RamseyCommand::Check { flavor, c, b, a, search } => {
            let cfg = search_config(&search)?;
            let (co, bo, ao) =
                (load_object(flavor, &c, flags)?, load_object(flavor, &b, flags)?, load_object(flavor, &a, flags)?);
            let cert = arrow_holds_hom(flavor, &co, &bo, &ao, search.k, &cfg)?;
            Ok(Outcome::json(verdict_code(cert.verdict), &certificate_json(&cert, &co, &bo, &ao)?))
        }
        RamseyCommand::Search { b, a, max_size, search } => {
            let cfg = search_config(&search)?;
            let (bp, ap) = (input::load_linear(&b, flags)?, input::load_linear(&a, flags)?);
            match find_ramsey_witness(&bp, &ap, search.k, max_size, &cfg) {
                Ok(w) => Ok(Outcome::json(
                    EXIT_OK,
                    &json!({
                        "witness": PosetJson::from_linear(&w.c),
                        "size": w.c.len(),
                        "rejected": w.rejected,
                        "certificate": w.certificate,
                    }),
                )),
                Err(Error::BoundExceeded { what, .. }) if what.starts_with("no Ramsey witness") => Ok(Outcome::json(
                    EXIT_LIMIT,
                    &json!({ "error": {
                        "kind": "BoundExceeded",
                        "message": format!(
                            "no witness among linearly ordered posets of size at most {max_size}; larger witnesses are not ruled out"
                        ),
                    }}),
                )),
                Err(e) => Err(e.into()),
            }
        }
        RamseyCommand::Transport { a, b, c, search } => {
            let cfg = search_config(&search)?;
            let (ap, bp, cp) =
                (input::load_linear(&a, flags)?, input::load_linear(&b, flags)?, input::load_linear(&c, flags)?);
            let t = transport_witness(&ap, &bp, &cp, search.k, &cfg)?;
            let objs = [&t.c, &t.b, &t.a].map(|x| Object::OrderedLattice(x.clone()));
            let mut out = certificate_json(&t.certificate, &objs[0], &objs[1], &objs[2])?;
            out["a"] = serde_json::to_value(LatticeJson::from_ordered(&t.a))?;
            out["b"] = serde_json::to_value(LatticeJson::from_ordered(&t.b))?;
            out["c"] = serde_json::to_value(LatticeJson::from_ordered(&t.c))?;
            Ok(Outcome::json(verdict_code(t.certificate.verdict), &out))
        }
        RamseyCommand::CongruenceForm { n, l, congruence, search } => {
            let cfg = search_config(&search)?;
            let (no, lo) = (input::load_ordered_lattice(&n, flags)?, input::load_ordered_lattice(&l, flags)?);
            let doc: CongruenceJson = input::load_json(&congruence)?;
            let phi = doc.to_congruence(lo.lattice())?;
            let cert = dual_arrow_congruence_form(&no, &lo, &phi, search.k, &cfg)?;
            Ok(Outcome::json(verdict_code(cert.verdict), &json!({ "certificate": cert })))
        }
    }
}
