//! Command-line front end. One JSON report goes to stdout, a short summary
//! to stderr.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on bad usage or input.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::battery::{run_battery, BatteryScope};
use crate::chromatic::chromatic_polynomial;
use crate::complexes::{
    build_coloring_complex, build_cyclic_complement, build_cyclic_complex, build_en_complex, build_tree_complex,
    ChainComplexRep,
};
use crate::error::{Error, Result};
use crate::homology::{betti_numbers, RankMode, DEFAULT_EXACT_CAP};
use crate::hypercore::{Family, Hypergraph, HypergraphJson};
use crate::linalg::DEFAULT_PRIME;
use crate::repn::{chain_character, character_row, homology_character, ActingGroup, CharacterRow, CycleType};
use crate::shelling::{
    facet_order, homology_facets, restriction_closed_form, verify_shelling, Facet, ShellingCertificate, ShellingMode,
};

#[derive(Parser, Debug)]
#[command(name = "coloring-complex", version, about = "Homology, shellings and characters of hypergraph coloring complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
struct Source {
    /// Complete k-uniform hypergraph on n vertices.
    #[arg(long, num_args = 2, value_names = ["N", "K"])]
    complete: Option<Vec<usize>>,
    /// All k-subsets through vertex v.
    #[arg(long, num_args = 3, value_names = ["N", "K", "V"])]
    star: Option<Vec<usize>>,
    /// Looped complete graph E_n (singleton edges).
    #[arg(long, value_name = "N")]
    looped: Option<usize>,
    /// Rooted tree as hypergraph JSON with 2-element edges.
    #[arg(long, value_name = "FILE")]
    tree: Option<PathBuf>,
    /// Hypergraph JSON: {"n": 5, "edges": [[1,2,3],[1,2,4]]}.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct Output {
    /// Also write the report to this file.
    #[arg(long, value_name = "PATH")]
    json_out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ComplexArg {
    Coloring,
    Cyclic,
    Complement,
    En,
    Tree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Prop25,
    Direct,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ScopeArg {
    Coloring,
    Cyclic,
    Characters,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Chromatic polynomial.
    Chromatic {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        out: Output,
    },
    /// Betti numbers of a coloring, cyclic, complement, E_n or tree complex.
    Homology {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        complex: Option<ComplexArg>,
        /// Number of forbidden sets for partial complement and tree complexes.
        #[arg(long)]
        l: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
        /// Exact rational ranks instead of modular ones.
        #[arg(long)]
        exact: bool,
        /// Write bases and boundary matrices to this directory.
        #[arg(long, value_name = "DIR")]
        dump: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Facet order and restrictions, optionally verified.
    Shelling {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "both")]
        mode: ModeArg,
        /// Use the facet order backwards, keeping the closed-form restrictions.
        #[arg(long)]
        reverse: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Facets equal to their own restriction.
    Gamma {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        out: Output,
    },
    /// Homology (or chain-group) characters of a cyclic complex.
    Character {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "cyclic")]
        complex: ComplexArg,
        #[arg(long, allow_hyphen_values = true)]
        degree: isize,
        /// Comma-separated parts, e.g. 2,1,1.
        #[arg(long, value_name = "PARTS")]
        cycle_type: Option<String>,
        /// Trace on the chain group instead of homology.
        #[arg(long)]
        chain: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Sweep every dimension formula up to nmax vertices.
    Battery {
        #[arg(long, value_enum, default_value = "all")]
        scope: ScopeArg,
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Serialize)]
struct Report {
    command: String,
    argv: Vec<String>,
    hypergraph: Option<Descriptor>,
    result: Value,
    backend: Value,
}

#[derive(Serialize)]
struct Descriptor {
    family: String,
    #[serde(flatten)]
    json: HypergraphJson,
}

struct Outcome {
    hypergraph: Option<Hypergraph>,
    result: Value,
    backend: Value,
    summary: String,
    verified: bool,
}

enum Failure {
    Usage(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Names a hypergraph by its generator when it has one.
pub fn describe(h: &Hypergraph) -> String {
    let n = h.n();
    match h.family() {
        Family::Looped => format!("looped({n})"),
        Family::Complete { k } => format!("complete({n},{k})"),
        Family::Star { k, center } => format!("star({n},{k},{center})"),
        Family::Tree => format!("tree({n})"),
        Family::Explicit => format!("explicit({n})"),
    }
}

fn read_json(path: &PathBuf) -> std::result::Result<HypergraphJson, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("malformed hypergraph file {}: {e}", path.display())))
}

fn load(source: &Source) -> std::result::Result<Hypergraph, Failure> {
    if let Some(v) = &source.complete {
        return Ok(Hypergraph::complete(v[0], v[1])?);
    }
    if let Some(v) = &source.star {
        return Ok(Hypergraph::star(v[0], v[1], v[2])?);
    }
    if let Some(n) = source.looped {
        return Ok(Hypergraph::looped(n)?);
    }
    if let Some(path) = &source.tree {
        let json = read_json(path)?;
        let pairs = json
            .edges
            .iter()
            .map(|e| match e.as_slice() {
                [a, b] => Ok((*a, *b)),
                _ => Err(usage(format!("tree edge {e:?} does not have two endpoints"))),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        return Ok(Hypergraph::tree(json.n, &pairs)?);
    }
    if let Some(path) = &source.input {
        return Ok(Hypergraph::from_json(&read_json(path)?)?);
    }
    Err(usage("no hypergraph source given"))
}

fn build_complex(h: &Hypergraph, kind: ComplexArg, l: Option<usize>) -> std::result::Result<ChainComplexRep, Failure> {
    Ok(match kind {
        ComplexArg::Coloring => build_coloring_complex(h)?,
        ComplexArg::Cyclic => build_cyclic_complex(h)?,
        ComplexArg::En => build_en_complex(h.n())?,
        ComplexArg::Complement => match h.family() {
            Family::Complete { k } => build_cyclic_complement(h.n(), k, l)?,
            other => return Err(usage(format!("complement complexes need a complete hypergraph, got {other:?}"))),
        },
        ComplexArg::Tree => build_tree_complex(h, l.unwrap_or(0))?,
    })
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

fn run_chromatic(source: &Source) -> std::result::Result<Outcome, Failure> {
    let h = load(source)?;
    let chi = chromatic_polynomial(&h)?;
    let summary = format!("chromatic polynomial of {}: {:?}", describe(&h), chi.coeffs);
    Ok(Outcome { hypergraph: Some(h), result: to_value(&chi), backend: json!({}), summary, verified: true })
}

#[allow(clippy::too_many_arguments)]
fn run_homology(
    source: &Source,
    complex: Option<ComplexArg>,
    l: Option<usize>,
    prime: u64,
    exact: bool,
    dump: Option<&PathBuf>,
) -> std::result::Result<Outcome, Failure> {
    let h = load(source)?;
    let kind = complex.unwrap_or(if source.tree.is_some() { ComplexArg::Tree } else { ComplexArg::Coloring });
    if l.is_some() && !matches!(kind, ComplexArg::Complement | ComplexArg::Tree) {
        return Err(usage("--l applies to complement and tree complexes only"));
    }
    let c = build_complex(&h, kind, l)?;
    if let Some(dir) = dump {
        c.dump(dir).map_err(|e| usage(format!("cannot write to {}: {e}", dir.display())))?;
    }
    let mode = if exact { RankMode::Exact { cap: DEFAULT_EXACT_CAP } } else { RankMode::Modular { prime } };
    let table = betti_numbers(&c, mode)?;
    let summary = format!(
        "{} complex of {}: dims {:?}, betti {:?}",
        c.kind(),
        describe(&h),
        c.dims(),
        table.betti.values().collect::<Vec<_>>()
    );
    let mut result = to_value(&table);
    // report only the nonzero groups
    if let Some(Value::Object(b)) = result.get_mut("betti") {
        b.retain(|_, v| v.as_u64() != Some(0));
    }
    let backend = if exact { json!({"ranks": "exact"}) } else { json!({"ranks": "modular", "prime": prime}) };
    Ok(Outcome { hypergraph: Some(h), result, backend, summary, verified: true })
}

fn run_shelling(source: &Source, verify: bool, mode: ModeArg, reverse: bool) -> std::result::Result<Outcome, Failure> {
    let h = load(source)?;
    let mut order = facet_order(&h)?;
    if reverse {
        order.reverse();
    }
    let restrictions: Vec<_> = order.iter().map(restriction_closed_form).collect();
    let cert = if verify {
        let mode = match mode {
            ModeArg::Prop25 => ShellingMode::Prop25,
            ModeArg::Direct => ShellingMode::Direct,
            ModeArg::Both => ShellingMode::Both,
        };
        verify_shelling(&h, &order, &restrictions, mode)?
    } else {
        ShellingCertificate { order, restrictions, prop25: None, direct: None, first_violation: None }
    };
    let verified = cert.is_valid();
    let summary = match (&cert.first_violation, verify) {
        (_, false) => format!("{} facets of {} listed, not verified", cert.order.len(), describe(&h)),
        (None, true) => format!("{} facets of {}: shelling verified", cert.order.len(), describe(&h)),
        (Some(v), true) => format!("{}: not a shelling: {v}", describe(&h)),
    };
    Ok(Outcome { hypergraph: Some(h), result: to_value(&cert), backend: json!({}), summary, verified })
}

fn run_gamma(source: &Source) -> std::result::Result<Outcome, Failure> {
    let h = load(source)?;
    let facets: Vec<Facet> = homology_facets(&h)?;
    let summary = format!("{} homology facets for {}", facets.len(), describe(&h));
    let result = json!({"count": facets.len(), "facets": facets});
    Ok(Outcome { hypergraph: Some(h), result, backend: json!({}), summary, verified: true })
}

fn run_character(
    source: &Source,
    complex: ComplexArg,
    degree: isize,
    cycle_type: Option<&str>,
    chain: bool,
) -> std::result::Result<Outcome, Failure> {
    let h = load(source)?;
    if !matches!(complex, ComplexArg::Cyclic | ComplexArg::En) {
        return Err(usage("characters are computed on cyclic or E_n complexes"));
    }
    let c = build_complex(&h, complex, None)?;
    if !c.degrees().contains(&degree) {
        return Err(Failure::Library(Error::Degree(format!("degree {degree} outside {:?}", c.degrees()))));
    }
    let group = ActingGroup::of(c.source())?;
    let (result, summary) = match cycle_type {
        Some(text) => {
            let t = CycleType::parse(text)?;
            if t.size() != c.n() {
                return Err(usage(format!("cycle type {t} does not partition {}", c.n())));
            }
            let value = if chain { chain_character(&c, &t, degree)? } else { homology_character(&c, degree, &t)? };
            (
                json!({"degree": degree, "cycle_type": t.to_string(), "value": value, "group": group}),
                format!("character at {t}, degree {degree}: {value}"),
            )
        }
        None => {
            let row = if chain {
                let rows = group
                    .cycle_types(c.n())
                    .into_iter()
                    .map(|t| Ok((t.clone(), chain_character(&c, &t, degree)?)))
                    .collect::<Result<Vec<_>>>()?;
                CharacterRow { degree, rows, group }
            } else {
                character_row(&c, degree)?
            };
            let summary = format!("character row at degree {degree}: {:?}", row.values());
            (to_value(&row), summary)
        }
    };
    let level = if chain { "chain" } else { "homology" };
    Ok(Outcome { hypergraph: Some(h), result, backend: json!({"level": level}), summary, verified: true })
}

fn run_battery_cmd(scope: ScopeArg, nmax: usize) -> std::result::Result<Outcome, Failure> {
    let scope = match scope {
        ScopeArg::Coloring => BatteryScope::Coloring,
        ScopeArg::Cyclic => BatteryScope::Cyclic,
        ScopeArg::Characters => BatteryScope::Characters,
        ScopeArg::All => BatteryScope::All,
    };
    let report = run_battery(scope, nmax)?;
    let failed: usize = report.summary.values().map(|t| t.failed).sum();
    let summary = format!("battery: {} checks, {failed} failed", report.checks.len());
    Ok(Outcome {
        hypergraph: None,
        result: to_value(&report),
        backend: json!({"ranks": "modular", "prime": DEFAULT_PRIME}),
        summary,
        verified: report.all_pass,
    })
}

/// Parses `args` (program name first), runs the command and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let argv: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let start = Instant::now();
    let (name, out, outcome) = match &cli.command {
        Command::Chromatic { source, out } => ("chromatic", out, run_chromatic(source)),
        Command::Homology { source, complex, l, prime, exact, dump, out } => {
            ("homology", out, run_homology(source, *complex, *l, *prime, *exact, dump.as_ref()))
        }
        Command::Shelling { source, verify, mode, reverse, out } => {
            ("shelling", out, run_shelling(source, *verify, *mode, *reverse))
        }
        Command::Gamma { source, out } => ("gamma", out, run_gamma(source)),
        Command::Character { source, complex, degree, cycle_type, chain, out } => {
            ("character", out, run_character(source, *complex, *degree, cycle_type.as_deref(), *chain))
        }
        Command::Battery { scope, nmax, out } => ("battery", out, run_battery_cmd(*scope, *nmax)),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return 2;
        }
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let report = Report {
        command: name.to_string(),
        argv,
        hypergraph: outcome.hypergraph.as_ref().map(|h| Descriptor { family: describe(h), json: h.to_json() }),
        result: outcome.result,
        backend: outcome.backend,
    };
    let text = serde_json::to_string(&report).expect("report serializes");
    println!("{text}");
    if let Some(path) = &out.json_out {
        if let Err(e) = fs::write(path, format!("{text}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return 2;
        }
    }
    eprintln!("{} ({:.2?})", outcome.summary, start.elapsed());
    if outcome.verified {
        0
    } else {
        1
    }
}
