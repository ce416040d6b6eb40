//! The `grr` command-line interface.
//!
//! Every command writes one JSON document (or CSV/DOT where requested) that
//! starts with the configuration it was run with, so each output can be
//! regenerated from itself.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::autgrp::verify;
use crate::cayley::{build_digraph, build_graph, DEFAULT_VERTEX_BUDGET};
use crate::construct::{grr_pipeline, ConstructOptions, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::groups::classify::{classify_declared, classify_finite, Classification, Mode};
use crate::groups::{AnyGroup, Group};
use crate::randwalk::{self, Estimate, StepMeasure};
use crate::set::{parse_elements, SymmetricSet};
use crate::with_group;

#[derive(Debug, Parser)]
#[command(name = "grr", version, about = "Graphical regular representations: construct, verify, probe")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Global {
    /// Group spec, e.g. `heisenberg`, `free:2`, `symmetric:4`, `dihedral:12`.
    #[arg(long, global = true)]
    pub group: Option<String>,
    /// Generators: an inline comma-separated list, or `@file`.
    #[arg(long, global = true)]
    pub gens: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Candidates examined per augmentation step.
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    /// Ball radius for infinite groups.
    #[arg(long, global = true)]
    pub radius: Option<usize>,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Commute,
    Square,
    SupSquare,
    Coset,
    Involution,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// Classify the group against the GRR, DRR and ORR exception lists.
    Classify {
        /// One mode only; all three when absent.
        #[arg(long, value_enum)]
        mode: Option<Mode>,
    },
    /// Run the construction pipeline and write its trace and final set.
    Construct {
        /// Skip the hypothesis gates.
        #[arg(long)]
        force: bool,
        /// Re-check every step from scratch.
        #[arg(long)]
        replay: bool,
        /// Set file; defaults to the `--out` path with extension `set`.
        #[arg(long)]
        set_out: Option<PathBuf>,
    },
    /// Compute the automorphism group of a Cayley (di)graph.
    Verify {
        /// Connection set file, one element per line.
        #[arg(long)]
        set: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Grr)]
        mode: Mode,
    },
    /// Monte Carlo random-walk estimates along a ladder of walk lengths.
    Probe {
        #[arg(long, value_enum)]
        quantity: Quantity,
        /// Walk lengths, comma-separated.
        #[arg(long, value_delimiter = ',', default_values_t = [50usize, 100, 200])]
        n: Vec<usize>,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        /// Target `a` of `g² = a` (square); coset representative (coset).
        #[arg(long)]
        element: Option<String>,
        /// Generators of `H` for the coset quantity.
        #[arg(long)]
        subgroup: Option<String>,
        /// Use the measure invariant under left multiplication by this
        /// involution.
        #[arg(long)]
        invariant_under: Option<String>,
    },
    /// Export a Cayley (di)graph as JSON or DOT.
    Export {
        /// Connection set file; the symmetrised generators when absent.
        #[arg(long)]
        set: Option<PathBuf>,
        #[arg(long)]
        directed: bool,
    },
}

#[derive(Serialize)]
struct Config<'a> {
    #[serde(flatten)]
    global: &'a Global,
    #[serde(flatten)]
    command: &'a Command,
}

/// Parses arguments and runs; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(cli: &Cli) -> Result<()> {
    let spec = cli.global.group.as_deref().ok_or_else(|| Error::Malformed("--group is required".into()))?;
    let any = AnyGroup::from_spec(spec)?;
    let config = serde_json::to_value(Config { global: &cli.global, command: &cli.command })?;
    match &cli.command {
        Command::Classify { mode } => classify_cmd(cli, &any, *mode, config),
        Command::Construct { force, replay, set_out } => {
            with_group!(&any, g => construct_cmd(cli, g, *force, *replay, set_out.as_deref(), config))
        }
        Command::Verify { set, mode } => with_group!(&any, g => verify_cmd(cli, g, set, *mode, config)),
        Command::Probe { quantity, n, samples, element, subgroup, invariant_under } => {
            let p = ProbeArgs {
                quantity: *quantity,
                ladder: n,
                samples: *samples,
                element: element.as_deref(),
                subgroup: subgroup.as_deref(),
                invariant_under: invariant_under.as_deref(),
            };
            with_group!(&any, g => probe_cmd(cli, g, &p, config))
        }
        Command::Export { set, directed } => {
            with_group!(&any, g => export_cmd(cli, g, set.as_deref(), *directed, config))
        }
    }
}

/// Classification of any group: from its table when finite, otherwise from
/// declared family metadata.
pub fn classify(any: &AnyGroup, mode: Mode) -> Classification {
    match any {
        AnyGroup::Finite(g) => classify_finite(g, mode),
        other => classify_declared(&other.name(), other.info(), mode),
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

fn emit_json(cli: &Cli, value: &Value) -> Result<()> {
    emit(cli.global.out.as_deref(), &(serde_json::to_string_pretty(value)? + "\n"))
}

fn read_list(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => Ok(std::fs::read_to_string(path)?),
        None => Ok(arg.to_string()),
    }
}

fn generators<G: Group>(cli: &Cli, g: &G) -> Result<Vec<G::Elem>> {
    match &cli.global.gens {
        Some(text) => {
            let gens = parse_elements(g, &read_list(text)?)?;
            if gens.is_empty() {
                return Err(Error::InvalidSet("--gens is empty".into()));
            }
            Ok(gens)
        }
        None => Ok(g.generators()),
    }
}

/// Reads a connection-set file: one element per line, `#` comments.
pub fn read_set_file<G: Group>(g: &G, path: &Path) -> Result<Vec<G::Elem>> {
    parse_elements(g, &std::fs::read_to_string(path)?)
}

/// The set file format read by [`read_set_file`].
pub fn format_set_file<G: Group>(g: &G, elems: &[G::Elem], header: &[String]) -> String {
    let mut s = String::new();
    for h in header {
        let _ = writeln!(s, "# {h}");
    }
    for e in elems {
        let _ = writeln!(s, "{}", g.format(e));
    }
    s
}

fn classify_cmd(cli: &Cli, any: &AnyGroup, mode: Option<Mode>, config: Value) -> Result<()> {
    let modes = mode.map_or_else(|| vec![Mode::Grr, Mode::Drr, Mode::Orr], |m| vec![m]);
    let reports: Vec<Classification> = modes.into_iter().map(|m| classify(any, m)).collect();
    emit_json(cli, &json!({ "config": config, "group": any.name(), "order": any.order(), "classifications": reports }))
}

fn construct_cmd<G: Group>(
    cli: &Cli,
    g: &G,
    force: bool,
    replay: bool,
    set_out: Option<&Path>,
    config: Value,
) -> Result<()> {
    let gens = generators(cli, g)?;
    let opts = ConstructOptions { budget: cli.global.budget.unwrap_or(DEFAULT_BUDGET), force, replay };
    let (s1, trace, err) = match grr_pipeline(g, &gens, &opts) {
        Ok(r) => r,
        Err(e) => {
            let doc = json!({ "config": config, "status": "refused", "error": e.to_string() });
            if cli.global.out.is_some() {
                emit_json(cli, &doc)?;
            }
            return Err(e);
        }
    };
    let status = if err.is_none() { "ok" } else { "failed" };
    let doc = json!({
        "config": config,
        "status": status,
        "error": err.as_ref().map(|e| e.to_string()),
        "base": s1.format(g),
        "base_size": s1.len(),
        "final_size": trace.final_set.len(),
        "trace": trace.to_json(g),
    });
    emit_json(cli, &doc)?;
    let set_path = set_out.map(Path::to_path_buf).or_else(|| cli.global.out.as_ref().map(|p| p.with_extension("set")));
    if let Some(p) = set_path {
        let header = vec![
            format!("group: {}", cli.global.group.as_deref().unwrap_or_default()),
            format!("status: {status}"),
            format!("size: {}", trace.final_set.len()),
        ];
        std::fs::write(p, format_set_file(g, trace.final_set.elems(), &header))?;
    }
    err.map_or(Ok(()), Err)
}

fn verify_cmd<G: Group>(cli: &Cli, g: &G, set: &Path, mode: Mode, config: Value) -> Result<()> {
    let elems = read_set_file(g, set)?;
    let set = SymmetricSet::new(g, elems, mode == Mode::Grr)?;
    let report = verify(g, &set, mode)?;
    let mut doc = serde_json::to_value(&report)?;
    doc["config"] = config;
    emit_json(cli, &doc)
}

struct ProbeArgs<'a> {
    quantity: Quantity,
    ladder: &'a [usize],
    samples: usize,
    element: Option<&'a str>,
    subgroup: Option<&'a str>,
    invariant_under: Option<&'a str>,
}

fn probe_cmd<G: Group>(cli: &Cli, g: &G, p: &ProbeArgs, config: Value) -> Result<()> {
    if p.ladder.is_empty() || p.samples == 0 {
        return Err(Error::Malformed("--n and --samples must be non-empty and positive".into()));
    }
    let gens = generators(cli, g)?;
    let mu = match p.invariant_under {
        Some(s) => StepMeasure::s_left_invariant(g, &gens, &g.parse(s)?)?,
        None => StepMeasure::lazy_uniform(g, &gens)?,
    };
    let element = p.element.map(|e| g.parse(e)).transpose()?.unwrap_or_else(|| g.identity());
    let seed = cli.global.seed;
    let mut estimates: Vec<Estimate> = Vec::new();
    let mut extra: Vec<Value> = Vec::new();
    match p.quantity {
        Quantity::Commute => {
            for &n in p.ladder {
                estimates.push(randwalk::estimate_commute_probability(g, &mu, n, p.samples, seed));
            }
        }
        Quantity::Square => {
            for &n in p.ladder {
                estimates.push(randwalk::estimate_square_probability(g, &mu, &element, n, p.samples, seed));
            }
        }
        Quantity::SupSquare => {
            for &n in p.ladder {
                let (a, e) = randwalk::sup_square_probability(g, &mu, n, p.samples, seed);
                extra.push(json!({ "argmax": g.format(&a) }));
                estimates.push(e);
            }
        }
        Quantity::Involution => {
            for &n in p.ladder {
                let r = randwalk::involution_threshold_report(g, &mu, n, p.samples, seed);
                extra.push(json!({
                    "threshold": r.threshold,
                    "derived_bound": r.derived_bound,
                    "above_threshold": r.above_threshold,
                    "below_threshold": r.below_threshold,
                }));
                estimates.push(r.estimate);
            }
        }
        Quantity::Coset => {
            let text = p.subgroup.ok_or_else(|| Error::Malformed("--subgroup is required for coset".into()))?;
            let h = parse_elements(g, &read_list(text)?)?;
            let members: std::collections::HashSet<G::Elem> = match g.elements() {
                Some(_) => {
                    let ball = crate::groups::Ball::new(g, &h, usize::MAX, DEFAULT_VERTEX_BUDGET)?;
                    ball.elements().cloned().collect()
                }
                None => {
                    let r = cli.global.radius.unwrap_or(*p.ladder.iter().max().unwrap());
                    let ball = crate::groups::Ball::new(g, &h, r, DEFAULT_VERTEX_BUDGET)?;
                    ball.elements().cloned().collect()
                }
            };
            for &n in p.ladder {
                estimates.push(randwalk::estimate_coset_probability(
                    g,
                    &mu,
                    &element,
                    |x| members.contains(x),
                    n,
                    p.samples,
                    seed,
                ));
            }
        }
    }
    let verdict = randwalk::trend_verdict(&estimates);
    match cli.global.format {
        Format::Csv => {
            let mut s = String::from("n,estimate,radius,samples,hits\n");
            for (n, e) in p.ladder.iter().zip(&estimates) {
                let _ = writeln!(s, "{n},{},{},{},{}", e.estimate, e.radius, e.samples, e.hits);
            }
            emit(cli.global.out.as_deref(), &s)
        }
        _ => emit_json(
            cli,
            &json!({
                "config": config,
                "measure": mu.summary(g),
                "ladder": p.ladder,
                "estimates": estimates.iter().map(|e| e.estimate).collect::<Vec<_>>(),
                "radii": estimates.iter().map(|e| e.radius).collect::<Vec<_>>(),
                "details": estimates,
                "extra": extra,
                "trend_verdict": verdict,
            }),
        ),
    }
}

fn export_cmd<G: Group>(cli: &Cli, g: &G, set: Option<&Path>, directed: bool, config: Value) -> Result<()> {
    let set = match set {
        Some(path) => SymmetricSet::new(g, read_set_file(g, path)?, !directed)?,
        None if directed => SymmetricSet::new(g, generators(cli, g)?, false)?,
        None => SymmetricSet::symmetric_closure(g, &generators(cli, g)?),
    };
    let radius = match (g.is_finite(), cli.global.radius) {
        (_, Some(r)) => Some(r),
        (true, None) => None,
        (false, None) => return Err(Error::ScopeRequired(format!("{} is infinite; pass --radius", g.name()))),
    };
    let graph = if directed {
        build_digraph(g, &set, radius, DEFAULT_VERTEX_BUDGET)?
    } else {
        build_graph(g, &set, radius, DEFAULT_VERTEX_BUDGET)?
    };
    match cli.global.format {
        Format::Dot => emit(cli.global.out.as_deref(), &graph.to_dot(g)),
        Format::Csv => {
            let mut s = String::from("source,target,colour\n");
            for (u, l) in graph.out.iter().enumerate() {
                for &(v, c) in l {
                    if directed || u < v as usize {
                        let _ = writeln!(s, "{},{},{}", u, v, g.format(&graph.colours[c as usize]));
                    }
                }
            }
            emit(cli.global.out.as_deref(), &s)
        }
        Format::Json => emit_json(cli, &json!({ "config": config, "graph": graph.to_json(g) })),
    }
}
