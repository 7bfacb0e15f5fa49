//! Subcommands. Each returns the text of its report and an exit code; timings go to stderr
//! only, so reports are reproducible.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use knotadj::bj::{
    bj_set_of, check_lemma_chain, composite_minimal_diagrams, minimal_diagrams_of,
    overrides_from_ledger, small_scale_records, weak_bj_numbers, BjError, BjRecord, GapPolicy,
    WeakOptions,
};
use knotadj::fixtures;
use knotadj::identify::{identify, FactLedger, KnotTable};
use knotadj::invariants::Fingerprint;
use knotadj::moves::UnknotBudget;
use knotadj::tabulate::{enumerate_reference_diagrams, ReferenceSet, TabulateError, TabulateLimits};
use knotadj::{BraidWord, CodecError, Diagram, DtCode, GaussCode, ResourceLimit};
use rayon::prelude::*;
use thiserror::Error;

use crate::checks::{self, Context, Status};
use crate::manifest::RunManifest;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Codec(#[from] CodecError),
    #[error(transparent)]
    Resource(#[from] ResourceLimit),
    #[error(transparent)]
    Tabulate(#[from] TabulateError),
    #[error(transparent)]
    Bj(#[from] BjError),
    #[error("table: {0}")]
    Table(String),
}

#[derive(Debug, Parser)]
#[command(name = "knotadj", version, about = "Knot diagrams, crossing changes and unknotting bounds")]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Diagrams an unknot search may visit.
    #[arg(long, global = true, default_value_t = 100_000)]
    pub budget_states: usize,
    /// Largest flype orbit explored.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub orbit_cap: usize,
    /// Write a run manifest here.
    #[arg(long, global = true)]
    pub manifest: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert between diagram codes, or report on a diagram.
    Convert(ConvertArgs),
    /// Reference diagrams at one crossing number.
    Tabulate(TabulateArgs),
    /// Minimal diagrams and single-crossing-change neighbours of a knot.
    Bjset(BjsetArgs),
    /// Weak numbers and the bound chain for small knots.
    Ubjw(UbjwArgs),
    /// Run the verification checks.
    VerifyPaper(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Dt,
    Gauss,
    Fingerprint,
    Report,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "input")]
pub struct DiagramInput {
    /// Dowker-Thistlethwaite code, e.g. `[4,6,2]`.
    #[arg(long, allow_hyphen_values = true)]
    pub dt: Option<String>,
    /// Braid word, e.g. `3:{1,1,1}`.
    #[arg(long, allow_hyphen_values = true)]
    pub braid: Option<String>,
    /// Signed Gauss code, e.g. `[-1,3,-2,1,-3,2]`.
    #[arg(long, allow_hyphen_values = true)]
    pub gauss: Option<String>,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    #[command(flatten)]
    pub input: DiagramInput,
    #[arg(long, value_enum, default_value_t = Target::Report)]
    pub to: Target,
}

#[derive(Debug, Args)]
pub struct TabulateArgs {
    #[arg(long)]
    pub k: usize,
    /// Also name each reference diagram.
    #[arg(long)]
    pub identify: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BjsetArgs {
    #[arg(long)]
    pub knot: String,
    /// Reference set file (`k=<k> count=<n>` then one code per line).
    #[arg(long)]
    pub refs: Option<PathBuf>,
    /// Knot table file (`name<TAB>dt` per line).
    #[arg(long)]
    pub table: Option<PathBuf>,
    /// Keep unidentified neighbours as unrecognized members instead of failing.
    #[arg(long)]
    pub mark_gaps: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct UbjwArgs {
    /// Largest crossing number run from enumerated reference diagrams.
    #[arg(long, default_value_t = 8)]
    pub nmax: usize,
    /// Add the record of a bundled diagram family.
    #[arg(long = "family")]
    pub families: Vec<String>,
    /// Take the value of a knot from its known unknotting lower bound.
    #[arg(long = "override")]
    pub overrides: Vec<String>,
    /// Treat missing records as nontrivial knots of unknown value.
    #[arg(long)]
    pub lenient: bool,
    #[arg(long)]
    pub table: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run only these checks, by id or number.
    #[arg(long)]
    pub only: Vec<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub struct Output {
    pub text: String,
    pub code: i32,
}

struct Env {
    budget: UnknotBudget,
    limits: TabulateLimits,
    manifest: RunManifest,
}

fn read(env: &mut Env, path: &Path) -> Result<String, CliError> {
    env.manifest.read_input(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load_table(env: &mut Env, path: &Option<PathBuf>) -> Result<&'static KnotTable, CliError> {
    match path {
        None => Ok(KnotTable::bundled()),
        Some(p) => {
            let text = read(env, p)?;
            let t = KnotTable::ingest(&text).map_err(|e| CliError::Table(e.to_string()))?;
            // leaked once per process so records can borrow it like the bundled table
            Ok(Box::leak(Box::new(t.with_composites(10))))
        }
    }
}

/// Runs a parsed command line, writing the manifest if one was asked for.
pub fn run(cli: Cli) -> Result<Output, CliError> {
    if let Some(n) = cli.jobs {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let mut env = Env {
        budget: UnknotBudget {
            max_states: cli.budget_states,
            ..UnknotBudget::default()
        },
        limits: TabulateLimits {
            orbit_cap: cli.orbit_cap,
            ..TabulateLimits::default()
        },
        manifest: RunManifest::new(command_name(&cli.command)),
    };
    env.manifest.budget("budget-states", env.budget.max_states);
    env.manifest.budget("orbit-cap", env.limits.orbit_cap);
    env.manifest.budget("max-extra-crossings", env.budget.max_extra_crossings);
    let start = Instant::now();
    let (out, path) = match cli.command {
        Command::Convert(a) => (convert(&env, &a)?, None),
        Command::Tabulate(a) => (tabulate(&mut env, &a)?, a.out),
        Command::Bjset(a) => (bjset(&mut env, &a)?, a.out),
        Command::Ubjw(a) => (ubjw(&mut env, &a)?, a.out),
        Command::VerifyPaper(a) => (verify(&mut env, &a)?, a.out),
    };
    eprintln!("elapsed {:.2?}", start.elapsed());
    env.manifest.outcome.push(format!("exit {}", out.code));
    if let Some(p) = path {
        fs::write(&p, &out.text).map_err(|source| CliError::Io { path: p, source })?;
    }
    if let Some(p) = cli.manifest {
        fs::write(&p, env.manifest.to_string()).map_err(|source| CliError::Io { path: p, source })?;
    }
    Ok(out)
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Convert(_) => "convert".into(),
        Command::Tabulate(a) => format!("tabulate --k {}", a.k),
        Command::Bjset(a) => format!("bjset --knot {}", a.knot),
        Command::Ubjw(a) => format!("ubjw --nmax {}", a.nmax),
        Command::VerifyPaper(a) if a.only.is_empty() => "verify-paper".into(),
        Command::VerifyPaper(a) => format!("verify-paper --only {}", a.only.join(",")),
    }
}

pub fn parse_diagram(input: &DiagramInput) -> Result<Diagram, CliError> {
    if let Some(s) = &input.dt {
        Ok(Diagram::from_dt(&s.parse::<DtCode>()?)?)
    } else if let Some(s) = &input.braid {
        Ok(Diagram::from_braid(&s.parse::<BraidWord>()?)?)
    } else if let Some(s) = &input.gauss {
        Ok(Diagram::from_gauss(&s.parse::<GaussCode>()?)?)
    } else {
        Err(CliError::Usage("one of --dt, --braid or --gauss is required".into()))
    }
}

fn convert(env: &Env, a: &ConvertArgs) -> Result<Output, CliError> {
    let d = parse_diagram(&a.input)?;
    let text = match a.to {
        Target::Dt => format!("{}\n", d.to_dt()),
        Target::Gauss => format!("{}\n", d.to_gauss()),
        Target::Fingerprint => format!("{}\n", Fingerprint::of(&d)?),
        Target::Report => report(&d, env.budget)?,
    };
    Ok(Output { text, code: 0 })
}

fn report(d: &Diagram, budget: UnknotBudget) -> Result<String, CliError> {
    let id = identify(d, KnotTable::bundled(), budget)?;
    let mut s = String::new();
    let _ = writeln!(s, "dt {}", d.to_dt());
    let _ = writeln!(s, "gauss {}", d.to_gauss());
    let _ = writeln!(s, "crossings {}", d.crossings());
    let _ = writeln!(s, "writhe {}", d.writhe());
    let _ = writeln!(s, "alternating {}", d.is_alternating());
    let _ = writeln!(s, "reduced {}", d.is_reduced());
    let _ = writeln!(s, "prime {}", d.is_prime());
    let _ = writeln!(s, "fingerprint {}", id.fingerprint);
    let _ = writeln!(s, "mirror_fingerprint_equal {}", id.fingerprint == id.fingerprint.mirror());
    let _ = writeln!(s, "knot {}", id.id);
    if let Some(c) = &id.certificate {
        let _ = writeln!(s, "certificate {} moves", c.moves.len());
        for m in c.to_string().lines() {
            let _ = writeln!(s, "  {m}");
        }
    }
    if id.undetermined {
        let _ = writeln!(s, "undetermined true");
    }
    Ok(s)
}

fn tabulate(env: &mut Env, a: &TabulateArgs) -> Result<Output, CliError> {
    let refs = enumerate_reference_diagrams(a.k, env.limits)?;
    env.manifest.outcome.push(format!("reference diagrams {}", refs.len()));
    let text = if a.identify {
        let table = KnotTable::bundled();
        let budget = env.budget;
        let lines = refs
            .codes
            .par_iter()
            .map(|c| {
                let d = Diagram::from_dt(c).expect("reference codes are realizable");
                Ok(format!("{c}\t{}\n", identify(&d, table, budget)?.id))
            })
            .collect::<Result<Vec<_>, ResourceLimit>>()?;
        lines.concat()
    } else {
        refs.to_string()
    };
    Ok(Output { text, code: 0 })
}

fn record_for(
    env: &mut Env,
    a: &BjsetArgs,
    table: &KnotTable,
) -> Result<BjRecord, CliError> {
    let entry = table
        .get(&a.knot)
        .ok_or_else(|| BjError::UnknownKnot(a.knot.clone()))?;
    let policy = if a.mark_gaps { GapPolicy::Mark } else { GapPolicy::Fatal };
    let k = entry.crossing_number;
    let mut notes = Vec::new();
    let diagrams = if entry.is_composite() {
        let parts = entry
            .summands
            .iter()
            .map(|s| {
                let name = s.trim_end_matches('*');
                let n = table.get(name).ok_or_else(|| BjError::UnknownKnot(name.into()))?;
                let refs = enumerate_reference_diagrams(n.crossing_number, env.limits)?;
                Ok(minimal_diagrams_of(name, &refs, table, env.budget)?)
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        notes.push("composite-policy: connected sums of the summands' minimal diagrams".into());
        composite_minimal_diagrams(&a.knot, &parts[0], &parts[1], table, env.budget)?
    } else {
        let refs = if let Some(p) = &a.refs {
            let refs: ReferenceSet = read(env, p)?.parse()?;
            if refs.k != k {
                return Err(CliError::Usage(format!(
                    "reference set has k={} but {} has crossing number {k}",
                    refs.k, a.knot
                )));
            }
            notes.push(format!("reference diagrams from {}", p.display()));
            refs
        } else if k <= env.limits.max_k {
            enumerate_reference_diagrams(k, env.limits)?
        } else if let Some(fam) = fixtures::family(&a.knot) {
            let refs = ReferenceSet::from_shadows(k, &fam, env.limits.orbit_cap)?;
            notes.push(format!(
                "reference diagrams from the shadows of {} bundled diagrams: {}",
                fam.len(),
                refs.len()
            ));
            refs
        } else {
            return Err(CliError::Usage(format!(
                "{} has {k} crossings; enumeration stops at {}, pass --refs",
                a.knot, env.limits.max_k
            )));
        };
        minimal_diagrams_of(&a.knot, &refs, table, env.budget)?
    };
    if diagrams.is_empty() {
        return Err(BjError::NoMinimalDiagrams(a.knot.clone()).into());
    }
    let bj_set = bj_set_of(&diagrams, table, env.budget, policy)?;
    Ok(BjRecord {
        knot: a.knot.clone(),
        crossing_number: k,
        minimal_diagrams: diagrams,
        bj_set,
        notes,
    })
}

fn bjset(env: &mut Env, a: &BjsetArgs) -> Result<Output, CliError> {
    let table = load_table(env, &a.table)?;
    let rec = record_for(env, a, table)?;
    env.manifest.outcome.push(format!("bj_set {}", rec.bj_set.members.len()));
    Ok(Output {
        text: rec.to_string(),
        code: 0,
    })
}

fn ubjw(env: &mut Env, a: &UbjwArgs) -> Result<Output, CliError> {
    let table = load_table(env, &a.table)?;
    let ledger = FactLedger::bundled();
    let mut records = small_scale_records(a.nmax, table, env.budget, env.limits)?;
    let cx = Context::new(env.budget, env.limits);
    for f in &a.families {
        records.insert(f.clone(), checks::family_record(f, &cx)?);
    }
    let names: Vec<&str> = a.overrides.iter().map(String::as_str).collect();
    let overrides = overrides_from_ledger(ledger, &names)?;
    let weak = weak_bj_numbers(&records, table, &overrides, WeakOptions { lenient: a.lenient })?;
    let chain = check_lemma_chain(&records, &weak, ledger)?;
    env.manifest.outcome.push(format!("records {}", records.len()));
    env.manifest.outcome.push(format!("lemma chain holds {}", chain.holds()));
    let code = if weak.violations.is_empty() && chain.holds() { 0 } else { 1 };
    Ok(Output {
        text: format!("{weak}\n{chain}"),
        code,
    })
}

fn verify(env: &mut Env, a: &VerifyArgs) -> Result<Output, CliError> {
    let cx = Context::new(env.budget, env.limits);
    let outcomes = checks::run_checks(&cx, &a.only).map_err(CliError::Usage)?;
    let mut text = String::new();
    for o in &outcomes {
        eprintln!("{} ({:.2?}, limit {:?})", o.summary(), o.elapsed, o.limit);
        env.manifest.outcome.push(o.summary());
        let _ = write!(text, "{o}");
    }
    let worst = outcomes.iter().map(|o| o.status).max().unwrap_or(Status::Pass);
    let code = if outcomes.iter().any(|o| o.status == Status::Fail) {
        1
    } else if worst == Status::Gap {
        2
    } else {
        0
    };
    Ok(Output { text, code })
}
