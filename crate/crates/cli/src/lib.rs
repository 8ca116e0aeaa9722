//! Command-line front end for `macdonald-core`.
//!
//! ```text
//! macdonald compute --family G --index 1,0
//! macdonald eval --family K --index 0,0 --point atau
//! macdonald verify duality --n 2 --max-weight 3 --format json
//! macdonald suite --all
//! ```
//!
//! Exit codes: 0 on success, 1 when an identity fails, 2 on usage errors.

mod diskcache;
mod points;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use macdonald_core::combin::IntVector;
use macdonald_core::exactalg::{ExactError, FieldElem};
use macdonald_core::families::{Families, FamilyError, FamilyTag, MemberRecord};
use macdonald_core::identities::{default_shards, IdentityReport, Registry, Shard, Status};

pub use diskcache::DiskCache;
pub use points::parse_point;

/// Environment variable naming the on-disk member cache.
pub const CACHE_ENV: &str = "MACDONALD_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(name = "macdonald", version, about = "Exact interpolation Macdonald polynomials and Hecke identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a family member.
    Compute(MemberArgs),
    /// Evaluate a family member at a named point.
    Eval {
        #[command(flatten)]
        member: MemberArgs,
        /// atau, ainvtau, tau, bar:<v>, tilde:<v> or barinv:<v>
        #[arg(long)]
        point: String,
        /// Multiply every coordinate of the point by this scalar, e.g. `a`.
        #[arg(long)]
        scale: Option<String>,
    },
    /// Verify one identity over a sweep.
    Verify {
        identity: String,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Verify several identities over a sweep.
    Suite {
        /// Run every registered identity.
        #[arg(long, conflicts_with = "identities")]
        all: bool,
        identities: Vec<String>,
        #[command(flatten)]
        sweep: SweepArgs,
    },
}

#[derive(Args, Debug)]
struct MemberArgs {
    /// E, G, Gprime, K, Kprime, Kbar, O, R or Kplus; append `circ` for the
    /// inverted-parameter variant.
    #[arg(long, value_parser = parse_family)]
    family: FamilyTag,
    /// Comma-separated integers, e.g. `2,0,1`.
    #[arg(long, value_parser = parse_index, allow_hyphen_values = true)]
    index: IntVector,
    /// Number of variables; must match the index length when given.
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Restrict to a single shard with this many variables.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    max_weight: Option<i32>,
    #[arg(long, allow_hyphen_values = true)]
    min_entry: Option<i32>,
    #[arg(long, allow_hyphen_values = true)]
    max_entry: Option<i32>,
    /// Record wall-clock time in reports.
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_family(s: &str) -> Result<FamilyTag, String> {
    s.parse().map_err(|e: macdonald_core::families::UnknownFamily| e.to_string())
}

fn parse_index(s: &str) -> Result<IntVector, String> {
    s.parse().map_err(|_| format!("malformed index vector `{s}`; expected comma-separated integers"))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

/// Result of `eval --format json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalRecord {
    pub family: String,
    pub n: usize,
    pub index: Vec<i32>,
    pub point: String,
    pub scale: Option<String>,
    pub value: String,
}

/// Result of `suite --format json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub status: Status,
    pub reports: Vec<IdentityReport>,
}

/// The command-line application: an identity registry and an optional
/// on-disk member cache.
pub struct App {
    pub registry: Registry,
    pub cache_dir: Option<PathBuf>,
}

impl App {
    pub fn new(registry: Registry) -> Self {
        App { registry, cache_dir: None }
    }

    /// The standard registry, with the cache directory from the environment.
    pub fn from_env() -> Self {
        App {
            registry: Registry::standard(),
            cache_dir: std::env::var_os(CACHE_ENV).filter(|s| !s.is_empty()).map(PathBuf::from),
        }
    }

    /// Parses `argv` (including the program name), runs the command and
    /// returns the exit code.
    pub fn run<I, T>(&self, argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let cli = match Cli::try_parse_from(argv) {
            Ok(cli) => cli,
            Err(e) => {
                let code = if e.use_stderr() { 2 } else { 0 };
                let target: &mut dyn Write = if e.use_stderr() { err } else { out };
                let _ = write!(target, "{}", e.render());
                return code;
            }
        };
        let fam = Families::new();
        let disk = self.cache_dir.as_ref().map(|d| DiskCache::new(d.clone()));
        if let Some(disk) = &disk {
            for warning in disk.load(&fam) {
                let _ = writeln!(err, "warning: {warning}");
            }
        }
        let result = self.execute(cli.command, &fam);
        if let Some(disk) = &disk {
            if let Err(e) = disk.store(&fam) {
                let _ = writeln!(err, "warning: {e}");
            }
        }
        match result {
            Ok((text, dest, ok)) => match write_output(&text, dest.as_ref(), out) {
                Ok(()) => {
                    if ok {
                        0
                    } else {
                        1
                    }
                }
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    2
                }
            },
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                2
            }
        }
    }

    fn execute(&self, cmd: Command, fam: &Families) -> Result<(String, Option<PathBuf>, bool), CliError> {
        match cmd {
            Command::Compute(m) => {
                check_n(&m)?;
                let value = fam.member(m.family, &m.index)?;
                let text = match m.output.format {
                    Format::Text => value.render(),
                    Format::Json => json(&MemberRecord::new(m.family, &m.index, &value)),
                };
                Ok((text, m.output.output, true))
            }
            Command::Eval { member: m, point, scale } => {
                check_n(&m)?;
                let mut pt = parse_point(&point, m.index.n()).map_err(CliError::Usage)?;
                if let Some(s) = &scale {
                    let c = FieldElem::parse(s).map_err(|e| CliError::Usage(format!("bad --scale `{s}`: {e}")))?;
                    pt = pt.scaled(&c);
                }
                let value = fam.member(m.family, &m.index)?.eval(&pt)?;
                let text = match m.output.format {
                    Format::Text => value.render(),
                    Format::Json => json(&EvalRecord {
                        family: m.family.to_string(),
                        n: m.index.n(),
                        index: m.index.entries().to_vec(),
                        point,
                        scale,
                        value: value.render(),
                    }),
                };
                Ok((text, m.output.output, true))
            }
            Command::Verify { identity, sweep } => {
                let shards = shards(&sweep)?;
                let report = self.run_identity(&identity, fam, &shards, sweep.timings)?;
                let ok = report.passed();
                let text = match sweep.output.format {
                    Format::Text => report.render_text(),
                    Format::Json => json(&report),
                };
                Ok((text, sweep.output.output, ok))
            }
            Command::Suite { all, identities, sweep } => {
                let names: Vec<String> = if all {
                    self.registry.names().map(String::from).collect()
                } else if identities.is_empty() {
                    return Err(CliError::Usage("suite needs --all or at least one identity name".into()));
                } else {
                    identities
                };
                for name in &names {
                    self.known(name)?;
                }
                let shards = shards(&sweep)?;
                let reports = names
                    .iter()
                    .map(|name| self.run_identity(name, fam, &shards, sweep.timings))
                    .collect::<Result<Vec<_>, _>>()?;
                let passed = reports.iter().filter(|r| r.passed()).count();
                let ok = passed == reports.len();
                let text = match sweep.output.format {
                    Format::Text => {
                        let mut lines: Vec<String> = reports.iter().map(|r| r.render_text()).collect();
                        lines.push(format!("{passed}/{} identities passed", reports.len()));
                        lines.join("\n")
                    }
                    Format::Json => {
                        let status = if ok { Status::Pass } else { Status::Fail };
                        json(&SuiteReport { status, reports })
                    }
                };
                Ok((text, sweep.output.output, ok))
            }
        }
    }

    fn known(&self, name: &str) -> Result<(), CliError> {
        if self.registry.get(name).is_some() {
            return Ok(());
        }
        let names: Vec<&str> = self.registry.names().collect();
        Err(CliError::Usage(format!("unknown identity `{name}`; known: {}", names.join(", "))))
    }

    fn run_identity(
        &self,
        name: &str,
        fam: &Families,
        shards: &[Shard],
        timings: bool,
    ) -> Result<IdentityReport, CliError> {
        self.known(name)?;
        Ok(self.registry.run(name, fam, shards, timings).expect("registered"))
    }
}

fn check_n(m: &MemberArgs) -> Result<(), CliError> {
    match m.n {
        Some(n) if n != m.index.n() => {
            Err(CliError::Usage(format!("--n {n} does not match index ({}) of length {}", m.index, m.index.n())))
        }
        _ => Ok(()),
    }
}

/// Default shards with any overrides applied, or one shard for `--n`.
fn shards(s: &SweepArgs) -> Result<Vec<Shard>, CliError> {
    let mut out = match s.n {
        None => default_shards(),
        Some(0) => return Err(CliError::Usage("--n must be positive".into())),
        Some(n) => {
            let base = default_shards().into_iter().find(|d| d.n == n).unwrap_or(Shard {
                n,
                min_entry: 0,
                max_entry: 2,
                max_weight: 3,
            });
            vec![base]
        }
    };
    for shard in &mut out {
        if let Some(w) = s.max_weight {
            shard.max_weight = w;
        }
        if let Some(lo) = s.min_entry {
            shard.min_entry = lo;
        }
        if let Some(hi) = s.max_entry {
            shard.max_entry = hi;
        }
        if shard.max_weight < 0 {
            return Err(CliError::Usage("--max-weight must be nonnegative".into()));
        }
        if shard.min_entry > shard.max_entry {
            return Err(CliError::Usage("--min-entry exceeds --max-entry".into()));
        }
    }
    Ok(out)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn write_output(text: &str, dest: Option<&PathBuf>, out: &mut dyn Write) -> Result<(), CliError> {
    match dest {
        Some(path) => {
            std::fs::write(path, format!("{text}\n")).map_err(|source| CliError::Io { path: path.clone(), source })
        }
        None => writeln!(out, "{text}").map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}
