//! Command-line front end for `magma-census`.
//!
//! Stdout carries data only; diagnostics go to stderr. Exit codes: 0 on
//! success, 1 when verification fails, 2 on usage errors, 3 when a guard or
//! cap is exceeded.

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::num::NonZeroUsize;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use magma_census::census::{self, CensusQuery, CensusResult, Method};
use magma_census::cycle_index::{cycle_index_recursive, induce, CycleIndexPoly};
use magma_census::oracle::{OracleLimits, DEFAULT_MAX_TABLES};
use magma_census::{Error, Variant};

pub mod verify;

pub const DEFAULT_SEED: u64 = 0x6d61_676d_6173;

pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "magma-census",
    version,
    about = "Count isomorphism classes of finite k-ary magmas"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Largest number of tables (n^(n^k)) brute force may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_TABLES,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_cells: u64,

    /// Largest n for which all n! permutations may be visited.
    #[arg(long, global = true, default_value_t = census::DEFAULT_PERM_GUARD)]
    pub perm_guard: usize,

    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true, env = "MAGMA_CENSUS_JOBS")]
    pub jobs: Option<NonZeroUsize>,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

impl RunConfig {
    pub fn limits(&self) -> OracleLimits {
        OracleLimits {
            max_tables: self.max_cells,
            max_n: self.perm_guard,
        }
    }

    pub fn workers(&self) -> usize {
        self.jobs
            .or_else(|| std::thread::available_parallelism().ok())
            .map_or(1, NonZeroUsize::get)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Correct,
    HarrisonGcd,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Correct => Variant::Correct,
            VariantArg::HarrisonGcd => Variant::HarrisonGcd,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Partition,
    Permutation,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Partition => Method::Partition,
            MethodArg::Permutation => Method::Permutation,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    /// `index value` per line; sequences only.
    Bfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Vary {
    N,
    K,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of isomorphism classes of k-ary magmas on an n-set.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "correct")]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "partition")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Counts over a range of n (fixed k), or of k (fixed n) with `--vary k`.
    Sequence {
        /// Arity, when varying n.
        #[arg(long, required_if_eq("vary", "n"))]
        k: Option<u32>,
        /// Ground-set size, when varying k.
        #[arg(long, required_if_eq("vary", "k"))]
        n: Option<usize>,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        #[arg(long, value_enum, default_value = "n")]
        vary: Vary,
        #[arg(long, value_enum, default_value = "correct")]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Print Z_n, or Z_n^[power] with `--power`.
    CycleIndex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        power: Option<u32>,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Run verification suites; exit 1 if any fails.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Vec<verify::Suite>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        k_max: Option<u32>,
        /// Formula variant checked by the structural suite.
        #[arg(long, value_enum, default_value = "correct")]
        variant: VariantArg,
    },
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::GuardExceeded { .. } | Error::TooLarge(_) => EXIT_GUARD,
            Error::GcdArityZero => EXIT_USAGE,
            _ => EXIT_VERIFY_FAILED,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        Self {
            code: EXIT_VERIFY_FAILED,
            message: e.to_string(),
        }
    }
}

#[derive(Serialize)]
struct CountJson<'a> {
    n: usize,
    k: u32,
    variant: &'a str,
    count: String,
}

impl<'a> From<&'a CensusResult> for CountJson<'a> {
    fn from(r: &'a CensusResult) -> Self {
        Self {
            n: r.query.n,
            k: r.query.k,
            variant: r.query.variant.name(),
            count: r.count.to_str_radix(10),
        }
    }
}

#[derive(Serialize)]
struct TermJson {
    coefficient: String,
    exponents: BTreeMap<u64, u64>,
    origin: Vec<u32>,
}

#[derive(Serialize)]
struct CycleIndexJson {
    n: usize,
    power: Option<u32>,
    terms: Vec<TermJson>,
}

fn cycle_index_json(z: &CycleIndexPoly, power: Option<u32>) -> CycleIndexJson {
    CycleIndexJson {
        n: z.n(),
        power,
        terms: z
            .terms()
            .iter()
            .map(|t| TermJson {
                coefficient: t.coefficient.to_string(),
                exponents: t.monomial.exponents().clone(),
                origin: t.monomial.origin().multiplicities().to_vec(),
            })
            .collect(),
    }
}

/// Runs a parsed command on a rayon pool sized by `--jobs`, writing data to
/// `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.config.workers())
        .build()
        .map_err(|e| CliError::usage(e.to_string()))?;
    let mut buffer = Vec::new();
    let result = pool.install(|| dispatch(cli, &mut buffer));
    out.write_all(&buffer)?;
    result
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let config = &cli.config;
    match &cli.command {
        Command::Count {
            n,
            k,
            variant,
            method,
            format,
        } => {
            let result = CensusQuery::new(*n, *k)
                .variant((*variant).into())
                .method((*method).into())
                .perm_guard(config.perm_guard)
                .run()?;
            match format {
                OutputFormat::Plain => writeln!(out, "{}", result.count)?,
                OutputFormat::Json => writeln!(out, "{}", to_json(&CountJson::from(&result))?)?,
                OutputFormat::Bfile => {
                    return Err(CliError::usage(
                        "--format bfile is only valid for `sequence`",
                    ))
                }
            }
        }
        Command::Sequence {
            k,
            n,
            from,
            to,
            vary,
            variant,
            format,
        } => {
            if from > to {
                return Err(CliError::usage(format!(
                    "empty range: --from {from} > --to {to}"
                )));
            }
            let variant = Variant::from(*variant);
            let results = match vary {
                Vary::N => census::sequence(
                    k.expect("required by clap"),
                    *from as usize,
                    *to as usize,
                    variant,
                )?,
                Vary::K => {
                    census::sequence_in_arity(n.expect("required by clap"), *from, *to, variant)?
                }
            };
            match format {
                OutputFormat::Plain => {
                    for r in &results {
                        writeln!(out, "{}", r.count)?;
                    }
                }
                OutputFormat::Bfile => {
                    for r in &results {
                        let index = match vary {
                            Vary::N => r.query.n as u64,
                            Vary::K => u64::from(r.query.k),
                        };
                        writeln!(out, "{index} {}", r.count)?;
                    }
                }
                OutputFormat::Json => {
                    let rows: Vec<CountJson> = results.iter().map(CountJson::from).collect();
                    writeln!(out, "{}", to_json(&rows)?)?;
                }
            }
        }
        Command::CycleIndex { n, power, format } => {
            let natural = cycle_index_recursive(*n);
            let z = match power {
                Some(k) => induce(&natural, *k)?,
                None => (*natural).clone(),
            };
            match format {
                OutputFormat::Plain => writeln!(out, "{z}")?,
                OutputFormat::Json => writeln!(out, "{}", to_json(&cycle_index_json(&z, *power))?)?,
                OutputFormat::Bfile => {
                    return Err(CliError::usage(
                        "--format bfile is only valid for `sequence`",
                    ))
                }
            }
        }
        Command::Verify {
            suite,
            n_max,
            k_max,
            variant,
        } => {
            let scope = verify::Scope {
                n_max: *n_max,
                k_max: *k_max,
                variant: (*variant).into(),
                limits: config.limits(),
                seed: config.seed,
            };
            let mut failed = false;
            for &s in suite {
                for report in verify::run(s, &scope)? {
                    failed |= !report.passed;
                    writeln!(out, "{report}")?;
                }
            }
            if failed {
                return Err(CliError {
                    code: EXIT_VERIFY_FAILED,
                    message: "verification failed".into(),
                });
            }
        }
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string(value).map_err(|e| CliError {
        code: EXIT_VERIFY_FAILED,
        message: e.to_string(),
    })
}
