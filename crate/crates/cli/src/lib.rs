//! Command-line front end: ring and polynomial parsing, problem files and report output.

pub mod parse;
pub mod problem;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use idealpow_core::constructions::{
    analytic_spread, form_algebra_probe, form_algebra_row, form_ideal, growth_row, growth_table, rees_presentation,
    sharp_ideal, symbolic_power, veronese_probe, veronese_row, GrowthTable, ProbeReport,
};
use idealpow_core::ideal_ops::{colon_ideal, power, saturate_ideal};
use idealpow_core::invariants::{hilbert_series, local_colength, quotient_length};
use idealpow_core::{initial_ideal, Ideal, MonomialIdeal};
use rayon::prelude::*;

use crate::problem::{parse_problem, Problem, ProblemError};
use crate::report::Format;

#[derive(Debug, Parser)]
#[command(name = "idealpow", version, about = "Exact computations with powers, saturations and form ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Problem file declaring the ring and named ideals
    #[arg(long)]
    pub file: PathBuf,
    /// Name of the main ideal
    #[arg(long, default_value = "I")]
    pub ideal: String,
    /// Name of the auxiliary ideal J (defaults to the ideal of all variables)
    #[arg(long)]
    pub aux: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// I^k
    Power {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        k: u32,
    },
    /// I : J
    Colon {
        #[command(flatten)]
        input: Input,
    },
    /// I : J^inf
    Saturate {
        #[command(flatten)]
        input: Input,
    },
    /// I^k : J^inf
    Symbolic {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        k: u32,
    },
    /// The ideal of leading forms of I^k
    FormIdeal {
        #[command(flatten)]
        input: Input,
        #[arg(short, default_value_t = 1)]
        k: u32,
    },
    /// The deformation ideal I# in the ring extended by s
    Sharp {
        #[command(flatten)]
        input: Input,
    },
    /// Analytic spread of I
    Spread {
        #[command(flatten)]
        input: Input,
    },
    /// Presentation ideal of the Rees algebra of I
    Rees {
        #[command(flatten)]
        input: Input,
    },
    /// Colength of I at the origin, or length of J/I when --aux is given
    Length {
        #[command(flatten)]
        input: Input,
    },
    /// Lengths of (I^k : J^inf)/I^k for k = 1..kmax
    Growth {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        e: u32,
        #[arg(long)]
        kmax: u32,
    },
    /// Compares (I^d : J^inf)^k with I^(dk) : J^inf for k = 2..kmax
    VeroneseProbe {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        d: u32,
        #[arg(long)]
        kmax: u32,
    },
    /// Looks for new generators of the form algebra in degrees 2..kmax
    FormProbe {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        kmax: u32,
    },
    /// Hilbert series of the initial ideal of I
    Hilbert {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Problem(#[from] ProblemError),
    #[error("no ideal named `{0}` in the problem file")]
    UnknownIdeal(String),
    #[error("IDEALPOW_THREADS must be a positive integer")]
    Threads,
    #[error("{0}")]
    Math(#[from] idealpow_core::Error),
}

impl CliError {
    /// 1 for mathematical failures, 2 for malformed input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(_) => 1,
            _ => 2,
        }
    }
}

struct Loaded {
    problem: Problem,
    main: Ideal,
    aux: Option<Ideal>,
}

impl Loaded {
    fn aux_or_maximal(&self) -> Ideal {
        self.aux.clone().unwrap_or_else(|| Ideal::maximal(&self.problem.ring))
    }
}

fn load(input: &Input) -> Result<Loaded, CliError> {
    let text = std::fs::read_to_string(&input.file).map_err(|source| CliError::Io { path: input.file.clone(), source })?;
    let problem = parse_problem(&text)?;
    let get = |name: &str| problem.ideal(name).cloned().ok_or_else(|| CliError::UnknownIdeal(name.to_string()));
    let main = get(&input.ideal)?;
    let aux = input.aux.as_deref().map(get).transpose()?;
    Ok(Loaded { problem, main, aux })
}

/// Thread count for per-k fan-out, from `IDEALPOW_THREADS`.
fn thread_count() -> Result<Option<usize>, CliError> {
    match std::env::var("IDEALPOW_THREADS") {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Threads),
        },
    }
}

/// Computes one row per k, in parallel unless a single thread is requested; rows come
/// back in k order.
fn rows_per_k<T: Send>(
    ks: std::ops::RangeInclusive<u32>,
    row: impl Fn(u32) -> idealpow_core::Result<T> + Sync,
) -> Result<Vec<T>, CliError> {
    let threads = thread_count()?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads.unwrap_or(0)).build().expect("thread pool");
    let rows: Vec<idealpow_core::Result<T>> = pool.install(|| ks.into_par_iter().map(&row).collect());
    Ok(rows.into_iter().collect::<idealpow_core::Result<Vec<T>>>()?)
}

fn single_threaded() -> Result<bool, CliError> {
    Ok(thread_count()? == Some(1))
}

/// Runs a parsed command and returns its rendered output.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    thread_count()?;
    Ok(match &cli.command {
        Command::Power { input, k } => {
            let l = load(input)?;
            report::ideal(&power(&l.main, *k).with_basis(), input.format)
        }
        Command::Colon { input } => {
            let l = load(input)?;
            report::ideal(&colon_ideal(&l.main, &l.aux_or_maximal())?, input.format)
        }
        Command::Saturate { input } => {
            let l = load(input)?;
            report::ideal(&saturate_ideal(&l.main, &l.aux_or_maximal())?, input.format)
        }
        Command::Symbolic { input, k } => {
            let l = load(input)?;
            report::ideal(&symbolic_power(&l.main, &l.aux_or_maximal(), *k)?, input.format)
        }
        Command::FormIdeal { input, k } => {
            let l = load(input)?;
            report::ideal(&form_ideal(&power(&l.main, *k))?, input.format)
        }
        Command::Sharp { input } => {
            let l = load(input)?;
            report::ideal(&sharp_ideal(&l.main)?, input.format)
        }
        Command::Spread { input } => {
            let l = load(input)?;
            report::number("analytic_spread", analytic_spread(&l.main)? as u64, input.format)
        }
        Command::Rees { input } => {
            let l = load(input)?;
            report::ideal(&rees_presentation(&l.main)?, input.format)
        }
        Command::Length { input } => {
            let l = load(input)?;
            match &l.aux {
                None => report::number("length", local_colength(&l.main)?, input.format),
                Some(outer) => match quotient_length(&l.main, outer)?.finite() {
                    Some(n) => report::number("length", n, input.format),
                    None => report::number("length", "infinite", input.format),
                },
            }
        }
        Command::Growth { input, e, kmax } => {
            let l = load(input)?;
            let by = l.aux_or_maximal();
            let table = if single_threaded()? {
                growth_table(&l.main, &by, *e, *kmax)?
            } else {
                GrowthTable::of_saturations(*e, rows_per_k(1..=*kmax, |k| growth_row(&l.main, &by, *e, k))?)
            };
            report::growth(&table, input.format)
        }
        Command::VeroneseProbe { input, d, kmax } => {
            let l = load(input)?;
            let by = l.aux_or_maximal();
            let report = if single_threaded()? || *kmax < 2 {
                veronese_probe(&l.main, &by, *d, *kmax)?
            } else {
                ProbeReport::from_rows(rows_per_k(2..=*kmax, |k| veronese_row(&l.main, &by, *d, k))?)
            };
            report::probe(&report, input.format)
        }
        Command::FormProbe { input, kmax } => {
            let l = load(input)?;
            let report = if single_threaded()? || *kmax < 2 {
                form_algebra_probe(&l.main, *kmax)?
            } else {
                ProbeReport::from_rows(rows_per_k(2..=*kmax, |k| form_algebra_row(&l.main, k))?)
            };
            report::probe(&report, input.format)
        }
        Command::Hilbert { input } => {
            let l = load(input)?;
            let m = if l.main.is_zero() { MonomialIdeal::zero(&l.problem.ring) } else { initial_ideal(&l.main)? };
            report::hilbert(&hilbert_series(&m), input.format)
        }
    })
}
