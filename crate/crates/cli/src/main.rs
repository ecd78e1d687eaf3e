//! `qhl` — tables, expansions, conjecture scans and tableaux tools for the
//! Q-Hall-Littlewood functions.
//!
//! Exit codes: 0 success, 1 finding (conjecture violation under --strict,
//! or an infeasible rank search), 2 usage error, 3 internal inconsistency
//! (cross-algorithm mismatch).

mod checks;
mod render;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qhl::foundations::{Partition, StrictPartition};
use qhl::operators::compose_g;
use qhl::parabolic::{l_parabolic, parabolic_g, PartitionSequence};
use qhl::shifted_tableaux::{classes, enumerate, rank_search, ranks_dot, ranks_latex};

/// Largest table weight the CLI will compute.
const MAX_WEIGHT: u32 = 14;

#[derive(Parser)]
#[command(name = "qhl", version, about = "Q-Hall-Littlewood functions, Q-Kostka tables and marked shifted tableaux")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum TableFormat {
    Latex,
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum RankFormat {
    #[default]
    Text,
    Dot,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Suite {
    Positivity,
    Degree,
    Divisibility,
    Commutation,
    Tableaux,
    Parabolic,
    Classical,
    #[default]
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Table of Q-Kostka polynomials L_{lambda,mu}(q) for one weight
    Table {
        #[arg(long)]
        weight: u32,
        #[arg(long, value_enum, default_value_t)]
        format: TableFormat,
        /// Emit 2^{l(lambda)-l(mu)}·L entries (integral by the divisibility theorem)
        #[arg(long)]
        scaled: bool,
        /// Cache directory (also via QHL_CACHE_DIR); caching is off without it
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Expand G_mu[X;q] in the Schur Q-basis
    Expand {
        /// Strict partition, e.g. "3,2,1"
        mu: String,
    },
    /// Expand a parabolic G_{mu*}[X;q]; blocks separated by ';', e.g. "3,1;2;1"
    Parabolic {
        mu_star: String,
        /// Print only the coefficient of this Q_lambda
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Run a property/conjecture suite
    Check {
        #[arg(long, value_enum, default_value_t)]
        suite: Suite,
        #[arg(long, default_value_t = 8)]
        max_weight: u32,
        /// Exit nonzero on conjecture findings, not only on broken theorems
        #[arg(long)]
        strict: bool,
    },
    /// Enumerate marked shifted tableaux of a shape and content
    Tableaux {
        shape: String,
        content: String,
        /// Allow marked letters on the diagonal
        #[arg(long)]
        allow_marked_diagonal: bool,
        #[arg(long)]
        count_only: bool,
    },
    /// Mark-erasure classes of a shape and content
    Classes { shape: String, content: String },
    /// Rank-statistic diagram over all shapes of one content
    Ranks {
        content: String,
        #[arg(long, value_enum, default_value_t)]
        format: RankFormat,
    },
    /// Kostka-Foulkes polynomial, tableau count and charge values
    Classical { lambda: String, mu: String },
}

/// CLI failure carrying its exit code.
pub enum Failure {
    Usage(String),
    Finding(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Finding(_) => 1,
            Failure::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Finding(m) | Failure::Internal(m) => m,
        }
    }
}

fn parse_parts(s: &str) -> Result<Vec<u32>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| Failure::Usage(format!("cannot parse part {p:?} in {s:?}")))
        })
        .collect()
}

fn parse_strict(s: &str) -> Result<StrictPartition, Failure> {
    StrictPartition::new(parse_parts(s)?)
        .map_err(|e| Failure::Usage(format!("{s:?}: {e}")))
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    Partition::new(parse_parts(s)?).map_err(|e| Failure::Usage(format!("{s:?}: {e}")))
}

fn parse_sequence(s: &str) -> Result<PartitionSequence, Failure> {
    let blocks = s
        .split(';')
        .map(parse_strict)
        .collect::<Result<Vec<_>, _>>()?;
    PartitionSequence::new(blocks).map_err(|e| Failure::Usage(format!("{s:?}: {e}")))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Table { weight, format, scaled, cache_dir } => {
            if weight == 0 || weight > MAX_WEIGHT {
                return Err(Failure::Usage(format!(
                    "weight must be between 1 and {MAX_WEIGHT}, got {weight}"
                )));
            }
            let cache_dir = cache_dir.or_else(|| std::env::var_os("QHL_CACHE_DIR").map(Into::into));
            let doc = table::load_or_compute(weight, cache_dir.as_deref())?;
            print!("{}", table::render(&doc, format, scaled)?);
            Ok(0)
        }
        Command::Expand { mu } => {
            let mu = parse_strict(&mu)?;
            println!("{}", render::expansion(&compose_g(&mu)));
            Ok(0)
        }
        Command::Parabolic { mu_star, lambda } => {
            let ps = parse_sequence(&mu_star)?;
            match lambda {
                Some(l) => {
                    let lam = parse_strict(&l)?;
                    let c = l_parabolic(&lam, &ps)
                        .map_err(|e| Failure::Usage(e.to_string()))?;
                    println!("{c}");
                }
                None => println!("{}", render::expansion(&parabolic_g(&ps))),
            }
            Ok(0)
        }
        Command::Check { suite, max_weight, strict } => {
            if max_weight == 0 || max_weight > MAX_WEIGHT {
                return Err(Failure::Usage(format!(
                    "max-weight must be between 1 and {MAX_WEIGHT}, got {max_weight}"
                )));
            }
            let outcome = checks::run(suite, max_weight);
            for line in &outcome.lines {
                println!("{line}");
            }
            if outcome.violations > 0 {
                return Err(Failure::Internal(format!(
                    "{} violations of proved properties",
                    outcome.violations
                )));
            }
            if strict && outcome.findings > 0 {
                return Err(Failure::Finding(format!(
                    "{} conjecture findings under --strict",
                    outcome.findings
                )));
            }
            Ok(0)
        }
        Command::Tableaux { shape, content, allow_marked_diagonal, count_only } => {
            let shape = parse_strict(&shape)?;
            let content = parse_partition(&content)?;
            let ts = enumerate(&shape, &content, !allow_marked_diagonal)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            println!("{} tableaux of shape {shape} and content {content}", ts.len());
            if !count_only {
                for t in &ts {
                    println!("{}", render::tableau(t));
                }
            }
            Ok(0)
        }
        Command::Classes { shape, content } => {
            let shape = parse_strict(&shape)?;
            let content = parse_partition(&content)?;
            let cls = classes(&shape, &content).map_err(|e| Failure::Usage(e.to_string()))?;
            println!("{} classes of shape {shape} and content {content}", cls.len());
            for c in &cls {
                println!("size {}:", c.size);
                print!("{}", render::class(c));
            }
            Ok(0)
        }
        Command::Ranks { content, format } => {
            let content = parse_strict(&content)?;
            let rs = rank_search(&content);
            match format {
                RankFormat::Text => print!("{}", render::ranks_text(&rs)),
                RankFormat::Dot => print!("{}", ranks_dot(&rs)),
                RankFormat::Latex => print!("{}", ranks_latex(&rs)),
            }
            if !rs.is_feasible() {
                return Err(Failure::Finding(format!(
                    "no consistent rank assignment exists for content {content}"
                )));
            }
            Ok(0)
        }
        Command::Classical { lambda, mu } => {
            let lambda = parse_partition(&lambda)?;
            let mu = parse_partition(&mu)?;
            let k = qhl::classical::kostka_foulkes(&lambda, &mu).map_err(|e| match e {
                qhl::Error::InternalMismatch(m) => Failure::Internal(m),
                other => Failure::Usage(other.to_string()),
            })?;
            let ts = qhl::classical::cst_enumerate(&lambda, &mu)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let mut charges: Vec<u32> = ts.iter().map(qhl::classical::charge).collect();
            charges.sort_unstable();
            println!("K[{lambda},{mu}] = {k}");
            println!("column-strict tableaux: {}", ts.len());
            println!("charges: {charges:?}");
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
