//! Command-line front end.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{Criterion, Family};
use crate::ci::CompleteIntersection;
use crate::classify::Behavior;
use crate::cover::CoverSpec;
use crate::enumerate::{enumerate_configs, Configuration, CoverFamily, EnumFilter};
use crate::error::{Error, Result};
use crate::families;
use crate::obstruction::{obstruction_report_with, ObstructionResult, DEFAULT_NODE_BUDGET};
use crate::output::{evaluate, render, Format, OutputRow, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_INPUT: i32 = 1;
pub const EXIT_BUDGET_EXCEEDED: i32 = 2;

#[derive(Debug, Parser, Serialize)]
#[command(name = "abcover", version, about = "Invariants and deformation behaviour of abelian covers of complete intersections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Md)]
    format: OutputFormat,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum OutputFormat {
    Md,
    Csv,
    Json,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Run every behaviour criterion on one configuration.
    Classify(ConfigArgs),
    /// Compute the numerical invariants of one configuration.
    Invariants(ConfigArgs),
    /// Decide whether a deformed embedding can be numerically a complete
    /// intersection.
    CiCheck(CiCheckArgs),
    /// Sweep a bounded configuration space.
    Enumerate(EnumerateArgs),
    /// Generate members of a named family.
    #[command(subcommand)]
    Family(FamilyCommand),
}

#[derive(Debug, Args, Serialize)]
struct ConfigArgs {
    /// Ambient projective dimension N.
    #[arg(long, allow_negative_numbers = true)]
    ambient: i64,
    /// Comma-separated multidegree.
    #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
    degrees: Vec<i64>,
    /// cyclic:n,k | product:n1,k1;n2,k2;... | split:t1,t2,...:ram
    #[arg(long)]
    cover: String,
}

#[derive(Debug, Args, Serialize)]
struct CiCheckArgs {
    #[command(flatten)]
    config: ConfigArgs,
    /// Smallest admissible degree of a complete-intersection candidate.
    #[arg(long, default_value_t = 2)]
    min_part: i64,
    /// Search node budget.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum FamilyArg {
    Cyclic,
    Znz2,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum BehaviorArg {
    EmbA,
    EmbB,
    Bir,
    Preserved,
    Halving,
}

impl BehaviorArg {
    fn behavior(self) -> Behavior {
        match self {
            BehaviorArg::EmbA => Behavior::EmbeddingA,
            BehaviorArg::EmbB => Behavior::EmbeddingB,
            BehaviorArg::Bir => Behavior::Birational,
            BehaviorArg::Preserved => Behavior::DegreePreserved,
            BehaviorArg::Halving => Behavior::HalvesDegree,
        }
    }

    fn criterion(self) -> Criterion {
        match self {
            BehaviorArg::EmbA => Criterion::EmbeddingA,
            BehaviorArg::EmbB => Criterion::EmbeddingB,
            BehaviorArg::Bir => Criterion::Birational,
            BehaviorArg::Preserved => Criterion::DegreePreserved,
            BehaviorArg::Halving => Criterion::Halving,
        }
    }
}

/// An inclusive integer range written `a..b` (or a single `a`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Span {
    lo: i64,
    hi: i64,
}

impl FromStr for Span {
    type Err = String;

    fn from_str(text: &str) -> std::result::Result<Self, String> {
        let parse = |x: &str| x.trim().parse::<i64>().map_err(|_| format!("'{x}' is not an integer"));
        let (lo, hi) = match text.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let v = parse(text)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(Span { lo, hi })
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl Serialize for Span {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Args, Serialize)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Keep only configurations with this behaviour (default: all).
    #[arg(long, value_enum)]
    behavior: Option<BehaviorArg>,
    #[arg(long, allow_hyphen_values = true)]
    m_range: Span,
    #[arg(long, allow_hyphen_values = true)]
    s_range: Span,
    /// Orders n of the leading cyclic factor.
    #[arg(long, default_value = "2..5")]
    n_range: Span,
    #[arg(long, allow_hyphen_values = true)]
    ambient_range: Option<Span>,
    #[arg(long, default_value_t = 2)]
    k: i64,
    #[arg(long, default_value_t = 2)]
    l: i64,
    /// Also keep covers whose smallest twist is 1.
    #[arg(long)]
    all_series: bool,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum FamilyCommand {
    /// Codimension-three family with N = 9k/2.
    Codim3 {
        #[arg(long)]
        k: i64,
    },
    /// Family with m/N = a/b.
    Rational {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        l: i64,
    },
    /// Family whose embedded deformations are never complete intersections.
    Half {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        m: i64,
    },
    /// All configurations with fixed parameters satisfying a criterion.
    Recipe {
        #[arg(long, value_enum)]
        criterion: BehaviorArg,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        s: i64,
        #[arg(long)]
        ambient: i64,
        #[arg(long, default_value_t = 2)]
        k: i64,
        #[arg(long)]
        l: Option<i64>,
    },
}

fn parse_config(args: &ConfigArgs) -> Result<(CompleteIntersection, CoverSpec)> {
    let ci = CompleteIntersection::new(args.ambient, &args.degrees)?;
    let spec: CoverSpec = args.cover.parse()?;
    Ok((ci, spec))
}

fn u64_span(span: Span, name: &str) -> Result<std::ops::RangeInclusive<u64>> {
    if span.lo < 0 {
        return Err(Error::InvalidParameter(format!("{name} range must be nonnegative")));
    }
    Ok(span.lo as u64..=span.hi as u64)
}

fn execute(command: &Command) -> Result<Vec<Configuration>> {
    Ok(match command {
        Command::Classify(args) | Command::Invariants(args) => {
            let (ci, spec) = parse_config(args)?;
            vec![evaluate(ci, spec)]
        }
        Command::CiCheck(args) => {
            let (ci, spec) = parse_config(&args.config)?;
            if args.min_part < 1 {
                return Err(Error::InvalidParameter(format!("min-part {} < 1", args.min_part)));
            }
            let obstruction = obstruction_report_with(&ci, &spec, args.min_part, args.budget);
            let mut config = evaluate(ci, spec);
            config.obstruction = obstruction;
            vec![config]
        }
        Command::Enumerate(args) => {
            let family = match args.family {
                FamilyArg::Cyclic => CoverFamily::SimpleCyclic,
                FamilyArg::Znz2 => CoverFamily::ZnZ2,
            };
            let filter = EnumFilter {
                family,
                n_range: u64_span(args.n_range, "n")?,
                k_range: args.k..=args.k,
                l_range: args.l..=args.l,
                m_range: args.m_range.lo..=args.m_range.hi,
                ambient_range: args.ambient_range.map(|r| r.lo..=r.hi),
                s_range: args.s_range.lo..=args.s_range.hi,
                behaviors: args.behavior.map(|b| vec![b.behavior()]).unwrap_or_default(),
                require_complete_series: !args.all_series,
                dedupe: true,
            };
            enumerate_configs(&filter)?.collect()
        }
        Command::Family(FamilyCommand::Codim3 { k }) => vec![families::family_codim3_limit1(*k)?],
        Command::Family(FamilyCommand::Rational { a, b, k, l }) => {
            vec![families::family_rational_limit(*a, *b, *k, *l)?]
        }
        Command::Family(FamilyCommand::Half { n, m }) => vec![families::family_half_limit(*n, *m)?],
        Command::Family(FamilyCommand::Recipe { criterion, family, m, n, s, ambient, k, l }) => {
            let family = match family {
                FamilyArg::Cyclic => Family::SimpleCyclic,
                FamilyArg::Znz2 => Family::ZnZ2,
            };
            families::family_recipe(criterion.criterion(), family, *m, *n, *s, *ambient, *k, *l)?
        }
    })
}

/// Runs the command line `argv` (program name first), writing results to
/// `stdout` (or `--out`) and diagnostics to `stderr`. Returns the exit code.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_INVALID_INPUT
                }
            };
        }
    };
    let configs = match execute(&cli.command) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_INVALID_INPUT;
        }
    };
    let format = match cli.format {
        OutputFormat::Md => Format::Markdown,
        OutputFormat::Csv => Format::Csv,
        OutputFormat::Json => Format::Json,
    };
    let report = Report {
        query: serde_json::to_value(&cli.command).expect("arguments are serialisable"),
        rows: configs.iter().map(OutputRow::from).collect(),
    };
    let text = render(format, &report);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| format!("cannot write output: {e}")),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return EXIT_INVALID_INPUT;
    }
    let exhausted = configs
        .iter()
        .filter(|c| c.obstruction.result == ObstructionResult::SearchBudgetExceeded)
        .count();
    if exhausted > 0 {
        let _ = writeln!(stderr, "error: search budget exceeded on {exhausted} configuration(s)");
        return EXIT_BUDGET_EXCEEDED;
    }
    EXIT_OK
}

/// Runs against the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
