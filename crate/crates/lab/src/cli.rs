//! Command-line interface: argument parsing, report output and exit codes.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ginlab_core::poly::MonomialOrder;
use serde::Serialize;

use crate::commands::*;
use crate::report::{StrataMode, Verdict};

/// Successful run; every embedded property check held.
pub const EXIT_OK: u8 = 0;
/// Parse or validation error.
pub const EXIT_INVALID: u8 = 2;
/// A property check inside the command failed.
pub const EXIT_PROPERTY: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "ginlab", version, about = "Generic initial ideals, Hilbert points and degeneracy experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generic initial ideal of one ideal.
    Gin(GinArgs),
    /// Group a family of ideals by generic or plain initial ideal.
    Strata(StrataArgs),
    /// Exhaustive check of the reverse-lexicographic segment lemma.
    RevlexLemma(RevlexArgs),
    /// Vanishing of the top Plücker coordinate on sampled Hilbert points.
    Degeneracy(DegeneracyArgs),
    /// Gotzmann expansion, admissibility and lex ideal of a Hilbert polynomial.
    HilbInfo(HilbArgs),
}

#[derive(Debug, Args)]
pub struct Output {
    /// Also write the JSON report to this path.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IdealInput {
    /// Generators separated by `;`.
    #[arg(long, conflicts_with = "file")]
    pub ideal: Option<String>,
    /// File with one polynomial per line; `#` starts a comment.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GinArgs {
    #[command(flatten)]
    pub input: IdealInput,
    /// Projective dimension; inferred from the variables used when omitted.
    #[arg(long)]
    pub n: Option<usize>,
    /// `lex`, `grevlex` or `weight:w0,..,wn[:lex|:grevlex]`.
    #[arg(long, default_value = "grevlex")]
    pub order: MonomialOrder,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 5)]
    pub trials: usize,
    /// Entries of the random coordinate changes lie in [-bound, bound].
    #[arg(long, default_value_t = 100)]
    pub bound: u32,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct StrataArgs {
    /// Ideals separated by `|`, generators within an ideal by `;`.
    #[arg(long, conflicts_with_all = ["file", "random_degrees"])]
    pub members: Option<String>,
    /// File with one ideal per line, generators separated by `;`.
    #[arg(long, conflicts_with = "random_degrees")]
    pub file: Option<PathBuf>,
    /// Degrees of the random forms generating each member, e.g. `2,3`.
    #[arg(long, value_delimiter = ',')]
    pub random_degrees: Option<Vec<u32>>,
    /// Number of random members.
    #[arg(long, default_value_t = 50)]
    pub count: usize,
    /// Coefficient bound for random members and coordinate changes.
    #[arg(long, default_value_t = 100)]
    pub bound: u32,
    #[arg(long, value_enum, default_value = "gin")]
    pub mode: StrataMode,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value = "grevlex")]
    pub order: MonomialOrder,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 5)]
    pub trials: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct RevlexArgs {
    #[arg(long)]
    pub n: usize,
    /// Largest segment degree.
    #[arg(long = "m", alias = "m-max")]
    pub m_max: u32,
    /// Largest multiplier degree.
    #[arg(long = "l", alias = "l-max", default_value_t = 2)]
    pub l_max: u32,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Kind {
    Hypersurface,
    Points,
}

#[derive(Debug, Args)]
pub struct DegeneracyArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[arg(long)]
    pub n: usize,
    /// Hypersurface degree.
    #[arg(long, required_if_eq("kind", "hypersurface"))]
    pub d: Option<u32>,
    /// Number of points.
    #[arg(long, required_if_eq("kind", "points"))]
    pub count: Option<usize>,
    #[arg(long)]
    pub m: u32,
    #[arg(long, default_value_t = 50)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub bound: u32,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct HilbArgs {
    /// Polynomial in `m`, e.g. `2*m + 1` or `C(m+2,2) - C(m,2)`.
    #[arg(allow_hyphen_values = true)]
    pub polynomial: String,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[command(flatten)]
    pub output: Output,
}

fn read(path: &PathBuf) -> CommandResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CommandError::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn ideal_text(input: &IdealInput) -> CommandResult<String> {
    match (&input.ideal, &input.file) {
        (Some(text), _) => Ok(text.clone()),
        (None, Some(path)) => read(path),
        (None, None) => Err(CommandError::Invalid("pass --ideal or --file".into())),
    }
}

fn strata_family(a: &StrataArgs) -> CommandResult<Family> {
    if let Some(degrees) = &a.random_degrees {
        return Ok(Family::RandomForms {
            degrees: degrees.clone(),
            count: a.count,
            bound: a.bound,
        });
    }
    let members: Vec<String> = match (&a.members, &a.file) {
        (Some(text), _) => text.split('|').map(str::to_string).collect(),
        (None, Some(path)) => read(path)?
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim().to_string())
            .collect(),
        (None, None) => return Err(CommandError::Invalid("pass --members, --file or --random-degrees".into())),
    };
    Ok(Family::Inline(
        members.into_iter().filter(|m| !m.trim().is_empty()).collect(),
    ))
}

/// Serializes the report, writes it to `--out` when given and echoes it.
fn emit<R: Serialize + Verdict>(report: &R, output: &Output) -> CommandResult<u8> {
    let mut json = serde_json::to_string_pretty(report).expect("reports serialize");
    json.push('\n');
    if let Some(path) = &output.out {
        std::fs::write(path, &json)
            .map_err(|e| CommandError::Invalid(format!("cannot write {}: {e}", path.display())))?;
    }
    print!("{json}");
    Ok(if report.property_holds() { EXIT_OK } else { EXIT_PROPERTY })
}

fn dispatch(command: &Command) -> CommandResult<u8> {
    match command {
        Command::Gin(a) => {
            let (n, ideal) = parse_homogeneous(&ideal_text(&a.input)?, a.n)?;
            let params = GinParams {
                n,
                order: a.order.clone(),
                seed: a.seed,
                trials: a.trials,
                bound: a.bound,
            };
            emit(&cmd_gin(&ideal, &params)?, &a.output)
        }
        Command::Strata(a) => {
            let params = StrataParams {
                n: a.n,
                order: a.order.clone(),
                seed: a.seed,
                trials: a.trials,
                bound: a.bound,
                mode: a.mode,
            };
            emit(&cmd_strata(&strata_family(a)?, &params)?, &a.output)
        }
        Command::RevlexLemma(a) => emit(&cmd_revlex_lemma(a.n, a.m_max, a.l_max)?, &a.output),
        Command::Degeneracy(a) => {
            let kind = match a.kind {
                Kind::Hypersurface => DegeneracyKind::Hypersurface {
                    n: a.n,
                    d: a.d.expect("required by clap"),
                },
                Kind::Points => DegeneracyKind::Points {
                    n: a.n,
                    count: a.count.expect("required by clap"),
                },
            };
            let params = DegeneracyParams {
                kind,
                m: a.m,
                samples: a.samples,
                seed: a.seed,
                bound: a.bound,
            };
            emit(&cmd_degeneracy(&params)?, &a.output)
        }
        Command::HilbInfo(a) => emit(&cmd_hilb_info(&a.polynomial, a.n)?, &a.output),
    }
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli) -> ExitCode {
    match dispatch(&cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("ginlab: {e}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}
