//! Command-line front end: parses K(x) expressions and σ-group spec files,
//! dispatches to the classifiers, decomposition and verdict engines, and
//! prints verdicts as text or bit-stable JSON certificates.
//!
//! Exit codes: 0 for any produced verdict (including NotFull,
//! NotRealizable and Unknown), 2 for input errors (parse failures,
//! inputs outside Q(i), invalid parameters), 3 when a Groebner computation
//! exceeds its resource budget. The deadline for Groebner jobs comes from
//! `--deadline-ms` or the SGX_DEADLINE_MS environment variable
//! (default 30000).

pub mod certificate;
pub mod expr;
pub mod specfile;

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Value};
use sgx_core::groebner::Budget;
use sgx_core::partfrac::partial_fractions;
use sgx_core::realize::verdict;
use sgx_core::sgroups::{full_algebraic, GroupName, SigmaGroupSpec};
use sgx_core::shiftrel::{classify_cyclic, classify_ga, classify_gm};
use std::io::Write;
use std::path::PathBuf;

pub const DEFAULT_DEADLINE_MS: u64 = 30_000;

#[derive(Parser, Debug)]
#[command(
    name = "sgx",
    version,
    about = "Exact sigma-Galois group classification and realizability verdicts over C(x) \
             with the shift x -> x+1",
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit a JSON certificate instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Wall-clock cap in milliseconds for Groebner computations
    /// (overrides SGX_DEADLINE_MS; default 30000).
    #[arg(long, global = true)]
    deadline_ms: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide the sigma-Galois group of a building-block equation.
    Classify {
        #[command(subcommand)]
        which: ClassifyCommand,
    },
    /// Partial fraction decomposition over Q(i).
    Pf {
        /// The rational function to decompose.
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// Realizability verdict for a sigma-group.
    #[command(group(ArgGroup::new("target").required(true).args(["group", "spec"])))]
    Realize(RealizeArgs),
    /// Predicates and truncation dimensions of sigma-group specs.
    Group {
        #[command(subcommand)]
        which: GroupCommand,
    },
}

#[derive(Args, Debug)]
struct RealizeArgs {
    /// A named algebraic group: ga, gm, sl2, gl3, mu6, cyclic4, torus2, u3.
    #[arg(long)]
    group: Option<String>,
    /// A spec file (JSON) describing the sigma-group.
    #[arg(long)]
    spec: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum ClassifyCommand {
    /// Additive block delta(y) = a.
    Ga {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Multiplicative block delta(y) = a·y.
    Gm {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Cyclic block y^d = b.
    Cyclic {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        d: u32,
    },
}

#[derive(Subcommand, Debug)]
enum GroupCommand {
    /// Krull dimension of the order-i truncated ideal.
    Dim {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        order: usize,
    },
    /// Whether sigma acts injectively on the coordinate ring.
    Reduced {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Whether the group of sigma-connected components is trivial.
    Connected {
        #[arg(long)]
        spec: PathBuf,
    },
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Budget(String),
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Internal(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Budget(m) | CliError::Internal(m) => m,
        }
    }
}

fn from_core(err: sgx_core::Error) -> CliError {
    match err {
        sgx_core::Error::ResourceBudgetExceeded => CliError::Budget(err.to_string()),
        sgx_core::Error::ClassifierMismatch(_) => CliError::Internal(err.to_string()),
        _ => CliError::Input(err.to_string()),
    }
}

struct CommandResult {
    text: String,
    json: Value,
}

fn parse_input(label: &str, text: &str) -> Result<sgx_core::ratfunc::RatFunc, CliError> {
    expr::parse_ratfunc(text).map_err(|e| CliError::Input(format!("--{label}: {e}")))
}

fn load_spec(path: &PathBuf) -> Result<SigmaGroupSpec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    specfile::spec_from_json(&text).map_err(|e| CliError::Input(e.to_string()))
}

fn budget_from(deadline_ms: Option<u64>) -> Budget {
    let ms = deadline_ms
        .or_else(|| {
            std::env::var("SGX_DEADLINE_MS").ok().and_then(|v| v.parse::<u64>().ok())
        })
        .unwrap_or(DEFAULT_DEADLINE_MS);
    Budget::with_deadline_ms(ms)
}

fn dispatch(cli: &Cli) -> Result<CommandResult, CliError> {
    match &cli.command {
        Command::Classify { which } => match which {
            ClassifyCommand::Ga { a } => {
                let value = parse_input("a", a)?;
                let verdict = classify_ga(&value).map_err(from_core)?;
                let (vjson, witnesses, text) = certificate::ga_verdict_parts(&verdict);
                Ok(CommandResult {
                    text: format!("classify ga\na = {value}\n{text}"),
                    json: certificate::certificate(
                        "classify ga",
                        json!({ "a": value.to_string() }),
                        vjson,
                        witnesses,
                        &[certificate::CITE_GA_CRITERION],
                    ),
                })
            }
            ClassifyCommand::Gm { a } => {
                let value = parse_input("a", a)?;
                let verdict = classify_gm(&value).map_err(from_core)?;
                let (vjson, witnesses, text) = certificate::gm_verdict_parts(&verdict);
                Ok(CommandResult {
                    text: format!("classify gm\na = {value}\n{text}"),
                    json: certificate::certificate(
                        "classify gm",
                        json!({ "a": value.to_string() }),
                        vjson,
                        witnesses,
                        &[certificate::CITE_GM_CRITERION],
                    ),
                })
            }
            ClassifyCommand::Cyclic { b, d } => {
                let value = parse_input("b", b)?;
                let verdict = classify_cyclic(&value, *d).map_err(from_core)?;
                let (vjson, witnesses, text) = certificate::cyclic_verdict_parts(&verdict);
                Ok(CommandResult {
                    text: format!("classify cyclic\nb = {value}\nd = {d}\n{text}"),
                    json: certificate::certificate(
                        "classify cyclic",
                        json!({ "b": value.to_string(), "d": d }),
                        vjson,
                        witnesses,
                        &[certificate::CITE_CYCLIC_CRITERION],
                    ),
                })
            }
        },
        Command::Pf { f } => {
            let value = parse_input("f", f)?;
            let pf = partial_fractions(&value).map_err(from_core)?;
            let (vjson, text) = certificate::partial_fraction_parts(&pf);
            Ok(CommandResult {
                text: format!("pf\nf = {value}\n{text}"),
                json: certificate::certificate(
                    "pf",
                    json!({ "f": value.to_string() }),
                    vjson,
                    json!({}),
                    &[],
                ),
            })
        }
        Command::Realize(args) => {
            let (spec, input) = match (&args.group, &args.spec) {
                (Some(label), None) => {
                    let name = GroupName::parse(label)
                        .map_err(|e| CliError::Input(e.to_string()))?;
                    let spec = full_algebraic(name).map_err(from_core)?;
                    (spec, json!({ "group": name.to_string() }))
                }
                (None, Some(path)) => {
                    let spec = load_spec(path)?;
                    let spec_json = specfile::spec_to_json(&spec);
                    (spec, json!({ "spec": spec_json }))
                }
                _ => unreachable!("clap enforces exactly one of --group/--spec"),
            };
            let result = verdict(&spec).map_err(from_core)?;
            let (vjson, witnesses, citations, text) = certificate::realizability_parts(&result);
            Ok(CommandResult {
                text: format!("realize\n{text}"),
                json: certificate::certificate("realize", input, vjson, witnesses, &citations),
            })
        }
        Command::Group { which } => match which {
            GroupCommand::Dim { spec, order } => {
                let group = load_spec(spec)?;
                let mut ideal = group.truncation(*order);
                let budget = budget_from(cli.deadline_ms);
                let dim = ideal.dimension(&budget).map_err(from_core)?;
                Ok(CommandResult {
                    text: format!("group dim\norder = {order}\ndimension = {dim}"),
                    json: certificate::certificate(
                        "group dim",
                        json!({ "spec": specfile::spec_to_json(&group), "order": order }),
                        json!({ "dimension": dim }),
                        json!({}),
                        &[],
                    ),
                })
            }
            GroupCommand::Reduced { spec } => {
                let group = load_spec(spec)?;
                let decision = group.is_sigma_reduced();
                let (vjson, text) = certificate::decision_parts(decision);
                Ok(CommandResult {
                    text: format!("group reduced\n{text}"),
                    json: certificate::certificate(
                        "group reduced",
                        json!({ "spec": specfile::spec_to_json(&group) }),
                        vjson,
                        json!({}),
                        &[],
                    ),
                })
            }
            GroupCommand::Connected { spec } => {
                let group = load_spec(spec)?;
                let decision = group.is_sigma_connected();
                let (vjson, text) = certificate::decision_parts(decision);
                Ok(CommandResult {
                    text: format!("group connected\n{text}"),
                    json: certificate::certificate(
                        "group connected",
                        json!({ "spec": specfile::spec_to_json(&group) }),
                        vjson,
                        json!({}),
                        &[],
                    ),
                })
            }
        },
    }
}

/// Runs the CLI against explicit argv and output sinks; returns the exit
/// code. Verdicts (including negative ones) exit 0; input errors exit 2;
/// budget exhaustion exits 3.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let kind = e.kind();
            let rendered = e.render().to_string();
            return if kind == ErrorKind::DisplayHelp || kind == ErrorKind::DisplayVersion {
                let _ = write!(out, "{rendered}");
                0
            } else {
                let _ = write!(err, "{rendered}");
                2
            };
        }
    };
    match dispatch(&cli) {
        Ok(result) => {
            if cli.json {
                let _ = writeln!(out, "{}", result.json);
            } else {
                let _ = writeln!(out, "{}", result.text);
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}

/// Convenience for tests: run and capture stdout/stderr as strings.
pub fn run_captured<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(args, &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}
