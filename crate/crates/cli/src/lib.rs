//! Command-line front end for the folded prime enumerator.

pub mod commands;
pub mod render;
pub mod report;

use std::collections::BTreeMap;
use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};

use folded_prime::{EvalMode, IndicatorVariant, Schedule, Strategy};

use crate::commands::EvalConfig;
use crate::report::{Payload, ReportDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_RANGE: i32 = 3;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScheduleArg {
    Sq,
    Lin,
}

impl From<ScheduleArg> for Schedule {
    fn from(s: ScheduleArg) -> Self {
        match s {
            ScheduleArg::Sq => Schedule::Square,
            ScheduleArg::Lin => Schedule::Linear,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Naive,
    Incremental,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    Gcd,
    Delta,
}

impl From<VariantArg> for IndicatorVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Gcd => IndicatorVariant::GcdForm,
            VariantArg::Delta => IndicatorVariant::DeltaForm,
        }
    }
}

#[derive(Debug, Clone, clap::Args)]
struct EvalArgs {
    #[arg(long, value_enum, default_value = "lin")]
    schedule: ScheduleArg,
    #[arg(long, value_enum, default_value = "incremental")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "gcd")]
    variant: VariantArg,
    /// Stop divisor scans at the first hit and the outer sum at the first zero step.
    #[arg(long)]
    early_exit: bool,
}

impl From<&EvalArgs> for EvalConfig {
    fn from(a: &EvalArgs) -> Self {
        EvalConfig {
            schedule: a.schedule.into(),
            mode: match a.mode {
                ModeArg::Naive => EvalMode::Naive,
                ModeArg::Incremental => EvalMode::Incremental,
            },
            variant: a.variant.into(),
            strategy: if a.early_exit {
                Strategy::EarlyExit
            } else {
                Strategy::Literal
            },
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "folded-prime",
    version,
    about = "Floor/gcd prime enumerator with oracle checks"
)]
struct Cli {
    /// Emit one JSON report document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print p(x+1) computed by the folded enumerator.
    NthPrime {
        x: u64,
        #[command(flatten)]
        eval: EvalArgs,
    },
    /// Tabulate f(x) against the sieve for x in [0, max].
    Table {
        #[arg(long, default_value_t = 19)]
        max: u64,
        #[command(flatten)]
        eval: EvalArgs,
        /// Evaluate rows in parallel.
        #[arg(long)]
        sweep: bool,
    },
    /// Show I(i), S(i) and A(i, x) for every i up to U(x).
    Trace {
        x: u64,
        #[arg(long, value_enum, default_value = "lin")]
        schedule: ScheduleArg,
    },
    /// Evaluate f(L) and certify it is a prime greater than L.
    RecordLift {
        l: u64,
        #[arg(long, value_enum, default_value = "lin")]
        schedule: ScheduleArg,
    },
    /// Count divisor tests and step floors and compare with the closed forms.
    Audit {
        #[arg(long, default_value_t = 2)]
        u_min: u64,
        #[arg(long, default_value_t = 50)]
        u_max: u64,
        #[arg(long, value_enum, default_value = "gcd")]
        variant: VariantArg,
    },
    /// Check the schedule inequalities against the sieve.
    Validate {
        #[arg(long, default_value_t = 10_000)]
        max: u64,
    },
    /// Run the signature, divergence, minimality and forward-count checks.
    Compare {
        #[arg(long, default_value_t = 100)]
        max: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::NthPrime { .. } => "nth-prime",
            Command::Table { .. } => "table",
            Command::Trace { .. } => "trace",
            Command::RecordLift { .. } => "record-lift",
            Command::Audit { .. } => "audit",
            Command::Validate { .. } => "validate",
            Command::Compare { .. } => "compare",
        }
    }

    fn run(&self) -> folded_prime::Result<ReportDocument> {
        match self {
            Command::NthPrime { x, eval } => commands::nth_prime_cmd(*x, eval.into()),
            Command::Table { max, eval, sweep } => commands::table_cmd(*max, eval.into(), *sweep),
            Command::Trace { x, schedule } => commands::trace_cmd(*x, (*schedule).into()),
            Command::RecordLift { l, schedule } => {
                commands::record_lift_cmd(*l, (*schedule).into())
            }
            Command::Audit {
                u_min,
                u_max,
                variant,
            } => commands::audit_cmd(*u_min, *u_max, (*variant).into()),
            Command::Validate { max } => commands::validate_cmd(*max),
            Command::Compare { max } => commands::compare_cmd(*max),
        }
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `args` (including the program name), runs the command and
/// returns what would be printed along with the exit code.
pub fn invoke<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_BAD_INPUT
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Invocation {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Invocation {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            };
        }
    };
    let (doc, error_code, stderr) = match cli.command.run() {
        Ok(doc) => (doc, EXIT_OK, String::new()),
        Err(e) => {
            let code = if e.is_range_like() {
                EXIT_RANGE
            } else {
                EXIT_BAD_INPUT
            };
            let doc = ReportDocument::new(
                cli.command.name(),
                BTreeMap::new(),
                Payload::Error {
                    message: e.to_string(),
                },
            );
            (doc, code, format!("error: {e}\n"))
        }
    };
    let stdout = if cli.json {
        doc.to_json() + "\n"
    } else if error_code != EXIT_OK {
        String::new()
    } else {
        render::human(&doc)
    };
    let code = doc.status.exit_code(error_code);
    Invocation {
        stdout,
        stderr,
        code,
    }
}
