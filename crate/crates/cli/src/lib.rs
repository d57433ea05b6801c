//! Command-line front end: tables, traces, correlators, J-functions and the
//! verification suite.
//!
//! Exit codes: 0 success, 1 usage error, 2 computation error, 3 a verification failed.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pekt::Partition;
use thiserror::Error;

mod commands;
pub mod nu;
pub mod verify;

pub use nu::{parse_nu, NuError, ParsedNu};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTATION: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

pub const DEFAULT_Q_ORDER: usize = 12;
pub const DEFAULT_WEIGHT_CAP: usize = 6;
pub const DEFAULT_N_MAX: usize = 5;

#[derive(Debug, Parser)]
#[command(name = "pekt", version, about = "Exact equivariant K-theoretic correlators of the point")]
pub struct CommandConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    /// Polynomials on C^n.
    Full,
    /// Polynomials on the sum-zero hyperplane C^{n-1}.
    Coxeter,
}

impl From<SpaceArg> for pekt::Space {
    fn from(s: SpaceArg) -> Self {
        match s {
            SpaceArg::Full => pekt::Space::Full,
            SpaceArg::Coxeter => pekt::Space::Coxeter,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum JMode {
    /// Sum of correlators up to n_max.
    Correlators,
    /// (1-q) exp(Σ Ψ^k(ν)/(k(1-q^k))).
    Closed,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Conjugacy classes of S_n with class sizes and centralizer orders.
    Classes {
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Character table of S_n (rows = irreducibles, columns = classes).
    Characters {
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Graded trace of a permutation of the given cycle type on polynomials.
    Trace {
        /// Cycle type as parts, e.g. "2,1".
        #[arg(long)]
        cycle_type: Partition,
        #[arg(long, value_enum, default_value = "coxeter")]
        space: SpaceArg,
        #[arg(long, default_value_t = DEFAULT_Q_ORDER)]
        q_order: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The S_n-invariant correlator with n copies of ν and one 1/(1-qL) insertion.
    Correlator {
        #[arg(long, value_parser = positive)]
        n: usize,
        /// Input class, e.g. "N1 + 2*N2" or "x".
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long, default_value_t = DEFAULT_Q_ORDER)]
        q_order: usize,
        #[arg(long, default_value_t = DEFAULT_WEIGHT_CAP, value_parser = positive)]
        weight_cap: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Irreducible multiplicities in the graded polynomial algebra of the Coxeter representation.
    ModuleDecompose {
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_Q_ORDER)]
        q_order: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The small J-function of ν.
    Jfunction {
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long, value_enum, default_value = "correlators")]
        mode: JMode,
        #[arg(long, default_value_t = DEFAULT_N_MAX, value_parser = positive)]
        n_max: usize,
        #[arg(long, default_value_t = DEFAULT_Q_ORDER)]
        q_order: usize,
        #[arg(long, default_value_t = DEFAULT_WEIGHT_CAP, value_parser = positive)]
        weight_cap: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Exact identity checks; prints one PASS/FAIL line per check.
    ///
    /// Flags left unset take each check's standard size, the one used by the
    /// acceptance suite.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Theorem,
    Corollary1,
    FiniteDifference,
    Corollary2,
    Oracle,
    SchurWeyl,
    Orthogonality,
    Binomial,
    Positivity,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub check: Check,
    /// Largest n (or x-degree) covered by the check.
    #[arg(long, value_parser = positive)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub q_order: Option<usize>,
    #[arg(long, value_parser = positive)]
    pub weight_cap: Option<usize>,
    /// Largest polynomial degree for `positivity`.
    #[arg(long)]
    pub degree: Option<usize>,
    /// Input class for `theorem`, replacing the default list.
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<String>,
    /// Adds random inputs to `theorem` and `binomial`.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of random inputs drawn when a seed is given.
    #[arg(long, default_value_t = 2)]
    pub samples: usize,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Nu(#[from] NuError),
    #[error("{0}")]
    Computation(#[from] pekt::Error),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Nu(_) => EXIT_USAGE,
            CliError::Computation(_) | CliError::Io(_) => EXIT_COMPUTATION,
        }
    }
}

/// Text to print and the exit code to finish with.
pub struct Output {
    pub text: String,
    pub exit: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, exit: EXIT_OK }
    }
}

/// Runs the already-parsed command on the current thread pool.
pub fn execute(config: &CommandConfig) -> Result<Output, CliError> {
    match &config.command {
        Command::Classes { n, format } => commands::classes(*n, *format).map(Output::ok),
        Command::Characters { n, format } => commands::characters(*n, *format).map(Output::ok),
        Command::Trace {
            cycle_type,
            space,
            q_order,
            format,
        } => commands::trace(cycle_type, (*space).into(), *q_order, *format).map(Output::ok),
        Command::Correlator {
            n,
            nu,
            q_order,
            weight_cap,
            format,
        } => commands::correlator(*n, nu, *q_order, *weight_cap, *format).map(Output::ok),
        Command::ModuleDecompose { n, q_order, format } => {
            commands::module_decompose(*n, *q_order, *format).map(Output::ok)
        }
        Command::Jfunction {
            nu,
            mode,
            n_max,
            q_order,
            weight_cap,
            format,
        } => commands::jfunction(nu, *mode, *n_max, *q_order, *weight_cap, *format).map(Output::ok),
        Command::Verify(args) => {
            let lines = verify::run(args)?;
            let passed = lines.iter().all(|l| l.passed);
            let text = lines.iter().map(|l| format!("{l}\n")).collect();
            Ok(Output {
                text,
                exit: if passed { EXIT_OK } else { EXIT_VERIFICATION },
            })
        }
    }
}

/// Worker count from `THREADS`; unset means one.
fn thread_count() -> Result<usize, CliError> {
    match std::env::var("THREADS") {
        Err(std::env::VarError::NotPresent) => Ok(1),
        Err(e) => Err(CliError::Usage(format!("THREADS: {e}"))),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(CliError::Usage(format!(
                "THREADS must be a positive integer, got {s:?}"
            ))),
        },
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CommandConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = thread_count().and_then(|threads| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
        pool.install(|| execute(&config))
    });
    match result {
        Ok(output) => match out.write_all(output.text.as_bytes()) {
            Ok(()) => output.exit,
            Err(e) => {
                let _ = writeln!(err, "error: output: {e}");
                EXIT_COMPUTATION
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let CliError::Computation(pekt::Error::TruncationOverflow { weight, .. }) = e {
                let _ = writeln!(err, "hint: pass --weight-cap {weight} or larger");
            }
            e.exit_code()
        }
    }
}
