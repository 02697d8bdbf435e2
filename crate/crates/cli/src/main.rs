//! `rdelta`: command-line front end.
//!
//! Exit codes: 0 success, 2 bad input or usage, 3 failed precondition,
//! 4 budget or cap exceeded, 5 verification failure.

mod commands;
mod input;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rdelta::{Error, ErrorClass, FieldSpec};
use serde_json::Value;

use commands::BettiMode;

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(s) | CliError::Usage(s) => f.write_str(s),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => match e.class() {
                ErrorClass::Input => 2,
                ErrorClass::Precondition => 3,
                ErrorClass::Budget => 4,
            },
            CliError::Io(_) | CliError::Usage(_) => 2,
        }
    }
}

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub chars: Vec<FieldSpec>,
    pub imax: usize,
    pub degree_cap: u32,
    pub budget: u64,
    pub seed: u64,
    pub format: String,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Characteristics, comma separated (0 or primes).
    #[arg(long, global = true, default_value = "0,2,3,5")]
    chars: String,
    /// Largest homological degree computed.
    #[arg(long, global = true, default_value_t = 4)]
    imax: usize,
    /// Largest degree processed by truncated Gröbner computations.
    #[arg(long = "degree-cap", global = true, default_value_t = 6)]
    degree_cap: u32,
    /// Node budget for shelling searches.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    budget: u64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// json, table, m2 or singular.
    #[arg(long, global = true, default_value = "json")]
    format: String,
}

impl GlobalOpts {
    fn config(&self) -> Result<RunConfig, CliError> {
        let chars = self
            .chars
            .split(',')
            .map(|s| {
                let c: u64 = s.trim().parse().map_err(|_| CliError::Usage(format!("bad characteristic `{s}`")))?;
                Ok(FieldSpec::new(c)?)
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        if chars.is_empty() || self.imax == 0 || self.degree_cap == 0 || self.budget == 0 {
            return Err(CliError::Usage("all bounds must be positive".into()));
        }
        if !["json", "table", "m2", "macaulay2", "singular"].contains(&self.format.as_str()) {
            return Err(Error::UnsupportedFormat(self.format.clone()).into());
        }
        Ok(RunConfig {
            chars,
            imax: self.imax,
            degree_cap: self.degree_cap,
            budget: self.budget,
            seed: self.seed,
            format: self.format.clone(),
        })
    }
}

/// Gorenstein algebras from flag complexes.
///
/// COMPLEX is a JSON or text complex file, or `builtin:<name>` with name one
/// of octahedron, cross:<d>, glued:<d>:<c>, rp2, path3, bier, annulus.
#[derive(Parser, Debug)]
#[command(name = "rdelta", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Purity, flagness, f/h-vectors, Serre profile, Koszul and Gröbner verdicts.
    Analyze { complex: String },
    /// Presentation of R_Δ in Macaulay2, Singular or JSON syntax.
    Present {
        complex: String,
        /// Reduce modulo y_i - x_i.
        #[arg(long)]
        artinian: bool,
        /// Keep every binomial b_{F,G}, not only a minimal generating set.
        #[arg(long)]
        full: bool,
    },
    /// Test whether the quadrics form a Gröbner basis for a facet order.
    Gb {
        complex: String,
        /// Facet order, e.g. "123,234,345".
        #[arg(long)]
        order: Option<String>,
        /// Use a shelling found by search as the facet order.
        #[arg(long)]
        search: bool,
        /// Include every S-pair with its remainder.
        #[arg(long)]
        log: bool,
        /// Instead, run Buchberger from the full presentation under this many random orders.
        #[arg(long)]
        random: Option<usize>,
    },
    /// Search for a shelling order.
    Shelling { complex: String },
    /// Betti numbers: Hochster, modules over F[Γ], or the Poincaré series of R_Δ.
    Betti {
        /// Complex, or a JSON ideal file with `variables`, `generators` and optional `nonedges`.
        input: String,
        #[arg(long, value_enum, default_value = "hochster")]
        mode: BettiMode,
    },
    /// γ-vector of R_Δ, or of an h-vector given as "1,14,24,14,1".
    Gamma { input: String },
    /// Run the theorem harness over every complex file in a directory.
    Verify { corpus: String },
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_value(v: &Value, format: &str) {
    if format == "table" {
        if let Some(obj) = v.as_object() {
            for (k, val) in obj {
                emit(&format!("{k}: {val}\n"));
            }
            return;
        }
    }
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("serializable")));
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let cfg = cli.global.config()?;
    match cli.command {
        Command::Analyze { complex } => {
            print_value(&commands::analyze(&input::load_complex(&complex)?, &cfg)?, &cfg.format);
        }
        Command::Present { complex, artinian, full } => {
            emit(&commands::present(&input::load_complex(&complex)?, &cfg, full, artinian)?);
        }
        Command::Gb { complex, order, search, log, random } => {
            let delta = input::load_complex(&complex)?;
            let v = match random {
                Some(k) => commands::gb_random(&delta, &cfg, k)?,
                None => commands::gb(&delta, &cfg, order.as_deref(), search, log)?,
            };
            print_value(&v, &cfg.format);
        }
        Command::Shelling { complex } => {
            print_value(&commands::shelling(&input::load_complex(&complex)?, &cfg)?, &cfg.format);
        }
        Command::Betti { input, mode } => {
            let out = commands::betti(&input, mode, &cfg)?;
            if matches!(cfg.format.as_str(), "table" | "m2" | "macaulay2") && !out.tables.is_empty() {
                for (c, t) in &out.tables {
                    emit(&format!("-- characteristic {c}\n{}", t.to_m2_string()));
                }
            } else {
                print_value(&out.json, "json");
            }
        }
        Command::Gamma { input } => print_value(&commands::gamma(&input, &cfg)?, &cfg.format),
        Command::Verify { corpus } => {
            let (report, ok) = verify::verify(&corpus, &cfg)?;
            print_value(&report, "json");
            if !ok {
                return Ok(5);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
