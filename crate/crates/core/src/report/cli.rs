//! Command-line interface.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};

use super::run;
use crate::orbits::ZeroMask;

/// Environment variable holding the worker count for parallel scans.
pub const WORKERS_ENV: &str = "WTRANS_WORKERS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "wtrans",
    version,
    about = "Automorphism groups acting on Weierstrass points"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Hyperelliptic surfaces with a group transitive on the Weierstrass points.
    Hyperelliptic {
        #[arg(long)]
        max_genus: u64,
    },
    /// Hurwitz groups PSL(2,q) for prime powers q up to a bound.
    Hurwitz {
        #[arg(long, default_value_t = 100)]
        max_q: u64,
    },
    /// Solve the orbit-weight equation for a (0; periods) action.
    OrbitWeights {
        #[arg(long)]
        order: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        periods: Vec<u64>,
        #[arg(long)]
        target: u64,
        /// Weights forced to zero, e.g. `w1=0,w2=0`.
        #[arg(long)]
        mask: Option<ZeroMask>,
    },
    /// Transitivity of PSL(2,q) acting with signature (0; 2, 3, t).
    PslVerdict {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: u64,
    },
    /// Transitivity on the modular curve X(p).
    Modular {
        #[arg(long)]
        p: u64,
    },
    /// Genera where the bi-elliptic divisibility test does not exclude transitivity.
    BiellipticScan {
        #[arg(long, default_value_t = 11)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Weight accounting and transitivity for the Fermat curve of degree n.
    Fermat {
        #[arg(long)]
        n: u64,
    },
    /// Validate the embedded table of low-genus regular maps.
    ValidateTables,
    /// Element orders of PSL(2,q) by enumeration.
    Census {
        #[arg(long)]
        q: u64,
    },
}

/// Reads the worker count from [`WORKERS_ENV`], defaulting to 1.
pub fn workers_from_env() -> Result<usize, String> {
    match std::env::var(WORKERS_ENV) {
        Err(_) => Ok(1),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(format!("{WORKERS_ENV} must be a positive integer, got `{s}`")),
        },
    }
}

/// Parses `args`, runs the command and prints the report. Returns the exit
/// code.
pub fn main_entry<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let workers = match workers_from_env() {
        Ok(w) => w,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    match run(&cli.command, workers) {
        Ok(doc) => {
            let out = match cli.format {
                Format::Text => doc.to_text(),
                Format::Json => match doc.to_json() {
                    Ok(json) => json + "\n",
                    Err(e) => {
                        eprintln!("error: {e}");
                        return EXIT_INTERNAL;
                    }
                },
            };
            match io::stdout().lock().write_all(out.as_bytes()) {
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
                    eprintln!("error: {e}");
                    EXIT_INTERNAL
                }
                _ => EXIT_OK,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_internal() {
                EXIT_INTERNAL
            } else {
                EXIT_USAGE
            }
        }
    }
}
