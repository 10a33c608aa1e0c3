mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::CliError;

/// Symplectic 2×2 quaternionic matrices with prescribed left eigenvalues.
#[derive(Debug, Parser)]
#[command(name = "sympleig", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct Common {
    /// Seed for randomized subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Override the adjoint-determinant tolerance (eigenvalue / Ω membership).
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Print a plain-text table instead of JSON.
    #[arg(long, global = true)]
    text: bool,
}

/// A file path, or `-` for standard input.
#[derive(Debug, Clone)]
pub enum Source {
    Stdin,
    File(PathBuf),
}

impl std::str::FromStr for Source {
    type Err = std::convert::Infallible;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(if s == "-" { Source::Stdin } else { Source::File(s.into()) })
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build symplectic matrices having 1 to 4 given unit quaternions as left eigenvalues.
    Construct {
        #[arg(long)]
        sigmas: Source,
    },
    /// Decide whether a quaternion is a left eigenvalue of a matrix.
    Verify {
        #[arg(long)]
        matrix: Source,
        /// Quaternion as a JSON array [t, x, y, z].
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
    },
    /// Recover (q, θ) when the matrix has the form L_q ∘ R_θ with sin θ ≠ 0.
    Classify {
        #[arg(long)]
        matrix: Source,
    },
    /// Sample Sp(2) and report matrices outside every Ω(σ).
    Cover {
        /// Defaults to 1, i, j, k, (i + j)/√2.
        #[arg(long)]
        sigmas: Option<Source>,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Evaluate the Cayley contraction of Ω(σ) from A (t = 1) to -σI (t = 0).
    Contract {
        #[arg(long)]
        matrix: Source,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, default_value_t = 16)]
        steps: usize,
    },
    /// Check ‖M w‖ < √N ‖w‖ for a full-rank N×N real matrix with unit rows.
    Bound {
        /// Real square matrix as a JSON array of rows.
        #[arg(long)]
        matrix: Source,
        /// Vector w as a JSON array; defaults to all ones.
        #[arg(long, allow_hyphen_values = true)]
        w: Option<String>,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    let c = &cli.common;
    match cli.command {
        Command::Construct { sigmas } => commands::construct(&sigmas, c.text),
        Command::Verify { matrix, sigma } => commands::verify(&matrix, &sigma, c.tol, c.text),
        Command::Classify { matrix } => commands::classify(&matrix, c.tol, c.text),
        Command::Cover { sigmas, samples } => {
            commands::cover(sigmas.as_ref(), samples, c.seed, c.tol, c.text)
        }
        Command::Contract { matrix, sigma, steps } => {
            commands::contract(&matrix, &sigma, steps, c.text)
        }
        Command::Bound { matrix, w } => commands::bound(&matrix, w.as_deref(), c.text),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
