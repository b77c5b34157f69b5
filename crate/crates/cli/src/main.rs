use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ellsurf_cli::{
    emit, run_fibers, run_jinv, run_multiples, run_torsion, run_verify, CliError,
};

/// Exact certification of elliptic surfaces over hyperelliptic bases.
#[derive(Parser)]
#[command(name = "ellsurf", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FamilyArgs {
    /// Genus of the hyperelliptic base (must be at least 2).
    #[arg(long)]
    genus: u32,
    /// Comma-separated branch values (default: 1,2,...,2g+1).
    #[arg(long)]
    lambdas: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Write the output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify every hypothesis of the construction; emit a certificate.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Specialization parameter for the rank check.
        #[arg(long, default_value = "0")]
        at: String,
    },
    /// Classify the singular fibers of Weierstrass data read from a file.
    Fibers {
        /// JSON file: {"genus", "lambdas", "a4", "a6"}.
        data: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the torsion order of a rational point on a curve over Q.
    Torsion {
        /// JSON file: {"A": "p/q", "B": "p/q"}.
        curve: PathBuf,
        /// JSON file: {"x": "p/q", "y": "p/q"} or {"inf": true}.
        point: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report coordinate degrees of the first multiples of the section.
    Multiples {
        #[command(flatten)]
        family: FamilyArgs,
        /// Largest multiple to report.
        #[arg(long, default_value_t = 8)]
        n: u32,
    },
    /// Print the j-invariant of the generic fiber.
    Jinv {
        #[command(flatten)]
        family: FamilyArgs,
    },
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Verify { family, at } => {
            let outcome = run_verify(
                family.genus,
                family.lambdas.as_deref(),
                &at,
                family.json,
            )?;
            emit(&outcome.rendered, family.out.as_deref())?;
            Ok(if outcome.all_pass { 0 } else { 1 })
        }
        Command::Fibers { data, json, out } => {
            let rendered = run_fibers(&data, json)?;
            emit(&rendered, out.as_deref())?;
            Ok(0)
        }
        Command::Torsion {
            curve,
            point,
            json,
            out,
        } => {
            let rendered = run_torsion(&curve, &point, json)?;
            emit(&rendered, out.as_deref())?;
            Ok(0)
        }
        Command::Multiples { family, n } => {
            let rendered = run_multiples(family.genus, family.lambdas.as_deref(), n, family.json)?;
            emit(&rendered, family.out.as_deref())?;
            Ok(0)
        }
        Command::Jinv { family } => {
            let rendered = run_jinv(family.genus, family.lambdas.as_deref(), family.json)?;
            emit(&rendered, family.out.as_deref())?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
