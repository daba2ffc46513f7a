use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gitloci::cli::{run, run_support_only, RunConfig};
use gitloci::report::OutputFormat;
use gitloci::solver::Loci;
use gitloci::{Error, Limits};

/// Exact GIT stability loci for simple groups acting on irreducible representations.
#[derive(Parser)]
#[command(name = "gitloci", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute maximal non-stable, maximal unstable and strictly polystable states.
    Solve {
        /// Dynkin type and rank, e.g. A2, B3, E6.
        group: String,
        /// Highest weight: fundamental coefficients "3,0", L-coordinates "3,0,0" (type A), or "3*w1".
        #[arg(long, required_unless_present = "weights_file")]
        weight: Option<String>,
        #[arg(long, default_value = "nonstable,unstable,polystable")]
        loci: String,
        /// Drop states that are Weyl-conjugate to an earlier one.
        #[arg(long)]
        weyl_opt: bool,
        #[arg(long, default_value = "text", value_parser = ["text", "json-like"])]
        format: String,
        /// One weight per line in fundamental coefficients; replaces --weight.
        #[arg(long)]
        weights_file: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the number of weights of the representation.
    Support {
        group: String,
        #[arg(long)]
        weight: String,
        /// Also list the weights.
        #[arg(long)]
        list: bool,
    },
}

fn execute(cli: Cli) -> Result<String, Error> {
    let limits = Limits::from_env();
    match cli.command {
        Command::Solve { group, weight, loci, weyl_opt, format, weights_file, out } => {
            let config = RunConfig {
                group: group.parse()?,
                weight_text: weight,
                weights_file,
                loci: Loci::parse(&loci)?,
                weyl_opt,
                format: format.parse::<OutputFormat>()?,
                output_path: out.clone(),
                limits,
            };
            let text = run(&config)?;
            Ok(if out.is_some() { String::new() } else { text })
        }
        Command::Support { group, weight, list } => run_support_only(&group, &weight, list, &limits),
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
