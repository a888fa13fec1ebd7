use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use srmult_cli::{
    cmd_certify_flag, cmd_report, cmd_sweep, input::GENERATORS, CertifyArgs, FieldChoice,
    ReportArgs, SweepArgs,
};

#[derive(Parser)]
#[command(
    name = "srmult",
    version,
    about = "Betti tables and multiplicity bounds of Stanley-Reisner rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one complex.
    Report {
        /// Facet file (1-based vertices, one facet per line).
        path: Option<PathBuf>,
        #[arg(long = "gen", value_name = "NAME[:PARAMS]", help = format!("Built-in complex: {GENERATORS}"))]
        generator: Option<String>,
        /// 2, an odd prime p, Q, or multi (GF(2), GF(3) and Q).
        #[arg(long, default_value = "2", value_parser = FieldChoice::parse)]
        field: FieldChoice,
        /// Largest vertex count for the subset sweep.
        #[arg(long, value_name = "N_MAX")]
        budget: Option<usize>,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Random complexes through the invariant battery.
    Sweep {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        dim_min: usize,
        #[arg(long, default_value_t = 3)]
        dim_max: usize,
        #[arg(long, default_value = "2", value_parser = FieldChoice::parse)]
        field: FieldChoice,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Exhaustive check of pure-resolution flag complexes on few vertices.
    CertifyFlag {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Allow n_max above 7.
        #[arg(long)]
        force: bool,
        #[arg(long, default_value = "2", value_parser = FieldChoice::parse)]
        field: FieldChoice,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    // Usage errors exit 1 like other input errors; 2 is reserved for violations.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let mut out = String::new();
    let result = match cli.command {
        Command::Report {
            path,
            generator,
            field,
            budget,
            json,
        } => cmd_report(
            &ReportArgs {
                path,
                generator,
                field,
                budget,
                json,
            },
            &mut out,
        ),
        Command::Sweep {
            seed,
            count,
            n_min,
            n_max,
            dim_min,
            dim_max,
            field,
            json,
        } => cmd_sweep(
            &SweepArgs {
                seed,
                count,
                n_min,
                n_max,
                dim_min,
                dim_max,
                field,
                json,
            },
            &mut out,
        ),
        Command::CertifyFlag {
            n_max,
            force,
            field,
            json,
        } => cmd_certify_flag(
            &CertifyArgs {
                n_max,
                force,
                field,
                json,
            },
            &mut out,
        ),
    };
    print!("{out}");
    match result {
        Ok(status) => ExitCode::from(status.code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
