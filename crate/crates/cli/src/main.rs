use std::path::PathBuf;
use std::process::ExitCode;

use chordprop_cli::validate::{self, Options, Suite};
use chordprop_cli::{run_scenario, CliError, CliResult, Scenario};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "chordprop", version, about = "Chord-function propagators for the open quantum oscillator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Propagate a scenario and write CSV tables
    Run {
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Cross-check closed forms against the numerical oracles
    Validate {
        #[arg(value_enum)]
        suite: Suite,
        /// Override every gating tolerance
        #[arg(long)]
        tol: Option<f64>,
        /// Seed for the random sample points
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn execute(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Run { config, out } => {
            let scenario = Scenario::load(&config)?;
            let summary = run_scenario(&scenario, &out)?;
            for f in &summary.files {
                println!("{}", f.display());
            }
            Ok(())
        }
        Command::Validate { suite, tol, seed, out } => {
            if let Some(t) = tol {
                if !(t.is_finite() && t >= 0.0) {
                    return Err(CliError::Config(format!("--tol must be a finite non-negative number, got {t}")));
                }
            }
            let report = validate::run_suite(suite, &Options { seed, tol, ..Options::default() })?;
            validate::write_report(&report, &out)?;
            for c in &report.checks {
                let verdict = if c.pass { "pass" } else { "FAIL" };
                println!("{verdict:4} {:<36} {:.3e} (tol {:.1e})", c.check, c.max_error, c.tolerance);
            }
            for a in &report.audit {
                println!("note {:<36} {:.3e}  {}", a.check, a.max_error, a.note);
            }
            let failed = report.failures();
            if failed.is_empty() {
                Ok(())
            } else {
                let names: Vec<&str> = failed.iter().map(|c| c.check.as_str()).collect();
                Err(CliError::Validation(names.join(", ")))
            }
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("chordprop: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
