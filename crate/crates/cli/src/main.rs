mod args;
mod commands;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, OutputArgs};
use commands::{Outcome, UsageError};

const EXIT_DISCREPANCY: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn configure_threads() -> Result<(), UsageError> {
    let Ok(value) = std::env::var("QPV_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| {
            UsageError(format!(
                "QPV_THREADS must be a positive integer, got `{value}`"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| UsageError(e.to_string()))
}

fn emit(output: &OutputArgs, outcome: &Outcome) -> Result<(), UsageError> {
    match &output.out {
        Some(path) => fs::write(path, &outcome.text)
            .map_err(|e| UsageError(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(outcome.text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| UsageError(e.to_string()))
        }
    }
}

fn run(cli: &Cli) -> Result<bool, UsageError> {
    configure_threads()?;
    let (outcome, output) = match &cli.command {
        Command::Expand(a) => (commands::expand(a)?, &a.output),
        Command::Enumerate(a) => (commands::enumerate(a)?, &a.output),
        Command::Verify(a) => (commands::verify(a)?, &a.output),
    };
    emit(output, &outcome)?;
    Ok(outcome.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_DISCREPANCY),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
