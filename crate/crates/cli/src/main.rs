//! `bohr-lab`: Bohr-type radii, coefficient dumps, parameter sweeps and
//! seeded verification suites.
//!
//! Exit codes: 0 success, 1 verification failures, 2 numerical failure
//! (no root, truncation or quadrature did not converge), 3 invalid input.

mod args;
mod commands;
mod config;
mod error;
mod output;
mod psi_spec;

use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use error::CliError;

fn init_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("BOHR_LAB_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| CliError::flag("BOHR_LAB_THREADS", format!("expected a positive integer, got `{v}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Output(e.to_string()))
}

fn run() -> i32 {
    let argv = match config::merge_config(std::env::args().collect()) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return code;
        }
    };
    if let Err(e) = init_threads() {
        eprintln!("error: {e}");
        return e.exit_code();
    }
    let result = match &cli.command {
        Command::Radius(a) => commands::radius(a),
        Command::Verify(a) => commands::verify(a),
        Command::Series(a) => commands::series(a),
        Command::Table(a) => commands::table(a),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return 2;
            }
            i32::from(out.failures)
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn main() {
    std::process::exit(run());
}
