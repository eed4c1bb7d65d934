//! `sdgen` command-line tool.
//!
//! Exit codes: 0 success, 1 usage error, 2 bad data or parameters,
//! 3 generator resampling cap reached.

mod args;
mod commands;
mod error;
mod output;
mod report;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::CliError;

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Generate(a) => commands::generate(a),
        Command::Evolve(a) => commands::evolve(a),
        Command::Compare(a) => commands::compare_cmd(a),
        Command::Tune(a) => commands::tune_cmd(a),
        Command::Report(a) => report::report(a),
        Command::Spectrum(a) => commands::spectrum_cmd(a),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // --help and --version go to stdout and are not failures
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
