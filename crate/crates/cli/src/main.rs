//! `cohere`: reproducible experiments and single-state analysis for
//! coherence and entanglement measures.

mod args;
mod commands;
mod failure;
mod output;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use crate::args::{Cli, Command};
use crate::failure::EXIT_USAGE;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
                    if e.exit_code() == 0 =>
                {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let outcome = match cli.command {
        Command::Sample(a) => commands::sample::run(&a),
        Command::Canonical(a) => commands::canonical::run(&a),
        Command::Classify(a) => commands::classify::run(&a),
        Command::Audit(a) => commands::audit::run(&a),
        Command::Sweep(a) => commands::sweep::run(&a),
        Command::Analyze(a) => commands::analyze::run(&a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code)
        }
    }
}
