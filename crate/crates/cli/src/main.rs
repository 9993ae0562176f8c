//! `superfilt` command-line front end.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Format};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let g = &cli.global;
    let result = match &cli.command {
        Command::Partitions(c) => commands::partitions(g, c),
        Command::Weights(c) => commands::weights(g, c),
        Command::Phistar { expr } => commands::phistar_cmd(g, expr),
        Command::Derive { side, pos, expr, times } => commands::derive_cmd(g, *side, pos, expr, *times),
        Command::Verify { what, lambda, lmax } => commands::verify(g, *what, lambda.as_deref(), *lmax),
        Command::Basis { what, lambda, lmax } => commands::basis(g, *what, lambda, *lmax),
        Command::Repro { only } => commands::repro(g, only),
    };
    match result {
        Ok(out) => {
            match g.format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json")),
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
