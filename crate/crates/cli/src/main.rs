use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use fengrao_cli::args::Cli;
use fengrao_cli::{run, EXIT_INPUT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    if let Some(w) = &out.warning {
        eprintln!("warning: {w}");
    }
    let written = match &cli.out {
        Some(path) => fs::write(path, &out.text),
        None => io::stdout().lock().write_all(out.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_INPUT);
    }
    ExitCode::from(out.code)
}
