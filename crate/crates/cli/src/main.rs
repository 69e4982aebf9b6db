use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use curvesym_cli::{render, run, write_report, Cli, EXIT_CONFIG};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = cli.command.config();
    let outcome = match run(&config) {
        Ok(o) => o,
        Err(e) => {
            for p in config.grid().1 {
                eprintln!("skipped (q, m) = ({}, {}): {}", p.q, p.m, p.reason);
            }
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };
    for p in &outcome.invalid {
        eprintln!("skipped (q, m) = ({}, {}): {}", p.q, p.m, p.reason);
    }
    let text = render(&outcome.records, config.format);
    match cli.command.destination(config.format) {
        Some(dest) => {
            if let Err(e) = write_report(&dest, &text) {
                eprintln!("error: cannot write {}: {e}", dest.display());
                return ExitCode::from(EXIT_CONFIG);
            }
            eprintln!("wrote {}", dest.display());
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(EXIT_CONFIG);
            }
        }
    }
    let failed = outcome.records.iter().filter(|r| !r.matched).count();
    eprintln!("{} checks, {} mismatches", outcome.records.len(), failed);
    ExitCode::from(outcome.exit_code())
}
