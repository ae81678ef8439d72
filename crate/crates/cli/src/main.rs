use std::process::ExitCode;

use clap::Parser;
use fblow::commands::{run, Cli, BUDGET_ENV};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let budget = std::env::var(BUDGET_ENV).ok();
    match run(cli, budget.as_deref()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fblow: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
