//! `hvec`: command-line access to hvec-core.
//!
//! Exit codes: 0 success, 1 a bound fails, 2 usage or input error,
//! 3 generic-instance retries exhausted.

mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Vec::new();
    let code = match commands::run(cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let code = commands::exit_code_for(&e);
            eprintln!("error: {e}");
            code
        }
    };
    let mut stdout = std::io::stdout().lock();
    // A closed pipe is not worth reporting.
    let _ = stdout.write_all(&out).and_then(|_| stdout.flush());
    ExitCode::from(code)
}
