use std::process::ExitCode;

use clap::Parser;
use zsections::{run, Cli};

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("zsections: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
