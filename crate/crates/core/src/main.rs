use std::process::ExitCode;

use clap::Parser;
use hermitian_young::cli::{run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    match run(&cli, &mut stdout.lock()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("hy: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
