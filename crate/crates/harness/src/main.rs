use std::process::ExitCode;

use clap::Parser;
use rpaths::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let code = match run(&cli, &mut stdout.lock()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
