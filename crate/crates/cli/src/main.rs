use std::process::ExitCode;

use clap::Parser;
use loghiggs_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    let written = match &cli.output {
        Some(path) if outcome.code != loghiggs_cli::EXIT_INVALID => std::fs::write(path, &outcome.document),
        _ => {
            print!("{}", outcome.document);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("cannot write report: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.code as u8)
}
