use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use hyperstab_cli::{run, Cli, CliError};

const EXIT_VERIFICATION_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn emit(cli: &Cli) -> Result<bool, CliError> {
    let rendered = run(&cli.command)?;
    match &cli.command.output().out {
        Some(path) => std::fs::write(path, rendered.text.as_bytes())?,
        None => std::io::stdout().lock().write_all(rendered.text.as_bytes())?,
    }
    Ok(rendered.verified)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            let text = e.to_string();
            let message: Vec<&str> = text
                .lines()
                .map(str::trim)
                .take_while(|l| !l.starts_with("Usage:") && !l.starts_with("For more information"))
                .filter(|l| !l.is_empty())
                .collect();
            let message = message.join(" ");
            eprintln!("{}", CliError::Usage(message.trim_start_matches("error: ").to_string()).line());
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match emit(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("error[verification-failed]: at least one check failed");
            ExitCode::from(EXIT_VERIFICATION_FAILED)
        }
        Err(e) => {
            eprintln!("{}", e.line());
            ExitCode::from(EXIT_USAGE)
        }
    }
}
