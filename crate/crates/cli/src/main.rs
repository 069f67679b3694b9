mod args;
mod commands;
mod dto;
mod svg;

use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use args::Cli;

#[derive(Debug)]
pub enum CliError {
    Core(hypbill::Error),
    Io(String),
    /// Unreadable input file contents.
    Input(String),
    Usage(String),
}

impl From<hypbill::Error> for CliError {
    fn from(e: hypbill::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Io(_) => "io",
            CliError::Input(_) => "input",
            CliError::Usage(_) => "usage",
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Io(m) | CliError::Input(m) | CliError::Usage(m) => m.clone(),
        }
    }
}

fn execute(cli: &Cli) -> Result<(), CliError> {
    let out = commands::run(cli)?;
    let text =
        serde_json::to_string_pretty(&out.json).map_err(|e| CliError::Io(e.to_string()))? + "\n";
    if let (Some(path), Some(scene)) = (&cli.svg, out.figure) {
        commands::write_text(path, &scene.finish())?;
    }
    match &cli.json {
        Some(path) => commands::write_text(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let obj = json!({ "error": { "kind": e.kind(), "message": e.message() } });
            eprintln!("{obj}");
            match e {
                CliError::Usage(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
