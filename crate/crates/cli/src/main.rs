mod args;
mod commands;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::CliError;

fn emit(cli: &Cli, text: &str) -> Result<(), String> {
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("cannot write `{}`: {e}", path.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let value = match commands::run(&cli.command) {
        Ok(v) => v,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("failed: {msg}");
            return ExitCode::from(1);
        }
    };
    let mut text = serde_json::to_string(&value).expect("JSON values always serialize");
    text.push('\n');
    if let Err(msg) = emit(&cli, &text) {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    match (&cli.expect, value.get("result").and_then(|r| r.as_str())) {
        (Some(want), got) if got != Some(want.as_str()) => {
            eprintln!("expected result `{want}`, got `{}`", got.unwrap_or("none"));
            ExitCode::from(1)
        }
        _ => ExitCode::SUCCESS,
    }
}
