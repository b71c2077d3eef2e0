use std::process::ExitCode;

use clap::Parser;
use drazin_cli::{error_outcome, render_text, run, Cli, Emit};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let emit = cli.emit;
    let command = cli.command.command();
    let outcome = match cli.into_job() {
        Ok(job) => run(&job),
        Err(e) => error_outcome(command, &e),
    };
    match emit {
        Emit::Json => println!(
            "{}",
            serde_json::to_string_pretty(&outcome.report).expect("reports serialize")
        ),
        Emit::Text => print!("{}", render_text(&outcome.report)),
    }
    if let Some(msg) = outcome.report["error"]["message"].as_str() {
        eprintln!("drazin: {msg}");
    }
    ExitCode::from(outcome.exit_code as u8)
}
