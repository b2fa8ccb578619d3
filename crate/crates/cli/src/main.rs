mod args;
mod commands;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Format};
use commands::{CliError, Outcome};

fn format(cli: &Cli) -> Result<Format, CliError> {
    match std::env::var("SCHUBERT_OUTPUT") {
        Ok(v) => match v.as_str() {
            "json" => Ok(Format::Json),
            "plain" => Ok(Format::Plain),
            other => Err(CliError::Parse(format!(
                "SCHUBERT_OUTPUT must be json or plain, got {other:?}"
            ))),
        },
        Err(_) => Ok(cli.format),
    }
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Curve { kind, t } => commands::curve(kind, t),
        Command::OsculatingFlag { kind, t } => commands::osculating(kind, t),
        Command::VerifyIsotropy { kind, t } => commands::verify_isotropy(kind, t),
        Command::Nilpotent { kind } => commands::nilpotent(kind),
        Command::PetersonCheck { kind, t } => commands::peterson(kind, t),
        Command::SolveFourLines {
            osculating,
            points,
            kind,
            isotropic_sp4,
            seed,
        } => {
            if !osculating && !isotropic_sp4 {
                return Err(CliError::Parse(
                    "choose --osculating or --isotropic-sp4".into(),
                ));
            }
            commands::solve_four_lines(*osculating, points.as_ref(), *kind, *seed)
        }
        Command::EhCheck {
            k,
            m,
            samples,
            points,
            seed,
        } => commands::eh_check(*k, *m, *samples, points, *seed),
        Command::DimReport { file } => commands::dim_report(file),
        Command::Pad {
            k,
            m,
            conditions,
            fresh,
            solve,
        } => commands::pad(*k, *m, conditions, fresh, *solve),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = format(&cli).and_then(|f| run(&cli).map(|o| (f, o)));
    match result {
        Ok((f, outcome)) => {
            let text = match f {
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&outcome.value).expect("serializable")
                ),
                Format::Plain => render::plain(&outcome.value),
            };
            // a closed pipe (e.g. `| head`) is not an error worth a panic
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if outcome.claims_hold {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: a certified claim failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
