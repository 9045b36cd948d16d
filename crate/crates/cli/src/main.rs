use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use quatfiber_cli::args::Cli;
use quatfiber_cli::commands::{cap_report, run, CliError};
use quatfiber_cli::report::Report;

fn emit(cli: &Cli, report: &Report) -> Result<(), CliError> {
    // a closed pipe (e.g. `| head`) is not an error
    let _ = std::io::stdout().lock().write_all(report.render().as_bytes());
    if let Some(path) = &cli.json {
        report.write_json(path)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli).and_then(|report| {
        emit(&cli, &report)?;
        Ok(report.exit_code())
    });
    let code = match result {
        Ok(code) => code,
        Err(CliError::Cap(msg)) => {
            let report = cap_report(&cli, &msg);
            match emit(&cli, &report) {
                Ok(()) => 3,
                Err(e) => {
                    eprintln!("error: {e:#}");
                    1
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            e.exit_code()
        }
    };
    let _ = writeln!(std::io::stdout(), "elapsed: {:.2}s", start.elapsed().as_secs_f64());
    ExitCode::from(code as u8)
}
