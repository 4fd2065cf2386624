mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, SchurCommand};

fn run(cli: &Cli) -> anyhow::Result<bool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build_global()?;
    match &cli.command {
        Command::Verify(a) => commands::verify(a),
        Command::Logconcavity(a) => commands::logconcavity(a),
        Command::Schur(SchurCommand::Nonneg(a)) => commands::schur_nonneg(a),
        Command::Schur(SchurCommand::Pieri(a)) => commands::schur_pieri(a),
        Command::Schur(SchurCommand::Line(a)) => commands::schur_line(a),
        Command::Dump(a) => commands::dump(a),
    }
}

/// 0 when every check passes, 1 on a verification failure, 2 on a cap or
/// precondition violation.
fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
