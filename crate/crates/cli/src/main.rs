use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use equalpow_cli::error::EXIT_ERROR;
use equalpow_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_ERROR);
        }
    };

    let result = match &cli.out {
        Some(path) => File::create(path)
            .map_err(CliError::from)
            .and_then(|f| {
                let mut w = BufWriter::new(f);
                let status = run(&cli, &mut w)?;
                w.flush()?;
                Ok(status)
            }),
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            run(&cli, &mut w).and_then(|status| {
                w.flush()?;
                Ok(status)
            })
        }
    };

    match result {
        Ok(status) => ExitCode::from(status.code()),
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("equalpow: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
