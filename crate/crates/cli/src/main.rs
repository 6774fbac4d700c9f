use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use orbifold_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            if let CliError::ChecksFailed { report, .. } = &err {
                print!("{report}");
            }
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
