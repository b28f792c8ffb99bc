use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use idcode::cli::{run, Cli, EXIT_OK, EXIT_USAGE};
use idcode::report::ReportBody;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::from(EXIT_OK as u8),
                _ => ExitCode::from(EXIT_USAGE as u8),
            };
        }
    };
    let (report, status) = run(&cli.command);
    if cli.command.json() {
        println!("{}", report.to_json());
    } else if let ReportBody::Error { message, .. } = &report.result {
        eprintln!("idcode: {message}");
    } else {
        print!("{report}");
    }
    ExitCode::from(status as u8)
}
