use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use dconsec_cli::commands::{run, Cli};
use dconsec_cli::exit;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { exit::OK });
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match run(&cli.command, &mut out) {
        Ok(outcome) => outcome.exit_code(),
        Err(e) => {
            let _ = out.flush();
            eprintln!("dconsec: {e}");
            e.exit_code()
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
