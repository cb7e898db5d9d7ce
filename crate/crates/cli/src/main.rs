use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use dilogint_cli::args::Cli;
use dilogint_cli::run;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match run(&cli, &mut out) {
        Ok(outcome) => outcome.exit_code(),
        Err(e) => {
            let _ = out.flush();
            eprintln!("dilogint: {e:#}");
            2
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
