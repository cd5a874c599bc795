use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use fracpart_cli::args::Cli;
use fracpart_cli::{run, EXIT_OK, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.body.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("fracpart: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
