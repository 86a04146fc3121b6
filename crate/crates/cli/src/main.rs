use std::io::Write;
use std::process::ExitCode;

use braidrep::app::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            if !out.stdout.is_empty() {
                // a closed pipe (e.g. `| head`) is not an error
                let _ = writeln!(std::io::stdout().lock(), "{}", out.stdout);
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
