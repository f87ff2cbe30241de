use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use spk_cli::{run, Cli, EXIT_TROUBLE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = stdout.write_all(out.text.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_TROUBLE)
        }
    }
}
