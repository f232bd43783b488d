use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use posp_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(out.text().as_bytes()).and_then(|_| stdout.flush()) {
                eprintln!("posp: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("posp: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
