use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use teachrep_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.global.threads {
        if n == 0 {
            eprintln!("teachrep: --threads must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .expect("thread pool configured once");
    }
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(&cli, &mut lock).and_then(|_| {
        lock.flush()
            .map_err(|e| teachrep_cli::CliError::io(std::path::Path::new("<stdout>"), e))
    }) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("teachrep: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
