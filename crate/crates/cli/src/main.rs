use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use ybgate::args::Cli;
use ybgate::commands::{parse_seed, run};
use ybgate_core::entangle::DEFAULT_SEED;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let seed = match std::env::var("YBG_SEED") {
        Ok(s) => parse_seed(&s),
        Err(_) => Ok(DEFAULT_SEED),
    };
    match seed.and_then(|seed| run(&cli, seed)) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(outcome.stdout.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::from(if outcome.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("ybgate: {e}");
            ExitCode::from(2)
        }
    }
}
