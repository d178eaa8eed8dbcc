use std::process::ExitCode;

use clap::Parser;
use frontier_core::report::cli::{run, Cli};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("frontier: {e}");
            ExitCode::FAILURE
        }
    }
}
