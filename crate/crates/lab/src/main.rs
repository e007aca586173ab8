use std::process::ExitCode;

use clap::Parser;
use ginlab::cli::{run, Cli};

fn main() -> ExitCode {
    run(&Cli::parse())
}
