use std::process::ExitCode;

use clap::Parser;
use qgd::commands::{run, Cli};

fn main() -> ExitCode {
    run(Cli::parse())
}
