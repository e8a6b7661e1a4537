use std::process::ExitCode;

fn main() -> ExitCode {
    pairwalk::cli::run()
}
