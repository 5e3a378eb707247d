use std::process::ExitCode;

fn main() -> ExitCode {
    artin::cli::run()
}
