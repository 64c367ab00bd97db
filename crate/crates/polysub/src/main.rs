use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(polysub::cli::run())
}
