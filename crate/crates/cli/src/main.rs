use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(riesz_cli::run(std::env::args_os()))
}
