use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(cubeideal_cli::main_with(std::env::args_os()))
}
