use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(asincert::cli::main_from_env())
}
