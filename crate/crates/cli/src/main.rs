use std::process::ExitCode;

fn main() -> ExitCode {
    match qbell_cli::commands::run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
