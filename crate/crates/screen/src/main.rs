use std::process::ExitCode;

fn main() -> ExitCode {
    dirac_screen::cli::run()
}
