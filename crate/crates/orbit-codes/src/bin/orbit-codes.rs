use std::process::ExitCode;

fn main() -> ExitCode {
    let out = orbit_codes::cli::run(std::env::args());
    if !out.stdout.is_empty() {
        print!("{}", out.stdout);
    }
    ExitCode::from(out.exit_code as u8)
}
