use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = wicket_cli::run(std::env::args_os());
    print!("{}", result.stdout);
    let _ = std::io::stdout().flush();
    eprint!("{}", result.stderr);
    ExitCode::from(result.code as u8)
}
