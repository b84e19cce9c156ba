use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = casimir_cli::run(std::env::args_os(), &mut out);
    ExitCode::from(code as u8)
}
