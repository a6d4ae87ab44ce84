use std::io::{stderr, stdout};
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = ivqrof::cli::run(std::env::args_os(), &mut stdout().lock(), &mut stderr().lock());
    ExitCode::from(code as u8)
}
