use std::io::{self, IsTerminal};
use std::process::ExitCode;

use bomi_cli::{run, Streams};

fn main() -> ExitCode {
    let color = io::stderr().is_terminal() && std::env::var_os("NO_COLOR").is_none();
    let mut stdin = io::stdin().lock();
    let mut stdout = io::stdout().lock();
    let mut stderr = io::stderr().lock();
    let mut streams = Streams {
        stdin: &mut stdin,
        stdout: &mut stdout,
        stderr: &mut stderr,
        color,
    };
    ExitCode::from(run(std::env::args_os(), &mut streams).code())
}
