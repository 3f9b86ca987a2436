use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = faultsim_cli::main_with(
        std::env::args_os().skip(1),
        io::stdin().lock(),
        io::stdout().lock(),
        io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
