//! Front end for the fault stress simulator: argument handling, the
//! interactive menu session and headless batch runs.

pub mod args;
pub mod headless;
pub mod interactive;
pub mod setup;

use std::ffi::OsString;
use std::io::{BufRead, Write};

pub use args::{parse_args, ArgsError, CliOptions, Mode};
pub use headless::run_headless;
pub use interactive::run_interactive;

/// Entry point over explicit streams; returns the process exit code.
pub fn main_with<I, T, R, W, E>(args: I, stdin: R, mut stdout: W, mut stderr: E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    R: BufRead,
    W: Write,
    E: Write,
{
    let opts = match parse_args(args) {
        Ok(opts) => opts,
        Err(ArgsError::Help(text)) => {
            let _ = write!(stdout, "{text}");
            return 0;
        }
        Err(e) => {
            let _ = writeln!(stderr, "{}", e.to_string().trim_end());
            if matches!(e, ArgsError::HeadlessWithoutGeometry) {
                let _ = writeln!(stderr, "\nFor more information, try '--help'.");
            }
            return e.exit_code();
        }
    };
    match opts.mode {
        Mode::Interactive => run_interactive(&opts, stdin, stdout),
        Mode::Headless => run_headless(&opts, stdout, stderr),
    }
}
