//! Command-line flags.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;
use faultsim_core::grid::MAX_DIM;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Interactive,
    Headless,
}

/// Parsed flags. `None` means "take it from the scenario file, or the default".
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CliOptions {
    pub mode: Mode,
    pub scenario_path: Option<PathBuf>,
    pub out_path: Option<PathBuf>,
    pub seed: Option<u64>,
    pub width: Option<usize>,
    pub height: Option<usize>,
    pub quakes: Option<u64>,
    pub threshold: Option<u64>,
    pub delay_ms: Option<u64>,
    pub max_steps: Option<u64>,
    pub no_color: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArgsError {
    /// `--help` was given; carries the help text.
    #[error("{0}")]
    Help(String),
    #[error("{0}")]
    UnknownFlag(String),
    #[error("{0}")]
    MissingValue(String),
    #[error("{0}")]
    MalformedValue(String),
    #[error("--headless needs --scenario PATH or both --width and --height")]
    HeadlessWithoutGeometry,
}

impl ArgsError {
    pub fn exit_code(&self) -> i32 {
        match self {
            ArgsError::Help(_) => 0,
            _ => 1,
        }
    }
}

/// Seeded fault-line stress simulator.
///
/// Without --headless an interactive menu is shown for drawing faults
/// before the simulation starts.
#[derive(Debug, Parser)]
#[command(name = "faultsim", version)]
struct Flags {
    /// Run without prompts or rendering and write per-step statistics as CSV
    #[arg(long)]
    headless: bool,
    /// Scenario file to load (config and fault map)
    #[arg(long, value_name = "PATH")]
    scenario: Option<PathBuf>,
    /// Where to write the statistics CSV (default: standard output)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Random seed; a clock-derived seed is used and echoed when omitted
    #[arg(long, value_name = "N")]
    seed: Option<u64>,
    /// Grid width in cells
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..=MAX_DIM as u64))]
    width: Option<u64>,
    /// Grid height in cells
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..=MAX_DIM as u64))]
    height: Option<u64>,
    /// Number of earthquakes to simulate
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    quakes: Option<u64>,
    /// Stress at which a cell quakes
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    threshold: Option<u64>,
    /// Pause between frames in milliseconds
    #[arg(long = "delay-ms", value_name = "N")]
    delay_ms: Option<u64>,
    /// Stop after this many steps even if the quake target is not reached
    #[arg(long = "max-steps", value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    max_steps: Option<u64>,
    /// Disable ANSI colors and screen clearing
    #[arg(long = "no-color")]
    no_color: bool,
}

/// Parses the arguments after the program name.
pub fn parse_args<I, T>(args: I) -> Result<CliOptions, ArgsError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("faultsim")).chain(args.into_iter().map(Into::into));
    let flags = Flags::try_parse_from(argv).map_err(|e| {
        let text = e.render().to_string();
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ArgsError::Help(text),
            ErrorKind::UnknownArgument => ArgsError::UnknownFlag(text),
            ErrorKind::InvalidValue if e.to_string().contains("value is required") => {
                ArgsError::MissingValue(text)
            }
            ErrorKind::NoEquals | ErrorKind::WrongNumberOfValues | ErrorKind::TooFewValues => {
                ArgsError::MissingValue(text)
            }
            _ => ArgsError::MalformedValue(text),
        }
    })?;

    let opts = CliOptions {
        mode: if flags.headless {
            Mode::Headless
        } else {
            Mode::Interactive
        },
        scenario_path: flags.scenario,
        out_path: flags.out,
        seed: flags.seed,
        width: flags.width.map(|w| w as usize),
        height: flags.height.map(|h| h as usize),
        quakes: flags.quakes,
        threshold: flags.threshold,
        delay_ms: flags.delay_ms,
        max_steps: flags.max_steps,
        no_color: flags.no_color,
    };
    if opts.mode == Mode::Headless
        && opts.scenario_path.is_none()
        && (opts.width.is_none() || opts.height.is_none())
    {
        return Err(ArgsError::HeadlessWithoutGeometry);
    }
    Ok(opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn headless_with_scenario() {
        let o = parse_args(["--seed", "42", "--headless", "--scenario", "s.txt"]).unwrap();
        assert_eq!(o.mode, Mode::Headless);
        assert_eq!(o.seed, Some(42));
        assert_eq!(o.scenario_path, Some(PathBuf::from("s.txt")));
    }

    #[test]
    fn empty_is_interactive_defaults() {
        let o = parse_args(Vec::<String>::new()).unwrap();
        assert_eq!(o, CliOptions::default());
    }

    #[test]
    fn zero_width_is_malformed() {
        assert!(matches!(
            parse_args(["--width", "0"]),
            Err(ArgsError::MalformedValue(_))
        ));
        assert!(matches!(
            parse_args(["--height", "1025"]),
            Err(ArgsError::MalformedValue(_))
        ));
        assert!(matches!(
            parse_args(["--seed", "-3"]),
            Err(ArgsError::MalformedValue(_)) | Err(ArgsError::UnknownFlag(_))
        ));
        assert!(matches!(
            parse_args(["--quakes", "many"]),
            Err(ArgsError::MalformedValue(_))
        ));
    }

    #[test]
    fn unknown_and_missing() {
        assert!(matches!(
            parse_args(["--colour"]),
            Err(ArgsError::UnknownFlag(_))
        ));
        assert!(matches!(
            parse_args(["--seed"]),
            Err(ArgsError::MissingValue(_))
        ));
    }

    #[test]
    fn help_exits_zero() {
        let e = parse_args(["--help"]).unwrap_err();
        assert_eq!(e.exit_code(), 0);
        assert!(e.to_string().contains("--no-color"));
    }

    #[test]
    fn headless_needs_geometry() {
        assert_eq!(
            parse_args(["--headless", "--width", "5"]),
            Err(ArgsError::HeadlessWithoutGeometry)
        );
        let o = parse_args(["--headless", "--width", "5", "--height", "4", "--no-color"]).unwrap();
        assert_eq!((o.width, o.height, o.no_color), (Some(5), Some(4), true));
    }

    #[test]
    fn all_overrides() {
        let o = parse_args([
            "--quakes",
            "2",
            "--threshold",
            "50",
            "--delay-ms",
            "0",
            "--max-steps",
            "9",
            "--out",
            "o.csv",
        ])
        .unwrap();
        assert_eq!(o.quakes, Some(2));
        assert_eq!(o.threshold, Some(50));
        assert_eq!(o.delay_ms, Some(0));
        assert_eq!(o.max_steps, Some(9));
        assert_eq!(o.out_path, Some(PathBuf::from("o.csv")));
    }
}
