//! Batch runs: no prompts, no rendering, no delay.

use std::fs::File;
use std::io::{BufWriter, Write};

use faultsim_core::{run, write_stats};

use crate::args::CliOptions;
use crate::setup::resolve;

/// Exit code when `max_steps` ran out before the quake target.
pub const EXIT_MAX_STEPS: i32 = 2;

/// Writes the statistics CSV to `--out` (or `stdout`) and one
/// `steps=.. quakes=.. seed=..` line to `stdout`, or to `stderr` when the
/// CSV itself goes to `stdout`.
pub fn run_headless<W: Write, E: Write>(opts: &CliOptions, mut stdout: W, mut stderr: E) -> i32 {
    let (cfg, faults) = match resolve(opts) {
        Ok(setup) => setup,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 1;
        }
    };
    let summary = match run(&faults, &cfg, |_, _| {}) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 1;
        }
    };

    let written = match &opts.out_path {
        Some(path) => File::create(path)
            .and_then(|f| write_stats(&summary.reports, BufWriter::new(f)))
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => write_stats(&summary.reports, &mut stdout).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return 1;
    }

    let line = format!(
        "steps={} quakes={} seed={}",
        summary.total_steps, summary.total_quakes, cfg.seed
    );
    let echoed = if opts.out_path.is_some() {
        writeln!(stdout, "{line}")
    } else {
        writeln!(stderr, "{line}")
    };
    if echoed.is_err() {
        return 1;
    }
    if summary.hit_max_steps {
        EXIT_MAX_STEPS
    } else {
        0
    }
}
