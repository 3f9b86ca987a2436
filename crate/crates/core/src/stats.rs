//! Per-step statistics as CSV.

use std::io::{self, Write};

use crate::dynamics::StepReport;

pub const STATS_HEADER: &str = "step,quakes,cumulative_quakes,max_stress,mean_stress";

pub fn stats_row(r: &StepReport) -> String {
    format!(
        "{},{},{},{},{}",
        r.step_index,
        r.quakes_this_step(),
        r.cumulative_quakes,
        r.max_stress,
        r.mean_stress_2dp()
    )
}

/// Header line plus one row per report, `\n` terminated.
pub fn write_stats<'a, W, I>(reports: I, mut sink: W) -> io::Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a StepReport>,
{
    writeln!(sink, "{STATS_HEADER}")?;
    for r in reports {
        writeln!(sink, "{}", stats_row(r))?;
    }
    sink.flush()
}
