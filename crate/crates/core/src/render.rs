//! Text rendering of fault and stress maps with ANSI SGR colors.

use std::fmt::Write;

use thiserror::Error;

use crate::grid::{FaultMap, StressMap};

pub const RED: &str = "\x1b[31m";
pub const GREEN: &str = "\x1b[32m";
pub const YELLOW: &str = "\x1b[33m";
pub const BLUE: &str = "\x1b[34m";
pub const RESET: &str = "\x1b[0m";

/// Largest value a stress cell can display; larger values show as this.
pub const DISPLAY_MAX: u64 = 999;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StressBand {
    Low,
    Medium,
    High,
    Quake,
}

impl StressBand {
    pub fn color(self) -> &'static str {
        match self {
            StressBand::Low => GREEN,
            StressBand::Medium => YELLOW,
            StressBand::High => RED,
            StressBand::Quake => BLUE,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error(
    "stress bands need 0 <= low_max ({low_max}) < med_max ({med_max}) < threshold ({threshold})"
)]
pub struct BandError {
    pub low_max: u64,
    pub med_max: u64,
    pub threshold: u64,
}

/// Upper edges of the Low and Medium bands. High runs to the quake
/// threshold minus one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StressBands {
    low_max: u64,
    med_max: u64,
}

impl StressBands {
    pub fn new(low_max: u64, med_max: u64, threshold: u64) -> Result<Self, BandError> {
        if low_max < med_max && med_max < threshold {
            Ok(Self { low_max, med_max })
        } else {
            Err(BandError {
                low_max,
                med_max,
                threshold,
            })
        }
    }

    /// Thirds of `threshold - 1`; 33/66 for the default threshold of 100.
    ///
    /// For thresholds below 3 the bands collapse, which [`classify_stress`]
    /// tolerates.
    pub fn for_threshold(threshold: u64) -> Self {
        let top = threshold.saturating_sub(1);
        Self {
            low_max: top / 3,
            med_max: top * 2 / 3,
        }
    }

    pub fn low_max(&self) -> u64 {
        self.low_max
    }

    pub fn med_max(&self) -> u64 {
        self.med_max
    }
}

impl Default for StressBands {
    fn default() -> Self {
        Self {
            low_max: 33,
            med_max: 66,
        }
    }
}

pub fn classify_stress(value: u64, bands: StressBands, threshold: u64) -> StressBand {
    if value >= threshold {
        StressBand::Quake
    } else if value <= bands.low_max {
        StressBand::Low
    } else if value <= bands.med_max {
        StressBand::Medium
    } else {
        StressBand::High
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderStyle {
    pub color_enabled: bool,
}

impl RenderStyle {
    pub const COLOR: Self = Self {
        color_enabled: true,
    };
    pub const PLAIN: Self = Self {
        color_enabled: false,
    };
}

impl Default for RenderStyle {
    fn default() -> Self {
        Self::COLOR
    }
}

/// `1` for fault cells (red when colored), `0` otherwise, space separated.
pub fn render_fault_map(map: &FaultMap, style: RenderStyle) -> String {
    let mut out = String::with_capacity(map.dims().area() * 2);
    for row in map.rows() {
        for (i, &fault) in row.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            match (fault, style.color_enabled) {
                (true, true) => {
                    out.push_str(RED);
                    out.push('1');
                    out.push_str(RESET);
                }
                (true, false) => out.push('1'),
                (false, _) => out.push('0'),
            }
        }
        out.push('\n');
    }
    out
}

/// Right-aligned three-character cells, colored by band.
pub fn render_stress_map(
    stress: &StressMap,
    bands: StressBands,
    threshold: u64,
    style: RenderStyle,
) -> String {
    let mut out = String::with_capacity(stress.dims().area() * 12);
    for row in stress.rows() {
        for (i, &value) in row.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let shown = value.min(DISPLAY_MAX);
            if style.color_enabled {
                let color = classify_stress(value, bands, threshold).color();
                let _ = write!(out, "{color}{shown:>3}{RESET}");
            } else {
                let _ = write!(out, "{shown:>3}");
            }
        }
        out.push('\n');
    }
    out
}

/// Removes CSI escape sequences (`ESC [ ... final-byte`).
pub fn strip_ansi(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        if c == '\x1b' && chars.peek() == Some(&'[') {
            chars.next();
            for c in chars.by_ref() {
                if ('@'..='~').contains(&c) {
                    break;
                }
            }
        } else {
            out.push(c);
        }
    }
    out
}
