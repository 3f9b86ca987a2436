//! The `FAULTSIM 1` scenario file: a config block followed by the fault map.
//!
//! ```text
//! FAULTSIM 1
//! width 2
//! height 2
//! seed 42
//! ... (remaining config keys, fixed order)
//! map
//! 01
//! 00
//! end
//! ```
//!
//! The format is canonical: the loader accepts exactly what the writer
//! produces (fixed key order, one space, plain decimal integers, `\n` line
//! endings), so every accepted file re-saves byte for byte.

use std::io::{self, Read, Write};

use thiserror::Error;

use crate::dynamics::{ConfigError, SimConfig};
use crate::grid::{FaultMap, GridDims};

pub const MAGIC: &str = "FAULTSIM 1";

const KEYS: [&str; 11] = [
    "width",
    "height",
    "seed",
    "quake_threshold",
    "target_quakes",
    "nonfault_delta_min",
    "nonfault_delta_max",
    "fault_delta_min",
    "fault_delta_max",
    "delay_ms",
    "max_steps",
];

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("not a scenario file: first line must be `{MAGIC}`")]
    BadMagic,
    #[error("line {line}: expected key `{key}`")]
    MissingKey { line: usize, key: &'static str },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: bad value for `{key}`: {reason}")]
    MalformedValue {
        line: usize,
        key: &'static str,
        reason: String,
    },
    #[error("line {line}: map does not match a {dims} grid of 0/1")]
    MapShapeMismatch { line: usize, dims: GridDims },
    #[error("line {line}: content after `end`")]
    TrailingGarbage { line: usize },
    #[error("invalid configuration: {0}")]
    Config(#[from] ConfigError),
    #[error("scenario config is {config} but its map is {map}")]
    DimensionMismatch { config: GridDims, map: GridDims },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// A configuration together with its fault map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    cfg: SimConfig,
    faults: FaultMap,
}

impl Scenario {
    pub fn new(cfg: SimConfig, faults: FaultMap) -> Result<Self, ScenarioError> {
        cfg.validate()?;
        if cfg.dims != faults.dims() {
            return Err(ScenarioError::DimensionMismatch {
                config: cfg.dims,
                map: faults.dims(),
            });
        }
        Ok(Self { cfg, faults })
    }

    pub fn config(&self) -> &SimConfig {
        &self.cfg
    }

    pub fn faults(&self) -> &FaultMap {
        &self.faults
    }

    pub fn into_parts(self) -> (SimConfig, FaultMap) {
        (self.cfg, self.faults)
    }

    pub fn to_text(&self) -> String {
        let c = &self.cfg;
        let values: [String; 11] = [
            c.dims.width().to_string(),
            c.dims.height().to_string(),
            c.seed.to_string(),
            c.quake_threshold.to_string(),
            c.target_quakes.to_string(),
            c.nonfault_delta_min.to_string(),
            c.nonfault_delta_max.to_string(),
            c.fault_delta_min.to_string(),
            c.fault_delta_max.to_string(),
            c.delay_ms.to_string(),
            c.max_steps.to_string(),
        ];
        let mut out = String::new();
        out.push_str(MAGIC);
        out.push('\n');
        for (key, value) in KEYS.iter().zip(values) {
            out.push_str(key);
            out.push(' ');
            out.push_str(&value);
            out.push('\n');
        }
        out.push_str("map\n");
        for row in self.faults.rows() {
            out.extend(row.iter().map(|&f| if f { '1' } else { '0' }));
            out.push('\n');
        }
        out.push_str("end\n");
        out
    }

    pub fn parse(text: &[u8]) -> Result<Self, ScenarioError> {
        Parser::new(text).scenario()
    }
}

pub fn save_scenario<W: Write>(scenario: &Scenario, mut sink: W) -> Result<(), ScenarioError> {
    sink.write_all(scenario.to_text().as_bytes())?;
    sink.flush()?;
    Ok(())
}

pub fn load_scenario<R: Read>(mut source: R) -> Result<Scenario, ScenarioError> {
    let mut buf = Vec::new();
    source.read_to_end(&mut buf)?;
    Scenario::parse(&buf)
}

type Lines<'a> = std::iter::Enumerate<std::slice::Split<'a, u8, fn(&u8) -> bool>>;

struct Parser<'a> {
    lines: Lines<'a>,
    /// 1-based number of the last line handed out.
    line: usize,
    /// Byte after the final newline; must be empty.
    tail_is_empty: bool,
}

impl<'a> Parser<'a> {
    fn new(text: &'a [u8]) -> Self {
        let is_nl: fn(&u8) -> bool = |&b| b == b'\n';
        // A well-formed file ends in '\n', leaving an empty final piece.
        let (body, tail_is_empty) = match text.last() {
            Some(b'\n') => (&text[..text.len() - 1], true),
            _ => (text, false),
        };
        Self {
            lines: body.split(is_nl).enumerate(),
            line: 0,
            tail_is_empty,
        }
    }

    fn next_line(&mut self) -> Option<&'a [u8]> {
        let (i, l) = self.lines.next()?;
        self.line = i + 1;
        Some(l)
    }

    fn scenario(mut self) -> Result<Scenario, ScenarioError> {
        if self.next_line() != Some(MAGIC.as_bytes()) {
            return Err(ScenarioError::BadMagic);
        }
        let mut raw = [""; 11];
        for (slot, &key) in raw.iter_mut().zip(KEYS.iter()) {
            *slot = self.key_line(key)?;
        }
        let line = self.line;
        let int = |idx: usize| parse_int(raw[idx], KEYS[idx], line - 10 + idx);

        let width = int(0)?;
        let height = int(1)?;
        let dims = match (usize::try_from(width), usize::try_from(height)) {
            (Ok(w), Ok(h)) => GridDims::new(w, h).map_err(|e| ScenarioError::MalformedValue {
                line: line - 10,
                key: "width",
                reason: e.to_string(),
            })?,
            _ => {
                return Err(ScenarioError::MalformedValue {
                    line: line - 10,
                    key: "width",
                    reason: "grid dimensions must be positive".into(),
                })
            }
        };
        let unsigned = |idx: usize| -> Result<u64, ScenarioError> {
            u64::try_from(int(idx)?).map_err(|_| ScenarioError::MalformedValue {
                line: line - 10 + idx,
                key: KEYS[idx],
                reason: "out of range".into(),
            })
        };
        let signed = |idx: usize| -> Result<i64, ScenarioError> {
            i64::try_from(int(idx)?).map_err(|_| ScenarioError::MalformedValue {
                line: line - 10 + idx,
                key: KEYS[idx],
                reason: "out of range".into(),
            })
        };
        let cfg = SimConfig {
            dims,
            seed: unsigned(2)?,
            quake_threshold: unsigned(3)?,
            target_quakes: unsigned(4)?,
            nonfault_delta_min: signed(5)?,
            nonfault_delta_max: signed(6)?,
            fault_delta_min: signed(7)?,
            fault_delta_max: signed(8)?,
            delay_ms: unsigned(9)?,
            max_steps: unsigned(10)?,
        };
        cfg.validate().map_err(|e| {
            let key = match e {
                ConfigError::NotPositive { name } | ConfigError::EmptyRange { name, .. } => name,
            };
            ScenarioError::MalformedValue {
                line,
                key,
                reason: e.to_string(),
            }
        })?;

        if self.next_line() != Some(b"map") {
            return Err(ScenarioError::MapShapeMismatch {
                line: self.line + 1,
                dims,
            });
        }
        let mut faults = FaultMap::new(dims);
        for y in 0..dims.height() {
            let row = self.next_line().filter(|r| r.len() == dims.width());
            let row = row.ok_or(ScenarioError::MapShapeMismatch {
                line: self.line,
                dims,
            })?;
            for (x, &b) in row.iter().enumerate() {
                match b {
                    b'0' => {}
                    b'1' => {
                        faults.mark(x, y);
                    }
                    _ => {
                        return Err(ScenarioError::MapShapeMismatch {
                            line: self.line,
                            dims,
                        })
                    }
                }
            }
        }
        if self.next_line() != Some(b"end") {
            return Err(ScenarioError::MapShapeMismatch {
                line: self.line,
                dims,
            });
        }
        if self.next_line().is_some() {
            return Err(ScenarioError::TrailingGarbage { line: self.line });
        }
        if !self.tail_is_empty {
            // "end" without its newline
            return Err(ScenarioError::TrailingGarbage { line: self.line });
        }
        Ok(Scenario { cfg, faults })
    }

    /// Reads `key value` and returns the value text.
    fn key_line(&mut self, key: &'static str) -> Result<&'a str, ScenarioError> {
        let missing = |line| ScenarioError::MissingKey { line, key };
        let Some(raw) = self.next_line() else {
            return Err(missing(self.line + 1));
        };
        let line = self.line;
        let text = std::str::from_utf8(raw).map_err(|_| missing(line))?;
        let (k, v) = text.split_once(' ').unwrap_or((text, ""));
        if k == key {
            return Ok(v);
        }
        if KEYS.contains(&k) {
            Err(missing(line))
        } else {
            Err(ScenarioError::UnknownKey {
                line,
                key: k.to_string(),
            })
        }
    }
}

/// Plain decimal only: optional leading '-', no '+', no leading zeros, no "-0".
fn parse_int(text: &str, key: &'static str, line: usize) -> Result<i128, ScenarioError> {
    let bad = |reason: &str| ScenarioError::MalformedValue {
        line,
        key,
        reason: format!("{reason}: {text:?}"),
    };
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad("not an integer"));
    }
    if digits.len() > 1 && digits.starts_with('0') || text == "-0" {
        return Err(bad("non-canonical integer"));
    }
    if digits.len() > 20 {
        return Err(bad("out of range"));
    }
    text.parse::<i128>().map_err(|_| bad("out of range"))
}
