//! Merges defaults, scenario file and flags into a runnable setup.

use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use faultsim_core::{load_scenario, FaultMap, GridDims, GridError, ScenarioError, SimConfig};
use thiserror::Error;

use crate::args::CliOptions;

#[derive(Debug, Error)]
pub enum SetupError {
    #[error("cannot read scenario {path}: {source}")]
    Scenario {
        path: PathBuf,
        source: ScenarioError,
    },
    #[error("cannot open scenario {path}: {source}")]
    Open {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("--width/--height ({flags}) conflict with the scenario map ({map})")]
    DimsConflict { flags: GridDims, map: GridDims },
}

/// Precedence: explicit flags, then scenario values, then defaults. The seed
/// falls back to the wall clock only when neither gives one.
pub fn resolve(opts: &CliOptions) -> Result<(SimConfig, FaultMap), SetupError> {
    let (mut cfg, faults, has_seed) = match &opts.scenario_path {
        Some(path) => {
            let file = File::open(path).map_err(|source| SetupError::Open {
                path: path.clone(),
                source,
            })?;
            let scenario =
                load_scenario(BufReader::new(file)).map_err(|source| SetupError::Scenario {
                    path: path.clone(),
                    source,
                })?;
            let (cfg, faults) = scenario.into_parts();
            (cfg, faults, true)
        }
        None => {
            let dims = GridDims::new(
                opts.width.unwrap_or(GridDims::default().width()),
                opts.height.unwrap_or(GridDims::default().height()),
            )?;
            let cfg = SimConfig {
                dims,
                ..SimConfig::default()
            };
            (cfg, FaultMap::new(dims), false)
        }
    };

    if opts.width.is_some() || opts.height.is_some() {
        let flags = GridDims::new(
            opts.width.unwrap_or(cfg.dims.width()),
            opts.height.unwrap_or(cfg.dims.height()),
        )?;
        if flags != cfg.dims {
            return Err(SetupError::DimsConflict {
                flags,
                map: cfg.dims,
            });
        }
    }
    if let Some(seed) = opts.seed {
        cfg.seed = seed;
    } else if !has_seed {
        cfg.seed = clock_seed();
    }
    if let Some(q) = opts.quakes {
        cfg.target_quakes = q;
    }
    if let Some(t) = opts.threshold {
        cfg.quake_threshold = t;
    }
    if let Some(d) = opts.delay_ms {
        cfg.delay_ms = d;
    }
    if let Some(m) = opts.max_steps {
        cfg.max_steps = m;
    }
    Ok((cfg, faults))
}

fn clock_seed() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_nanos() as u64)
        .unwrap_or(0)
}
