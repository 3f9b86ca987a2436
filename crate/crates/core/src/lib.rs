//! Fault-line stress simulation on a bounded integer grid.
//!
//! Fault geometry is drawn into a [`FaultMap`] with exact integer
//! rasterizers; a seeded stochastic engine then accumulates stress per cell
//! and counts cells that reach the quake threshold.

pub mod dynamics;
pub mod grid;
pub mod rasterize;
pub mod render;
pub mod rng;
pub mod scenario;
pub mod stats;

pub use dynamics::{
    run, step, ConfigError, DynamicsError, SimConfig, SimSummary, Simulation, StepReport,
};
pub use grid::{in_bounds, Cell, FaultMap, GridDims, GridError, StressMap};
pub use rasterize::{
    draw_circle, draw_horizontal, draw_segment, draw_vertical, Canvas, RasterError, ShapeSpec,
};
pub use render::{
    classify_stress, render_fault_map, render_stress_map, RenderStyle, StressBand, StressBands,
};
pub use rng::{SplitMix64, StressRng};
pub use scenario::{load_scenario, save_scenario, Scenario, ScenarioError};
pub use stats::write_stats;
