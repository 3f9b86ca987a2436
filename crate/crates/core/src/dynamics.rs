//! Stress accumulation engine.
//!
//! Each step draws one random delta per cell in row-major order (fault
//! cells and background cells use separate ranges), clamps at zero, then
//! scans for cells at or above the quake threshold and resets them to zero.

use std::ops::RangeInclusive;

use thiserror::Error;

use crate::grid::{Cell, FaultMap, GridDims, StressMap};
use crate::rng::{SplitMix64, StressRng};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("{name} must be at least 1")]
    NotPositive { name: &'static str },
    #[error("{name} range {min}..={max} is empty")]
    EmptyRange {
        name: &'static str,
        min: i64,
        max: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DynamicsError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("fault map is {map} but the configuration expects {config}")]
    DimensionMismatch { map: GridDims, config: GridDims },
}

/// Every tunable of a run.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimConfig {
    pub dims: GridDims,
    pub seed: u64,
    pub quake_threshold: u64,
    pub target_quakes: u64,
    pub nonfault_delta_min: i64,
    pub nonfault_delta_max: i64,
    pub fault_delta_min: i64,
    pub fault_delta_max: i64,
    /// Pause between rendered frames; the engine itself never sleeps.
    pub delay_ms: u64,
    pub max_steps: u64,
}

impl Default for SimConfig {
    fn default() -> Self {
        Self {
            dims: GridDims::default(),
            seed: 0,
            quake_threshold: 100,
            target_quakes: 3,
            nonfault_delta_min: -5,
            nonfault_delta_max: 5,
            fault_delta_min: 0,
            fault_delta_max: 10,
            delay_ms: 1000,
            max_steps: 100_000,
        }
    }
}

impl SimConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        for (name, v) in [
            ("quake_threshold", self.quake_threshold),
            ("target_quakes", self.target_quakes),
            ("max_steps", self.max_steps),
        ] {
            if v == 0 {
                return Err(ConfigError::NotPositive { name });
            }
        }
        for (name, min, max) in [
            (
                "nonfault_delta",
                self.nonfault_delta_min,
                self.nonfault_delta_max,
            ),
            ("fault_delta", self.fault_delta_min, self.fault_delta_max),
        ] {
            if min > max {
                return Err(ConfigError::EmptyRange { name, min, max });
            }
        }
        Ok(())
    }

    pub fn fault_deltas(&self) -> RangeInclusive<i64> {
        self.fault_delta_min..=self.fault_delta_max
    }

    pub fn nonfault_deltas(&self) -> RangeInclusive<i64> {
        self.nonfault_delta_min..=self.nonfault_delta_max
    }
}

/// Outcome of a single step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepReport {
    /// 1-based.
    pub step_index: u64,
    /// Row-major order.
    pub quaked_cells: Vec<Cell>,
    /// Pre-reset stress of each entry in `quaked_cells`.
    pub quake_stress: Vec<u64>,
    pub cumulative_quakes: u64,
    /// Largest value seen before quaked cells were reset.
    pub max_stress: u64,
    /// Sum of all cells after reset; with `cell_count` gives the exact mean.
    pub stress_sum: u128,
    pub cell_count: u64,
}

impl StepReport {
    pub fn quakes_this_step(&self) -> u64 {
        self.quaked_cells.len() as u64
    }

    /// The post-step map with quaked cells restored to their pre-reset
    /// values, i.e. the state at the moment the quakes happened.
    pub fn pre_reset_view(&self, post: &StressMap) -> StressMap {
        let mut view = post.clone();
        for (c, &v) in self.quaked_cells.iter().zip(&self.quake_stress) {
            view.set(c.x as usize, c.y as usize, v);
        }
        view
    }

    pub fn mean_stress(&self) -> f64 {
        self.stress_sum as f64 / self.cell_count as f64
    }

    /// Mean stress rounded half away from zero to two decimals, computed
    /// exactly from the integer sum.
    pub fn mean_stress_2dp(&self) -> String {
        format_ratio_2dp(self.stress_sum, self.cell_count as u128)
    }
}

/// `num / den` to two decimal places, ties rounded up.
pub fn format_ratio_2dp(num: u128, den: u128) -> String {
    assert!(den > 0, "zero denominator");
    let hundredths = (200 * num + den) / (2 * den);
    format!("{}.{:02}", hundredths / 100, hundredths % 100)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimSummary {
    pub total_steps: u64,
    pub total_quakes: u64,
    pub final_stress: StressMap,
    pub reports: Vec<StepReport>,
    /// Set when the run stopped at `max_steps` short of `target_quakes`.
    pub hit_max_steps: bool,
}

/// Advances `stress` by one step.
///
/// `step_index` is the 1-based index of this step and `cumulative` the
/// number of quakes before it.
///
/// Panics if the maps or config disagree on dimensions, or if a delta range
/// is empty.
pub fn step<R: StressRng + ?Sized>(
    stress: &mut StressMap,
    faults: &FaultMap,
    cfg: &SimConfig,
    rng: &mut R,
    step_index: u64,
    cumulative: u64,
) -> StepReport {
    let dims = cfg.dims;
    assert_eq!(stress.dims(), dims, "stress map dimensions");
    assert_eq!(faults.dims(), dims, "fault map dimensions");

    let faults_flat = faults.rows().flatten();
    let mut max_stress = 0;
    for (value, &is_fault) in stress.values_mut().iter_mut().zip(faults_flat) {
        let delta = if is_fault {
            rng.range(cfg.fault_delta_min, cfg.fault_delta_max)
        } else {
            rng.range(cfg.nonfault_delta_min, cfg.nonfault_delta_max)
        };
        let next = (*value as i128 + delta as i128).clamp(0, u64::MAX as i128);
        *value = next as u64;
        max_stress = max_stress.max(*value);
    }

    let width = dims.width();
    let mut quaked_cells = Vec::new();
    let mut quake_stress = Vec::new();
    for (i, value) in stress.values_mut().iter_mut().enumerate() {
        if *value >= cfg.quake_threshold {
            quaked_cells.push(Cell::new((i % width) as i64, (i / width) as i64));
            quake_stress.push(std::mem::take(value));
        }
    }

    StepReport {
        step_index,
        cumulative_quakes: cumulative + quaked_cells.len() as u64,
        quaked_cells,
        quake_stress,
        max_stress,
        stress_sum: stress.total(),
        cell_count: dims.area() as u64,
    }
}

/// A run in progress: owns the stress map and the generator.
#[derive(Debug, Clone)]
pub struct Simulation<R = SplitMix64> {
    faults: FaultMap,
    cfg: SimConfig,
    stress: StressMap,
    rng: R,
    steps: u64,
    quakes: u64,
}

impl Simulation<SplitMix64> {
    pub fn new(faults: FaultMap, cfg: SimConfig) -> Result<Self, DynamicsError> {
        let rng = SplitMix64::new(cfg.seed);
        Self::with_rng(faults, cfg, rng)
    }
}

impl<R: StressRng> Simulation<R> {
    /// Like [`Simulation::new`] but with a caller-supplied generator; the
    /// configured seed is ignored.
    pub fn with_rng(faults: FaultMap, cfg: SimConfig, rng: R) -> Result<Self, DynamicsError> {
        cfg.validate()?;
        if faults.dims() != cfg.dims {
            return Err(DynamicsError::DimensionMismatch {
                map: faults.dims(),
                config: cfg.dims,
            });
        }
        Ok(Self {
            stress: StressMap::new(cfg.dims),
            faults,
            cfg,
            rng,
            steps: 0,
            quakes: 0,
        })
    }

    pub fn step(&mut self) -> StepReport {
        self.steps += 1;
        let report = step(
            &mut self.stress,
            &self.faults,
            &self.cfg,
            &mut self.rng,
            self.steps,
            self.quakes,
        );
        self.quakes = report.cumulative_quakes;
        report
    }

    /// True once the quake target or the step cap has been reached.
    pub fn finished(&self) -> bool {
        self.target_reached() || self.steps >= self.cfg.max_steps
    }

    pub fn target_reached(&self) -> bool {
        self.quakes >= self.cfg.target_quakes
    }

    pub fn stress(&self) -> &StressMap {
        &self.stress
    }

    pub fn faults(&self) -> &FaultMap {
        &self.faults
    }

    pub fn config(&self) -> &SimConfig {
        &self.cfg
    }

    pub fn rng(&self) -> &R {
        &self.rng
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn quakes(&self) -> u64 {
        self.quakes
    }

    /// Steps until finished, handing each report and the post-step map to
    /// `observer`.
    pub fn run_to_end<F>(mut self, mut observer: F) -> SimSummary
    where
        F: FnMut(&StepReport, &StressMap),
    {
        let mut reports = Vec::new();
        while !self.finished() {
            let report = self.step();
            observer(&report, &self.stress);
            reports.push(report);
        }
        SimSummary {
            total_steps: self.steps,
            total_quakes: self.quakes,
            hit_max_steps: !self.target_reached(),
            final_stress: self.stress,
            reports,
        }
    }
}

/// Runs from an all-zero stress map with a generator seeded from
/// `cfg.seed` until `cfg.target_quakes` or `cfg.max_steps` is reached.
pub fn run<F>(faults: &FaultMap, cfg: &SimConfig, observer: F) -> Result<SimSummary, DynamicsError>
where
    F: FnMut(&StepReport, &StressMap),
{
    Ok(Simulation::new(faults.clone(), cfg.clone())?.run_to_end(observer))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Replays a fixed list of deltas, ignoring the requested range.
    struct Scripted(std::vec::IntoIter<i64>);

    impl StressRng for Scripted {
        fn next_u64(&mut self) -> u64 {
            unreachable!()
        }

        fn range(&mut self, _: i64, _: i64) -> i64 {
            self.0.next().expect("script exhausted")
        }
    }

    fn dims(w: usize, h: usize) -> GridDims {
        GridDims::new(w, h).unwrap()
    }

    fn one_cell_fault_cfg() -> (FaultMap, SimConfig) {
        let mut faults = FaultMap::new(dims(1, 1));
        faults.mark(0, 0);
        let cfg = SimConfig {
            dims: dims(1, 1),
            quake_threshold: 10,
            target_quakes: 1,
            fault_delta_min: 5,
            fault_delta_max: 5,
            ..SimConfig::default()
        };
        (faults, cfg)
    }

    #[test]
    fn negative_stress_clamps_to_zero() {
        let cfg = SimConfig {
            dims: dims(1, 1),
            ..SimConfig::default()
        };
        let faults = FaultMap::new(cfg.dims);
        let mut stress = StressMap::new(cfg.dims);
        stress.set(0, 0, 2);
        let report = step(
            &mut stress,
            &faults,
            &cfg,
            &mut Scripted(vec![-5].into_iter()),
            1,
            0,
        );
        assert_eq!(stress.get(0, 0), 0);
        assert_eq!(report.max_stress, 0);
    }

    #[test]
    fn fault_cell_over_threshold_quakes_and_resets() {
        let cfg = SimConfig {
            dims: dims(2, 1),
            ..SimConfig::default()
        };
        let mut faults = FaultMap::new(cfg.dims);
        faults.mark(1, 0);
        let mut stress = StressMap::new(cfg.dims);
        stress.set(1, 0, 95);
        stress.set(0, 0, 40);
        let r = step(
            &mut stress,
            &faults,
            &cfg,
            &mut Scripted(vec![1, 10].into_iter()),
            4,
            2,
        );
        assert_eq!(r.quaked_cells, vec![Cell::new(1, 0)]);
        assert_eq!(r.quakes_this_step(), 1);
        assert_eq!(r.cumulative_quakes, 3);
        assert_eq!(r.max_stress, 105);
        assert_eq!(stress.values(), &[41, 0]);
        assert_eq!(r.quake_stress, vec![105]);
        assert_eq!(r.pre_reset_view(&stress).values(), &[41, 105]);
        assert_eq!(r.stress_sum, 41);
        assert_eq!(r.mean_stress_2dp(), "20.50");
    }

    #[test]
    fn non_fault_cells_quake_too() {
        let cfg = SimConfig {
            dims: dims(1, 1),
            quake_threshold: 3,
            ..SimConfig::default()
        };
        let faults = FaultMap::new(cfg.dims);
        let mut stress = StressMap::new(cfg.dims);
        let r = step(
            &mut stress,
            &faults,
            &cfg,
            &mut Scripted(vec![3].into_iter()),
            1,
            0,
        );
        assert_eq!(r.quakes_this_step(), 1);
    }

    #[test]
    fn one_cell_quakes_on_second_step() {
        let (faults, cfg) = one_cell_fault_cfg();
        let mut sim = Simulation::new(faults, cfg).unwrap();
        let first = sim.step();
        assert_eq!(first.quakes_this_step(), 0);
        assert_eq!(sim.stress().get(0, 0), 5);
        let second = sim.step();
        assert_eq!(second.quaked_cells, vec![Cell::new(0, 0)]);
        assert_eq!(second.max_stress, 10);
        assert_eq!(sim.stress().get(0, 0), 0);
    }

    #[test]
    fn run_stops_at_target() {
        let (faults, cfg) = one_cell_fault_cfg();
        let mut seen = 0;
        let s = run(&faults, &cfg, |_, _| seen += 1).unwrap();
        assert_eq!((s.total_steps, s.total_quakes), (2, 1));
        assert_eq!(seen, 2);
        assert!(!s.hit_max_steps);
    }

    #[test]
    fn run_without_growth_hits_max_steps() {
        let cfg = SimConfig {
            dims: dims(4, 4),
            nonfault_delta_min: 0,
            nonfault_delta_max: 0,
            max_steps: 250,
            ..SimConfig::default()
        };
        let s = run(&FaultMap::new(cfg.dims), &cfg, |_, _| {}).unwrap();
        assert_eq!(s.total_steps, 250);
        assert_eq!(s.total_quakes, 0);
        assert!(s.hit_max_steps);
        assert_eq!(s.final_stress.total(), 0);
    }

    #[test]
    fn run_is_deterministic() {
        let cfg = SimConfig {
            seed: 1234,
            ..SimConfig::default()
        };
        let mut faults = FaultMap::new(cfg.dims);
        crate::rasterize::draw_segment(&mut faults, 0, 0, 19, 12).unwrap();
        let a = run(&faults, &cfg, |_, _| {}).unwrap();
        let b = run(&faults, &cfg, |_, _| {}).unwrap();
        assert_eq!(a, b);
        assert!(a.total_quakes >= 3);
    }

    #[test]
    fn run_rejects_bad_inputs() {
        let cfg = SimConfig::default();
        let small = FaultMap::new(dims(3, 3));
        assert!(matches!(
            run(&small, &cfg, |_, _| {}),
            Err(DynamicsError::DimensionMismatch { .. })
        ));
        let bad = SimConfig {
            fault_delta_min: 4,
            fault_delta_max: 3,
            ..SimConfig::default()
        };
        assert!(matches!(
            run(&FaultMap::new(bad.dims), &bad, |_, _| {}),
            Err(DynamicsError::Config(ConfigError::EmptyRange { .. }))
        ));
        let zero = SimConfig {
            target_quakes: 0,
            ..SimConfig::default()
        };
        assert!(zero.validate().is_err());
    }

    #[test]
    fn ratio_formatting_rounds_half_up() {
        assert_eq!(format_ratio_2dp(9, 2), "4.50");
        assert_eq!(format_ratio_2dp(801, 200), "4.01");
        assert_eq!(format_ratio_2dp(0, 7), "0.00");
        assert_eq!(format_ratio_2dp(2, 3), "0.67");
        assert_eq!(format_ratio_2dp(1, 3), "0.33");
        assert_eq!(format_ratio_2dp(1, 8), "0.13");
    }
}
