#![allow(dead_code)]

use std::collections::BTreeSet;

use faultsim_core::{Canvas, GridDims};

/// Records every write and panics on any write outside its bounds.
pub struct GuardedCanvas {
    dims: GridDims,
    pub cells: BTreeSet<(i64, i64)>,
    pub writes: usize,
}

impl GuardedCanvas {
    pub fn new(dims: GridDims) -> Self {
        Self {
            dims,
            cells: BTreeSet::new(),
            writes: 0,
        }
    }
}

impl Canvas for GuardedCanvas {
    fn dims(&self) -> GridDims {
        self.dims
    }

    fn mark(&mut self, x: usize, y: usize) -> bool {
        assert!(
            x < self.dims.width() && y < self.dims.height(),
            "out-of-bounds write at ({x}, {y}) on {}",
            self.dims
        );
        self.writes += 1;
        self.cells.insert((x as i64, y as i64))
    }
}
