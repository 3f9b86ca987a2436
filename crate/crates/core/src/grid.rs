//! Grid coordinates and the two dense maps the simulator works on.
//!
//! Coordinates are row-major with the origin at the top-left corner: `x`
//! grows to the right, `y` grows downward, matching terminal print order.

use std::fmt;

use thiserror::Error;

/// Largest accepted width or height.
pub const MAX_DIM: usize = 1024;

/// Default grid side length when none is given.
pub const DEFAULT_DIM: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("grid dimensions {width}x{height} outside 1..={max}", max = MAX_DIM)]
    BadDims { width: usize, height: usize },
}

/// Width and height of a grid, both in `1..=MAX_DIM`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridDims {
    width: usize,
    height: usize,
}

impl GridDims {
    pub fn new(width: usize, height: usize) -> Result<Self, GridError> {
        if (1..=MAX_DIM).contains(&width) && (1..=MAX_DIM).contains(&height) {
            Ok(Self { width, height })
        } else {
            Err(GridError::BadDims { width, height })
        }
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.height
    }

    #[inline]
    pub fn area(&self) -> usize {
        self.width * self.height
    }

    /// True iff `0 <= x < width` and `0 <= y < height`.
    #[inline]
    pub fn contains(&self, x: i64, y: i64) -> bool {
        x >= 0 && y >= 0 && (x as u64) < self.width as u64 && (y as u64) < self.height as u64
    }

    /// Row-major index of an in-bounds cell.
    #[inline]
    fn index(&self, x: usize, y: usize) -> usize {
        assert!(
            x < self.width && y < self.height,
            "cell ({x}, {y}) outside {}x{} grid",
            self.width,
            self.height
        );
        y * self.width + x
    }
}

impl Default for GridDims {
    fn default() -> Self {
        Self {
            width: DEFAULT_DIM,
            height: DEFAULT_DIM,
        }
    }
}

impl fmt::Display for GridDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.width, self.height)
    }
}

/// Free-function form of [`GridDims::contains`].
#[inline]
pub fn in_bounds(dims: GridDims, x: i64, y: i64) -> bool {
    dims.contains(x, y)
}

/// A grid position. Only meaningful for a given grid when
/// [`GridDims::contains`] holds for it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub x: i64,
    pub y: i64,
}

impl Cell {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<(i64, i64)> for Cell {
    fn from((x, y): (i64, i64)) -> Self {
        Self { x, y }
    }
}

/// Boolean occupancy grid; `true` marks a fault cell.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FaultMap {
    dims: GridDims,
    cells: Vec<bool>,
}

impl FaultMap {
    pub fn new(dims: GridDims) -> Self {
        Self {
            dims,
            cells: vec![false; dims.area()],
        }
    }

    #[inline]
    pub fn dims(&self) -> GridDims {
        self.dims
    }

    /// `None` when `(x, y)` is off the grid.
    pub fn get(&self, x: i64, y: i64) -> Option<bool> {
        self.dims
            .contains(x, y)
            .then(|| self.cells[self.dims.index(x as usize, y as usize)])
    }

    #[inline]
    pub fn is_fault(&self, x: usize, y: usize) -> bool {
        self.cells[self.dims.index(x, y)]
    }

    /// Marks `(x, y)` as a fault. Returns true if the cell was not already set.
    ///
    /// Panics if the cell is off the grid.
    pub fn mark(&mut self, x: usize, y: usize) -> bool {
        let i = self.dims.index(x, y);
        !std::mem::replace(&mut self.cells[i], true)
    }

    pub fn fault_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    /// All fault cells in row-major order.
    pub fn fault_cells(&self) -> Vec<Cell> {
        let w = self.dims.width;
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, &c)| c)
            .map(|(i, _)| Cell::new((i % w) as i64, (i / w) as i64))
            .collect()
    }

    /// Rows top to bottom.
    pub fn rows(&self) -> impl Iterator<Item = &[bool]> {
        self.cells.chunks(self.dims.width)
    }
}

/// Non-negative stress per cell, same layout as [`FaultMap`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StressMap {
    dims: GridDims,
    cells: Vec<u64>,
}

impl StressMap {
    pub fn new(dims: GridDims) -> Self {
        Self {
            dims,
            cells: vec![0; dims.area()],
        }
    }

    #[inline]
    pub fn dims(&self) -> GridDims {
        self.dims
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u64 {
        self.cells[self.dims.index(x, y)]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, value: u64) {
        let i = self.dims.index(x, y);
        self.cells[i] = value;
    }

    /// Row-major cell values.
    #[inline]
    pub fn values(&self) -> &[u64] {
        &self.cells
    }

    #[inline]
    pub(crate) fn values_mut(&mut self) -> &mut [u64] {
        &mut self.cells
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u64]> {
        self.cells.chunks(self.dims.width)
    }

    pub fn total(&self) -> u128 {
        self.cells.iter().map(|&v| v as u128).sum()
    }

    pub fn max(&self) -> u64 {
        self.cells.iter().copied().max().unwrap_or(0)
    }
}
