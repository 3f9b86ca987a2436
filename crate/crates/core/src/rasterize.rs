//! Exact integer rasterization of fault shapes.
//!
//! Every shape validates its user-supplied anchor first and touches the map
//! only after validation succeeds, so a rejected shape leaves the map as it
//! was. Circles may extend past the grid and are cropped; nothing wraps.

use std::fmt;

use thiserror::Error;

use crate::grid::{FaultMap, GridDims};

/// Anything that fault cells can be written into.
pub trait Canvas {
    fn dims(&self) -> GridDims;

    /// Sets an in-bounds cell; returns true if it was previously clear.
    fn mark(&mut self, x: usize, y: usize) -> bool;
}

impl Canvas for FaultMap {
    fn dims(&self) -> GridDims {
        FaultMap::dims(self)
    }

    fn mark(&mut self, x: usize, y: usize) -> bool {
        FaultMap::mark(self, x, y)
    }
}

/// The user anchor that failed validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Anchor {
    Column(i64),
    Row(i64),
    Point(i64, i64),
}

impl fmt::Display for Anchor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Anchor::Column(x) => write!(f, "column x={x}"),
            Anchor::Row(y) => write!(f, "row y={y}"),
            Anchor::Point(x, y) => write!(f, "point ({x}, {y})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum RasterError {
    #[error("{anchor} is outside the {dims} grid")]
    OutOfRange { anchor: Anchor, dims: GridDims },
}

/// One fault shape as entered from the menu.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeSpec {
    Vertical { x: i64 },
    Horizontal { y: i64 },
    Circle { cx: i64, cy: i64, r: u32 },
    Segment { x0: i64, y0: i64, x1: i64, y1: i64 },
}

impl ShapeSpec {
    pub fn draw<C: Canvas + ?Sized>(&self, canvas: &mut C) -> Result<usize, RasterError> {
        match *self {
            ShapeSpec::Vertical { x } => draw_vertical(canvas, x),
            ShapeSpec::Horizontal { y } => draw_horizontal(canvas, y),
            ShapeSpec::Circle { cx, cy, r } => draw_circle(canvas, cx, cy, r),
            ShapeSpec::Segment { x0, y0, x1, y1 } => draw_segment(canvas, x0, y0, x1, y1),
        }
    }
}

fn out_of_range(anchor: Anchor, dims: GridDims) -> RasterError {
    RasterError::OutOfRange { anchor, dims }
}

/// Fills column `x` top to bottom. Returns the number of newly set cells.
pub fn draw_vertical<C: Canvas + ?Sized>(canvas: &mut C, x: i64) -> Result<usize, RasterError> {
    let dims = canvas.dims();
    if !dims.contains(x, 0) {
        return Err(out_of_range(Anchor::Column(x), dims));
    }
    Ok((0..dims.height())
        .filter(|&y| canvas.mark(x as usize, y))
        .count())
}

/// Fills row `y` left to right. Returns the number of newly set cells.
pub fn draw_horizontal<C: Canvas + ?Sized>(canvas: &mut C, y: i64) -> Result<usize, RasterError> {
    let dims = canvas.dims();
    if !dims.contains(0, y) {
        return Err(out_of_range(Anchor::Row(y), dims));
    }
    Ok((0..dims.width())
        .filter(|&x| canvas.mark(x, y as usize))
        .count())
}

/// Bresenham line between two in-bounds endpoints.
pub fn draw_segment<C: Canvas + ?Sized>(
    canvas: &mut C,
    x0: i64,
    y0: i64,
    x1: i64,
    y1: i64,
) -> Result<usize, RasterError> {
    let dims = canvas.dims();
    for (x, y) in [(x0, y0), (x1, y1)] {
        if !dims.contains(x, y) {
            return Err(out_of_range(Anchor::Point(x, y), dims));
        }
    }
    let mut set = 0;
    for_each_segment_cell((x0, y0), (x1, y1), |x, y| {
        if canvas.mark(x as usize, y as usize) {
            set += 1;
        }
    });
    Ok(set)
}

/// The cells of the Bresenham rasterization of `a`–`b`, in drawing order.
///
/// The result depends only on the unordered endpoint pair. When the true
/// line passes exactly halfway between two cells, the cell with the lower
/// minor-axis coordinate is taken.
pub fn segment_cells(a: (i64, i64), b: (i64, i64)) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for_each_segment_cell(a, b, |x, y| out.push((x, y)));
    out
}

fn for_each_segment_cell(a: (i64, i64), b: (i64, i64), mut plot: impl FnMut(i64, i64)) {
    // canonical orientation: lexicographically smaller endpoint first, so dx >= 0
    let ((ax, ay), (bx, by)) = if a <= b { (a, b) } else { (b, a) };
    let dx = bx - ax;
    let dy = by - ay;
    let ady = dy.abs();
    let sy = if dy < 0 { -1 } else { 1 };

    // err holds twice the distance (scaled by the major extent) between the
    // true minor coordinate and the current cell's.
    let mut err = 0i64;
    if dx >= ady {
        let mut y = ay;
        for x in ax..=bx {
            plot(x, y);
            err += 2 * ady;
            // a tie keeps y when walking down the rows, steps when walking up
            if err > dx || (sy < 0 && err == dx) {
                y += sy;
                err -= 2 * dx;
            }
        }
    } else {
        let mut x = ax;
        let mut y = ay;
        for _ in 0..=ady {
            plot(x, y);
            y += sy;
            err += 2 * dx;
            // x only ever increases, so a tie keeps the lower column
            if err > ady {
                x += 1;
                err -= 2 * ady;
            }
        }
    }
}

/// Midpoint circle of radius `r` around an in-bounds center, cropped to the
/// grid. Returns the number of newly set cells.
pub fn draw_circle<C: Canvas + ?Sized>(
    canvas: &mut C,
    cx: i64,
    cy: i64,
    r: u32,
) -> Result<usize, RasterError> {
    let dims = canvas.dims();
    if !dims.contains(cx, cy) {
        return Err(out_of_range(Anchor::Point(cx, cy), dims));
    }
    // Every circle cell lies at least r - 1 from the center; past this radius
    // none can land on the grid.
    if r as u64 > 2 * (dims.width() + dims.height()) as u64 {
        return Ok(0);
    }
    let mut set = 0;
    for_each_circle_offset(r as i64, |dx, dy| {
        let (x, y) = (cx + dx, cy + dy);
        if dims.contains(x, y) && canvas.mark(x as usize, y as usize) {
            set += 1;
        }
    });
    Ok(set)
}

/// Offsets from the center of every cell on the midpoint circle of radius
/// `r`, deduplicated and sorted.
pub fn circle_offsets(r: u32) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for_each_circle_offset(r as i64, |dx, dy| out.push((dx, dy)));
    out.sort_unstable();
    out.dedup();
    out
}

/// Walks the octant from (0, r) to the diagonal and mirrors each point into
/// all eight octants. Points on an axis or the diagonal are emitted more
/// than once.
fn for_each_circle_offset(r: i64, mut plot: impl FnMut(i64, i64)) {
    let mut x = 0i64;
    let mut y = r;
    // decision value: sign of f(x + 1, y - 1/2) = (x+1)^2 + (y-1/2)^2 - r^2,
    // shifted by 1/4 to stay integral
    let mut d = 1 - r;
    while x <= y {
        for (a, b) in [(x, y), (y, x)] {
            plot(a, b);
            plot(-a, b);
            plot(a, -b);
            plot(-a, -b);
        }
        x += 1;
        if d < 0 {
            d += 2 * x + 1;
        } else {
            y -= 1;
            d += 2 * (x - y) + 1;
        }
    }
}
