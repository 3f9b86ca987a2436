//! Reference rasterizers that share no code with the crate: closed-form
//! nearest-cell evaluation instead of incremental error stepping.

#![allow(dead_code)]

use std::collections::BTreeSet;

fn ceil_div(p: i64, q: i64) -> i64 {
    debug_assert!(q > 0);
    -((-p).div_euclid(q))
}

/// Nearest integer to `num / den`, ties toward the lower integer.
fn nearest_lower_tie(num: i64, den: i64) -> i64 {
    let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
    // ceil(num/den - 1/2)
    ceil_div(2 * num - den, 2 * den)
}

/// For every step along the major axis, the cell whose center is nearest the
/// real line through the two endpoint centers.
pub fn segment(a: (i64, i64), b: (i64, i64)) -> BTreeSet<(i64, i64)> {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    if dx == 0 && dy == 0 {
        return BTreeSet::from([a]);
    }
    if dx.abs() >= dy.abs() {
        (a.0.min(b.0)..=a.0.max(b.0))
            .map(|x| (x, nearest_lower_tie(a.1 * dx + (x - a.0) * dy, dx)))
            .collect()
    } else {
        (a.1.min(b.1)..=a.1.max(b.1))
            .map(|y| (nearest_lower_tie(a.0 * dy + (y - a.1) * dx, dy), y))
            .collect()
    }
}

/// Circle offsets: for x in [0, ceil(r/sqrt 2)], y = round(sqrt(r^2 - x^2)),
/// mirrored into all eight octants.
pub fn circle(r: u32) -> BTreeSet<(i64, i64)> {
    let r = r as i64;
    let limit = (r as f64 / std::f64::consts::SQRT_2).ceil() as i64;
    let mut out = BTreeSet::new();
    for x in 0..=limit {
        let rem = r * r - x * x;
        if rem < 0 {
            continue;
        }
        let y = (rem as f64).sqrt().round() as i64;
        for (p, q) in [(x, y), (y, x)] {
            for (sx, sy) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.insert((sx * p, sy * q));
            }
        }
    }
    out
}

/// The eight dihedral images of an offset about the origin.
pub fn dihedral(p: (i64, i64)) -> [(i64, i64); 8] {
    let (x, y) = p;
    [
        (x, y),
        (-x, y),
        (x, -y),
        (-x, -y),
        (y, x),
        (-y, x),
        (y, -x),
        (-y, -x),
    ]
}
