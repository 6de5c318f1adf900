use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn distance(self, other: Point) -> f64 {
        let (dx, dy) = (self.x - other.x, self.y - other.y);
        (dx * dx + dy * dy).sqrt()
    }
}

impl From<[f64; 2]> for Point {
    fn from([x, y]: [f64; 2]) -> Self {
        Self { x, y }
    }
}

/// Axis-aligned rectangle `[0, width] × [0, height]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arena {
    pub width: f64,
    pub height: f64,
}

impl Arena {
    pub fn contains(&self, p: Point) -> bool {
        (0.0..=self.width).contains(&p.x) && (0.0..=self.height).contains(&p.y)
    }

    /// Moves `distance` along `heading`, reflecting specularly off the walls.
    /// Returns the end point and the outgoing heading in `[0, 2π)`.
    pub fn advance(&self, from: Point, heading: f64, distance: f64) -> (Point, f64) {
        let mut p = from;
        let mut heading = normalize(heading);
        let mut remaining = distance.max(0.0);
        // Each pass either finishes or hits a wall; corners take two passes.
        for _ in 0..64 {
            if remaining <= 0.0 {
                break;
            }
            let (dy, dx) = heading.sin_cos();
            let tx = wall_hit(p.x, dx, self.width);
            let ty = wall_hit(p.y, dy, self.height);
            let t_hit = tx.min(ty);
            if remaining <= t_hit {
                p = Point::new(p.x + dx * remaining, p.y + dy * remaining);
                remaining = 0.0;
            } else {
                p = Point::new(p.x + dx * t_hit, p.y + dy * t_hit);
                remaining -= t_hit;
                if tx <= ty {
                    heading = normalize(PI - heading);
                }
                if ty <= tx {
                    heading = normalize(-heading);
                }
            }
            p = Point::new(p.x.clamp(0.0, self.width), p.y.clamp(0.0, self.height));
        }
        (p, heading)
    }
}

const AXIS_EPS: f64 = 1e-12;

fn wall_hit(pos: f64, dir: f64, extent: f64) -> f64 {
    if dir > AXIS_EPS {
        (extent - pos) / dir
    } else if dir < -AXIS_EPS {
        -pos / dir
    } else {
        f64::INFINITY
    }
}

pub fn normalize(angle: f64) -> f64 {
    let a = angle.rem_euclid(TAU);
    if a >= TAU {
        0.0
    } else {
        a
    }
}
