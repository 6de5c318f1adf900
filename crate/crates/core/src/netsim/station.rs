use serde::{Deserialize, Serialize};

use super::Point;

/// A base station. Ids are zero-based indices into the station table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaseStation {
    pub id: usize,
    pub center: Point,
    pub radius: f64,
    pub capacity: u32,
    pub occupied: u32,
}

impl BaseStation {
    /// Signed distance to the coverage circle; negative outside.
    pub fn boundary_distance(&self, p: Point) -> f64 {
        self.radius - p.distance(self.center)
    }

    /// Boundary distance as a fraction of the radius, clamped to `[0, 1]`.
    pub fn dist_norm(&self, p: Point) -> f64 {
        (self.boundary_distance(p) / self.radius).clamp(0.0, 1.0)
    }

    /// Strictly inside the coverage circle.
    pub fn covers(&self, p: Point) -> bool {
        self.boundary_distance(p) > 0.0
    }

    pub fn free(&self) -> u32 {
        self.capacity.saturating_sub(self.occupied)
    }

    pub fn has_free_channel(&self) -> bool {
        self.occupied < self.capacity
    }

    pub fn free_channels_norm(&self) -> f64 {
        if self.capacity == 0 {
            0.0
        } else {
            f64::from(self.free()) / f64::from(self.capacity)
        }
    }

    pub(crate) fn acquire(&mut self) {
        debug_assert!(self.occupied < self.capacity, "station {} over capacity", self.id);
        self.occupied += 1;
    }

    pub(crate) fn release(&mut self) {
        debug_assert!(self.occupied > 0, "station {} released below zero", self.id);
        self.occupied = self.occupied.saturating_sub(1);
    }
}

pub fn distance_to_boundary(p: Point, bs: &BaseStation) -> f64 {
    bs.boundary_distance(p)
}

/// Best station other than `exclude` that covers `p` and has a free channel:
/// highest normalized boundary distance, lowest id on ties.
pub fn select_target_bs(p: Point, stations: &[BaseStation], exclude: Option<usize>) -> Option<usize> {
    best_by_depth(p, stations, |bs| Some(bs.id) != exclude && bs.has_free_channel())
}

/// Best covering station regardless of free channels.
pub fn best_covering_bs(p: Point, stations: &[BaseStation]) -> Option<usize> {
    best_by_depth(p, stations, |_| true)
}

fn best_by_depth(
    p: Point,
    stations: &[BaseStation],
    eligible: impl Fn(&BaseStation) -> bool,
) -> Option<usize> {
    let mut best: Option<(usize, f64)> = None;
    for bs in stations {
        if !bs.covers(p) || !eligible(bs) {
            continue;
        }
        let depth = bs.dist_norm(p);
        if best.map_or(true, |(_, d)| depth > d) {
            best = Some((bs.id, depth));
        }
    }
    best.map(|(id, _)| id)
}
