use serde::{Deserialize, Serialize};

use super::{BaseStation, Point, Thresholds, VelocityMode};
use crate::error::ConfigError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StationSpec {
    pub center: [f64; 2],
    pub radius: f64,
    pub capacity: u32,
}

/// Distributions for the random initial terminal population.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct InitConfig {
    /// Probability that a terminal follows an accelerated plan.
    pub accelerated_fraction: f64,
    /// Uniform range for steady speeds, distance units per time unit.
    pub steady_speed: [f64; 2],
    /// Uniform range for the total distance of accelerated plans, covered
    /// over the whole run.
    pub accel_distance: [f64; 2],
}

impl Default for InitConfig {
    fn default() -> Self {
        Self {
            accelerated_fraction: 0.5,
            steady_speed: [5.0, 30.0],
            accel_distance: [1500.0, 4500.0],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct WorldConfig {
    pub arena: [f64; 2],
    pub stations: Vec<StationSpec>,
    pub mt_count: usize,
    pub total_time: u32,
    pub s_th: f64,
    pub s_min: f64,
    pub epsilon: f64,
    /// Time units a terminal stays attached to both stations during handover.
    pub dwell: u32,
    pub initial_energy: f64,
    pub velocity_mode: VelocityMode,
    pub init: InitConfig,
}

pub const DEFAULT_CENTERS: [[f64; 2]; 7] = [
    [2598.0, 500.0],
    [866.0, 500.0],
    [3464.0, 2000.0],
    [1732.0, 2000.0],
    [1.0, 2000.0],
    [2598.0, 3500.0],
    [866.0, 3500.0],
];
pub const DEFAULT_RADII: [f64; 7] = [1400.0, 1000.0, 1200.0, 800.0, 900.0, 600.0, 1300.0];
pub const DEFAULT_CAPACITIES: [u32; 7] = [6, 4, 5, 3, 3, 2, 5];

impl Default for WorldConfig {
    fn default() -> Self {
        let stations = DEFAULT_CENTERS
            .iter()
            .zip(DEFAULT_RADII)
            .zip(DEFAULT_CAPACITIES)
            .map(|((&center, radius), capacity)| StationSpec {
                center,
                radius,
                capacity,
            })
            .collect();
        Self {
            arena: [6000.0, 6000.0],
            stations,
            mt_count: 50,
            total_time: 75,
            s_th: 0.45,
            s_min: 0.20,
            epsilon: 0.1,
            dwell: 2,
            initial_energy: 100.0,
            velocity_mode: VelocityMode::Derivative,
            init: InitConfig::default(),
        }
    }
}

impl WorldConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        let [w, h] = self.arena;
        if !(w > 0.0 && h > 0.0 && w.is_finite() && h.is_finite()) {
            return Err(ConfigError::new("world.arena", "width and height must be positive"));
        }
        if self.stations.is_empty() {
            return Err(ConfigError::new("world.stations", "at least one station is required"));
        }
        for (i, s) in self.stations.iter().enumerate() {
            let key = |f: &str| format!("world.stations[{i}].{f}");
            if !(s.radius > 0.0 && s.radius.is_finite()) {
                return Err(ConfigError::new(key("radius"), "radius must be positive"));
            }
            if s.radius > w.max(h) {
                return Err(ConfigError::new(key("radius"), "radius exceeds the arena extent"));
            }
            if !s.center.iter().all(|c| c.is_finite()) {
                return Err(ConfigError::new(key("center"), "center must be finite"));
            }
        }
        if !(0.0..=1.0).contains(&self.s_min) || !(0.0..=1.0).contains(&self.s_th) {
            return Err(ConfigError::new("world.s_th", "thresholds must lie in [0, 1]"));
        }
        if self.s_min >= self.s_th {
            return Err(ConfigError::new(
                "world.s_min",
                format!("S_min < S_th required (S_min = {}, S_th = {})", self.s_min, self.s_th),
            ));
        }
        if !(self.epsilon >= 0.0 && self.epsilon.is_finite()) {
            return Err(ConfigError::new("world.epsilon", "epsilon must be non-negative"));
        }
        if self.dwell == 0 {
            return Err(ConfigError::new("world.dwell", "dwell must be at least one time unit"));
        }
        if self.total_time == 0 {
            return Err(ConfigError::new("world.total_time", "total_time must be positive"));
        }
        if !(self.initial_energy >= 0.0 && self.initial_energy.is_finite()) {
            return Err(ConfigError::new("world.initial_energy", "must be non-negative"));
        }
        let init = &self.init;
        if !(0.0..=1.0).contains(&init.accelerated_fraction) {
            return Err(ConfigError::new("world.init.accelerated_fraction", "must lie in [0, 1]"));
        }
        let [lo, hi] = init.steady_speed;
        if !(0.0 < lo && lo <= hi && hi.is_finite()) {
            return Err(ConfigError::new("world.init.steady_speed", "need 0 < lo <= hi"));
        }
        let [lo, hi] = init.accel_distance;
        if !(0.0 < lo && lo <= hi && hi.is_finite()) {
            return Err(ConfigError::new("world.init.accel_distance", "need 0 < lo <= hi"));
        }
        Ok(())
    }

    pub fn thresholds(&self) -> Thresholds {
        Thresholds {
            s_th: self.s_th,
            s_min: self.s_min,
        }
    }

    /// Stations with zero occupancy; ids follow table order.
    pub fn build_stations(&self) -> Vec<BaseStation> {
        self.stations
            .iter()
            .enumerate()
            .map(|(id, s)| BaseStation {
                id,
                center: Point::from(s.center),
                radius: s.radius,
                capacity: s.capacity,
                occupied: 0,
            })
            .collect()
    }
}
