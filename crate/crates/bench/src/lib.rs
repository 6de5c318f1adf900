//! Shared fixtures for the criterion benches.

use evohandoff_core::netsim::{World, WorldConfig};

/// A seeded world advanced `units` steps under a constant threshold.
pub fn warmed_world(cfg: &WorldConfig, seed: u64, units: u32) -> World {
    let mut world = World::new(cfg.clone(), seed).expect("valid config");
    let policy = |_: f64, _: f64, _: f64| 0.5;
    for _ in 0..units {
        world.step(&policy);
    }
    world
}
