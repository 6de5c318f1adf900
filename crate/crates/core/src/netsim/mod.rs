//! Discrete-time model of base stations and moving terminals.

mod config;
mod events;
mod geometry;
mod kinematics;
mod station;
mod terminal;
mod transition;
mod world;

pub use config::{
    InitConfig, StationSpec, WorldConfig, DEFAULT_CAPACITIES, DEFAULT_CENTERS, DEFAULT_RADII,
};
pub use events::{EventKind, EventLog, EventRecord};
pub use geometry::{normalize, Arena, Point};
pub use kinematics::{
    accelerated_state, acceleration_for, steady_position, MotionPlan, VelocityMode,
};
pub use station::{best_covering_bs, distance_to_boundary, select_target_bs, BaseStation};
pub use terminal::{Link, MobileTerminal, TerminalState};
pub use transition::{transition, RssPolicy, Thresholds, Transition};
pub use world::{energy_wastage, step_world, MtFrame, UnitSnapshot, World, WorldState};
