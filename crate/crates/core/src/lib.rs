//! Fuzzy-logic handoff management for heterogeneous wireless networks,
//! with a genetic algorithm that evolves the rule consequents online.
//!
//! - [`fuzzy`]: Mamdani inference with centroid defuzzification.
//! - [`netsim`]: base stations, moving terminals and the connection state machine.
//! - [`evolver`]: GA over rule consequents with replay-based fitness.
//! - [`policy`]: the fixed and evolving handoff policies.
//! - [`experiment`]: configuration, seeded runs, metrics and export.

pub mod error;
pub mod evolver;
pub mod experiment;
pub mod fuzzy;
pub mod netsim;
pub mod policy;

pub use error::{ConfigError, DomainError};
pub use evolver::{Chromosome, EvolverConfig, HistoryWindow};
pub use experiment::{ExperimentConfig, MetricsReport};
pub use fuzzy::{FuzzySystem, LinguisticVariable, MembershipFunction, RuleBase};
pub use netsim::{EventKind, EventLog, World, WorldConfig};
pub use policy::{Policy, PolicyKind};
