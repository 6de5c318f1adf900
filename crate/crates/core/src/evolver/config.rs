use serde::{Deserialize, Serialize};

use crate::error::ConfigError;

/// How a candidate rule base is scored on the history window.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FitnessMode {
    /// Each terminal is replayed alone against the recorded positions and
    /// channel occupancy of everyone else.
    #[default]
    Replay,
    /// The whole world is re-simulated from the start of the window.
    FullResimulation,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EvolverConfig {
    pub population_size: usize,
    pub crossover_prob: f64,
    /// Per-gene reset probability.
    pub mutation_prob: f64,
    pub tournament_size: usize,
    pub generations_per_invocation: usize,
    /// Time units between GA invocations; `None` never invokes.
    pub invocation_period: Option<u32>,
    /// Number of most recent time units used for fitness.
    pub window: usize,
    pub weight_handoff: f64,
    pub weight_cut: f64,
    pub fitness_mode: FitnessMode,
}

impl Default for EvolverConfig {
    fn default() -> Self {
        Self {
            population_size: 50,
            crossover_prob: 0.9,
            mutation_prob: 0.1,
            tournament_size: 10,
            generations_per_invocation: 20,
            invocation_period: Some(4),
            window: 4,
            weight_handoff: 1.0,
            weight_cut: 1.0,
            fitness_mode: FitnessMode::Replay,
        }
    }
}

impl EvolverConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.population_size == 0 {
            return Err(ConfigError::new("evolver.population_size", "must be positive"));
        }
        if self.tournament_size == 0 || self.tournament_size > self.population_size {
            return Err(ConfigError::new(
                "evolver.tournament_size",
                "must lie in 1..=population_size",
            ));
        }
        for (key, p) in [
            ("evolver.crossover_prob", self.crossover_prob),
            ("evolver.mutation_prob", self.mutation_prob),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(ConfigError::new(key, "probability must lie in [0, 1]"));
            }
        }
        if self.invocation_period == Some(0) {
            return Err(ConfigError::new("evolver.invocation_period", "must be positive or null"));
        }
        if self.window == 0 {
            return Err(ConfigError::new("evolver.window", "must be positive"));
        }
        for (key, w) in [
            ("evolver.weight_handoff", self.weight_handoff),
            ("evolver.weight_cut", self.weight_cut),
        ] {
            if !(w >= 0.0 && w.is_finite()) {
                return Err(ConfigError::new(key, "weight must be non-negative"));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        let cfg = EvolverConfig::default();
        cfg.validate().unwrap();
        assert_eq!(cfg.population_size, 50);
        assert_eq!(cfg.tournament_size, 10);
        assert_eq!((cfg.crossover_prob, cfg.mutation_prob), (0.9, 0.1));
    }

    #[test]
    fn rejects_oversized_tournament() {
        let cfg = EvolverConfig {
            tournament_size: 51,
            ..EvolverConfig::default()
        };
        assert_eq!(cfg.validate().unwrap_err().key, "evolver.tournament_size");
    }

    #[test]
    fn rejects_bad_probability() {
        let cfg = EvolverConfig {
            mutation_prob: 1.5,
            ..EvolverConfig::default()
        };
        assert_eq!(cfg.validate().unwrap_err().key, "evolver.mutation_prob");
    }
}
