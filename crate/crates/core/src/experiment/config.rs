use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{ExperimentError, OutputFormat};
use crate::error::ConfigError;
use crate::evolver::EvolverConfig;
use crate::fuzzy::{defaults, FuzzySystem, LinguisticVariable, RuleBase, DEFAULT_RESOLUTION, OUTPUT_LEVELS, TABLE_I};
use crate::netsim::WorldConfig;
use crate::policy::PolicyKind;

/// Membership functions and the 27-rule table shared by every policy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FuzzyConfig {
    pub velocity: LinguisticVariable,
    pub distance: LinguisticVariable,
    pub channels: LinguisticVariable,
    pub output: LinguisticVariable,
    /// Consequent levels, velocity-major, then distance, then channels.
    pub rules: Vec<u8>,
    pub resolution: usize,
}

impl Default for FuzzyConfig {
    fn default() -> Self {
        Self {
            velocity: defaults::velocity(),
            distance: defaults::distance(),
            channels: defaults::channels(),
            output: defaults::rss_threshold(),
            rules: TABLE_I.to_vec(),
            resolution: DEFAULT_RESOLUTION,
        }
    }
}

impl FuzzyConfig {
    pub fn build(&self) -> Result<FuzzySystem, ConfigError> {
        if self.resolution == 0 {
            return Err(ConfigError::new("fuzzy.resolution", "must be positive"));
        }
        if self.output.len() != OUTPUT_LEVELS {
            return Err(ConfigError::new(
                "fuzzy.output",
                format!("needs exactly {OUTPUT_LEVELS} terms"),
            ));
        }
        let dims = vec![self.velocity.len(), self.distance.len(), self.channels.len()];
        let rules = RuleBase::new(dims, OUTPUT_LEVELS, self.rules.clone())
            .map_err(|e| ConfigError::new("fuzzy.rules", e.to_string()))?;
        FuzzySystem::new(
            vec![self.velocity.clone(), self.distance.clone(), self.channels.clone()],
            self.output.clone(),
            rules,
            self.resolution,
        )
        .map_err(|e| ConfigError::new("fuzzy", e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub world: WorldConfig,
    pub fuzzy: FuzzyConfig,
    pub evolver: EvolverConfig,
    pub policies: Vec<PolicyKind>,
    /// Explicit seeds; when absent, seeds `1..=runs` are used.
    pub seeds: Option<Vec<u64>>,
    pub runs: Option<usize>,
    pub output_dir: PathBuf,
    pub format: OutputFormat,
}

pub const DEFAULT_RUNS: usize = 10;

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            world: WorldConfig::default(),
            fuzzy: FuzzyConfig::default(),
            evolver: EvolverConfig::default(),
            policies: PolicyKind::ALL.to_vec(),
            seeds: None,
            runs: None,
            output_dir: PathBuf::from("out"),
            format: OutputFormat::Csv,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        self.world.validate()?;
        self.evolver.validate()?;
        self.fuzzy.build()?;
        if self.policies.is_empty() {
            return Err(ConfigError::new("policies", "at least one policy is required"));
        }
        match (&self.seeds, self.runs) {
            (Some(seeds), _) if seeds.is_empty() => {
                Err(ConfigError::new("seeds", "seed list is empty"))
            }
            (Some(seeds), Some(runs)) if runs != seeds.len() => Err(ConfigError::new(
                "runs",
                format!("runs = {runs} but {} seeds are listed", seeds.len()),
            )),
            (None, Some(0)) => Err(ConfigError::new("runs", "must be positive")),
            _ => Ok(()),
        }
    }

    pub fn seed_list(&self) -> Vec<u64> {
        match &self.seeds {
            Some(seeds) => seeds.clone(),
            None => (1..=self.runs.unwrap_or(DEFAULT_RUNS) as u64).collect(),
        }
    }

    pub fn run_count(&self) -> usize {
        self.seed_list().len()
    }

    pub fn from_json(text: &str) -> Result<Self, ExperimentError> {
        let cfg: Self = if text.trim().is_empty() {
            Self::default()
        } else {
            serde_json::from_str(text).map_err(ExperimentError::Parse)?
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }
}

/// Reads, parses and validates a JSON config. Absent keys take defaults; an
/// empty file is the default scenario.
pub fn load_config(path: impl AsRef<Path>) -> Result<ExperimentConfig, ExperimentError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| ExperimentError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    ExperimentConfig::from_json(&text)
}
