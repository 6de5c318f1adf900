//! Handoff policies: fixed or GA-evolved rule bases plugged into the simulator.
//!
//! | kind  | inputs                         | rules | GA  |
//! |-------|--------------------------------|-------|-----|
//! | FLS   | velocity, distance, channels   | 27    | no  |
//! | GFLS  | velocity, distance, channels   | 27    | yes |
//! | FLAH  | velocity, distance             | 9     | no  |
//! | GFLAH | velocity, distance             | 9     | yes |
//!
//! FLAH stands in for a channel-blind controller: its grid is the 27-rule
//! table projected onto velocity × distance by taking the median consequent
//! over the three channel levels.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::evolver::{
    evolve, init_population, rng_stream, Chromosome, EvolverConfig, EvolverError, FitnessContext,
    HistoryWindow, RngStream,
};
use crate::fuzzy::{FuzzyError, FuzzySystem, RuleBase};
use crate::netsim::{RssPolicy, WorldConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolicyKind {
    Fls,
    Gfls,
    Flah,
    Gflah,
}

impl PolicyKind {
    pub const ALL: [PolicyKind; 4] = [
        PolicyKind::Fls,
        PolicyKind::Gfls,
        PolicyKind::Flah,
        PolicyKind::Gflah,
    ];

    pub fn has_ga(self) -> bool {
        matches!(self, PolicyKind::Gfls | PolicyKind::Gflah)
    }

    pub fn uses_channels(self) -> bool {
        matches!(self, PolicyKind::Fls | PolicyKind::Gfls)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PolicyKind::Fls => "fls",
            PolicyKind::Gfls => "gfls",
            PolicyKind::Flah => "flah",
            PolicyKind::Gflah => "gflah",
        }
    }

    fn stream(self) -> u64 {
        match self {
            PolicyKind::Fls => 1,
            PolicyKind::Gfls => 2,
            PolicyKind::Flah => 3,
            PolicyKind::Gflah => 4,
        }
    }
}

impl fmt::Display for PolicyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_str().to_uppercase())
    }
}

impl FromStr for PolicyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown policy {s:?}"))
    }
}

/// Velocity × distance grid: median consequent over the channel levels.
pub fn derive_flah_rulebase(table: &RuleBase) -> Result<RuleBase, FuzzyError> {
    let dims = table.dims();
    if dims.len() != 3 {
        return Err(FuzzyError::RuleBase(format!(
            "expected a three-input grid, got {dims:?}"
        )));
    }
    let (nv, nd, nc) = (dims[0], dims[1], dims[2]);
    let mut cells = Vec::with_capacity(nv * nd);
    for v in 0..nv {
        for d in 0..nd {
            let mut column: Vec<u8> = (0..nc).map(|c| table.consequent(&[v, d, c])).collect();
            column.sort_unstable();
            cells.push(column[nc / 2]);
        }
    }
    RuleBase::new(vec![nv, nd], table.levels(), cells)
}

/// Evaluates a fuzzy system under a given consequent vector and maps the
/// crisp output onto `[0, 1]`. Inputs beyond the system's arity are ignored.
#[derive(Debug, Clone, Copy)]
pub struct RuleDecider<'a> {
    system: &'a FuzzySystem,
    consequents: &'a [u8],
}

/// Returned when no rule fires: the middle of the output range.
pub const NO_ACTIVATION_FALLBACK: f64 = 0.5;

impl<'a> RuleDecider<'a> {
    pub fn new(system: &'a FuzzySystem, consequents: &'a [u8]) -> Self {
        debug_assert_eq!(consequents.len(), system.rules().len());
        Self {
            system,
            consequents,
        }
    }

    pub fn decide(&self, velocity: f64, dist_norm: f64, chan_norm: f64) -> f64 {
        let all = [velocity, dist_norm, chan_norm];
        let crisp = &all[..self.system.inputs().len().min(3)];
        let firing = self.system.fire(crisp);
        match self.system.infer_fired(&firing, self.consequents) {
            Ok(y) => {
                let (lo, hi) = self.system.output().universe();
                ((y - lo) / (hi - lo)).clamp(0.0, 1.0)
            }
            Err(_) => NO_ACTIVATION_FALLBACK,
        }
    }
}

impl RssPolicy for RuleDecider<'_> {
    fn rss_threshold(&self, velocity: f64, dist_norm: f64, chan_norm: f64) -> f64 {
        self.decide(velocity, dist_norm, chan_norm)
    }
}

/// One GA invocation that replaced the live rule base.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Installation {
    /// Time unit after which the new rules apply.
    pub t: u32,
    pub incumbent_fitness: f64,
    pub fitness: f64,
    pub genes: Chromosome,
}

#[derive(Debug, Clone)]
struct EvolverState {
    cfg: EvolverConfig,
    population: Option<Vec<Chromosome>>,
    rng: RngStream,
    last_invocation: u32,
}

/// A handoff policy bound to one run.
#[derive(Debug, Clone)]
pub struct Policy {
    kind: PolicyKind,
    system: FuzzySystem,
    evolver: Option<EvolverState>,
}

impl Policy {
    /// `table` is the three-input system; the FLAH variants derive their
    /// two-input grid from it. `seed` feeds the GA's random stream.
    pub fn new(
        kind: PolicyKind,
        table: &FuzzySystem,
        evolver: &EvolverConfig,
        seed: u64,
    ) -> Result<Self, FuzzyError> {
        let system = if kind.uses_channels() {
            table.clone()
        } else {
            let inputs = table.inputs();
            if inputs.len() != 3 {
                return Err(FuzzyError::RuleBase("FLAH needs a three-input table".into()));
            }
            FuzzySystem::new(
                inputs[..2].to_vec(),
                table.output().clone(),
                derive_flah_rulebase(table.rules())?,
                table.resolution(),
            )?
        };
        let evolver = kind.has_ga().then(|| EvolverState {
            cfg: evolver.clone(),
            population: None,
            rng: rng_stream(seed, kind.stream()),
            last_invocation: 0,
        });
        Ok(Self {
            kind,
            system,
            evolver,
        })
    }

    pub fn kind(&self) -> PolicyKind {
        self.kind
    }

    pub fn system(&self) -> &FuzzySystem {
        &self.system
    }

    pub fn consequents(&self) -> &[u8] {
        self.system.rules().consequents()
    }

    pub fn decide(&self, velocity: f64, dist_norm: f64, chan_norm: f64) -> f64 {
        RuleDecider::new(&self.system, self.consequents()).decide(velocity, dist_norm, chan_norm)
    }

    /// Called after time unit `now` completes. GA-backed policies evolve on
    /// the window once per invocation period and install the best rules,
    /// which take effect from the next unit.
    pub fn on_epoch(
        &mut self,
        history: &HistoryWindow,
        now: u32,
        world: &WorldConfig,
    ) -> Result<Option<Installation>, EvolverError> {
        let Some(state) = self.evolver.as_mut() else {
            return Ok(None);
        };
        let Some(period) = state.cfg.invocation_period else {
            return Ok(None);
        };
        if now.saturating_sub(state.last_invocation) < period || !history.is_warm() {
            return Ok(None);
        }
        state.last_invocation = now;

        let incumbent = Chromosome::from_rule_base(self.system.rules());
        let mut pop = match state.population.take() {
            Some(pop) => pop,
            None => init_population(&incumbent, &state.cfg, &mut state.rng),
        };
        pop[0] = incumbent;
        let ctx = FitnessContext {
            system: &self.system,
            world,
            cfg: &state.cfg,
        };
        let evolution = evolve(pop, history, &ctx, &mut state.rng)?;
        let installation = Installation {
            t: now,
            incumbent_fitness: evolution.seed_fitness,
            fitness: evolution.best_fitness,
            genes: evolution.best.clone(),
        };
        self.system = self
            .system
            .with_consequents(evolution.best.genes().to_vec())
            .expect("evolved genes fit the grid");
        state.population = Some(evolution.population);
        Ok(Some(installation))
    }
}

impl RssPolicy for Policy {
    fn rss_threshold(&self, velocity: f64, dist_norm: f64, chan_norm: f64) -> f64 {
        self.decide(velocity, dist_norm, chan_norm)
    }
}
