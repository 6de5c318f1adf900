use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{ExperimentConfig, ExperimentError, MetricsReport};
use crate::evolver::HistoryWindow;
use crate::netsim::{EventKind, EventLog, UnitSnapshot, World};
use crate::policy::{Installation, Policy, PolicyKind};

/// Metrics of a single run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RunMetrics {
    /// Handoff initiations.
    pub handoffs: usize,
    /// Share of terminal-time spent connected or in handover.
    pub connection_time_pct: f64,
    /// Mean share of initial energy consumed.
    pub energy_wastage_pct: f64,
}

#[derive(Debug, Clone)]
pub struct RunResult {
    pub policy: PolicyKind,
    pub seed: u64,
    pub metrics: RunMetrics,
    pub log: EventLog,
    pub snapshots: Vec<UnitSnapshot>,
    pub installations: Vec<Installation>,
}

/// One seeded run of `kind` over the configured horizon.
pub fn run(cfg: &ExperimentConfig, kind: PolicyKind, seed: u64) -> Result<RunResult, ExperimentError> {
    let table = cfg.fuzzy.build()?;
    let mut policy = Policy::new(kind, &table, &cfg.evolver, seed)?;
    let mut world = World::new(cfg.world.clone(), seed)?;
    let mut history = HistoryWindow::new(cfg.evolver.window);
    let mut snapshots = Vec::with_capacity(cfg.world.total_time as usize);
    let mut installations = Vec::new();

    while !world.is_finished() {
        let start = world.state().clone();
        let unit = world.step(&policy);
        history.push(start, unit.clone());
        if let Some(inst) = policy.on_epoch(&history, unit.t, &cfg.world)? {
            installations.push(inst);
        }
        snapshots.push(unit);
    }

    let metrics = compute_metrics(&world, &snapshots);
    Ok(RunResult {
        policy: kind,
        seed,
        metrics,
        log: world.into_log(),
        snapshots,
        installations,
    })
}

fn compute_metrics(world: &World, snapshots: &[UnitSnapshot]) -> RunMetrics {
    let cfg = world.config();
    let handoffs = world.log().count(EventKind::HandoffInitiated);
    let terminal_time = cfg.mt_count as f64 * f64::from(cfg.total_time);
    let active: usize = snapshots
        .iter()
        .map(|u| u.frames.iter().filter(|f| f.after.is_active()).count())
        .sum();
    let connection_time_pct = if terminal_time > 0.0 {
        100.0 * active as f64 / terminal_time
    } else {
        0.0
    };
    let terminals = world.terminals();
    let energy_wastage_pct = if terminals.is_empty() || cfg.initial_energy <= 0.0 {
        0.0
    } else {
        let consumed: f64 = terminals
            .iter()
            .map(|mt| (cfg.initial_energy - mt.energy) / cfg.initial_energy)
            .sum();
        100.0 * consumed / terminals.len() as f64
    };
    RunMetrics {
        handoffs,
        connection_time_pct,
        energy_wastage_pct,
    }
}

#[derive(Debug, Clone)]
pub struct Comparison {
    pub report: MetricsReport,
    /// Policy-major, then seed order.
    pub runs: Vec<RunResult>,
}

/// Runs every configured policy on the shared seed list and aggregates.
pub fn compare(cfg: &ExperimentConfig) -> Result<Comparison, ExperimentError> {
    cfg.validate()?;
    let seeds = cfg.seed_list();
    let jobs: Vec<(PolicyKind, u64)> = cfg
        .policies
        .iter()
        .flat_map(|&k| seeds.iter().map(move |&s| (k, s)))
        .collect();
    let runs = jobs
        .par_iter()
        .map(|&(kind, seed)| run(cfg, kind, seed))
        .collect::<Result<Vec<_>, _>>()?;
    let report = MetricsReport::aggregate(&runs);
    Ok(Comparison { report, runs })
}
