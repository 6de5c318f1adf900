//! Scoring candidate consequents by replaying the recent history window.

use super::{Chromosome, EvolverConfig, EvolverError, FitnessMode, HistoryWindow};
use crate::fuzzy::FuzzySystem;
use crate::netsim::{transition, BaseStation, EventKind, Link, World, WorldConfig};
use crate::policy::RuleDecider;

/// Everything besides the chromosome and window that fitness depends on.
#[derive(Debug, Clone, Copy)]
pub struct FitnessContext<'a> {
    /// Variables and rule grid shape; its own consequents are ignored.
    pub system: &'a FuzzySystem,
    pub world: &'a WorldConfig,
    pub cfg: &'a EvolverConfig,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EventCounts {
    pub handoffs: usize,
    pub cuts: usize,
}

impl EventCounts {
    fn record(&mut self, event: EventKind) {
        match event {
            EventKind::HandoffInitiated => self.handoffs += 1,
            EventKind::ConnectionCut => self.cuts += 1,
            _ => {}
        }
    }

    pub fn weighted(&self, cfg: &EvolverConfig) -> f64 {
        cfg.weight_handoff * self.handoffs as f64 + cfg.weight_cut * self.cuts as f64
    }
}

/// Weighted handoff initiations plus cuts; lower is better.
pub fn fitness(
    c: &Chromosome,
    hist: &HistoryWindow,
    ctx: &FitnessContext<'_>,
) -> Result<f64, EvolverError> {
    Ok(event_counts(c, hist, ctx)?.weighted(ctx.cfg))
}

pub fn event_counts(
    c: &Chromosome,
    hist: &HistoryWindow,
    ctx: &FitnessContext<'_>,
) -> Result<EventCounts, EvolverError> {
    if hist.is_empty() {
        return Err(EvolverError::EmptyHistory);
    }
    let expected = ctx.system.rules().len();
    if c.len() != expected {
        return Err(EvolverError::GeneCount {
            expected,
            got: c.len(),
        });
    }
    let decider = RuleDecider::new(ctx.system, c.genes());
    match ctx.cfg.fitness_mode {
        FitnessMode::Replay => Ok(replay(&decider, hist, ctx.world)),
        FitnessMode::FullResimulation => resimulate(&decider, hist, ctx.world),
    }
}

/// Replays each terminal on its own. Positions come from the record; the
/// occupancy it sees is the recorded one, corrected for any channels the
/// replayed terminal holds differently from the recorded terminal.
fn replay(decider: &RuleDecider<'_>, hist: &HistoryWindow, world: &WorldConfig) -> EventCounts {
    let mut counts = EventCounts::default();
    let mut scratch = world.build_stations();
    let thresholds = world.thresholds();
    let Some(first) = hist.units().next() else {
        return counts;
    };
    for (slot, first_frame) in first.frames.iter().enumerate() {
        let mut link = first_frame.before;
        for unit in hist.units() {
            let frame = &unit.frames[slot];
            debug_assert_eq!(frame.mt_id, first_frame.mt_id);
            sync_occupancy(&mut scratch, &frame.occupancy_seen, &frame.before, &link);
            if let Some(tr) = transition(
                &mut link,
                frame.position,
                frame.speed,
                &mut scratch,
                thresholds,
                world.dwell,
                decider,
            ) {
                counts.record(tr.event);
            }
        }
    }
    counts
}

fn sync_occupancy(stations: &mut [BaseStation], seen: &[u32], recorded: &Link, replayed: &Link) {
    for (bs, &seen) in stations.iter_mut().zip(seen) {
        let id = bs.id;
        let adjusted =
            i64::from(seen) - i64::from(recorded.holds(id)) + i64::from(replayed.holds(id));
        bs.occupied = adjusted.clamp(0, i64::from(bs.capacity)) as u32;
    }
}

fn resimulate(
    decider: &RuleDecider<'_>,
    hist: &HistoryWindow,
    world: &WorldConfig,
) -> Result<EventCounts, EvolverError> {
    let start = hist.start_state().ok_or(EvolverError::EmptyHistory)?;
    let mut sim = World::from_state(world.clone(), start.clone());
    let mut counts = EventCounts::default();
    for _ in 0..hist.len() {
        for ev in sim.step(decider).events {
            counts.record(ev.event);
        }
    }
    Ok(counts)
}
