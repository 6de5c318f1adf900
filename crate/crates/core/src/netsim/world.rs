use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{
    transition, Arena, BaseStation, EventLog, EventRecord, Link, MobileTerminal, MotionPlan,
    Point, RssPolicy, WorldConfig,
};
use crate::error::ConfigError;

/// Energy drawn in one time unit: `d/r + ε` summed over held stations.
pub fn energy_wastage(position: Point, link: &Link, stations: &[BaseStation], epsilon: f64) -> f64 {
    link.held()
        .map(|id| {
            let bs = &stations[id];
            position.distance(bs.center) / bs.radius + epsilon
        })
        .sum()
}

/// Mutable part of a world: time, stations and terminals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WorldState {
    /// Time units completed.
    pub time: u32,
    pub stations: Vec<BaseStation>,
    pub terminals: Vec<MobileTerminal>,
}

/// What one terminal saw and did during one time unit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MtFrame {
    pub mt_id: usize,
    /// Position after this unit's movement.
    pub position: Point,
    pub speed: f64,
    pub before: Link,
    pub after: Link,
    /// Station occupancy when this terminal's decision was taken.
    pub occupancy_seen: Vec<u32>,
    pub energy_used: f64,
    pub energy: f64,
}

/// Everything recorded for one time unit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitSnapshot {
    pub t: u32,
    pub frames: Vec<MtFrame>,
    pub events: Vec<EventRecord>,
    /// Occupancy at the end of the unit.
    pub occupancy: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct World {
    cfg: WorldConfig,
    state: WorldState,
    log: EventLog,
}

impl World {
    /// Random initial population drawn from `seed`. Depends only on the
    /// config and the seed, so every policy sees the same terminals.
    pub fn new(cfg: WorldConfig, seed: u64) -> Result<Self, ConfigError> {
        cfg.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let terminals = (0..cfg.mt_count)
            .map(|id| random_terminal(id, &cfg, &mut rng))
            .collect();
        Self::with_terminals(cfg, terminals)
    }

    /// World with an explicit terminal population, all starting disconnected.
    pub fn with_terminals(
        cfg: WorldConfig,
        mut terminals: Vec<MobileTerminal>,
    ) -> Result<Self, ConfigError> {
        cfg.validate()?;
        let arena = arena(&cfg);
        for (i, mt) in terminals.iter_mut().enumerate() {
            if !arena.contains(mt.position) {
                return Err(ConfigError::new(
                    format!("terminals[{i}].position"),
                    "terminal starts outside the arena",
                ));
            }
            mt.id = i;
            mt.link = Link::Disconnected;
        }
        let stations = cfg.build_stations();
        Ok(Self {
            cfg,
            state: WorldState {
                time: 0,
                stations,
                terminals,
            },
            log: EventLog::new(),
        })
    }

    /// Resumes from a saved state with an empty log.
    pub fn from_state(cfg: WorldConfig, state: WorldState) -> Self {
        Self {
            cfg,
            state,
            log: EventLog::new(),
        }
    }

    pub fn config(&self) -> &WorldConfig {
        &self.cfg
    }

    pub fn state(&self) -> &WorldState {
        &self.state
    }

    pub fn time(&self) -> u32 {
        self.state.time
    }

    pub fn stations(&self) -> &[BaseStation] {
        &self.state.stations
    }

    pub fn terminals(&self) -> &[MobileTerminal] {
        &self.state.terminals
    }

    pub fn log(&self) -> &EventLog {
        &self.log
    }

    pub fn into_log(self) -> EventLog {
        self.log
    }

    pub fn is_finished(&self) -> bool {
        self.state.time >= self.cfg.total_time
    }

    /// Advances one time unit. Terminals are processed in ascending id: move,
    /// decide against the live occupancy, then pay energy for held links.
    pub fn step<P: RssPolicy + ?Sized>(&mut self, policy: &P) -> UnitSnapshot {
        let t = self.state.time + 1;
        let arena = arena(&self.cfg);
        let thresholds = self.cfg.thresholds();
        let mode = self.cfg.velocity_mode;
        let WorldState {
            stations,
            terminals,
            ..
        } = &mut self.state;

        let mut frames = Vec::with_capacity(terminals.len());
        let mut events = Vec::new();
        for mt in terminals.iter_mut() {
            let from = f64::from(mt.elapsed);
            mt.elapsed += 1;
            let to = f64::from(mt.elapsed);
            let step = mt.motion.displacement(from, to);
            let (position, heading) = arena.advance(mt.position, mt.heading, step);
            mt.position = position;
            mt.heading = heading;
            mt.speed = mt.motion.speed_at(to, mode);
            mt.odometer += step;

            let before = mt.link;
            let occupancy_seen = stations.iter().map(|bs| bs.occupied).collect();
            let fired = transition(
                &mut mt.link,
                mt.position,
                mt.speed,
                stations,
                thresholds,
                self.cfg.dwell,
                policy,
            );
            if let Some(tr) = fired {
                events.push(EventRecord {
                    t,
                    mt_id: mt.id,
                    event: tr.event,
                    old_bs: tr.old_bs,
                    new_bs: tr.new_bs,
                });
            }

            let wasted = energy_wastage(mt.position, &mt.link, stations, self.cfg.epsilon);
            let used = wasted.min(mt.energy);
            mt.energy -= used;

            frames.push(MtFrame {
                mt_id: mt.id,
                position: mt.position,
                speed: mt.speed,
                before,
                after: mt.link,
                occupancy_seen,
                energy_used: used,
                energy: mt.energy,
            });
        }
        self.state.time = t;
        self.log.extend(events.iter().copied());
        UnitSnapshot {
            t,
            frames,
            events,
            occupancy: self.state.stations.iter().map(|bs| bs.occupied).collect(),
        }
    }
}

fn arena(cfg: &WorldConfig) -> Arena {
    Arena {
        width: cfg.arena[0],
        height: cfg.arena[1],
    }
}

fn uniform(rng: &mut ChaCha8Rng, [lo, hi]: [f64; 2]) -> f64 {
    lo + (hi - lo) * rng.gen::<f64>()
}

fn random_terminal(id: usize, cfg: &WorldConfig, rng: &mut ChaCha8Rng) -> MobileTerminal {
    let position = Point::new(cfg.arena[0] * rng.gen::<f64>(), cfg.arena[1] * rng.gen::<f64>());
    let heading = TAU * rng.gen::<f64>();
    let motion = if rng.gen_bool(cfg.init.accelerated_fraction) {
        let distance = uniform(rng, cfg.init.accel_distance);
        MotionPlan::accelerated(distance, f64::from(cfg.total_time))
            .expect("validated distance and horizon are positive")
    } else {
        MotionPlan::steady(uniform(rng, cfg.init.steady_speed)).expect("validated speed")
    };
    MobileTerminal::new(id, position, heading, motion, cfg.initial_energy)
}

/// Stateless wrapper: one time unit of `world` under `policy`.
pub fn step_world<P: RssPolicy + ?Sized>(world: &mut World, policy: &P) -> Vec<EventRecord> {
    world.step(policy).events
}
