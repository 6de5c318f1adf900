use evohandoff_core::evolver::{
    event_counts, evolve, fitness, init_population, rng_stream, Chromosome, EvolverConfig,
    EvolverError, FitnessContext, FitnessMode, HistoryWindow,
};
use evohandoff_core::fuzzy::{compute_rss_threshold, FuzzySystem};
use evohandoff_core::netsim::{
    EventKind, MobileTerminal, MotionPlan, StationSpec, UnitSnapshot, World, WorldConfig,
    WorldState,
};
use rand::Rng;

fn fls(system: &FuzzySystem) -> impl Fn(f64, f64, f64) -> f64 + '_ {
    move |v, d, c| compute_rss_threshold(system, v, d, c).unwrap_or(0.5)
}

/// A run under the fixed table: every unit with its start state.
fn record(cfg: &WorldConfig, seed: u64, system: &FuzzySystem) -> Vec<(WorldState, UnitSnapshot)> {
    let mut world = World::new(cfg.clone(), seed).unwrap();
    let policy = fls(system);
    let mut out = Vec::new();
    while !world.is_finished() {
        let start = world.state().clone();
        let unit = world.step(&policy);
        out.push((start, unit));
    }
    out
}

fn window(rec: &[(WorldState, UnitSnapshot)], from: usize, len: usize) -> HistoryWindow {
    let mut h = HistoryWindow::new(len);
    for (s, u) in &rec[from..from + len] {
        h.push(s.clone(), u.clone());
    }
    h
}

fn logged(h: &HistoryWindow, kind: EventKind) -> usize {
    h.units().flat_map(|u| &u.events).filter(|e| e.event == kind).count()
}

#[test]
fn seed_chromosome_reproduces_the_log() {
    let system = FuzzySystem::table_i();
    let world = WorldConfig::default();
    let seed_c = Chromosome::from_rule_base(system.rules());
    for mode in [FitnessMode::Replay, FitnessMode::FullResimulation] {
        let cfg = EvolverConfig {
            fitness_mode: mode,
            ..EvolverConfig::default()
        };
        let ctx = FitnessContext {
            system: &system,
            world: &world,
            cfg: &cfg,
        };
        for seed in [1, 2] {
            let rec = record(&world, seed, &system);
            for from in (0..rec.len() - 4).step_by(7) {
                let h = window(&rec, from, 4);
                let counts = event_counts(&seed_c, &h, &ctx).unwrap();
                assert_eq!(counts.handoffs, logged(&h, EventKind::HandoffInitiated));
                assert_eq!(counts.cuts, logged(&h, EventKind::ConnectionCut));
            }
        }
    }
}

#[test]
fn resimulation_matches_a_direct_world_replay() {
    let system = FuzzySystem::table_i();
    let world = WorldConfig::default();
    let cfg = EvolverConfig {
        fitness_mode: FitnessMode::FullResimulation,
        weight_handoff: 2.0,
        weight_cut: 3.0,
        ..EvolverConfig::default()
    };
    let ctx = FitnessContext {
        system: &system,
        world: &world,
        cfg: &cfg,
    };
    let rec = record(&world, 5, &system);
    let mut rng = rng_stream(5, 9);
    for _ in 0..20 {
        let c = Chromosome::random(27, &mut rng);
        let from = rng.gen_range(0..rec.len() - 4);
        let h = window(&rec, from, 4);

        let candidate = system.with_consequents(c.genes().to_vec()).unwrap();
        let mut w = World::from_state(world.clone(), rec[from].0.clone());
        let policy = fls(&candidate);
        let (mut hi, mut cc) = (0, 0);
        for _ in 0..4 {
            for e in w.step(&policy).events {
                match e.event {
                    EventKind::HandoffInitiated => hi += 1,
                    EventKind::ConnectionCut => cc += 1,
                    _ => {}
                }
            }
        }
        assert_eq!(fitness(&c, &h, &ctx).unwrap(), 2.0 * hi as f64 + 3.0 * cc as f64);
    }
}

/// One still terminal 100 m inside a full station; a shallower second
/// station has a free channel. Only the (Slow, Near, Low) rule fires.
fn single_rule_window() -> (WorldConfig, HistoryWindow) {
    let cfg = WorldConfig {
        mt_count: 1,
        stations: vec![
            StationSpec {
                center: [1000.0, 1000.0],
                radius: 1000.0,
                capacity: 1,
            },
            StationSpec {
                center: [2500.0, 1000.0],
                radius: 620.0,
                capacity: 1,
            },
        ],
        ..WorldConfig::default()
    };
    let mt = MobileTerminal::new(
        0,
        [1900.0, 1000.0].into(),
        0.0,
        MotionPlan::steady(1e-9).unwrap(),
        100.0,
    );
    let mut world = World::with_terminals(cfg.clone(), vec![mt]).unwrap();
    let quiet = |_: f64, _: f64, _: f64| 0.9;
    let first = world.step(&quiet);
    assert_eq!(first.events[0].new_bs, Some(0));
    let mut h = HistoryWindow::new(4);
    for _ in 0..4 {
        let start = world.state().clone();
        let unit = world.step(&quiet);
        assert!(unit.events.is_empty());
        h.push(start, unit);
    }
    (cfg, h)
}

#[test]
fn only_the_firing_rule_matters() {
    let system = FuzzySystem::table_i();
    let (world, h) = single_rule_window();
    let cfg = EvolverConfig::default();
    let ctx = FitnessContext {
        system: &system,
        world: &world,
        cfg: &cfg,
    };
    let mut rng = rng_stream(11, 0);
    for _ in 0..40 {
        let mut genes = Chromosome::random(27, &mut rng).genes().to_vec();
        for g0 in 1..=5u8 {
            genes[0] = g0;
            let f = fitness(&Chromosome::new(genes.clone()).unwrap(), &h, &ctx).unwrap();
            if g0 >= 3 {
                assert_eq!(f, 0.0, "gene 0 = {g0}");
            } else {
                assert!(f >= 1.0, "gene 0 = {g0}");
            }
        }
    }
}

#[test]
fn evolution_finds_a_quiet_rule_base() {
    let system = FuzzySystem::table_i();
    let (world, h) = single_rule_window();
    let cfg = EvolverConfig::default();
    let ctx = FitnessContext {
        system: &system,
        world: &world,
        cfg: &cfg,
    };
    let mut genes = system.rules().consequents().to_vec();
    genes[0] = 1;
    let seed = Chromosome::new(genes).unwrap();
    let mut rng = rng_stream(4, 2);
    let pop = init_population(&seed, &cfg, &mut rng);
    let evo = evolve(pop, &h, &ctx, &mut rng).unwrap();
    assert!(evo.seed_fitness >= 1.0);
    assert_eq!(evo.best_fitness, 0.0);
    assert!(evo.best.genes()[0] >= 3);
}

#[test]
fn evolve_is_deterministic_and_elitist() {
    let system = FuzzySystem::table_i();
    let world = WorldConfig::default();
    let cfg = EvolverConfig {
        population_size: 16,
        tournament_size: 4,
        generations_per_invocation: 6,
        ..EvolverConfig::default()
    };
    let ctx = FitnessContext {
        system: &system,
        world: &world,
        cfg: &cfg,
    };
    let rec = record(&world, 8, &system);
    let h = window(&rec, 30, 4);
    let seed = Chromosome::from_rule_base(system.rules());
    let go = || {
        let mut rng = rng_stream(8, 2);
        let pop = init_population(&seed, &cfg, &mut rng);
        evolve(pop, &h, &ctx, &mut rng).unwrap()
    };
    let (a, b) = (go(), go());
    assert_eq!(a.best, b.best);
    assert_eq!(a.population, b.population);
    assert_eq!(a.best_per_generation, b.best_per_generation);
    assert!(a.best_per_generation.windows(2).all(|w| w[1] <= w[0]));
    assert!(a.best_fitness <= a.seed_fitness);
    assert_eq!(fitness(&a.best, &h, &ctx).unwrap(), a.best_fitness);
}

#[test]
fn fitness_rejects_bad_inputs() {
    let system = FuzzySystem::table_i();
    let world = WorldConfig::default();
    let cfg = EvolverConfig::default();
    let ctx = FitnessContext {
        system: &system,
        world: &world,
        cfg: &cfg,
    };
    let c = Chromosome::from_rule_base(system.rules());
    assert!(matches!(
        fitness(&c, &HistoryWindow::new(4), &ctx),
        Err(EvolverError::EmptyHistory)
    ));
    let rec = record(&world, 1, &system);
    let short = Chromosome::new(vec![3; 9]).unwrap();
    assert!(matches!(
        fitness(&short, &window(&rec, 0, 4), &ctx),
        Err(EvolverError::GeneCount { expected: 27, got: 9 })
    ));
    assert!(Chromosome::new(vec![0; 27]).is_err());
    assert!(Chromosome::new(vec![6; 27]).is_err());
}
