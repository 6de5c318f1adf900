use std::f64::consts::PI;

use evohandoff_core::netsim::{
    acceleration_for, accelerated_state, energy_wastage, select_target_bs, Arena, BaseStation,
    EventKind, Link, MobileTerminal, MotionPlan, Point, TerminalState, VelocityMode, World,
    WorldConfig,
};

fn station(id: usize, center: [f64; 2], radius: f64, capacity: u32) -> BaseStation {
    BaseStation {
        id,
        center: center.into(),
        radius,
        capacity,
        occupied: 0,
    }
}

#[test]
fn kinematics_examples() {
    assert_eq!(acceleration_for(4500.0, 75.0).unwrap(), 1.6);
    assert!(acceleration_for(1.0, 0.0).is_err());
    let (x, v) = accelerated_state(1.6, 75.0, VelocityMode::Derivative).unwrap();
    assert!((x - 4500.0).abs() < 1e-9 && (v - 120.0).abs() < 1e-9);
    let (_, v) = accelerated_state(1.6, 75.0, VelocityMode::Eq2Verbatim).unwrap();
    assert!((v - 240f64.sqrt()).abs() < 1e-12);
    assert!(accelerated_state(1.6, -1.0, VelocityMode::Derivative).is_err());
}

#[test]
fn reflection_off_the_east_wall() {
    let arena = Arena {
        width: 6000.0,
        height: 6000.0,
    };
    let (p, h) = arena.advance(Point::new(0.0, 3000.0), 0.0, 100.0);
    assert_eq!((p.x, p.y, h), (100.0, 3000.0, 0.0));
    let (p, h) = arena.advance(Point::new(5950.0, 3000.0), 0.0, 100.0);
    assert!((p.x - 5950.0).abs() < 1e-9 && (p.y - 3000.0).abs() < 1e-9);
    assert!((h - PI).abs() < 1e-12);
    let (p, _) = arena.advance(Point::new(10.0, 10.0), 1.0, 0.0);
    assert_eq!((p.x, p.y), (10.0, 10.0));
}

#[test]
fn reflection_preserves_path_length() {
    let arena = Arena {
        width: 600.0,
        height: 400.0,
    };
    let mut p = Point::new(123.0, 45.0);
    let mut h = 0.7;
    for _ in 0..200 {
        let (q, g) = arena.advance(p, h, 97.0);
        assert!(arena.contains(q));
        p = q;
        h = g;
    }
}

#[test]
fn boundary_distance_examples() {
    let bs = station(1, [866.0, 500.0], 1000.0, 4);
    assert_eq!(bs.boundary_distance(Point::new(866.0, 500.0)), 1000.0);
    assert_eq!(bs.dist_norm(Point::new(866.0, 500.0)), 1.0);
    assert_eq!(bs.boundary_distance(Point::new(1866.0, 500.0)), 0.0);
    assert!(!bs.covers(Point::new(1866.0, 500.0)));
    assert_eq!(bs.boundary_distance(Point::new(2866.0, 500.0)), -1000.0);
    assert_eq!(bs.dist_norm(Point::new(2866.0, 500.0)), 0.0);
}

#[test]
fn free_channel_examples() {
    let mut bs = station(0, [0.0, 0.0], 1.0, 6);
    assert_eq!(bs.free_channels_norm(), 1.0);
    bs.capacity = 2;
    bs.occupied = 2;
    assert_eq!(bs.free_channels_norm(), 0.0);
    bs.capacity = 5;
    assert_eq!(bs.free_channels_norm(), 0.6);
}

#[test]
fn energy_examples() {
    let stations = vec![
        station(0, [0.0, 0.0], 1400.0, 6),
        station(1, [1000.0, 0.0], 1000.0, 4),
    ];
    let p = Point::new(700.0, 0.0);
    let one = energy_wastage(p, &Link::Connected { serving: 0 }, &stations, 0.1);
    assert!((one - 0.6).abs() < 1e-12);
    let at_center = energy_wastage(Point::new(0.0, 0.0), &Link::Connected { serving: 0 }, &stations, 0.1);
    assert!((at_center - 0.1).abs() < 1e-12);
    let both = energy_wastage(
        p,
        &Link::Handover {
            serving: 0,
            target: 1,
            dwell: 2,
        },
        &stations,
        0.1,
    );
    assert!((both - (0.6 + 0.4)).abs() < 1e-12);
    assert_eq!(energy_wastage(p, &Link::Disconnected, &stations, 0.1), 0.0);
}

#[test]
fn target_selection_against_brute_force() {
    let stations = WorldConfig::default().build_stations();
    let p = Point::new(1732.0, 2000.0);
    assert_eq!(select_target_bs(p, &stations, None), Some(3));
    assert!(stations[2].boundary_distance(p) < 0.0);

    for i in 0..=60 {
        for j in 0..=60 {
            let p = Point::new(i as f64 * 100.0, j as f64 * 100.0);
            for exclude in [None, Some(0), Some(3)] {
                let mut best: Option<(f64, usize)> = None;
                for bs in &stations {
                    let d = bs.radius - ((p.x - bs.center.x).powi(2) + (p.y - bs.center.y).powi(2)).sqrt();
                    if d > 0.0 && Some(bs.id) != exclude {
                        let score = (d / bs.radius).min(1.0);
                        if best.map_or(true, |(s, _)| score > s) {
                            best = Some((score, bs.id));
                        }
                    }
                }
                assert_eq!(select_target_bs(p, &stations, exclude), best.map(|b| b.1), "{p:?}");
            }
        }
    }
}

#[test]
fn tie_goes_to_lower_id_and_full_stations_are_skipped() {
    let mut stations = vec![
        station(0, [0.0, 0.0], 100.0, 1),
        station(1, [0.0, 0.0], 100.0, 1),
    ];
    let p = Point::new(10.0, 0.0);
    assert_eq!(select_target_bs(p, &stations, None), Some(0));
    stations[0].occupied = 1;
    assert_eq!(select_target_bs(p, &stations, None), Some(1));
    assert_eq!(select_target_bs(Point::new(500.0, 0.0), &stations, None), None);
}

fn still_terminal(at: [f64; 2]) -> MobileTerminal {
    MobileTerminal::new(0, at.into(), 0.0, MotionPlan::steady(1e-9).unwrap(), 100.0)
}

#[test]
fn table_rows_through_a_world() {
    let cfg = WorldConfig {
        mt_count: 1,
        ..WorldConfig::default()
    };
    let mut world = World::with_terminals(cfg, vec![still_terminal([2598.0, 1300.0])]).unwrap();

    // Try to connect.
    let snap = world.step(&|_: f64, _: f64, _: f64| 0.5);
    assert_eq!(snap.events[0].event, EventKind::Connected);
    assert_eq!(world.terminals()[0].state(), TerminalState::Connect);

    // Initial handover; end handover two units later.
    let snap = world.step(&|_: f64, _: f64, _: f64| 0.3);
    let ev = snap.events[0];
    assert_eq!(ev.event, EventKind::HandoffInitiated);
    assert_eq!((ev.t, ev.old_bs, ev.new_bs), (2, Some(0), Some(2)));
    let hold = |_: f64, _: f64, _: f64| 0.9;
    assert!(world.step(&hold).events.is_empty());
    let done = world.step(&hold).events[0];
    assert_eq!((done.event, done.t), (EventKind::HandoffCompleted, 4));
    assert_eq!(world.terminals()[0].link.serving(), ev.new_bs);

    // Cut connection.
    let cut = world.step(&|_: f64, _: f64, _: f64| 0.1).events[0];
    assert_eq!(cut.event, EventKind::ConnectionCut);
    assert!(world.stations().iter().all(|bs| bs.occupied == 0));
}

#[test]
fn uncovered_world_is_quiet() {
    let mut cfg = WorldConfig {
        mt_count: 1,
        ..WorldConfig::default()
    };
    cfg.stations.truncate(1);
    let mut world = World::with_terminals(cfg, vec![still_terminal([5900.0, 5900.0])]).unwrap();
    for _ in 0..10 {
        assert!(world.step(&|_: f64, _: f64, _: f64| 0.9).events.is_empty());
    }
    assert_eq!(world.terminals()[0].energy, 100.0);
}

#[test]
fn same_seed_same_world() {
    let cfg = WorldConfig::default();
    let policy = |v: f64, d: f64, c: f64| (0.2 + 0.5 * d + 0.2 * c - v / 100.0).clamp(0.0, 1.0);
    let run = || {
        let mut w = World::new(cfg.clone(), 42).unwrap();
        while !w.is_finished() {
            w.step(&policy);
        }
        serde_json::to_string(w.log()).unwrap()
    };
    assert_eq!(run(), run());
    let other = World::new(cfg.clone(), 43).unwrap();
    assert_ne!(
        World::new(cfg, 42).unwrap().terminals()[0].position,
        other.terminals()[0].position
    );
}
