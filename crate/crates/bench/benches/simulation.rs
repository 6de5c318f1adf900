use criterion::{criterion_group, criterion_main, Criterion};
use evohandoff_bench::warmed_world;
use evohandoff_core::evolver::{fitness, Chromosome, FitnessContext, HistoryWindow};
use evohandoff_core::experiment::run;
use evohandoff_core::{EvolverConfig, ExperimentConfig, FuzzySystem, Policy, PolicyKind, WorldConfig};

fn simulation(c: &mut Criterion) {
    let cfg = WorldConfig::default();
    let table = FuzzySystem::table_i();
    let fls = Policy::new(PolicyKind::Fls, &table, &EvolverConfig::default(), 1).unwrap();

    let world = warmed_world(&cfg, 1, 10);
    c.bench_function("world/step_fls", |b| {
        b.iter_batched(
            || world.clone(),
            |mut w| w.step(&fls),
            criterion::BatchSize::SmallInput,
        )
    });

    let exp = ExperimentConfig::default();
    c.bench_function("run/fls_75_units", |b| b.iter(|| run(&exp, PolicyKind::Fls, 1).unwrap()));

    let evolver = EvolverConfig::default();
    let mut w = warmed_world(&cfg, 2, 20);
    let mut history = HistoryWindow::new(evolver.window);
    for _ in 0..evolver.window {
        let start = w.state().clone();
        let unit = w.step(&fls);
        history.push(start, unit);
    }
    let ctx = FitnessContext {
        system: &table,
        world: &cfg,
        cfg: &evolver,
    };
    let seed = Chromosome::from_rule_base(table.rules());
    c.bench_function("fitness/replay_window", |b| b.iter(|| fitness(&seed, &history, &ctx).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = simulation
}
criterion_main!(benches);
