//! Selection, crossover and mutation over integer chromosomes.

use rand::seq::index;
use rand::Rng;

use super::{Chromosome, EvolverConfig, MAX_GENE};

/// Member 0 is `seed`; the rest are uniform random chromosomes.
pub fn init_population<R: Rng + ?Sized>(
    seed: &Chromosome,
    cfg: &EvolverConfig,
    rng: &mut R,
) -> Vec<Chromosome> {
    let mut pop = Vec::with_capacity(cfg.population_size);
    pop.push(seed.clone());
    while pop.len() < cfg.population_size {
        pop.push(Chromosome::random(seed.len(), rng));
    }
    pop
}

/// Index of the fittest of `k` distinct members drawn without replacement.
/// Lower fitness wins; ties go to the lower population index.
pub fn tournament_select<R: Rng + ?Sized>(fitnesses: &[f64], k: usize, rng: &mut R) -> usize {
    assert!(k >= 1 && k <= fitnesses.len(), "tournament size {k} out of range");
    index::sample(rng, fitnesses.len(), k)
        .into_iter()
        .min_by(|&a, &b| fitnesses[a].total_cmp(&fitnesses[b]).then(a.cmp(&b)))
        .expect("k >= 1")
}

/// Swaps the suffixes starting at `cut`.
pub fn one_point_crossover_at(
    p1: &Chromosome,
    p2: &Chromosome,
    cut: usize,
) -> (Chromosome, Chromosome) {
    assert_eq!(p1.len(), p2.len(), "parents differ in length");
    assert!(cut <= p1.len());
    let mut c1 = p1.clone();
    let mut c2 = p2.clone();
    c1.genes_mut()[cut..].copy_from_slice(&p2.genes()[cut..]);
    c2.genes_mut()[cut..].copy_from_slice(&p1.genes()[cut..]);
    (c1, c2)
}

/// With probability `prob`, cuts at a uniform point in `1..len` and swaps
/// suffixes; otherwise returns copies of the parents.
pub fn one_point_crossover<R: Rng + ?Sized>(
    p1: &Chromosome,
    p2: &Chromosome,
    prob: f64,
    rng: &mut R,
) -> (Chromosome, Chromosome) {
    if p1.len() < 2 || !rng.gen_bool(prob) {
        return (p1.clone(), p2.clone());
    }
    let cut = rng.gen_range(1..p1.len());
    one_point_crossover_at(p1, p2, cut)
}

/// Each gene is independently redrawn from `1..=5` with probability `pm`;
/// the redraw may repeat the old value.
pub fn mutate_random_reset<R: Rng + ?Sized>(c: &Chromosome, pm: f64, rng: &mut R) -> Chromosome {
    let mut out = c.clone();
    for g in out.genes_mut() {
        if rng.gen_bool(pm) {
            *g = rng.gen_range(1..=MAX_GENE);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolver::rng_stream;
    use crate::fuzzy::TABLE_I;

    fn seed() -> Chromosome {
        Chromosome::new(TABLE_I.to_vec()).unwrap()
    }

    #[test]
    fn population_starts_with_seed() {
        let mut rng = rng_stream(7, 0);
        let pop = init_population(&seed(), &EvolverConfig::default(), &mut rng);
        assert_eq!(pop.len(), 50);
        assert_eq!(
            pop[0].genes(),
            &[2, 2, 3, 3, 3, 4, 4, 5, 5, 1, 2, 2, 3, 3, 3, 4, 4, 4, 1, 1, 2, 2, 2, 3, 3, 4, 4]
        );
        assert!(pop.iter().all(|c| c.len() == 27 && c.is_valid()));
    }

    #[test]
    fn random_genes_stay_in_domain() {
        let mut rng = rng_stream(11, 0);
        let cfg = EvolverConfig::default();
        let mut seen = [false; 6];
        for _ in 0..10_000 / 49 + 1 {
            for c in init_population(&seed(), &cfg, &mut rng).iter().skip(1) {
                for &g in c.genes() {
                    assert!((1..=5).contains(&g));
                    seen[g as usize] = true;
                }
            }
        }
        assert!(seen[1..].iter().all(|&s| s));
    }

    #[test]
    fn tournament_ties_pick_lowest_sampled_index() {
        let fit = vec![3.0; 50];
        let mut a = rng_stream(1, 0);
        let mut b = rng_stream(1, 0);
        let chosen = tournament_select(&fit, 10, &mut a);
        let drawn = index::sample(&mut b, 50, 10).into_vec();
        assert_eq!(chosen, *drawn.iter().min().unwrap());
    }

    #[test]
    fn tournament_returns_unique_minimum_when_sampled() {
        let mut fit = vec![5.0; 10];
        fit[7] = 1.0;
        let mut rng = rng_stream(2, 0);
        // k = population size always samples everyone.
        assert_eq!(tournament_select(&fit, 10, &mut rng), 7);
    }

    #[test]
    fn tournament_pressure_beats_median() {
        let fit: Vec<f64> = (0..50).map(f64::from).collect();
        let mut rng = rng_stream(3, 0);
        let draws = 10_000;
        let good = (0..draws)
            .filter(|_| fit[tournament_select(&fit, 10, &mut rng)] <= 24.5)
            .count();
        assert!(good as f64 >= 0.99 * draws as f64, "{good}/{draws}");
    }

    #[test]
    fn crossover_at_thirteen() {
        let ones = Chromosome::new(vec![1; 27]).unwrap();
        let fives = Chromosome::new(vec![5; 27]).unwrap();
        let (c1, c2) = one_point_crossover_at(&ones, &fives, 13);
        let mut expected = vec![1u8; 13];
        expected.extend([5u8; 14]);
        assert_eq!(c1.genes(), &expected[..]);
        assert_eq!(c2.genes().iter().filter(|&&g| g == 5).count(), 13);
    }

    #[test]
    fn crossover_disabled_copies_parents() {
        let mut rng = rng_stream(4, 0);
        let a = Chromosome::new(vec![1; 27]).unwrap();
        let b = Chromosome::new(vec![5; 27]).unwrap();
        for _ in 0..100 {
            let (c1, c2) = one_point_crossover(&a, &b, 0.0, &mut rng);
            assert_eq!((&c1, &c2), (&a, &b));
        }
    }

    #[test]
    fn crossover_conserves_genes_per_position() {
        let mut rng = rng_stream(5, 0);
        for _ in 0..10_000 {
            let a = Chromosome::random(27, &mut rng);
            let b = Chromosome::random(27, &mut rng);
            let (c1, c2) = one_point_crossover(&a, &b, 0.9, &mut rng);
            for i in 0..27 {
                let mut parents = [a.genes()[i], b.genes()[i]];
                let mut kids = [c1.genes()[i], c2.genes()[i]];
                parents.sort_unstable();
                kids.sort_unstable();
                assert_eq!(parents, kids);
            }
        }
    }

    #[test]
    fn mutation_extremes() {
        let mut rng = rng_stream(6, 0);
        let s = seed();
        assert_eq!(mutate_random_reset(&s, 0.0, &mut rng), s);
        for _ in 0..1000 {
            assert!(mutate_random_reset(&s, 1.0, &mut rng).is_valid());
        }
    }

    #[test]
    fn mutation_change_rate() {
        let mut rng = rng_stream(8, 0);
        let s = seed();
        let trials = 100_000;
        let changed: usize = (0..trials)
            .map(|_| {
                let m = mutate_random_reset(&s, 0.1, &mut rng);
                m.genes().iter().zip(s.genes()).filter(|(a, b)| a != b).count()
            })
            .sum();
        let mean = changed as f64 / trials as f64;
        assert!((mean - 2.16).abs() < 0.05, "{mean}");
    }
}
