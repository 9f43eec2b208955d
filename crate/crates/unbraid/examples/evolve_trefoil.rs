//! Evolve an unknotting sequence for the trefoil.
//!
//! Single-knot runs apply a candidate sequence once and score it by
//! 1 + 10000·r / (l_opt + c³ + 1), so evolution hunts for sequences that
//! unknot with as few crossing changes as possible.

use unbraid::{best_report, evolve_runs, EvolutionConfig, Problem};

fn main() {
    let trefoil: unbraid::BraidWord = "1 1 1".parse().unwrap();
    let mut cfg = EvolutionConfig::for_targets(Problem::Single, std::slice::from_ref(&trefoil));
    cfg.seed = 1;

    println!(
        "population {}, generations {}, {} runs seeded {}..{}",
        cfg.population,
        cfg.generations,
        cfg.runs,
        cfg.seed,
        cfg.seed + cfg.runs as u64 - 1
    );

    let reports = evolve_runs(&[trefoil], &cfg).unwrap();
    for r in &reports {
        println!(
            "run {} (seed {}): {}  fitness {:.1}  c_S {}  l_opt {}",
            r.run_index,
            r.seed,
            r.best,
            r.best_fitness,
            r.best_metrics.crossing_changes,
            r.best_metrics.elided_len
        );
    }

    let best = best_report(&reports);
    println!("\nbest sequence: {}", best.best);
    println!("fitness curve (first runs' last five generations):");
    for stat in best.history.iter().rev().take(5).rev() {
        println!(
            "  gen {:>3}  best {:>9.2}  mean {:>9.2}",
            stat.generation, stat.best, stat.mean
        );
    }
    assert_eq!(best.best_metrics.reduced_count, 1);
    assert_eq!(best.best_metrics.crossing_changes, 1);
}
