//! Evolve one sequence that unknots several knots at once.
//!
//! Multi-knot runs cycle a candidate sequence up to 50 times per braid and
//! score it by 1 + r² / (1 + max_S + l): cover the whole set, in few passes,
//! with a short sequence.

use unbraid::{best_report, builtin_corpus, evolve_runs, BraidWord, EvolutionConfig, Problem};

fn main() {
    // the four knots up to six crossings whose words fit in three strands
    let names = ["3_1", "4_1", "5_1", "5_2"];
    let set: Vec<BraidWord> = builtin_corpus()
        .iter()
        .filter(|r| names.contains(&r.name.as_str()))
        .map(|r| r.word.clone())
        .collect();

    let mut cfg = EvolutionConfig::for_targets(Problem::Multiple, &set);
    cfg.seed = 1;
    println!(
        "set {{{}}}, population {}, generations {}",
        names.join(", "),
        cfg.population,
        cfg.generations
    );

    let reports = evolve_runs(&set, &cfg).unwrap();
    for r in &reports {
        println!(
            "run {} (seed {}): {}  | r_S {}/{}  max_S {}  l {}",
            r.run_index,
            r.seed,
            r.best,
            r.best_metrics.reduced_count,
            set.len(),
            r.best_metrics.max_passes,
            r.best_metrics.sequence_len
        );
    }

    let best = best_report(&reports);
    println!(
        "\nuniversal sequence: {}   (max_S {}, r_S {}, |S| {})",
        best.best,
        best.best_metrics.max_passes,
        best.best_metrics.reduced_count,
        set.len()
    );
    assert_eq!(best.best_metrics.reduced_count, set.len());
}
