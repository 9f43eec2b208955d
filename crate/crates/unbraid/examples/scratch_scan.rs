// throwaway seed scanner
use unbraid::{builtin_corpus, evolve, EvolutionConfig};
fn main() {
    let args: Vec<String> = std::env::args().collect();
    let names: Vec<&str> = args[1].split(',').collect();
    let seed_lo: u64 = args[2].parse().unwrap();
    let seed_hi: u64 = args[3].parse().unwrap();
    for name in names {
        let r = builtin_corpus().iter().find(|r| r.name == name).unwrap();
        let set = [r.word.clone()];
        for seed in seed_lo..=seed_hi {
            let mut cfg = EvolutionConfig::single(r.word.len());
            cfg.seed = seed;
            let rep = evolve(&set, &cfg).unwrap();
            if rep.best_metrics.reduced_count == 1 {
                println!(
                    "{},{},{},{},{}",
                    r.name,
                    seed,
                    rep.best_metrics.crossing_changes,
                    rep.best_metrics.elided_len,
                    rep.best_fitness
                );
            }
        }
        eprintln!("done {name} {seed_lo}..{seed_hi}");
    }
}
