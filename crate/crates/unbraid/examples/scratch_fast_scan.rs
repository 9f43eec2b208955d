// throwaway: fast seed discovery for the flat-fitness phase.
//
// Until a run's first success every fitness is exactly 1.0, so selection,
// crossover, and mutation draw the same random numbers whether or not we
// evaluate braids. This mimic replays the exact population trajectory of
// `evolve` (same streams, same draw order) while only braid-evaluating
// individuals long enough to plausibly solve, printing candidate seeds.
// Candidates are then confirmed with the real `evolve`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unbraid::evolution::{crossover, init_population, mutate, select, EvolutionConfig};
use unbraid::moves::GENERIC_ALPHABET;
use unbraid::{builtin_corpus, evaluate_set, MoveSequence};

fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let names: Vec<&str> = args[1].split(',').collect();
    let seed_lo: u64 = args[2].parse().unwrap();
    let seed_hi: u64 = args[3].parse().unwrap();
    let min_len: usize = args.get(4).map(|s| s.parse().unwrap()).unwrap_or(18);

    for name in names {
        let record = builtin_corpus().iter().find(|r| r.name == name).unwrap();
        let set = [record.word.clone()];
        let cfg = EvolutionConfig::single(record.word.len());

        'seed: for seed in seed_lo..=seed_hi {
            let mut rng_init = stream(seed, 0);
            let mut rng_mut = stream(seed, 1);
            let mut rng_cross = stream(seed, 2);
            let mut rng_sel = stream(seed, 3);
            let mut population = init_population(
                cfg.population,
                cfg.init_len,
                &GENERIC_ALPHABET,
                &mut rng_init,
            );
            let mut tested: std::collections::HashSet<String> = Default::default();
            for generation in 0..cfg.generations {
                for s in &population {
                    if s.len() >= min_len {
                        let token = s.to_string();
                        if tested.insert(token) {
                            let m = evaluate_set(&set, s, cfg.max_passes);
                            if m.reduced_count == 1 {
                                println!(
                                    "{},{},{},{},{}",
                                    name, seed, generation, m.crossing_changes, s
                                );
                                continue 'seed;
                            }
                        }
                    }
                }
                let fitnesses = vec![1.0f64; population.len()];
                let pool = select(&population, &fitnesses, cfg.population, &mut rng_sel);
                // mirror the crossover stage exactly: shuffle, adjacent pairs
                let mut shuffled = pool;
                shuffled.shuffle(&mut rng_cross);
                let mut next: Vec<MoveSequence> = Vec::with_capacity(shuffled.len());
                let mut chunks = shuffled.chunks_exact(2);
                for pair in &mut chunks {
                    let (a, b) = crossover(&pair[0], &pair[1], &mut rng_cross);
                    next.push(a);
                    next.push(b);
                }
                next.extend(chunks.remainder().iter().cloned());
                population = next
                    .iter()
                    .map(|s| mutate(s, &GENERIC_ALPHABET, cfg.mutation_probability, &mut rng_mut))
                    .collect();
            }
        }
        eprintln!("done {name} {seed_lo}..{seed_hi}");
    }
}
