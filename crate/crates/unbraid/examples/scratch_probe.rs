// throwaway
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unbraid::evolution::init_population;
use unbraid::moves::GENERIC_ALPHABET;
use unbraid::{builtin_corpus, evaluate_set};
fn main() {
    let names = ["7_2", "8_1", "8_3", "8_4", "8_12", "8_9", "8_17"];
    for (lo, hi) in [(25usize, 45usize), (35, 60), (45, 80)] {
        let mut rng = ChaCha8Rng::seed_from_u64(777);
        println!("== lengths {lo}..{hi}");
        for name in names {
            let r = builtin_corpus().iter().find(|r| r.name == name).unwrap();
            let set = [r.word.clone()];
            let pop = init_population(300_000, (lo, hi), &GENERIC_ALPHABET, &mut rng);
            let mut hits = 0usize;
            let mut best_c = usize::MAX;
            for s in &pop {
                let m = evaluate_set(&set, s, 1);
                if m.reduced_count == 1 {
                    hits += 1;
                    best_c = best_c.min(m.crossing_changes);
                }
            }
            println!(
                "{name}: hits {hits}/300000  best_c {}",
                if best_c == usize::MAX {
                    -1
                } else {
                    best_c as i64
                }
            );
        }
    }
}
