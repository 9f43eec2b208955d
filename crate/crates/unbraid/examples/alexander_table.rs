//! Alexander polynomials and determinants of the builtin corpus.
//!
//! The polynomial is computed from the reduced Burau matrix of each braid
//! word; knot determinants |Δ(−1)| are always odd.

use unbraid::{alexander, builtin_corpus, determinant};

fn main() {
    println!("{:<6} {:<24} {:>4}  alexander", "knot", "word", "det");
    for record in builtin_corpus() {
        let delta = alexander(&record.word).unwrap();
        let det = determinant(&record.word).unwrap();
        println!(
            "{:<6} {:<24} {:>4}  {delta}",
            record.name,
            record.word.to_string(),
            det
        );
        assert_eq!(det % 2, 1);
    }
}
