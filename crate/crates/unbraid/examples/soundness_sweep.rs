//! Verify the move calculus against the Alexander-polynomial oracle.
//!
//! Every knot-preserving move family is applied across the corpus and a
//! cloud of randomly derived words; component counts, exponent-sum deltas,
//! Alexander polynomials, determinants, and the Burau representation itself
//! are all checked.

use unbraid::{builtin_corpus, soundness_sweep, BraidWord};

fn main() {
    let words: Vec<BraidWord> = builtin_corpus().iter().map(|r| r.word.clone()).collect();
    let report = soundness_sweep(&words, 50, 42);
    println!(
        "checked {} words, {} applied moves",
        report.words_checked, report.moves_checked
    );
    if report.passed() {
        println!("all invariants hold");
    } else {
        for v in &report.violations {
            println!("violation: {v}");
        }
        std::process::exit(3);
    }
}
