//! Step-by-step reduction of the figure-eight knot.
//!
//! The braid word σ1 σ2⁻¹ σ1 σ2⁻¹ closes to the figure-eight knot, which has
//! unknotting number 1. One crossing change (U) turns it into an unknot
//! diagram, and six knot-preserving moves shrink that diagram to the empty
//! word.

use unbraid::moves::ApplicationOutcome;
use unbraid::{BraidWord, MoveSequence};

fn main() {
    let word: BraidWord = "1 -2 1 -2".parse().unwrap();
    let sequence: MoveSequence = "U M1 M1 R3 R2 M2 M2".parse().unwrap();

    println!("word:     {word}   ({} strands)", word.strands());
    println!("sequence: {sequence}\n");

    let trace = unbraid::run(&word, &sequence, 1);
    let mut current = word.clone();
    for step in &trace.steps {
        match &step.outcome {
            ApplicationOutcome::Applied {
                variant,
                site,
                result,
            } => {
                current = result.clone();
                println!(
                    "{:>4}  {variant}@{site}   ->  {current}",
                    step.letter.to_string()
                );
            }
            ApplicationOutcome::Skipped => {
                println!("{:>4}  (skipped)      {current}", step.letter.to_string());
            }
        }
    }

    println!(
        "\nreduced: {} after {} pass(es), {} crossing change(s)",
        trace.reduced, trace.passes_used, trace.crossing_changes
    );
    assert!(trace.reduced);
}
