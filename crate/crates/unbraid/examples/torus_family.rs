//! The (2, 2n+1) torus knots σ1^{2n+1} unknot under the pattern
//! (U R2)^n M2, using exactly n crossing changes — which matches their
//! unknotting number (2−1)(2n+1−1)/2 = n.

use unbraid::braid::{BraidWord, GeneratorLetter, Sign};
use unbraid::executor::MoveSequence;
use unbraid::torus_unknotting_number;

fn main() {
    println!("knot      word              sequence             changes  u(T_2,q)");
    for n in 1..=5u32 {
        let q = 2 * n + 1;
        let word = BraidWord::from_letters((0..q).map(|_| GeneratorLetter::new(1, Sign::Positive)));
        let mut tokens = Vec::new();
        for _ in 0..n {
            tokens.push("U");
            tokens.push("R2");
        }
        tokens.push("M2");
        let sequence: MoveSequence = tokens.join(" ").parse().unwrap();

        let trace = unbraid::run(&word, &sequence, 1);
        let expected = torus_unknotting_number(2, q).unwrap();
        println!(
            "T(2,{q:<2})  {:<17} {:<20} {:<8} {}",
            word.to_string(),
            sequence.to_string(),
            trace.crossing_changes,
            expected
        );
        assert!(trace.reduced);
        assert_eq!(trace.crossing_changes as u32, expected);
    }
    println!("\nevery torus word reduced with exactly u(T) crossing changes");
}
