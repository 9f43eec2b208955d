//! unbraid — a braid-word move calculus with evolutionary search for
//! unknotting sequences.
//!
//! Knots are handled as closed braids: words in the generators σ_1..σ_{n−1}.
//! A small set of moves rewrites such words — cancelling pairs, triple
//! rewrites, conjugation, destabilisation, commuting swaps, and crossing
//! changes (the only move that changes the knot). Sequences of these moves
//! are evolved so that executing them unknots one braid in a single pass, or
//! a whole set of braids under repeated application. An exact
//! Burau/Alexander oracle independently verifies that the knot-preserving
//! moves really do preserve knot type.
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! - **`reduce_figure_eight`** — step-by-step trace of a seven-move
//!   unknotting of the figure-eight knot
//! - **`torus_family`** — the `(U R2)^n M2` pattern on the (2, 2n+1) torus
//!   knots, checked against their unknotting numbers
//! - **`evolve_trefoil`** — evolve a single-knot unknotting sequence
//! - **`evolve_universal`** — evolve one sequence that unknots a whole set
//! - **`alexander_table`** — Alexander polynomials and determinants of the
//!   builtin corpus
//! - **`soundness_sweep`** — the move-soundness invariant sweep
//!
//! ```bash
//! cargo run --release -p unbraid --example reduce_figure_eight
//! cargo run --release -p unbraid --example torus_family
//! cargo run --release -p unbraid --example evolve_trefoil
//! cargo run --release -p unbraid --example evolve_universal
//! cargo run --release -p unbraid --example alexander_table
//! cargo run --release -p unbraid --example soundness_sweep
//! ```
//!
//! The same functionality is scriptable through the thin `unbraid` binary
//! (`apply`, `evolve-single`, `evolve-multi`, `verify`, `corpus`).
//!
//! ## Quick start
//!
//! ```
//! use unbraid::{BraidWord, MoveSequence};
//!
//! let figure_eight: BraidWord = "1 -2 1 -2".parse().unwrap();
//! let moves: MoveSequence = "U M1 M1 R3 R2 M2 M2".parse().unwrap();
//! let trace = unbraid::run(&figure_eight, &moves, 1);
//! assert!(trace.reduced);
//! assert_eq!(trace.crossing_changes, 1);
//! ```

pub mod braid;
pub mod cli;
pub mod corpus;
pub mod evolution;
pub mod executor;
pub mod moves;
pub mod verify;

pub use braid::{BraidWord, GeneratorLetter, Sign, WordParseError};
pub use corpus::{builtin_corpus, load_corpus, torus_unknotting_number, KnotRecord};
pub use evolution::{
    best_report, evolve, evolve_runs, fitness_f1, fitness_f2, EvolutionConfig, EvolutionReport,
    Problem, DEFAULT_SEED,
};
pub use executor::{elide, evaluate_set, run, ExecutionTrace, MoveSequence, RunMetrics};
pub use moves::{
    alphabet, apply_move, find_application, AlphabetMode, ApplicationOutcome, MoveFamily,
    MoveLetter, Variant,
};
pub use verify::{alexander, determinant, reduced_burau, soundness_sweep, LaurentPoly, PolyMatrix};
