//! Runs a move sequence against braid words and collects run statistics.
//!
//! A sequence is attempted move by move, cycling back to the start when the
//! end is reached. Moves whose preconditions fail leave the word unchanged.
//! After every applied move the word is tested for triviality; reaching the
//! empty word ends the run successfully. A run also ends after `max_passes`
//! complete passes, or early once a whole pass applies nothing — the word is
//! then a fixed point and can never change again.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::braid::BraidWord;
use crate::moves::{apply_move, ApplicationOutcome, MoveLetter};

/// A nonempty list of move letters; the unit of evolution.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MoveSequence {
    moves: Vec<MoveLetter>,
}

impl MoveSequence {
    /// Rejects the empty list; a sequence always keeps at least one move.
    pub fn new(moves: Vec<MoveLetter>) -> Result<Self, SequenceParseError> {
        if moves.is_empty() {
            return Err(SequenceParseError::Empty);
        }
        Ok(MoveSequence { moves })
    }

    pub fn moves(&self) -> &[MoveLetter] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor guarantees at least one move
    }

    /// Number of crossing-change letters in the sequence (the quantity `c`).
    pub fn crossing_letters(&self) -> usize {
        self.moves.iter().filter(|m| m.is_crossing_change()).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceParseError {
    #[error("a move sequence needs at least one move")]
    Empty,
    #[error("token {position}: `{token}` is not a move letter")]
    BadToken { position: usize, token: String },
}

impl FromStr for MoveSequence {
    type Err = SequenceParseError;

    /// Whitespace-separated move tokens, e.g. `"U M1 M1 R3 R2 M2 M2"`.
    fn from_str(text: &str) -> Result<Self, SequenceParseError> {
        let mut moves = Vec::new();
        for (i, token) in text.split_whitespace().enumerate() {
            let letter: MoveLetter = token.parse().map_err(|_| SequenceParseError::BadToken {
                position: i + 1,
                token: token.to_string(),
            })?;
            moves.push(letter);
        }
        MoveSequence::new(moves)
    }
}

impl fmt::Display for MoveSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.moves.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// One attempted move in a trace. `pass` and `index` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub pass: usize,
    pub index: usize,
    pub letter: MoveLetter,
    pub outcome: ApplicationOutcome,
}

/// Full record of one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExecutionTrace {
    pub steps: Vec<TraceStep>,
    pub final_word: BraidWord,
    /// True exactly when the final word is trivial.
    pub reduced: bool,
    /// Completed cycles through the sequence; a partial final pass counts as
    /// one pass.
    pub passes_used: usize,
    /// Applied crossing-change steps.
    pub crossing_changes: usize,
}

/// The quantities measured for one sequence against one braid set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunMetrics {
    /// r_S: braids fully reduced.
    pub reduced_count: usize,
    /// min_S: fewest passes needed over the reduced braids (0 if none).
    pub min_passes: usize,
    /// max_S: most passes needed over the reduced braids (0 if none).
    pub max_passes: usize,
    /// l: sequence length.
    pub sequence_len: usize,
    /// l_opt: length after eliding never-applied moves; defined against the
    /// braid itself for singleton sets and equal to `sequence_len` otherwise.
    pub elided_len: usize,
    /// c: crossing-change letters in the sequence.
    pub crossing_letters: usize,
    /// c_S: successful crossing-change applications, totalled over the set.
    pub crossing_changes: usize,
}

struct ExecSummary {
    final_word: BraidWord,
    reduced: bool,
    passes_used: usize,
    crossing_changes: usize,
    /// Per-position flag: did this move ever apply in any pass?
    ever_applied: Vec<bool>,
}

/// Single engine behind `run`, `elide` and `evaluate_set`; `on_step` sees
/// every attempted move in order.
fn execute<F>(
    word: &BraidWord,
    sequence: &MoveSequence,
    max_passes: usize,
    mut on_step: F,
) -> ExecSummary
where
    F: FnMut(usize, usize, MoveLetter, &ApplicationOutcome),
{
    let mut current = word.clone();
    let mut ever_applied = vec![false; sequence.len()];
    let mut crossing_changes = 0;
    let mut passes_used = 0;

    if current.is_trivial() {
        return ExecSummary {
            final_word: current,
            reduced: true,
            passes_used,
            crossing_changes,
            ever_applied,
        };
    }

    'outer: for pass in 1..=max_passes {
        passes_used = pass;
        let mut pass_applied = false;
        for (i, letter) in sequence.moves().iter().enumerate() {
            let outcome = apply_move(&current, letter);
            on_step(pass, i + 1, *letter, &outcome);
            if let ApplicationOutcome::Applied { result, .. } = outcome {
                current = result;
                pass_applied = true;
                ever_applied[i] = true;
                if letter.is_crossing_change() {
                    crossing_changes += 1;
                }
                if current.is_trivial() {
                    break 'outer;
                }
            }
        }
        // a pass that applied nothing can never apply anything later
        if !pass_applied {
            break;
        }
    }

    let reduced = current.is_trivial();
    ExecSummary {
        final_word: current,
        reduced,
        passes_used,
        crossing_changes,
        ever_applied,
    }
}

/// Run `sequence` against `word` for at most `max_passes` passes, recording
/// every step.
pub fn run(word: &BraidWord, sequence: &MoveSequence, max_passes: usize) -> ExecutionTrace {
    let mut steps = Vec::new();
    let summary = execute(
        word,
        sequence,
        max_passes,
        |pass, index, letter, outcome| {
            steps.push(TraceStep {
                pass,
                index,
                letter,
                outcome: outcome.clone(),
            });
        },
    );
    ExecutionTrace {
        steps,
        final_word: summary.final_word,
        reduced: summary.reduced,
        passes_used: summary.passes_used,
        crossing_changes: summary.crossing_changes,
    }
}

/// Drop every move that never applied during a run of `sequence` on `word`,
/// returning the shortened sequence and its length `l_opt`.
///
/// When no move applied at all the returned sequence keeps its first move
/// (sequences stay nonempty) but `l_opt` is reported as 0: nothing useful
/// executed.
pub fn elide(
    word: &BraidWord,
    sequence: &MoveSequence,
    max_passes: usize,
) -> (MoveSequence, usize) {
    let summary = execute(word, sequence, max_passes, |_, _, _, _| {});
    elide_from_flags(sequence, &summary.ever_applied)
}

fn elide_from_flags(sequence: &MoveSequence, ever_applied: &[bool]) -> (MoveSequence, usize) {
    let kept: Vec<MoveLetter> = sequence
        .moves()
        .iter()
        .zip(ever_applied)
        .filter_map(|(m, &used)| used.then_some(*m))
        .collect();
    let l_opt = kept.len();
    if kept.is_empty() {
        let first = MoveSequence::new(vec![sequence.moves()[0]]).expect("one move");
        (first, 0)
    } else {
        (MoveSequence::new(kept).expect("nonempty"), l_opt)
    }
}

/// Run `sequence` against every braid in `set` and aggregate the metrics.
pub fn evaluate_set(set: &[BraidWord], sequence: &MoveSequence, max_passes: usize) -> RunMetrics {
    assert!(!set.is_empty(), "evaluate_set needs at least one braid");
    let mut reduced_count = 0;
    let mut min_passes = usize::MAX;
    let mut max_passes_seen = 0;
    let mut crossing_changes = 0;
    let mut single_elided = sequence.len();

    for word in set {
        let summary = execute(word, sequence, max_passes, |_, _, _, _| {});
        if summary.reduced {
            reduced_count += 1;
            min_passes = min_passes.min(summary.passes_used);
            max_passes_seen = max_passes_seen.max(summary.passes_used);
        }
        crossing_changes += summary.crossing_changes;
        if set.len() == 1 {
            single_elided = elide_from_flags(sequence, &summary.ever_applied).1;
        }
    }

    RunMetrics {
        reduced_count,
        min_passes: if reduced_count == 0 { 0 } else { min_passes },
        max_passes: max_passes_seen,
        sequence_len: sequence.len(),
        elided_len: if set.len() == 1 {
            single_elided
        } else {
            sequence.len()
        },
        crossing_letters: sequence.crossing_letters(),
        crossing_changes,
    }
}
