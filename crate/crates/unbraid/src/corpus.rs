//! Reference knot data: braid words for the 35 prime knots with up to eight
//! crossings, their known unknotting numbers, and the crossing-change counts
//! the original search reached for them. External corpus files extend the set.

use std::fmt;
use std::io::BufRead;
use std::path::Path;

use once_cell::sync::Lazy;
use thiserror::Error;

use crate::braid::{BraidWord, WordParseError};

/// One reference knot: a name, its closed-braid word, and bookkeeping counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub word: BraidWord,
    pub strands: u32,
    /// Letters in the braid word (crossings of the closed-braid diagram).
    pub crossings: usize,
    /// Known unknotting number, when recorded.
    pub known_unknotting: Option<u32>,
    /// Crossing-change count of the recorded reference sequence.
    pub reference_changes: Option<u32>,
}

impl fmt::Display for KnotRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}", self.name, self.word)
    }
}

/// name, word, strands, crossings, u(K), reference c
#[rustfmt::skip]
const BUILTIN: &[(&str, &str, u32, usize, u32, u32)] = &[
    ("3_1", "1 1 1", 2, 3, 1, 1),
    ("4_1", "1 -2 1 -2", 3, 4, 1, 1),
    ("5_1", "1 1 1 1 1", 2, 5, 2, 2),
    ("5_2", "1 1 1 2 -1 2", 3, 6, 1, 1),
    ("6_1", "1 1 2 -1 -3 2 -3", 4, 7, 1, 2),
    ("6_2", "1 1 1 -2 1 -2", 3, 6, 1, 2),
    ("6_3", "1 1 -2 1 -2 -2", 3, 6, 1, 2),
    ("7_1", "1 1 1 1 1 1 1", 2, 7, 3, 3),
    ("7_2", "1 1 1 2 -1 2 3 -2 3", 4, 9, 1, 3),
    ("7_3", "1 1 1 1 1 2 -1 2", 3, 8, 2, 2),
    ("7_4", "1 1 2 -1 2 2 3 -2 3", 4, 9, 2, 2),
    ("7_5", "1 1 1 1 2 -1 2 2", 3, 8, 2, 3),
    ("7_6", "1 1 -2 1 3 -2 3", 4, 7, 1, 2),
    ("7_7", "1 -2 1 -2 3 -2 3", 4, 7, 1, 1),
    ("8_1", "1 1 2 -1 2 3 -2 -4 3 -4", 5, 10, 1, 3),
    ("8_2", "1 1 1 1 1 -2 1 -2", 3, 8, 2, 2),
    ("8_3", "1 1 2 -1 -3 2 -3 -4 3 -4", 5, 10, 2, 2),
    ("8_4", "1 1 1 -2 1 -2 -3 2 -3", 4, 9, 2, 2),
    ("8_5", "1 1 1 -2 1 1 1 -2", 3, 8, 2, 2),
    ("8_6", "1 1 1 1 2 -1 -3 2 -3", 4, 9, 2, 3),
    ("8_7", "1 1 1 1 -2 1 -2 -2", 3, 8, 1, 2),
    ("8_8", "1 1 1 2 -1 -3 2 -3 -3", 4, 9, 2, 2),
    ("8_9", "1 1 1 -2 1 -2 -2 -2", 3, 8, 1, 1),
    ("8_10", "1 1 1 -2 1 1 -2 -2", 3, 8, 2, 2),
    ("8_11", "1 1 2 -1 2 2 -3 2 -3", 4, 9, 1, 2),
    ("8_12", "1 -2 1 3 -2 -4 3 -4", 5, 8, 2, 3),
    ("8_13", "1 1 -2 1 -2 -2 -3 2 -3", 4, 9, 1, 2),
    ("8_14", "1 1 1 2 -1 2 -3 2 -3", 4, 9, 1, 3),
    ("8_15", "1 1 -2 1 3 2 2 2 3", 4, 9, 2, 2),
    ("8_16", "1 1 -2 1 1 -2 1 -2", 3, 8, 2, 3),
    ("8_17", "1 1 -2 1 -2 1 -2 -2", 3, 8, 1, 1),
    ("8_18", "1 -2 1 -2 1 -2 1 -2", 3, 8, 2, 2),
    ("8_19", "1 1 1 2 1 1 1 2", 3, 8, 3, 3),
    ("8_20", "1 1 1 -2 -1 -1 -1 -2", 3, 8, 1, 1),
    ("8_21", "1 1 1 2 -1 -1 2 2", 3, 8, 1, 1),
];

static BUILTIN_RECORDS: Lazy<Vec<KnotRecord>> = Lazy::new(|| {
    BUILTIN
        .iter()
        .map(|&(name, word, strands, crossings, u, c)| {
            let word: BraidWord = word.parse().expect("builtin words parse");
            debug_assert_eq!(word.strands(), strands);
            debug_assert_eq!(word.len(), crossings);
            KnotRecord {
                name: name.to_string(),
                word,
                strands,
                crossings,
                known_unknotting: Some(u),
                reference_changes: Some(c),
            }
        })
        .collect()
});

/// The 35 embedded knot records, 3_1 through 8_21.
pub fn builtin_corpus() -> &'static [KnotRecord] {
    &BUILTIN_RECORDS
}

/// Look up an embedded record by name.
pub fn find(name: &str) -> Option<&'static KnotRecord> {
    builtin_corpus().iter().find(|r| r.name == name)
}

/// Unknotting number of the (p, q) torus knot: (p−1)(q−1)/2.
pub fn torus_unknotting_number(p: u32, q: u32) -> Result<u32, TorusError> {
    if p == 0 || q == 0 {
        return Err(TorusError::NotPositive { p, q });
    }
    if gcd(p, q) != 1 {
        return Err(TorusError::NotCoprime { p, q });
    }
    Ok((p - 1) * (q - 1) / 2)
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusError {
    #[error("torus parameters must be positive, got ({p}, {q})")]
    NotPositive { p: u32, q: u32 },
    #[error("({p}, {q}) is a torus link, not a knot: parameters must be coprime")]
    NotCoprime { p: u32, q: u32 },
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read corpus file: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: missing name or braid word (fields are tab-separated)")]
    MissingFields { line: usize },
    #[error("line {line}: {source}")]
    BadWord {
        line: usize,
        #[source]
        source: WordParseError,
    },
    #[error("line {line}: malformed field `{field}` (expected u=<int> or c=<int>)")]
    BadField { line: usize, field: String },
    #[error(
        "line {line}: `{name}` closes to {components} components; corpus entries must be knots"
    )]
    NotAKnot {
        line: usize,
        name: String,
        components: usize,
    },
}

/// Load a corpus file: one record per line, tab-separated `name`, `word`,
/// then optional `u=<int>` and `c=<int>` fields. `#` starts a comment line.
pub fn load_corpus(path: &Path) -> Result<Vec<KnotRecord>, CorpusError> {
    let file = std::fs::File::open(path)?;
    parse_corpus(std::io::BufReader::new(file))
}

/// Parse corpus records from any reader; see [`load_corpus`] for the format.
pub fn parse_corpus<R: BufRead>(reader: R) -> Result<Vec<KnotRecord>, CorpusError> {
    let mut records = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split('\t').map(str::trim);
        let name = fields.next().filter(|s| !s.is_empty());
        let word_text = fields.next();
        let (Some(name), Some(word_text)) = (name, word_text) else {
            return Err(CorpusError::MissingFields { line: line_no });
        };
        let word: BraidWord = word_text.parse().map_err(|source| CorpusError::BadWord {
            line: line_no,
            source,
        })?;
        let mut known_unknotting = None;
        let mut reference_changes = None;
        for field in fields {
            if field.is_empty() {
                continue;
            }
            let parsed = field
                .split_once('=')
                .and_then(|(key, value)| Some((key, value.parse::<u32>().ok()?)));
            match parsed {
                Some(("u", value)) => known_unknotting = Some(value),
                Some(("c", value)) => reference_changes = Some(value),
                _ => {
                    return Err(CorpusError::BadField {
                        line: line_no,
                        field: field.to_string(),
                    })
                }
            }
        }
        let components = word.component_count();
        if components != 1 {
            return Err(CorpusError::NotAKnot {
                line: line_no,
                name: name.to_string(),
                components,
            });
        }
        records.push(KnotRecord {
            name: name.to_string(),
            strands: word.strands(),
            crossings: word.len(),
            word,
            known_unknotting,
            reference_changes,
        });
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::determinant;

    #[test]
    fn corpus_has_exactly_the_35_small_knots() {
        assert_eq!(builtin_corpus().len(), 35);
        assert_eq!(builtin_corpus().first().unwrap().name, "3_1");
        assert_eq!(builtin_corpus().last().unwrap().name, "8_21");
    }

    #[test]
    fn figure_eight_record_matches_the_table() {
        let r = find("4_1").unwrap();
        assert_eq!(r.word, "1 -2 1 -2".parse().unwrap());
        assert_eq!(r.strands, 3);
        assert_eq!(r.crossings, 4);
        assert_eq!(r.known_unknotting, Some(1));
        assert_eq!(r.reference_changes, Some(1));
    }

    #[test]
    fn eight_twelve_record_matches_the_table() {
        let r = find("8_12").unwrap();
        assert_eq!(r.word, "1 -2 1 3 -2 -4 3 -4".parse().unwrap());
        assert_eq!(r.strands, 5);
        assert_eq!(r.crossings, 8);
    }

    #[test]
    fn recorded_strand_and_crossing_counts_match_the_words() {
        for r in builtin_corpus() {
            assert_eq!(r.word.strands(), r.strands, "{}", r.name);
            assert_eq!(r.word.len(), r.crossings, "{}", r.name);
        }
    }

    #[test]
    fn every_record_closes_to_a_knot() {
        for r in builtin_corpus() {
            assert_eq!(r.word.component_count(), 1, "{}", r.name);
        }
    }

    #[test]
    fn every_knot_determinant_is_odd() {
        for r in builtin_corpus() {
            let det = determinant(&r.word).unwrap();
            assert_eq!(det % 2, 1, "{} has even determinant {det}", r.name);
        }
    }

    #[test]
    fn reference_change_counts_match_unknotting_numbers_21_times() {
        // sanity check on the transcription: the reference search matched the
        // known unknotting number for exactly 21 of the 35 knots
        let sharp = builtin_corpus()
            .iter()
            .filter(|r| r.known_unknotting == r.reference_changes)
            .count();
        assert_eq!(sharp, 21);
    }

    #[test]
    fn torus_formula() {
        assert_eq!(torus_unknotting_number(2, 3), Ok(1));
        assert_eq!(torus_unknotting_number(2, 7), Ok(3));
        assert_eq!(torus_unknotting_number(1, 9), Ok(0));
        assert_eq!(torus_unknotting_number(3, 5), Ok(4));
        assert_eq!(
            torus_unknotting_number(2, 4),
            Err(TorusError::NotCoprime { p: 2, q: 4 })
        );
        assert_eq!(
            torus_unknotting_number(0, 3),
            Err(TorusError::NotPositive { p: 0, q: 3 })
        );
    }

    #[test]
    fn corpus_files_parse() {
        let text = "# comment\n3_1\t1 1 1\tu=1\n\ncustom\t1 -2 1 -2\tu=1\tc=1\n";
        let records = parse_corpus(std::io::Cursor::new(text)).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].name, "3_1");
        assert_eq!(records[0].known_unknotting, Some(1));
        assert_eq!(records[0].reference_changes, None);
        assert_eq!(records[1].name, "custom");
        assert_eq!(records[1].strands, 3);
        assert_eq!(records[1].reference_changes, Some(1));
    }

    #[test]
    fn empty_corpus_is_valid() {
        let records = parse_corpus(std::io::Cursor::new("# nothing here\n")).unwrap();
        assert!(records.is_empty());
    }

    #[test]
    fn corpus_errors_carry_line_numbers() {
        let err = parse_corpus(std::io::Cursor::new("3_1\t1 1 1\nbad\t1 0")).unwrap_err();
        match err {
            CorpusError::BadWord { line, source } => {
                assert_eq!(line, 2);
                assert_eq!(
                    source,
                    WordParseError::ZeroIndex {
                        position: 2,
                        token: "0".into()
                    }
                );
            }
            other => panic!("wrong error: {other}"),
        }

        let err = parse_corpus(std::io::Cursor::new("hopf\t1 1")).unwrap_err();
        match err {
            CorpusError::NotAKnot {
                line,
                name,
                components,
            } => {
                assert_eq!((line, name.as_str(), components), (1, "hopf", 2));
            }
            other => panic!("wrong error: {other}"),
        }

        let err = parse_corpus(std::io::Cursor::new("3_1\t1 1 1\tv=9")).unwrap_err();
        assert!(matches!(err, CorpusError::BadField { line: 1, .. }));
    }
}
