//! The move calculus on braid words.
//!
//! Each move letter names a rewrite family; applying one to a word means
//! finding the leftmost site whose preconditions hold and rewriting there.
//! If no site qualifies the word is left unchanged. All site and variant
//! resolution is deterministic, so a move letter is a function on words.
//!
//! Families:
//!
//! * `R2`  — delete an adjacent cancelling pair σ_i^{±1} σ_i^{∓1}
//! * `R3`  — rewrite a same-sign triple σ_i σ_{i+1} σ_i ↔ σ_{i+1} σ_i σ_{i+1}
//! * `M1`  — conjugate: move the first letter to the end (`M1b`: last to front)
//! * `M2`  — destabilise: delete the sole occurrence of the maximal generator
//! * `S`   — swap an adjacent commuting pair σ_i σ_j, |i−j| > 1 (`Sb` scans
//!   right-to-left)
//! * `U`   — crossing change: flip the sign of one letter
//! * `R2b` / `M2b` — the length-increasing inverses of `R2` / `M2`; these are
//!   kept out of the default genome alphabet
//!
//! Apart from `U` (which changes the knot by design) every family preserves
//! the closure's knot type, and all families preserve the number of closure
//! components of a knot word.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::braid::{BraidWord, GeneratorLetter, Sign};

/// Orientation of the triple rewrite: `Forward` sends σ_i σ_{i+1} σ_i to
/// σ_{i+1} σ_i σ_{i+1}; `Reverse` is the inverse rewrite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Reverse,
}

/// Sign constraint carried by a letter. `Any` is the generic form used by the
/// default alphabet; `Only` restricts the matched site to one sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignFilter {
    Any,
    Only(Sign),
}

impl SignFilter {
    fn accepts(self, sign: Sign) -> bool {
        match self {
            SignFilter::Any => true,
            SignFilter::Only(s) => s == sign,
        }
    }
}

/// Constraint for the triple move: generic, or an exact direction and sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TripleFilter {
    Any,
    Exact(Direction, Sign),
}

/// Constraint for the commuting-swap move: generic, or the exact signs of the
/// two letters in order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairFilter {
    Any,
    Exact(Sign, Sign),
}

impl PairFilter {
    fn accepts(self, a: Sign, b: Sign) -> bool {
        match self {
            PairFilter::Any => true,
            PairFilter::Exact(x, y) => x == a && y == b,
        }
    }
}

/// One genome letter. The generic letters (`Any` filters) are what evolution
/// uses by default; signed letters pin the site's signs and direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveLetter {
    R2(SignFilter),
    R3(TripleFilter),
    M1(SignFilter),
    M1Bar(SignFilter),
    M2(SignFilter),
    Swap(PairFilter),
    SwapBar(PairFilter),
    U(SignFilter),
    R2Bar(SignFilter),
    M2Bar(SignFilter),
}

/// The family a letter belongs to, ignoring sign/direction constraints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveFamily {
    R2,
    R3,
    M1,
    M1Bar,
    M2,
    Swap,
    SwapBar,
    U,
    R2Bar,
    M2Bar,
}

impl MoveLetter {
    pub fn family(&self) -> MoveFamily {
        match self {
            MoveLetter::R2(_) => MoveFamily::R2,
            MoveLetter::R3(_) => MoveFamily::R3,
            MoveLetter::M1(_) => MoveFamily::M1,
            MoveLetter::M1Bar(_) => MoveFamily::M1Bar,
            MoveLetter::M2(_) => MoveFamily::M2,
            MoveLetter::Swap(_) => MoveFamily::Swap,
            MoveLetter::SwapBar(_) => MoveFamily::SwapBar,
            MoveLetter::U(_) => MoveFamily::U,
            MoveLetter::R2Bar(_) => MoveFamily::R2Bar,
            MoveLetter::M2Bar(_) => MoveFamily::M2Bar,
        }
    }

    /// True for the crossing-change family.
    pub fn is_crossing_change(&self) -> bool {
        self.family() == MoveFamily::U
    }

    /// True for the length-increasing families excluded from the default
    /// alphabet.
    pub fn is_length_increasing(&self) -> bool {
        matches!(self.family(), MoveFamily::R2Bar | MoveFamily::M2Bar)
    }
}

impl fmt::Display for MoveFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let token = match self {
            MoveFamily::R2 => "R2",
            MoveFamily::R3 => "R3",
            MoveFamily::M1 => "M1",
            MoveFamily::M1Bar => "M1b",
            MoveFamily::M2 => "M2",
            MoveFamily::Swap => "S",
            MoveFamily::SwapBar => "Sb",
            MoveFamily::U => "U",
            MoveFamily::R2Bar => "R2b",
            MoveFamily::M2Bar => "M2b",
        };
        write!(f, "{token}")
    }
}

impl fmt::Display for MoveLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveLetter::R2(SignFilter::Any) => write!(f, "R2"),
            MoveLetter::R2(SignFilter::Only(s)) => write!(f, "R2{s}"),
            MoveLetter::R3(TripleFilter::Any) => write!(f, "R3"),
            MoveLetter::R3(TripleFilter::Exact(Direction::Forward, s)) => write!(f, "R3{s}"),
            MoveLetter::R3(TripleFilter::Exact(Direction::Reverse, s)) => write!(f, "R3b{s}"),
            MoveLetter::M1(SignFilter::Any) => write!(f, "M1"),
            MoveLetter::M1(SignFilter::Only(s)) => write!(f, "M1{s}"),
            MoveLetter::M1Bar(SignFilter::Any) => write!(f, "M1b"),
            MoveLetter::M1Bar(SignFilter::Only(s)) => write!(f, "M1b{s}"),
            MoveLetter::M2(SignFilter::Any) => write!(f, "M2"),
            MoveLetter::M2(SignFilter::Only(s)) => write!(f, "M2{s}"),
            MoveLetter::Swap(PairFilter::Any) => write!(f, "S"),
            MoveLetter::Swap(PairFilter::Exact(a, b)) => write!(f, "S{a}{b}"),
            MoveLetter::SwapBar(PairFilter::Any) => write!(f, "Sb"),
            MoveLetter::SwapBar(PairFilter::Exact(a, b)) => write!(f, "Sb{a}{b}"),
            MoveLetter::U(SignFilter::Any) => write!(f, "U"),
            MoveLetter::U(SignFilter::Only(s)) => write!(f, "U{s}"),
            MoveLetter::R2Bar(SignFilter::Any) => write!(f, "R2b"),
            MoveLetter::R2Bar(SignFilter::Only(s)) => write!(f, "R2b{s}"),
            MoveLetter::M2Bar(SignFilter::Any) => write!(f, "M2b"),
            MoveLetter::M2Bar(SignFilter::Only(s)) => write!(f, "M2b{s}"),
        }
    }
}

/// Unknown move token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("`{token}` is not a move letter")]
pub struct MoveParseError {
    pub token: String,
}

impl FromStr for MoveLetter {
    type Err = MoveParseError;

    fn from_str(token: &str) -> Result<Self, MoveParseError> {
        use Direction::*;
        use Sign::{Negative as N, Positive as P};
        let letter = match token {
            "R2" => MoveLetter::R2(SignFilter::Any),
            "R2+" => MoveLetter::R2(SignFilter::Only(P)),
            "R2-" => MoveLetter::R2(SignFilter::Only(N)),
            "R3" => MoveLetter::R3(TripleFilter::Any),
            "R3+" => MoveLetter::R3(TripleFilter::Exact(Forward, P)),
            "R3-" => MoveLetter::R3(TripleFilter::Exact(Forward, N)),
            "R3b+" => MoveLetter::R3(TripleFilter::Exact(Reverse, P)),
            "R3b-" => MoveLetter::R3(TripleFilter::Exact(Reverse, N)),
            "M1" => MoveLetter::M1(SignFilter::Any),
            "M1+" => MoveLetter::M1(SignFilter::Only(P)),
            "M1-" => MoveLetter::M1(SignFilter::Only(N)),
            "M1b" => MoveLetter::M1Bar(SignFilter::Any),
            "M1b+" => MoveLetter::M1Bar(SignFilter::Only(P)),
            "M1b-" => MoveLetter::M1Bar(SignFilter::Only(N)),
            "M2" => MoveLetter::M2(SignFilter::Any),
            "M2+" => MoveLetter::M2(SignFilter::Only(P)),
            "M2-" => MoveLetter::M2(SignFilter::Only(N)),
            "S" => MoveLetter::Swap(PairFilter::Any),
            "S++" => MoveLetter::Swap(PairFilter::Exact(P, P)),
            "S+-" => MoveLetter::Swap(PairFilter::Exact(P, N)),
            "S-+" => MoveLetter::Swap(PairFilter::Exact(N, P)),
            "S--" => MoveLetter::Swap(PairFilter::Exact(N, N)),
            "Sb" => MoveLetter::SwapBar(PairFilter::Any),
            "Sb++" => MoveLetter::SwapBar(PairFilter::Exact(P, P)),
            "Sb+-" => MoveLetter::SwapBar(PairFilter::Exact(P, N)),
            "Sb-+" => MoveLetter::SwapBar(PairFilter::Exact(N, P)),
            "Sb--" => MoveLetter::SwapBar(PairFilter::Exact(N, N)),
            "U" => MoveLetter::U(SignFilter::Any),
            "U+" => MoveLetter::U(SignFilter::Only(P)),
            "U-" => MoveLetter::U(SignFilter::Only(N)),
            "R2b" => MoveLetter::R2Bar(SignFilter::Any),
            "R2b+" => MoveLetter::R2Bar(SignFilter::Only(P)),
            "R2b-" => MoveLetter::R2Bar(SignFilter::Only(N)),
            "M2b" => MoveLetter::M2Bar(SignFilter::Any),
            "M2b+" => MoveLetter::M2Bar(SignFilter::Only(P)),
            "M2b-" => MoveLetter::M2Bar(SignFilter::Only(N)),
            _ => {
                return Err(MoveParseError {
                    token: token.to_string(),
                })
            }
        };
        Ok(letter)
    }
}

/// Which genome alphabet evolution draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AlphabetMode {
    /// The eight generic families; length-increasing moves excluded.
    Generic,
    /// Every signed variant; length-increasing moves still excluded.
    Signed,
    /// Generic plus the length-increasing `R2b` and `M2b`.
    Extended,
}

/// The eight generic families used by default.
pub const GENERIC_ALPHABET: [MoveLetter; 8] = [
    MoveLetter::R2(SignFilter::Any),
    MoveLetter::R3(TripleFilter::Any),
    MoveLetter::M1(SignFilter::Any),
    MoveLetter::M1Bar(SignFilter::Any),
    MoveLetter::M2(SignFilter::Any),
    MoveLetter::Swap(PairFilter::Any),
    MoveLetter::SwapBar(PairFilter::Any),
    MoveLetter::U(SignFilter::Any),
];

/// All 22 signed variants of the length-preserving and length-reducing moves.
pub const SIGNED_ALPHABET: [MoveLetter; 22] = {
    use Direction::*;
    use Sign::{Negative as N, Positive as P};
    [
        MoveLetter::R2(SignFilter::Only(P)),
        MoveLetter::R2(SignFilter::Only(N)),
        MoveLetter::R3(TripleFilter::Exact(Forward, P)),
        MoveLetter::R3(TripleFilter::Exact(Forward, N)),
        MoveLetter::R3(TripleFilter::Exact(Reverse, P)),
        MoveLetter::R3(TripleFilter::Exact(Reverse, N)),
        MoveLetter::M1(SignFilter::Only(P)),
        MoveLetter::M1(SignFilter::Only(N)),
        MoveLetter::M1Bar(SignFilter::Only(P)),
        MoveLetter::M1Bar(SignFilter::Only(N)),
        MoveLetter::M2(SignFilter::Only(P)),
        MoveLetter::M2(SignFilter::Only(N)),
        MoveLetter::Swap(PairFilter::Exact(P, P)),
        MoveLetter::Swap(PairFilter::Exact(P, N)),
        MoveLetter::Swap(PairFilter::Exact(N, P)),
        MoveLetter::Swap(PairFilter::Exact(N, N)),
        MoveLetter::SwapBar(PairFilter::Exact(P, P)),
        MoveLetter::SwapBar(PairFilter::Exact(P, N)),
        MoveLetter::SwapBar(PairFilter::Exact(N, P)),
        MoveLetter::SwapBar(PairFilter::Exact(N, N)),
        MoveLetter::U(SignFilter::Only(P)),
        MoveLetter::U(SignFilter::Only(N)),
    ]
};

/// Generic families plus the two length-increasing moves.
pub const EXTENDED_ALPHABET: [MoveLetter; 10] = [
    MoveLetter::R2(SignFilter::Any),
    MoveLetter::R3(TripleFilter::Any),
    MoveLetter::M1(SignFilter::Any),
    MoveLetter::M1Bar(SignFilter::Any),
    MoveLetter::M2(SignFilter::Any),
    MoveLetter::Swap(PairFilter::Any),
    MoveLetter::SwapBar(PairFilter::Any),
    MoveLetter::U(SignFilter::Any),
    MoveLetter::R2Bar(SignFilter::Any),
    MoveLetter::M2Bar(SignFilter::Any),
];

pub fn alphabet(mode: AlphabetMode) -> &'static [MoveLetter] {
    match mode {
        AlphabetMode::Generic => &GENERIC_ALPHABET,
        AlphabetMode::Signed => &SIGNED_ALPHABET,
        AlphabetMode::Extended => &EXTENDED_ALPHABET,
    }
}

/// The resolved form of an applied move: which direction and signs the site
/// actually had. Renders with the same token grammar as signed letters
/// (`R2+`, `R3b-`, `S+-`, `U+`, ...).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    R2(Sign),
    R3(Direction, Sign),
    M1(Sign),
    M1Bar(Sign),
    M2(Sign),
    Swap(Sign, Sign),
    SwapBar(Sign, Sign),
    /// Sign of the letter before the flip.
    U(Sign),
    R2Bar(Sign),
    M2Bar(Sign),
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::R2(s) => write!(f, "R2{s}"),
            Variant::R3(Direction::Forward, s) => write!(f, "R3{s}"),
            Variant::R3(Direction::Reverse, s) => write!(f, "R3b{s}"),
            Variant::M1(s) => write!(f, "M1{s}"),
            Variant::M1Bar(s) => write!(f, "M1b{s}"),
            Variant::M2(s) => write!(f, "M2{s}"),
            Variant::Swap(a, b) => write!(f, "S{a}{b}"),
            Variant::SwapBar(a, b) => write!(f, "Sb{a}{b}"),
            Variant::U(s) => write!(f, "U{s}"),
            Variant::R2Bar(s) => write!(f, "R2b{s}"),
            Variant::M2Bar(s) => write!(f, "M2b{s}"),
        }
    }
}

/// How the exponent sum changes when a move with this variant is applied.
pub fn exponent_sum_delta(variant: &Variant) -> i64 {
    match variant {
        Variant::R2(_)
        | Variant::R3(_, _)
        | Variant::M1(_)
        | Variant::M1Bar(_)
        | Variant::Swap(_, _)
        | Variant::SwapBar(_, _)
        | Variant::R2Bar(_) => 0,
        // flipping a letter of sign s moves the sum by −2s
        Variant::U(s) => -2 * s.as_i64(),
        Variant::M2(s) => -s.as_i64(),
        Variant::M2Bar(s) => s.as_i64(),
    }
}

/// Letter positions matched by a move: `start` is 0-based, `len` is the
/// number of letters rewritten (0 for pure insertions).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Site {
    pub start: usize,
    pub len: usize,
}

impl fmt::Display for Site {
    /// 1-based start position, as printed in traces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.start + 1)
    }
}

/// Result of attempting one move on one word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ApplicationOutcome {
    Applied {
        variant: Variant,
        site: Site,
        result: BraidWord,
    },
    /// Preconditions unmet anywhere; the word is unchanged.
    Skipped,
}

impl ApplicationOutcome {
    pub fn is_applied(&self) -> bool {
        matches!(self, ApplicationOutcome::Applied { .. })
    }
}

/// Find the leftmost applicable site for `letter` on `word`, or `None`.
pub fn find_application(word: &BraidWord, letter: &MoveLetter) -> Option<(Variant, Site)> {
    let ls = word.letters();
    let n = ls.len();
    match *letter {
        MoveLetter::R2(filter) => (0..n.saturating_sub(1)).find_map(|p| {
            let (a, b) = (ls[p], ls[p + 1]);
            (a.index() == b.index() && a.sign() == b.sign().flipped() && filter.accepts(a.sign()))
                .then_some((Variant::R2(a.sign()), Site { start: p, len: 2 }))
        }),
        MoveLetter::R3(filter) => (0..n.saturating_sub(2)).find_map(|p| {
            let (a, b, c) = (ls[p], ls[p + 1], ls[p + 2]);
            if a.sign() != b.sign() || b.sign() != c.sign() || a.index() != c.index() {
                return None;
            }
            let direction = if b.index() == a.index() + 1 {
                Direction::Forward
            } else if a.index() == b.index() + 1 {
                Direction::Reverse
            } else {
                return None;
            };
            match filter {
                TripleFilter::Any => {}
                TripleFilter::Exact(d, s) => {
                    if d != direction || s != a.sign() {
                        return None;
                    }
                }
            }
            Some((Variant::R3(direction, a.sign()), Site { start: p, len: 3 }))
        }),
        MoveLetter::M1(filter) => {
            let first = ls.first()?;
            filter
                .accepts(first.sign())
                .then_some((Variant::M1(first.sign()), Site { start: 0, len: 1 }))
        }
        MoveLetter::M1Bar(filter) => {
            let last = ls.last()?;
            filter.accepts(last.sign()).then_some((
                Variant::M1Bar(last.sign()),
                Site {
                    start: n - 1,
                    len: 1,
                },
            ))
        }
        MoveLetter::M2(filter) => {
            if word.strands() < 2 {
                return None;
            }
            let top = word.strands() - 1;
            let mut hits = ls.iter().enumerate().filter(|(_, l)| l.index() == top);
            let (p, l) = hits.next()?;
            if hits.next().is_some() || !filter.accepts(l.sign()) {
                return None;
            }
            Some((Variant::M2(l.sign()), Site { start: p, len: 1 }))
        }
        MoveLetter::Swap(filter) => (0..n.saturating_sub(1)).find_map(|p| {
            swap_site(ls, p, filter).map(|(a, b)| (Variant::Swap(a, b), Site { start: p, len: 2 }))
        }),
        MoveLetter::SwapBar(filter) => (0..n.saturating_sub(1)).rev().find_map(|p| {
            swap_site(ls, p, filter)
                .map(|(a, b)| (Variant::SwapBar(a, b), Site { start: p, len: 2 }))
        }),
        MoveLetter::U(filter) => match filter {
            SignFilter::Any => {
                let first = ls.first()?;
                Some((Variant::U(first.sign()), Site { start: 0, len: 1 }))
            }
            SignFilter::Only(s) => ls
                .iter()
                .position(|l| l.sign() == s)
                .map(|p| (Variant::U(s), Site { start: p, len: 1 })),
        },
        MoveLetter::R2Bar(filter) => {
            // Inserting σ_1 σ_1⁻¹ needs strand 2 to exist, otherwise the
            // insertion would grow the closure by a split circle.
            if word.strands() < 2 {
                return None;
            }
            let sign = insertion_sign(filter);
            Some((Variant::R2Bar(sign), Site { start: n, len: 0 }))
        }
        MoveLetter::M2Bar(filter) => {
            let sign = insertion_sign(filter);
            Some((Variant::M2Bar(sign), Site { start: n, len: 0 }))
        }
    }
}

fn swap_site(ls: &[GeneratorLetter], p: usize, filter: PairFilter) -> Option<(Sign, Sign)> {
    let (a, b) = (ls[p], ls[p + 1]);
    let gap = a.index().abs_diff(b.index());
    (gap > 1 && filter.accepts(a.sign(), b.sign())).then_some((a.sign(), b.sign()))
}

fn insertion_sign(filter: SignFilter) -> Sign {
    match filter {
        SignFilter::Any | SignFilter::Only(Sign::Positive) => Sign::Positive,
        SignFilter::Only(Sign::Negative) => Sign::Negative,
    }
}

/// Apply `letter` to `word` at its leftmost applicable site, if any.
pub fn apply_move(word: &BraidWord, letter: &MoveLetter) -> ApplicationOutcome {
    let Some((variant, site)) = find_application(word, letter) else {
        return ApplicationOutcome::Skipped;
    };
    let ls = word.letters();
    let mut out: Vec<GeneratorLetter> = Vec::with_capacity(ls.len() + 2);
    match variant {
        Variant::R2(_) | Variant::M2(_) => {
            out.extend_from_slice(&ls[..site.start]);
            out.extend_from_slice(&ls[site.start + site.len..]);
        }
        Variant::R3(_, sign) => {
            out.extend_from_slice(&ls[..site.start]);
            let (a, b) = (ls[site.start], ls[site.start + 1]);
            out.push(GeneratorLetter::new(b.index(), sign));
            out.push(GeneratorLetter::new(a.index(), sign));
            out.push(GeneratorLetter::new(b.index(), sign));
            out.extend_from_slice(&ls[site.start + 3..]);
        }
        Variant::M1(_) => {
            out.extend_from_slice(&ls[1..]);
            out.push(ls[0]);
        }
        Variant::M1Bar(_) => {
            out.push(ls[ls.len() - 1]);
            out.extend_from_slice(&ls[..ls.len() - 1]);
        }
        Variant::Swap(_, _) | Variant::SwapBar(_, _) => {
            out.extend_from_slice(ls);
            out.swap(site.start, site.start + 1);
        }
        Variant::U(_) => {
            out.extend_from_slice(ls);
            out[site.start] = out[site.start].inverse();
        }
        Variant::R2Bar(sign) => {
            out.extend_from_slice(ls);
            out.push(GeneratorLetter::new(1, sign));
            out.push(GeneratorLetter::new(1, sign.flipped()));
        }
        Variant::M2Bar(sign) => {
            out.extend_from_slice(ls);
            out.push(GeneratorLetter::new(word.strands(), sign));
        }
    }
    ApplicationOutcome::Applied {
        variant,
        site,
        result: BraidWord::from_letters(out),
    }
}
