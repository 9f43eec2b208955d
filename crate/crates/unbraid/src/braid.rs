//! Braid words and their cheap structural invariants.
//!
//! A braid word is an ordered sequence of generator letters σ_i^{±1} together
//! with a strand count. Words are always kept *tight*: the strand count equals
//! one plus the largest generator index (or 1 for the empty word). Under this
//! convention the empty word on one strand is the unique trivial word, so
//! "is this the unknot word?" is an emptiness test.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Sign of a generator letter: `Positive` is σ_i, `Negative` is σ_i⁻¹.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    /// +1 or −1.
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Positive => write!(f, "+"),
            Sign::Negative => write!(f, "-"),
        }
    }
}

/// One letter of a braid word: the generator σ_i (index `i`, sign) or its
/// inverse. Indices are 1-based; σ_i crosses strand i+1 over strand i.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratorLetter {
    index: u32,
    sign: Sign,
}

impl GeneratorLetter {
    /// Panics if `index` is zero; generator indices start at 1.
    pub fn new(index: u32, sign: Sign) -> Self {
        assert!(index >= 1, "generator index must be at least 1");
        GeneratorLetter { index, sign }
    }

    /// Decode a signed integer: `k` is σ_{|k|} with the sign of `k`.
    /// Returns `None` for zero.
    pub fn from_signed(k: i32) -> Option<Self> {
        if k == 0 {
            return None;
        }
        let sign = if k > 0 {
            Sign::Positive
        } else {
            Sign::Negative
        };
        Some(GeneratorLetter {
            index: k.unsigned_abs(),
            sign,
        })
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn inverse(self) -> Self {
        GeneratorLetter {
            index: self.index,
            sign: self.sign.flipped(),
        }
    }

    /// The signed-integer encoding: ±index.
    pub fn as_signed(&self) -> i32 {
        let k = self.index as i32;
        match self.sign {
            Sign::Positive => k,
            Sign::Negative => -k,
        }
    }
}

impl fmt::Debug for GeneratorLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_signed())
    }
}

impl fmt::Display for GeneratorLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_signed())
    }
}

/// A braid word in tight form: `strands == 1 + max(index)`, or 1 when empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<GeneratorLetter>,
    strands: u32,
}

impl BraidWord {
    /// The empty word on one strand; its closure is the unknot.
    pub fn trivial() -> Self {
        BraidWord {
            letters: Vec::new(),
            strands: 1,
        }
    }

    /// Build a word from letters; the strand count is derived, so the result
    /// is tight by construction.
    pub fn from_letters<I>(letters: I) -> Self
    where
        I: IntoIterator<Item = GeneratorLetter>,
    {
        let letters: Vec<GeneratorLetter> = letters.into_iter().collect();
        let strands = letters.iter().map(|l| l.index() + 1).max().unwrap_or(1);
        BraidWord { letters, strands }
    }

    pub fn letters(&self) -> &[GeneratorLetter] {
        &self.letters
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    /// Number of letters, i.e. crossings in the closed-braid diagram.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True for the trivial (empty) word. Tight form makes this equivalent
    /// to `is_empty`.
    pub fn is_trivial(&self) -> bool {
        self.letters.is_empty()
    }

    /// Permutation induced on the strands by the word, as 1-based images:
    /// the strand starting at top position `i` ends at bottom position
    /// `perm[i-1]`. Each letter σ_i^{±1} contributes the transposition
    /// (i, i+1), composed left to right.
    pub fn closure_permutation(&self) -> Vec<u32> {
        let n = self.strands as usize;
        // occupant[p] = strand currently at 0-based position p
        let mut occupant: Vec<u32> = (1..=self.strands).collect();
        for letter in &self.letters {
            let i = letter.index() as usize;
            occupant.swap(i - 1, i);
        }
        let mut perm = vec![0u32; n];
        for (pos, &strand) in occupant.iter().enumerate() {
            perm[strand as usize - 1] = pos as u32 + 1;
        }
        perm
    }

    /// Number of circles in the closure: cycles of the strand permutation,
    /// counting fixed points.
    pub fn component_count(&self) -> usize {
        let perm = self.closure_permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = perm[cur] as usize - 1;
            }
        }
        cycles
    }

    /// Sum of the letter signs.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign().as_i64()).sum()
    }
}

// Debug shows the wire form plus the strand count; keeps test failures readable.
impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord(\"{}\" on {} strands)", self, self.strands)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, letter) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", letter.as_signed())?;
        }
        Ok(())
    }
}

/// Error from parsing the signed-integer word format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordParseError {
    #[error("token {position}: `{token}` is not a signed integer")]
    NotAnInteger { position: usize, token: String },
    #[error("token {position}: `{token}` denotes no generator (index must be nonzero)")]
    ZeroIndex { position: usize, token: String },
}

impl FromStr for BraidWord {
    type Err = WordParseError;

    /// Whitespace-separated nonzero integers; `k` denotes σ_{|k|} with the
    /// sign of `k`. Empty or blank input is the trivial word.
    fn from_str(text: &str) -> Result<Self, WordParseError> {
        let mut letters = Vec::new();
        for (i, token) in text.split_whitespace().enumerate() {
            let position = i + 1;
            let value: i32 = token.parse().map_err(|_| WordParseError::NotAnInteger {
                position,
                token: token.to_string(),
            })?;
            let letter = GeneratorLetter::from_signed(value).ok_or(WordParseError::ZeroIndex {
                position,
                token: token.to_string(),
            })?;
            letters.push(letter);
        }
        Ok(BraidWord::from_letters(letters))
    }
}
