//! Independent correctness oracle for the move calculus.
//!
//! The knot-type moves all claim to preserve the closure's isotopy class.
//! This module checks that computationally: it evaluates the reduced Burau
//! representation of a braid word over exact integer Laurent polynomials and
//! extracts the Alexander polynomial of the closure. Non-crossing-change
//! moves must leave the polynomial (and the knot determinant |Δ(−1)|)
//! unchanged; a crossing change may alter it, but a completed unknotting must
//! end at Δ = 1.
//!
//! Coefficient arithmetic is exact and overflow is detected, never wrapped.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::braid::{BraidWord, GeneratorLetter, Sign};
use crate::moves::{
    apply_move, exponent_sum_delta, ApplicationOutcome, MoveFamily, MoveLetter, Variant,
    GENERIC_ALPHABET,
};

/// An integer Laurent polynomial in one variable `t`, stored as a dense
/// coefficient run starting at `lowest`. The zero polynomial stores nothing;
/// otherwise the first and last coefficients are nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: Vec<i64>,
    lowest: i64,
}

fn add_checked(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("Laurent coefficient overflow")
}

fn mul_checked(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("Laurent coefficient overflow")
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: Vec::new(),
            lowest: 0,
        }
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// `c · t^exp`.
    pub fn monomial(c: i64, exp: i64) -> Self {
        if c == 0 {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: vec![c],
            lowest: exp,
        }
    }

    /// Coefficients for t^lowest, t^{lowest+1}, ...; trailing and leading
    /// zeros are trimmed.
    pub fn from_coeffs(lowest: i64, coeffs: Vec<i64>) -> Self {
        let mut p = LaurentPoly { coeffs, lowest };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let leading_zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if leading_zeros > 0 {
            self.coeffs.drain(..leading_zeros);
            self.lowest += leading_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.lowest = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1] && self.lowest == 0
    }

    /// Exponent of the lowest stored term (0 for the zero polynomial).
    pub fn lowest_exponent(&self) -> i64 {
        self.lowest
    }

    /// Exponent of the highest stored term.
    pub fn highest_exponent(&self) -> i64 {
        self.lowest + self.coeffs.len() as i64 - 1
    }

    pub fn coefficient(&self, exp: i64) -> i64 {
        let idx = exp - self.lowest;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            0
        } else {
            self.coeffs[idx as usize]
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lowest = self.lowest.min(other.lowest);
        let highest = self.highest_exponent().max(other.highest_exponent());
        let mut coeffs = vec![0i64; (highest - lowest + 1) as usize];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lowest - lowest) as usize + i] = c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.lowest - lowest) as usize + i];
            *slot = add_checked(*slot, c);
        }
        LaurentPoly::from_coeffs(lowest, coeffs)
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|&c| c.checked_neg().expect("overflow"))
                .collect(),
            lowest: self.lowest,
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = add_checked(coeffs[i + j], mul_checked(a, b));
            }
        }
        LaurentPoly::from_coeffs(self.lowest + other.lowest, coeffs)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let mut rem = self.coeffs.clone();
        let div = &divisor.coeffs;
        if rem.len() < div.len() {
            return None;
        }
        let quot_len = rem.len() - div.len() + 1;
        let mut quot = vec![0i64; quot_len];
        let div_lead = *div.last().expect("nonzero divisor");
        // long division from the top; exactness requires every leading
        // coefficient to divide cleanly and a zero remainder
        for k in (0..quot_len).rev() {
            let lead = rem[k + div.len() - 1];
            if lead == 0 {
                continue;
            }
            if lead % div_lead != 0 {
                return None;
            }
            let q = lead / div_lead;
            quot[k] = q;
            for (j, &d) in div.iter().enumerate() {
                rem[k + j] = rem[k + j]
                    .checked_sub(mul_checked(q, d))
                    .expect("Laurent coefficient overflow");
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        Some(LaurentPoly::from_coeffs(self.lowest - divisor.lowest, quot))
    }

    /// Units ±t^k are quotiented out: shift the lowest exponent to 0 and make
    /// the leading coefficient positive, so equal knot polynomials compare
    /// structurally equal.
    pub fn normalized(&self) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let mut p = LaurentPoly {
            coeffs: self.coeffs.clone(),
            lowest: 0,
        };
        if *p.coeffs.last().expect("nonzero") < 0 {
            p = p.neg();
        }
        p
    }

    /// Evaluate at an integer point. Only defined once the polynomial has no
    /// negative exponents (normalize first).
    pub fn evaluate(&self, x: i64) -> i64 {
        assert!(
            self.lowest >= 0,
            "evaluate needs nonnegative exponents; normalize first"
        );
        let mut acc = 0i64;
        for &c in self.coeffs.iter().rev() {
            acc = add_checked(mul_checked(acc, x), c);
        }
        for _ in 0..self.lowest {
            acc = mul_checked(acc, x);
        }
        acc
    }
}

impl fmt::Display for LaurentPoly {
    /// Renders as `c0 + c1*t + c2*t^2 ...`, eliding unit coefficients and
    /// zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let exp = self.lowest + i as i64;
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.unsigned_abs();
            match exp {
                0 => write!(f, "{mag}")?,
                1 if mag == 1 => write!(f, "t")?,
                1 => write!(f, "{mag}*t")?,
                _ if mag == 1 => write!(f, "t^{exp}")?,
                _ => write!(f, "{mag}*t^{exp}")?,
            }
        }
        Ok(())
    }
}

/// A square matrix of Laurent polynomials; dimension is one less than the
/// strand count, and the 0×0 matrix has determinant 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut m = PolyMatrix {
            dim,
            entries: vec![LaurentPoly::zero(); dim * dim],
        };
        for i in 0..dim {
            *m.get_mut(i, i) = LaurentPoly::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.dim + col]
    }

    fn get_mut(&mut self, row: usize, col: usize) -> &mut LaurentPoly {
        &mut self.entries[row * self.dim + col]
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, other.dim, "matrix dimensions must agree");
        let mut out = PolyMatrix {
            dim: self.dim,
            entries: vec![LaurentPoly::zero(); self.dim * self.dim],
        };
        for r in 0..self.dim {
            for c in 0..self.dim {
                let mut acc = LaurentPoly::zero();
                for k in 0..self.dim {
                    acc = acc.add(&self.get(r, k).mul(other.get(k, c)));
                }
                *out.get_mut(r, c) = acc;
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == PolyMatrix::identity(self.dim)
    }

    /// Exact determinant by fraction-free elimination; the interior divisions
    /// are guaranteed exact, so a failed division signals an engine bug.
    pub fn determinant(&self) -> LaurentPoly {
        if self.dim == 0 {
            return LaurentPoly::one();
        }
        let mut m = self.clone();
        let n = self.dim;
        let mut sign = 1i64;
        let mut prev_pivot = LaurentPoly::one();
        for k in 0..n - 1 {
            let pivot_row = (k..n).find(|&r| !m.get(r, k).is_zero());
            let Some(pr) = pivot_row else {
                return LaurentPoly::zero();
            };
            if pr != k {
                for c in 0..n {
                    let a = m.get(k, c).clone();
                    let b = m.get(pr, c).clone();
                    *m.get_mut(k, c) = b;
                    *m.get_mut(pr, c) = a;
                }
                sign = -sign;
            }
            let pivot = m.get(k, k).clone();
            for r in k + 1..n {
                for c in k + 1..n {
                    let num = m.get(r, c).mul(&pivot).sub(&m.get(r, k).mul(m.get(k, c)));
                    *m.get_mut(r, c) = num
                        .exact_div(&prev_pivot)
                        .expect("fraction-free elimination divides exactly");
                }
                *m.get_mut(r, k) = LaurentPoly::zero();
            }
            prev_pivot = pivot;
        }
        let det = m.get(n - 1, n - 1).clone();
        if sign < 0 {
            det.neg()
        } else {
            det
        }
    }
}

/// Reduced Burau matrix of a single generator letter inside B_n.
fn burau_generator(strands: u32, letter: GeneratorLetter) -> PolyMatrix {
    let dim = (strands - 1) as usize;
    let i = letter.index() as usize; // 1-based; occupies column i−1
    debug_assert!(i <= dim, "letter index must fit the strand count");
    let mut m = PolyMatrix::identity(dim);
    let col = i - 1;
    match letter.sign() {
        Sign::Positive => {
            *m.get_mut(col, col) = LaurentPoly::monomial(-1, 1);
            if i >= 2 {
                *m.get_mut(col - 1, col) = LaurentPoly::monomial(1, 1);
            }
            if i < dim {
                *m.get_mut(col + 1, col) = LaurentPoly::one();
            }
        }
        Sign::Negative => {
            *m.get_mut(col, col) = LaurentPoly::monomial(-1, -1);
            if i >= 2 {
                *m.get_mut(col - 1, col) = LaurentPoly::one();
            }
            if i < dim {
                *m.get_mut(col + 1, col) = LaurentPoly::monomial(1, -1);
            }
        }
    }
    m
}

/// Product of the reduced Burau matrices of the word's letters, composed left
/// to right. The empty word yields the identity (a 0×0 matrix on 1 strand).
pub fn reduced_burau(word: &BraidWord) -> PolyMatrix {
    let dim = (word.strands() - 1) as usize;
    let mut acc = PolyMatrix::identity(dim);
    for &letter in word.letters() {
        acc = acc.mul(&burau_generator(word.strands(), letter));
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("closure has {components} components; the Alexander polynomial here is defined for knots only")]
    NotAKnot { components: usize },
}

/// Alexander polynomial of the closure of `word`, normalized so the lowest
/// exponent is 0 and the leading coefficient is positive. Requires a knot
/// (single-component closure).
pub fn alexander(word: &BraidWord) -> Result<LaurentPoly, VerifyError> {
    let components = word.component_count();
    if components != 1 {
        return Err(VerifyError::NotAKnot { components });
    }
    let n = word.strands();
    let dim = (n - 1) as usize;
    let burau = reduced_burau(word);
    let mut shifted = burau;
    for i in 0..dim {
        let e = shifted.get(i, i).sub(&LaurentPoly::one());
        *shifted.get_mut(i, i) = e;
    }
    let det = shifted.determinant();
    // det(burau − I) = ±t^k · (1 + t + ... + t^{n−1}) · Δ(t); the division is
    // exact for every knot word, so failure means the representation is wrong
    let cyclotomic_sum = LaurentPoly::from_coeffs(0, vec![1; n as usize]);
    let quotient = det
        .exact_div(&cyclotomic_sum)
        .expect("Burau determinant divides by 1 + t + ... + t^(n-1)");
    Ok(quotient.normalized())
}

/// The knot determinant |Δ(−1)|.
pub fn determinant(word: &BraidWord) -> Result<u64, VerifyError> {
    let delta = alexander(word)?;
    Ok(delta.evaluate(-1).unsigned_abs())
}

/// One violated invariant found by the soundness sweep.
#[derive(Debug, Clone)]
pub enum Violation {
    ComponentCount {
        word: BraidWord,
        variant: Variant,
        before: usize,
        after: usize,
    },
    ExponentDelta {
        word: BraidWord,
        variant: Variant,
        expected: i64,
        actual: i64,
    },
    AlexanderChanged {
        word: BraidWord,
        variant: Variant,
        before: LaurentPoly,
        after: LaurentPoly,
    },
    DeterminantChanged {
        word: BraidWord,
        variant: Variant,
        before: u64,
        after: u64,
    },
    BurauNotMultiplicative {
        word: BraidWord,
        split: usize,
    },
    BurauInverse {
        index: u32,
        sign: Sign,
        strands: u32,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ComponentCount { word, variant, before, after } => write!(
                f,
                "{variant} on `{word}` changed component count: {before} -> {after}"
            ),
            Violation::ExponentDelta { word, variant, expected, actual } => write!(
                f,
                "{variant} on `{word}` moved the exponent sum by {actual}, expected {expected}"
            ),
            Violation::AlexanderChanged { word, variant, before, after } => write!(
                f,
                "{variant} on `{word}` changed the Alexander polynomial: {before} -> {after}"
            ),
            Violation::DeterminantChanged { word, variant, before, after } => write!(
                f,
                "{variant} on `{word}` changed the determinant: {before} -> {after}"
            ),
            Violation::BurauNotMultiplicative { word, split } => write!(
                f,
                "Burau of `{word}` is not the product of its split at {split}"
            ),
            Violation::BurauInverse { index, sign, strands } => write!(
                f,
                "Burau matrices of generator {index}{sign} and its inverse on {strands} strands do not cancel"
            ),
        }
    }
}

/// Check every invariant that applying `letter` to `word` must respect,
/// given that it applied and produced `after` with the given `variant`.
pub fn check_applied_move(
    word: &BraidWord,
    after: &BraidWord,
    variant: &Variant,
) -> Vec<Violation> {
    let mut violations = Vec::new();
    let before_components = word.component_count();
    let after_components = after.component_count();
    if before_components != after_components {
        violations.push(Violation::ComponentCount {
            word: word.clone(),
            variant: *variant,
            before: before_components,
            after: after_components,
        });
    }
    let actual_delta = after.exponent_sum() - word.exponent_sum();
    let expected_delta = exponent_sum_delta(variant);
    if actual_delta != expected_delta {
        violations.push(Violation::ExponentDelta {
            word: word.clone(),
            variant: *variant,
            expected: expected_delta,
            actual: actual_delta,
        });
    }
    let is_crossing_change = matches!(variant, Variant::U(_));
    if !is_crossing_change && before_components == 1 && after_components == 1 {
        let before_poly = alexander(word).expect("knot word");
        let after_poly = alexander(after).expect("knot word");
        if before_poly != after_poly {
            violations.push(Violation::AlexanderChanged {
                word: word.clone(),
                variant: *variant,
                before: before_poly.clone(),
                after: after_poly.clone(),
            });
        }
        let before_det = before_poly.evaluate(-1).unsigned_abs();
        let after_det = after_poly.evaluate(-1).unsigned_abs();
        if before_det != after_det {
            violations.push(Violation::DeterminantChanged {
                word: word.clone(),
                variant: *variant,
                before: before_det,
                after: after_det,
            });
        }
    }
    violations
}

/// Summary of a soundness sweep.
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub words_checked: usize,
    pub moves_checked: usize,
    pub violations: Vec<Violation>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Sweep the move calculus over `words` plus `trials` randomly derived words
/// each (random move walks, which keep single-component closures
/// single-component), checking component counts, exponent deltas, Alexander
/// and determinant invariance, and Burau structure.
pub fn soundness_sweep(words: &[BraidWord], trials: usize, seed: u64) -> SweepReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SweepReport {
        words_checked: 0,
        moves_checked: 0,
        violations: Vec::new(),
    };

    for base in words {
        check_one_word(base, &mut report);
        let mut current = base.clone();
        for _ in 0..trials {
            // a short random walk from the previous derived word
            for _ in 0..rng.random_range(1..=4usize) {
                let letter = GENERIC_ALPHABET[rng.random_range(0..GENERIC_ALPHABET.len())];
                if let ApplicationOutcome::Applied { result, .. } = apply_move(&current, &letter) {
                    current = result;
                }
            }
            if current.is_trivial() {
                current = base.clone();
            }
            check_one_word(&current, &mut report);
        }
    }
    report
}

fn check_one_word(word: &BraidWord, report: &mut SweepReport) {
    report.words_checked += 1;
    for letter in GENERIC_ALPHABET {
        if let ApplicationOutcome::Applied {
            variant, result, ..
        } = apply_move(word, &letter)
        {
            report.moves_checked += 1;
            report
                .violations
                .extend(check_applied_move(word, &result, &variant));
        }
    }
    // Burau multiplicativity over splits that keep both halves at the full
    // strand count; generator/inverse cancellation for every generator.
    let whole = reduced_burau(word);
    for split in 1..word.len() {
        let left = BraidWord::from_letters(word.letters()[..split].to_vec());
        let right = BraidWord::from_letters(word.letters()[split..].to_vec());
        if left.strands() != word.strands() || right.strands() != word.strands() {
            continue;
        }
        if reduced_burau(&left).mul(&reduced_burau(&right)) != whole {
            report.violations.push(Violation::BurauNotMultiplicative {
                word: word.clone(),
                split,
            });
        }
    }
    for index in 1..word.strands() {
        for sign in [Sign::Positive, Sign::Negative] {
            let letter = GeneratorLetter::new(index, sign);
            let pair = BraidWord::from_letters(vec![letter, letter.inverse()]);
            if !reduced_burau(&pair).is_identity() {
                report.violations.push(Violation::BurauInverse {
                    index,
                    sign,
                    strands: word.strands(),
                });
            }
        }
    }
}

/// True when `letter`'s family is a crossing change; the only family allowed
/// to change the Alexander polynomial.
pub fn changes_knot_type(letter: &MoveLetter) -> bool {
    letter.family() == MoveFamily::U
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(text: &str) -> BraidWord {
        text.parse().unwrap()
    }

    fn poly(lowest: i64, coeffs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(lowest, coeffs.to_vec())
    }

    #[test]
    fn poly_arithmetic_basics() {
        let a = poly(0, &[1, 2]); // 1 + 2t
        let b = poly(-1, &[3, 0, 1]); // 3t⁻¹ + t
        assert_eq!(a.add(&b), poly(-1, &[3, 1, 3]));
        assert_eq!(a.sub(&a), LaurentPoly::zero());
        assert_eq!(a.mul(&b), poly(-1, &[3, 6, 1, 2]));
        assert_eq!(poly(0, &[0, 0]), LaurentPoly::zero());
    }

    #[test]
    fn exact_division_succeeds_and_fails_correctly() {
        let product = poly(0, &[1, 1, 1]).mul(&poly(0, &[-1, 3, -1]));
        assert_eq!(
            product.exact_div(&poly(0, &[1, 1, 1])),
            Some(poly(0, &[-1, 3, -1]))
        );
        assert_eq!(poly(0, &[1, 1]).exact_div(&poly(0, &[1, 1, 1])), None);
        assert_eq!(poly(0, &[1, 0, 1]).exact_div(&poly(0, &[1, 1])), None);
    }

    #[test]
    fn normalization_fixes_units() {
        assert_eq!(poly(-2, &[-1, 3, -1]).normalized(), poly(0, &[1, -3, 1]));
        assert_eq!(poly(3, &[2, -5]).normalized(), poly(0, &[-2, 5]));
        assert_eq!(LaurentPoly::zero().normalized(), LaurentPoly::zero());
    }

    #[test]
    fn display_renders_readably() {
        assert_eq!(poly(0, &[1, -3, 1]).to_string(), "1 - 3*t + t^2");
        assert_eq!(poly(0, &[1, -1, 1]).to_string(), "1 - t + t^2");
        assert_eq!(LaurentPoly::one().to_string(), "1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(poly(-1, &[2]).to_string(), "2*t^-1");
    }

    #[test]
    fn burau_of_sigma1_in_b2_is_minus_t() {
        let m = reduced_burau(&word("1"));
        assert_eq!(m.dim(), 1);
        assert_eq!(*m.get(0, 0), LaurentPoly::monomial(-1, 1));
    }

    #[test]
    fn trivial_word_gives_the_empty_matrix() {
        let m = reduced_burau(&BraidWord::trivial());
        assert_eq!(m.dim(), 0);
        assert_eq!(m.determinant(), LaurentPoly::one());
    }

    #[test]
    fn generator_times_inverse_is_the_identity() {
        for strands in 2..=6u32 {
            for index in 1..strands {
                for sign in [Sign::Positive, Sign::Negative] {
                    let l = GeneratorLetter::new(index, sign);
                    let m = burau_generator(strands, l).mul(&burau_generator(strands, l.inverse()));
                    assert!(
                        m.is_identity(),
                        "index {index} sign {sign} on {strands} strands"
                    );
                }
            }
        }
    }

    #[test]
    fn burau_respects_the_braid_relations() {
        // σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1}
        assert_eq!(reduced_burau(&word("1 2 1")), reduced_burau(&word("2 1 2")));
        // σ_1 σ_3 = σ_3 σ_1
        assert_eq!(reduced_burau(&word("1 3")), reduced_burau(&word("3 1")));
    }

    #[test]
    fn word_concatenated_with_free_inverse_gives_identity() {
        let w = word("1 -2 1");
        let mut letters = w.letters().to_vec();
        letters.extend(w.letters().iter().rev().map(|l| l.inverse()));
        let m = reduced_burau(&BraidWord::from_letters(letters));
        assert!(m.is_identity());
    }

    #[test]
    fn alexander_of_the_unknot_is_one() {
        assert_eq!(
            alexander(&BraidWord::trivial()).unwrap(),
            LaurentPoly::one()
        );
        assert_eq!(alexander(&word("1")).unwrap(), LaurentPoly::one());
        assert_eq!(determinant(&BraidWord::trivial()).unwrap(), 1);
    }

    #[test]
    fn alexander_of_the_trefoil() {
        let delta = alexander(&word("1 1 1")).unwrap();
        assert_eq!(delta, poly(0, &[1, -1, 1]));
        assert_eq!(determinant(&word("1 1 1")).unwrap(), 3);
    }

    #[test]
    fn alexander_of_the_figure_eight() {
        let delta = alexander(&word("1 -2 1 -2")).unwrap();
        assert_eq!(delta, poly(0, &[1, -3, 1]));
        assert_eq!(determinant(&word("1 -2 1 -2")).unwrap(), 5);
    }

    #[test]
    fn links_are_rejected() {
        assert_eq!(
            alexander(&word("1 1")),
            Err(VerifyError::NotAKnot { components: 2 })
        );
        assert_eq!(
            determinant(&word("1 3")),
            Err(VerifyError::NotAKnot { components: 2 })
        );
    }

    #[test]
    fn mirror_knots_share_the_polynomial() {
        let right = alexander(&word("1 1 1")).unwrap();
        let left = alexander(&word("-1 -1 -1")).unwrap();
        assert_eq!(right, left);
    }

    #[test]
    fn sweep_on_small_knots_is_clean() {
        let words = vec![word("1 1 1"), word("1 -2 1 -2")];
        let report = soundness_sweep(&words, 25, 7);
        assert!(report.passed(), "violations: {:?}", report.violations);
        assert!(report.moves_checked > 0);
    }

    #[test]
    fn a_sign_broken_triple_rewrite_is_caught() {
        // correct rewrite of (-2 -1 -2) is (-1 -2 -1); flipping the signs as
        // well produces a different knot, and the checker must notice
        let before = word("1 -2 -1 -2");
        let broken = word("1 1 2 1");
        let violations = check_applied_move(
            &before,
            &broken,
            &Variant::R3(crate::moves::Direction::Reverse, Sign::Negative),
        );
        assert!(
            violations.iter().any(|v| matches!(
                v,
                Violation::DeterminantChanged { .. } | Violation::AlexanderChanged { .. }
            )),
            "broken rewrite must change an invariant: {violations:?}"
        );
    }
}
