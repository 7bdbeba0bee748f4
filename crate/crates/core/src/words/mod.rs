//! Words over an alphabet of generators and their formal inverses.
//!
//! [`Word`] is an element of the free monoid: a plain letter sequence with no
//! cancellation. [`ReducedWord`] is an element of the free group, stored as its
//! syllable sequence `t_1^{k_1} ... t_n^{k_n}` with `k_i != 0` and
//! `t_i != t_{i+1}`. The two types are never compared implicitly; go through
//! [`reduce`] or [`ReducedWord::expand`].

mod text;

use std::cmp::Ordering;
use std::fmt;
use std::iter;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use text::{generator_symbol, parse_reduced, parse_word, MAX_PARSED_LETTERS};

/// Index of a basis element. The text layer maps `a..=z` to `0..=25`.
pub type Generator = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("syllable exponent must be nonzero")]
    ZeroExponent,
    #[error("hamming distance needs equal lengths, got {left} and {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("empty input; write `1` for the empty word")]
    EmptyInput,
    #[error("unexpected symbol {symbol:?} at byte {position}")]
    UnexpectedSymbol { symbol: char, position: usize },
    #[error("missing or malformed exponent at byte {position}")]
    BadExponent { position: usize },
    #[error("exponent form requires a lowercase generator (byte {position})")]
    ExponentOnInverse { position: usize },
    #[error("word expands to more than {limit} letters")]
    TooLong { limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// One symbol of `B^{±1}`.
///
/// The derived order is the canonical letter order `a < A < b < B < ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    generator: Generator,
    sign: Sign,
}

impl Letter {
    pub const fn new(generator: Generator, sign: Sign) -> Self {
        Letter { generator, sign }
    }

    pub const fn pos(generator: Generator) -> Self {
        Letter::new(generator, Sign::Pos)
    }

    pub const fn neg(generator: Generator) -> Self {
        Letter::new(generator, Sign::Neg)
    }

    pub fn generator(self) -> Generator {
        self.generator
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn inverse(self) -> Self {
        Letter::new(self.generator, self.sign.flip())
    }

    /// Position in the canonical order: `2 * generator` for the generator,
    /// `2 * generator + 1` for its inverse.
    pub fn index(self) -> usize {
        2 * self.generator as usize + usize::from(self.sign == Sign::Neg)
    }

    pub fn from_index(index: usize) -> Self {
        let generator = Generator::try_from(index / 2).expect("letter index out of range");
        if index.is_multiple_of(2) {
            Letter::pos(generator)
        } else {
            Letter::neg(generator)
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "{}", text::generator_symbol(self.generator)),
            Sign::Neg => write!(f, "{}^-1", text::generator_symbol(self.generator)),
        }
    }
}

/// An element of the free monoid on `B^{±1}`. Not necessarily reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    /// The empty word.
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Monoid product: the letters of `self` followed by those of `other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Letters reversed with each sign flipped.
    pub fn invert(&self) -> Word {
        self.letters.iter().rev().map(|l| l.inverse()).collect()
    }

    /// Letters in reverse order, signs untouched.
    pub fn reverse(&self) -> Word {
        self.letters.iter().rev().copied().collect()
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<Generator> {
        self.letters.iter().map(|l| l.generator).max()
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word {
            letters: iter.into_iter().collect(),
        }
    }
}

impl Extend<Letter> for Word {
    fn extend<I: IntoIterator<Item = Letter>>(&mut self, iter: I) {
        self.letters.extend(iter);
    }
}

impl From<&ReducedWord> for Word {
    fn from(w: &ReducedWord) -> Self {
        w.expand()
    }
}

/// Concatenation of any number of words.
pub fn concat_all<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> Word {
    let mut out = Word::empty();
    for w in words {
        out.letters.extend_from_slice(&w.letters);
    }
    out
}

/// Number of positions at which two equal-length words differ.
pub fn hamming(u: &Word, v: &Word) -> Result<usize, WordError> {
    if u.len() != v.len() {
        return Err(WordError::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(u.letters
        .iter()
        .zip(&v.letters)
        .filter(|(x, y)| x != y)
        .count())
}

/// A maximal run `t^k` of a reduced word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Syllable {
    generator: Generator,
    exponent: i64,
}

impl Syllable {
    /// `exponent` must be nonzero; `i64::MIN` is rejected so that negation
    /// never overflows.
    pub fn new(generator: Generator, exponent: i64) -> Result<Self, WordError> {
        match exponent {
            0 => Err(WordError::ZeroExponent),
            i64::MIN => Err(WordError::ExponentOverflow),
            _ => Ok(Syllable {
                generator,
                exponent,
            }),
        }
    }

    pub fn generator(self) -> Generator {
        self.generator
    }

    pub fn exponent(self) -> i64 {
        self.exponent
    }

    /// Letter length `|k|`.
    pub fn magnitude(self) -> u64 {
        self.exponent.unsigned_abs()
    }

    pub fn letter(self) -> Letter {
        if self.exponent > 0 {
            Letter::pos(self.generator)
        } else {
            Letter::neg(self.generator)
        }
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> + Clone {
        iter::repeat_n(self.letter(), self.magnitude() as usize)
    }

    fn inverse(self) -> Self {
        Syllable {
            generator: self.generator,
            exponent: -self.exponent,
        }
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}^{}",
            text::generator_symbol(self.generator),
            self.exponent
        )
    }
}

/// An element of the free group, held in syllable (run-length) form.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    syllables: Vec<Syllable>,
}

impl ReducedWord {
    pub fn identity() -> Self {
        ReducedWord::default()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Builds the reduced form of a product of (not necessarily reduced)
    /// syllables, merging and cancelling as it goes.
    pub fn from_syllables<I>(syllables: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = Syllable>,
    {
        let mut stack = SyllableStack::default();
        for s in syllables {
            stack.push(s.generator, s.exponent)?;
        }
        Ok(stack.finish())
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn syllable_count(&self) -> usize {
        self.syllables.len()
    }

    /// Letter length.
    pub fn len(&self) -> u64 {
        self.syllables
            .iter()
            .fold(0u64, |acc, s| acc.saturating_add(s.magnitude()))
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + Clone + '_ {
        self.syllables.iter().flat_map(|s| s.letters())
    }

    pub fn expand(&self) -> Word {
        self.letters().collect()
    }

    /// Group product `r(uv)`.
    pub fn group_mul(&self, other: &ReducedWord) -> Result<ReducedWord, WordError> {
        let mut stack = SyllableStack {
            syllables: self.syllables.clone(),
        };
        stack.syllables.reserve(other.syllables.len());
        for s in &other.syllables {
            stack.push(s.generator, s.exponent)?;
        }
        Ok(stack.finish())
    }

    pub fn inverse(&self) -> ReducedWord {
        ReducedWord {
            syllables: self.syllables.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    /// Letter reversal. A reversed reduced word is still reduced.
    pub fn reverse(&self) -> ReducedWord {
        ReducedWord {
            syllables: self.syllables.iter().rev().copied().collect(),
        }
    }

    pub fn max_generator(&self) -> Option<Generator> {
        self.syllables.iter().map(|s| s.generator).max()
    }
}

/// Shortlex on letters: shorter words first, then the canonical letter order.
impl Ord for ReducedWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters().cmp(other.letters()))
    }
}

impl PartialOrd for ReducedWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Free reduction `r`: one left-to-right pass over a syllable stack.
pub fn reduce(w: &Word) -> ReducedWord {
    let mut stack = SyllableStack::default();
    for l in &w.letters {
        stack
            .push(l.generator, l.sign.value())
            .expect("partial letter counts fit in i64");
    }
    stack.finish()
}

/// `reduce(u ++ v)` computed on the group side.
pub fn group_mul(u: &ReducedWord, v: &ReducedWord) -> Result<ReducedWord, WordError> {
    u.group_mul(v)
}

/// Syllable decomposition of a reduced word.
pub fn syllables(w: &ReducedWord) -> &[Syllable] {
    w.syllables()
}

#[derive(Default)]
struct SyllableStack {
    syllables: Vec<Syllable>,
}

impl SyllableStack {
    fn push(&mut self, generator: Generator, exponent: i64) -> Result<(), WordError> {
        if exponent == 0 {
            return Ok(());
        }
        match self.syllables.last_mut() {
            Some(top) if top.generator == generator => {
                let sum = top
                    .exponent
                    .checked_add(exponent)
                    .filter(|&s| s != i64::MIN)
                    .ok_or(WordError::ExponentOverflow)?;
                if sum == 0 {
                    self.syllables.pop();
                } else {
                    top.exponent = sum;
                }
            }
            _ => self.syllables.push(Syllable::new(generator, exponent)?),
        }
        Ok(())
    }

    fn finish(self) -> ReducedWord {
        ReducedWord {
            syllables: self.syllables,
        }
    }
}

// Canonical text form on the wire (JSON reports, certificates).
impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_word(&s).map_err(serde::de::Error::custom)
    }
}

impl Serialize for ReducedWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ReducedWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_reduced(&s).map_err(serde::de::Error::custom)
    }
}
