//! Text form of words.
//!
//! Grammar: tokens separated by optional whitespace. A token is a lowercase
//! generator `[a-z]`, optionally followed by `^` and a signed decimal
//! exponent, or an uppercase `[A-Z]` standing for the inverse of its
//! lowercase letter (no exponent allowed). The literal `1` on its own is the
//! empty word. Output is always `g^k` syllable tokens joined by single spaces,
//! or `1`.

use std::fmt;
use std::str::FromStr;

use super::{Generator, Letter, ReducedWord, SyllableStack, Word, WordError};

/// Upper bound on the letter count [`parse_word`] will materialize.
pub const MAX_PARSED_LETTERS: usize = 1 << 26;

/// `a..=z` for generators 0..=25, `#k` beyond.
pub fn generator_symbol(generator: Generator) -> String {
    match u8::try_from(generator) {
        Ok(g) if g < 26 => char::from(b'a' + g).to_string(),
        _ => format!("#{generator}"),
    }
}

fn tokens(text: &str) -> Result<Vec<(Generator, i64)>, WordError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(WordError::EmptyInput);
    }
    if trimmed == "1" {
        return Ok(Vec::new());
    }

    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_lowercase() {
            let generator = Generator::from(c - b'a');
            i += 1;
            if bytes.get(i) == Some(&b'^') {
                let start = i;
                i += 1;
                let digits_from = i;
                if matches!(bytes.get(i), Some(b'+' | b'-')) {
                    i += 1;
                }
                let sign_len = i - digits_from;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i - digits_from == sign_len {
                    return Err(WordError::BadExponent { position: start });
                }
                let exponent = text[digits_from..i]
                    .parse::<i64>()
                    .ok()
                    .filter(|&k| k != i64::MIN)
                    .ok_or(WordError::ExponentOverflow)?;
                out.push((generator, exponent));
            } else {
                out.push((generator, 1));
            }
        } else if c.is_ascii_uppercase() {
            if bytes.get(i + 1) == Some(&b'^') {
                return Err(WordError::ExponentOnInverse { position: i });
            }
            out.push((Generator::from(c - b'A'), -1));
            i += 1;
        } else {
            let symbol = text[i..].chars().next().unwrap_or('\u{fffd}');
            return Err(WordError::UnexpectedSymbol {
                symbol,
                position: i,
            });
        }
    }
    Ok(out)
}

/// Parses text into a monoid word, expanding exponents into letters.
pub fn parse_word(text: &str) -> Result<Word, WordError> {
    let tokens = tokens(text)?;
    let total = tokens
        .iter()
        .try_fold(0usize, |acc, &(_, k)| {
            acc.checked_add(k.unsigned_abs() as usize)
        })
        .filter(|&n| n <= MAX_PARSED_LETTERS)
        .ok_or(WordError::TooLong {
            limit: MAX_PARSED_LETTERS,
        })?;
    let mut letters = Vec::with_capacity(total);
    for (generator, k) in tokens {
        let letter = if k > 0 {
            Letter::pos(generator)
        } else {
            Letter::neg(generator)
        };
        letters.extend(std::iter::repeat_n(letter, k.unsigned_abs() as usize));
    }
    Ok(Word::from_letters(letters))
}

/// Parses text straight into a reduced word without materializing letters,
/// so large exponents stay cheap.
pub fn parse_reduced(text: &str) -> Result<ReducedWord, WordError> {
    let mut stack = SyllableStack::default();
    for (generator, k) in tokens(text)? {
        stack.push(generator, k)?;
    }
    Ok(stack.finish())
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

impl FromStr for ReducedWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_reduced(s)
    }
}

/// Runs of identical letters as `g^k` tokens. On a reduced word the runs are
/// exactly its syllables.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        let letters = self.letters();
        let mut first = true;
        let mut i = 0;
        while i < letters.len() {
            let letter = letters[i];
            let run = letters[i..].iter().take_while(|&&l| l == letter).count();
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(
                f,
                "{}^{}",
                generator_symbol(letter.generator()),
                letter.sign().value() * run as i64
            )?;
            i += run;
        }
        Ok(())
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        for (i, s) in self.syllables().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
