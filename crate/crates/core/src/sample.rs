//! Random words for the randomized sweeps.
//!
//! Reduced words come from a uniform non-backtracking walk, which is uniform
//! over reduced words of a given length. Unreduced words are built as
//! `u x x^-1 v` from random reduced pieces so that cancellation always occurs.

use rand::Rng;

use crate::words::{Letter, Word};

/// Uniform reduced word of exactly `len` letters over `rank >= 1` generators.
pub fn random_reduced_word<R: Rng + ?Sized>(rank: u32, len: usize, rng: &mut R) -> Word {
    let alphabet = 2 * rank as usize;
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    for _ in 0..len {
        let next = match letters.last() {
            None => Letter::from_index(rng.random_range(0..alphabet)),
            Some(prev) => {
                // skip over the one letter that would cancel
                let forbidden = prev.inverse().index();
                let mut i = rng.random_range(0..alphabet - 1);
                if i >= forbidden {
                    i += 1;
                }
                Letter::from_index(i)
            }
        };
        letters.push(next);
    }
    Word::from_letters(letters)
}

/// Word of exactly `len` letters of the form `u x x^-1 v`, with `x` nonempty
/// whenever `len >= 2`.
pub fn random_unreduced_word<R: Rng + ?Sized>(rank: u32, len: usize, rng: &mut R) -> Word {
    let half = len / 2;
    let infix = if half == 0 {
        0
    } else {
        rng.random_range(1..=half)
    };
    let rest = len - 2 * infix;
    let left = rng.random_range(0..=rest);
    let u = random_reduced_word(rank, left, rng);
    let x = random_reduced_word(rank, infix, rng);
    let v = random_reduced_word(rank, rest - left, rng);
    let mut out = u;
    out.extend(x.letters().iter().copied());
    out.extend(x.invert().into_letters());
    out.extend(v.into_letters());
    out
}

/// Length uniform in `0..=max_len`; reduced or unreduced with equal odds.
pub fn random_mixed_word<R: Rng + ?Sized>(rank: u32, max_len: usize, rng: &mut R) -> Word {
    let len = rng.random_range(0..=max_len);
    if rng.random_bool(0.5) {
        random_reduced_word(rank, len, rng)
    } else {
        random_unreduced_word(rank, len, rng)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::reduce;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashMap;

    #[test]
    fn reduced_walk_is_reduced_and_exact_length() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for len in 0..40 {
            let w = random_reduced_word(2, len, &mut rng);
            assert_eq!(w.len(), len);
            assert_eq!(reduce(&w).expand(), w);
        }
    }

    #[test]
    fn reduced_walk_covers_length_two_uniformly() {
        // 4 * 3 = 12 reduced words of length 2 over rank 2
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut counts: HashMap<Word, u32> = HashMap::new();
        for _ in 0..12_000 {
            *counts
                .entry(random_reduced_word(2, 2, &mut rng))
                .or_default() += 1;
        }
        assert_eq!(counts.len(), 12);
        assert!(counts.values().all(|&c| (800..1200).contains(&c)));
    }

    #[test]
    fn unreduced_words_cancel() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for len in 2..40 {
            let w = random_unreduced_word(2, len, &mut rng);
            assert_eq!(w.len(), len);
            assert!(reduce(&w).len() < len as u64);
        }
        assert_eq!(random_unreduced_word(2, 1, &mut rng).len(), 1);
    }
}
