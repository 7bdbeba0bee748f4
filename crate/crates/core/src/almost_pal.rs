//! Palindromes and m-almost-palindromes.
//!
//! A word is an m-almost-palindrome when it is within Hamming distance `m` of
//! some palindrome of the same length. That holds exactly when it is within
//! distance `2m` of its own reversal, which is the test used here.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::words::{Letter, Word};

/// Largest `(2 * rank)^len` that [`enumerate_aps`] will walk by default.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApError {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("length {len} exceeds the configured max_len {max_len}")]
    LengthOverBudget { len: usize, max_len: usize },
    #[error("(2*{rank})^{len} words exceed the enumeration cap {cap}")]
    CapExceeded { rank: u32, len: usize, cap: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ApConfig {
    rank: u32,
    m: usize,
    max_len: usize,
    cap: u64,
}

impl ApConfig {
    pub fn new(rank: u32, m: usize, max_len: usize) -> Result<Self, ApError> {
        if rank == 0 {
            return Err(ApError::ZeroRank);
        }
        Ok(ApConfig {
            rank,
            m,
            max_len,
            cap: DEFAULT_ENUMERATION_CAP,
        })
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    fn alphabet(&self) -> usize {
        2 * self.rank as usize
    }
}

/// Number of mismatched mirror pairs, i.e. `hamming(w, reverse(w)) / 2`.
fn mismatched_pairs(letters: &[Letter]) -> usize {
    let half = letters.len() / 2;
    letters[..half]
        .iter()
        .zip(letters.iter().rev())
        .filter(|(x, y)| x != y)
        .count()
}

pub fn is_palindrome(w: &Word) -> bool {
    mismatched_pairs(w.letters()) == 0
}

/// Least number of letter changes that turn `w` into a palindrome.
pub fn min_changes_to_palindrome(w: &Word) -> usize {
    mismatched_pairs(w.letters())
}

pub fn is_m_almost_palindrome(w: &Word, m: usize) -> bool {
    mismatched_pairs(w.letters()) <= m
}

/// Every m-almost-palindrome of exactly `len` letters over `cfg.rank()`
/// generators, in lexicographic order (`a < A < b < B < ...`).
pub fn enumerate_aps(cfg: &ApConfig, len: usize) -> Result<ApIter, ApError> {
    if len > cfg.max_len {
        return Err(ApError::LengthOverBudget {
            len,
            max_len: cfg.max_len,
        });
    }
    let exceeds = u32::try_from(len)
        .ok()
        .and_then(|e| (cfg.alphabet() as u64).checked_pow(e))
        .is_none_or(|total| total > cfg.cap);
    if exceeds {
        return Err(ApError::CapExceeded {
            rank: cfg.rank,
            len,
            cap: cfg.cap,
        });
    }
    Ok(ApIter {
        alphabet: cfg.alphabet(),
        m: cfg.m,
        digits: vec![0; len],
        pairs: vec![0; len],
        state: IterState::Start,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum IterState {
    Start,
    Running,
    Done,
}

/// Depth-first walk over letter positions that prunes a prefix as soon as
/// its mismatched mirror pairs exceed `m`.
#[derive(Debug, Clone)]
pub struct ApIter {
    alphabet: usize,
    m: usize,
    digits: Vec<usize>,
    // pairs[i]: mismatched mirror pairs among positions 0..=i
    pairs: Vec<usize>,
    state: IterState,
}

impl ApIter {
    fn settle(&mut self, mut i: usize) -> bool {
        let len = self.digits.len();
        loop {
            if self.digits[i] >= self.alphabet {
                if i == 0 {
                    return false;
                }
                i -= 1;
                self.digits[i] += 1;
                continue;
            }
            let mirror = len - 1 - i;
            let mut count = if i == 0 { 0 } else { self.pairs[i - 1] };
            if mirror < i && self.digits[mirror] != self.digits[i] {
                count += 1;
            }
            if count > self.m {
                self.digits[i] += 1;
                continue;
            }
            self.pairs[i] = count;
            if i + 1 == len {
                return true;
            }
            i += 1;
            self.digits[i] = 0;
        }
    }

    fn current(&self) -> Word {
        self.digits.iter().map(|&d| Letter::from_index(d)).collect()
    }
}

impl Iterator for ApIter {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let len = self.digits.len();
        let found = match self.state {
            IterState::Done => return None,
            IterState::Start if len == 0 => {
                self.state = IterState::Done;
                return Some(Word::empty());
            }
            IterState::Start => self.settle(0),
            IterState::Running => {
                self.digits[len - 1] += 1;
                self.settle(len - 1)
            }
        };
        if found {
            self.state = IterState::Running;
            Some(self.current())
        } else {
            self.state = IterState::Done;
            None
        }
    }
}

/// A random m-almost-palindrome of `len` letters: a uniform palindrome with
/// `j` distinct positions changed, `j` uniform in `0..=m` (capped at `len`).
pub fn random_ap<R: Rng + ?Sized>(cfg: &ApConfig, len: usize, rng: &mut R) -> Word {
    let alphabet = cfg.alphabet();
    let mut letters = vec![Letter::pos(0); len];
    for i in 0..len.div_ceil(2) {
        let l = Letter::from_index(rng.random_range(0..alphabet));
        letters[i] = l;
        letters[len - 1 - i] = l;
    }
    let changes = rng.random_range(0..=cfg.m).min(len);
    for pos in index::sample(rng, len, changes) {
        // shift by 1..alphabet to land on one of the other letters
        let shift = rng.random_range(1..alphabet);
        letters[pos] = Letter::from_index((letters[pos].index() + shift) % alphabet);
    }
    Word::from_letters(letters)
}

pub fn random_ap_seeded(cfg: &ApConfig, len: usize, seed: u64) -> Word {
    random_ap(cfg, len, &mut ChaCha8Rng::seed_from_u64(seed))
}
