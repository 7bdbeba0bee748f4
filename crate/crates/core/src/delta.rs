//! The syllable-growth map Δ and the three inequalities it satisfies.
//!
//! For a reduced word with syllables `t_1^{k_1} ... t_n^{k_n}`, Δ sums
//! `sign(|k_{i+1}| - |k_i|)` over consecutive syllables (0 for `n <= 1`).
//! Unreduced words are reduced first. The defect of a tuple of words is
//! `|Δ(w_1 ... w_n) - Σ Δ(w_i)|`, which never exceeds `6n`. Consequently
//! Δ is at most `24m + 12` on an m-almost-palindrome and at most
//! `(24m + 18)c` on a product of `c` of them.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::almost_pal::{enumerate_aps, random_ap, ApConfig, ApError};
use crate::report::{run_chunked, BoundViolation, ExperimentReport, Tally};
use crate::sample::random_mixed_word;
use crate::words::{concat_all, reduce, ReducedWord, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeltaError {
    #[error(transparent)]
    Violation(#[from] BoundViolation),
    #[error(transparent)]
    Enumeration(#[from] ApError),
}

pub fn sign(x: i64) -> i64 {
    x.signum()
}

/// Δ on a reduced word, read straight off its syllables.
pub fn delta_reduced(w: &ReducedWord) -> i64 {
    w.syllables()
        .windows(2)
        .map(|pair| pair[1].magnitude().cmp(&pair[0].magnitude()) as i64)
        .sum()
}

pub fn delta(w: &Word) -> i64 {
    delta_reduced(&reduce(w))
}

/// `6n`.
pub fn lemma_bound(factors: usize) -> u64 {
    6 * factors as u64
}

/// `24m + 12`.
pub fn single_ap_bound(m: usize) -> i64 {
    24 * m as i64 + 12
}

/// `(24m + 18) c`.
pub fn product_ap_bound(m: usize, c: usize) -> i64 {
    (24 * m as i64 + 18) * c as i64
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectSample {
    pub factors: Vec<Word>,
    pub delta_product: i64,
    pub delta_sum: i64,
    pub defect: u64,
    pub bound: u64,
}

impl DefectSample {
    pub fn holds(&self) -> bool {
        self.defect <= self.bound
    }
}

pub fn defect(factors: &[Word]) -> DefectSample {
    let delta_product = delta(&concat_all(factors));
    let delta_sum = factors.iter().map(delta).sum::<i64>();
    DefectSample {
        factors: factors.to_vec(),
        delta_product,
        delta_sum,
        defect: delta_product.abs_diff(delta_sum),
        bound: lemma_bound(factors.len()),
    }
}

/// Defect of `trials` random `n`-tuples of mixed reduced and unreduced words
/// of length at most `max_len`. The report's value is the defect.
pub fn check_lemma(
    rank: u32,
    n: usize,
    max_len: usize,
    trials: u64,
    seed: u64,
) -> Result<ExperimentReport, DeltaError> {
    let bound = lemma_bound(n);
    let tally = run_chunked(trials, seed, |rng| {
        let factors: Vec<Word> = (0..n)
            .map(|_| random_mixed_word(rank, max_len, rng))
            .collect();
        let sample = defect(&factors);
        if !sample.holds() {
            return Err(BoundViolation {
                check: "lemma".into(),
                observed: sample.defect as i64,
                bound: bound as i64,
                factors,
            });
        }
        Ok(sample.defect as i64)
    })?;
    let mut report = ExperimentReport::new(
        "lemma",
        &[
            ("rank", rank.to_string()),
            ("n", n.to_string()),
            ("max_len", max_len.to_string()),
        ],
        bound as i64,
    );
    report.seed = Some(seed);
    report.absorb(tally);
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    /// Every m-almost-palindrome of each length `0..=max_len`.
    Exhaustive,
    /// `trials` samples from [`random_ap`] with length uniform in `0..=max_len`.
    Random { trials: u64, seed: u64 },
}

fn single_violation(w: Word, observed: i64, bound: i64) -> BoundViolation {
    BoundViolation {
        check: "prop_single".into(),
        observed,
        bound,
        factors: vec![w],
    }
}

/// Δ over m-almost-palindromes against `24m + 12`.
pub fn check_prop_single(
    m: usize,
    rank: u32,
    max_len: usize,
    mode: SweepMode,
) -> Result<ExperimentReport, DeltaError> {
    let cfg = ApConfig::new(rank, m, max_len)?;
    let bound = single_ap_bound(m);
    let tally = match mode {
        SweepMode::Exhaustive => {
            // fail fast on the cap before spending time on shorter lengths
            enumerate_aps(&cfg, max_len)?;
            let per_len: Vec<Result<Tally, DeltaError>> = (0..=max_len)
                .into_par_iter()
                .map(|len| {
                    let mut tally = Tally::default();
                    for w in enumerate_aps(&cfg, len)? {
                        let d = delta(&w);
                        if d > bound {
                            return Err(single_violation(w, d, bound).into());
                        }
                        tally.record(d);
                    }
                    Ok(tally)
                })
                .collect();
            per_len
                .into_iter()
                .try_fold(Tally::default(), |acc, t| t.map(|t| acc.merge(t)))?
        }
        SweepMode::Random { trials, seed } => run_chunked(trials, seed, |rng| {
            let len = rng.random_range(0..=max_len);
            let w = random_ap(&cfg, len, rng);
            let d = delta(&w);
            if d > bound {
                return Err(single_violation(w, d, bound));
            }
            Ok(d)
        })?,
    };
    let mode_name = match mode {
        SweepMode::Exhaustive => "exhaustive",
        SweepMode::Random { .. } => "random",
    };
    let mut report = ExperimentReport::new(
        "prop_single",
        &[
            ("m", m.to_string()),
            ("rank", rank.to_string()),
            ("max_len", max_len.to_string()),
            ("mode", mode_name.to_string()),
        ],
        bound,
    );
    if let SweepMode::Random { seed, .. } = mode {
        report.seed = Some(seed);
    }
    report.absorb(tally);
    Ok(report)
}

/// Δ of products of `c` random m-almost-palindromes, each of length uniform
/// in `0..=len_per_factor`, against `(24m + 18)c`.
pub fn check_prop_product(
    m: usize,
    c: usize,
    rank: u32,
    len_per_factor: usize,
    trials: u64,
    seed: u64,
) -> Result<ExperimentReport, DeltaError> {
    let cfg = ApConfig::new(rank, m, len_per_factor)?;
    let bound = product_ap_bound(m, c);
    let tally = run_chunked(trials, seed, |rng| {
        let factors: Vec<Word> = (0..c)
            .map(|_| {
                let len = rng.random_range(0..=len_per_factor);
                random_ap(&cfg, len, rng)
            })
            .collect();
        let d = delta(&concat_all(&factors));
        if d > bound {
            return Err(BoundViolation {
                check: "prop_product".into(),
                observed: d,
                bound,
                factors,
            });
        }
        Ok(d)
    })?;
    let mut report = ExperimentReport::new(
        "prop_product",
        &[
            ("m", m.to_string()),
            ("c", c.to_string()),
            ("rank", rank.to_string()),
            ("len_per_factor", len_per_factor.to_string()),
        ],
        bound,
    );
    report.seed = Some(seed);
    report.absorb(tally);
    Ok(report)
}
