//! Witness words, the Δ-based lower bound on almost-palindromic length, and
//! the budgeted upper-bound search.
//!
//! A product of `c` m-almost-palindromes has Δ at most `(24m + 18)c`, while
//! the witnesses `a b a^2 b^2 ... a^n b^n` have Δ = n - 1. So the number of
//! factors needed for the witnesses grows without bound.

mod search;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use search::{
    ap_generators, ap_length_upper, certificate_is_sound, ApGenerators, BudgetLimit, WidthAnswer,
    WidthBudget, WidthKind, WidthSearch,
};

use crate::almost_pal::ApError;
use crate::delta::{delta_reduced, product_ap_bound};
use crate::words::{reduce, ReducedWord, Syllable, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("witness index must be at least 1")]
    ZeroWitness,
    #[error(transparent)]
    Enumeration(#[from] ApError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// `a^1 b^1 a^2 b^2 ... a^n b^n` on generators 0 and 1.
pub fn witness(n: u64) -> Result<ReducedWord, OracleError> {
    if n == 0 {
        return Err(OracleError::ZeroWitness);
    }
    let exponent = |i: u64| i64::try_from(i).map_err(|_| WordError::ExponentOverflow);
    let mut syllables = Vec::with_capacity(2 * n as usize);
    for i in 1..=n {
        let k = exponent(i)?;
        syllables.push(Syllable::new(0, k)?);
        syllables.push(Syllable::new(1, k)?);
    }
    Ok(ReducedWord::from_syllables(syllables)?)
}

/// Δ of the n-th witness; always `n - 1`.
pub fn witness_delta(n: u64) -> Result<i64, OracleError> {
    let d = delta_reduced(&witness(n)?);
    assert_eq!(d as u64, n - 1, "witness {n} has the wrong Δ");
    Ok(d)
}

/// Least factor count compatible with Δ: 0 for the identity, otherwise the
/// larger of 1 and `ceil(Δ / (24m + 18))`.
pub fn lower_bound_reduced(g: &ReducedWord, m: usize) -> u64 {
    if g.is_identity() {
        return 0;
    }
    let d = delta_reduced(g);
    let per_factor = product_ap_bound(m, 1);
    let from_delta = if d > 0 {
        (d as u64).div_ceil(per_factor as u64)
    } else {
        0
    };
    from_delta.max(1)
}

pub fn lower_bound_c(g: &Word, m: usize) -> u64 {
    lower_bound_reduced(&reduce(g), m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Found,
    NotFoundWithinBudget,
    NotSearched,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: u64,
    pub delta: i64,
    pub lower_bound_c: u64,
    pub upper_c: Option<usize>,
    pub status: RowStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremTable {
    pub m: usize,
    pub budget: Option<WidthBudget>,
    pub rows: Vec<TableRow>,
}

impl TheoremTable {
    /// Header `n,delta,lower_bound_c,upper_c,status`; `upper_c` is empty
    /// when no decomposition was found.
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> csv::Result<()> {
        let mut writer = csv::Writer::from_writer(out);
        for row in &self.rows {
            writer.serialize(row)?;
        }
        writer.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("in-memory csv");
        String::from_utf8(buf).expect("csv output is utf-8")
    }
}

/// Rows `n = 1..=n_max` of (Δ(w_n), lower bound, budgeted upper bound).
/// Without a budget only the lower-bound side is computed.
pub fn theorem_table(
    m: usize,
    n_max: u64,
    budget: Option<WidthBudget>,
) -> Result<TheoremTable, OracleError> {
    let mut search = budget.map(|b| WidthSearch::new(m, 2, b)).transpose()?;
    let mut rows = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let w = witness(n)?;
        let delta = witness_delta(n)?;
        let lower_bound_c = lower_bound_reduced(&w, m);
        let (upper_c, status) = match search.as_mut() {
            None => (None, RowStatus::NotSearched),
            Some(s) => match s.search(&w).found_c() {
                Some(c) => (Some(c), RowStatus::Found),
                None => (None, RowStatus::NotFoundWithinBudget),
            },
        };
        rows.push(TableRow {
            n,
            delta,
            lower_bound_c,
            upper_c,
            status,
        });
    }
    Ok(TheoremTable { m, budget, rows })
}
