//! Word combinatorics for almost-palindromic width in free groups.
//!
//! * [`words`]: free monoid and free group words, reduction, syllables.
//! * [`almost_pal`]: palindromes, m-almost-palindromes and their enumeration.
//! * [`delta`]: the syllable-growth map Δ, tuple defects and bound sweeps.
//! * [`oracle`]: witness words, lower and budgeted upper bounds on length.

pub mod almost_pal;
pub mod delta;
pub mod oracle;
pub mod report;
pub mod sample;
pub mod words;

pub use almost_pal::{
    enumerate_aps, is_m_almost_palindrome, is_palindrome, min_changes_to_palindrome, random_ap,
    random_ap_seeded, ApConfig, ApError,
};
pub use delta::{
    check_lemma, check_prop_product, check_prop_single, defect, delta, delta_reduced, sign,
    DefectSample, DeltaError, SweepMode,
};
pub use oracle::{
    ap_generators, ap_length_upper, lower_bound_c, theorem_table, witness, witness_delta,
    OracleError, TheoremTable, WidthAnswer, WidthBudget, WidthKind, WidthSearch,
};
pub use report::{BoundViolation, ExperimentReport};
pub use words::{
    group_mul, hamming, parse_reduced, parse_word, reduce, Letter, ReducedWord, Sign, Syllable,
    Word, WordError,
};
