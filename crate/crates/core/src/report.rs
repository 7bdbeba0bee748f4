//! Experiment reports and the seeded, chunked trial runner behind every
//! randomized sweep.

use std::collections::BTreeMap;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::words::Word;

/// Trials per independently seeded chunk. Chunk `i` draws from
/// `seed + i`, so results do not depend on the thread count.
pub const TRIALS_PER_CHUNK: u64 = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub parameters: BTreeMap<String, String>,
    pub trials: u64,
    pub observed_max: i64,
    pub bound: i64,
    pub violations: u64,
    /// `None` for exhaustive runs.
    pub seed: Option<u64>,
    /// Observed value -> number of samples.
    pub histogram: BTreeMap<i64, u64>,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    experiment: &'a str,
    parameters: String,
    trials: u64,
    observed_max: i64,
    bound: i64,
    violations: u64,
    seed: Option<u64>,
}

impl ExperimentReport {
    pub(crate) fn new(experiment: &str, parameters: &[(&str, String)], bound: i64) -> Self {
        ExperimentReport {
            experiment: experiment.to_string(),
            parameters: parameters
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            trials: 0,
            observed_max: 0,
            bound,
            violations: 0,
            seed: None,
            histogram: BTreeMap::new(),
        }
    }

    pub(crate) fn absorb(&mut self, tally: Tally) {
        self.trials = tally.count;
        self.observed_max = tally.max.unwrap_or(0);
        self.histogram = tally.histogram;
    }

    /// Parameters as `key=value` pairs joined by `;`.
    pub fn parameter_string(&self) -> String {
        self.parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Writes a header plus one row per report.
    pub fn write_csv<W: std::io::Write>(reports: &[ExperimentReport], out: W) -> csv::Result<()> {
        let mut writer = csv::Writer::from_writer(out);
        for r in reports {
            writer.serialize(CsvRow {
                experiment: &r.experiment,
                parameters: r.parameter_string(),
                trials: r.trials,
                observed_max: r.observed_max,
                bound: r.bound,
                violations: r.violations,
                seed: r.seed,
            })?;
        }
        writer.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        Self::write_csv(std::slice::from_ref(self), &mut buf).expect("in-memory csv");
        String::from_utf8(buf).expect("csv output is utf-8")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for ExperimentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}]: trials={} observed_max={} bound={} violations={}",
            self.experiment,
            self.parameter_string(),
            self.trials,
            self.observed_max,
            self.bound,
            self.violations
        )?;
        if let Some(seed) = self.seed {
            write!(f, " seed={seed}")?;
        }
        Ok(())
    }
}

/// A sample that broke a bound. Sweeps stop at the first one.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct BoundViolation {
    pub check: String,
    pub observed: i64,
    pub bound: i64,
    pub factors: Vec<Word>,
}

impl fmt::Display for BoundViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: observed {} exceeds bound {} on factors [",
            self.check, self.observed, self.bound
        )?;
        for (i, w) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("]")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub(crate) struct Tally {
    pub count: u64,
    pub max: Option<i64>,
    pub histogram: BTreeMap<i64, u64>,
}

impl Tally {
    pub fn record(&mut self, value: i64) {
        self.count += 1;
        self.max = Some(self.max.map_or(value, |m| m.max(value)));
        *self.histogram.entry(value).or_default() += 1;
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.count += other.count;
        self.max = match (self.max, other.max) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        for (k, v) in other.histogram {
            *self.histogram.entry(k).or_default() += v;
        }
        self
    }
}

/// Runs `trials` calls of `trial` split into seeded chunks, in parallel.
/// On failure the violation from the lowest-numbered chunk is returned, so
/// the outcome is the same for every schedule.
pub(crate) fn run_chunked<F>(trials: u64, seed: u64, trial: F) -> Result<Tally, BoundViolation>
where
    F: Fn(&mut ChaCha8Rng) -> Result<i64, BoundViolation> + Sync,
{
    let chunks = trials.div_ceil(TRIALS_PER_CHUNK);
    let results: Vec<Result<Tally, BoundViolation>> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(chunk));
            let n = TRIALS_PER_CHUNK.min(trials - chunk * TRIALS_PER_CHUNK);
            let mut tally = Tally::default();
            for _ in 0..n {
                tally.record(trial(&mut rng)?);
            }
            Ok(tally)
        })
        .collect();
    results
        .into_iter()
        .try_fold(Tally::default(), |acc, r| r.map(|t| acc.merge(t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn chunked_runner_is_schedule_independent() {
        let run = || run_chunked(10_000, 5, |rng| Ok(rng.random_range(-3..10))).unwrap();
        let a = run();
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(run);
        assert_eq!(a, single);
        assert_eq!(a.count, 10_000);
        assert_eq!(a.histogram.values().sum::<u64>(), 10_000);
        assert_eq!(a.max, Some(9));
    }

    #[test]
    fn first_violation_wins() {
        let err = run_chunked(10_000, 0, |rng| {
            let v: i64 = rng.random_range(0..1000);
            if v == 999 {
                Err(BoundViolation {
                    check: "t".into(),
                    observed: v,
                    bound: 998,
                    factors: vec![],
                })
            } else {
                Ok(v)
            }
        });
        assert!(err.is_err());
    }

    #[test]
    fn csv_has_the_documented_header() {
        let mut r = ExperimentReport::new("demo", &[("n", "2".into()), ("rank", "2".into())], 12);
        r.seed = Some(0);
        r.trials = 3;
        let csv = r.to_csv();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next(),
            Some("experiment,parameters,trials,observed_max,bound,violations,seed")
        );
        assert_eq!(lines.next(), Some("demo,n=2;rank=2,3,0,12,0,0"));
        let back: ExperimentReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
