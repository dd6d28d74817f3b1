//! Timing harness for the deciders.
//!
//! Each `(method, n)` batch generates `trials` instances from the template
//! spec, seeding trial `k` at size `n` with `seed ^ (n << 32) ^ k`, so every
//! method sees the same instances. One untimed warm-up call precedes each
//! batch. Only the call under test is timed, on the monotonic clock; graph
//! construction is excluded for the connectivity methods.

use std::fmt;
use std::io;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::connectivity::{connected_fast, connected_paper};
use crate::decision::{decide, Answer};
use crate::generate::{generate, GenerateError, GeneratorSpec};
use crate::graph::build_pseudodigraph;
use crate::instance::Instance;
use crate::oracle::{
    oracle_backtrack_capped, oracle_permutations_capped, DEFAULT_BACKTRACK_CAP,
    DEFAULT_PERMUTATION_CAP,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BenchMethod {
    Decide,
    OraclePerms,
    OracleBacktrack,
    ConnectedPaper,
    ConnectedFast,
    Build,
}

impl BenchMethod {
    pub const ALL: [BenchMethod; 6] = [
        BenchMethod::Decide,
        BenchMethod::OraclePerms,
        BenchMethod::OracleBacktrack,
        BenchMethod::ConnectedPaper,
        BenchMethod::ConnectedFast,
        BenchMethod::Build,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BenchMethod::Decide => "decide",
            BenchMethod::OraclePerms => "oracle_perms",
            BenchMethod::OracleBacktrack => "oracle_backtrack",
            BenchMethod::ConnectedPaper => "connected_paper",
            BenchMethod::ConnectedFast => "connected_fast",
            BenchMethod::Build => "build",
        }
    }
}

impl fmt::Display for BenchMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BenchMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown bench method `{s}`"))
    }
}

/// One CSV row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub method: BenchMethod,
    pub n: usize,
    pub alphabet_size: usize,
    pub trial: usize,
    pub elapsed_ns: u64,
    pub answer: Answer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BenchOptions {
    pub parallel_trials: bool,
    pub permutation_cap: usize,
    pub backtrack_cap: usize,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            parallel_trials: false,
            permutation_cap: DEFAULT_PERMUTATION_CAP,
            backtrack_cap: DEFAULT_BACKTRACK_CAP,
        }
    }
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("{method} is capped at n={cap}, requested n={n}")]
    CapExceeded {
        method: BenchMethod,
        n: usize,
        cap: usize,
    },
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error("failed to write CSV: {0}")]
    Csv(#[from] csv::Error),
}

pub fn trial_seed(base: u64, n: usize, trial: usize) -> u64 {
    base ^ ((n as u64) << 32) ^ trial as u64
}

/// Runs `method` once on `u`, returning the elapsed nanoseconds and answer.
pub fn time_method(method: BenchMethod, u: &Instance, options: &BenchOptions) -> (u64, Answer) {
    let clock = |f: &mut dyn FnMut() -> bool| {
        let start = Instant::now();
        let yes = f();
        (start.elapsed().as_nanos() as u64, Answer::from(yes))
    };
    match method {
        BenchMethod::Decide => clock(&mut || decide(u).answer.is_yes()),
        BenchMethod::OraclePerms => clock(&mut || {
            oracle_permutations_capped(u, options.permutation_cap)
                .expect("cap checked before the run")
        }),
        BenchMethod::OracleBacktrack => clock(&mut || {
            oracle_backtrack_capped(u, options.backtrack_cap).expect("cap checked before the run")
        }),
        BenchMethod::ConnectedPaper => {
            let edges = build_pseudodigraph(u).edge_pairs();
            clock(&mut || connected_paper(&edges))
        }
        BenchMethod::ConnectedFast => {
            let edges = build_pseudodigraph(u).edge_pairs();
            clock(&mut || connected_fast(&edges))
        }
        BenchMethod::Build => {
            let (elapsed, _) =
                clock(&mut || build_pseudodigraph(u).total_multiplicity() == u.len());
            (elapsed, decide(u).answer)
        }
    }
}

/// Times every method at every size. Cap violations are reported before
/// anything runs.
pub fn bench(
    methods: &[BenchMethod],
    sizes: &[usize],
    trials: usize,
    template: &GeneratorSpec,
    options: &BenchOptions,
) -> Result<Vec<BenchRecord>, BenchError> {
    for &method in methods {
        let cap = match method {
            BenchMethod::OraclePerms => options.permutation_cap,
            BenchMethod::OracleBacktrack => options.backtrack_cap,
            _ => continue,
        };
        if let Some(&n) = sizes.iter().find(|&&n| n > cap) {
            return Err(BenchError::CapExceeded { method, n, cap });
        }
    }

    let mut records = Vec::new();
    for &n in sizes {
        let instances: Vec<Instance> = (0..trials)
            .map(|k| {
                generate(&GeneratorSpec {
                    n,
                    seed: trial_seed(template.seed, n, k),
                    ..*template
                })
            })
            .collect::<Result<_, _>>()?;
        for &method in methods {
            if let Some(first) = instances.first() {
                time_method(method, first, options);
            }
            let run = |(trial, u): (usize, &Instance)| {
                let (elapsed_ns, answer) = time_method(method, u, options);
                BenchRecord {
                    method,
                    n,
                    alphabet_size: template.alphabet_size,
                    trial,
                    elapsed_ns,
                    answer,
                }
            };
            if options.parallel_trials {
                records.par_extend(instances.par_iter().enumerate().map(run));
            } else {
                records.extend(instances.iter().enumerate().map(run));
            }
        }
    }
    Ok(records)
}

/// Writes records as CSV with header
/// `method,n,alphabet_size,trial,elapsed_ns,answer`.
pub fn write_csv<W: io::Write>(records: &[BenchRecord], out: W) -> Result<(), BenchError> {
    let mut writer = csv::Writer::from_writer(out);
    for r in records {
        writer.serialize(r)?;
    }
    writer.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// Median elapsed time per size for one method, sizes ascending.
pub fn median_by_size(records: &[BenchRecord], method: BenchMethod) -> Vec<(usize, u64)> {
    let mut sizes: Vec<usize> = records
        .iter()
        .filter(|r| r.method == method)
        .map(|r| r.n)
        .collect();
    sizes.sort_unstable();
    sizes.dedup();
    sizes
        .into_iter()
        .map(|n| {
            let mut times: Vec<u64> = records
                .iter()
                .filter(|r| r.method == method && r.n == n)
                .map(|r| r.elapsed_ns)
                .collect();
            times.sort_unstable();
            (n, times[times.len() / 2])
        })
        .collect()
}

/// Ratios between successive medians.
pub fn growth_ratios(medians: &[(usize, u64)]) -> Vec<f64> {
    medians
        .windows(2)
        .map(|w| w[1].1 as f64 / w[0].1.max(1) as f64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_schema() {
        let template = GeneratorSpec::new(0, 2, 1, 3).seed(7);
        let records = bench(
            &[BenchMethod::Decide, BenchMethod::Build],
            &[4, 8],
            3,
            &template,
            &BenchOptions::default(),
        )
        .unwrap();
        assert_eq!(records.len(), 2 * 2 * 3);
        let mut buf = Vec::new();
        write_csv(&records, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next(),
            Some("method,n,alphabet_size,trial,elapsed_ns,answer")
        );
        let row = lines.next().unwrap();
        assert!(row.starts_with("decide,4,3,0,"), "{row}");
        assert!(row.ends_with(",yes") || row.ends_with(",no"));
    }

    #[test]
    fn caps_checked_up_front() {
        let template = GeneratorSpec::new(0, 2, 1, 3);
        let err = bench(
            &[BenchMethod::Decide, BenchMethod::OraclePerms],
            &[5, 11],
            1,
            &template,
            &BenchOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(
            err,
            BenchError::CapExceeded {
                method: BenchMethod::OraclePerms,
                n: 11,
                cap: 10
            }
        ));
    }

    #[test]
    fn answers_agree_across_methods_and_parallelism() {
        let template = GeneratorSpec::new(0, 2, 1, 2).seed(3);
        let sequential = bench(
            &BenchMethod::ALL,
            &[5, 6],
            4,
            &template,
            &BenchOptions::default(),
        )
        .unwrap();
        let parallel = bench(
            &BenchMethod::ALL,
            &[5, 6],
            4,
            &template,
            &BenchOptions {
                parallel_trials: true,
                ..Default::default()
            },
        )
        .unwrap();
        let strip = |rs: &[BenchRecord]| -> Vec<_> {
            rs.iter()
                .map(|r| (r.method, r.n, r.trial, r.answer))
                .collect()
        };
        assert_eq!(strip(&sequential), strip(&parallel));
        for n in [5, 6] {
            for trial in 0..4 {
                let answers: Vec<Answer> = sequential
                    .iter()
                    .filter(|r| r.n == n && r.trial == trial)
                    .filter(|r| {
                        !matches!(
                            r.method,
                            BenchMethod::ConnectedFast | BenchMethod::ConnectedPaper
                        )
                    })
                    .map(|r| r.answer)
                    .collect();
                assert!(
                    answers.windows(2).all(|w| w[0] == w[1]),
                    "n={n} trial={trial}"
                );
            }
        }
    }

    #[test]
    fn medians_and_ratios() {
        let rec = |n, t| BenchRecord {
            method: BenchMethod::Decide,
            n,
            alphabet_size: 2,
            trial: 0,
            elapsed_ns: t,
            answer: Answer::Yes,
        };
        let records = vec![
            rec(10, 5),
            rec(10, 1),
            rec(10, 3),
            rec(100, 40),
            rec(100, 20),
            rec(100, 30),
        ];
        let medians = median_by_size(&records, BenchMethod::Decide);
        assert_eq!(medians, vec![(10, 3), (100, 30)]);
        assert_eq!(growth_ratios(&medians), vec![10.0]);
    }

    #[test]
    fn method_names_roundtrip() {
        for m in BenchMethod::ALL {
            assert_eq!(m.name().parse::<BenchMethod>(), Ok(m));
        }
        assert!("fast".parse::<BenchMethod>().is_err());
    }
}
