//! Parallel sweeps of [`verify_case`] over every `(n, k, i, u)` up to a rank.
//!
//! Cases are enumerated in a fixed order, evaluated independently on a
//! rayon pool and collected back in that order, so the report does not
//! depend on the number of workers.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::curve::{verify_case, VerificationReport};
use crate::error::{Error, Result};
use crate::grassmann::Grassmannian;
use crate::weyl::Permutation;
use crate::MAX_RANK;

/// Seed used by sampled sweeps when none is given.
pub const DEFAULT_SEED: u64 = 20_240_517;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepMode {
    Exhaustive,
    Sampled,
}

impl FromStr for SweepMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(SweepMode::Exhaustive),
            "sampled" => Ok(SweepMode::Sampled),
            _ => Err(Error::parse("sweep mode", s)),
        }
    }
}

impl fmt::Display for SweepMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepMode::Exhaustive => "exhaustive",
            SweepMode::Sampled => "sampled",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub n_max: usize,
    pub mode: SweepMode,
    pub sample_size: usize,
    pub seed: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
}

impl SweepConfig {
    pub fn exhaustive(n_max: usize) -> Self {
        SweepConfig {
            n_max,
            mode: SweepMode::Exhaustive,
            sample_size: 0,
            seed: DEFAULT_SEED,
            jobs: None,
        }
    }

    pub fn sampled(n_max: usize, sample_size: usize, seed: u64) -> Self {
        SweepConfig {
            mode: SweepMode::Sampled,
            sample_size,
            seed,
            ..SweepConfig::exhaustive(n_max)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CaseSpec {
    pub n: usize,
    pub k: usize,
    pub i: usize,
    pub u: Permutation,
}

/// Every case with `2 ≤ n ≤ n_max`, `1 ≤ k < n`, `0 ≤ i < n` and `u ∈ W^X`.
pub fn enumerate_cases(n_max: usize) -> Result<Vec<CaseSpec>> {
    if !(2..=MAX_RANK).contains(&n_max) {
        return Err(Error::RankOutOfRange(n_max));
    }
    let mut out = Vec::new();
    for n in 2..=n_max {
        for k in 1..n {
            let quotient = Grassmannian::new(k, n)?.quotient();
            for i in 0..n {
                out.extend(quotient.iter().map(|u| CaseSpec {
                    n,
                    k,
                    i,
                    u: u.clone(),
                }));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankSummary {
    pub n: usize,
    pub total: usize,
    pub passed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub n_max: usize,
    pub mode: SweepMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
    /// False when the sweep was cancelled before every case ran.
    pub complete: bool,
    pub by_rank: Vec<RankSummary>,
    pub cases: Vec<VerificationReport>,
}

impl SweepReport {
    pub fn counterexamples(&self) -> impl Iterator<Item = &VerificationReport> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

pub fn sweep(config: &SweepConfig) -> Result<SweepReport> {
    sweep_with_cancel(config, &AtomicBool::new(false))
}

/// Like [`sweep`], but cases not yet started when `cancel` is raised are
/// skipped; the report then covers completed cases only.
pub fn sweep_with_cancel(config: &SweepConfig, cancel: &AtomicBool) -> Result<SweepReport> {
    let mut cases = enumerate_cases(config.n_max)?;
    if config.mode == SweepMode::Sampled {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let amount = config.sample_size.min(cases.len());
        let mut picked = rand::seq::index::sample(&mut rng, cases.len(), amount).into_vec();
        picked.sort_unstable();
        cases = picked.into_iter().map(|idx| cases[idx].clone()).collect();
    }

    let run = || -> Vec<Option<Result<VerificationReport>>> {
        cases
            .par_iter()
            .map(|c| {
                if cancel.load(Ordering::Relaxed) {
                    return None;
                }
                Some(Grassmannian::new(c.k, c.n).and_then(|gr| verify_case(gr, c.i, &c.u)))
            })
            .collect()
    };
    let results = match config.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::WorkerPool(e.to_string()))?
            .install(run),
        None => run(),
    };

    let complete = results.iter().all(Option::is_some);
    let reports: Vec<VerificationReport> = results.into_iter().flatten().collect::<Result<_>>()?;
    let passed = reports.iter().filter(|r| r.pass).count();
    let by_rank = (2..=config.n_max)
        .map(|n| {
            let of_rank = reports.iter().filter(|r| r.n == n);
            RankSummary {
                n,
                total: of_rank.clone().count(),
                passed: of_rank.filter(|r| r.pass).count(),
            }
        })
        .collect();
    let sampled = config.mode == SweepMode::Sampled;
    Ok(SweepReport {
        n_max: config.n_max,
        mode: config.mode,
        sample_size: sampled.then_some(config.sample_size),
        seed: sampled.then_some(config.seed),
        total: reports.len(),
        passed,
        failed: reports.len() - passed,
        pass: passed == reports.len(),
        complete,
        by_rank,
        cases: reports,
    })
}
