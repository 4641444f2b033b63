//! Instrumented benchmark trials: clone, sort, validate, time.
//!
//! Every run's output is checked against a reference sort of the same input
//! (which covers both sortedness and multiset equality); a run that fails
//! the check aborts the whole benchmark rather than report a timing for a
//! wrong answer. The timed section is just the sort call — cloning,
//! validation and inversion counting happen off the clock.

use std::fmt;
use std::time::Instant;

use anyhow::{bail, ensure, Result};

use huskysort::analysis::count_inversions;
use huskysort::coder::HuskyCoder;
use huskysort::pipeline::{self, HuskySortConfig};
use huskysort::single;
use huskysort::stats::SortStats;

/// The sorts the harness can race against each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    /// Full pipeline, introsort key phase.
    HuskyIntro,
    /// Full pipeline, stable merge key phase.
    HuskyMerge,
    /// Plain dual-pivot quicksort on the elements (no keys).
    DualPivot,
    /// Stable natural merge sort on the elements — the "system sort"
    /// stand-in and the usual normalization baseline.
    AdaptiveMerge,
    /// Insertion sort on the elements. Quadratic; only sensible at small n.
    Insertion,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::HuskyIntro,
        Algorithm::HuskyMerge,
        Algorithm::DualPivot,
        Algorithm::AdaptiveMerge,
        Algorithm::Insertion,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Algorithm::HuskyIntro => "husky_intro",
            Algorithm::HuskyMerge => "husky_merge",
            Algorithm::DualPivot => "dual_pivot",
            Algorithm::AdaptiveMerge => "adaptive_merge",
            Algorithm::Insertion => "insertion",
        }
    }

    pub fn parse(s: &str) -> Option<Algorithm> {
        Algorithm::ALL.into_iter().find(|a| a.id() == s)
    }

    /// Whether this algorithm uses husky codes (and therefore has a
    /// meaningful residual-inversion measurement).
    pub fn is_husky(self) -> bool {
        matches!(self, Algorithm::HuskyIntro | Algorithm::HuskyMerge)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Repetition counts plus the pipeline configuration handed to the husky
/// algorithms.
#[derive(Debug, Clone)]
pub struct TrialConfig {
    /// Timed repetitions (≥ 1); the headline number is their median.
    pub runs: usize,
    /// Untimed repetitions beforehand.
    pub warmups: usize,
    pub pipeline: HuskySortConfig,
}

impl Default for TrialConfig {
    fn default() -> Self {
        Self {
            runs: 5,
            warmups: 2,
            pipeline: HuskySortConfig::default(),
        }
    }
}

/// One (algorithm, input) measurement.
#[derive(Debug, Clone)]
pub struct TrialResult {
    pub median_ns: u64,
    pub mean_ns: u64,
    /// Counters from the final timed run (they are identical across runs —
    /// the input is re-cloned each time).
    pub stats: SortStats,
    pub cleanup_ran: bool,
    /// Payload inversions left after the key phase alone (husky algorithms
    /// only; 0 for plain comparison sorts, which have no key phase).
    pub residual_inversions: u64,
}

fn sort_once<T: Ord>(
    algorithm: Algorithm,
    v: &mut [T],
    coder: &dyn HuskyCoder<T>,
    pipeline_cfg: &HuskySortConfig,
) -> (SortStats, bool) {
    match algorithm {
        Algorithm::HuskyIntro => {
            let outcome = pipeline::husky_sort(v, coder, pipeline_cfg);
            (outcome.stats, outcome.cleanup_ran)
        }
        Algorithm::HuskyMerge => {
            let outcome = pipeline::husky_sort_stable(v, coder, pipeline_cfg);
            (outcome.stats, outcome.cleanup_ran)
        }
        Algorithm::DualPivot => {
            let mut stats = SortStats::new();
            single::dual_pivot_quicksort(v, &mut stats);
            (stats, false)
        }
        Algorithm::AdaptiveMerge => {
            let mut stats = SortStats::new();
            single::adaptive_merge_sort(v, &mut stats);
            (stats, false)
        }
        Algorithm::Insertion => {
            let mut stats = SortStats::new();
            single::insertion_sort(v, &mut stats);
            (stats, false)
        }
    }
}

/// Runs `warmups` untimed and `runs` timed repetitions of `algorithm` over
/// clones of `input`, validating every output.
pub fn run_trial<T: Ord + Clone>(
    algorithm: Algorithm,
    input: &[T],
    coder: &dyn HuskyCoder<T>,
    cfg: &TrialConfig,
) -> Result<TrialResult> {
    ensure!(cfg.runs >= 1, "need at least one timed run");
    let mut reference = input.to_vec();
    reference.sort();

    let validate = |v: &[T]| -> Result<()> {
        if let Some(i) = (0..v.len()).find(|&i| v[i] != reference[i]) {
            bail!(
                "{algorithm} produced a wrong order on n = {}: first divergence from the \
                 reference sort at index {i}",
                input.len()
            );
        }
        Ok(())
    };

    for _ in 0..cfg.warmups {
        let mut v = input.to_vec();
        sort_once(algorithm, &mut v, coder, &cfg.pipeline);
        validate(&v)?;
    }

    let mut nanos: Vec<u64> = Vec::with_capacity(cfg.runs);
    let mut stats = SortStats::new();
    let mut cleanup_ran = false;
    for _ in 0..cfg.runs {
        let mut v = input.to_vec();
        let start = Instant::now();
        let (run_stats, run_cleanup) = sort_once(algorithm, &mut v, coder, &cfg.pipeline);
        nanos.push(start.elapsed().as_nanos() as u64);
        validate(&v)?;
        stats = run_stats;
        cleanup_ran = run_cleanup;
    }

    let residual_inversions = if algorithm.is_husky() && !input.is_empty() {
        let mut v = input.to_vec();
        let mut key_stats = SortStats::new();
        if algorithm == Algorithm::HuskyMerge {
            pipeline::key_phase_stable(&mut v, coder, &cfg.pipeline, &mut key_stats);
        } else {
            pipeline::key_phase(&mut v, coder, &cfg.pipeline, &mut key_stats);
        }
        count_inversions(&v)
    } else {
        0
    };

    nanos.sort_unstable();
    let median_ns = if cfg.runs % 2 == 1 {
        nanos[cfg.runs / 2]
    } else {
        (nanos[cfg.runs / 2 - 1] + nanos[cfg.runs / 2]) / 2
    };
    let mean_ns = (nanos.iter().map(|&x| x as u128).sum::<u128>() / cfg.runs as u128) as u64;
    Ok(TrialResult {
        median_ns,
        mean_ns,
        stats,
        cleanup_ran,
        residual_inversions,
    })
}
