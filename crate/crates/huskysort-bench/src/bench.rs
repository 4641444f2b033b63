//! The benchmark driver: expand a configuration into (algorithm, n) cells,
//! run each cell on shared seed-derived inputs, and assemble a report.

use anyhow::{ensure, Context, Result};

use huskysort::pipeline::{CleanupStrategy, HuskySortConfig, AUTO_CLEANUP_THRESHOLD};
use huskysort::rng::mix64;
use huskysort::HuskyCoder;

use crate::coders::{self, CoderSpec, Family};
use crate::corpus::{load_corpus_words, CorpusSpec};
use crate::gen;
use crate::report::{BenchmarkReport, ReportRow};
use crate::runner::{run_trial, Algorithm, TrialConfig};

/// Everything `compare_algorithms` needs.
#[derive(Debug, Clone)]
pub struct BenchmarkConfig {
    pub algorithms: Vec<Algorithm>,
    pub coder: CoderSpec,
    pub sizes: Vec<usize>,
    pub runs: usize,
    pub warmups: usize,
    pub seed: u64,
    pub cleanup: CleanupStrategy,
    pub threshold: usize,
    /// Whose median becomes the 1.00 reference at each n.
    pub normalize_to: Algorithm,
    /// Word source for the English-words family; other families ignore it.
    pub corpus: CorpusSpec,
}

impl Default for BenchmarkConfig {
    fn default() -> Self {
        Self {
            algorithms: vec![
                Algorithm::HuskyIntro,
                Algorithm::DualPivot,
                Algorithm::AdaptiveMerge,
            ],
            coder: CoderSpec::Ascii,
            sizes: vec![1_000, 4_000, 16_000],
            runs: 5,
            warmups: 2,
            seed: 0,
            cleanup: CleanupStrategy::Auto,
            threshold: AUTO_CLEANUP_THRESHOLD,
            normalize_to: Algorithm::DualPivot,
            corpus: CorpusSpec::new("data/leipzig-fixture.txt"),
        }
    }
}

impl BenchmarkConfig {
    pub fn validate(&self) -> Result<()> {
        ensure!(!self.algorithms.is_empty(), "no algorithms selected");
        ensure!(self.runs >= 1, "runs must be at least 1");
        ensure!(
            self.algorithms.contains(&self.normalize_to),
            "normalization baseline {} is not among the selected algorithms",
            self.normalize_to
        );
        Ok(())
    }

    fn trial_config(&self) -> TrialConfig {
        TrialConfig {
            runs: self.runs,
            warmups: self.warmups,
            pipeline: HuskySortConfig {
                cleanup: self.cleanup,
                auto_threshold: self.threshold,
                seed: self.seed,
                ..HuskySortConfig::default()
            },
        }
    }
}

/// Input seed for size `n`: depends on the top-level seed and the size only,
/// never on the algorithm, so every algorithm sees identical arrays.
pub fn derive_seed(seed: u64, n: usize) -> u64 {
    mix64(seed ^ mix64(n as u64))
}

/// Runs the whole benchmark grid described by `cfg`.
pub fn compare_algorithms(cfg: &BenchmarkConfig) -> Result<BenchmarkReport> {
    cfg.validate()?;
    let seed = cfg.seed;
    match cfg.coder.family() {
        Family::EnglishWords => {
            let corpus = load_corpus_words(&cfg.corpus);
            let coder = coders::string_coder(&cfg.coder, seed)?;
            drive(cfg, &*coder, |n, s| gen::english_words(&corpus, n, s))
        }
        Family::CjkWords => {
            let coder = coders::string_coder(&cfg.coder, seed)?;
            drive(cfg, &*coder, |n, s| Ok(gen::unicode_cjk(n, s)))
        }
        Family::Longs => {
            let coder = coders::long_coder(&cfg.coder, seed)?;
            drive(cfg, &*coder, |n, s| Ok(gen::longs(n, s)))
        }
        Family::Ints => {
            let coder = coders::int_coder(&cfg.coder, seed)?;
            drive(cfg, &*coder, |n, s| Ok(gen::ints(n, s)))
        }
        Family::Doubles => {
            let coder = coders::double_coder(&cfg.coder, seed)?;
            drive(cfg, &*coder, |n, s| Ok(gen::doubles(n, s)))
        }
        Family::BigInts => {
            let coder = coders::bigint_coder(&cfg.coder, seed)?;
            drive(cfg, &*coder, |n, s| Ok(gen::bigints(n, s)))
        }
        Family::BigDecimals => {
            let coder = coders::bigdecimal_coder(&cfg.coder, seed)?;
            drive(cfg, &*coder, |n, s| Ok(gen::bigdecimals(n, s)))
        }
        Family::Dates => {
            let coder = coders::date_coder(&cfg.coder, seed)?;
            drive(cfg, &*coder, |n, s| Ok(gen::dates(n, s)))
        }
        Family::Tuples => {
            let coder = coders::tuple_coder(&cfg.coder, seed)?;
            drive(cfg, &*coder, |n, s| Ok(gen::tuples(n, s)))
        }
    }
}

fn drive<T: Ord + Clone>(
    cfg: &BenchmarkConfig,
    coder: &dyn HuskyCoder<T>,
    mut generate: impl FnMut(usize, u64) -> Result<Vec<T>>,
) -> Result<BenchmarkReport> {
    let trial_cfg = cfg.trial_config();
    let mut rows = Vec::new();
    for &n in &cfg.sizes {
        let input = generate(n, derive_seed(cfg.seed, n))
            .with_context(|| format!("generating input of size {n}"))?;
        let results: Vec<_> = cfg
            .algorithms
            .iter()
            .map(|&a| run_trial(a, &input, coder, &trial_cfg).map(|r| (a, r)))
            .collect::<Result<_>>()?;
        let baseline_ns = results
            .iter()
            .find(|(a, _)| *a == cfg.normalize_to)
            .expect("validated")
            .1
            .median_ns;
        for (a, r) in results {
            let normalized = if a == cfg.normalize_to {
                1.0
            } else {
                r.median_ns as f64 / baseline_ns.max(1) as f64
            };
            rows.push(ReportRow {
                algorithm: a.id().to_owned(),
                n,
                median_ns: r.median_ns,
                mean_ns: r.mean_ns,
                normalized,
                stats: r.stats,
                residual_inversions: r.residual_inversions,
            });
        }
    }
    Ok(BenchmarkReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny(coder: &str, sizes: Vec<usize>) -> BenchmarkConfig {
        BenchmarkConfig {
            coder: CoderSpec::parse(coder).unwrap(),
            sizes,
            runs: 2,
            warmups: 1,
            ..BenchmarkConfig::default()
        }
    }

    #[test]
    fn baseline_rows_normalize_to_one() {
        let report = compare_algorithms(&tiny("long", vec![0, 100, 1000])).unwrap();
        assert_eq!(report.rows.len(), 9);
        for row in report.rows.iter().filter(|r| r.algorithm == "dual_pivot") {
            assert_eq!(row.normalized, 1.0);
        }
    }

    #[test]
    fn identical_configs_reproduce_counters() {
        let cfg = tiny("int", vec![500]);
        let a = compare_algorithms(&cfg).unwrap();
        let b = compare_algorithms(&cfg).unwrap();
        for (ra, rb) in a.rows.iter().zip(&b.rows) {
            assert_eq!(ra.stats, rb.stats);
            assert_eq!(ra.residual_inversions, rb.residual_inversions);
        }
    }

    #[test]
    fn husky_rows_report_residual_inversions_under_perturbation() {
        let report = compare_algorithms(&tiny("perturb:0.5:long", vec![800])).unwrap();
        let husky = report
            .rows
            .iter()
            .find(|r| r.algorithm == "husky_intro")
            .unwrap();
        assert!(husky.residual_inversions > 0);
        let dp = report
            .rows
            .iter()
            .find(|r| r.algorithm == "dual_pivot")
            .unwrap();
        assert_eq!(dp.residual_inversions, 0);
    }

    #[test]
    fn cjk_family_runs_end_to_end() {
        let report = compare_algorithms(&tiny("unicode", vec![300])).unwrap();
        assert_eq!(report.rows.len(), 3);
        // The 16-bit coder holds three full CJK characters; four-character
        // words (a quarter of this family) lose a bit, so a 300-word array
        // is all but guaranteed to need the cleanup pass.
        let husky = report
            .rows
            .iter()
            .find(|r| r.algorithm == "husky_intro")
            .unwrap();
        assert!(husky.stats.cleanup_ran);
    }

    #[test]
    fn missing_baseline_is_rejected() {
        let cfg = BenchmarkConfig {
            algorithms: vec![Algorithm::HuskyIntro],
            normalize_to: Algorithm::DualPivot,
            ..BenchmarkConfig::default()
        };
        assert!(compare_algorithms(&cfg).is_err());
    }

    #[test]
    fn seed_derivation_ignores_everything_but_seed_and_n() {
        assert_eq!(derive_seed(1, 100), derive_seed(1, 100));
        assert_ne!(derive_seed(1, 100), derive_seed(1, 101));
        assert_ne!(derive_seed(1, 100), derive_seed(2, 100));
    }

    #[test]
    fn english_words_family_needs_a_corpus() {
        let mut cfg = tiny("ascii", vec![100]);
        cfg.corpus = CorpusSpec::new("/definitely/not/a/file.txt");
        assert!(compare_algorithms(&cfg).is_err());
    }
}
