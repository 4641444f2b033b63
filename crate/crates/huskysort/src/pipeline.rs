//! The husky sort pipeline: optional shuffle guard → encode → dual-array
//! key sort → stable cleanup unless the coding was perfect.
//!
//! Correctness never depends on key quality. The key phase produces *some*
//! permutation; if the coder certified a strict order embedding for this
//! exact array the permutation is already sorted and cleanup is skipped,
//! otherwise a stable comparison sort over the payload finishes the job.
//! Keys are dropped before cleanup — the payload alone decides the final
//! order.

use crate::coder::HuskyCoder;
use crate::dual;
use crate::rng::{shuffle, SplitMix64};
use crate::single;
use crate::stats::SortStats;

/// Which stable sort repairs the residual disorder after the key phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CleanupStrategy {
    /// Run-detecting natural merge; `n log p` worst case, linear when the
    /// keys already did the job.
    AdaptiveMerge,
    /// Adjacent-swap insertion; unbeatable when residual inversions are
    /// few and `n` is small, quadratic when they aren't.
    Insertion,
    /// Insertion below [`HuskySortConfig::auto_threshold`] elements,
    /// adaptive merge at or above it.
    #[default]
    Auto,
}

/// Array length at which [`CleanupStrategy::Auto`] switches from insertion
/// to adaptive merge.
pub const AUTO_CLEANUP_THRESHOLD: usize = 50_000;

/// Pipeline knobs. `Default` is the sensible production setup: no shuffle,
/// auto cleanup, stats collected.
#[derive(Debug, Clone)]
pub struct HuskySortConfig {
    /// Shuffle before encoding. Worth it when the input may arrive
    /// pre-ordered: partially sorted input makes quicksort-family key
    /// phases degenerate, and a shuffle restores the average case.
    pub may_be_sorted: bool,
    pub cleanup: CleanupStrategy,
    /// Auto-cleanup switch point; `n < auto_threshold` uses insertion.
    pub auto_threshold: usize,
    /// Leaf cutoff handed to the dual-array introsort (≥ 1).
    pub insertion_cutoff: usize,
    /// Seed for the shuffle guard.
    pub seed: u64,
    /// When false the returned outcome carries zeroed counters (the flags
    /// are always filled in). Counting itself is not configurable — the
    /// flag only controls reporting.
    pub collect_stats: bool,
}

impl Default for HuskySortConfig {
    fn default() -> Self {
        Self {
            may_be_sorted: false,
            cleanup: CleanupStrategy::Auto,
            auto_threshold: AUTO_CLEANUP_THRESHOLD,
            insertion_cutoff: dual::INSERTION_CUTOFF,
            seed: 0,
            collect_stats: true,
        }
    }
}

/// What a pipeline run did: the counters plus the two decisions that shape
/// them. `coding_was_perfect` implies `!cleanup_ran`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortOutcome {
    pub stats: SortStats,
    pub coding_was_perfect: bool,
    pub cleanup_ran: bool,
}

/// Sort `xs` with the husky pipeline (introsort key phase; not stable).
pub fn husky_sort<T: Ord, C: HuskyCoder<T> + ?Sized>(
    xs: &mut [T],
    coder: &C,
    cfg: &HuskySortConfig,
) -> SortOutcome {
    run(xs, coder, cfg, false)
}

/// Sort `xs` with the husky pipeline using a stable merge key phase, making
/// the whole pipeline stable: the key sort preserves input order of equal
/// keys and the cleanup passes are stable too.
pub fn husky_sort_stable<T: Ord, C: HuskyCoder<T> + ?Sized>(
    xs: &mut [T],
    coder: &C,
    cfg: &HuskySortConfig,
) -> SortOutcome {
    run(xs, coder, cfg, true)
}

fn run<T: Ord, C: HuskyCoder<T> + ?Sized>(
    xs: &mut [T],
    coder: &C,
    cfg: &HuskySortConfig,
    stable: bool,
) -> SortOutcome {
    let mut stats = SortStats::new();
    let perfect = if stable {
        key_phase_stable(xs, coder, cfg, &mut stats)
    } else {
        key_phase(xs, coder, cfg, &mut stats)
    };
    if !perfect {
        cleanup(xs, cfg, &mut stats);
    }
    let cleanup_ran = stats.cleanup_ran;
    if !cfg.collect_stats {
        stats = SortStats {
            cleanup_ran,
            ..SortStats::new()
        };
    }
    SortOutcome {
        stats,
        coding_was_perfect: perfect,
        cleanup_ran,
    }
}

/// Shuffle `xs` if the config says the input may be pre-ordered; no-op
/// otherwise. Seeded, hence reproducible.
pub fn shuffle_guard<T>(xs: &mut [T], cfg: &HuskySortConfig) {
    if cfg.may_be_sorted {
        shuffle(xs, &mut SplitMix64::new(cfg.seed));
    }
}

/// The pipeline up to (but excluding) cleanup: shuffle guard, encode, sort
/// `xs` by key with the dual-array introsort. Returns the coding's
/// perfection verdict. Useful on its own for measuring residual disorder.
pub fn key_phase<T, C: HuskyCoder<T> + ?Sized>(
    xs: &mut [T],
    coder: &C,
    cfg: &HuskySortConfig,
    stats: &mut SortStats,
) -> bool {
    assert!(cfg.insertion_cutoff >= 1);
    if xs.len() < 2 {
        return true; // nothing to do; vacuously a strict embedding
    }
    shuffle_guard(xs, cfg);
    let coding = coder.encode_all(xs);
    let mut keys = coding.keys;
    assert_eq!(
        keys.len(),
        xs.len(),
        "coder must produce one key per element"
    );
    let depth_limit = 2 * dual::floor_lg(keys.len());
    dual::introsort_with(&mut keys, xs, depth_limit, cfg.insertion_cutoff, stats);
    coding.perfect
}

/// [`key_phase`] with the stable dual-array merge sort instead of the
/// introsort.
pub fn key_phase_stable<T, C: HuskyCoder<T> + ?Sized>(
    xs: &mut [T],
    coder: &C,
    cfg: &HuskySortConfig,
    stats: &mut SortStats,
) -> bool {
    if xs.len() < 2 {
        return true;
    }
    shuffle_guard(xs, cfg);
    let coding = coder.encode_all(xs);
    let mut keys = coding.keys;
    assert_eq!(
        keys.len(),
        xs.len(),
        "coder must produce one key per element"
    );
    dual::merge_sort(&mut keys, xs, stats);
    coding.perfect
}

/// Stable cleanup pass over the payload, per the configured strategy.
/// Marks `stats.cleanup_ran`.
pub fn cleanup<T: Ord>(xs: &mut [T], cfg: &HuskySortConfig, stats: &mut SortStats) {
    stats.cleanup_ran = true;
    let use_insertion = match cfg.cleanup {
        CleanupStrategy::Insertion => true,
        CleanupStrategy::AdaptiveMerge => false,
        CleanupStrategy::Auto => xs.len() < cfg.auto_threshold,
    };
    if use_insertion {
        single::insertion_sort(xs, stats);
    } else {
        single::adaptive_merge_sort(xs, stats);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coder::{AsciiCoder, EnglishCoder, LongCoder, PerturbedCoder};
    use crate::rng::SplitMix64;
    use alloc::string::{String, ToString};
    use alloc::vec::Vec;

    fn shuffled_words(words: &[&str], seed: u64) -> Vec<String> {
        let mut v: Vec<String> = words.iter().map(|s| s.to_string()).collect();
        shuffle(&mut v, &mut SplitMix64::new(seed));
        v
    }

    #[test]
    fn perfect_coding_skips_cleanup() {
        let mut v = shuffled_words(&["delta", "alpha", "echo", "bravo", "charlie", "fox"], 3);
        let outcome = husky_sort(&mut v, &AsciiCoder, &HuskySortConfig::default());
        assert!(outcome.coding_was_perfect);
        assert!(!outcome.cleanup_ran);
        assert!(!outcome.stats.cleanup_ran);
        let mut expected = v.clone();
        expected.sort();
        assert_eq!(v, expected);
    }

    #[test]
    fn imperfect_coding_cleans_up_and_sorts() {
        // 10-char words overflow the 9-char ascii window.
        let mut v = shuffled_words(
            &[
                "bumblebees",
                "bumblebeet",
                "bumblebeez",
                "aardvarks",
                "zygomorphy",
                "bumblebee",
            ],
            9,
        );
        let mut expected = v.clone();
        expected.sort();
        let outcome = husky_sort(&mut v, &AsciiCoder, &HuskySortConfig::default());
        assert!(!outcome.coding_was_perfect);
        assert!(outcome.cleanup_ran);
        assert_eq!(v, expected);
    }

    #[test]
    fn outcome_invariant_perfect_implies_no_cleanup() {
        for seed in 0..10 {
            let mut rng = SplitMix64::new(seed);
            let mut v: Vec<i64> = (0..500).map(|_| rng.next_i64()).collect();
            let outcome = husky_sort(&mut v, &LongCoder, &HuskySortConfig::default());
            assert!(!(outcome.coding_was_perfect && outcome.cleanup_ran));
            assert!(v.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn stable_variant_preserves_equal_element_order() {
        // Ord ignores the tag, so equal-k records are "equal elements";
        // the stable pipeline must keep their input order even though the
        // (perfect) coder sends them through the key sort.
        #[derive(Debug, Clone, PartialEq, Eq)]
        struct Rec {
            k: i64,
            tag: usize,
        }
        impl PartialOrd for Rec {
            fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
                Some(self.cmp(other))
            }
        }
        impl Ord for Rec {
            fn cmp(&self, other: &Self) -> core::cmp::Ordering {
                self.k.cmp(&other.k)
            }
        }
        struct RecCoder;
        impl crate::coder::HuskyCoder<Rec> for RecCoder {
            fn encode(&self, x: &Rec) -> i64 {
                x.k
            }
            fn perfect(&self) -> bool {
                false // force the cleanup path too
            }
        }
        let mut rng = SplitMix64::new(12);
        let mut v: Vec<Rec> = (0..800)
            .map(|tag| Rec {
                k: rng.next_below(40) as i64,
                tag,
            })
            .collect();
        let mut expected = v.clone();
        expected.sort_by_key(|r| r.k); // std stable sort
        husky_sort_stable(&mut v, &RecCoder, &HuskySortConfig::default());
        assert_eq!(v, expected);
    }

    #[test]
    fn degenerate_sizes() {
        let cfg = HuskySortConfig::default();
        let mut empty: Vec<String> = Vec::new();
        let out = husky_sort(&mut empty, &AsciiCoder, &cfg);
        assert!(!out.cleanup_ran);
        assert_eq!(out.stats, SortStats::new());
        let mut one = ["solo".to_string()].to_vec();
        let out = husky_sort(&mut one, &AsciiCoder, &cfg);
        assert!(out.coding_was_perfect && !out.cleanup_ran);
    }

    #[test]
    fn shuffle_guard_is_deterministic_and_off_by_default() {
        let cfg_off = HuskySortConfig::default();
        let mut a: Vec<i64> = (0..100).collect();
        shuffle_guard(&mut a, &cfg_off);
        assert_eq!(a, (0..100).collect::<Vec<_>>());
        let cfg_on = HuskySortConfig {
            may_be_sorted: true,
            seed: 5,
            ..Default::default()
        };
        let mut b: Vec<i64> = (0..100).collect();
        let mut c: Vec<i64> = (0..100).collect();
        shuffle_guard(&mut b, &cfg_on);
        shuffle_guard(&mut c, &cfg_on);
        assert_eq!(b, c);
        assert_ne!(b, a);
    }

    #[test]
    fn shuffle_guard_restores_average_case_disorder() {
        // A sorted array has zero inversions; after the guard it should
        // look like a random permutation: n(n-1)/4 inversions ± 20%.
        let n = 10_000usize;
        let mut v: Vec<i64> = (0..n as i64).collect();
        let cfg = HuskySortConfig {
            may_be_sorted: true,
            seed: 4242,
            ..Default::default()
        };
        shuffle_guard(&mut v, &cfg);
        let inv = crate::analysis::count_inversions(&v) as f64;
        let expected = crate::analysis::expected_random_inversions(n as u64);
        assert!(
            (inv - expected).abs() < 0.2 * expected,
            "inv = {inv}, expected ≈ {expected}"
        );
    }

    #[test]
    fn auto_cleanup_switches_at_the_threshold() {
        // Distinguish the strategies by their stats signatures: insertion
        // swaps and never copies, merge copies and never swaps.
        let mut rng = SplitMix64::new(8);
        let base: Vec<i64> = (0..64).map(|_| rng.next_i64()).collect();
        let cfg_at = HuskySortConfig {
            auto_threshold: 64,
            ..Default::default()
        };
        let mut v = base.clone();
        let mut stats = SortStats::new();
        cleanup(&mut v, &cfg_at, &mut stats);
        assert!(
            stats.copies > 0 && stats.swaps == 0,
            "n == threshold must merge"
        );
        let cfg_above = HuskySortConfig {
            auto_threshold: 65,
            ..Default::default()
        };
        let mut w = base.clone();
        let mut stats = SortStats::new();
        cleanup(&mut w, &cfg_above, &mut stats);
        assert!(
            stats.swaps > 0 && stats.copies == 0,
            "n < threshold must insert"
        );
        assert_eq!(v, w);
    }

    #[test]
    fn collect_stats_off_zeroes_counters_but_keeps_flags() {
        let mut v = shuffled_words(&["bumblebees", "aardvarks", "cataclysms", "zygomorphy"], 2);
        let cfg = HuskySortConfig {
            collect_stats: false,
            ..Default::default()
        };
        let outcome = husky_sort(&mut v, &AsciiCoder, &cfg);
        assert!(outcome.cleanup_ran);
        assert!(outcome.stats.cleanup_ran);
        assert_eq!(outcome.stats.comparisons, 0);
        assert_eq!(outcome.stats.array_accesses, 0);
    }

    #[test]
    fn perturbed_pipeline_still_sorts() {
        for q in [0.0, 0.1, 0.5, 1.0] {
            let mut rng = SplitMix64::new(77);
            let mut v: Vec<i64> = (0..2000).map(|_| rng.next_i64()).collect();
            let mut expected = v.clone();
            expected.sort_unstable();
            let coder = PerturbedCoder::new(LongCoder, q, 123);
            let outcome = husky_sort(&mut v, &coder, &HuskySortConfig::default());
            assert_eq!(v, expected, "q = {q}");
            assert_eq!(outcome.cleanup_ran, q > 0.0);
        }
    }

    #[test]
    fn english_collisions_resolved_by_cleanup() {
        // The 5-bit coder case-folds; byte order says 'B' < 'a'. Perfection
        // is refused (uppercase off-domain) and cleanup restores byte order.
        let mut v = shuffled_words(&["Banana", "apple", "banana", "Apple", "cherry"], 1);
        let mut expected = v.clone();
        expected.sort();
        let outcome = husky_sort(&mut v, &EnglishCoder, &HuskySortConfig::default());
        assert!(!outcome.coding_was_perfect);
        assert_eq!(v, expected);
    }
}
