//! Prints two cost profiles that are otherwise easy to take on faith:
//!
//! 1. how the dual-pivot quicksort's comparison/swap constants move with the
//!    insertion-leaf cutoff (the shipped default is 16), and
//! 2. how many residual inversions a perturbed coder leaves behind after the
//!    key phase, next to the closed-form expectation.
//!
//! Run with `cargo run --release --example cost_profile`.

use huskysort::coder::{IntCoder, LongCoder, PerturbedCoder};
use huskysort::pipeline::{key_phase, HuskySortConfig};
use huskysort::rng::SplitMix64;
use huskysort::single::dual_pivot_quicksort_with;
use huskysort::stats::SortStats;

const SEEDS: u64 = 10;

fn main() {
    let n = 100_000usize;
    let nlnn = (n as f64) * (n as f64).ln();
    println!("== dual-pivot cutoff sweep, n = {n}, {SEEDS} seeds ==");
    println!("{:>6} {:>12} {:>12}", "cutoff", "comps/NlnN", "swaps/NlnN");
    for cutoff in [1usize, 4, 8, 12, 16, 20, 24, 32, 46] {
        let mut comps = 0.0;
        let mut swaps = 0.0;
        for seed in 0..SEEDS {
            let mut rng = SplitMix64::new(seed);
            let mut v: Vec<i64> = (0..n).map(|_| rng.next_i64()).collect();
            let mut stats = SortStats::new();
            dual_pivot_quicksort_with(&mut v, cutoff, &mut stats);
            assert!(v.windows(2).all(|w| w[0] <= w[1]));
            comps += stats.comparisons as f64 / nlnn;
            swaps += stats.swaps as f64 / nlnn;
        }
        println!(
            "{:>6} {:>12.4} {:>12.4}",
            cutoff,
            comps / SEEDS as f64,
            swaps / SEEDS as f64
        );
    }

    // Residual inversions after a perturbed key phase. With probability q a
    // key is replaced by a uniform random 64-bit value. For uniform i64
    // payloads under the identity coder the expectation is
    // n(n-1)·(q/3 - q²/12); for i32 payloads (whose keys occupy a sliver of
    // the key space, so a perturbed key almost surely jumps past everything
    // on one side) it is n(n-1)·(q/2 - q²/4). Both hit the fully-random
    // n(n-1)/4 at q = 1.
    let n = 20_000usize;
    let pairs = (n * (n - 1)) as f64;
    println!();
    println!("== residual inversions after perturbed key phase, n = {n}, {SEEDS} seeds ==");
    println!(
        "{:>6} {:>14} {:>14} {:>8} | {:>14} {:>14} {:>8}",
        "q", "i64 measured", "i64 expected", "ratio", "i32 measured", "i32 expected", "ratio"
    );
    for q in [0.05, 0.1, 0.25, 0.5, 0.75, 1.0] {
        let mut measured64 = 0.0;
        let mut measured32 = 0.0;
        for seed in 0..SEEDS {
            let mut rng = SplitMix64::new(1000 + seed);
            let mut v: Vec<i64> = (0..n).map(|_| rng.next_i64()).collect();
            let coder = PerturbedCoder::new(LongCoder, q, 99 + seed);
            let mut stats = SortStats::new();
            key_phase(&mut v, &coder, &HuskySortConfig::default(), &mut stats);
            measured64 += huskysort::analysis::count_inversions(&v) as f64;

            let mut w: Vec<i32> = (0..n).map(|_| rng.next_u64() as i32).collect();
            let coder = PerturbedCoder::new(IntCoder, q, 7 + seed);
            let mut stats = SortStats::new();
            key_phase(&mut w, &coder, &HuskySortConfig::default(), &mut stats);
            measured32 += huskysort::analysis::count_inversions(&w) as f64;
        }
        measured64 /= SEEDS as f64;
        measured32 /= SEEDS as f64;
        let expected64 = pairs * (q / 3.0 - q * q / 12.0);
        let expected32 = pairs * (q / 2.0 - q * q / 4.0);
        println!(
            "{:>6} {:>14.0} {:>14.0} {:>8.4} | {:>14.0} {:>14.0} {:>8.4}",
            q,
            measured64,
            expected64,
            measured64 / expected64,
            measured32,
            expected32,
            measured32 / expected32
        );
    }
}
