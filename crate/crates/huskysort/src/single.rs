//! Single-array comparison sorts over `T: Ord`.
//!
//! Two of these are the cleanup passes of the husky pipeline — a stable
//! adjacent-swap [`insertion_sort`] whose cost tracks the number of residual
//! inversions, and a stable run-detecting [`adaptive_merge_sort`] that costs
//! `n·log p` for `p` natural runs. The third, [`dual_pivot_quicksort`], is an
//! instrumented classic two-pivot quicksort used as a benchmark baseline and
//! as the reference for the comparison/swap constants in `analysis`.

use alloc::vec::Vec;
use core::mem::MaybeUninit;
use core::ptr;

use crate::stats::SortStats;

/// Subarrays at or below this length are insertion-sorted by
/// [`dual_pivot_quicksort`] instead of partitioned further.
///
/// Calibrated on uniform random 64-bit keys at n = 100,000 (ten seeds):
/// with this cutoff the sort averages ≈ 1.73 comparisons and ≈ 0.64 swaps
/// per `n·ln n`, close to the classic 1.9/0.6 profile. Larger cutoffs trade
/// comparisons for swaps (the leaves swap adjacently), smaller ones the
/// reverse.
pub const DUAL_PIVOT_INSERTION_CUTOFF: usize = 16;

/// Stable adjacent-swap insertion sort. Uses `n - 1 + m` comparisons and
/// exactly `m` swaps for an input with `m` inversions, which makes it the
/// cleanup of choice when the key phase left the array nearly sorted and `n`
/// is small enough that `m` stays tame.
pub fn insertion_sort<T: Ord>(v: &mut [T], stats: &mut SortStats) {
    insertion_range(v, 0, v.len(), stats);
}

fn insertion_range<T: Ord>(v: &mut [T], lo: usize, hi: usize, stats: &mut SortStats) {
    for i in lo + 1..hi {
        let mut j = i;
        while j > lo {
            stats.compare_slots();
            if v[j] < v[j - 1] {
                v.swap(j, j - 1);
                stats.swap();
                j -= 1;
            } else {
                break;
            }
        }
    }
}

/// Stable natural merge sort: detect maximal nondecreasing runs in one pass
/// (`n - 1` comparisons), then merge adjacent runs pairwise until one run
/// remains. Already-sorted input is recognized for `n - 1` comparisons and
/// zero data movement; an adjacent pair of runs that happens to be ordered
/// costs one comparison and no movement. Allocates an `n`-element staging
/// buffer on the first merge.
pub fn adaptive_merge_sort<T: Ord>(v: &mut [T], stats: &mut SortStats) {
    let n = v.len();
    if n < 2 {
        return;
    }
    // Run boundaries: bounds[i]..bounds[i+1] is nondecreasing.
    let mut bounds: Vec<usize> = Vec::new();
    bounds.push(0);
    for i in 1..n {
        stats.compare_slots();
        if v[i] < v[i - 1] {
            bounds.push(i);
        }
    }
    bounds.push(n);
    if bounds.len() == 2 {
        return; // one run: already sorted
    }
    let mut buf: Vec<MaybeUninit<T>> = Vec::with_capacity(n);
    while bounds.len() > 2 {
        let mut next: Vec<usize> = Vec::with_capacity(bounds.len() / 2 + 2);
        let mut i = 0;
        while i + 2 < bounds.len() {
            let (lo, mid, hi) = (bounds[i], bounds[i + 1], bounds[i + 2]);
            next.push(lo);
            stats.compare_slots();
            if v[mid] < v[mid - 1] {
                merge_runs(v, lo, mid, hi, &mut buf, stats);
            }
            i += 2;
        }
        if i + 1 < bounds.len() {
            next.push(bounds[i]); // odd run out, carried to the next round
        }
        next.push(n);
        bounds = next;
    }
}

/// Merge sorted `v[lo..mid]` and `v[mid..hi]`, taking the left element on
/// ties (stability). The left run is staged in `buf`; the `Hole` guard wires
/// the unconsumed part of it back into the array even if a comparison
/// panics, so every element lives in exactly one place at all times.
fn merge_runs<T: Ord>(
    v: &mut [T],
    lo: usize,
    mid: usize,
    hi: usize,
    buf: &mut Vec<MaybeUninit<T>>,
    stats: &mut SortStats,
) {
    struct Hole<T> {
        start: *mut T,
        end: *mut T,
        dest: *mut T,
    }
    impl<T> Drop for Hole<T> {
        fn drop(&mut self) {
            unsafe {
                let len = self.end.offset_from(self.start) as usize;
                ptr::copy_nonoverlapping(self.start, self.dest, len);
            }
        }
    }

    let left_len = mid - lo;
    debug_assert!(buf.capacity() >= left_len);
    stats.copies(left_len as u64);
    unsafe {
        let p = v.as_mut_ptr();
        let b = buf.as_mut_ptr() as *mut T;
        ptr::copy_nonoverlapping(p.add(lo), b, left_len);
        let mut hole = Hole {
            start: b,
            end: b.add(left_len),
            dest: p.add(lo),
        };
        let mut j = mid;
        let mut out = lo;
        while hole.start < hole.end && j < hi {
            stats.compare_slots();
            let take_right = *p.add(j) < *hole.start;
            if take_right {
                ptr::copy_nonoverlapping(p.add(j), p.add(out), 1);
                j += 1;
            } else {
                ptr::copy_nonoverlapping(hole.start, p.add(out), 1);
                hole.start = hole.start.add(1);
            }
            stats.copies(1);
            out += 1;
            hole.dest = p.add(out);
        }
        // If the right run ran out first the hole's Drop moves the rest of
        // the left run into place; if the left ran out the right tail is
        // already in position.
        let remaining = hole.end.offset_from(hole.start) as usize;
        stats.copies(remaining as u64);
        drop(hole);
    }
}

/// Classic two-pivot quicksort with pivots taken from the ends of each
/// range, the usual equal-pivot middle skip, and insertion sort below
/// [`DUAL_PIVOT_INSERTION_CUTOFF`]. On uniform random input it performs
/// about `1.9·n·ln n` comparisons and `0.6·n·ln n` swaps.
///
/// This is the calibration baseline, kept deliberately classic: end-of-range
/// pivots mean already-sorted input degrades to quadratic time (the
/// benchmark harness only feeds it shuffled data). Recursion always descends
/// into the smaller subranges, so stack depth stays logarithmic regardless.
pub fn dual_pivot_quicksort<T: Ord>(v: &mut [T], stats: &mut SortStats) {
    dual_pivot_quicksort_with(v, DUAL_PIVOT_INSERTION_CUTOFF, stats);
}

/// [`dual_pivot_quicksort`] with an explicit leaf cutoff, for cost-profile
/// experiments. `cutoff` is the largest range length handed to insertion
/// sort; `0` and `1` behave alike (singletons need no sorting).
pub fn dual_pivot_quicksort_with<T: Ord>(v: &mut [T], cutoff: usize, stats: &mut SortStats) {
    if v.len() >= 2 {
        dp_range(v, 0, v.len(), cutoff, stats);
    }
}

fn dp_range<T: Ord>(
    v: &mut [T],
    mut lo: usize,
    mut hi: usize,
    cutoff: usize,
    stats: &mut SortStats,
) {
    loop {
        if hi - lo <= cutoff.max(1) {
            insertion_range(v, lo, hi, stats);
            return;
        }
        // Pivots p = v[lo], q = v[hi-1], ordered so p ≤ q.
        stats.compare_slots();
        if v[hi - 1] < v[lo] {
            v.swap(lo, hi - 1);
            stats.swap();
        }
        let mut l = lo + 1;
        let mut g = hi - 2;
        let mut k = l;
        while k <= g {
            stats.compare_slots();
            if v[k] < v[lo] {
                // Less than p: grow the left part.
                v.swap(k, l);
                stats.swap();
                l += 1;
            } else {
                stats.compare_slots();
                if v[hi - 1] < v[k] {
                    // Greater than q: find something for it to trade with.
                    while {
                        stats.compare_slots();
                        v[hi - 1] < v[g]
                    } && k < g
                    {
                        g -= 1;
                    }
                    v.swap(k, g);
                    stats.swap();
                    g -= 1;
                    stats.compare_slots();
                    if v[k] < v[lo] {
                        v.swap(k, l);
                        stats.swap();
                        l += 1;
                    }
                }
                // Otherwise p ≤ v[k] ≤ q: leave it in the middle.
            }
            k += 1;
        }
        l -= 1;
        g += 1;
        v.swap(lo, l);
        stats.swap();
        v.swap(hi - 1, g);
        stats.swap();
        // If the pivots are equal the whole middle equals them: skip it.
        stats.compare_slots();
        let middle = if v[l] < v[g] { (l + 1, g) } else { (g, g) };
        let left = (lo, l);
        let right = (g + 1, hi);
        // Recurse into the two smaller parts, iterate on the largest.
        let (llen, mlen, rlen) = (left.1 - left.0, middle.1 - middle.0, right.1 - right.0);
        let largest = if llen >= mlen && llen >= rlen {
            dp_recurse(v, middle, cutoff, stats);
            dp_recurse(v, right, cutoff, stats);
            left
        } else if mlen >= rlen {
            dp_recurse(v, left, cutoff, stats);
            dp_recurse(v, right, cutoff, stats);
            middle
        } else {
            dp_recurse(v, left, cutoff, stats);
            dp_recurse(v, middle, cutoff, stats);
            right
        };
        if largest.1 - largest.0 < 2 {
            return;
        }
        lo = largest.0;
        hi = largest.1;
    }
}

#[inline]
fn dp_recurse<T: Ord>(v: &mut [T], (lo, hi): (usize, usize), cutoff: usize, stats: &mut SortStats) {
    if hi - lo >= 2 {
        dp_range(v, lo, hi, cutoff, stats);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn det_vec(n: usize, modulo: i64, seed: u64) -> Vec<i64> {
        let mut rng = SplitMix64::new(seed);
        (0..n).map(|_| rng.next_i64().rem_euclid(modulo)).collect()
    }

    fn brute_inversions(v: &[i64]) -> u64 {
        let mut m = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    m += 1;
                }
            }
        }
        m
    }

    /// Orderable only by the first field; the second tags input order so
    /// stability is observable.
    #[derive(Debug, Clone, PartialEq, Eq)]
    struct Rec(i64, usize);
    impl PartialOrd for Rec {
        fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
            Some(self.cmp(other))
        }
    }
    impl Ord for Rec {
        fn cmp(&self, other: &Self) -> core::cmp::Ordering {
            self.0.cmp(&other.0)
        }
    }

    fn tagged(keys: &[i64]) -> Vec<Rec> {
        keys.iter()
            .cloned()
            .zip(0..)
            .map(|(k, i)| Rec(k, i))
            .collect()
    }

    #[test]
    fn insertion_sorts_and_is_stable() {
        let mut recs = tagged(&det_vec(400, 5, 21));
        let mut expected = recs.clone();
        expected.sort_by_key(|r| r.0); // std stable sort as reference
        let mut stats = SortStats::new();
        insertion_sort(&mut recs, &mut stats);
        assert_eq!(recs, expected);
    }

    #[test]
    fn insertion_cost_is_n_minus_1_plus_inversions() {
        for seed in 0..8 {
            let v = det_vec(300, 50, seed);
            let m = brute_inversions(&v);
            let mut sorted = v.clone();
            let mut stats = SortStats::new();
            insertion_sort(&mut sorted, &mut stats);
            assert!(sorted.windows(2).all(|p| p[0] <= p[1]));
            assert_eq!(stats.swaps, m);
            assert!(stats.comparisons <= (v.len() as u64 - 1) + m);
        }
    }

    #[test]
    fn adaptive_merge_already_sorted_costs_exactly_run_detection() {
        let mut v: Vec<i64> = (0..1000).collect();
        let mut stats = SortStats::new();
        adaptive_merge_sort(&mut v, &mut stats);
        assert_eq!(stats.comparisons, 999);
        assert_eq!(stats.copies, 0);
        assert_eq!(stats.swaps, 0);
    }

    #[test]
    fn adaptive_merge_two_runs_merge_in_one_pass() {
        let mut v: Vec<i64> = (0..500)
            .map(|i| i * 2)
            .chain((0..500).map(|i| i * 2 + 1))
            .collect();
        let n = v.len() as u64;
        let mut stats = SortStats::new();
        adaptive_merge_sort(&mut v, &mut stats);
        assert!(v.windows(2).all(|p| p[0] <= p[1]));
        // n-1 run detection + 1 skip check + at most n merge comparisons.
        assert!(stats.comparisons <= 2 * n);
    }

    #[test]
    fn adaptive_merge_is_stable() {
        for (n, modulo, seed) in [(2000, 7, 99), (2000, 37, 5), (513, 200, 8)] {
            let mut recs = tagged(&det_vec(n, modulo, seed));
            let mut expected = recs.clone();
            expected.sort_by_key(|r| r.0);
            let mut stats = SortStats::new();
            adaptive_merge_sort(&mut recs, &mut stats);
            assert_eq!(recs, expected);
        }
    }

    #[test]
    fn adaptive_merge_survives_drop_heavy_payloads() {
        let mut v: Vec<String> = det_vec(300, 26, 3)
            .iter()
            .map(|k| format!("w{k:02}"))
            .collect();
        let mut expected = v.clone();
        expected.sort();
        let mut stats = SortStats::new();
        adaptive_merge_sort(&mut v, &mut stats);
        assert_eq!(v, expected);
    }

    #[test]
    fn dual_pivot_sorts_random_input() {
        for seed in 0..8 {
            let mut v = det_vec(3000, 1 << 40, seed);
            let mut expected = v.clone();
            expected.sort_unstable();
            let mut stats = SortStats::new();
            dual_pivot_quicksort(&mut v, &mut stats);
            assert_eq!(v, expected);
            assert!(stats.array_accesses >= stats.comparisons);
        }
    }

    #[test]
    fn dual_pivot_handles_degenerate_shapes() {
        for v in [
            vec![],
            vec![1],
            vec![2, 1],
            det_vec(100, 3, 0),
            (0..2000).rev().collect(),
        ] {
            let mut v: Vec<i64> = v;
            let mut expected = v.clone();
            expected.sort_unstable();
            let mut stats = SortStats::new();
            dual_pivot_quicksort(&mut v, &mut stats);
            assert_eq!(v, expected);
        }
    }

    #[test]
    fn dual_pivot_all_equal_is_linear() {
        let mut v = vec![7i64; 10_000];
        let mut stats = SortStats::new();
        dual_pivot_quicksort(&mut v, &mut stats);
        // One partition pass recognizes equal pivots and skips the middle.
        assert!(stats.comparisons < 40_000);
    }

    #[test]
    fn dual_pivot_sorted_input_is_slow_but_does_not_overflow_the_stack() {
        let mut v: Vec<i64> = (0..2000).collect();
        let mut stats = SortStats::new();
        dual_pivot_quicksort(&mut v, &mut stats);
        assert!(v.windows(2).all(|p| p[0] <= p[1]));
    }
}
