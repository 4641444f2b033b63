//! Dual-array sort kernels: sort a slice of `i64` keys while applying every
//! exchange to a payload slice of the same length.
//!
//! These are the key-phase workhorses. All comparisons are on the keys, so
//! none of them can panic in user code; the payload is only ever moved. The
//! introsort follows the classic recipe — median-of-three quicksort, depth
//! limit `2·⌊lg n⌋` with a heapsort fallback, small ranges finished by
//! insertion sort — and the merge sort is the stable counterpart used by the
//! stable pipeline variant.
//!
//! `insertion_sort` and `merge_sort` are stable *with respect to the keys*:
//! payload elements with equal keys keep their relative order. `introsort`
//! and `heapsort` are not.

use alloc::vec::Vec;
use core::mem::MaybeUninit;
use core::ptr;

use crate::stats::SortStats;

/// Ranges at or below this length are finished by insertion sort. The usual
/// sweet spot for branchy quicksorts; also used as the leaf cutoff of
/// [`merge_sort`].
pub const INSERTION_CUTOFF: usize = 16;

/// `⌊log₂ n⌋` for `n ≥ 1`.
pub fn floor_lg(n: usize) -> u32 {
    assert!(n >= 1, "floor_lg undefined for 0");
    usize::BITS - 1 - n.leading_zeros()
}

#[inline]
fn swap2<T>(keys: &mut [i64], payload: &mut [T], i: usize, j: usize, stats: &mut SortStats) {
    keys.swap(i, j);
    payload.swap(i, j);
    stats.swap_dual();
}

/// Sort `keys` (co-permuting `payload`) with a depth limit of `2·⌊lg n⌋` and
/// the default insertion cutoff.
pub fn introsort<T>(keys: &mut [i64], payload: &mut [T], stats: &mut SortStats) {
    let n = keys.len();
    if n >= 2 {
        introsort_with(keys, payload, 2 * floor_lg(n), INSERTION_CUTOFF, stats);
    } else {
        assert_eq!(keys.len(), payload.len());
    }
}

/// [`introsort`] with explicit depth limit and insertion cutoff. Ranges that
/// still need partitioning when `depth_limit` is exhausted are handed to
/// [`heapsort`] (counted in `stats.depth_limit_hits`), which bounds the worst
/// case at O(n log n).
pub fn introsort_with<T>(
    keys: &mut [i64],
    payload: &mut [T],
    depth_limit: u32,
    insertion_cutoff: usize,
    stats: &mut SortStats,
) {
    assert_eq!(keys.len(), payload.len());
    assert!(insertion_cutoff >= 1);
    if keys.len() >= 2 {
        isort_range(
            keys,
            payload,
            0,
            keys.len(),
            depth_limit,
            insertion_cutoff,
            stats,
        );
    }
}

fn isort_range<T>(
    keys: &mut [i64],
    payload: &mut [T],
    mut lo: usize,
    mut hi: usize,
    mut depth: u32,
    cutoff: usize,
    stats: &mut SortStats,
) {
    loop {
        let len = hi - lo;
        // The partition scheme needs at least 3 elements, so ranges of 2 go
        // to insertion sort even if the caller asked for a cutoff of 1.
        if len <= cutoff.max(2) {
            insertion_range(keys, payload, lo, hi, stats);
            return;
        }
        if depth == 0 {
            stats.depth_limit_hits += 1;
            heapsort_range(keys, payload, lo, hi, stats);
            return;
        }
        depth -= 1;
        let p = partition_range(keys, payload, lo, hi, stats);
        // Recurse into the smaller side, iterate on the larger: stack depth
        // stays O(log n) no matter how lopsided the pivots are.
        if p - lo < hi - (p + 1) {
            isort_range(keys, payload, lo, p, depth, cutoff, stats);
            lo = p + 1;
        } else {
            isort_range(keys, payload, p + 1, hi, depth, cutoff, stats);
            hi = p;
        }
    }
}

/// Median-of-three partition over the whole slice (at least 3 elements).
/// Returns `p` such that `keys[..p] ≤ keys[p] ≤ keys[p+1..]`.
pub fn partition<T>(keys: &mut [i64], payload: &mut [T], stats: &mut SortStats) -> usize {
    assert_eq!(keys.len(), payload.len());
    assert!(keys.len() >= 3, "partition needs at least 3 elements");
    partition_range(keys, payload, 0, keys.len(), stats)
}

fn partition_range<T>(
    keys: &mut [i64],
    payload: &mut [T],
    lo: usize,
    hi: usize,
    stats: &mut SortStats,
) -> usize {
    let mid = lo + (hi - lo) / 2;
    // Median of three, ordering lo/mid/hi-1 in place. Besides picking a
    // decent pivot this plants sentinels: keys[lo] ≤ pivot ≤ keys[hi-1].
    let order = |keys: &mut [i64], payload: &mut [T], a: usize, b: usize, stats: &mut SortStats| {
        stats.compare_slots();
        if keys[b] < keys[a] {
            swap2(keys, payload, a, b, stats);
        }
    };
    order(keys, payload, lo, mid, stats);
    order(keys, payload, lo, hi - 1, stats);
    order(keys, payload, mid, hi - 1, stats);
    // Park the pivot at hi-2.
    if mid != hi - 2 {
        swap2(keys, payload, mid, hi - 2, stats);
    }
    let pivot = keys[hi - 2];
    let mut i = lo;
    let mut j = hi - 2;
    loop {
        loop {
            i += 1;
            stats.compare_cached();
            if keys[i] >= pivot {
                break;
            }
        }
        loop {
            j -= 1;
            stats.compare_cached();
            if keys[j] <= pivot {
                break;
            }
        }
        if i >= j {
            break;
        }
        swap2(keys, payload, i, j, stats);
    }
    if i != hi - 2 {
        swap2(keys, payload, i, hi - 2, stats);
    }
    i
}

/// Heapsort on the whole slice; the introsort depth-limit fallback.
pub fn heapsort<T>(keys: &mut [i64], payload: &mut [T], stats: &mut SortStats) {
    assert_eq!(keys.len(), payload.len());
    heapsort_range(keys, payload, 0, keys.len(), stats);
}

fn heapsort_range<T>(
    keys: &mut [i64],
    payload: &mut [T],
    lo: usize,
    hi: usize,
    stats: &mut SortStats,
) {
    let n = hi - lo;
    if n < 2 {
        return;
    }
    for root in (0..n / 2).rev() {
        sift_down(keys, payload, lo, root, n, stats);
    }
    for end in (1..n).rev() {
        swap2(keys, payload, lo, lo + end, stats);
        sift_down(keys, payload, lo, 0, end, stats);
    }
}

fn sift_down<T>(
    keys: &mut [i64],
    payload: &mut [T],
    lo: usize,
    mut root: usize,
    size: usize,
    stats: &mut SortStats,
) {
    loop {
        let mut child = 2 * root + 1;
        if child >= size {
            return;
        }
        if child + 1 < size {
            stats.compare_slots();
            if keys[lo + child] < keys[lo + child + 1] {
                child += 1;
            }
        }
        stats.compare_slots();
        if keys[lo + root] >= keys[lo + child] {
            return;
        }
        swap2(keys, payload, lo + root, lo + child, stats);
        root = child;
    }
}

/// Adjacent-swap insertion sort by key; stable. Costs at most `n - 1 + m`
/// comparisons where `m` is the number of key inversions.
pub fn insertion_sort<T>(keys: &mut [i64], payload: &mut [T], stats: &mut SortStats) {
    assert_eq!(keys.len(), payload.len());
    insertion_range(keys, payload, 0, keys.len(), stats);
}

fn insertion_range<T>(
    keys: &mut [i64],
    payload: &mut [T],
    lo: usize,
    hi: usize,
    stats: &mut SortStats,
) {
    for i in lo + 1..hi {
        let mut j = i;
        while j > lo {
            stats.compare_slots();
            if keys[j] < keys[j - 1] {
                swap2(keys, payload, j, j - 1, stats);
                j -= 1;
            } else {
                break;
            }
        }
    }
}

/// Stable dual-array merge sort by key. The stable pipeline's key phase:
/// same contract as [`introsort`] plus stability, at the cost of O(n/2)
/// scratch space for each array.
pub fn merge_sort<T>(keys: &mut [i64], payload: &mut [T], stats: &mut SortStats) {
    assert_eq!(keys.len(), payload.len());
    let n = keys.len();
    if n < 2 {
        return;
    }
    let mut kbuf: Vec<i64> = Vec::with_capacity(n / 2 + 1);
    let mut pbuf: Vec<MaybeUninit<T>> = Vec::with_capacity(n / 2 + 1);
    msort_range(keys, payload, 0, n, &mut kbuf, &mut pbuf, stats);
}

fn msort_range<T>(
    keys: &mut [i64],
    payload: &mut [T],
    lo: usize,
    hi: usize,
    kbuf: &mut Vec<i64>,
    pbuf: &mut Vec<MaybeUninit<T>>,
    stats: &mut SortStats,
) {
    if hi - lo <= INSERTION_CUTOFF {
        insertion_range(keys, payload, lo, hi, stats);
        return;
    }
    let mid = lo + (hi - lo) / 2;
    msort_range(keys, payload, lo, mid, kbuf, pbuf, stats);
    msort_range(keys, payload, mid, hi, kbuf, pbuf, stats);
    // Halves already in order: one comparison and no data movement.
    stats.compare_slots();
    if keys[mid - 1] <= keys[mid] {
        return;
    }
    merge_range(keys, payload, lo, mid, hi, kbuf, pbuf, stats);
}

/// Merge `[lo, mid)` and `[mid, hi)`, both sorted, taking the left side on
/// ties. The left halves are staged in the scratch buffers; a drop guard
/// moves any unconsumed payload back even if a counter update were to panic,
/// so no element is ever duplicated or leaked.
#[allow(clippy::too_many_arguments)]
fn merge_range<T>(
    keys: &mut [i64],
    payload: &mut [T],
    lo: usize,
    mid: usize,
    hi: usize,
    kbuf: &mut Vec<i64>,
    pbuf: &mut Vec<MaybeUninit<T>>,
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
    kbuf.clear();
    kbuf.extend_from_slice(&keys[lo..mid]);
    debug_assert!(pbuf.capacity() >= left_len);
    stats.copies(left_len as u64);

    unsafe {
        let p = payload.as_mut_ptr();
        ptr::copy_nonoverlapping(p.add(lo), pbuf.as_mut_ptr() as *mut T, left_len);
        let mut hole = Hole {
            start: pbuf.as_mut_ptr() as *mut T,
            end: (pbuf.as_mut_ptr() as *mut T).add(left_len),
            dest: p.add(lo),
        };
        let mut li = 0; // next unconsumed index in kbuf
        let mut j = mid;
        let mut out = lo;
        while hole.start < hole.end && j < hi {
            stats.compare_slots();
            if keys[j] < kbuf[li] {
                keys[out] = keys[j];
                ptr::copy_nonoverlapping(p.add(j), p.add(out), 1);
                stats.copies(1);
                j += 1;
            } else {
                keys[out] = kbuf[li];
                ptr::copy_nonoverlapping(hole.start, p.add(out), 1);
                stats.copies(1);
                li += 1;
                hole.start = hole.start.add(1);
            }
            out += 1;
            hole.dest = p.add(out);
        }
        // Right side exhausted: the hole's Drop copies the remaining left
        // payload into place; the keys still need doing by hand.
        let remaining = hole.end.offset_from(hole.start) as usize;
        keys[out..out + remaining].copy_from_slice(&kbuf[li..li + remaining]);
        stats.copies(remaining as u64);
        drop(hole);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs<T: Clone>(keys: &[i64], payload: &[T]) -> Vec<(i64, T)> {
        keys.iter().cloned().zip(payload.iter().cloned()).collect()
    }

    /// The multiset of (key, payload) pairs must survive any dual sort.
    fn assert_pairs_conserved(before: &[(i64, u32)], keys: &[i64], payload: &[u32]) {
        let mut a = before.to_vec();
        let mut b = pairs(keys, payload);
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    fn det_keys(n: usize, seed: u64) -> (Vec<i64>, Vec<u32>) {
        let mut rng = crate::rng::SplitMix64::new(seed);
        let keys: Vec<i64> = (0..n).map(|_| rng.next_i64() % 1000).collect();
        let payload: Vec<u32> = (0..n as u32).collect();
        (keys, payload)
    }

    #[test]
    fn floor_lg_small_values() {
        assert_eq!(floor_lg(1), 0);
        assert_eq!(floor_lg(2), 1);
        assert_eq!(floor_lg(3), 1);
        assert_eq!(floor_lg(4), 2);
        assert_eq!(floor_lg(1000), 9);
        assert_eq!(floor_lg(1024), 10);
        assert_eq!(floor_lg(1025), 10);
    }

    #[test]
    #[should_panic]
    fn floor_lg_zero_panics() {
        floor_lg(0);
    }

    #[test]
    fn insertion_is_stable_by_key() {
        let mut keys = vec![2, 1, 1];
        let mut payload = vec!['x', 'y', 'z'];
        let mut stats = SortStats::new();
        insertion_sort(&mut keys, &mut payload, &mut stats);
        assert_eq!(keys, vec![1, 1, 2]);
        // y and z had equal keys and must keep their order; x sinks last.
        assert_eq!(payload, vec!['y', 'z', 'x']);
    }

    #[test]
    fn insertion_sorted_input_costs_n_minus_1_comparisons() {
        let mut keys: Vec<i64> = (0..100).collect();
        let mut payload: Vec<u32> = (0..100).collect();
        let mut stats = SortStats::new();
        insertion_sort(&mut keys, &mut payload, &mut stats);
        assert_eq!(stats.comparisons, 99);
        assert_eq!(stats.swaps, 0);
    }

    fn check_partition(keys: &[i64], p: usize) {
        assert!(keys[..p].iter().all(|&k| k <= keys[p]));
        assert!(keys[p + 1..].iter().all(|&k| k >= keys[p]));
    }

    #[test]
    fn partition_three_elements() {
        let mut keys = vec![2, 1, 3];
        let mut payload = vec![0u32, 1, 2];
        let mut stats = SortStats::new();
        let p = partition(&mut keys, &mut payload, &mut stats);
        check_partition(&keys, p);
    }

    #[test]
    fn partition_all_equal_keys() {
        let mut keys = vec![5i64; 4];
        let mut payload = vec![0u32, 1, 2, 3];
        let mut stats = SortStats::new();
        let p = partition(&mut keys, &mut payload, &mut stats);
        assert!(p < 4);
        check_partition(&keys, p);
    }

    #[test]
    fn partition_random_arrays_satisfy_the_property() {
        for seed in 0..64 {
            let (mut keys, mut payload) = det_keys(256, seed);
            let before = pairs(&keys, &payload);
            let mut stats = SortStats::new();
            let p = partition(&mut keys, &mut payload, &mut stats);
            check_partition(&keys, p);
            assert_pairs_conserved(&before, &keys, &payload);
        }
    }

    #[test]
    fn heapsort_sorts_and_conserves_pairs() {
        let (mut keys, mut payload) = det_keys(1000, 5);
        let before = pairs(&keys, &payload);
        let mut stats = SortStats::new();
        heapsort(&mut keys, &mut payload, &mut stats);
        assert!(keys.windows(2).all(|w| w[0] <= w[1]));
        assert_pairs_conserved(&before, &keys, &payload);
    }

    #[test]
    fn introsort_sorts_and_conserves_pairs() {
        for seed in [0, 1, 2, 3] {
            let (mut keys, mut payload) = det_keys(2000, seed);
            let before = pairs(&keys, &payload);
            let mut stats = SortStats::new();
            introsort(&mut keys, &mut payload, &mut stats);
            assert!(keys.windows(2).all(|w| w[0] <= w[1]));
            assert_pairs_conserved(&before, &keys, &payload);
            assert!(stats.array_accesses >= stats.comparisons);
        }
    }

    #[test]
    fn introsort_handles_degenerate_inputs() {
        for keys in [
            vec![],
            vec![7],
            vec![3, 3, 3, 3, 3, 3],
            (0..100).collect(),
            (0..100).rev().collect(),
        ] {
            let mut keys: Vec<i64> = keys;
            let mut payload: Vec<u32> = (0..keys.len() as u32).collect();
            let mut stats = SortStats::new();
            introsort(&mut keys, &mut payload, &mut stats);
            assert!(keys.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn exhausted_depth_limit_falls_back_to_heapsort() {
        let (mut keys, mut payload) = det_keys(500, 11);
        let mut stats = SortStats::new();
        introsort_with(&mut keys, &mut payload, 0, INSERTION_CUTOFF, &mut stats);
        assert_eq!(stats.depth_limit_hits, 1);
        assert!(keys.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn normal_random_input_never_hits_the_depth_limit() {
        let (mut keys, mut payload) = det_keys(5000, 17);
        let mut stats = SortStats::new();
        introsort(&mut keys, &mut payload, &mut stats);
        assert_eq!(stats.depth_limit_hits, 0);
    }

    #[test]
    fn merge_sort_is_stable_by_key() {
        for seed in [0, 1, 2] {
            // Many duplicate keys, distinct payloads: the reference is std's
            // stable sort on (key, original index).
            let (mut keys, mut payload) = det_keys(3000, seed);
            for k in keys.iter_mut() {
                *k = k.rem_euclid(17);
            }
            let mut expected = pairs(&keys, &payload);
            expected.sort_by_key(|&(k, _)| k);
            let mut stats = SortStats::new();
            merge_sort(&mut keys, &mut payload, &mut stats);
            assert_eq!(pairs(&keys, &payload), expected);
        }
    }

    #[test]
    fn merge_sort_on_sorted_input_does_no_merging() {
        let mut keys: Vec<i64> = (0..1000).collect();
        let mut payload: Vec<u32> = (0..1000).collect();
        let mut stats = SortStats::new();
        merge_sort(&mut keys, &mut payload, &mut stats);
        assert_eq!(stats.copies, 0);
        assert!(keys.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn merge_sort_payloads_with_allocation_survive() {
        // String payloads (Drop types) exercise the merge hole guard.
        let mut keys: Vec<i64> = vec![5, 3, 8, 3, 1, 9, 0, 3, 5, 2, 7, 4, 6, 1, 8, 0, 2, 9];
        let mut payload: Vec<String> = keys.iter().map(|k| format!("v{k}")).collect();
        let mut expected: Vec<(i64, String)> =
            keys.iter().cloned().zip(payload.iter().cloned()).collect();
        expected.sort_by_key(|&(k, _)| k);
        let mut stats = SortStats::new();
        merge_sort(&mut keys, &mut payload, &mut stats);
        let got: Vec<(i64, String)> = keys.into_iter().zip(payload).collect();
        assert_eq!(got, expected);
    }
}
