//! Instrumentation-side analysis: inversion counting and the array-access
//! cost model that predicts when husky-coded sorting beats a plain stable
//! merge sort.
//!
//! The model counts *array accesses* (reads + writes) rather than time. For
//! a classic merge sort the count is `merge_linearithmic_coeff·N·ln N +
//! copies_linear_coeff·N`; for the husky pipeline it is
//!
//! ```text
//! (husky_linearithmic_coeff·ln N + (2 + j + 4)·p + k + 1) · N
//! ```
//!
//! where `j` is the number of extra fields read per comparison, `k` the
//! accesses needed to encode one element, and `p` the expected fraction of
//! residual inversions relative to a random permutation. The conventional
//! headline value of the husky coefficient is 6.4; the tabulated break-even
//! figures are reproduced exactly by the slightly larger fitted value
//! [`FITTED_LINEARITHMIC_COEFF`].

use alloc::vec::Vec;

/// Husky-model linearithmic coefficient that reproduces the tabulated
/// break-even figures to within 0.05%; the coarser headline value is 6.4.
pub const FITTED_LINEARITHMIC_COEFF: f64 = 20.0 / 3.0;

/// `estimate_p` clamps its ratio to `1 + P_ESTIMATE_EPSILON` so that
/// adversarially inverted inputs (ratio 2 at full reversal) don't masquerade
/// as meaningful disorder estimates.
pub const P_ESTIMATE_EPSILON: f64 = 0.05;

/// Count strict inversions — pairs `i < j` with `xs[i] > xs[j]` — by merge
/// counting over an index array. `O(n log n)`; equal elements never count.
pub fn count_inversions<T: Ord>(xs: &[T]) -> u64 {
    let n = xs.len();
    if n < 2 {
        return 0;
    }
    let mut idx: Vec<u32> = (0..n as u32).collect();
    let mut tmp: Vec<u32> = idx.clone();
    let mut inversions = 0u64;
    let mut width = 1;
    while width < n {
        let mut lo = 0;
        while lo + width < n {
            let mid = lo + width;
            let hi = (lo + 2 * width).min(n);
            // Merge idx[lo..mid] and idx[mid..hi] into tmp, counting how
            // many left elements each right element jumps over.
            let (mut a, mut b, mut out) = (lo, mid, lo);
            while a < mid && b < hi {
                if xs[idx[b] as usize] < xs[idx[a] as usize] {
                    inversions += (mid - a) as u64;
                    tmp[out] = idx[b];
                    b += 1;
                } else {
                    tmp[out] = idx[a];
                    a += 1;
                }
                out += 1;
            }
            tmp[out..out + (mid - a)].copy_from_slice(&idx[a..mid]);
            let out = out + (mid - a);
            tmp[out..out + (hi - b)].copy_from_slice(&idx[b..hi]);
            lo = hi;
        }
        // Copy any unpaired tail so idx and tmp agree before the roles flip.
        if lo < n {
            tmp[lo..n].copy_from_slice(&idx[lo..n]);
        }
        core::mem::swap(&mut idx, &mut tmp);
        width *= 2;
    }
    inversions
}

/// Expected inversions of a uniformly random permutation of `n` distinct
/// elements: `n(n-1)/4`.
pub fn expected_random_inversions(n: u64) -> f64 {
    n as f64 * (n as f64 - 1.0) / 4.0
}

/// Parameters of the access-cost model. `j`, `k` and `p` are as in the
/// module docs; the two linearithmic coefficients and the linear copy
/// coefficient are kept as plain fields so callers can refit them.
#[derive(Debug, Clone, PartialEq)]
pub struct CostModelParams {
    /// Extra fields read per element comparison in the baseline sort.
    pub j: f64,
    /// Array accesses to husky-encode one element.
    pub k: f64,
    /// Residual inversions after the key phase, as a fraction of the
    /// `n(n-1)/4` expected for a random permutation.
    pub p: f64,
    /// Coefficient of `N·ln N` in the husky model (headline value 6.4).
    pub husky_linearithmic_coeff: f64,
    /// Coefficient of `N·ln N` in the merge model; `(4 + j)·log₂e` rounded
    /// to one decimal, i.e. 11.5 for the default `j = 4`.
    pub merge_linearithmic_coeff: f64,
    /// Coefficient of the linear copy term in the merge model.
    pub copies_linear_coeff: f64,
}

impl Default for CostModelParams {
    fn default() -> Self {
        Self::with_jkp(4.0, 7.0, 0.1)
    }
}

impl CostModelParams {
    /// Build params from `j`, `k`, `p`, deriving the merge coefficient as
    /// `(4 + j)·log₂e` rounded to one decimal (11.5 at `j = 4`) and leaving
    /// the husky coefficient at its headline 6.4.
    pub fn with_jkp(j: f64, k: f64, p: f64) -> Self {
        let merge = libm::round((4.0 + j) * core::f64::consts::LOG2_E * 10.0) / 10.0;
        Self {
            j,
            k,
            p,
            husky_linearithmic_coeff: 6.4,
            merge_linearithmic_coeff: merge,
            copies_linear_coeff: 2.0,
        }
    }
}

/// Modeled array accesses of a classic merge sort of `n` elements.
pub fn model_merge_accesses(n: u64, params: &CostModelParams) -> f64 {
    let nf = n as f64;
    params.merge_linearithmic_coeff * nf * libm::log(nf) + params.copies_linear_coeff * nf
}

/// Modeled array accesses of the husky pipeline on `n` elements.
pub fn model_husky_accesses(n: u64, params: &CostModelParams) -> f64 {
    let nf = n as f64;
    (params.husky_linearithmic_coeff * libm::log(nf)
        + (2.0 + params.j + 4.0) * params.p
        + params.k
        + 1.0)
        * nf
}

/// Wall-time decomposition of the husky pipeline under a three-phase linear
/// model: encode `k₁·N`, key sort `2·k₂·N·ln N`, cleanup
/// `k₃·(N + p·N(N-1)/4)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseTimes {
    pub encode: f64,
    pub key_sort: f64,
    pub cleanup: f64,
    pub total: f64,
}

/// Evaluate the three-phase time model at `n` with unit costs `k1..k3` and
/// residual-inversion fraction `p`.
pub fn phase_time_model(n: u64, k1: f64, k2: f64, k3: f64, p: f64) -> PhaseTimes {
    let nf = n as f64;
    let encode = k1 * nf;
    let key_sort = if n < 2 {
        0.0
    } else {
        2.0 * k2 * nf * libm::log(nf)
    };
    let cleanup = k3 * (nf + p * expected_random_inversions(n));
    PhaseTimes {
        encode,
        key_sort,
        cleanup,
        total: encode + key_sort + cleanup,
    }
}

/// Estimate the residual-inversion fraction `p` of an array by counting its
/// inversions against the `n(n-1)/4` random expectation. Clamped to
/// `[0, 1 + P_ESTIMATE_EPSILON]`; arrays shorter than 2 report 0.
pub fn estimate_p<T: Ord>(xs: &[T]) -> f64 {
    if xs.len() < 2 {
        return 0.0;
    }
    let expected = expected_random_inversions(xs.len() as u64);
    let ratio = count_inversions(xs) as f64 / expected;
    ratio.min(1.0 + P_ESTIMATE_EPSILON)
}
