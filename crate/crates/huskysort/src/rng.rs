//! Small deterministic RNG used by the shuffle guard, the perturbed coder and
//! the benchmark input generators.
//!
//! Everything in this crate that consumes randomness takes an explicit `u64`
//! seed and is fully reproducible across platforms, which is exactly what a
//! benchmark harness wants and what `proptest` regressions need. SplitMix64
//! is more than good enough statistically for shuffling and for Bernoulli
//! perturbation draws, and its finalizer doubles as a cheap stateless hash.

/// The SplitMix64 output finalizer: a bijective avalanche mix of one `u64`.
///
/// Used directly as a stateless hash (`PerturbedCoder` hashes `seed ^ key`
/// with it) and internally by the sequential generator below.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Sequential SplitMix64 generator.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    #[inline]
    pub fn next_i64(&mut self) -> i64 {
        self.next_u64() as i64
    }

    /// Uniform draw from `0..n` (rejection sampling, unbiased). `n` must be
    /// nonzero.
    #[inline]
    pub fn next_below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        // Reject the low `2^64 mod n` values so every residue is equally
        // likely.
        let threshold = n.wrapping_neg() % n;
        loop {
            let x = self.next_u64();
            if x >= threshold {
                return x % n;
            }
        }
    }

    /// Uniform draw from the inclusive range `lo..=hi`.
    #[inline]
    pub fn next_range_u64(&mut self, lo: u64, hi: u64) -> u64 {
        debug_assert!(lo <= hi);
        let span = hi - lo;
        if span == u64::MAX {
            return self.next_u64();
        }
        lo + self.next_below(span + 1)
    }

    /// Uniform `f64` in `[0, 1)` with 53 random bits.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Fisher–Yates shuffle driven by the given generator; uniform over all
/// permutations.
pub fn shuffle<T>(xs: &mut [T], rng: &mut SplitMix64) {
    for i in (1..xs.len()).rev() {
        let j = rng.next_below(i as u64 + 1) as usize;
        xs.swap(i, j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mix64_is_deterministic_and_scrambles() {
        assert_eq!(mix64(1), mix64(1));
        assert_ne!(mix64(1), mix64(2));
        // Known value of the splitmix64 reference sequence from seed 0: the
        // first output equals mix64 applied to the advanced state.
        let mut g = SplitMix64::new(0);
        assert_eq!(g.next_u64(), mix64(0));
    }

    #[test]
    fn next_below_stays_in_range_and_hits_everything() {
        let mut g = SplitMix64::new(42);
        let mut seen = [false; 7];
        for _ in 0..500 {
            seen[g.next_below(7) as usize] = true;
        }
        assert!(seen.iter().all(|&b| b));
    }

    #[test]
    fn next_range_covers_endpoints() {
        let mut g = SplitMix64::new(7);
        let mut lo_seen = false;
        let mut hi_seen = false;
        for _ in 0..1000 {
            match g.next_range_u64(3, 5) {
                3 => lo_seen = true,
                5 => hi_seen = true,
                4 => {}
                other => panic!("out of range: {other}"),
            }
        }
        assert!(lo_seen && hi_seen);
    }

    #[test]
    fn next_f64_is_in_unit_interval() {
        let mut g = SplitMix64::new(9);
        for _ in 0..1000 {
            let x = g.next_f64();
            assert!((0.0..1.0).contains(&x));
        }
    }

    #[test]
    fn shuffle_is_a_permutation_and_seed_stable() {
        let mut a: Vec<u32> = (0..100).collect();
        let mut b = a.clone();
        shuffle(&mut a, &mut SplitMix64::new(13));
        shuffle(&mut b, &mut SplitMix64::new(13));
        assert_eq!(a, b);
        let mut sorted = a.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..100).collect::<Vec<_>>());
        assert_ne!(a, sorted, "a 100-element shuffle should move something");
    }
}
