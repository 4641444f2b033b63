//! Fault injection for coders: replace a fraction `q` of keys with
//! pseudorandom garbage to study how the sort pipeline degrades as coding
//! quality falls.
//!
//! The decision and the replacement key are a stateless hash of
//! `(seed, inner key)`, which buys three properties a stateful RNG would
//! lose: equal elements still get equal keys (the coder equality contract
//! survives perturbation), repeated calls agree with each other, and there
//! is no shared mutable state.

use super::{Coding, HuskyCoder};
use crate::rng::mix64;

/// Perturb `key` with probability `q`: returns a hash-derived replacement
/// key, or `key` itself. Deterministic in `(key, q, seed)`.
pub fn perturb(key: i64, q: f64, seed: u64) -> i64 {
    perturb_threshold(key, threshold(q), seed)
}

/// `q` scaled to a 64-bit acceptance threshold; u128 so that `q = 1`
/// exceeds every hash value.
fn threshold(q: f64) -> u128 {
    assert!(
        q.is_finite() && (0.0..=1.0).contains(&q),
        "q must be in [0, 1]"
    );
    (q * 18_446_744_073_709_551_616.0) as u128 // q · 2^64, exact at both ends
}

fn perturb_threshold(key: i64, threshold: u128, seed: u64) -> i64 {
    if threshold == 0 {
        return key;
    }
    let h = mix64(seed ^ mix64(key as u64));
    if (h as u128) < threshold {
        mix64(h) as i64
    } else {
        key
    }
}

/// Wrap an inner coder, replacing each key with hash garbage with
/// probability `q`. With `q = 0` this is exactly the inner coder, claims
/// and all; with `q > 0` nothing is perfect anymore.
#[derive(Debug, Clone)]
pub struct PerturbedCoder<C> {
    inner: C,
    threshold: u128,
    seed: u64,
}

impl<C> PerturbedCoder<C> {
    pub fn new(inner: C, q: f64, seed: u64) -> Self {
        Self {
            inner,
            threshold: threshold(q),
            seed,
        }
    }
}

impl<T, C: HuskyCoder<T>> HuskyCoder<T> for PerturbedCoder<C> {
    fn encode(&self, x: &T) -> i64 {
        perturb_threshold(self.inner.encode(x), self.threshold, self.seed)
    }

    fn perfect(&self) -> bool {
        self.threshold == 0 && self.inner.perfect()
    }

    fn key_bits(&self) -> u32 {
        if self.threshold == 0 {
            self.inner.key_bits()
        } else {
            64
        }
    }

    fn encode_all(&self, xs: &[T]) -> Coding {
        if self.threshold == 0 {
            // Exactly the inner coder, including its per-array perfection
            // logic (string length checks and the like).
            return self.inner.encode_all(xs);
        }
        Coding {
            keys: xs.iter().map(|x| self.encode(x)).collect(),
            perfect: false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coder::{AsciiCoder, LongCoder};
    use alloc::string::ToString;
    use alloc::vec::Vec;

    #[test]
    fn q_zero_is_the_identity_wrapper() {
        let coder = PerturbedCoder::new(LongCoder, 0.0, 99);
        for v in [0i64, 5, -5, i64::MAX, i64::MIN] {
            assert_eq!(coder.encode(&v), v);
        }
        assert!(coder.perfect());
        // Sequence-aware perfection is delegated untouched.
        let words: Vec<_> = ["short", "reasonable"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let plain = AsciiCoder.encode_all(&words);
        let wrapped = PerturbedCoder::new(AsciiCoder, 0.0, 7).encode_all(&words);
        assert_eq!(plain.keys, wrapped.keys);
        assert_eq!(plain.perfect, wrapped.perfect);
    }

    #[test]
    fn q_one_perturbs_everything() {
        let coder = PerturbedCoder::new(LongCoder, 1.0, 3);
        let changed = (0..1000i64).filter(|v| coder.encode(v) != *v).count();
        assert_eq!(changed, 1000);
        assert!(!coder.perfect());
    }

    #[test]
    fn perturbed_fraction_tracks_q() {
        let coder = PerturbedCoder::new(LongCoder, 0.25, 1234);
        let n = 10_000i64;
        let changed = (0..n).filter(|v| coder.encode(v) != *v).count() as f64 / n as f64;
        assert!((0.23..=0.27).contains(&changed), "fraction {changed}");
    }

    #[test]
    fn decisions_are_per_key_deterministic_and_equality_preserving() {
        let coder = PerturbedCoder::new(LongCoder, 0.5, 42);
        for v in [-3i64, 0, 17, 1 << 40] {
            assert_eq!(coder.encode(&v), coder.encode(&v));
            assert_eq!(coder.encode(&v), perturb(v, 0.5, 42));
        }
        // A different seed reshuffles which keys get hit.
        let other = PerturbedCoder::new(LongCoder, 0.5, 43);
        let same = (0..1000i64)
            .filter(|v| coder.encode(v) == other.encode(v))
            .count();
        assert!(
            same < 900,
            "seeds should disagree somewhere, agreed on {same}"
        );
    }

    #[test]
    #[should_panic]
    fn q_out_of_range_is_rejected() {
        let _ = PerturbedCoder::new(LongCoder, 1.5, 0);
    }
}
