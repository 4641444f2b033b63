//! Deterministic benchmark-input generators, one per element family.
//!
//! Everything is driven by [`SplitMix64`], so a `(family, n, seed)` triple
//! always reproduces the same array. Numeric families sample uniformly from
//! the type's representable values (doubles: finite ones); word families
//! sample a corpus with replacement or synthesize CJK words.

use anyhow::{ensure, Result};
use num_bigint::BigInt;
use ordered_float::OrderedFloat;

use huskysort::coder::NanoTimestamp;
use huskysort::decimal::BigDecimal;
use huskysort::rng::SplitMix64;

/// `n` words sampled with replacement from `corpus`, restricted to its
/// ASCII-alphabetic entries (a corpus file may also carry CJK words; the
/// *English words* family should not).
pub fn english_words(corpus: &[String], n: usize, seed: u64) -> Result<Vec<String>> {
    let english: Vec<&String> = corpus
        .iter()
        .filter(|w| w.bytes().all(|b| b.is_ascii_alphabetic()))
        .collect();
    ensure!(
        !english.is_empty(),
        "corpus has no English words to sample from"
    );
    let mut rng = SplitMix64::new(seed);
    Ok((0..n)
        .map(|_| english[rng.next_below(english.len() as u64) as usize].clone())
        .collect())
}

/// `n` synthetic Chinese words: 1–4 code points from the CJK Unified
/// Ideographs block (U+4E00..=U+9FFF).
pub fn unicode_cjk(n: usize, seed: u64) -> Vec<String> {
    const FIRST: u32 = 0x4E00;
    const LAST: u32 = 0x9FFF;
    let mut rng = SplitMix64::new(seed);
    (0..n)
        .map(|_| {
            let len = 1 + rng.next_below(4);
            (0..len)
                .map(|_| {
                    char::from_u32(FIRST + rng.next_below((LAST - FIRST + 1) as u64) as u32)
                        .unwrap()
                })
                .collect()
        })
        .collect()
}

/// `n` random printable-ASCII words of length 1–12 (letters, both cases).
pub fn ascii_random(n: usize, seed: u64) -> Vec<String> {
    let mut rng = SplitMix64::new(seed);
    (0..n)
        .map(|_| {
            let len = 1 + rng.next_below(12) as usize;
            (0..len)
                .map(|_| {
                    let i = rng.next_below(52) as u8;
                    char::from(if i < 26 { b'a' + i } else { b'A' + i - 26 })
                })
                .collect()
        })
        .collect()
}

/// `n` uniform `i64` values.
pub fn longs(n: usize, seed: u64) -> Vec<i64> {
    let mut rng = SplitMix64::new(seed);
    (0..n).map(|_| rng.next_i64()).collect()
}

/// `n` uniform `i32` values.
pub fn ints(n: usize, seed: u64) -> Vec<i32> {
    let mut rng = SplitMix64::new(seed);
    (0..n).map(|_| rng.next_u64() as i32).collect()
}

/// `n` doubles drawn uniformly from the finite bit patterns.
pub fn doubles(n: usize, seed: u64) -> Vec<OrderedFloat<f64>> {
    let mut rng = SplitMix64::new(seed);
    (0..n)
        .map(|_| loop {
            let x = f64::from_bits(rng.next_u64());
            if x.is_finite() {
                break OrderedFloat(x);
            }
        })
        .collect()
}

/// `n` random big integers of up to 128 bits, signs balanced. Comfortably
/// spans both the exact (≤ 62-bit) and approximated key regimes.
pub fn bigints(n: usize, seed: u64) -> Vec<BigInt> {
    let mut rng = SplitMix64::new(seed);
    (0..n)
        .map(|_| {
            let bits = rng.next_below(129);
            let mut mag = BigInt::default();
            for _ in 0..bits.div_ceil(64) {
                mag = (mag << 64) | BigInt::from(rng.next_u64());
            }
            // Trim to the chosen bit length, then pick a sign.
            mag &= (BigInt::from(1) << bits as usize) - 1;
            if rng.next_below(2) == 0 {
                mag
            } else {
                -mag
            }
        })
        .collect()
}

/// `n` random decimals: a uniform 64-bit unscaled part with a scale in
/// −20..=20, so magnitudes range over roughly 10^±39.
pub fn bigdecimals(n: usize, seed: u64) -> Vec<BigDecimal> {
    let mut rng = SplitMix64::new(seed);
    (0..n)
        .map(|_| {
            let unscaled = BigInt::from(rng.next_i64());
            let scale = rng.next_below(41) as i64 - 20;
            BigDecimal::new(unscaled, scale)
        })
        .collect()
}

/// `n` timestamps uniform over ±100 years around the epoch — inside the
/// date coder's window, so date benchmarks exercise the perfect-skip path.
pub fn dates(n: usize, seed: u64) -> Vec<NanoTimestamp> {
    const HUNDRED_YEARS_NS: i128 = 100 * 365 * 24 * 3600 * 1_000_000_000;
    let mut rng = SplitMix64::new(seed);
    (0..n)
        .map(|_| {
            // Rejection-free: draw 64-bit, scale into the window.
            let span = (2 * HUNDRED_YEARS_NS) as u128;
            let offset = (rng.next_u64() as u128) * span / (u64::MAX as u128 + 1);
            NanoTimestamp(offset as i128 - HUNDRED_YEARS_NS)
        })
        .collect()
}

/// `n` (small int, short word) pairs for the tuple family: first fields
/// collide often (range 0..100) so the second field actually matters.
pub fn tuples(n: usize, seed: u64) -> Vec<(i64, String)> {
    let mut rng = SplitMix64::new(seed);
    let words = ascii_random(n, rng.next_u64());
    words
        .into_iter()
        .map(|w| (rng.next_below(100) as i64, w))
        .collect()
}
