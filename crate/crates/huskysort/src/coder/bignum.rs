//! Coders for arbitrary-precision numbers. Unbounded magnitudes cannot
//! embed strictly into 64 bits, so both coders are *weakly* monotone by
//! construction and never claim perfection: values close enough together
//! (or far enough out) share keys, and the cleanup pass finishes the job.

use num_bigint::{BigInt, BigUint, Sign};

use super::HuskyCoder;
use crate::decimal::{pow10, BigDecimal};

/// Magnitudes of up to this many bits map to their exact value.
const EXACT_BITS: u64 = 62;
/// Mantissa bits kept in the approximate (large-magnitude) regime.
const MANT_BITS: u64 = 42;
const MANT_MASK: u64 = (1 << MANT_BITS) - 1;
/// The bit-length field of the approximate regime saturates here.
const LENGTH_FIELD_MAX: u64 = (1 << 20) - 1;

fn low_u64(x: &BigUint) -> u64 {
    debug_assert!(x.bits() <= 64);
    x.iter_u64_digits().next().unwrap_or(0)
}

/// Key an integer by value when `|x| < 2^62`, and otherwise by
/// `sign · (2^62 + (bit-length − 62 | top mantissa bits))`: magnitude-first,
/// then leading bits, with collisions once values agree in both. Weakly
/// monotone for all integers.
pub fn big_int_to_long(x: &BigInt) -> i64 {
    let mag = x.magnitude();
    let bits = mag.bits();
    let key_mag: i64 = if bits == 0 {
        0
    } else if bits <= EXACT_BITS {
        low_u64(mag) as i64
    } else {
        let top = low_u64(&(mag >> (bits - (MANT_BITS + 1)) as usize));
        let mant = (top & MANT_MASK) as i64; // implicit leading bit dropped
        let lfield = (bits - EXACT_BITS).min(LENGTH_FIELD_MAX) as i64;
        (1i64 << 62) | (lfield << (MANT_BITS as u32)) | mant
    };
    if x.sign() == Sign::Minus {
        -key_mag
    } else {
        key_mag
    }
}

/// [`big_int_to_long`] as a coder. Never perfect: the type-level claim has
/// to cover magnitudes the key can't represent exactly.
#[derive(Debug, Clone, Copy, Default)]
pub struct BigIntCoder;

impl HuskyCoder<BigInt> for BigIntCoder {
    fn encode(&self, x: &BigInt) -> i64 {
        big_int_to_long(x)
    }

    fn perfect(&self) -> bool {
        false
    }
}

/// Biased binary-exponent field width: exponents in `(-2^20, 2^20)` are
/// exact, everything beyond saturates.
const E_BIAS: i128 = 1 << 20;
const E_FIELD_MAX: i128 = (1 << 21) - 1;
/// `log₂ 10` rounded *up* at denominator 2^16, for safe magnitude bounds.
const LOG2_10_NUM: i128 = 217_706;
const LOG2_10_DEN: i128 = 1 << 16;

/// Key a decimal by sign, then biased binary exponent (21 bits), then the
/// top 42 mantissa bits: `sign · (e_field << 42 | mantissa)`. Weakly
/// monotone for all values; strict whenever two same-sign values differ
/// within their top 42 mantissa bits (about 12 significant decimal digits)
/// and neither exponent saturates.
pub fn big_decimal_to_long(x: &BigDecimal) -> i64 {
    if x.is_zero() {
        return 0;
    }
    let mag = magnitude_key(x.unscaled().magnitude(), x.scale());
    if x.unscaled().sign() == Sign::Minus {
        -mag
    } else {
        mag
    }
}

/// Key of `u · 10^(-scale)` for nonzero `u`, as a non-negative i64.
fn magnitude_key(u: &BigUint, scale: i64) -> i64 {
    let bits = u.bits() as i128;
    let scale = scale as i128;
    // Bracket e2 = ⌊log₂ value⌋ without materializing the value, so that
    // absurd scales saturate cheaply instead of building 10^|scale|.
    let e2_hi = bits + (-scale) * LOG2_10_NUM / LOG2_10_DEN + 2;
    let e2_lo = (bits - 1) - 1 + (-scale) * LOG2_10_NUM / LOG2_10_DEN - 2;
    if e2_lo + E_BIAS > E_FIELD_MAX {
        return i64::MAX; // saturated high: every such value shares the top key
    }
    if e2_hi + E_BIAS < 0 {
        return 0; // saturated low: collapses onto the zero key
    }
    // Exact path. |scale| is now bounded by ~(2^20 + bits)/3.3, so the
    // power of ten stays a few hundred kilobits at the very worst.
    let (e2, mant) = if scale <= 0 {
        let v = u * pow10((-scale) as u32);
        let vbits = v.bits();
        let top = if vbits > MANT_BITS {
            low_u64(&(&v >> (vbits - (MANT_BITS + 1)) as usize))
        } else {
            low_u64(&v) << (MANT_BITS + 1 - vbits)
        };
        (vbits as i128 - 1, top & MANT_MASK)
    } else {
        let d = pow10(scale as u32);
        let (ubits, dbits) = (u.bits() as i128, d.bits() as i128);
        // value ∈ [2^(e-1), 2^(e+1)) for e = ubits - dbits; one comparison
        // settles which binade.
        let mut e2 = ubits - dbits;
        let ge = if e2 >= 0 {
            *u >= (&d << e2 as usize)
        } else {
            (u << (-e2) as usize) >= d
        };
        if !ge {
            e2 -= 1;
        }
        // q = ⌊value · 2^(42 - e2)⌋ ∈ [2^42, 2^43); nested floors are exact.
        let q: BigUint = if e2 <= MANT_BITS as i128 {
            (u << (MANT_BITS as i128 - e2) as usize) / &d
        } else {
            (u >> (e2 - MANT_BITS as i128) as usize) / &d
        };
        (e2, low_u64(&q) & MANT_MASK)
    };
    let e_field = e2 + E_BIAS;
    if e_field < 0 {
        0
    } else if e_field > E_FIELD_MAX {
        i64::MAX
    } else {
        ((e_field as i64) << (MANT_BITS as u32)) | mant as i64
    }
}

/// [`big_decimal_to_long`] as a coder; never perfect, like [`BigIntCoder`].
#[derive(Debug, Clone, Copy, Default)]
pub struct BigDecimalCoder;

impl HuskyCoder<BigDecimal> for BigDecimalCoder {
    fn encode(&self, x: &BigDecimal) -> i64 {
        big_decimal_to_long(x)
    }

    fn perfect(&self) -> bool {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use alloc::vec::Vec;
    use num_bigint::BigInt;

    #[test]
    fn small_integers_key_exactly() {
        for v in [0i64, 1, -1, 42, -873_411, (1 << 62) - 1, -((1 << 62) - 1)] {
            assert_eq!(big_int_to_long(&BigInt::from(v)), v);
        }
    }

    #[test]
    fn large_integers_collide_but_never_invert() {
        let a = BigInt::from(1u64) << 62;
        let b = &a + 1;
        let c = BigInt::from(1u64) << 63;
        assert_eq!(big_int_to_long(&a), big_int_to_long(&b)); // same top bits
        assert!(big_int_to_long(&a) > big_int_to_long(&(&a - 1))); // regime boundary ordered
        assert!(big_int_to_long(&c) > big_int_to_long(&a)); // longer ⇒ larger key
        assert_eq!(big_int_to_long(&(-&a)), -big_int_to_long(&a));
    }

    fn random_bigint(rng: &mut SplitMix64) -> BigInt {
        let bits = rng.next_below(200);
        let mut v = BigInt::from(0);
        for _ in 0..(bits / 64 + 1) {
            v = (v << 64) | BigInt::from(rng.next_u64());
        }
        v &= (BigInt::from(1) << bits as usize) - 1;
        if rng.next_below(2) == 0 {
            v = -v;
        }
        v
    }

    #[test]
    fn bigint_keys_are_weakly_monotone() {
        let mut rng = SplitMix64::new(77);
        let values: Vec<BigInt> = (0..600).map(|_| random_bigint(&mut rng)).collect();
        for a in &values {
            for b in values.iter().take(80) {
                let (ka, kb) = (big_int_to_long(a), big_int_to_long(b));
                match a.cmp(b) {
                    core::cmp::Ordering::Less => assert!(ka <= kb, "{a} vs {b}"),
                    core::cmp::Ordering::Equal => assert_eq!(ka, kb),
                    core::cmp::Ordering::Greater => assert!(ka >= kb, "{a} vs {b}"),
                }
            }
        }
    }

    fn dec(s: &str) -> BigDecimal {
        s.parse().unwrap()
    }

    #[test]
    fn decimal_mantissa_bits_distinguish_close_values() {
        assert!(big_decimal_to_long(&dec("1.25")) < big_decimal_to_long(&dec("1.5")));
        assert_ne!(
            big_decimal_to_long(&dec("1.25")),
            big_decimal_to_long(&dec("1.5"))
        );
        assert_eq!(big_decimal_to_long(&dec("0")), 0);
        assert_eq!(
            big_decimal_to_long(&dec("-1.5")),
            -big_decimal_to_long(&dec("1.5"))
        );
    }

    #[test]
    fn decimal_exponent_field_separates_huge_values() {
        let huge = BigDecimal::new(BigInt::from(1), -400); // 10^400
        let twice = BigDecimal::new(BigInt::from(2), -400);
        let k1 = big_decimal_to_long(&huge);
        let k2 = big_decimal_to_long(&twice);
        assert!(k1 < k2, "{k1} vs {k2}");
        assert!(k1 > 0);
    }

    #[test]
    fn decimal_absurd_scales_saturate_without_blowup() {
        let enormous = BigDecimal::new(BigInt::from(3), -10_000_000); // 3·10^10^7
        let negative = BigDecimal::new(BigInt::from(-3), -10_000_000);
        let infinitesimal = BigDecimal::new(BigInt::from(3), 10_000_000);
        assert_eq!(big_decimal_to_long(&enormous), i64::MAX);
        assert_eq!(big_decimal_to_long(&infinitesimal), 0);
        assert_eq!(big_decimal_to_long(&negative), i64::MIN + 1);
    }

    #[test]
    fn decimal_keys_are_weakly_monotone_and_strict_at_12_digits() {
        let mut rng = SplitMix64::new(31);
        let mut values: Vec<BigDecimal> = Vec::new();
        for _ in 0..400 {
            let digits = 1 + rng.next_below(20);
            let mut mag = BigUint::from(0u32);
            for _ in 0..digits {
                mag = mag * 10u32 + BigUint::from(rng.next_below(10));
            }
            let scale = rng.next_below(31) as i64 - 15;
            let sign = if rng.next_below(2) == 0 {
                Sign::Plus
            } else {
                Sign::Minus
            };
            values.push(BigDecimal::new(BigInt::from_biguint(sign, mag), scale));
        }
        values.sort();
        for w in values.windows(2) {
            let (ka, kb) = (big_decimal_to_long(&w[0]), big_decimal_to_long(&w[1]));
            assert!(ka <= kb, "{} vs {}", w[0], w[1]);
        }
        // Same magnitude, differing within 12 significant digits: strict.
        let a = dec("123456789011e-5");
        let b = dec("123456789012e-5");
        assert!(big_decimal_to_long(&a) < big_decimal_to_long(&b));
    }
}
