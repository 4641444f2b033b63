//! Coders for machine numeric types. All three are perfect: their keys are
//! strict order embeddings for every value of the type.

use ordered_float::OrderedFloat;

use super::HuskyCoder;

/// Identity coder for `i64`.
#[derive(Debug, Clone, Copy, Default)]
pub struct LongCoder;

impl HuskyCoder<i64> for LongCoder {
    fn encode(&self, x: &i64) -> i64 {
        *x
    }

    fn perfect(&self) -> bool {
        true
    }
}

/// Widening coder for `i32`.
#[derive(Debug, Clone, Copy, Default)]
pub struct IntCoder;

impl HuskyCoder<i32> for IntCoder {
    fn encode(&self, x: &i32) -> i64 {
        *x as i64
    }

    fn perfect(&self) -> bool {
        true
    }
}

const F64_SIGN: u64 = 1 << 63;

/// Map an `f64` to an `i64` whose integer order matches the total order
/// used by [`OrderedFloat`]: all NaNs collapse to `i64::MAX` (above
/// everything, in particular above the +∞ key), `-0.0` and `0.0` both map
/// to 0, and everything else keys by its IEEE bits — non-negative floats
/// order like their raw bits, negative floats like the negated magnitude
/// bits.
pub fn double_to_long(x: f64) -> i64 {
    if x.is_nan() {
        return i64::MAX;
    }
    let bits = x.to_bits();
    if bits & F64_SIGN == 0 {
        bits as i64
    } else {
        -((bits ^ F64_SIGN) as i64)
    }
}

/// Perfect coder for [`OrderedFloat<f64>`] via [`double_to_long`].
#[derive(Debug, Clone, Copy, Default)]
pub struct DoubleCoder;

impl HuskyCoder<OrderedFloat<f64>> for DoubleCoder {
    fn encode(&self, x: &OrderedFloat<f64>) -> i64 {
        double_to_long(x.0)
    }

    fn perfect(&self) -> bool {
        true
    }
}
