//! Husky coders: map elements to 64-bit keys whose order approximates the
//! element order.
//!
//! The contract every coder must honor:
//!
//! * **equality** — equal elements always get equal keys;
//! * **weak monotonicity on the coder's domain** — `x < y` implies
//!   `encode(x) ≤ encode(y)` for elements the coder is designed for. Order
//!   may collapse (collisions), it must not invert.
//!
//! A coder whose keys form a *strict* order embedding may additionally claim
//! perfection, which lets the sort pipeline skip its cleanup pass entirely,
//! so a wrong claim turns into wrong sort output. Fixed-width coders
//! ([`LongCoder`], [`DoubleCoder`]) claim it unconditionally; string coders
//! claim it per array, by checking that every string is inside the coder's
//! lossless domain (see [`encode_sequences`]); the big-number coders never
//! claim it.
//!
//! Off-domain inputs are deliberately fine: the keys may collide or even
//! invert, and the cleanup pass still produces a correct sort — only
//! perfection claims have to be conservative.

use alloc::string::String;
use alloc::vec::Vec;

mod bignum;
mod datetime;
mod numeric;
mod perturb;
mod strings;
mod tuple;

pub use bignum::{big_decimal_to_long, big_int_to_long, BigDecimalCoder, BigIntCoder};
pub use datetime::{date_time_to_long, DateTimeCoder, NanoTimestamp};
pub use numeric::{double_to_long, DoubleCoder, IntCoder, LongCoder};
pub use perturb::{perturb, PerturbedCoder};
pub use strings::{
    ascii_to_long, english6_to_long, english_to_long, string_to_long, unicode_to_long, AsciiCoder,
    English6Coder, EnglishCoder, StringCoderParams, UnicodeCoder, BITS_PER_LONG, BIT_WIDTH_ASCII,
    BIT_WIDTH_ENGLISH, BIT_WIDTH_ENGLISH6, BIT_WIDTH_UNICODE, MASK_ASCII, MASK_ENGLISH,
    MASK_ENGLISH6, MASK_UNICODE, MAX_LENGTH_ASCII, MAX_LENGTH_ENGLISH, MAX_LENGTH_ENGLISH6,
    MAX_LENGTH_UNICODE,
};
pub use tuple::{SmallIntCoder, TupleCoder, TupleCoderError, TuplePart};

/// The keys for one array, plus whether the coding is a strict order
/// embedding for exactly this array (in which case the key sort alone
/// produces the correct order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coding {
    pub keys: Vec<i64>,
    pub perfect: bool,
}

/// An element-to-key encoder. See the module docs for the contract.
pub trait HuskyCoder<T> {
    /// The key for one element.
    fn encode(&self, x: &T) -> i64;

    /// Type-level perfection claim: true when keys of *on-domain* elements
    /// form a strict order embedding. Length-dependent coders return their
    /// optimistic claim here and narrow it per array in [`encode_all`]
    /// (see [`encode_sequences`]).
    ///
    /// [`encode_all`]: HuskyCoder::encode_all
    fn perfect(&self) -> bool;

    /// How many high-order bits of the sign-biased key carry information:
    /// the smallest `b` such that truncating every key to its top `b` bits
    /// preserves whatever injectivity the coder has. Full-width coders
    /// report 64; [`SmallIntCoder`] reports its configured width. Used by
    /// [`TupleCoder`] to decide whether a part fits its bit budget.
    fn key_bits(&self) -> u32 {
        64
    }

    /// Encode a whole array. The default trusts the type-level claim
    /// ([`encode_array`]); coders whose perfection depends on the concrete
    /// values override this.
    fn encode_all(&self, xs: &[T]) -> Coding {
        encode_array(xs, self)
    }
}

/// Encode an array with a fixed-width coder: keys element-wise, perfection
/// straight from the coder's type-level claim. For length-dependent string
/// coders use [`encode_sequences`] (or the coder's `encode_all`, which
/// routes there) — this function would take their optimistic claim at face
/// value.
pub fn encode_array<T, C: HuskyCoder<T> + ?Sized>(xs: &[T], coder: &C) -> Coding {
    Coding {
        keys: xs.iter().map(|x| coder.encode(x)).collect(),
        perfect: coder.perfect(),
    }
}

// Forwarding impls so coders compose behind references and boxes (e.g.
// wrapping a `Box<dyn HuskyCoder<T>>` in a [`PerturbedCoder`]).
impl<T, C: HuskyCoder<T> + ?Sized> HuskyCoder<T> for &C {
    fn encode(&self, x: &T) -> i64 {
        (**self).encode(x)
    }
    fn perfect(&self) -> bool {
        (**self).perfect()
    }
    fn key_bits(&self) -> u32 {
        (**self).key_bits()
    }
    fn encode_all(&self, xs: &[T]) -> Coding {
        (**self).encode_all(xs)
    }
}

impl<T, C: HuskyCoder<T> + ?Sized> HuskyCoder<T> for alloc::boxed::Box<C> {
    fn encode(&self, x: &T) -> i64 {
        (**self).encode(x)
    }
    fn perfect(&self) -> bool {
        (**self).perfect()
    }
    fn key_bits(&self) -> u32 {
        (**self).key_bits()
    }
    fn encode_all(&self, xs: &[T]) -> Coding {
        (**self).encode_all(xs)
    }
}

/// A string coder whose perfection depends on each string's length and
/// character repertoire.
pub trait SequenceCoder: HuskyCoder<String> {
    /// True when strings of this UTF-16 length encode losslessly.
    fn perfect_for_length(&self, len: usize) -> bool;

    /// True when the string lies in the coder's strictly-embedded domain
    /// (character repertoire only; length is checked separately).
    fn on_domain(&self, s: &str) -> bool;
}

/// Encode an array of strings, downgrading the coder's perfection claim as
/// soon as one string falls outside the lossless domain. The per-element
/// checks short-circuit once perfection is lost; keys are still computed
/// for every element.
pub fn encode_sequences<C: SequenceCoder + ?Sized>(xs: &[String], coder: &C) -> Coding {
    let mut perfect = coder.perfect();
    let keys = xs
        .iter()
        .map(|s| {
            if perfect {
                perfect = coder.on_domain(s) && coder.perfect_for_length(s.encode_utf16().count());
            }
            coder.encode(s)
        })
        .collect();
    Coding { keys, perfect }
}

/// `v << s`, treating shifts of 64 or more as shifting everything out.
/// Bit-packing repeatedly shifts by `width · slots`, which legitimately
/// reaches 64 (an empty string under the 16-bit coder), and Rust's `<<`
/// rejects that.
#[inline]
pub(crate) fn shl_guarded(v: u64, s: u32) -> u64 {
    if s >= 64 {
        0
    } else {
        v << s
    }
}
