//! Composite coder: concatenate truncated keys of several projections into
//! one 64-bit key, most significant part first, for lexicographic element
//! types (tuples, records, strings-with-a-number, …).
//!
//! Each part gets a bit budget. A part key is *sign-biased* (XOR with the
//! top bit, turning signed order into unsigned order) before its top
//! `budget` bits are taken, so truncation keeps order across negative and
//! positive part keys. The packed word is left-aligned and un-biased back
//! into an `i64` at the end; a single part with budget 64 therefore
//! reproduces its inner coder's key exactly.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use super::{shl_guarded, HuskyCoder};

const SIGN: u64 = 1 << 63;

/// One field of a [`TupleCoder`]: a projection producing a part key, the
/// bit budget it packs into, and the flags that decide whether the whole
/// tuple coder may claim perfection.
pub struct TuplePart<T> {
    project: Box<dyn Fn(&T) -> i64>,
    bits: u32,
    perfect: bool,
    fits: bool,
}

impl<T> TuplePart<T> {
    /// Raw constructor: the caller vouches for `perfect` (the projection's
    /// keys embed strictly) and `fits` (they are fully determined by their
    /// top `bits` biased bits).
    pub fn new(
        bits: u32,
        perfect: bool,
        fits: bool,
        project: impl Fn(&T) -> i64 + 'static,
    ) -> Self {
        Self {
            project: Box::new(project),
            bits,
            perfect,
            fits,
        }
    }

    /// Build a part from an existing coder and a field accessor; `perfect`
    /// and `fits` come from the coder itself ([`HuskyCoder::key_bits`]).
    pub fn from_coder<U, C, F>(bits: u32, coder: C, accessor: F) -> Self
    where
        C: HuskyCoder<U> + 'static,
        F: Fn(&T) -> &U + 'static,
        U: 'static,
    {
        let perfect = coder.perfect();
        let fits = bits >= coder.key_bits();
        Self::new(bits, perfect, fits, move |t| coder.encode(accessor(t)))
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }
}

impl<T> fmt::Debug for TuplePart<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TuplePart")
            .field("bits", &self.bits)
            .field("perfect", &self.perfect)
            .field("fits", &self.fits)
            .finish_non_exhaustive()
    }
}

/// Why a [`TupleCoder`] could not be built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TupleCoderError {
    NoParts,
    ZeroWidthPart,
    /// The budgets sum past the 64 bits available.
    BudgetExceeded {
        total: u32,
    },
}

impl fmt::Display for TupleCoderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NoParts => write!(f, "tuple coder needs at least one part"),
            Self::ZeroWidthPart => write!(f, "tuple part with a zero bit budget"),
            Self::BudgetExceeded { total } => {
                write!(
                    f,
                    "tuple part budgets sum to {total}, more than the 64 available"
                )
            }
        }
    }
}

impl core::error::Error for TupleCoderError {}

/// Lexicographic composition of [`TuplePart`]s. Perfect only when every
/// part is perfect *and* fits its budget — in practice that means the
/// single-part full-width identity case; real compositions truncate and
/// rely on cleanup.
pub struct TupleCoder<T> {
    parts: Vec<TuplePart<T>>,
    total_bits: u32,
}

impl<T> TupleCoder<T> {
    pub fn new(parts: Vec<TuplePart<T>>) -> Result<Self, TupleCoderError> {
        if parts.is_empty() {
            return Err(TupleCoderError::NoParts);
        }
        let mut total: u32 = 0;
        for p in &parts {
            if p.bits == 0 {
                return Err(TupleCoderError::ZeroWidthPart);
            }
            total += p.bits;
        }
        if total > 64 {
            return Err(TupleCoderError::BudgetExceeded { total });
        }
        Ok(Self {
            parts,
            total_bits: total,
        })
    }
}

impl<T> fmt::Debug for TupleCoder<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TupleCoder")
            .field("parts", &self.parts)
            .finish()
    }
}

impl<T> HuskyCoder<T> for TupleCoder<T> {
    fn encode(&self, x: &T) -> i64 {
        let mut acc: u64 = 0;
        for part in &self.parts {
            let key = (part.project)(x) as u64;
            let top = (key ^ SIGN) >> (64 - part.bits);
            acc = shl_guarded(acc, part.bits) | top;
        }
        acc = shl_guarded(acc, 64 - self.total_bits);
        (acc ^ SIGN) as i64
    }

    fn perfect(&self) -> bool {
        self.parts.iter().all(|p| p.perfect && p.fits)
    }

    fn key_bits(&self) -> u32 {
        self.total_bits
    }
}

/// Coder for small signed integers destined for a tuple part: clamps into
/// `bits` signed bits and top-aligns, so the top `bits` of the biased key
/// carry the whole value. Perfect only at full width (clamping collides
/// out-of-range values).
#[derive(Debug, Clone, Copy)]
pub struct SmallIntCoder {
    bits: u32,
}

impl SmallIntCoder {
    pub fn new(bits: u32) -> Self {
        assert!((1..=64).contains(&bits));
        Self { bits }
    }
}

impl HuskyCoder<i64> for SmallIntCoder {
    fn encode(&self, x: &i64) -> i64 {
        let (lo, hi) = if self.bits == 64 {
            (i64::MIN, i64::MAX)
        } else {
            (-(1i64 << (self.bits - 1)), (1i64 << (self.bits - 1)) - 1)
        };
        (*x).clamp(lo, hi) << (64 - self.bits)
    }

    fn perfect(&self) -> bool {
        self.bits == 64
    }

    fn key_bits(&self) -> u32 {
        self.bits
    }
}
