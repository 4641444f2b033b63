//! String coders: pack the leading UTF-16 code units of a string into one
//! `i64`, left-aligned, so that numeric key order tracks lexicographic
//! string order.
//!
//! Each coder is a bit-width/length/mask recipe over the same packing loop
//! ([`string_to_long`]):
//!
//! * [`AsciiCoder`] — 9 chars × 7 bits; strict for 7-bit strings (no NUL)
//!   up to 9 chars.
//! * [`UnicodeCoder`] — 4 units × 16 bits, then a logical right shift by 1
//!   to clear the sign bit; strict for NUL-free basic-multilingual-plane
//!   strings up to 3 units (the shift costs the fourth unit its low bit).
//! * [`EnglishCoder`] — 12 chars × 5 bits; the mask case-folds, so it is
//!   strict only for lowercase `a–z` strings up to 12 chars.
//! * [`English6Coder`] — 10 chars × 6 bits; case-sensitive over ASCII
//!   letters up to 10 chars.
//!
//! Shorter strings are zero-padded on the right, which sorts a prefix
//! before its extensions exactly as string comparison does (padding 0 is
//! below every in-domain character code). Anything outside a coder's domain
//! still encodes — keys just stop being reliable, which the pipeline
//! handles by running cleanup.

use alloc::string::String;

use super::{shl_guarded, Coding, HuskyCoder, SequenceCoder};

/// Key width every coder packs into.
pub const BITS_PER_LONG: u32 = 64;

pub const BIT_WIDTH_ASCII: u32 = 7;
/// `⌊64 / 7⌋`
pub const MAX_LENGTH_ASCII: usize = 9;
pub const MASK_ASCII: u16 = 0x7F;

pub const BIT_WIDTH_UNICODE: u32 = 16;
/// `⌊64 / 16⌋`
pub const MAX_LENGTH_UNICODE: usize = 4;
pub const MASK_UNICODE: u16 = 0xFFFF;

pub const BIT_WIDTH_ENGLISH: u32 = 5;
/// `⌊64 / 5⌋`
pub const MAX_LENGTH_ENGLISH: usize = 12;
pub const MASK_ENGLISH: u16 = 0x1F;

pub const BIT_WIDTH_ENGLISH6: u32 = 6;
/// `⌊64 / 6⌋`
pub const MAX_LENGTH_ENGLISH6: usize = 10;
pub const MASK_ENGLISH6: u16 = 0x3F;

/// The packing recipe one string coder runs on: how many leading UTF-16
/// units to keep, how wide each packed slot is, which bits of a unit
/// survive (`mask == 0` means no masking), and a final logical right shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringCoderParams {
    pub max_length: usize,
    pub bit_width: u32,
    pub mask: u16,
    pub post_shift: u32,
}

/// Pack the first `max_length` UTF-16 units of `s`, masked and
/// concatenated MSB-first, zero-padded to exactly `max_length` slots, then
/// logically shifted right by `post_shift`.
pub fn string_to_long(s: &str, params: &StringCoderParams) -> i64 {
    let mut result: u64 = 0;
    let mut count = 0usize;
    for unit in s.encode_utf16().take(params.max_length) {
        let code = if params.mask == 0 {
            unit
        } else {
            unit & params.mask
        };
        result = (result << params.bit_width) | code as u64;
        count += 1;
    }
    let padding = (params.max_length - count) as u32 * params.bit_width;
    result = shl_guarded(result, padding);
    (result >> params.post_shift) as i64
}

pub fn ascii_to_long(s: &str) -> i64 {
    string_to_long(s, &AsciiCoder::PARAMS)
}

pub fn unicode_to_long(s: &str) -> i64 {
    string_to_long(s, &UnicodeCoder::PARAMS)
}

pub fn english_to_long(s: &str) -> i64 {
    string_to_long(s, &EnglishCoder::PARAMS)
}

pub fn english6_to_long(s: &str) -> i64 {
    string_to_long(s, &English6Coder::PARAMS)
}

macro_rules! string_coder_impls {
    ($ty:ty) => {
        impl HuskyCoder<String> for $ty {
            fn encode(&self, x: &String) -> i64 {
                string_to_long(x, &Self::PARAMS)
            }

            fn perfect(&self) -> bool {
                // Optimistic type-level claim; encode_all narrows it per
                // array via encode_sequences.
                true
            }

            fn encode_all(&self, xs: &[String]) -> Coding {
                super::encode_sequences(xs, self)
            }
        }
    };
}

/// 7-bit packing of up to 9 chars; the workhorse for English words.
#[derive(Debug, Clone, Copy, Default)]
pub struct AsciiCoder;

impl AsciiCoder {
    pub const PARAMS: StringCoderParams = StringCoderParams {
        max_length: MAX_LENGTH_ASCII,
        bit_width: BIT_WIDTH_ASCII,
        mask: MASK_ASCII,
        post_shift: 0,
    };
}

string_coder_impls!(AsciiCoder);

impl SequenceCoder for AsciiCoder {
    fn perfect_for_length(&self, len: usize) -> bool {
        len <= MAX_LENGTH_ASCII
    }

    fn on_domain(&self, s: &str) -> bool {
        // 7-bit and NUL-free: NUL would collide with the zero padding.
        s.bytes().all(|b| (0x01..=0x7F).contains(&b))
    }
}

/// Full 16-bit code units, 4 of them, shifted right once so the key stays
/// non-negative. The coder for text beyond ASCII (e.g. CJK).
#[derive(Debug, Clone, Copy, Default)]
pub struct UnicodeCoder;

impl UnicodeCoder {
    pub const PARAMS: StringCoderParams = StringCoderParams {
        max_length: MAX_LENGTH_UNICODE,
        bit_width: BIT_WIDTH_UNICODE,
        mask: MASK_UNICODE,
        post_shift: 1,
    };
}

string_coder_impls!(UnicodeCoder);

impl SequenceCoder for UnicodeCoder {
    fn perfect_for_length(&self, len: usize) -> bool {
        // The post shift truncates the fourth unit's lowest bit, so only
        // three full units are lossless.
        len < MAX_LENGTH_UNICODE
    }

    fn on_domain(&self, s: &str) -> bool {
        // Basic multilingual plane only: supplementary characters encode as
        // surrogate pairs whose UTF-16 order disagrees with char order.
        s.chars().all(|c| c != '\0' && (c as u32) <= 0xFFFF)
    }
}

/// 5-bit packing of up to 12 chars. The mask keeps only the low 5 bits of
/// each char, which folds case ('A' and 'a' both become 1) — hence the
/// lowercase-only strict domain.
#[derive(Debug, Clone, Copy, Default)]
pub struct EnglishCoder;

impl EnglishCoder {
    pub const PARAMS: StringCoderParams = StringCoderParams {
        max_length: MAX_LENGTH_ENGLISH,
        bit_width: BIT_WIDTH_ENGLISH,
        mask: MASK_ENGLISH,
        post_shift: 0,
    };
}

string_coder_impls!(EnglishCoder);

impl SequenceCoder for EnglishCoder {
    fn perfect_for_length(&self, len: usize) -> bool {
        len <= MAX_LENGTH_ENGLISH
    }

    fn on_domain(&self, s: &str) -> bool {
        s.bytes().all(|b| b.is_ascii_lowercase())
    }
}

/// 6-bit packing of up to 10 chars. Six bits keep 'A'–'Z' (codes 1–26) and
/// 'a'–'z' (codes 33–58) distinct and in ASCII order, so mixed-case ASCII
/// words are embedded strictly.
#[derive(Debug, Clone, Copy, Default)]
pub struct English6Coder;

impl English6Coder {
    pub const PARAMS: StringCoderParams = StringCoderParams {
        max_length: MAX_LENGTH_ENGLISH6,
        bit_width: BIT_WIDTH_ENGLISH6,
        mask: MASK_ENGLISH6,
        post_shift: 0,
    };
}

string_coder_impls!(English6Coder);

impl SequenceCoder for English6Coder {
    fn perfect_for_length(&self, len: usize) -> bool {
        len <= MAX_LENGTH_ENGLISH6
    }

    fn on_domain(&self, s: &str) -> bool {
        s.bytes().all(|b| b.is_ascii_alphabetic())
    }
}
