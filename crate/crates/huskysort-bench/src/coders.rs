//! Coder ids: the CLI's names for the library's coders, plus constructors
//! building the typed coder objects behind `dyn` so the rest of the harness
//! can stay generic over the element type.

use std::fmt;

use anyhow::{anyhow, bail, ensure, Result};
use num_bigint::BigInt;
use ordered_float::OrderedFloat;

use huskysort::coder::{
    AsciiCoder, BigDecimalCoder, BigIntCoder, DateTimeCoder, DoubleCoder, English6Coder,
    EnglishCoder, HuskyCoder, IntCoder, LongCoder, NanoTimestamp, PerturbedCoder, SmallIntCoder,
    TupleCoder, TuplePart, UnicodeCoder,
};
use huskysort::decimal::BigDecimal;

pub const KNOWN_CODERS: &str =
    "ascii, english, english6, unicode, long, int, double, bigint, bigdecimal, date, tuple, \
     perturb:<q>:<inner>";

/// A parsed coder id.
#[derive(Debug, Clone, PartialEq)]
pub enum CoderSpec {
    Ascii,
    English,
    English6,
    Unicode,
    Long,
    Int,
    Double,
    BigInt,
    BigDecimal,
    Date,
    /// The standard pair coder over `(i64, String)`: 16 bits of the first
    /// field, then a 48-bit ASCII prefix of the second.
    Tuple,
    Perturbed {
        q: f64,
        inner: Box<CoderSpec>,
    },
}

/// The element family a coder works on, which decides both the input
/// generator and the concrete element type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    EnglishWords,
    CjkWords,
    Longs,
    Ints,
    Doubles,
    BigInts,
    BigDecimals,
    Dates,
    Tuples,
}

impl CoderSpec {
    pub fn parse(id: &str) -> Result<CoderSpec> {
        Ok(match id {
            "ascii" => CoderSpec::Ascii,
            "english" => CoderSpec::English,
            "english6" => CoderSpec::English6,
            "unicode" => CoderSpec::Unicode,
            "long" => CoderSpec::Long,
            "int" => CoderSpec::Int,
            "double" => CoderSpec::Double,
            "bigint" => CoderSpec::BigInt,
            "bigdecimal" => CoderSpec::BigDecimal,
            "date" => CoderSpec::Date,
            "tuple" => CoderSpec::Tuple,
            _ => {
                if let Some(rest) = id.strip_prefix("perturb:") {
                    let (q_str, inner_id) = rest.split_once(':').ok_or_else(|| {
                        anyhow!("perturb coder takes the form perturb:<q>:<inner>, e.g. perturb:0.1:long")
                    })?;
                    let q: f64 = q_str
                        .parse()
                        .map_err(|_| anyhow!("perturb probability '{q_str}' is not a number"))?;
                    ensure!(
                        (0.0..=1.0).contains(&q),
                        "perturb probability must lie in [0, 1]"
                    );
                    let inner = CoderSpec::parse(inner_id)?;
                    ensure!(
                        !matches!(inner, CoderSpec::Perturbed { .. }),
                        "perturb cannot wrap another perturb"
                    );
                    CoderSpec::Perturbed {
                        q,
                        inner: Box::new(inner),
                    }
                } else {
                    bail!("unknown coder '{id}' (known coders: {KNOWN_CODERS})");
                }
            }
        })
    }

    pub fn family(&self) -> Family {
        match self {
            CoderSpec::Ascii | CoderSpec::English | CoderSpec::English6 => Family::EnglishWords,
            CoderSpec::Unicode => Family::CjkWords,
            CoderSpec::Long => Family::Longs,
            CoderSpec::Int => Family::Ints,
            CoderSpec::Double => Family::Doubles,
            CoderSpec::BigInt => Family::BigInts,
            CoderSpec::BigDecimal => Family::BigDecimals,
            CoderSpec::Date => Family::Dates,
            CoderSpec::Tuple => Family::Tuples,
            CoderSpec::Perturbed { inner, .. } => inner.family(),
        }
    }
}

impl fmt::Display for CoderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoderSpec::Ascii => f.write_str("ascii"),
            CoderSpec::English => f.write_str("english"),
            CoderSpec::English6 => f.write_str("english6"),
            CoderSpec::Unicode => f.write_str("unicode"),
            CoderSpec::Long => f.write_str("long"),
            CoderSpec::Int => f.write_str("int"),
            CoderSpec::Double => f.write_str("double"),
            CoderSpec::BigInt => f.write_str("bigint"),
            CoderSpec::BigDecimal => f.write_str("bigdecimal"),
            CoderSpec::Date => f.write_str("date"),
            CoderSpec::Tuple => f.write_str("tuple"),
            CoderSpec::Perturbed { q, inner } => write!(f, "perturb:{q}:{inner}"),
        }
    }
}

/// Wraps `base` in a perturbation layer when `spec` carries one.
fn maybe_perturbed<T: 'static>(
    spec: &CoderSpec,
    seed: u64,
    base: Box<dyn HuskyCoder<T>>,
) -> Box<dyn HuskyCoder<T>> {
    match spec {
        CoderSpec::Perturbed { q, .. } => Box::new(PerturbedCoder::new(base, *q, seed)),
        _ => base,
    }
}

/// Strips a perturbation layer, leaving the inner spec.
fn unwrapped(spec: &CoderSpec) -> &CoderSpec {
    match spec {
        CoderSpec::Perturbed { inner, .. } => inner,
        other => other,
    }
}

pub fn string_coder(spec: &CoderSpec, seed: u64) -> Result<Box<dyn HuskyCoder<String>>> {
    let base: Box<dyn HuskyCoder<String>> = match unwrapped(spec) {
        CoderSpec::Ascii => Box::new(AsciiCoder),
        CoderSpec::English => Box::new(EnglishCoder),
        CoderSpec::English6 => Box::new(English6Coder),
        CoderSpec::Unicode => Box::new(UnicodeCoder),
        other => bail!("coder '{other}' does not encode strings"),
    };
    Ok(maybe_perturbed(spec, seed, base))
}

pub fn long_coder(spec: &CoderSpec, seed: u64) -> Result<Box<dyn HuskyCoder<i64>>> {
    match unwrapped(spec) {
        CoderSpec::Long => Ok(maybe_perturbed(spec, seed, Box::new(LongCoder))),
        other => bail!("coder '{other}' does not encode 64-bit integers"),
    }
}

pub fn int_coder(spec: &CoderSpec, seed: u64) -> Result<Box<dyn HuskyCoder<i32>>> {
    match unwrapped(spec) {
        CoderSpec::Int => Ok(maybe_perturbed(spec, seed, Box::new(IntCoder))),
        other => bail!("coder '{other}' does not encode 32-bit integers"),
    }
}

pub fn double_coder(spec: &CoderSpec, seed: u64) -> Result<Box<dyn HuskyCoder<OrderedFloat<f64>>>> {
    match unwrapped(spec) {
        CoderSpec::Double => Ok(maybe_perturbed(spec, seed, Box::new(DoubleCoder))),
        other => bail!("coder '{other}' does not encode doubles"),
    }
}

pub fn bigint_coder(spec: &CoderSpec, seed: u64) -> Result<Box<dyn HuskyCoder<BigInt>>> {
    match unwrapped(spec) {
        CoderSpec::BigInt => Ok(maybe_perturbed(spec, seed, Box::new(BigIntCoder))),
        other => bail!("coder '{other}' does not encode big integers"),
    }
}

pub fn bigdecimal_coder(spec: &CoderSpec, seed: u64) -> Result<Box<dyn HuskyCoder<BigDecimal>>> {
    match unwrapped(spec) {
        CoderSpec::BigDecimal => Ok(maybe_perturbed(spec, seed, Box::new(BigDecimalCoder))),
        other => bail!("coder '{other}' does not encode decimals"),
    }
}

pub fn date_coder(spec: &CoderSpec, seed: u64) -> Result<Box<dyn HuskyCoder<NanoTimestamp>>> {
    match unwrapped(spec) {
        CoderSpec::Date => Ok(maybe_perturbed(
            spec,
            seed,
            Box::new(DateTimeCoder::unix_epoch()),
        )),
        other => bail!("coder '{other}' does not encode timestamps"),
    }
}

pub fn tuple_coder(spec: &CoderSpec, seed: u64) -> Result<Box<dyn HuskyCoder<(i64, String)>>> {
    match unwrapped(spec) {
        CoderSpec::Tuple => {
            let parts = vec![
                TuplePart::from_coder(16, SmallIntCoder::new(16), |t: &(i64, String)| &t.0),
                TuplePart::from_coder(48, AsciiCoder, |t: &(i64, String)| &t.1),
            ];
            let coder = TupleCoder::new(parts)?;
            Ok(maybe_perturbed(spec, seed, Box::new(coder)))
        }
        other => bail!("coder '{other}' does not encode pairs"),
    }
}
