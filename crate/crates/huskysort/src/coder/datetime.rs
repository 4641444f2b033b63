//! Timestamp coder: nanoseconds relative to a configurable base instant,
//! saturating at the `i64` range (about ±292 years around the base).

use super::{Coding, HuskyCoder};

/// A point in time as nanoseconds since the Unix epoch, wide enough to
/// express any instant the coder might be asked about.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NanoTimestamp(pub i128);

impl NanoTimestamp {
    pub fn from_seconds(s: i64) -> Self {
        Self(s as i128 * 1_000_000_000)
    }
}

/// Nanoseconds from `base` to `t`, saturated to the `i64` range.
pub fn date_time_to_long(t: NanoTimestamp, base: NanoTimestamp) -> i64 {
    t.0.saturating_sub(base.0)
        .clamp(i64::MIN as i128, i64::MAX as i128) as i64
}

/// Coder for [`NanoTimestamp`] with an inner window of ±(2^63 − 1) ns
/// around `base`. Inside the window the embedding is strict; outside it the
/// key saturates, so `encode_all` only reports a perfect coding when every
/// element is inside.
#[derive(Debug, Clone, Copy)]
pub struct DateTimeCoder {
    base: NanoTimestamp,
}

impl DateTimeCoder {
    pub fn new(base: NanoTimestamp) -> Self {
        Self { base }
    }

    /// A coder based at 1970-01-01T00:00:00Z, covering roughly 1678–2262.
    pub fn unix_epoch() -> Self {
        Self::new(NanoTimestamp(0))
    }

    /// Whether `t` encodes without saturation, i.e. lies within ±2⁶³ − 1
    /// nanoseconds (±292 years) of the base.
    pub fn in_window(&self, t: &NanoTimestamp) -> bool {
        let d = t.0.saturating_sub(self.base.0);
        (i64::MIN as i128..=i64::MAX as i128).contains(&d)
    }
}

impl HuskyCoder<NanoTimestamp> for DateTimeCoder {
    fn encode(&self, x: &NanoTimestamp) -> i64 {
        date_time_to_long(*x, self.base)
    }

    fn perfect(&self) -> bool {
        // Optimistic claim for the window; encode_all narrows per array.
        true
    }

    fn encode_all(&self, xs: &[NanoTimestamp]) -> Coding {
        let mut perfect = true;
        let keys = xs
            .iter()
            .map(|t| {
                if perfect {
                    perfect = self.in_window(t);
                }
                self.encode(t)
            })
            .collect();
        Coding { keys, perfect }
    }
}
