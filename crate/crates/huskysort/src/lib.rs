//! Huskysort: sort expensive-to-compare values by first compressing them into
//! 64-bit *husky codes*, sorting the codes (dragging the payload along), and
//! then running a cheap stable cleanup pass over the nearly-sorted payload.
//!
//! The pipeline is
//!
//! 1. optionally shuffle (guard against adversarially ordered input),
//! 2. encode every element into an `i64` key with a [`coder::HuskyCoder`],
//! 3. sort keys and payload together with a dual-array introsort
//!    ([`dual::introsort`]) or, for the stable variant, a dual-array merge
//!    sort,
//! 4. if the coder reports the coding *perfect* (a strict order embedding),
//!    stop; otherwise finish with a stable [`pipeline::cleanup`] pass.
//!
//! A coder only has to be *weakly monotone* — equal elements get equal keys
//! and order may collapse, never invert — so the key sort leaves at most a
//! few residual inversions for the cleanup pass, and sorting is correct for
//! every coder and every input. [`analysis`] carries the instrumentation-side
//! tools: inversion counting and the array-access cost model that predicts
//! when this pipeline beats a plain comparison sort.
//!
//! The crate is `no_std` (it allocates, so `alloc` is required). IO, input
//! generation and the benchmark CLI live in the companion `huskysort-bench`
//! crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
pub mod coder;
pub mod decimal;
pub mod dual;
pub mod pipeline;
pub mod rng;
pub mod single;
pub mod stats;

pub use coder::{Coding, HuskyCoder};
pub use dual::floor_lg;
pub use pipeline::{husky_sort, husky_sort_stable, HuskySortConfig, SortOutcome};
pub use stats::SortStats;
