//! Operation counters shared by every sort in the crate.
//!
//! Counting conventions, used consistently throughout:
//!
//! * a comparison against a value cached outside the array (a pivot held in a
//!   local) costs 1 comparison and 1 array access;
//! * a comparison between two array slots costs 1 comparison and 2 accesses;
//! * a swap costs 1 swap and 4 accesses (2 reads + 2 writes), or 8 accesses
//!   for a dual-array swap that exchanges a key *and* its payload;
//! * moving one element (merge traffic, insertion shifts) costs 1 copy and
//!   2 accesses.
//!
//! `array_accesses` therefore dominates every other counter and is the
//! natural single figure of merit for memory traffic.

/// Operation counts accumulated by a sort. Plain data; callers usually make
/// one per sort call and read it afterwards.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SortStats {
    /// Element (or key) comparisons.
    pub comparisons: u64,
    /// Exchanges of two slots. A dual-array swap counts once.
    pub swaps: u64,
    /// Array reads + writes, per the module conventions above.
    pub array_accesses: u64,
    /// Single-element moves that are not part of a swap.
    pub copies: u64,
    /// Set when a cleanup pass actually ran (see `pipeline`).
    pub cleanup_ran: bool,
    /// Times an introsort range hit its depth limit and fell back to
    /// heapsort.
    pub depth_limit_hits: u64,
}

impl SortStats {
    pub fn new() -> Self {
        Self::default()
    }

    /// Record a comparison with one operand cached outside the array.
    #[inline]
    pub(crate) fn compare_cached(&mut self) {
        self.comparisons += 1;
        self.array_accesses += 1;
    }

    /// Record a comparison between two array slots.
    #[inline]
    pub(crate) fn compare_slots(&mut self) {
        self.comparisons += 1;
        self.array_accesses += 2;
    }

    /// Record a single-array swap.
    #[inline]
    pub(crate) fn swap(&mut self) {
        self.swaps += 1;
        self.array_accesses += 4;
    }

    /// Record a dual-array swap (key and payload move together).
    #[inline]
    pub(crate) fn swap_dual(&mut self) {
        self.swaps += 1;
        self.array_accesses += 8;
    }

    /// Record moving `n` elements, one copy and two accesses each.
    #[inline]
    pub(crate) fn copies(&mut self, n: u64) {
        self.copies += n;
        self.array_accesses += 2 * n;
    }
}
