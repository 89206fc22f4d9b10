//! Explicit precision context.
//!
//! Every approximate operation in this crate takes a [`PrecisionContext`]
//! instead of consulting mutable global state. `digits` is the number of
//! decimal digits the caller wants to trust; `guard` is extra working
//! precision that absorbs accumulated rounding error. All internal arithmetic
//! runs at `digits + guard` and results are only ever *reported* at `digits`.

/// Requested decimal precision plus guard digits.
///
/// The default guard of 20 digits covers error accumulation over roughly a
/// million sequential operations (each contributes at most one unit in the
/// last working place), which is far more than any series or continued
/// fraction in this crate consumes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionContext {
    digits: usize,
    guard: usize,
}

/// Extra working digits used when the caller does not specify a guard.
pub const DEFAULT_GUARD: usize = 20;

impl PrecisionContext {
    /// Context with `digits` requested digits and the default guard.
    ///
    /// Panics if `digits == 0`; a zero-digit request is a programming error,
    /// not a runtime condition.
    pub fn new(digits: usize) -> Self {
        Self::with_guard(digits, DEFAULT_GUARD)
    }

    /// Context with an explicit guard (e.g. a small guard to keep the
    /// validation oracle cheap, or a large one for stress tests).
    pub fn with_guard(digits: usize, guard: usize) -> Self {
        assert!(digits >= 1, "PrecisionContext requires digits >= 1");
        PrecisionContext { digits, guard }
    }

    /// Digits the caller asked for.
    pub fn digits(&self) -> usize {
        self.digits
    }

    /// Guard digits.
    pub fn guard(&self) -> usize {
        self.guard
    }

    /// Total working precision: `digits + guard`.
    pub fn working(&self) -> usize {
        self.digits + self.guard
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn working_precision_is_digits_plus_guard() {
        let ctx = PrecisionContext::new(50);
        assert_eq!(ctx.digits(), 50);
        assert_eq!(ctx.guard(), DEFAULT_GUARD);
        assert_eq!(ctx.working(), 70);

        let tight = PrecisionContext::with_guard(60, 5);
        assert_eq!(tight.working(), 65);
    }

    #[test]
    #[should_panic]
    fn zero_digits_rejected() {
        let _ = PrecisionContext::new(0);
    }
}
