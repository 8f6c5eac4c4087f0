//! Working-precision policy for alternating binomial transforms.

/// Maps a target accuracy and a transform order to a working precision.
///
/// An order-`m` alternating binomial sum adds terms of combined magnitude
/// `Σ_k C(m,k) = 2^m` while the result stays `O(1)`, so up to `m` leading
/// bits cancel. The policy works at `target_bits + m + guard_bits`, which
/// keeps the absolute error of the final sum below `2^{−target_bits−guard}`
/// times the term scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionPolicy {
    pub target_bits: u32,
    pub guard_bits: u32,
}

impl PrecisionPolicy {
    pub const DEFAULT_GUARD: u32 = 64;

    pub fn new(target_bits: u32) -> Self {
        assert!(target_bits >= 1, "target_bits must be positive");
        Self {
            target_bits,
            guard_bits: Self::DEFAULT_GUARD,
        }
    }

    pub fn with_guard(target_bits: u32, guard_bits: u32) -> Self {
        assert!(target_bits >= 1 && guard_bits >= 1);
        Self {
            target_bits,
            guard_bits,
        }
    }

    /// Working precision for an order-`m` evaluation; monotone in `m`.
    pub fn working_bits(&self, m: u64) -> u32 {
        assert!(m < (1 << 24), "order out of supported range");
        self.target_bits + m as u32 + self.guard_bits
    }
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        Self::new(128)
    }
}
