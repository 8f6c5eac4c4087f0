use thiserror::Error;

/// Errors surfaced by evaluators and parsers.
///
/// Library functions only return `Err` for domain violations the caller can
/// trigger through parameters (non-positive arguments, poles, malformed
/// literals). Internal invariant violations panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{name} must be > 0")]
    NonPositive { name: &'static str },

    #[error("{name} must be >= 0")]
    Negative { name: &'static str },

    #[error("kernel has {len} terms but order {order}")]
    KernelLength { order: u32, len: usize },

    #[error("g_m(z) has a pole at z = {z}")]
    GmPole { z: String },

    #[error("nodes must be distinct positive integers (got {got})")]
    InvalidNodes { got: String },

    #[error("invalid numeric literal '{0}'")]
    ParseNumber(String),

    #[error("rows must be pushed in strictly increasing order (got {got} after {prev})")]
    RowOrder { prev: u64, got: u64 },

    #[error("{0}")]
    InvalidParameter(String),
}
