//! Arbitrary-precision arithmetic substrate.
//!
//! Exact integers and rationals are `num_bigint::BigInt` and
//! `num_rational::BigRational`; the latter is kept in lowest terms with a
//! positive denominator by construction, which the identity checks in
//! [`crate::transform`] rely on. Inexact values use [`BigReal`], a fixed-point
//! real (`mantissa · 2^{−frac_bits}`) whose addition and subtraction are
//! exact — the cancellation in alternating binomial sums therefore costs no
//! rounding at all, and [`PrecisionPolicy`] only has to cover the magnitude
//! of the intermediate terms.
//!
//! Reference constants (`γ`, `π`, `ln(π/2)`) are computed by methods that are
//! independent of every series under test: Euler–Maclaurin-corrected harmonic
//! sums for `γ` and Machin-type arctangent series for `π`, each with a
//! rigorous truncation bound.

mod int;
mod parse;
mod policy;
mod real;
mod refs;

pub use int::{bernoulli_even, binomial, binomial_row, double_factorial, factorial, harmonic};
pub use parse::parse_rational;
pub use policy::PrecisionPolicy;
pub use real::BigReal;
pub use refs::{gamma_reference, ln_pi_half_reference, pi_reference};

pub(crate) use real::div_round;
