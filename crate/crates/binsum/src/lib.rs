//! Evaluation and verification of alternating binomial-transform series for
//! classical constants.
//!
//! The series treated here all share one skeleton: an order-`m` alternating
//! binomial sum `Σ_k C(m,k) (−1)^{k±1} f(k)` whose limit (in `m`) is a simple
//! constant — `1`, a parameter `u`, `ln u`, or the Euler–Mascheroni constant
//! `γ` — together with infinite-product rearrangements of the same data and a
//! family of remainder integrals `∫_0^{1/n} ∏_k a_k x/(1 + a_k x) dx` that
//! control every error term.
//!
//! The crate is organised as:
//!
//! - [`bignum`]: exact integers/rationals, a fixed-point arbitrary-precision
//!   real type ([`bignum::BigReal`]), the precision policy that absorbs the
//!   `2^m` cancellation of alternating sums, and independently computed
//!   reference constants (`γ`, `π`, `ln(π/2)`).
//! - [`transform`]: the alternating-transform engine and exact verification
//!   of the combinatorial identities behind it.
//! - [`constants`]: partial-sum and partial-product evaluators for the
//!   proved formulas, with exact residuals and proven error bounds where the
//!   proofs supply them.
//! - [`conjectures`]: numerical evaluators and residual reporters for the
//!   conjectured formulas, including Lagrange weights, closed-form remainder
//!   integrals with a quadrature oracle, and the `y_k` constants.
//! - [`report`]: convergence tables with deterministic CSV/JSON rendering.
//! - [`cli`]: the `binsum` command-line front end.
//!
//! Conjecture evaluators never assert a conjectured limit; they emit
//! residuals and convergence trends.

pub mod bignum;
pub mod cli;
pub mod conjectures;
pub mod constants;
pub mod report;
pub mod transform;

mod error;

pub use error::Error;
