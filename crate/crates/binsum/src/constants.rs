//! Partial-sum and partial-product evaluators for the proved formulas, with
//! exact residuals and proven error bounds where the proofs supply them.
//!
//! For rational parameters the evaluators that can be exact are exact: the
//! order-`m` reciprocal sum carries its residual `g_m(1/u)` so that
//! `value + residual = 1` holds in rational arithmetic at every order, and
//! the product formulas keep their factors as exact rationals in factored
//! form (the exponents reach `C(m, m/2)`, so expanded numerators would need
//! `~2^m` bits; expansion is offered under a size budget instead).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::bignum::{binomial_row, gamma_reference, BigReal, PrecisionPolicy};
use crate::conjectures::{remainder_series_direct, remainder_tail_bound, NodeSet};
use crate::report::PartialResult;
use crate::transform::{g_m_exact, weighted_log_sum};
use crate::Error;

/// `ln 1, ln 2, …, ln n` at the given precision.
pub(crate) fn ln_integers(n: u64, frac_bits: u32) -> Vec<BigReal> {
    let mut v = Vec::with_capacity(n as usize);
    v.push(BigReal::zero(frac_bits));
    for i in 2..=n {
        v.push(BigReal::from_u64(i, frac_bits).ln());
    }
    v
}

/// Order-`m` partial sum of `Σ C(m,k)(−1)^{k+1}/(ku+1)` for rational
/// `u > 0`, exact, with the proof's exact residual `g_m(1/u)`:
/// `value + residual = 1` identically.
pub fn thm1_partial(
    u: &BigRational,
    m: u32,
    policy: &PrecisionPolicy,
) -> Result<PartialResult, Error> {
    if !u.is_positive() {
        return Err(Error::NonPositive { name: "u" });
    }
    assert!(m >= 1);
    let row = binomial_row(m as u64);
    let mut sum = BigRational::zero();
    for k in 1..=m as usize {
        let den = u * BigRational::from(BigInt::from(k)) + BigRational::one();
        let term = BigRational::from(row[k].clone()) / den;
        if k % 2 == 1 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let residual = g_m_exact(&u.recip(), m).expect("1/u > 0 cannot hit a pole");
    let wb = policy.working_bits(m as u64);
    Ok(PartialResult {
        order: m as u64,
        value: BigReal::from_rational(&sum, wb),
        reference_error: Some(BigReal::from_rational(&(BigRational::one() - &sum), wb)),
        exact_value: Some(sum),
        exact_residual: Some(residual),
        proven_bound: None,
    })
}

/// Real-parameter variant of [`thm1_partial`]; no exact residual, but the
/// reference error against the limit 1 is still reported.
pub fn thm1_partial_real(
    u: &BigReal,
    m: u32,
    policy: &PrecisionPolicy,
) -> Result<PartialResult, Error> {
    if !u.is_positive() {
        return Err(Error::NonPositive { name: "u" });
    }
    assert!(m >= 1);
    let wb = policy.working_bits(m as u64);
    let u = u.with_frac_bits(wb);
    let row = binomial_row(m as u64);
    let one = BigReal::one(wb);
    let mut sum = BigReal::zero(wb);
    for k in 1..=m {
        let term = (&one / &(&u.mul_u64(k as u64) + &one)).mul_int(&row[k as usize]);
        sum = if k % 2 == 1 {
            &sum + &term
        } else {
            &sum - &term
        };
    }
    Ok(PartialResult {
        order: m as u64,
        reference_error: Some(&one - &sum),
        value: sum,
        exact_value: None,
        exact_residual: None,
        proven_bound: None,
    })
}

fn ln_linear_arg(u: &BigRational, k: u32, frac_bits: u32) -> BigReal {
    let arg = u * BigRational::from(BigInt::from(k)) + BigRational::one();
    BigReal::from_rational(&arg, frac_bits).ln()
}

/// Order-`m` partial sum of `Σ C(m,k)(−1)^{k+1}/k·ln(ku+1)`, which tends to
/// `u`. Accepts `u = 0` (every term is `ln 1 = 0`, giving the exact
/// all-zero sum); rejects `u < 0`.
pub fn remark2_single(
    u: &BigRational,
    m: u32,
    policy: &PrecisionPolicy,
) -> Result<PartialResult, Error> {
    if u.is_negative() {
        return Err(Error::Negative { name: "u" });
    }
    assert!(m >= 1);
    let wb = policy.working_bits(m as u64);
    let value = weighted_log_sum(m, |k| ln_linear_arg(u, k, wb));
    Ok(PartialResult {
        order: m as u64,
        reference_error: Some(&BigReal::from_rational(u, wb) - &value),
        value,
        exact_value: None,
        exact_residual: None,
        proven_bound: None,
    })
}

/// Truncation of the rearranged double series
/// `Σ_{m=1}^M Σ_{k=1}^m C(m,k)(−1)^{k+1}/m·ln(ku+1)`. At any fixed `M` this
/// equals the order-`M` single sum exactly (the triangle regroups through
/// `C(M,k)/k = Σ_{n=k}^M C(n,k)/n`); no tail estimate is attached because
/// the source gives none — raw partial sums are reported.
pub fn remark2_double(
    u: &BigRational,
    outer: u32,
    policy: &PrecisionPolicy,
) -> Result<PartialResult, Error> {
    if u.is_negative() {
        return Err(Error::Negative { name: "u" });
    }
    assert!(outer >= 1);
    let wb = policy.working_bits(outer as u64);
    let logs: Vec<BigReal> = (1..=outer).map(|k| ln_linear_arg(u, k, wb)).collect();
    let mut total = BigReal::zero(wb);
    for m in 1..=outer as u64 {
        let row = binomial_row(m);
        let mut inner = BigReal::zero(wb);
        for k in 1..=m as usize {
            let t = logs[k - 1].mul_int(&row[k]);
            inner = if k % 2 == 1 { &inner + &t } else { &inner - &t };
        }
        total = &total + &inner.div_u64(m);
    }
    Ok(PartialResult {
        order: outer as u64,
        reference_error: Some(&BigReal::from_rational(u, wb) - &total),
        value: total,
        exact_value: None,
        exact_residual: None,
        proven_bound: None,
    })
}

/// An exact rational kept in factored form `∏ baseᵉ`.
#[derive(Clone, Debug)]
pub struct FactoredProduct {
    pub factors: Vec<(BigRational, BigInt)>,
}

fn pow_bigint(b: &BigInt, mut e: u64) -> BigInt {
    let mut base = b.clone();
    let mut acc = BigInt::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

impl FactoredProduct {
    /// Expanded exact value, if the estimated size stays within `max_bits`
    /// (one order-`m` partial product needs ~`2^m` bits expanded).
    pub fn expand(&self, max_bits: u64) -> Option<BigRational> {
        let mut est = 0u64;
        for (b, e) in &self.factors {
            let bbits = b
                .numer()
                .magnitude()
                .bits()
                .max(b.denom().magnitude().bits())
                .max(1);
            let emag = e.magnitude().to_u64()?;
            est = est.saturating_add(emag.saturating_mul(bbits));
            if est > max_bits {
                return None;
            }
        }
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (b, e) in &self.factors {
            let emag = e.magnitude().to_u64().unwrap();
            let pn = pow_bigint(b.numer(), emag);
            let pd = pow_bigint(b.denom(), emag);
            if e.is_negative() {
                num *= pd;
                den *= pn;
            } else {
                num *= pn;
                den *= pd;
            }
        }
        Some(BigRational::new(num, den))
    }
}

/// Size budget for expanding partial products: keeps the exact form
/// available through order ~14 while the factored form and the numeric
/// value carry every order.
const EXPAND_BUDGET_BITS: u64 = 1 << 17;

/// Stable evaluation of `P_m(u) = ∏_{k=1}^m (k+u)^{C(m,k)(−1)^{k+1}}` through
/// the two-argument recursion `P_m(u) = P_{m−1}(u)·(u+1)/P_{m−1}(u+1)`
/// (Pascal's rule applied to the exponents). Every intermediate stays of
/// moderate size, unlike the factor-ordered product whose partial products
/// reach `2^{C(m,m/2)}`.
fn cor3_single_real(u: &BigRational, m: u32, frac_bits: u32) -> BigReal {
    let mut level: Vec<BigReal> = (0..m)
        .map(|i| {
            let v = u + BigRational::from(BigInt::from(i + 1));
            BigReal::from_rational(&v, frac_bits)
        })
        .collect();
    for j in 2..=m {
        let mut next = Vec::with_capacity((m - j + 1) as usize);
        for i in 0..=(m - j) as usize {
            let shift = BigReal::from_rational(
                &(u + BigRational::from(BigInt::from(i as u32 + 1))),
                frac_bits,
            );
            next.push(&(&level[i] * &shift) / &level[i + 1]);
        }
        level = next;
    }
    level[0].clone()
}

/// Order-`m` partial product `∏_{k=1}^m (k+u)^{C(m,k)(−1)^{k+1}}` for
/// rational `u > 0`, which tends to `u`. The exact value is returned in
/// factored form; the numeric value comes from an independent stable
/// recursion, not from exponentiating the factors.
pub struct Cor3Single {
    pub result: PartialResult,
    pub product: FactoredProduct,
}

pub fn cor3_product_single(
    u: &BigRational,
    m: u32,
    policy: &PrecisionPolicy,
) -> Result<Cor3Single, Error> {
    if !u.is_positive() {
        return Err(Error::NonPositive { name: "u" });
    }
    assert!(m >= 1);
    let wb = policy.working_bits(m as u64);
    let row = binomial_row(m as u64);
    let factors = (1..=m)
        .map(|k| {
            let base = u + BigRational::from(BigInt::from(k));
            let exp = if k % 2 == 1 {
                row[k as usize].clone()
            } else {
                -row[k as usize].clone()
            };
            (base, exp)
        })
        .collect();
    let product = FactoredProduct { factors };
    let value = cor3_single_real(u, m, wb);
    let exact_value = product.expand(EXPAND_BUDGET_BITS);
    Ok(Cor3Single {
        result: PartialResult {
            order: m as u64,
            reference_error: Some(&BigReal::from_rational(u, wb) - &value),
            value,
            exact_value,
            exact_residual: None,
            proven_bound: None,
        },
        product,
    })
}

/// Truncation of the double product `∏_{m=0}^M ∏_{k=0}^m (k+u+1)^{C(m,k)(−1)^k}`
/// for rational `u > 0`. The per-`m` factor equals `(u+1)/P_m(u+1)`, so the
/// same recursion evaluates it stably; factors small enough to expand are
/// also returned as exact rationals.
pub struct Cor3Double {
    pub result: PartialResult,
    /// Exact per-m factors for m = 0..=M, where expandable.
    pub per_m_exact: Vec<Option<BigRational>>,
    /// Numeric per-m factors for m = 0..=M.
    pub per_m_real: Vec<BigReal>,
}

pub fn cor3_product_double(
    u: &BigRational,
    outer: u32,
    policy: &PrecisionPolicy,
) -> Result<Cor3Double, Error> {
    if !u.is_positive() {
        return Err(Error::NonPositive { name: "u" });
    }
    let wb = policy.working_bits(outer as u64 + 1);
    let u1 = u + BigRational::one();
    let u1_real = BigReal::from_rational(&u1, wb);
    let mut per_m_exact = Vec::with_capacity(outer as usize + 1);
    let mut per_m_real = Vec::with_capacity(outer as usize + 1);
    // m = 0 factor is (u+1) itself.
    per_m_exact.push(Some(u1.clone()));
    per_m_real.push(u1_real.clone());
    for m in 1..=outer {
        let row = binomial_row(m as u64);
        let factors = (0..=m)
            .map(|k| {
                let base = &u1 + BigRational::from(BigInt::from(k));
                let exp = if k % 2 == 0 {
                    row[k as usize].clone()
                } else {
                    -row[k as usize].clone()
                };
                (base, exp)
            })
            .collect();
        per_m_exact.push(FactoredProduct { factors }.expand(EXPAND_BUDGET_BITS));
        per_m_real.push(&u1_real / &cor3_single_real(&u1, m, wb));
    }
    let mut value = BigReal::one(wb);
    for f in &per_m_real {
        value = &value * f;
    }
    let exact_value = per_m_exact
        .iter()
        .try_fold(BigRational::one(), |acc, f| f.as_ref().map(|f| acc * f));
    Ok(Cor3Double {
        result: PartialResult {
            order: outer as u64,
            reference_error: Some(&BigReal::from_rational(u, wb) - &value),
            value,
            exact_value,
            exact_residual: None,
            proven_bound: None,
        },
        per_m_exact,
        per_m_real,
    })
}

/// Order-`m` partial sum of `Σ C(m,k)(−1)^k/k·ln(k!)`, which tends to `γ`.
/// For `m ≥ 2` the proof's sandwich applies and is attached:
/// `0 < γ − value < 2γ/(m+1)`. At `m = 1` the value is exactly 0 and the
/// strict upper bound degenerates, so no bound is attached.
pub fn thm4_partial(m: u32, policy: &PrecisionPolicy) -> PartialResult {
    assert!(m >= 1);
    let wb = policy.working_bits(m as u64);
    let lns = ln_integers(m as u64, wb);
    let row = binomial_row(m as u64);
    let mut lnfact = BigReal::zero(wb);
    let mut sum = BigReal::zero(wb);
    for k in 1..=m {
        lnfact = &lnfact + &lns[k as usize - 1];
        let t = lnfact.div_u64(k as u64).mul_int(&row[k as usize]);
        sum = if k % 2 == 0 { &sum + &t } else { &sum - &t };
    }
    let gamma = gamma_reference(policy.target_bits);
    let proven_bound = (m >= 2).then(|| gamma.mul_u64(2).div_u64(m as u64 + 1));
    PartialResult {
        order: m as u64,
        reference_error: Some(&gamma - &sum),
        value: sum,
        exact_value: None,
        exact_residual: None,
        proven_bound,
    }
}

/// The `(−1)^{k+1}` orientation used in the proof's remainder identity:
/// `Σ C(m,k)(−1)^{k+1}/k·ln(k!) = −γ + Σ_j ∫_0^{1/j} g_m(1/u) du`.
pub fn thm4_partial_signed(m: u32, policy: &PrecisionPolicy) -> BigReal {
    -&thm4_partial(m, policy).value
}

/// Partial sum over `j = 1..=j_max` of `∫_0^{1/j} g_m(1/u) du`, i.e. the
/// remainder series of the γ proof, together with the domination bound on
/// the dropped tail. The integrand equals the remainder integrand over the
/// consecutive node set `{1..m}`, so this reuses that machinery.
pub struct GammaRemainder {
    pub partial: BigReal,
    pub tail_bound: BigRational,
}

pub fn gamma_remainder_series(m: u32, j_max: u64, policy: &PrecisionPolicy) -> GammaRemainder {
    assert!(m >= 1 && j_max >= 1);
    let nodes = NodeSet::consecutive(m as u64);
    let wb = policy.working_bits(m as u64);
    GammaRemainder {
        partial: remainder_series_direct(&nodes, j_max, wb),
        tail_bound: remainder_tail_bound(&nodes, j_max),
    }
}

/// Truncation of the double series `Σ_{j=1}^J Σ_{i=1}^j C(j−1,i−1)(−1)^i/j·ln i`,
/// which sums to `γ`.
pub fn cor5_partial(outer: u32, policy: &PrecisionPolicy) -> PartialResult {
    assert!(outer >= 1);
    let wb = policy.working_bits(outer as u64);
    let lns = ln_integers(outer as u64, wb);
    let mut total = BigReal::zero(wb);
    for j in 1..=outer as u64 {
        let row = binomial_row(j - 1);
        let mut inner = BigReal::zero(wb);
        for i in 2..=j as usize {
            // the i = 1 term is ln 1 = 0
            let t = lns[i - 1].mul_int(&row[i - 1]);
            inner = if i % 2 == 0 { &inner + &t } else { &inner - &t };
        }
        total = &total + &inner.div_u64(j);
    }
    let gamma = gamma_reference(policy.target_bits);
    PartialResult {
        order: outer as u64,
        reference_error: Some(&gamma - &total),
        value: total,
        exact_value: None,
        exact_residual: None,
        proven_bound: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bignum::parse_rational;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn policy96() -> PrecisionPolicy {
        PrecisionPolicy::new(96)
    }

    #[test]
    fn thm1_examples_exact() {
        let p = policy96();
        let r = thm1_partial(&rat(1, 1), 3, &p).unwrap();
        assert_eq!(r.exact_value.unwrap(), rat(3, 4));
        assert_eq!(r.exact_residual.unwrap(), rat(1, 4));

        let r = thm1_partial(&rat(1, 1), 1, &p).unwrap();
        assert_eq!(r.exact_value.unwrap(), rat(1, 2));
        assert_eq!(r.exact_residual.unwrap(), rat(1, 2));

        let r = thm1_partial(&rat(2, 1), 2, &p).unwrap();
        assert_eq!(r.exact_value.unwrap(), rat(7, 15));
        assert_eq!(r.exact_residual.unwrap(), rat(8, 15));

        assert!(thm1_partial(&rat(0, 1), 3, &p).is_err());
        assert!(thm1_partial(&rat(-2, 1), 3, &p).is_err());
    }

    #[test]
    fn thm1_residual_reconstructs_one() {
        let p = policy96();
        for u in ["1", "2", "1/2", "3", "7/3"] {
            let u = parse_rational(u).unwrap();
            for m in 1..=40 {
                let r = thm1_partial(&u, m, &p).unwrap();
                let sum = r.exact_value.unwrap() + r.exact_residual.unwrap();
                assert_eq!(sum, BigRational::one(), "u = {u}, m = {m}");
            }
        }
    }

    #[test]
    fn thm1_real_matches_exact_path() {
        let p = policy96();
        let u = rat(7, 3);
        let wb = p.working_bits(12);
        let re = thm1_partial_real(&BigReal::from_rational(&u, wb), 12, &p).unwrap();
        let ex = thm1_partial(&u, 12, &p).unwrap();
        let want = BigReal::from_rational(&ex.exact_value.unwrap(), wb);
        assert!(re.value.abs_diff(&want) <= want.ulp().mul_u64(1 << 16));
    }

    #[test]
    fn remark2_small_orders() {
        let p = PrecisionPolicy::new(128);
        let r = remark2_single(&rat(1, 1), 1, &p).unwrap();
        assert_eq!(r.value.to_decimal(4), "0.6931");
        let r = remark2_single(&rat(1, 1), 2, &p).unwrap();
        assert_eq!(r.value.to_decimal(4), "0.8370");
        // u = 0: the all-zero sum, exactly
        let r = remark2_single(&rat(0, 1), 9, &p).unwrap();
        assert!(r.value.is_zero());
        assert!(remark2_single(&rat(-1, 1), 2, &p).is_err());
    }

    #[test]
    fn remark2_error_shrinks_with_order() {
        let p = policy96();
        let e20 = remark2_single(&rat(1, 1), 20, &p)
            .unwrap()
            .reference_error
            .unwrap()
            .abs();
        let e40 = remark2_single(&rat(1, 1), 40, &p)
            .unwrap()
            .reference_error
            .unwrap()
            .abs();
        assert!(e40 < e20);
        // m = 40 is within 0.06 of the limit 1
        let allow = BigReal::from_rational(&rat(6, 100), 96);
        assert!(e40 < allow);
    }

    #[test]
    fn remark2_double_equals_single_at_fixed_order() {
        // Finite-order regrouping identity: the coefficient of ln(ku+1) in
        // the double form, Σ_{m=k}^M C(m,k)/m, is exactly C(M,k)/k.
        for mm in 1..=30u64 {
            for k in 1..=mm {
                let mut lhs = BigRational::zero();
                let mut c = BigInt::one(); // C(k,k)
                lhs += BigRational::new(c.clone(), BigInt::from(k));
                let mut n = k;
                while n < mm {
                    c = c * BigInt::from(n + 1) / BigInt::from(n + 1 - k);
                    n += 1;
                    lhs += BigRational::new(c.clone(), BigInt::from(n));
                }
                let rhs = BigRational::new(crate::bignum::binomial(mm, k as i64), BigInt::from(k));
                assert_eq!(lhs, rhs, "M = {mm}, k = {k}");
            }
        }
        // and numerically the two evaluators agree at equal order; the
        // policy's m guard bits absorb the 2^M term magnitudes, leaving
        // agreement at the target-plus-guard level
        let p = policy96();
        for mm in [1u32, 2, 7, 25] {
            let d = remark2_double(&rat(1, 1), mm, &p).unwrap();
            let s = remark2_single(&rat(1, 1), mm, &p).unwrap();
            let allow = BigReal::one(d.value.frac_bits()).mul_pow2(-(96 + 64 - 8));
            assert!(d.value.abs_diff(&s.value) <= allow, "M = {mm}");
        }
    }

    #[test]
    fn remark2_double_first_orders() {
        let p = PrecisionPolicy::new(128);
        let r = remark2_double(&rat(1, 1), 1, &p).unwrap();
        assert_eq!(r.value.to_decimal(4), "0.6931");
        let r = remark2_double(&rat(1, 1), 2, &p).unwrap();
        assert_eq!(r.value.to_decimal(4), "0.8370");
    }

    #[test]
    fn cor3_single_examples() {
        let p = policy96();
        let r = cor3_product_single(&rat(2, 1), 1, &p).unwrap();
        assert_eq!(r.result.exact_value.unwrap(), rat(3, 1));
        let r = cor3_product_single(&rat(2, 1), 2, &p).unwrap();
        assert_eq!(r.result.exact_value.unwrap(), rat(9, 4));
        let r = cor3_product_single(&rat(2, 1), 3, &p).unwrap();
        assert_eq!(r.result.exact_value.unwrap(), rat(135, 64));
        assert!(cor3_product_single(&rat(0, 1), 3, &p).is_err());
    }

    #[test]
    fn cor3_recursion_matches_expansion() {
        let p = policy96();
        for u in [rat(1, 1), rat(2, 1), rat(7, 3)] {
            for m in 1..=12 {
                let r = cor3_product_single(&u, m, &p).unwrap();
                let exact = r.result.exact_value.expect("small orders expand");
                let want = BigReal::from_rational(&exact, r.result.value.frac_bits());
                assert!(
                    r.result.value.abs_diff(&want) <= want.ulp().mul_u64(1 << 12),
                    "u = {u}, m = {m}"
                );
            }
        }
    }

    #[test]
    fn cor3_log_consistency_dual_route() {
        // ln of the stable-recursion product equals the alternating sum of
        // C(m,k)(−1)^{k+1}·ln(k+u), two routes that share no code.
        let p = policy96();
        for u in [rat(1, 1), rat(2, 1), rat(3, 1)] {
            for m in 1..=30u32 {
                let wb = p.working_bits(m as u64);
                let product = cor3_product_single(&u, m, &p).unwrap();
                let lhs = product.result.value.ln();
                let kernel = crate::transform::TransformKernel::from_fn(m, |k| {
                    BigReal::from_rational(&(&u + BigRational::from(BigInt::from(k))), wb).ln()
                });
                let rhs = crate::transform::alt_binom_sum_real(&kernel);
                let allow = BigReal::one(wb).mul_pow2(-(96 + 64 - 12));
                assert!(lhs.abs_diff(&rhs) <= allow, "u = {u}, m = {m}");
            }
        }
    }

    #[test]
    fn reference_error_shrinks_from_order_20_to_40() {
        let p = policy96();
        for u in [rat(1, 2), rat(1, 1), rat(2, 1)] {
            let e20 = thm1_partial(&u, 20, &p)
                .unwrap()
                .reference_error
                .unwrap()
                .abs();
            let e40 = thm1_partial(&u, 40, &p)
                .unwrap()
                .reference_error
                .unwrap()
                .abs();
            assert!(e40 < e20, "reciprocal sum at u = {u}");

            let e20 = remark2_single(&u, 20, &p)
                .unwrap()
                .reference_error
                .unwrap()
                .abs();
            let e40 = remark2_single(&u, 40, &p)
                .unwrap()
                .reference_error
                .unwrap()
                .abs();
            assert!(e40 < e20, "logarithmic series at u = {u}");

            let e20 = cor3_product_single(&u, 20, &p)
                .unwrap()
                .result
                .reference_error
                .unwrap()
                .abs();
            let e40 = cor3_product_single(&u, 40, &p)
                .unwrap()
                .result
                .reference_error
                .unwrap()
                .abs();
            assert!(e40 < e20, "product at u = {u}");
        }
        let e20 = thm4_partial(20, &p).reference_error.unwrap().abs();
        let e40 = thm4_partial(40, &p).reference_error.unwrap().abs();
        assert!(e40 < e20, "factorial-log series");
    }

    #[test]
    fn remark2_double_deep_truncations_approach_limit() {
        let p = PrecisionPolicy::new(128);
        let one = BigReal::one(64);
        let d50 = remark2_double(&rat(1, 1), 50, &p).unwrap();
        let d200 = remark2_double(&rat(1, 1), 200, &p).unwrap();
        assert!(d200.value.abs_diff(&one) < d50.value.abs_diff(&one));
    }

    #[test]
    fn cor3_double_factor_lists_match_known_values() {
        let p = policy96();
        let cases: [(i64, [(i64, i64); 4]); 3] = [
            (1, [(2, 1), (2, 3), (8, 9), (128, 135)]),
            (2, [(3, 1), (3, 4), (15, 16), (125, 128)]),
            (3, [(4, 1), (4, 5), (24, 25), (864, 875)]),
        ];
        for (u, factors) in cases {
            let r = cor3_product_double(&rat(u, 1), 3, &p).unwrap();
            for (m, (num, den)) in factors.iter().enumerate() {
                assert_eq!(
                    r.per_m_exact[m].as_ref().unwrap(),
                    &rat(*num, *den),
                    "u = {u}, m = {m}"
                );
            }
        }
    }

    #[test]
    fn thm4_small_orders() {
        let p = PrecisionPolicy::new(128);
        let r = thm4_partial(1, &p);
        assert!(r.value.is_zero());
        assert!(r.proven_bound.is_none());
        // at m = 1 the reference error equals γ itself
        assert_eq!(r.reference_error.unwrap(), gamma_reference(128));

        let r = thm4_partial(2, &p);
        assert_eq!(r.value.to_decimal(5), "0.34657");
        let err = r.reference_error.unwrap();
        assert_eq!(err.to_decimal(5), "0.23064");
        let bound = r.proven_bound.unwrap();
        assert_eq!(bound.to_decimal(5), "0.38481");
        assert!(err.is_positive() && err < bound);
    }

    #[test]
    fn thm4_sandwich_at_m50() {
        let p = PrecisionPolicy::new(128);
        let r = thm4_partial(50, &p);
        let err = r.reference_error.unwrap();
        let bound = r.proven_bound.unwrap();
        assert!(err.is_positive() && err < bound);
        // bound = 2γ/51 ≈ 0.02264
        assert_eq!(bound.to_decimal(5), "0.02264");
    }

    #[test]
    fn gamma_remainder_first_term_and_limit() {
        let p = PrecisionPolicy::new(128);
        let g = gamma_remainder_series(1, 1, &p);
        assert_eq!(g.partial.to_decimal(5), "0.30685"); // 1 − ln 2
        let g = gamma_remainder_series(1, 10_000, &p);
        let gamma = gamma_reference(128);
        // tail ~ 1/(2N); stay within the domination bound
        let err = g.partial.abs_diff(&gamma);
        assert!(err < BigReal::from_rational(&g.tail_bound, 128));
    }

    #[test]
    fn gamma_remainder_identity_small_m() {
        // Σ C(m,k)(−1)^{k+1}/k·ln(k!) + γ = Σ_j ∫_0^{1/j} g_m(1/u) du
        let p = PrecisionPolicy::new(128);
        for m in [2u32, 5] {
            let lhs = &thm4_partial_signed(m, &p) + &gamma_reference(128);
            let nodes = NodeSet::consecutive(m as u64);
            let n = crate::conjectures::remainder_terms_for(&nodes, &rat(1, 1_000_000_000));
            let rhs = gamma_remainder_series(m, n, &p).partial;
            let diff = lhs.abs_diff(&rhs);
            assert!(
                diff < BigReal::from_rational(&rat(1, 100_000_000), 128),
                "m = {m}, diff = {}",
                diff.to_decimal(12)
            );
        }
    }

    #[test]
    fn cor5_small_orders_and_trend() {
        let p = PrecisionPolicy::new(128);
        let r = cor5_partial(1, &p);
        assert!(r.value.is_zero());
        let r = cor5_partial(2, &p);
        assert_eq!(r.value.to_decimal(5), "0.34657"); // (ln 2)/2
        let e10 = cor5_partial(10, &p).reference_error.unwrap().abs();
        let e50 = cor5_partial(50, &p).reference_error.unwrap().abs();
        assert!(e50 < e10);
    }
}
