//! Numerical evaluators and residual reporters for the conjectured formulas:
//! nested-logarithm transforms, the power-series identity, the normalized
//! double-factorial sum, Lagrange-weighted remainder decompositions of `γ`,
//! and the constants `y_k`.
//!
//! Evaluators here never assert a conjectured limit. They produce values,
//! residuals against the relevant reference constant, and rigorous bounds on
//! their own truncation error; verdicts are the caller's job.
//!
//! The shared workhorse is the remainder integral
//! `∫_0^{1/n} ∏_k a_k x/(1 + a_k x) dx` over a set of distinct positive
//! integer nodes `a_k`. The integrand is a degree-balanced rational function,
//! so it splits as `1 + Σ_k c_k/(1 + a_k x)` with exact rational residues
//! `c_k`, and each integral has the closed form
//! `1/n + Σ_k (c_k/a_k)·ln(1 + a_k/n)`. An adaptive Romberg quadrature over
//! the raw product form serves as an independent oracle for that derivation.
//!
//! Sums of the integrals over `n` converge like `n^{−m}` for `m` nodes, so a
//! single-node series needs ~10^12 direct terms to reach 10^{−12}. The tail
//! beyond a directly-summed prefix is therefore evaluated by Euler–Maclaurin
//! correction — every derivative and the antiderivative of the term function
//! have elementary closed forms — with a rigorous remainder bound that is
//! checked against the requested tail target.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bignum::{
    bernoulli_even, div_round, double_factorial, factorial, gamma_reference, ln_pi_half_reference,
    BigReal, PrecisionPolicy,
};
use crate::report::PartialResult;
use crate::transform::{alt_binom_sum_real, weighted_log_sum, TransformKernel};
use crate::Error;

/// Distinct positive integer nodes, kept sorted for determinism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeSet {
    nodes: Vec<u64>,
}

impl NodeSet {
    pub fn new(mut nodes: Vec<u64>) -> Result<Self, Error> {
        let got = format!("{nodes:?}");
        if nodes.is_empty() || nodes.contains(&0) {
            return Err(Error::InvalidNodes { got });
        }
        nodes.sort_unstable();
        if nodes.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidNodes { got });
        }
        Ok(Self { nodes })
    }

    /// The node set `{1, 2, …, m}`; with these nodes the remainder integrand
    /// is exactly `g_m(1/x)`.
    pub fn consecutive(m: u64) -> Self {
        assert!(m >= 1);
        Self {
            nodes: (1..=m).collect(),
        }
    }

    pub fn nodes(&self) -> &[u64] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn max(&self) -> u64 {
        *self.nodes.last().unwrap()
    }

    fn product(&self) -> BigInt {
        self.nodes
            .iter()
            .fold(BigInt::one(), |p, &a| p * BigInt::from(a))
    }
}

/// Lagrange interpolation weights `f(a_k) = ∏_{n≠k} a_n/(a_n − a_k)`, exact.
/// For a single node the empty product gives `f(a_1) = 1`.
pub fn lagrange_weights(nodes: &NodeSet) -> Vec<BigRational> {
    nodes
        .nodes
        .iter()
        .map(|&ak| {
            let mut w = BigRational::one();
            for &an in &nodes.nodes {
                if an != ak {
                    w *= BigRational::new(BigInt::from(an), BigInt::from(an as i64 - ak as i64));
                }
            }
            w
        })
        .collect()
}

/// Partial-fraction form of the remainder integrand:
/// `∏_k a_k x/(1 + a_k x) = constant + Σ_k coeffs[k]/(1 + a_k x)`.
#[derive(Clone, Debug)]
pub struct PartialFractions {
    pub constant: BigRational,
    pub coeffs: Vec<BigRational>,
}

impl PartialFractions {
    /// Evaluate the decomposed form at a rational point, exactly.
    pub fn eval(&self, nodes: &NodeSet, x: &BigRational) -> BigRational {
        let mut v = self.constant.clone();
        for (c, &a) in self.coeffs.iter().zip(&nodes.nodes) {
            v += c / (BigRational::one() + BigRational::from(BigInt::from(a)) * x);
        }
        v
    }
}

fn pow_int(b: &BigInt, e: u32) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= b;
    }
    acc
}

fn rat_int(n: u64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// Residues of the integrand, computed from the polynomial form rather than
/// a Lagrange product: with `D(x) = ∏(1 + a_j x)` and
/// `N(x) = (∏ a_j)·x^m − D(x)`, the residue of `N/D` at the simple pole
/// `x_k = −1/a_k` is `N(x_k)/D'(x_k)`, and `c_k = a_k·N(x_k)/D'(x_k)`.
/// These come out equal to minus the Lagrange weights; the two routes are
/// kept independent so each can test the other.
pub fn partial_fractions(nodes: &NodeSet) -> PartialFractions {
    let m = nodes.len();
    // D(x) coefficients, low order first.
    let mut d = vec![BigInt::one()];
    for &a in &nodes.nodes {
        let mut next = vec![BigInt::zero(); d.len() + 1];
        for (i, c) in d.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c * BigInt::from(a);
        }
        d = next;
    }
    let dprime: Vec<BigInt> = d
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i as u64))
        .collect();
    let lead = nodes.product();
    let constant = BigRational::new(lead.clone(), d[m].clone());
    let eval = |poly: &[BigInt], x: &BigRational| -> BigRational {
        let mut acc = BigRational::zero();
        for c in poly.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    };
    let coeffs = nodes
        .nodes
        .iter()
        .map(|&ak| {
            let xk = BigRational::new(BigInt::from(-1), BigInt::from(ak));
            let mut num = BigRational::from(lead.clone());
            for _ in 0..m {
                num *= &xk;
            }
            num -= eval(&d, &xk);
            BigRational::from(BigInt::from(ak)) * num / eval(&dprime, &xk)
        })
        .collect();
    PartialFractions { constant, coeffs }
}

/// Closed form of `∫_0^{1/n} ∏_k a_k x/(1 + a_k x) dx`:
/// `constant/n + Σ_k (c_k/a_k)·ln(1 + a_k/n)`.
pub fn remainder_integral(nodes: &NodeSet, n: u64, frac_bits: u32) -> BigReal {
    assert!(n >= 1);
    let pf = partial_fractions(nodes);
    remainder_integral_with(&pf, nodes, n, frac_bits)
}

fn remainder_integral_with(
    pf: &PartialFractions,
    nodes: &NodeSet,
    n: u64,
    frac_bits: u32,
) -> BigReal {
    let mut acc = BigReal::from_rational(&(&pf.constant / rat_int(n)), frac_bits);
    for (c, &a) in pf.coeffs.iter().zip(&nodes.nodes) {
        let w = c / rat_int(a);
        let log = BigReal::from_rational(
            &BigRational::new(BigInt::from(n + a), BigInt::from(n)),
            frac_bits,
        )
        .ln();
        acc = &acc + &(&BigReal::from_rational(&w, frac_bits) * &log);
    }
    acc
}

/// Adaptive Romberg quadrature of the raw product integrand over `[0, 1/n]`,
/// refining until the last two diagonal extrapolants differ by less than
/// `tol/2`; returns the value and that difference as the error estimate.
/// This is the oracle for the closed form, so it never sees the residues.
pub fn remainder_integral_quadrature(
    nodes: &NodeSet,
    n: u64,
    frac_bits: u32,
    tol: &BigReal,
) -> (BigReal, BigReal) {
    assert!(n >= 1);
    let wq = frac_bits + 16;
    let b = BigRational::new(BigInt::one(), BigInt::from(n));
    let eval = |x: &BigRational| -> BigReal {
        let xr = BigReal::from_rational(x, wq);
        let one = BigReal::one(wq);
        let mut p = BigReal::one(wq);
        for &a in &nodes.nodes {
            let t = xr.mul_u64(a);
            p = &p * &(&t / &(&one + &t));
        }
        p
    };
    let half_tol = tol.mul_pow2(-1);
    let width = BigReal::from_rational(&b, wq);
    // The integrand vanishes at 0, so the base trapezoid is f(b)·width/2.
    let mut trap = &eval(&b).mul_pow2(-1) * &width;
    let mut diag: Vec<BigReal> = vec![trap.clone()];
    let max_level = 18;
    for level in 1..=max_level {
        let pts = 1u64 << (level - 1);
        let mut new_sum = BigReal::zero(wq);
        for i in 0..pts {
            let x = &b * BigRational::new(BigInt::from(2 * i + 1), BigInt::one() << level);
            new_sum = &new_sum + &eval(&x);
        }
        trap = &trap.mul_pow2(-1) + &(&new_sum * &width.mul_pow2(-(level as i64)));
        let mut row = vec![trap.clone()];
        let mut pow4 = BigInt::one();
        for j in 1..=level {
            pow4 *= 4;
            let refined = &row[j - 1].mul_int(&pow4) - &diag[j - 1];
            row.push(refined.div_int(&(&pow4 - BigInt::one())));
        }
        let est = row[level].abs_diff(&diag[level - 1]);
        diag = row;
        // a minimum depth guards against coincidental low-level agreement
        // (e.g. nodes (1,2) on [0,1] reproduce 1/6 at the first two levels)
        if level >= 8 && est < half_tol {
            return (diag[level].clone(), est);
        }
    }
    let est = diag[max_level].abs_diff(&diag[max_level - 1]);
    (diag[max_level].clone(), est)
}

/// Domination bound on one series term: the integrand is at most `(∏a)·x^m`
/// on `[0, 1/n]`, so the `n`-th integral is at most `(∏a)/((m+1)·n^{m+1})`.
pub fn remainder_term_bound(nodes: &NodeSet, n: u64) -> BigRational {
    let m = nodes.len() as u32;
    BigRational::new(
        nodes.product(),
        BigInt::from(m + 1) * pow_int(&BigInt::from(n), m + 1),
    )
}

/// Bound on the series tail `Σ_{n>N}` by integral comparison of the term
/// bounds: `≤ (∏a)/((m+1)·m·N^m)`.
pub fn remainder_tail_bound(nodes: &NodeSet, n_from: u64) -> BigRational {
    let m = nodes.len() as u32;
    BigRational::new(
        nodes.product(),
        BigInt::from(m + 1) * BigInt::from(m) * pow_int(&BigInt::from(n_from), m),
    )
}

/// Smallest term count whose domination tail bound is below `tol`.
pub fn remainder_terms_for(nodes: &NodeSet, tol: &BigRational) -> u64 {
    assert!(tol.is_positive());
    let mut n = 1u64;
    while remainder_tail_bound(nodes, n) > *tol {
        n = n.saturating_mul(2);
        assert!(n < 1 << 40, "tail bound unreachable by direct summation");
    }
    let (mut lo, mut hi) = (n / 2, n);
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        if remainder_tail_bound(nodes, mid) > *tol {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}

/// Direct partial sum `Σ_{n=1}^{terms}` of the remainder integrals.
///
/// Computed through the exact telescoped grouping
/// `H_N + Σ_k (c_k/a_k)·(Σ_{j=N+1}^{N+a_k} ln j − Σ_{j=2}^{a_k} ln j)`,
/// identical in exact arithmetic to summing the closed-form integrals in
/// ascending `n` but needing only `O(max a_k)` logarithm evaluations.
pub fn remainder_series_direct(nodes: &NodeSet, terms: u64, frac_bits: u32) -> BigReal {
    let pf = partial_fractions(nodes);
    remainder_series_direct_with(&pf, nodes, terms, frac_bits)
}

fn fixed_harmonic(n: u64, frac_bits: u32) -> BigReal {
    // extra bits absorb the n rounded reciprocals
    let fh = frac_bits + 32;
    let one = BigInt::one() << fh;
    let mut h = BigInt::zero();
    for i in 1..=n {
        h += div_round(&one, &BigInt::from(i));
    }
    BigReal::from_mantissa(h, fh).with_frac_bits(frac_bits)
}

fn remainder_series_direct_with(
    pf: &PartialFractions,
    nodes: &NodeSet,
    terms: u64,
    frac_bits: u32,
) -> BigReal {
    assert!(terms >= 1);
    let h = fixed_harmonic(terms, frac_bits);
    let mut acc = &h * &BigReal::from_rational(&pf.constant, frac_bits);
    for (c, &a) in pf.coeffs.iter().zip(&nodes.nodes) {
        let mut logsum = BigReal::zero(frac_bits);
        for j in terms + 1..=terms + a {
            logsum = &logsum + &BigReal::from_u64(j, frac_bits).ln();
        }
        for j in 2..=a {
            logsum = &logsum - &BigReal::from_u64(j, frac_bits).ln();
        }
        let w = c / rat_int(a);
        acc = &acc + &(&BigReal::from_rational(&w, frac_bits) * &logsum);
    }
    acc
}

/// `h^{(d)}(x)` at integer `x`, exactly, for the term function
/// `h(x) = constant/x + Σ_k w_k·ln(1 + a_k/x)` with `w_k = c_k/a_k`:
/// `h^{(d)}(x) = (−1)^d·d!·constant/x^{d+1}
///             + (−1)^{d−1}·(d−1)!·Σ_k w_k·(1/(x+a_k)^d − 1/x^d)`.
fn term_derivative(pf: &PartialFractions, nodes: &NodeSet, x: u64, d: u32) -> BigRational {
    assert!(d >= 1);
    let xb = BigInt::from(x);
    let mut fac_minus = BigInt::one(); // (d−1)!
    for i in 2..d as u64 {
        fac_minus *= BigInt::from(i);
    }
    let fac_d = &fac_minus * BigInt::from(d as u64); // d!
    let mut t1 = BigRational::new(
        &fac_d * pf.constant.numer(),
        pf.constant.denom() * pow_int(&xb, d + 1),
    );
    if d % 2 == 1 {
        t1 = -t1;
    }
    let mut s = BigRational::zero();
    for (c, &a) in pf.coeffs.iter().zip(&nodes.nodes) {
        let w = c / rat_int(a);
        let diff = BigRational::new(BigInt::one(), pow_int(&BigInt::from(x + a), d))
            - BigRational::new(BigInt::one(), pow_int(&xb, d));
        s += w * diff;
    }
    let mut t2 = BigRational::from(fac_minus) * s;
    if d % 2 == 0 {
        t2 = -t2;
    }
    t1 + t2
}

/// Rigorous bound on the Euler–Maclaurin remainder after `j_corrections`
/// even-order corrections at cut `n0`:
/// `|R| ≤ 2ζ(2J)/(2π)^{2J}·∫_{n0}^∞|h^{(2J)}| ≤ 4·(2J−1)!·(1+Σ|c_k|)/(6^{2J}·n0^{2J})`
/// (using `ζ(2J) < 2` and `2π > 6` to keep the bound rational).
fn em_remainder_bound(pf: &PartialFractions, n0: u64, j_corrections: u32) -> BigRational {
    let jj = j_corrections;
    assert!(jj >= 1);
    let mut fac = BigInt::one();
    for i in 2..=(2 * jj as u64 - 1) {
        fac *= BigInt::from(i);
    }
    let mut sum_abs = pf.constant.abs();
    for c in &pf.coeffs {
        sum_abs += c.abs();
    }
    let num = BigRational::from(BigInt::from(4) * fac) * sum_abs;
    let den = pow_int(&BigInt::from(6), 2 * jj) * pow_int(&BigInt::from(n0), 2 * jj);
    num / BigRational::from(den)
}

/// Euler–Maclaurin value of the tail `Σ_{n>n0} h(n)`:
/// `∫_{n0}^∞ h − h(n0)/2 − Σ_{j=1}^{J} B_{2j}/(2j)!·h^{(2j−1)}(n0)`, with
/// `∫_{n0}^∞ h = −constant − A(n0)` and
/// `A(x) = constant·ln x + Σ_k w_k·((x+a_k)·ln(x+a_k) − x·ln x)`.
fn em_tail_value(
    pf: &PartialFractions,
    nodes: &NodeSet,
    n0: u64,
    j_corrections: u32,
    frac_bits: u32,
) -> BigReal {
    // The integral only converges because constant + Σ c_k = 0 (the
    // integrand vanishes at x = 0); check it exactly.
    let mut csum = pf.constant.clone();
    for c in &pf.coeffs {
        csum += c;
    }
    assert!(csum.is_zero(), "degree-balanced integrand expected");

    let ln_n0 = BigReal::from_u64(n0, frac_bits).ln();
    let mut a_val = &BigReal::from_rational(&pf.constant, frac_bits) * &ln_n0;
    for (c, &a) in pf.coeffs.iter().zip(&nodes.nodes) {
        let w = c / rat_int(a);
        let ln_na = BigReal::from_u64(n0 + a, frac_bits).ln();
        let piece = &ln_na.mul_u64(n0 + a) - &ln_n0.mul_u64(n0);
        a_val = &a_val + &(&BigReal::from_rational(&w, frac_bits) * &piece);
    }
    let integral = -&(&BigReal::from_rational(&pf.constant, frac_bits) + &a_val);
    let h_n0 = remainder_integral_with(pf, nodes, n0, frac_bits);
    let mut corrections = BigRational::zero();
    let mut fac = BigInt::from(2); // (2j)! starting at j = 1
    for j in 1..=j_corrections {
        if j > 1 {
            fac *= BigInt::from(2 * j as u64 - 1) * BigInt::from(2 * j as u64);
        }
        corrections += bernoulli_even(j as usize) / BigRational::from(fac.clone())
            * term_derivative(pf, nodes, n0, 2 * j - 1);
    }
    &(&integral - &h_n0.mul_pow2(-1)) - &BigReal::from_rational(&corrections, frac_bits)
}

/// A series value together with a rigorous bound on its truncation error.
#[derive(Clone, Debug)]
pub struct SeriesSum {
    pub value: BigReal,
    pub truncation_bound: BigRational,
}

/// `Σ_{n=1}^∞ ∫_0^{1/n} ∏_k a_k x/(1+a_k x) dx` with truncation error
/// rigorously below `tail_target`: a direct prefix plus the Euler–Maclaurin
/// tail, with the cut and correction depth raised until the remainder bound
/// clears the target.
pub fn remainder_series(nodes: &NodeSet, frac_bits: u32, tail_target: &BigRational) -> SeriesSum {
    assert!(tail_target.is_positive());
    let pf = partial_fractions(nodes);
    let mut n0 = 64u64.max(8 * nodes.max());
    let mut jj = 4u32;
    let half_target = tail_target / BigRational::from(BigInt::from(2));
    let bound = loop {
        let b = em_remainder_bound(&pf, n0, jj);
        if b <= half_target {
            break b;
        }
        if jj < 10 {
            jj += 2;
        } else {
            n0 *= 2;
        }
        assert!(n0 < 1 << 30, "tail target out of reach");
    };
    let direct = remainder_series_direct_with(&pf, nodes, n0, frac_bits);
    let tail = em_tail_value(&pf, nodes, n0, jj, frac_bits);
    SeriesSum {
        value: &direct + &tail,
        truncation_bound: bound,
    }
}

/// Nested-logarithm transform: order-`m` partial sum of
/// `Σ C(m,k)(−1)^{k+1}/k · ln(1 + z_1·ln(1 + z_2·…·ln(1 + z_n·k)…))`,
/// with residual against the conjectured limit `∏ z_i`.
///
/// With a single `z` this reduces — bit for bit — to the order-`m`
/// logarithmic series for `u = z` ([`crate::constants::remark2_single`]):
/// both form the same exact rational argument and feed the same transform.
pub fn conj1_partial(
    zs: &[BigRational],
    m: u32,
    policy: &PrecisionPolicy,
) -> Result<PartialResult, Error> {
    if zs.is_empty() {
        return Err(Error::InvalidParameter("conj1 needs at least one z".into()));
    }
    if zs.iter().any(|z| !z.is_positive()) {
        return Err(Error::NonPositive { name: "z" });
    }
    let wb = policy.working_bits(m as u64);
    let value = weighted_log_sum(m, |k| nested_log(zs, k, wb));
    let prod = zs.iter().fold(BigRational::one(), |p, z| p * z);
    let reference = BigReal::from_rational(&prod, wb);
    Ok(PartialResult {
        order: m as u64,
        reference_error: Some(&reference - &value),
        value,
        exact_value: None,
        exact_residual: None,
        proven_bound: None,
    })
}

fn nested_log(zs: &[BigRational], k: u32, frac_bits: u32) -> BigReal {
    let inner = BigRational::one() + zs.last().unwrap() * BigRational::from(BigInt::from(k));
    let mut x = BigReal::from_rational(&inner, frac_bits).ln();
    for z in zs[..zs.len() - 1].iter().rev() {
        let zx = x.mul_int(z.numer()).div_int(z.denom());
        let arg = &BigReal::one(frac_bits) + &zx;
        assert!(arg.is_positive(), "nested log argument must stay positive");
        x = arg.ln();
    }
    x
}

/// Order-`m` partial sum of `Σ_{n=1}^m C(m,n)(−1)^{n+1}/(z(n+1)+1)`, with
/// residual against the power series `Σ (−1)^n z^n/(n!)²`. The denominator
/// is read literally as `z·(n+1) + 1`.
pub fn conj2_partial(
    z: &BigRational,
    m: u32,
    policy: &PrecisionPolicy,
) -> Result<PartialResult, Error> {
    if z.is_negative() {
        return Err(Error::Negative { name: "z" });
    }
    let wb = policy.working_bits(m as u64);
    let kernel = TransformKernel::from_fn(m, |n| {
        let den = z * BigRational::from(BigInt::from(n + 1)) + BigRational::one();
        BigReal::from_rational(&den.recip(), wb)
    });
    let value = alt_binom_sum_real(&kernel);
    let reference = conj2_reference(z, policy)?;
    Ok(PartialResult {
        order: m as u64,
        reference_error: Some(&reference - &value),
        value,
        exact_value: None,
        exact_residual: None,
        proven_bound: None,
    })
}

/// `Σ_{n=0}^∞ (−1)^n z^n/(n!)²` for `z ≥ 0`, summed in exact rationals until
/// the terms are decreasing and the next one is below `2^{−working−8}`; the
/// alternating-series bound then caps the tail by that first omitted term.
pub fn conj2_reference(z: &BigRational, policy: &PrecisionPolicy) -> Result<BigReal, Error> {
    if z.is_negative() {
        return Err(Error::Negative { name: "z" });
    }
    let wb = policy.working_bits(0);
    let threshold = BigRational::new(BigInt::one(), BigInt::one() << (wb + 8));
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    let mut n = 0u64;
    loop {
        n += 1;
        term *= z / BigRational::from(BigInt::from(n * n));
        if n % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        let next = &term * z / BigRational::from(BigInt::from((n + 1) * (n + 1)));
        if next <= term && next < threshold {
            break;
        }
        assert!(n < 100_000, "series failed to converge");
    }
    Ok(BigReal::from_rational(&sum, wb))
}

/// First transcribed form of the normalized double-factorial transform:
/// `Σ_{k=1}^m C(m,k)(−1)^k/(k·W_m)·ln(k!!/(k−1)!!)` with
/// `W_m = Σ_{n=1}^m 2^{n−1}/n`, reported against `ln(π/2)`.
///
/// The per-term division by `k·W_m` is the literal reading of the formula;
/// see the crate docs for the transcription ambiguity. The second displayed
/// form of this conjecture contains an unbound index `j` as transcribed and
/// is not implemented.
pub fn conj3_partial(m: u32, policy: &PrecisionPolicy) -> PartialResult {
    let wb = policy.working_bits(m as u64);
    let mut w = BigRational::zero();
    for n in 1..=m {
        w += BigRational::new(BigInt::one() << (n - 1), BigInt::from(n));
    }
    let s = weighted_log_sum(m, |k| {
        let ratio = BigRational::new(double_factorial(k as u64), double_factorial(k as u64 - 1));
        BigReal::from_rational(&ratio, wb).ln()
    });
    // (−1)^k = −(−1)^{k+1}, so the literal sum is −(weighted sum)/W_m.
    let value = -&(&s * &BigReal::from_rational(&w.recip(), wb));
    let reference = ln_pi_half_reference(policy.target_bits);
    PartialResult {
        order: m as u64,
        reference_error: Some(&reference - &value),
        value,
        exact_value: None,
        exact_residual: None,
        proven_bound: None,
    }
}

/// The Lagrange-weighted finite part `Σ_k f(a_k)·ln(a_k!)/a_k`.
pub fn conj4_finite_part(nodes: &NodeSet, frac_bits: u32) -> BigReal {
    let weights = lagrange_weights(nodes);
    let mut acc = BigReal::zero(frac_bits);
    for (w, &a) in weights.iter().zip(nodes.nodes()) {
        if a == 1 {
            continue; // ln(1!) = 0
        }
        let lf = BigReal::from_bigint(&factorial(a), frac_bits).ln();
        let scaled = lf
            .mul_int(w.numer())
            .div_int(&(w.denom() * BigInt::from(a)));
        acc = &acc + &scaled;
    }
    acc
}

/// Report for the conjectured decomposition
/// `γ =? Σ_k f(a_k)·ln(a_k!)/a_k + Σ_n ∫_0^{1/n} ∏_k (1 + (a_k x)^{−1})^{−1} dx`,
/// evaluated as transcribed; `residual = total − γ_ref`.
#[derive(Clone, Debug)]
pub struct Conj4Report {
    pub finite_part: BigReal,
    pub series: SeriesSum,
    pub total: BigReal,
    pub residual: BigReal,
}

/// Evaluate the conjectured decomposition with the series tail rigorously
/// below `tail_target`.
pub fn conj4_residual(
    nodes: &NodeSet,
    policy: &PrecisionPolicy,
    tail_target: &BigRational,
) -> Conj4Report {
    let wb = policy.working_bits(nodes.len() as u64);
    let finite_part = conj4_finite_part(nodes, wb);
    let series = remainder_series(nodes, wb, tail_target);
    let total = &finite_part + &series.value;
    let residual = &total - &gamma_reference(policy.target_bits);
    Conj4Report {
        finite_part,
        series,
        total,
        residual,
    }
}

/// Bare truncated evaluation (finite part plus `terms` series terms, no tail
/// correction); used for convergence-trend evidence.
pub fn conj4_partial(nodes: &NodeSet, policy: &PrecisionPolicy, terms: u64) -> BigReal {
    let wb = policy.working_bits(nodes.len() as u64);
    let finite = conj4_finite_part(nodes, wb);
    &finite + &remainder_series_direct(nodes, terms, wb)
}

/// `y_k = Σ_{n=1}^∞ ∫_0^{1/n} (1 + (kx)^{−1})^{−1} dx`, with truncation error
/// rigorously below `tail_target`.
pub fn y_value(k: u64, policy: &PrecisionPolicy, tail_target: &BigRational) -> SeriesSum {
    let nodes = NodeSet::new(vec![k]).expect("k >= 1");
    remainder_series(&nodes, policy.working_bits(1), tail_target)
}

/// Bare truncated `y_k` partial sum over `terms` integrals.
pub fn y_partial(k: u64, policy: &PrecisionPolicy, terms: u64) -> BigReal {
    let nodes = NodeSet::new(vec![k]).expect("k >= 1");
    remainder_series_direct(&nodes, terms, policy.working_bits(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn nodes(v: &[u64]) -> NodeSet {
        NodeSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn node_set_validation() {
        assert!(NodeSet::new(vec![]).is_err());
        assert!(NodeSet::new(vec![0]).is_err());
        assert!(NodeSet::new(vec![2, 2]).is_err());
        assert_eq!(NodeSet::new(vec![5, 1, 3]).unwrap().nodes(), &[1, 3, 5]);
        assert_eq!(NodeSet::consecutive(3).nodes(), &[1, 2, 3]);
    }

    #[test]
    fn lagrange_weight_examples() {
        assert_eq!(lagrange_weights(&nodes(&[1])), vec![rat(1, 1)]);
        assert_eq!(
            lagrange_weights(&nodes(&[1, 2])),
            vec![rat(2, 1), rat(-1, 1)]
        );
        assert_eq!(
            lagrange_weights(&nodes(&[1, 2, 3])),
            vec![rat(3, 1), rat(-3, 1), rat(1, 1)]
        );
    }

    #[test]
    fn lagrange_weights_sum_to_one() {
        for set in [
            vec![1],
            vec![2],
            vec![1, 2],
            vec![1, 2, 3],
            vec![2, 5, 7],
            vec![1, 4, 9, 12],
            vec![3, 5, 6, 8, 11],
            vec![1, 2, 3, 4, 5, 12],
        ] {
            let ns = nodes(&set);
            let sum: BigRational = lagrange_weights(&ns).into_iter().sum();
            assert_eq!(sum, BigRational::one(), "nodes {set:?}");
        }
    }

    #[test]
    fn residues_are_negated_lagrange_weights() {
        for set in [vec![1], vec![2], vec![1, 2], vec![1, 2, 3], vec![2, 5, 7]] {
            let ns = nodes(&set);
            let pf = partial_fractions(&ns);
            assert_eq!(pf.constant, BigRational::one());
            let weights = lagrange_weights(&ns);
            for (c, f) in pf.coeffs.iter().zip(&weights) {
                assert_eq!(c, &(-f), "nodes {set:?}");
            }
        }
    }

    #[test]
    fn partial_fraction_reconstruction_pointwise() {
        // Deterministic pseudo-random sample of x in (0, 1]; both routes are
        // exact rationals here, so equality is exact.
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for set in [vec![1, 2], vec![2, 5, 7], vec![1, 4, 9]] {
            let ns = nodes(&set);
            let pf = partial_fractions(&ns);
            for _ in 0..20 {
                let q = (next() % 1000) + 1;
                let p = (next() % q) + 1;
                let x = rat(p as i64, q as i64);
                let direct = set.iter().fold(BigRational::one(), |acc, &a| {
                    let ax = BigRational::from(BigInt::from(a)) * &x;
                    acc * &ax / (BigRational::one() + ax)
                });
                assert_eq!(pf.eval(&ns, &x), direct, "nodes {set:?}, x = {x}");
            }
        }
    }

    #[test]
    fn remainder_integral_single_node_closed_form() {
        // nodes (1): ∫_0^{1/n} x/(1+x) dx = 1/n − ln(1 + 1/n).
        let f = 192;
        for n in [1u64, 2, 10] {
            let got = remainder_integral(&nodes(&[1]), n, f);
            let want = &BigReal::from_rational(&rat(1, n as i64), f)
                - &BigReal::from_rational(&rat(n as i64 + 1, n as i64), f).ln();
            assert!(got.abs_diff(&want) <= got.ulp().mul_u64(16), "n = {n}");
        }
        let one_minus_ln2 = remainder_integral(&nodes(&[1]), 1, f);
        assert_eq!(one_minus_ln2.to_decimal(20), "0.30685281944005469058");
    }

    #[test]
    fn quadrature_agrees_with_closed_form_smoke() {
        let f = 160;
        let tol = BigReal::one(f).mul_pow2(-(f as i64) + 8);
        for (set, n) in [(vec![1], 1u64), (vec![1, 2], 1), (vec![2, 5, 7], 2)] {
            let ns = nodes(&set);
            let closed = remainder_integral(&ns, n, f);
            let (quad, est) = remainder_integral_quadrature(&ns, n, f, &tol);
            assert!(est < tol, "estimate too large for {set:?}");
            assert!(
                closed.abs_diff(&quad) < tol,
                "mismatch for {set:?}, n = {n}"
            );
        }
    }

    #[test]
    fn term_and_tail_bounds_dominate() {
        let f = 160;
        for set in [vec![1], vec![1, 2], vec![2, 5, 7]] {
            let ns = nodes(&set);
            for n in [1u64, 3, 10] {
                let term = remainder_integral(&ns, n, f);
                let bound = BigReal::from_rational(&remainder_term_bound(&ns, n), f);
                assert!(term <= bound, "term bound fails for {set:?}, n = {n}");
            }
            // tail bound dominates a stretch of actual terms
            let tail_bound = BigReal::from_rational(&remainder_tail_bound(&ns, 20), f);
            let mut partial = BigReal::zero(f);
            for n in 21..200 {
                partial = &partial + &remainder_integral(&ns, n, f);
            }
            assert!(partial < tail_bound, "tail bound fails for {set:?}");
        }
    }

    #[test]
    fn direct_series_matches_termwise_sum() {
        let f = 192;
        for set in [vec![1], vec![1, 2], vec![2, 5, 7]] {
            let ns = nodes(&set);
            let telescoped = remainder_series_direct(&ns, 50, f);
            let mut termwise = BigReal::zero(f);
            for n in 1..=50 {
                termwise = &termwise + &remainder_integral(&ns, n, f);
            }
            assert!(
                telescoped.abs_diff(&termwise) <= telescoped.ulp().mul_u64(1 << 12),
                "nodes {set:?}"
            );
        }
    }

    #[test]
    fn accelerated_series_reaches_gamma_for_single_node() {
        // Σ (1/n − ln(1+1/n)) = γ; the Euler–Maclaurin tail must land within
        // the requested truncation target of the reference.
        let policy = PrecisionPolicy::new(128);
        let target = rat(1, 10_000_000_000_000); // 1e-13
        let y1 = y_value(1, &policy, &target);
        assert!(y1.truncation_bound <= target);
        let gamma = gamma_reference(policy.target_bits);
        let err = y1.value.abs_diff(&gamma);
        let allow = BigReal::from_rational(&rat(1, 1_000_000_000_000), 128); // 1e-12
        assert!(err < allow, "y_1 error {}", err.to_decimal(20));
    }

    #[test]
    fn y2_self_consistent_and_positive() {
        let policy = PrecisionPolicy::new(96);
        // two bare truncations agree within the domination tail bound of the
        // shorter one
        let p1 = y_partial(2, &policy, 500);
        let p2 = y_partial(2, &policy, 2000);
        let bound = BigReal::from_rational(&remainder_tail_bound(&nodes(&[2]), 500), 128);
        assert!(p2 > p1);
        assert!(p2.abs_diff(&p1) <= bound);
        for k in 1..=6 {
            let t = rat(1, 1_000_000_000);
            assert!(y_value(k, &policy, &t).value.is_positive());
        }
    }

    #[test]
    fn conj4_single_node_residual_vanishes() {
        let policy = PrecisionPolicy::new(128);
        let target = rat(1, 1_000_000_000_000); // 1e-12
        let report = conj4_residual(&nodes(&[1]), &policy, &target);
        assert!(report.finite_part.is_zero());
        let allow = BigReal::from_rational(&rat(1, 10_000_000_000), 128); // 1e-10
        assert!(report.residual.abs() < allow);
    }

    #[test]
    fn conj4_pair_finite_part_and_trend() {
        let policy = PrecisionPolicy::new(96);
        let ns = nodes(&[1, 2]);
        let wb = policy.working_bits(2);
        // finite part = 2·ln(1!)/1 − ln(2!)/2 = −(ln 2)/2
        let finite = conj4_finite_part(&ns, wb);
        let want = -&BigReal::from_u64(2, wb).ln().mul_pow2(-1);
        assert!(finite.abs_diff(&want) <= finite.ulp().mul_u64(8));
        // bare residual magnitude shrinks with more terms
        let gamma = gamma_reference(policy.target_bits);
        let r1 = conj4_partial(&ns, &policy, 50).abs_diff(&gamma);
        let r2 = conj4_partial(&ns, &policy, 400).abs_diff(&gamma);
        assert!(r2 < r1);
    }

    #[test]
    fn conj4_triple_node_runs_within_tail_target() {
        let policy = PrecisionPolicy::new(96);
        let target = rat(1, 1_000_000_000);
        let report = conj4_residual(&nodes(&[1, 2, 3]), &policy, &target);
        assert!(report.series.truncation_bound <= target);
        // the transcribed decomposition misses gamma by twice the finite
        // part; just pin that the residual is finite and stable here
        assert!(report.residual.abs() < BigReal::from_u64(2, 96));
    }

    #[test]
    fn conj2_anchors() {
        let policy = PrecisionPolicy::new(96);
        // z = 0 collapses both sides to exactly 1
        for m in [1u32, 7, 50] {
            let r = conj2_partial(&rat(0, 1), m, &policy).unwrap();
            assert_eq!(r.value, BigReal::one(r.value.frac_bits()), "m = {m}");
            assert!(r.reference_error.unwrap().is_zero());
        }
        // z = 1, m = 1: single term 1/3
        let r = conj2_partial(&rat(1, 1), 1, &policy).unwrap();
        let third = BigReal::from_rational(&rat(1, 3), r.value.frac_bits());
        assert_eq!(r.value, third);
        assert!(conj2_partial(&rat(-1, 2), 3, &policy).is_err());
    }

    #[test]
    fn conj2_reference_values() {
        let policy = PrecisionPolicy::new(128);
        let at0 = conj2_reference(&rat(0, 1), &policy).unwrap();
        assert_eq!(at0, BigReal::one(at0.frac_bits()));
        let at1 = conj2_reference(&rat(1, 1), &policy).unwrap();
        assert_eq!(at1.to_decimal(30), "0.223890779141235668051827454650");
        // two truncation depths: re-run at a higher-precision policy and
        // compare at the coarser width
        let finer = conj2_reference(&rat(1, 1), &PrecisionPolicy::new(192)).unwrap();
        assert!(finer.abs_diff(&at1) <= at1.ulp().mul_u64(4));
        let at4 = conj2_reference(&rat(4, 1), &policy).unwrap();
        assert_eq!(at4.to_decimal(20), "-0.39714980986384737229");
    }

    #[test]
    fn conj2_literal_series_has_rational_limit() {
        // Under the literal denominator z·(n+1)+1 the summand is a rational
        // function of n, so the transform limit is forced by the
        // partial-fraction identity (shift z·(n+1)+1 = z·(n + (1+z)/z)):
        // the value is exactly 1/2 − g_m(2)/2 at z = 1 and tends to
        // 1/(1+z), not to the power series. The residual therefore
        // stabilizes at Σ(−1)^n z^n/(n!)² − 1/(1+z); the evidence harness
        // reports that verbatim instead of a shrinking trend.
        let policy = PrecisionPolicy::new(96);
        let z = rat(1, 1);
        let r10 = conj2_partial(&z, 10, &policy).unwrap();
        let r40 = conj2_partial(&z, 40, &policy).unwrap();
        for (m, r) in [(10i64, &r10), (40, &r40)] {
            let wb = r.value.frac_bits();
            let half = BigReal::from_rational(&rat(1, 2), wb);
            let gap = BigReal::from_rational(&rat(1, (m + 1) * (m + 2)), wb);
            let got = half.abs_diff(&r.value);
            let allow = r.value.ulp().mul_u64(1 << (m as u32 + 6));
            assert!(got.abs_diff(&gap) <= allow, "m = {m}");
        }
        assert!(r40.reference_error.unwrap().abs() > r10.reference_error.unwrap().abs());
    }

    #[test]
    fn conj1_values_and_trend() {
        let policy = PrecisionPolicy::new(96);
        // n = 2, z = (1,1), m = 1: ln(1 + ln 2)
        let r = conj1_partial(&[rat(1, 1), rat(1, 1)], 1, &policy).unwrap();
        assert_eq!(r.value.to_decimal(12), "0.526589034139");
        let r10 = conj1_partial(&[rat(1, 1), rat(1, 1)], 10, &policy).unwrap();
        let r30 = conj1_partial(&[rat(1, 1), rat(1, 1)], 30, &policy).unwrap();
        assert!(r30.reference_error.unwrap().abs() < r10.reference_error.unwrap().abs());
        assert!(conj1_partial(&[], 3, &policy).is_err());
        assert!(conj1_partial(&[rat(0, 1)], 3, &policy).is_err());
    }

    #[test]
    fn conj3_small_orders() {
        let policy = PrecisionPolicy::new(96);
        let r1 = conj3_partial(1, &policy);
        assert!(r1.value.is_zero());
        let r2 = conj3_partial(2, &policy);
        // W_2 = 2, value = (ln 2)/4
        let want = BigReal::from_u64(2, r2.value.frac_bits()).ln().mul_pow2(-2);
        assert!(r2.value.abs_diff(&want) <= r2.value.ulp().mul_u64(8));
        assert_eq!(r2.value.to_decimal(5), "0.17329");
    }
}
