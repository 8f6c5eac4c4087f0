//! The alternating binomial-transform engine and exact verification of the
//! combinatorial identities behind it.
//!
//! Everything here is either exact rational arithmetic or fixed-point with
//! exact accumulation: `alt_binom_sum_real` scales terms by exact big
//! integers and adds exactly, so the `2^m`-magnitude cancellation costs no
//! rounding beyond what went into the terms themselves. Summation order is
//! fixed ascending in `k`, making results bit-identical regardless of caller
//! parallelism.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bignum::{binomial, binomial_row, harmonic, BigReal};
use crate::Error;

/// Term sequence `f(1), …, f(m)` for an order-`m` alternating transform.
#[derive(Clone, Debug)]
pub struct TransformKernel<T> {
    order: u32,
    terms: Vec<T>,
}

impl<T> TransformKernel<T> {
    pub fn new(order: u32, terms: Vec<T>) -> Result<Self, Error> {
        if order < 1 || terms.len() != order as usize {
            return Err(Error::KernelLength {
                order,
                len: terms.len(),
            });
        }
        Ok(Self { order, terms })
    }

    pub fn from_fn(order: u32, f: impl FnMut(u32) -> T) -> Self {
        assert!(order >= 1);
        Self {
            order,
            terms: (1..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> &[T] {
        &self.terms
    }
}

/// `Σ_{k=1}^m C(m,k)(−1)^{k+1} f(k)` in exact rationals.
pub fn alt_binom_sum_exact(kernel: &TransformKernel<BigRational>) -> BigRational {
    let row = binomial_row(kernel.order as u64);
    let mut sum = BigRational::zero();
    for (i, f) in kernel.terms.iter().enumerate() {
        let term = f * BigRational::from(row[i + 1].clone());
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

/// `Σ_{k=1}^m C(m,k)(−1)^{k+1} f(k)` at the terms' precision. Binomial
/// scaling and accumulation are exact.
pub fn alt_binom_sum_real(kernel: &TransformKernel<BigReal>) -> BigReal {
    let row = binomial_row(kernel.order as u64);
    let mut sum = BigReal::zero(kernel.terms[0].frac_bits());
    for (i, f) in kernel.terms.iter().enumerate() {
        let term = f.mul_int(&row[i + 1]);
        sum = if i % 2 == 0 {
            &sum + &term
        } else {
            &sum - &term
        };
    }
    sum
}

/// `Σ_{k=1}^m C(m,k)(−1)^{k+1} f(k)/k` — the shared shape of the logarithmic
/// series. Several evaluators reduce to one another through this function,
/// which makes those reductions bit-identical.
pub fn weighted_log_sum(m: u32, mut log_term: impl FnMut(u32) -> BigReal) -> BigReal {
    assert!(m >= 1);
    let row = binomial_row(m as u64);
    let mut sum: Option<BigReal> = None;
    for k in 1..=m {
        let term = log_term(k).div_u64(k as u64).mul_int(&row[k as usize]);
        let term = if k % 2 == 0 { -&term } else { term };
        sum = Some(match sum {
            None => term,
            Some(acc) => &acc + &term,
        });
    }
    sum.unwrap()
}

/// `g_m(z) = m!/((z+1)(z+2)…(z+m))`, exact. Fails on the poles
/// `z ∈ {−1, …, −m}`.
pub fn g_m_exact(z: &BigRational, m: u32) -> Result<BigRational, Error> {
    let mut g = BigRational::one();
    for i in 1..=m as i64 {
        let d = z + BigRational::from(BigInt::from(i));
        if d.is_zero() {
            return Err(Error::GmPole { z: z.to_string() });
        }
        g *= BigRational::from(BigInt::from(i)) / d;
    }
    Ok(g)
}

/// `g_m(z)` for real `z > 0`.
pub fn g_m_real(z: &BigReal, m: u32) -> BigReal {
    assert!(z.is_positive(), "g_m needs z > 0");
    let f = z.frac_bits();
    let mut g = BigReal::one(f);
    for i in 1..=m as u64 {
        g = &g.mul_u64(i) / &(z + &BigReal::from_u64(i, f));
    }
    g
}

/// Both sides of an exact identity plus the equality verdict.
#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub equal: bool,
}

/// Partial-fraction identity `Σ_{k=0}^m C(m,k)(−1)^k/(k+z) = g_m(z)/z`,
/// verified in exact rational arithmetic for rational `z > 0`.
pub fn lemma7_check(m: u32, z: &BigRational) -> Result<LemmaReport, Error> {
    if !z.is_positive() {
        return Err(Error::NonPositive { name: "z" });
    }
    assert!(m >= 1);
    let row = binomial_row(m as u64);
    let mut lhs = BigRational::zero();
    for k in 0..=m as usize {
        let term = BigRational::from(row[k].clone()) / (z + BigRational::from(BigInt::from(k)));
        if k % 2 == 0 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    let rhs = g_m_exact(z, m)? / z;
    Ok(LemmaReport {
        equal: lhs == rhs,
        lhs,
        rhs,
    })
}

/// `C(m,k)/k = Σ_{n=k}^m C(n,k)/n`, exact, for `1 ≤ k ≤ m`.
pub fn lemma9_check(m: u64, k: u64) -> LemmaReport {
    assert!((1..=m).contains(&k));
    let lhs = BigRational::new(binomial(m, k as i64), BigInt::from(k));
    let mut c = BigInt::one(); // C(k, k)
    let mut rhs = BigRational::new(c.clone(), BigInt::from(k));
    let mut n = k;
    while n < m {
        // C(n+1, k) = C(n, k)·(n+1)/(n+1−k)
        c = c * BigInt::from(n + 1) / BigInt::from(n + 1 - k);
        n += 1;
        rhs += BigRational::new(c.clone(), BigInt::from(n));
    }
    LemmaReport {
        equal: lhs == rhs,
        lhs,
        rhs,
    }
}

/// `Σ_{k=n}^j (−1)^{k+n} C(j,k) = C(j−1, n−1)`, exact, for `1 ≤ n ≤ j`.
pub fn lemma10_check(j: u64, n: u64) -> LemmaReport {
    assert!((1..=j).contains(&n));
    let row = binomial_row(j);
    let mut lhs = BigInt::zero();
    for k in n..=j {
        if (k + n) % 2 == 0 {
            lhs += &row[k as usize];
        } else {
            lhs -= &row[k as usize];
        }
    }
    let rhs = binomial(j - 1, n as i64 - 1);
    LemmaReport {
        equal: lhs == rhs,
        lhs: BigRational::from(lhs),
        rhs: BigRational::from(rhs),
    }
}

/// `1/(z0²·H_m)`, which dominates `g_m(z)/z` for every `z ≥ z0 > 0` (the
/// product `(1+z)(1+z/2)…(1+z/m)` exceeds `z·H_m`).
pub fn uniform_bound(z0: &BigReal, m: u64) -> BigReal {
    assert!(z0.is_positive(), "uniform_bound needs z0 > 0");
    assert!(m >= 1);
    let f = z0.frac_bits();
    let h = BigReal::from_rational(&harmonic(m), f);
    &BigReal::one(f) / &(&(z0 * z0) * &h)
}
