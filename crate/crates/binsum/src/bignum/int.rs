//! Exact combinatorial integers and rationals: binomial coefficients,
//! factorials, harmonic numbers, Bernoulli numbers.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Binomial coefficient `C(m, k)`, exact; `0` for `k < 0` or `k > m`.
pub fn binomial(m: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > m {
        return BigInt::zero();
    }
    let k = (k as u64).min(m - k as u64);
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    c
}

/// The full row `C(m, 0), …, C(m, m)`, built by the incremental rule
/// `C(m, k+1) = C(m, k) · (m − k)/(k + 1)` so a transform of order `m`
/// costs `O(m)` big-integer multiplies.
pub fn binomial_row(m: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(m as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 0..m {
        c = c * BigInt::from(m - k) / BigInt::from(k + 1);
        row.push(c.clone());
    }
    row
}

/// `n!`, exact.
pub fn factorial(n: u64) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= BigInt::from(i);
    }
    f
}

/// Double factorial `k!!`: the product of same-parity integers down from
/// `k`, with `0!! = 1!! = 1`.
pub fn double_factorial(k: u64) -> BigInt {
    let mut f = BigInt::one();
    let mut i = k;
    while i >= 2 {
        f *= BigInt::from(i);
        i -= 2;
    }
    f
}

/// Harmonic number `H_n = 1 + 1/2 + … + 1/n` as an exact rational.
pub fn harmonic(n: u64) -> BigRational {
    let mut h = BigRational::zero();
    for i in 1..=n {
        h += BigRational::new(BigInt::one(), BigInt::from(i));
    }
    h
}

static BERNOULLI: Mutex<Vec<BigRational>> = Mutex::new(Vec::new());

/// Bernoulli number `B_{2j}` (so `bernoulli_even(1) = 1/6`), exact, via the
/// defining recurrence `Σ_{k=0}^{n} C(n+1, k) B_k = 0`. Values are cached.
pub fn bernoulli_even(j: usize) -> BigRational {
    let mut cache = BERNOULLI.lock().unwrap();
    if cache.is_empty() {
        cache.push(BigRational::one()); // B_0
        cache.push(BigRational::new(BigInt::from(-1), BigInt::from(2))); // B_1
    }
    while cache.len() <= 2 * j {
        let n = cache.len() as u64;
        let row = binomial_row(n + 1);
        let mut acc = BigRational::zero();
        for (k, b) in cache.iter().enumerate() {
            acc += BigRational::from(row[k].clone()) * b;
        }
        let b_n = -acc / BigRational::from(BigInt::from(n + 1));
        cache.push(b_n);
    }
    cache[2 * j].clone()
}
