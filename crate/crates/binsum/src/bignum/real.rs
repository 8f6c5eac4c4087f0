//! Fixed-point arbitrary-precision reals.
//!
//! A [`BigReal`] is `mantissa · 2^{−frac_bits}`. Addition and subtraction are
//! exact after alignment; multiplication and division round half away from
//! zero at the larger operand precision, so the relative rounding error of an
//! elementary operation on values ≥ 1 ulp is at most `2^{1−frac_bits}` and
//! the absolute error is at most half an ulp. Transcendental kernels work at
//! `frac_bits + 32` internally and round once at the end.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Mutex;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Extra bits carried inside transcendental kernels.
const KERNEL_GUARD: u32 = 32;

/// Shift right by `s` bits, rounding half away from zero.
pub(crate) fn shr_round(x: &BigInt, s: u32) -> BigInt {
    if s == 0 || x.is_zero() {
        return x.clone();
    }
    let mag = x.magnitude() + (BigUint::one() << (s - 1));
    BigInt::from_biguint(x.sign(), mag >> s)
}

fn shift_round(x: &BigInt, s: i64) -> BigInt {
    if s >= 0 {
        x << s
    } else {
        shr_round(x, (-s) as u32)
    }
}

/// Integer division rounding half away from zero.
pub(crate) fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    assert!(!d.is_zero(), "division by zero");
    if n.is_zero() {
        return BigInt::zero();
    }
    let nm = n.magnitude();
    let dm = d.magnitude();
    let mut q = nm / dm;
    let r = nm % dm;
    if &r * 2u32 >= *dm {
        q += BigUint::one();
    }
    let sign = if n.is_negative() == d.is_negative() {
        Sign::Plus
    } else {
        Sign::Minus
    };
    BigInt::from_biguint(sign, q)
}

static LN2: Mutex<BTreeMap<u32, BigInt>> = Mutex::new(BTreeMap::new());

/// Mantissa of `ln 2` at `frac_bits` fractional bits, via `2·atanh(1/3)`.
pub(crate) fn ln2_mant(frac_bits: u32) -> BigInt {
    if let Some(m) = LN2.lock().unwrap().get(&frac_bits) {
        return m.clone();
    }
    let raw = atanh_inv_mant(3, frac_bits + 8) << 1;
    let m = shr_round(&raw, 8);
    LN2.lock().unwrap().insert(frac_bits, m.clone());
    m
}

/// `atanh(1/a) = Σ_{i≥0} a^{−(2i+1)}/(2i+1)` at `frac_bits` fractional bits.
///
/// Requires `a ≥ 2`; terms shrink by ≥ a², so the truncation error after the
/// loop exits (term rounded to zero) is below one ulp.
pub(crate) fn atanh_inv_mant(a: u64, frac_bits: u32) -> BigInt {
    assert!(a >= 2);
    let a2 = BigInt::from(a) * BigInt::from(a);
    let mut p = div_round(&(BigInt::one() << frac_bits), &BigInt::from(a));
    let mut sum = p.clone();
    let mut i = 1u64;
    loop {
        p = div_round(&p, &a2);
        if p.is_zero() {
            break;
        }
        i += 2;
        sum += div_round(&p, &BigInt::from(i));
    }
    sum
}

/// `atan(1/a)` at `frac_bits` fractional bits (alternating series, so the
/// truncation error is bounded by the first omitted term).
pub(crate) fn atan_inv_mant(a: u64, frac_bits: u32) -> BigInt {
    assert!(a >= 2);
    let a2 = BigInt::from(a) * BigInt::from(a);
    let mut p = div_round(&(BigInt::one() << frac_bits), &BigInt::from(a));
    let mut sum = p.clone();
    let mut i = 1u64;
    let mut subtract = true;
    loop {
        p = div_round(&p, &a2);
        if p.is_zero() {
            break;
        }
        i += 2;
        let term = div_round(&p, &BigInt::from(i));
        if subtract {
            sum -= term;
        } else {
            sum += term;
        }
        subtract = !subtract;
    }
    sum
}

/// Arbitrary-precision real with explicit fixed-point precision.
#[derive(Clone, Debug)]
pub struct BigReal {
    mant: BigInt,
    frac_bits: u32,
}

impl BigReal {
    pub fn zero(frac_bits: u32) -> Self {
        Self {
            mant: BigInt::zero(),
            frac_bits,
        }
    }

    pub fn one(frac_bits: u32) -> Self {
        Self {
            mant: BigInt::one() << frac_bits,
            frac_bits,
        }
    }

    pub fn from_bigint(n: &BigInt, frac_bits: u32) -> Self {
        Self {
            mant: n << frac_bits,
            frac_bits,
        }
    }

    pub fn from_u64(n: u64, frac_bits: u32) -> Self {
        Self::from_bigint(&BigInt::from(n), frac_bits)
    }

    pub fn from_i64(n: i64, frac_bits: u32) -> Self {
        Self::from_bigint(&BigInt::from(n), frac_bits)
    }

    /// Nearest fixed-point value to `r`; exact when `r` is dyadic.
    pub fn from_rational(r: &BigRational, frac_bits: u32) -> Self {
        Self {
            mant: div_round(&(r.numer() << frac_bits), r.denom()),
            frac_bits,
        }
    }

    pub(crate) fn from_mantissa(mant: BigInt, frac_bits: u32) -> Self {
        Self { mant, frac_bits }
    }

    pub fn frac_bits(&self) -> u32 {
        self.frac_bits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    /// The exact rational value of this fixed-point number.
    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mant.clone(), BigInt::one() << self.frac_bits)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    /// One unit in the last place: `2^{−frac_bits}`.
    pub fn ulp(&self) -> Self {
        Self {
            mant: BigInt::one(),
            frac_bits: self.frac_bits,
        }
    }

    pub fn abs(&self) -> Self {
        Self {
            mant: self.mant.abs(),
            frac_bits: self.frac_bits,
        }
    }

    /// Re-round to a different precision (exact when widening).
    pub fn with_frac_bits(&self, frac_bits: u32) -> Self {
        Self {
            mant: shift_round(&self.mant, frac_bits as i64 - self.frac_bits as i64),
            frac_bits,
        }
    }

    /// Multiply by `2^e`, exactly for `e ≥ 0`.
    pub fn mul_pow2(&self, e: i64) -> Self {
        Self {
            mant: shift_round(&self.mant, e),
            frac_bits: self.frac_bits,
        }
    }

    /// Exact multiplication by an integer.
    pub fn mul_int(&self, k: &BigInt) -> Self {
        Self {
            mant: &self.mant * k,
            frac_bits: self.frac_bits,
        }
    }

    pub fn mul_u64(&self, k: u64) -> Self {
        self.mul_int(&BigInt::from(k))
    }

    pub fn div_int(&self, k: &BigInt) -> Self {
        Self {
            mant: div_round(&self.mant, k),
            frac_bits: self.frac_bits,
        }
    }

    pub fn div_u64(&self, k: u64) -> Self {
        self.div_int(&BigInt::from(k))
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let f = self.frac_bits.max(other.frac_bits);
        (
            &self.mant << (f - self.frac_bits),
            &other.mant << (f - other.frac_bits),
            f,
        )
    }

    pub fn abs_diff(&self, other: &Self) -> Self {
        (self - other).abs()
    }

    /// Integer power by square-and-multiply; each multiply rounds once.
    pub fn pow_i64(&self, e: i64) -> Self {
        let f = self.frac_bits;
        if e == 0 {
            return Self::one(f);
        }
        if e < 0 {
            return &Self::one(f) / &self.pow_i64(-e);
        }
        let mut base = self.clone();
        let mut acc = Self::one(f);
        let mut e = e as u64;
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

    /// Natural logarithm. Panics on non-positive input; evaluators validate
    /// their domains before calling.
    ///
    /// Reduction `x = m̂·2^e` with `m̂ ∈ [1,2)`, then
    /// `ln m̂ = 2·atanh((m̂−1)/(m̂+1))` with argument ≤ 1/3, so the series
    /// gains ≥ 3 bits per term; truncation stops below one internal ulp.
    pub fn ln(&self) -> Self {
        assert!(self.mant.is_positive(), "ln of non-positive value");
        let f = self.frac_bits;
        let fw = f + KERNEL_GUARD;
        let e = self.mant.bits() as i64 - 1 - f as i64;
        let mhat = shift_round(&self.mant, fw as i64 - f as i64 - e);
        let one = BigInt::one() << fw;
        let t = div_round(&((&mhat - &one) << fw), &(&mhat + &one));
        let t2 = shr_round(&(&t * &t), fw);
        let mut p = t.clone();
        let mut sum = t;
        let mut i = 1u64;
        loop {
            p = shr_round(&(&p * &t2), fw);
            if p.is_zero() {
                break;
            }
            i += 2;
            sum += div_round(&p, &BigInt::from(i));
        }
        let mut acc = sum << 1;
        if e != 0 {
            acc += BigInt::from(e) * ln2_mant(fw);
        }
        Self {
            mant: acc,
            frac_bits: fw,
        }
        .with_frac_bits(f)
    }

    /// Exponential. Reduction `x = n·ln2 + r` with `|r| ≤ (ln 2)/2`, then the
    /// Taylor series of `e^r`; the tail after the loop exits is below one
    /// internal ulp because terms shrink geometrically once `i ≥ 1`.
    pub fn exp(&self) -> Self {
        let f = self.frac_bits;
        let fw = f + KERNEL_GUARD;
        let x = &self.mant << KERNEL_GUARD;
        let ln2 = ln2_mant(fw);
        let n = div_round(&x, &ln2);
        let n_i64 = n
            .to_i64()
            .expect("exp argument magnitude out of supported range");
        let r = &x - &n * &ln2;
        let one = BigInt::one() << fw;
        let mut term = one.clone();
        let mut sum = one;
        let mut i = 1u64;
        loop {
            term = shr_round(&(&term * &r), fw);
            term = div_round(&term, &BigInt::from(i));
            if term.is_zero() {
                break;
            }
            sum += &term;
            i += 1;
        }
        Self {
            mant: sum,
            frac_bits: fw,
        }
        .mul_pow2(n_i64)
        .with_frac_bits(f)
    }

    /// Decimal rendering with exactly `digits` fractional digits, final digit
    /// correctly rounded (half away from zero).
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = BigInt::from(10u32).pow(digits as u32);
        let scaled = shr_round(&(&self.mant * &scale), self.frac_bits);
        let neg = scaled.is_negative();
        let mag = scaled.magnitude().clone();
        let scale_u = scale.magnitude();
        let int_part = &mag / scale_u;
        let frac_part = &mag % scale_u;
        let sign = if neg { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part:0>width$}", width = digits)
        }
    }

    /// Lossy conversion for heuristics and human-facing trend reports.
    pub fn to_f64(&self) -> f64 {
        if self.mant.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits();
        let sh = bits.saturating_sub(64);
        let top = (&self.mant >> sh).to_f64().unwrap_or(0.0);
        let e = sh as i64 - self.frac_bits as i64;
        if e > 1_000_000 {
            return if top >= 0.0 {
                f64::INFINITY
            } else {
                f64::NEG_INFINITY
            };
        }
        top * 2f64.powi(e.clamp(-2_000_000_000, 2_000_000_000) as i32)
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = self.aligned(other);
        a == b
    }
}

impl Eq for BigReal {}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigReal {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl Add for &BigReal {
    type Output = BigReal;
    fn add(self, rhs: Self) -> BigReal {
        let (a, b, f) = self.aligned(rhs);
        BigReal {
            mant: a + b,
            frac_bits: f,
        }
    }
}

impl Sub for &BigReal {
    type Output = BigReal;
    fn sub(self, rhs: Self) -> BigReal {
        let (a, b, f) = self.aligned(rhs);
        BigReal {
            mant: a - b,
            frac_bits: f,
        }
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal {
            mant: -&self.mant,
            frac_bits: self.frac_bits,
        }
    }
}

impl Mul for &BigReal {
    type Output = BigReal;
    fn mul(self, rhs: Self) -> BigReal {
        let f = self.frac_bits.max(rhs.frac_bits);
        let p = &self.mant * &rhs.mant;
        BigReal {
            mant: shr_round(&p, self.frac_bits + rhs.frac_bits - f),
            frac_bits: f,
        }
    }
}

impl Div for &BigReal {
    type Output = BigReal;
    fn div(self, rhs: Self) -> BigReal {
        let f = self.frac_bits.max(rhs.frac_bits);
        let e = f + rhs.frac_bits - self.frac_bits;
        BigReal {
            mant: div_round(&(&self.mant << e), &rhs.mant),
            frac_bits: f,
        }
    }
}
