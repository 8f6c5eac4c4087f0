//! Reference constants, computed by methods independent of every series
//! under test so they can serve as oracles.

use std::collections::BTreeMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::int::bernoulli_even;
use super::real::{atan_inv_mant, div_round, ln2_mant, BigReal};

/// Guard bits over the requested precision for reference computations.
const REF_GUARD: u32 = 32;

static GAMMA: Mutex<BTreeMap<u32, BigInt>> = Mutex::new(BTreeMap::new());
static PI: Mutex<BTreeMap<u32, BigInt>> = Mutex::new(BTreeMap::new());

/// The Euler–Mascheroni constant `γ` accurate to `bits` fractional bits
/// (truncation below `2^{−bits−8}`, total error under one ulp).
pub fn gamma_reference(bits: u32) -> BigReal {
    assert!(bits >= 16, "gamma_reference needs at least 16 bits");
    if let Some(m) = GAMMA.lock().unwrap().get(&bits) {
        return BigReal::from_mantissa(m.clone(), bits);
    }
    let v = gamma_euler_maclaurin(bits, choose_harmonic_log2(bits));
    GAMMA.lock().unwrap().insert(bits, v.mantissa().clone());
    v
}

fn choose_harmonic_log2(bits: u32) -> u32 {
    // 2^t harmonic terms; a larger t keeps the Bernoulli correction short.
    match bits {
        0..=192 => 13,
        193..=512 => 15,
        513..=1200 => 18,
        _ => 21,
    }
}

/// `γ` by Euler–Maclaurin-corrected harmonic sums at `n = 2^t`:
/// `γ = H_n − ln n − 1/(2n) + Σ_j B_{2j}/(2j·n^{2j})`.
///
/// The correction series is enveloping (alternating with decreasing
/// magnitude in the useful range), so the remainder after stopping is
/// bounded by the first omitted term; the loop stops once that term is
/// below `2^{−bits−8}`. Choosing `n` a power of two makes `ln n = t·ln 2`
/// and every `n^{−2j}` an exact shift.
pub(crate) fn gamma_euler_maclaurin(bits: u32, t: u32) -> BigReal {
    let fw = bits + REF_GUARD + t; // absorbs 2^t rounded harmonic terms
    let one_fw = BigInt::one() << fw;
    let n = 1u64 << t;
    let mut acc = BigInt::zero();
    for i in 1..=n {
        acc += div_round(&one_fw, &BigInt::from(i));
    }
    acc -= BigInt::from(t as u64) * ln2_mant(fw);
    acc -= BigInt::one() << (fw - t - 1); // 1/(2n)
    let mut j = 1usize;
    loop {
        let b = bernoulli_even(j);
        let den = (b.denom() * BigInt::from(2 * j as u64)) << (2 * j as u32 * t);
        // Stop when |B_{2j}|/(2j·n^{2j}) < 2^{−bits−8}; that term bounds the
        // remainder of the truncated expansion.
        if b.numer().abs() << (bits + 8) < den {
            break;
        }
        acc += div_round(&(b.numer() << fw), &den);
        j += 1;
        assert!(j < 500, "Euler-Maclaurin correction failed to converge");
    }
    BigReal::from_mantissa(acc, fw).with_frac_bits(bits)
}

/// `π` by Machin's formula `π = 16·atan(1/5) − 4·atan(1/239)`.
///
/// Both arctangent series alternate with decreasing terms, so each
/// truncation error is below the first omitted term, i.e. below one
/// internal ulp at `bits + 32` fractional bits.
pub fn pi_reference(bits: u32) -> BigReal {
    assert!(bits >= 16, "pi_reference needs at least 16 bits");
    if let Some(m) = PI.lock().unwrap().get(&bits) {
        return BigReal::from_mantissa(m.clone(), bits);
    }
    let fw = bits + REF_GUARD;
    let mant = (atan_inv_mant(5, fw) << 4) - (atan_inv_mant(239, fw) << 2);
    let v = BigReal::from_mantissa(mant, fw).with_frac_bits(bits);
    PI.lock().unwrap().insert(bits, v.mantissa().clone());
    v
}

/// Euler's decomposition `π = 4·atan(1/2) + 4·atan(1/3)`, kept as an
/// independent cross-check of [`pi_reference`].
#[cfg(test)]
pub(crate) fn pi_machin_euler(bits: u32) -> BigReal {
    let fw = bits + REF_GUARD;
    let mant = (atan_inv_mant(2, fw) + atan_inv_mant(3, fw)) << 2;
    BigReal::from_mantissa(mant, fw).with_frac_bits(bits)
}

/// `ln(π/2)` to `bits` fractional bits.
pub fn ln_pi_half_reference(bits: u32) -> BigReal {
    pi_reference(bits + 16)
        .mul_pow2(-1)
        .ln()
        .with_frac_bits(bits)
}
