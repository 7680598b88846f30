//! Float-valued helpers: a fixed-point exponential of rationals that keeps
//! far more than double precision internally, logarithms of big integers and
//! a least-squares slope.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ratpoly::{to_f64, Rational};

/// Working precision in bits for the fixed-point exponential.
pub const EXP_PRECISION_BITS: usize = 192;

fn ln2_fixed() -> &'static BigInt {
    static LN2: OnceLock<BigInt> = OnceLock::new();
    LN2.get_or_init(|| {
        // ln 2 = sum_{k>=1} 1 / (k 2^k), with guard bits.
        let guard = 16;
        let one = BigInt::one() << (EXP_PRECISION_BITS + guard);
        let mut sum = BigInt::zero();
        let mut k = 1u32;
        loop {
            let term = (&one >> k as usize) / k;
            if term.is_zero() {
                break;
            }
            sum += term;
            k += 1;
        }
        sum >> guard
    })
}

/// `e^r` rounded to the nearest double (up to one final rounding step).
///
/// The argument is reduced as `r = k ln 2 + f` with `|f| <= ln 2 / 2`, and
/// `e^f` is summed as a Taylor series in 192-bit fixed point.
pub fn exp_rational(r: &Rational) -> f64 {
    if r.is_zero() {
        return 1.0;
    }
    let approx = to_f64(r);
    if approx < -1100.0 {
        return 0.0;
    }
    if approx > 1100.0 {
        return f64::INFINITY;
    }
    let p = EXP_PRECISION_BITS;
    let fixed_r = (r.numer() << p).div_floor(r.denom());
    let k = (approx / std::f64::consts::LN_2).round() as i64;
    let f = fixed_r - ln2_fixed() * k;
    let one = BigInt::one() << p;
    let mut term = one.clone();
    let mut sum = one;
    let mut i = 1u32;
    loop {
        term = ((&term * &f) >> p) / i;
        if term.is_zero() {
            break;
        }
        sum += &term;
        i += 1;
    }
    let bits = sum.bits() as i64;
    let shift = (bits - 64).max(0);
    let mantissa = (&sum >> shift as usize).to_u64().unwrap_or(u64::MAX) as f64;
    ldexp(mantissa, k + shift - p as i64)
}

/// `x * 2^e` without intermediate overflow or underflow.
pub fn ldexp(mut x: f64, mut e: i64) -> f64 {
    while e > 512 {
        x *= 2f64.powi(512);
        e -= 512;
    }
    while e < -512 {
        x *= 2f64.powi(-512);
        e += 512;
    }
    x * 2f64.powi(e as i32)
}

/// Natural logarithm of a positive big integer.
pub fn ln_bigint(n: &BigInt) -> f64 {
    assert!(n.is_positive(), "logarithm of a nonpositive integer");
    let bits = n.bits() as i64;
    let shift = (bits - 60).max(0);
    let top = (n >> shift as usize).to_f64().expect("60-bit value fits");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Least-squares slope of `ys` against `xs`.
pub fn slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}
