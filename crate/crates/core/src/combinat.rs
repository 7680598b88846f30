//! Small integer combinatorics shared by the moment and multiplicity formulas.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient, zero when `n < 0`, `k < 0` or `k > n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `(2k-1)!!`, with `(-1)!! = 1`.
pub fn double_factorial_odd(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * (2 * i - 1))
}

/// Catalan number `C_k`.
pub fn catalan(k: u64) -> BigInt {
    binom(2 * k as i64, k as i64) / (k + 1)
}
