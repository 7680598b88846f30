//! The three families of normalized eigen-polynomials `q_s` (one per sphere),
//! Chebyshev polynomials of the second kind and the free-case coefficients
//! `a_s`.
//!
//! Every `q_s` is normalized by `q_s(1) = 1`. The classical family is built
//! by orthogonalizing against the exact moments of the spectral measure of
//! `u11`; the half-liberated family comes from explicit coefficient sums; the
//! free family from its three-term recurrence.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::binom;
use crate::error::{Error, Result};
use crate::measures::{gram_schmidt, MomentFunctional};
use crate::ratpoly::{Poly, Rational};

/// Which sphere (equivalently which orthogonal quantum group).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SphereKind {
    Classical,
    #[serde(rename = "half")]
    HalfLiberated,
    Free,
}

impl SphereKind {
    pub const ALL: [SphereKind; 3] = [
        SphereKind::Classical,
        SphereKind::HalfLiberated,
        SphereKind::Free,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SphereKind::Classical => "classical",
            SphereKind::HalfLiberated => "half",
            SphereKind::Free => "free",
        }
    }
}

impl fmt::Display for SphereKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SphereKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "classical" | "o" => Ok(SphereKind::Classical),
            "half" | "half-liberated" | "halfliberated" | "star" => Ok(SphereKind::HalfLiberated),
            "free" | "plus" => Ok(SphereKind::Free),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// A sphere together with its ambient dimension `N >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Family {
    kind: SphereKind,
    n: u32,
}

impl Family {
    pub fn new(kind: SphereKind, n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension(n));
        }
        Ok(Family { kind, n })
    }

    pub fn classical(n: u32) -> Result<Self> {
        Family::new(SphereKind::Classical, n)
    }

    pub fn half_liberated(n: u32) -> Result<Self> {
        Family::new(SphereKind::HalfLiberated, n)
    }

    pub fn free(n: u32) -> Result<Self> {
        Family::new(SphereKind::Free, n)
    }

    pub fn kind(&self) -> SphereKind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(N={})", self.kind, self.n)
    }
}

/// Chebyshev polynomial of the second kind `U_s`.
pub fn chebyshev_u(s: usize) -> Poly {
    let mut prev = Poly::zero();
    let mut cur = Poly::one();
    for _ in 0..s {
        let next = &cur.shift_up() - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `U_0(x), ..., U_smax(x)` at an integer point.
pub fn chebyshev_u_values(x: i64, smax: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(smax + 1);
    let x = BigInt::from(x);
    out.push(BigInt::one());
    if smax >= 1 {
        out.push(x.clone());
    }
    for s in 2..=smax {
        let next = &x * &out[s - 1] - &out[s - 2];
        out.push(next);
    }
    out
}

/// `a_s = Σ_{k=0}^{s} (-1)^{s+k} U_k(N)`.
pub fn a_coeff(n: u32, s: usize) -> Rational {
    Rational::from_integer(a_coeffs(n, s).pop().expect("nonempty"))
}

fn a_coeffs(n: u32, smax: usize) -> Vec<BigInt> {
    let u = chebyshev_u_values(n as i64, smax);
    let mut out: Vec<BigInt> = Vec::with_capacity(smax + 1);
    for (s, us) in u.iter().enumerate() {
        let next = match s {
            0 => us.clone(),
            _ => us - &out[s - 1],
        };
        out.push(next);
    }
    out
}

/// `ω_ℓ = ⌊(ℓ+2)/2⌋ (N-1+⌊ℓ/2⌋) / ((N+ℓ)(N+ℓ-1))`.
pub fn omega(n: u32, l: usize) -> Rational {
    let n = n as i64;
    let l = l as i64;
    Rational::new(
        BigInt::from((l + 2) / 2) * (n - 1 + l / 2),
        BigInt::from(n + l) * (n + l - 1),
    )
}

/// Monic half-liberated polynomial `P_s` from the explicit coefficient sums.
pub fn star_p(n: u32, s: usize) -> Poly {
    let n = n as i64;
    let k = (s / 2) as i64;
    let mut coeffs = vec![Rational::zero(); s + 1];
    for r in 0..=k {
        let sign = if (k + r) % 2 == 0 { 1 } else { -1 };
        let (num, den, deg) = if s % 2 == 0 {
            let b = binom(k, r);
            (&b * &b, binom(n + 2 * k - 2, k - r), 2 * r)
        } else {
            (
                binom(k, r) * binom(k + 1, r + 1),
                binom(n + 2 * k - 1, k - r),
                2 * r + 1,
            )
        };
        coeffs[deg as usize] = Rational::new(num * sign, den);
    }
    Poly::from_coeffs(coeffs)
}

/// `P_0, ..., P_smax` from `P_s = x P_{s-1} - ω_{s-2} P_{s-2}`.
pub fn star_p_recurrence(n: u32, smax: usize) -> Vec<Poly> {
    let mut out = vec![Poly::one()];
    if smax >= 1 {
        out.push(Poly::x());
    }
    for s in 2..=smax {
        let next = &out[s - 1].shift_up() - &out[s - 2].scale(&omega(n, s - 2));
        out.push(next);
    }
    out
}

type QCache = Mutex<HashMap<Family, Vec<Poly>>>;

fn cache() -> &'static QCache {
    static CACHE: OnceLock<QCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Normalized eigen-polynomial `q_s` of the given family.
pub fn family_q(f: Family, s: usize) -> Poly {
    family_qs(f, s)[s].clone()
}

/// `q_0, ..., q_smax` of the given family.
pub fn family_qs(f: Family, smax: usize) -> Vec<Poly> {
    if let Some(v) = cache().lock().unwrap().get(&f) {
        if v.len() > smax {
            return v[..=smax].to_vec();
        }
    }
    let built = build_family(f, smax);
    let mut guard = cache().lock().unwrap();
    let entry = guard.entry(f).or_default();
    if entry.len() < built.len() {
        *entry = built.clone();
    }
    built
}

fn normalize_at_one(p: &Poly) -> Poly {
    let v = p.eval(&Rational::one());
    assert!(!v.is_zero(), "orthogonal polynomial vanishes at 1");
    p.scale(&v.recip())
}

fn build_family(f: Family, smax: usize) -> Vec<Poly> {
    match f.kind {
        SphereKind::Classical => {
            let mf = MomentFunctional::new(f);
            gram_schmidt(&mf, smax)
                .expect("classical moment functional is positive definite")
                .iter()
                .map(normalize_at_one)
                .collect()
        }
        SphereKind::HalfLiberated => (0..=smax)
            .map(|s| normalize_at_one(&star_p(f.n, s)))
            .collect(),
        SphereKind::Free => free_qs(f.n, smax),
    }
}

fn free_qs(n: u32, smax: usize) -> Vec<Poly> {
    let u = chebyshev_u_values(n as i64, smax + 1);
    let a = a_coeffs(n, smax + 1);
    let mut out = vec![Poly::one()];
    if smax >= 1 {
        out.push(Poly::x());
    }
    for s in 0..smax.saturating_sub(1) {
        // a_{s+1} q_{s+2} = U_{s+1}(N) x q_{s+1} - a_s q_s
        let lhs = &out[s + 1].shift_up().scale(&Rational::from_integer(u[s + 1].clone()))
            - &out[s].scale(&Rational::from_integer(a[s].clone()));
        out.push(lhs.scale(&Rational::new(BigInt::one(), a[s + 1].clone())));
    }
    out
}

/// `q_s'(1)` from the closed forms of each family.
pub fn q_prime_at_one(f: Family, s: usize) -> Rational {
    let n = f.n as i64;
    match f.kind {
        SphereKind::Classical => {
            let s = s as i64;
            Rational::new(BigInt::from(s * (s + n - 2)), BigInt::from(n - 1))
        }
        SphereKind::HalfLiberated => {
            let k = (s / 2) as i64;
            let num = if s % 2 == 0 {
                2 * k * (n + k - 1)
            } else {
                (2 * k + 1) * n + 2 * k * k - 1
            };
            Rational::new(BigInt::from(num), BigInt::from(n - 1))
        }
        SphereKind::Free => free_q_prime_at_one(f.n, s),
    }
}

fn free_q_prime_at_one(n: u32, s: usize) -> Rational {
    if s == 0 {
        return Rational::zero();
    }
    let u = chebyshev_u_values(n as i64, s);
    let a = a_coeffs(n, s);
    let mut partial = BigInt::zero();
    let mut total = Rational::zero();
    for r in 0..s {
        partial += &u[r];
        total += Rational::new(partial.clone(), a[r].clone());
    }
    total
}

/// `q_s'(1)` for `s = 0..=smax`, sharing one pass for the free family.
pub fn q_primes_at_one(f: Family, smax: usize) -> Vec<Rational> {
    if f.kind != SphereKind::Free {
        return (0..=smax).map(|s| q_prime_at_one(f, s)).collect();
    }
    let u = chebyshev_u_values(f.n as i64, smax);
    let a = a_coeffs(f.n, smax);
    let mut out = Vec::with_capacity(smax + 1);
    out.push(Rational::zero());
    let mut partial = BigInt::zero();
    for r in 0..smax {
        partial += &u[r];
        let next = &out[r] + Rational::new(partial.clone(), a[r].clone());
        out.push(next);
    }
    out
}
