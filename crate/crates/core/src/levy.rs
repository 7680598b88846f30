//! Generators of invariant Markov semigroups on the spheres.
//!
//! A generator is fixed by a Lévy pair `(b, ν)`: a drift `b >= 0` and a
//! finite positive measure `ν` on `[-1, 1)`. Its generating functional is
//!
//! ```text
//! ψ(p) = -b p'(1) + ∫ (p(x) - p(1)) / (1 - x) dν(x)
//! ```
//!
//! and the eigenvalue on the `s`-th eigenspace is `λ_s = ψ(q_s)`.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::families::{chebyshev_u, family_q, family_qs, q_prime_at_one, q_primes_at_one, Family};
use crate::linalg::{is_positive_semidefinite, RationalMatrix};
use crate::measures::{levy_integrate, LevyMeasure};
use crate::numeric::exp_rational;
use crate::ratpoly::{int, Poly, Rational};

/// Drift and jump measure of a generating functional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevyPair {
    pub b: Rational,
    pub nu: LevyMeasure,
}

impl LevyPair {
    pub fn new(b: Rational, nu: LevyMeasure) -> Result<LevyPair> {
        if b.is_negative() {
            return Err(Error::NegativeDrift(b));
        }
        nu.validate()?;
        Ok(LevyPair { b, nu })
    }

    /// Pure drift, no jumps.
    pub fn drift(b: Rational) -> Result<LevyPair> {
        LevyPair::new(b, LevyMeasure::zero())
    }

    /// `(c b, c ν)`.
    pub fn scaled(&self, c: &Rational) -> LevyPair {
        LevyPair { b: &self.b * c, nu: self.nu.scaled(c) }
    }

    /// `(b1 + b2, ν1 + ν2)`.
    pub fn plus(&self, other: &LevyPair) -> LevyPair {
        LevyPair { b: &self.b + &other.b, nu: self.nu.plus(&other.nu) }
    }
}

/// A Lévy pair attached to one sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub family: Family,
    pub pair: LevyPair,
}

impl Generator {
    pub fn new(family: Family, pair: LevyPair) -> Generator {
        Generator { family, pair }
    }
}

/// The Laplace operator: `b = N - 1`, no jumps.
pub fn laplace(f: Family) -> Generator {
    Generator::new(
        f,
        LevyPair {
            b: int(f.n() - 1),
            nu: LevyMeasure::zero(),
        },
    )
}

/// The generating functional `ψ` evaluated on a polynomial in `x = u11`.
pub fn psi(pair: &LevyPair, p: &Poly) -> Rational {
    let one = int(1);
    let mut value = -(&pair.b * p.derivative().eval(&one));
    if !pair.nu.is_zero() {
        let shifted = p - &Poly::constant(p.eval(&one));
        let quotient = shifted
            .div_by_x_minus_one()
            .expect("p - p(1) vanishes at 1");
        // (p(x) - p(1)) / (1 - x) is minus the exact quotient by (x - 1).
        value -= levy_integrate(&pair.nu, &quotient);
    }
    value
}

/// `λ_s` for the generator.
pub fn eigenvalue(g: &Generator, s: usize) -> Rational {
    if s == 0 {
        return Rational::zero();
    }
    if g.pair.nu.is_zero() {
        return -(&g.pair.b * q_prime_at_one(g.family, s));
    }
    psi(&g.pair, &family_q(g.family, s))
}

/// `λ_0, ..., λ_smax`.
pub fn eigenvalues(g: &Generator, smax: usize) -> Vec<Rational> {
    if g.pair.nu.is_zero() {
        return q_primes_at_one(g.family, smax)
            .into_iter()
            .map(|d| -(&g.pair.b * d))
            .collect();
    }
    family_qs(g.family, smax)
        .iter()
        .enumerate()
        .map(|(s, q)| if s == 0 { Rational::zero() } else { psi(&g.pair, q) })
        .collect()
}

/// `e^{t λ_s}` for `s = 0..=smax`.
pub fn heat_eigenvalues(g: &Generator, t: &Rational, smax: usize) -> Result<Vec<f64>> {
    if t.is_negative() {
        return Err(Error::InvalidArgument(format!("time t = {t} must be >= 0")));
    }
    Ok(eigenvalues(g, smax)
        .iter()
        .map(|lambda| exp_rational(&(lambda * t)))
        .collect())
}

/// Eigenvalue of a central generator on the `s`-th isotypic component of
/// the free orthogonal quantum group, with jump measure `nu_n` on `[-N, N)`.
pub fn central_eigenvalue(n: u32, b: &Rational, nu_n: &LevyMeasure, s: usize) -> Result<Rational> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    if b.is_negative() {
        return Err(Error::NegativeDrift(b.clone()));
    }
    let top = int(n);
    nu_n.validate_support(&-top.clone(), &top)?;
    if s == 0 {
        return Ok(Rational::zero());
    }
    let u = chebyshev_u(s);
    let u_at_n = u.eval(&top);
    let mut value = -(b * u.derivative().eval(&top)) / &u_at_n;
    if !nu_n.is_zero() {
        let shifted = &u - &Poly::constant(u_at_n.clone());
        let quotient = shifted.div_by_x_minus(&top).expect("U_s - U_s(N) vanishes at N");
        // (U_s(x) - U_s(N)) / (N - x) is minus the exact quotient by (x - N).
        value -= levy_integrate(nu_n, &quotient) / &u_at_n;
    }
    Ok(value)
}

/// Outcome of the finite-degree conditional positivity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Positivity {
    pub psd: bool,
    pub matrix: RationalMatrix,
}

/// Tests `ψ(a^* a) >= 0` for all `a = (x - 1) r(x)` with `deg r < degree`,
/// through the matrix `M_jk = ψ((x - 1)^2 x^{j + k})`.
pub fn is_conditionally_positive(pair: &LevyPair, degree: usize) -> Positivity {
    let base = Poly::from_coeffs(vec![int(1), int(-2), int(1)]);
    let entries: Vec<Rational> = (0..2 * degree.max(1) - 1)
        .map(|m| psi(pair, &(&base * &Poly::monomial(int(1), m))))
        .collect();
    let matrix: RationalMatrix = (0..degree)
        .map(|j| (0..degree).map(|k| entries[j + k].clone()).collect())
        .collect();
    Positivity { psd: is_positive_semidefinite(&matrix), matrix }
}
