//! Moment functionals of the spectral measure of `u11`, orthogonalization
//! against them, and the jump measure `ν` of a Lévy pair.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{double_factorial_odd, factorial};
use crate::error::{Error, Result};
use crate::families::{family_qs, Family, SphereKind};
use crate::ratpoly::{int, rational_string, Poly, Rational};

/// Anything that can report the moments `m_0, ..., m_upto` of a linear
/// functional on polynomials.
pub trait Moments {
    fn moments(&self, upto: usize) -> Vec<Rational>;
}

/// Moment functional `p ↦ ∫ p dμ` of the spectral measure of `u11` in the
/// Haar state of the given family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MomentFunctional {
    family: Family,
}

impl MomentFunctional {
    pub fn new(family: Family) -> Self {
        MomentFunctional { family }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Exact `k`-th moment.
    pub fn moment(&self, k: usize) -> Rational {
        if k % 2 == 1 {
            return Rational::zero();
        }
        let half = (k / 2) as u64;
        let n = self.family.n() as u64;
        match self.family.kind() {
            // (2k-1)!! / (N (N+2) ... (N+2k-2))
            SphereKind::Classical => {
                let den = (0..half).fold(BigInt::one(), |acc, i| acc * (n + 2 * i));
                Rational::new(double_factorial_odd(half), den)
            }
            // k! (N-1)! / (N+k-1)!
            SphereKind::HalfLiberated => Rational::new(
                factorial(half) * factorial(n - 1),
                factorial(n + half - 1),
            ),
            SphereKind::Free => free_moments(self.family, k)[k].clone(),
        }
    }

    pub fn integrate_poly(&self, p: &Poly) -> Rational {
        integrate_poly(self, p)
    }
}

impl Moments for MomentFunctional {
    fn moments(&self, upto: usize) -> Vec<Rational> {
        if self.family.kind() == SphereKind::Free {
            return free_moments(self.family, upto);
        }
        (0..=upto).map(|k| self.moment(k)).collect()
    }
}

/// An explicit finite moment sequence, treated as zero beyond its length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSequence(pub Vec<Rational>);

impl Moments for MomentSequence {
    fn moments(&self, upto: usize) -> Vec<Rational> {
        (0..=upto)
            .map(|k| self.0.get(k).cloned().unwrap_or_else(Rational::zero))
            .collect()
    }
}

type MomentCache = Mutex<HashMap<u32, Vec<Rational>>>;

fn free_cache() -> &'static MomentCache {
    static CACHE: OnceLock<MomentCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Free moments are defined through the `q⁺` basis: the functional sends
/// `q_0` to 1 and every `q_j`, `j ≥ 1`, to 0. Writing `q_j = Σ_i Q_ji x^i`
/// this is a triangular system in the moments.
fn free_moments(f: Family, upto: usize) -> Vec<Rational> {
    if let Some(v) = free_cache().lock().unwrap().get(&f.n()) {
        if v.len() > upto {
            return v[..=upto].to_vec();
        }
    }
    let qs = family_qs(f, upto);
    let mut m: Vec<Rational> = Vec::with_capacity(upto + 1);
    for (j, q) in qs.iter().enumerate() {
        let target = if j == 0 { Rational::one() } else { Rational::zero() };
        let lower: Rational = (0..j)
            .filter(|&i| !q.coeff(i).is_zero())
            .map(|i| q.coeff(i) * &m[i])
            .sum();
        m.push((target - lower) / q.coeff(j));
    }
    let mut guard = free_cache().lock().unwrap();
    let entry = guard.entry(f.n()).or_default();
    if entry.len() < m.len() {
        *entry = m.clone();
    }
    m
}

/// `Σ_k c_k m_k`.
pub fn integrate_poly<M: Moments + ?Sized>(mf: &M, p: &Poly) -> Rational {
    let Some(deg) = p.degree() else {
        return Rational::zero();
    };
    let m = mf.moments(deg);
    p.coeffs()
        .iter()
        .zip(&m)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, mk)| c * mk)
        .sum()
}

/// Monic orthogonal polynomials of degrees `0..=maxdeg` for the functional.
///
/// Uses the Stieltjes form of Gram–Schmidt (three-term recurrence with
/// coefficients read off the functional). A vanishing norm means the Hankel
/// matrix of moments is singular at that size.
pub fn gram_schmidt<M: Moments + ?Sized>(mf: &M, maxdeg: usize) -> Result<Vec<Poly>> {
    let m = mf.moments(2 * maxdeg + 1);
    let functional = |p: &Poly| -> Rational {
        p.coeffs()
            .iter()
            .zip(&m)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, mk)| c * mk)
            .sum()
    };
    let mut out = vec![Poly::one()];
    let mut norms: Vec<Rational> = Vec::with_capacity(maxdeg + 1);
    for k in 0..maxdeg {
        let pk = &out[k];
        let norm = functional(&(pk * pk));
        if norm.is_zero() {
            return Err(Error::SingularHankel { degree: k });
        }
        let xpk = pk.shift_up();
        let alpha = functional(&(&xpk * pk)) / &norm;
        let mut next = &xpk - &pk.scale(&alpha);
        if k > 0 {
            let beta = &norm / &norms[k - 1];
            next = &next - &out[k - 1].scale(&beta);
        }
        norms.push(norm);
        out.push(next);
    }
    Ok(out)
}

/// A point mass of `ν`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Atom {
    #[serde(rename = "x", with = "rational_string")]
    pub location: Rational,
    #[serde(rename = "w", with = "rational_string")]
    pub weight: Rational,
}

/// An absolutely continuous part of `ν`: polynomial density on `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityPiece {
    #[serde(with = "rational_string")]
    pub lo: Rational,
    #[serde(with = "rational_string")]
    pub hi: Rational,
    #[serde(rename = "coeffs", with = "poly_coeffs")]
    pub density: Poly,
}

mod poly_coeffs {
    use super::{Poly, Rational};
    use crate::ratpoly::rational_string;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &Poly, s: S) -> Result<S::Ok, S::Error> {
        rational_string::vec::serialize(p.coeffs(), s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Poly, D::Error> {
        let v: Vec<Rational> = rational_string::vec::deserialize(d)?;
        Ok(Poly::from_coeffs(v))
    }
}

/// A finite positive measure made of atoms and polynomial-density pieces.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevyMeasure {
    #[serde(default)]
    pub atoms: Vec<Atom>,
    #[serde(default)]
    pub pieces: Vec<DensityPiece>,
}

/// Number of equispaced points used to screen densities for negativity.
pub const DENSITY_SAMPLES: usize = 33;

impl LevyMeasure {
    pub fn zero() -> Self {
        LevyMeasure::default()
    }

    pub fn atom(location: Rational, weight: Rational) -> Self {
        LevyMeasure {
            atoms: vec![Atom { location, weight }],
            pieces: Vec::new(),
        }
    }

    pub fn density(lo: Rational, hi: Rational, density: Poly) -> Self {
        LevyMeasure {
            atoms: Vec::new(),
            pieces: vec![DensityPiece { lo, hi, density }],
        }
    }

    /// Uniform density `1` on `[-1, 1]`.
    pub fn uniform() -> Self {
        LevyMeasure::density(int(-1), int(1), Poly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.atoms.is_empty() && self.pieces.iter().all(|p| p.density.is_zero())
    }

    /// Sum of two measures.
    pub fn plus(&self, other: &LevyMeasure) -> LevyMeasure {
        let mut out = self.clone();
        out.atoms.extend(other.atoms.iter().cloned());
        out.pieces.extend(other.pieces.iter().cloned());
        out
    }

    /// `c · ν`.
    pub fn scaled(&self, c: &Rational) -> LevyMeasure {
        LevyMeasure {
            atoms: self
                .atoms
                .iter()
                .map(|a| Atom {
                    location: a.location.clone(),
                    weight: &a.weight * c,
                })
                .collect(),
            pieces: self
                .pieces
                .iter()
                .map(|p| DensityPiece {
                    lo: p.lo.clone(),
                    hi: p.hi.clone(),
                    density: p.density.scale(c),
                })
                .collect(),
        }
    }

    /// Checks weights and support against `[lo, hi]`; an atom exactly at
    /// `hi` (the normalization point) is rejected.
    pub fn validate_support(&self, lo: &Rational, hi: &Rational) -> Result<()> {
        for a in &self.atoms {
            if !a.weight.is_positive() {
                return Err(Error::InvalidMeasure(format!(
                    "atom weight {} is not positive",
                    a.weight
                )));
            }
            if &a.location == hi {
                return Err(Error::AtomAtNormalization(hi.clone()));
            }
            if &a.location < lo || &a.location > hi {
                return Err(Error::InvalidMeasure(format!(
                    "atom at {} outside [{lo}, {hi}]",
                    a.location
                )));
            }
        }
        for p in &self.pieces {
            if p.lo >= p.hi {
                return Err(Error::InvalidMeasure(format!(
                    "empty piece [{}, {}]",
                    p.lo, p.hi
                )));
            }
            if &p.lo < lo || &p.hi > hi {
                return Err(Error::InvalidMeasure(format!(
                    "piece [{}, {}] outside [{lo}, {hi}]",
                    p.lo, p.hi
                )));
            }
        }
        Ok(())
    }

    /// Validation for a jump measure on `[-1, 1]`.
    pub fn validate(&self) -> Result<()> {
        self.validate_support(&int(-1), &int(1))
    }

    /// Sample points where some density is negative (screen only).
    pub fn negative_density_samples(&self) -> Vec<(usize, Rational)> {
        let mut out = Vec::new();
        for (i, p) in self.pieces.iter().enumerate() {
            let width = &p.hi - &p.lo;
            for j in 0..DENSITY_SAMPLES {
                let x = &p.lo + &width * int(j as u64) / int(DENSITY_SAMPLES as u64 - 1);
                if p.density.eval(&x).is_negative() {
                    out.push((i, x));
                }
            }
        }
        out
    }

    pub fn from_json(text: &str) -> Result<LevyMeasure> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("measure JSON: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("measure serializes")
    }
}

/// `∫ p dν`: atoms by evaluation, pieces by exact antiderivative.
pub fn levy_integrate(nu: &LevyMeasure, p: &Poly) -> Rational {
    let atoms: Rational = nu
        .atoms
        .iter()
        .map(|a| &a.weight * p.eval(&a.location))
        .sum();
    let pieces: Rational = nu
        .pieces
        .iter()
        .map(|piece| (p * &piece.density).integrate(&piece.lo, &piece.hi))
        .sum();
    atoms + pieces
}
