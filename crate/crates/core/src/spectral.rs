//! Eigenspace multiplicities, spectral zeta and heat-trace partial sums, the
//! spectral dimension of a generator, and the spectrum table with its JSON
//! and CSV forms.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::binom;
use crate::error::{Error, Result};
use crate::families::{chebyshev_u_values, Family, SphereKind};
use crate::levy::{eigenvalues, Generator, LevyPair};
use crate::measures::LevyMeasure;
use crate::numeric::{exp_rational, ln_bigint, slope};
use crate::ratpoly::{format_rational, rational_string, to_f64, Rational};

/// Upper end of the regression window for jump-free generators.
pub const REGRESSION_SMAX: usize = 400;
/// Upper end of the regression window when `ν` is nonzero (each `λ_s` then
/// needs the full polynomial `q_s`).
pub const REGRESSION_SMAX_JUMPS: usize = 60;
/// Allowed relative gap between exact and regressed dimensions.
pub const REGRESSION_TOLERANCE: f64 = 0.05;
/// Relative gap in the eigenvalue growth order beyond which a jump
/// generator is reported by regression instead of by the exact order.
pub const JUMP_ORDER_TOLERANCE: f64 = 0.10;

/// `dim D_s`.
pub fn multiplicity(f: Family, s: usize) -> BigInt {
    let n = f.n() as i64;
    match f.kind() {
        SphereKind::Classical => {
            let s = s as i64;
            binom(s + n - 2, n - 2) + binom(s + n - 3, n - 2)
        }
        SphereKind::HalfLiberated => {
            let m = (s / 2) as i64;
            let b = |j: i64| binom(j + n - 2, n - 2);
            let c = |j: i64| binom(j + n - 2, n - 1);
            if s % 2 == 0 {
                b(m) * b(m) + 2 * b(m) * c(m)
            } else {
                b(m) * b(m + 1) + b(m + 1) * c(m) + c(m + 1) * b(m)
            }
        }
        SphereKind::Free => chebyshev_u_values(n, s).pop().expect("nonempty"),
    }
}

/// `dim D_0, ..., dim D_smax`.
pub fn multiplicities(f: Family, smax: usize) -> Vec<BigInt> {
    match f.kind() {
        SphereKind::Free => chebyshev_u_values(f.n() as i64, smax),
        _ => (0..=smax).map(|s| multiplicity(f, s)).collect(),
    }
}

fn negative_eigenvalues(g: &Generator, smax: usize) -> Result<Vec<Rational>> {
    let lambdas = eigenvalues(g, smax);
    for (s, l) in lambdas.iter().enumerate().skip(1) {
        if !l.is_negative() {
            return Err(Error::DegenerateGenerator { s, lambda: l.clone() });
        }
    }
    Ok(lambdas)
}

/// `Σ_{s=1}^{smax} m_s (-λ_s)^{-z/2}`, summed in ascending `s`.
pub fn zeta_partial(g: &Generator, z: f64, smax: usize) -> Result<f64> {
    let lambdas = negative_eigenvalues(g, smax)?;
    let ms = multiplicities(g.family, smax);
    Ok((1..=smax)
        .map(|s| (ln_bigint(&ms[s]) - 0.5 * z * to_f64(&-&lambdas[s]).ln()).exp())
        .sum())
}

/// `Σ_{s=0}^{smax} m_s e^{t λ_s}`, summed in ascending `s`.
pub fn heat_trace_partial(g: &Generator, t: &Rational, smax: usize) -> Result<f64> {
    if t.is_negative() {
        return Err(Error::InvalidArgument(format!("time t = {t} must be >= 0")));
    }
    let lambdas = eigenvalues(g, smax);
    let ms = multiplicities(g.family, smax);
    Ok((0..=smax)
        .map(|s| ms[s].to_f64().unwrap_or(f64::INFINITY) * exp_rational(&(&lambdas[s] * t)))
        .sum())
}

/// Value of a spectral dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DimensionValue {
    Finite(Rational),
    Infinite,
}

impl fmt::Display for DimensionValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimensionValue::Finite(r) => f.write_str(&format_rational(r)),
            DimensionValue::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DimensionMethod {
    ExactOrder,
    NumericRegression,
}

impl DimensionMethod {
    pub fn name(self) -> &'static str {
        match self {
            DimensionMethod::ExactOrder => "exact-order",
            DimensionMethod::NumericRegression => "numeric-regression",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralDimension {
    pub value: DimensionValue,
    pub method: DimensionMethod,
    /// Dimension implied by the regressed growth orders.
    pub regressed: f64,
    pub warning: Option<String>,
}

/// Growth order `a` of `m_s ≍ s^a`, or `None` for exponential growth.
pub fn multiplicity_order(f: Family) -> Option<u32> {
    let n = f.n();
    match f.kind() {
        SphereKind::Classical => Some(n - 2),
        SphereKind::HalfLiberated => Some(2 * n - 3),
        SphereKind::Free if n == 2 => Some(1),
        SphereKind::Free => None,
    }
}

/// Growth order `β` of `|λ_s| ≍ s^β` for a jump-free generator.
pub fn eigenvalue_order(f: Family) -> u32 {
    match f.kind() {
        SphereKind::Free if f.n() >= 3 => 1,
        _ => 2,
    }
}

/// Regression slopes of `log m_s` and `log(-λ_s)` against `log s` over
/// `[smax/2, smax]`.
pub fn regressed_orders(g: &Generator, smax: usize) -> Result<(f64, f64)> {
    let lambdas = negative_eigenvalues(g, smax)?;
    let ms = multiplicities(g.family, smax);
    let range = (smax / 2).max(1)..=smax;
    let xs: Vec<f64> = range.clone().map(|s| (s as f64).ln()).collect();
    let log_m: Vec<f64> = range.clone().map(|s| ln_bigint(&ms[s])).collect();
    let log_l: Vec<f64> = range.map(|s| to_f64(&-&lambdas[s]).ln()).collect();
    Ok((slope(&xs, &log_m), slope(&xs, &log_l)))
}

fn approx_rational(x: f64) -> Rational {
    Rational::new(BigInt::from((x * 1000.0).round() as i64), BigInt::from(1000))
}

/// Spectral dimension of the generator on its sphere.
pub fn spectral_dimension(g: &Generator) -> Result<SpectralDimension> {
    if !g.pair.b.is_positive() {
        return Err(Error::NoDrift);
    }
    let jumps = !g.pair.nu.is_zero();
    let smax = if jumps { REGRESSION_SMAX_JUMPS } else { REGRESSION_SMAX };
    let Some(a) = multiplicity_order(g.family) else {
        return Ok(SpectralDimension {
            value: DimensionValue::Infinite,
            method: DimensionMethod::ExactOrder,
            regressed: f64::INFINITY,
            warning: None,
        });
    };
    let (a_reg, beta_reg) = regressed_orders(g, smax)?;
    let beta = f64::from(eigenvalue_order(g.family));
    let regressed = 2.0 * (a_reg + 1.0) / beta_reg;
    if jumps && ((beta_reg - beta) / beta).abs() > JUMP_ORDER_TOLERANCE {
        let value = 2.0 * (f64::from(a) + 1.0) / beta_reg;
        return Ok(SpectralDimension {
            value: DimensionValue::Finite(approx_rational(value)),
            method: DimensionMethod::NumericRegression,
            regressed,
            warning: Some(format!(
                "eigenvalue growth order {beta_reg:.3} differs from the jump-free order {beta}"
            )),
        });
    }
    let exact = Rational::new(BigInt::from(2 * (a + 1)), BigInt::from(beta as u32));
    let exact_f = to_f64(&exact);
    if !jumps && ((regressed - exact_f) / exact_f).abs() > REGRESSION_TOLERANCE {
        return Err(Error::RegressionMismatch {
            exact: exact_f,
            regressed,
            tolerance: REGRESSION_TOLERANCE,
        });
    }
    Ok(SpectralDimension {
        value: DimensionValue::Finite(exact),
        method: DimensionMethod::ExactOrder,
        regressed,
        warning: None,
    })
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(D::Error::custom)
    }
}

/// One row of the spectrum: `(s, m_s, λ_s)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub s: usize,
    #[serde(rename = "m", with = "bigint_string")]
    pub multiplicity: BigInt,
    #[serde(with = "rational_string")]
    pub lambda: Rational,
}

/// The spectrum of a generator up to degree `smax`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectrum {
    pub family: SphereKind,
    #[serde(rename = "N")]
    pub n: u32,
    #[serde(with = "rational_string")]
    pub b: Rational,
    pub nu: LevyMeasure,
    pub entries: Vec<SpectrumEntry>,
}

pub fn spectrum(g: &Generator, smax: usize) -> Spectrum {
    let ms = multiplicities(g.family, smax);
    let entries = eigenvalues(g, smax)
        .into_iter()
        .zip(ms)
        .enumerate()
        .map(|(s, (lambda, multiplicity))| SpectrumEntry { s, multiplicity, lambda })
        .collect();
    Spectrum {
        family: g.family.kind(),
        n: g.family.n(),
        b: g.pair.b.clone(),
        nu: g.pair.nu.clone(),
        entries,
    }
}

impl Spectrum {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spectrum serializes")
    }

    pub fn from_json(text: &str) -> Result<Spectrum> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("spectrum JSON: {e}")))
    }

    /// CSV with columns `s,m,lambda_num,lambda_float`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("s,m,lambda_num,lambda_float\n");
        for e in &self.entries {
            out.push_str(&format!(
                "{},{},{},{:.16e}\n",
                e.s,
                e.multiplicity,
                format_rational(&e.lambda),
                to_f64(&e.lambda)
            ));
        }
        out
    }

    pub fn generator(&self) -> Result<Generator> {
        let family = Family::new(self.family, self.n)?;
        Ok(Generator::new(family, LevyPair::new(self.b.clone(), self.nu.clone())?))
    }
}

/// `0` when `values` agrees with a polynomial of degree below `order`
/// (the `order`-th forward difference), for finite-difference checks.
pub fn forward_difference(values: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut cur = values.to_vec();
    for _ in 0..order {
        cur = cur.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    cur
}

/// `true` when every entry is zero.
pub fn all_zero(values: &[BigInt]) -> bool {
    values.iter().all(Zero::is_zero)
}
