//! A quick sweep of library invariants, reported as named pass/fail checks.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::combinat::{catalan, double_factorial_odd};
use crate::error::Result;
use crate::families::{family_q, family_qs, q_prime_at_one, Family, SphereKind};
use crate::haar::{enumerate_pairings, haar_moment, phi, star_word_moment, Variant, Word};
use crate::levy::{central_eigenvalue, eigenvalue, is_conditionally_positive, laplace, LevyPair};
use crate::measures::{LevyMeasure, MomentFunctional};
use crate::ratpoly::{int, ratio, Poly, Rational};
use crate::spectral::{multiplicity, spectral_dimension, DimensionValue};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, outcome: Result<Option<String>>) -> Check {
    match outcome {
        Ok(None) => Check { name, passed: true, detail: String::new() },
        Ok(Some(detail)) => Check { name, passed: false, detail },
        Err(e) => Check { name, passed: false, detail: e.to_string() },
    }
}

fn families(ns: std::ops::RangeInclusive<u32>) -> impl Iterator<Item = Family> {
    ns.flat_map(|n| SphereKind::ALL.into_iter().map(move |k| Family::new(k, n).expect("n >= 2")))
}

fn first_failure<I: IntoIterator<Item = Option<String>>>(items: I) -> Option<String> {
    items.into_iter().flatten().next()
}

pub fn run_all() -> Vec<Check> {
    vec![
        check("ratpoly: division by (x - a) multiplies back", Ok(division_round_trip())),
        check("families: q_2 = (N x^2 - 1)/(N - 1)", Ok(q2_coincidence())),
        check("families: q_s(1) = 1 and parity", Ok(normalization_and_parity())),
        check("families: closed-form q_s'(1)", Ok(derivative_closed_forms())),
        check("measures: q_s orthogonal", Ok(orthogonality())),
        check("haar: pairing counts", Ok(pairing_counts())),
        check("haar: free golden values", free_golden_values()),
        check("haar: traciality", traciality()),
        check("haar: row-one words match closed form", row_one_words()),
        check("haar: free moments match functional", free_moment_cross_check()),
        check("haar: phi on u11 u22^2 vs u22 u11 u22", phi_non_tracial()),
        check("levy: conditional positivity", Ok(schoenberg())),
        check("levy: Laplace eigenvalues negative", Ok(laplace_negative())),
        check("levy: central eigenvalues monotone", central_monotone()),
        check("spectral: multiplicity examples", Ok(multiplicity_examples())),
        check("spectral: dimensions", spectral_dimensions()),
    ]
}

fn division_round_trip() -> Option<String> {
    let p = Poly::from_ints(&[3, -1, 4, 1, -5, 9]);
    first_failure((-3..=3).map(|a| {
        let a = int(a);
        let shifted = &p - &Poly::constant(p.eval(&a));
        let q = shifted.div_by_x_minus(&a).ok()?;
        let back = &(&q * &Poly::from_coeffs(vec![-a.clone(), int(1)])) + &Poly::constant(p.eval(&a));
        (back != p).then(|| format!("round trip failed at {a}"))
    }))
}

fn q2_coincidence() -> Option<String> {
    first_failure(families(2..=8).map(|f| {
        let n = f.n() as i64;
        let want = Poly::from_coeffs(vec![ratio(-1, n - 1), int(0), ratio(n, n - 1)]);
        (family_q(f, 2) != want).then(|| format!("{f}: q_2 = {}", family_q(f, 2)))
    }))
}

fn normalization_and_parity() -> Option<String> {
    first_failure(families(2..=5).flat_map(|f| {
        family_qs(f, 20).into_iter().enumerate().map(move |(s, q)| {
            (q.eval(&Rational::one()) != int(1) || !q.has_parity(s % 2))
                .then(|| format!("{f}: q_{s} = {q}"))
        })
    }))
}

fn derivative_closed_forms() -> Option<String> {
    first_failure(families(2..=5).flat_map(|f| {
        (0..=20).map(move |s| {
            let symbolic = family_q(f, s).derivative().eval(&Rational::one());
            (symbolic != q_prime_at_one(f, s)).then(|| format!("{f}: s = {s}"))
        })
    }))
}

fn orthogonality() -> Option<String> {
    first_failure(families(2..=5).flat_map(|f| {
        let mf = MomentFunctional::new(f);
        let qs = family_qs(f, 8);
        (0..=8).flat_map(move |i| (0..i).map(move |j| (i, j))).map(move |(i, j)| {
            let ip = mf.integrate_poly(&(&qs[i] * &qs[j]));
            (!ip.is_zero()).then(|| format!("{f}: <q_{i}, q_{j}> = {ip}"))
        })
    }))
}

fn pairing_counts() -> Option<String> {
    first_failure((1..=5usize).map(|k| {
        let all = BigInt::from(enumerate_pairings(k, Variant::All).len());
        let nc = BigInt::from(enumerate_pairings(k, Variant::NonCrossing).len());
        (all != double_factorial_odd(k as u64) || nc != catalan(k as u64))
            .then(|| format!("k = {k}: {all} pairings, {nc} non-crossing"))
    }))
}

fn free_golden_values() -> Result<Option<String>> {
    for n in 3..=5u32 {
        let ni = n as i64;
        let cases = [
            ("u22^2", ratio(1, ni)),
            ("u11^2 u22^2", ratio(1, ni * ni - 1)),
            ("u22 u11 u22", int(0)),
            ("u11 u22 u11 u22", int(0)),
        ];
        for (text, want) in cases {
            let got = haar_moment(&Word::parse(text, SphereKind::Free, n)?)?;
            if got != want {
                return Ok(Some(format!("N = {n}, {text}: {got} != {want}")));
            }
        }
    }
    Ok(None)
}

fn traciality() -> Result<Option<String>> {
    for kind in SphereKind::ALL {
        for text in ["u11 u12 u22 u21", "u12 u12 u21 u21", "u11 u22 u12 u21 u11 u22"] {
            let w = Word::parse(text, kind, 3)?;
            let h = haar_moment(&w)?;
            for s in 1..w.len() {
                if haar_moment(&w.rotated(s))? != h {
                    return Ok(Some(format!("{kind}: {text} rotated by {s}")));
                }
            }
        }
    }
    Ok(None)
}

fn row_one_words() -> Result<Option<String>> {
    let n = 3u32;
    for len in [2usize, 4] {
        for code in 0..(n as usize).pow(len as u32) {
            let mut c = code;
            let cols: Vec<u32> = (0..len)
                .map(|_| {
                    let i = (c % n as usize) as u32 + 1;
                    c /= n as usize;
                    i
                })
                .collect();
            let w = Word::new(cols.iter().map(|&c| (1, c)).collect(), SphereKind::HalfLiberated, n)?;
            if haar_moment(&w)? != star_word_moment(&cols, n) {
                return Ok(Some(format!("cols {cols:?}")));
            }
        }
    }
    Ok(None)
}

fn free_moment_cross_check() -> Result<Option<String>> {
    for n in 2..=4u32 {
        let mf = MomentFunctional::new(Family::free(n)?);
        for k in 1..=3 {
            let h = haar_moment(&Word::u11_power(2 * k, SphereKind::Free, n)?)?;
            if h != mf.moment(2 * k) {
                return Ok(Some(format!("N = {n}, k = {k}")));
            }
        }
    }
    Ok(None)
}

fn phi_non_tracial() -> Result<Option<String>> {
    for kind in [SphereKind::Free, SphereKind::HalfLiberated] {
        for n in 3..=4u32 {
            let a = phi(&Word::parse("u11 u22^2", kind, n)?)?;
            let b = phi(&Word::parse("u22 u11 u22", kind, n)?)?;
            if a != ratio(1, n as i64 - 1) || !b.is_zero() {
                return Ok(Some(format!("{kind}, N = {n}: {a} and {b}")));
            }
        }
    }
    Ok(None)
}

fn schoenberg() -> Option<String> {
    let pairs = [
        (int(1), LevyMeasure::zero()),
        (int(0), LevyMeasure::atom(int(-1), int(1))),
        (int(0), LevyMeasure::atom(ratio(1, 2), int(1))),
        (int(0), LevyMeasure::uniform()),
        (int(2), LevyMeasure::atom(int(0), int(1))),
    ];
    first_failure(pairs.into_iter().map(|(b, nu)| {
        let pair = LevyPair::new(b.clone(), nu).ok()?;
        (!is_conditionally_positive(&pair, 5).psd).then(|| format!("b = {b}: not PSD"))
    }))
}

fn laplace_negative() -> Option<String> {
    first_failure(families(2..=5).flat_map(|f| {
        let g = laplace(f);
        (1..=40).map(move |s| {
            let l = eigenvalue(&g, s);
            (!l.is_negative()).then(|| format!("{f}: λ_{s} = {l}"))
        })
    }))
}

fn central_monotone() -> Result<Option<String>> {
    for n in 3..=5u32 {
        let mut last = Rational::zero();
        for s in 0..=20 {
            let l = central_eigenvalue(n, &int(1), &LevyMeasure::zero(), s)?;
            if l.is_positive() || l.abs() < last {
                return Ok(Some(format!("N = {n}, s = {s}: {l}")));
            }
            last = l.abs();
        }
    }
    Ok(None)
}

fn multiplicity_examples() -> Option<String> {
    let c3 = Family::classical(3).expect("valid");
    let h2 = Family::half_liberated(2).expect("valid");
    let f2 = Family::free(2).expect("valid");
    first_failure((0..=30usize).map(|s| {
        let ok = multiplicity(c3, s) == BigInt::from(2 * s + 1)
            && multiplicity(h2, s) == BigInt::from(s + 1)
            && multiplicity(f2, s) == BigInt::from(s + 1);
        (!ok).then(|| format!("s = {s}"))
    }))
}

fn spectral_dimensions() -> Result<Option<String>> {
    let cases = [
        (Family::classical(4)?, DimensionValue::Finite(int(3))),
        (Family::half_liberated(3)?, DimensionValue::Finite(int(4))),
        (Family::free(2)?, DimensionValue::Finite(int(2))),
        (Family::free(3)?, DimensionValue::Infinite),
    ];
    for (f, want) in cases {
        let got = spectral_dimension(&laplace(f))?.value;
        if got != want {
            return Ok(Some(format!("{f}: {got} != {want}")));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes() {
        for c in run_all() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
