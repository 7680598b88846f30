//! Weingarten calculus for the orthogonal, half-liberated and free
//! orthogonal quantum groups: pairings, loop-count Gram matrices and their
//! exact inverses, Haar-state moments of words in the generators `u_ij`,
//! the bi-invariant conditional expectation onto polynomials in `u_11` and
//! the idempotent state it induces.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::combinat::factorial;
use crate::error::{Error, Result};
use crate::families::{family_q, Family, SphereKind};
use crate::linalg::{invert_integer_matrix, RationalMatrix};
use crate::measures::MomentFunctional;
use crate::ratpoly::{Poly, Rational};

/// Which pairings enter the Weingarten formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    All,
    Balanced,
    NonCrossing,
}

impl Variant {
    pub fn for_kind(kind: SphereKind) -> Variant {
        match kind {
            SphereKind::Classical => Variant::All,
            SphereKind::HalfLiberated => Variant::Balanced,
            SphereKind::Free => Variant::NonCrossing,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::All => "all",
            Variant::Balanced => "balanced",
            Variant::NonCrossing => "non-crossing",
        }
    }
}

/// Longest word whose moment is computed exactly, per model.
pub fn length_cap(kind: SphereKind) -> usize {
    match kind {
        SphereKind::Classical => 8,
        SphereKind::HalfLiberated => 10,
        SphereKind::Free => 12,
    }
}

/// A perfect matching of `{1, ..., 2k}`, stored as a partner table on
/// 0-based positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pairing {
    partner: Vec<usize>,
}

impl Pairing {
    /// Builds a pairing from 1-based pairs, checking it is a perfect matching.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Pairing> {
        let size = 2 * pairs.len();
        let mut partner = vec![usize::MAX; size];
        for &(a, b) in pairs {
            if a == 0 || b == 0 || a > size || b > size || a == b {
                return Err(Error::InvalidArgument(format!("bad pair ({a},{b})")));
            }
            if partner[a - 1] != usize::MAX || partner[b - 1] != usize::MAX {
                return Err(Error::InvalidArgument(format!("point reused in ({a},{b})")));
            }
            partner[a - 1] = b - 1;
            partner[b - 1] = a - 1;
        }
        Ok(Pairing { partner })
    }

    pub fn points(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i]
    }

    /// Pairs `(a, b)` with `a < b`, 1-based, ordered by `a`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i < j)
            .map(|(i, &j)| (i + 1, j + 1))
            .collect()
    }

    pub fn is_balanced(&self) -> bool {
        self.partner.iter().enumerate().all(|(i, &j)| (i + j) % 2 == 1)
    }

    pub fn is_non_crossing(&self) -> bool {
        let pairs = self.pairs();
        pairs.iter().all(|&(a, b)| {
            pairs
                .iter()
                .all(|&(c, d)| !(a < c && c < b && b < d))
        })
    }

    /// `true` when `indices` is constant on every pair.
    pub fn respects(&self, indices: &[u32]) -> bool {
        self.partner
            .iter()
            .enumerate()
            .all(|(i, &j)| indices[i] == indices[j])
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.points() >= 10;
        for (a, b) in self.pairs() {
            if wide {
                write!(f, "({a},{b})")?;
            } else {
                write!(f, "({a}{b})")?;
            }
        }
        Ok(())
    }
}

/// All pairings of `2k` points admitted by `variant`, in lexicographic order
/// of their pair lists.
pub fn enumerate_pairings(k: usize, variant: Variant) -> Vec<Pairing> {
    fn extend(
        partner: &mut Vec<usize>,
        variant: Variant,
        out: &mut Vec<Pairing>,
    ) {
        let Some(a) = partner.iter().position(|&p| p == usize::MAX) else {
            out.push(Pairing { partner: partner.clone() });
            return;
        };
        for b in a + 1..partner.len() {
            if partner[b] != usize::MAX {
                continue;
            }
            match variant {
                Variant::All => {}
                Variant::Balanced => {
                    if (b - a) % 2 == 0 {
                        continue;
                    }
                }
                Variant::NonCrossing => {
                    // Every point strictly inside (a, b) is still free, since
                    // `a` is the first free point; they must pair among
                    // themselves, which needs an even count.
                    if (b - a) % 2 == 0 {
                        continue;
                    }
                    let crosses = (0..a).any(|c| {
                        let d = partner[c];
                        c < d && a < d && d < b
                    });
                    if crosses {
                        continue;
                    }
                }
            }
            partner[a] = b;
            partner[b] = a;
            extend(partner, variant, out);
            partner[a] = usize::MAX;
            partner[b] = usize::MAX;
        }
    }
    let mut out = Vec::new();
    let mut partner = vec![usize::MAX; 2 * k];
    extend(&mut partner, variant, &mut out);
    out
}

/// Number of cycles in the superposition of two pairings on the same points.
pub fn loops(p: &Pairing, q: &Pairing) -> usize {
    assert_eq!(p.points(), q.points(), "pairings on different point sets");
    let mut seen = vec![false; p.points()];
    let mut count = 0;
    for start in 0..p.points() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut x = start;
        loop {
            seen[x] = true;
            let y = p.partner(x);
            seen[y] = true;
            x = q.partner(y);
            if x == start {
                break;
            }
        }
    }
    count
}

/// Pairings of one size together with the inverse of their Gram matrix.
#[derive(Debug)]
pub struct Weingarten {
    pub pairings: Vec<Pairing>,
    pub matrix: RationalMatrix,
}

type WgKey = (usize, Variant, u32);

fn wg_cache() -> &'static Mutex<HashMap<WgKey, Arc<Weingarten>>> {
    static CACHE: OnceLock<Mutex<HashMap<WgKey, Arc<Weingarten>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Pairings of `2k` points and the exact inverse of `G(p,q) = N^loops(p,q)`.
pub fn weingarten(k: usize, variant: Variant, n: u32) -> Result<Arc<Weingarten>> {
    let key = (k, variant, n);
    if let Some(hit) = wg_cache().lock().expect("weingarten cache poisoned").get(&key) {
        return Ok(hit.clone());
    }
    let pairings = enumerate_pairings(k, variant);
    let powers: Vec<BigInt> = (0..=k).map(|e| BigInt::from(n).pow(e as u32)).collect();
    let gram: Vec<Vec<BigInt>> = pairings
        .iter()
        .map(|p| pairings.iter().map(|q| powers[loops(p, q)].clone()).collect())
        .collect();
    let matrix = invert_integer_matrix(&gram).ok_or(Error::SingularGram {
        points: 2 * k,
        variant: variant.name(),
        n,
    })?;
    let wg = Arc::new(Weingarten { pairings, matrix });
    wg_cache()
        .lock()
        .expect("weingarten cache poisoned")
        .entry(key)
        .or_insert_with(|| wg.clone());
    Ok(wg)
}

/// Exact inverse of the loop-count Gram matrix on pairings of `2k` points.
pub fn weingarten_matrix(k: usize, variant: Variant, n: u32) -> Result<RationalMatrix> {
    Ok(weingarten(k, variant, n)?.matrix.clone())
}

/// A word `u_{r1 c1} u_{r2 c2} ...` in the generators of one model.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<(u32, u32)>,
    model: SphereKind,
    n: u32,
}

impl Word {
    pub fn new(letters: Vec<(u32, u32)>, model: SphereKind, n: u32) -> Result<Word> {
        if n < 2 {
            return Err(Error::InvalidDimension(n));
        }
        for &(r, c) in &letters {
            for index in [r, c] {
                if index == 0 || index > n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
        }
        Ok(Word { letters, model, n })
    }

    /// `u_11^j`.
    pub fn u11_power(j: usize, model: SphereKind, n: u32) -> Result<Word> {
        Word::new(vec![(1, 1); j], model, n)
    }

    /// Parses `"u11^2 u22^2"` or `"u{1,12} u{12,1}^3"`.
    pub fn parse(text: &str, model: SphereKind, n: u32) -> Result<Word> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (letter, power) = match token.split_once('^') {
                Some((l, p)) => {
                    let p: usize = p
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{token}`")))?;
                    (l, p)
                }
                None => (token, 1),
            };
            let body = letter
                .strip_prefix('u')
                .ok_or_else(|| Error::Parse(format!("letter `{token}` must start with u")))?;
            let (r, c) = if let Some(inner) =
                body.strip_prefix('{').and_then(|b| b.strip_suffix('}'))
            {
                let (r, c) = inner
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("expected u{{row,col}} in `{token}`")))?;
                (parse_index(r.trim(), token)?, parse_index(c.trim(), token)?)
            } else {
                if n >= 10 {
                    return Err(Error::Parse(format!(
                        "use u{{row,col}} for indices when N >= 10 (`{token}`)"
                    )));
                }
                let digits: Vec<char> = body.chars().collect();
                if digits.len() != 2 {
                    return Err(Error::Parse(format!("expected two digits in `{token}`")));
                }
                (
                    parse_index(&digits[0].to_string(), token)?,
                    parse_index(&digits[1].to_string(), token)?,
                )
            };
            letters.extend(std::iter::repeat_n((r, c), power));
        }
        Word::new(letters, model, n)
    }

    pub fn letters(&self) -> &[(u32, u32)] {
        &self.letters
    }

    pub fn model(&self) -> SphereKind {
        self.model
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn rows(&self) -> Vec<u32> {
        self.letters.iter().map(|&(r, _)| r).collect()
    }

    pub fn cols(&self) -> Vec<u32> {
        self.letters.iter().map(|&(_, c)| c).collect()
    }

    /// `u_11^j · self`.
    pub fn after_u11_power(&self, j: usize) -> Word {
        let mut letters = vec![(1, 1); j];
        letters.extend_from_slice(&self.letters);
        Word { letters, model: self.model, n: self.n }
    }

    /// Cyclic rotation moving the first `shift` letters to the end.
    pub fn rotated(&self, shift: usize) -> Word {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let len = letters.len();
            letters.rotate_left(shift % len);
        }
        Word { letters, model: self.model, n: self.n }
    }

    fn family(&self) -> Family {
        Family::new(self.model, self.n).expect("word dimension checked at construction")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &(r, c) in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if self.n >= 10 {
                write!(f, "u{{{r},{c}}}")?;
            } else {
                write!(f, "u{r}{c}")?;
            }
        }
        Ok(())
    }
}

fn parse_index(s: &str, token: &str) -> Result<u32> {
    s.parse()
        .map_err(|_| Error::Parse(format!("bad index `{s}` in `{token}`")))
}

/// Haar-state value of a word, by the Weingarten formula for its model.
pub fn haar_moment(w: &Word) -> Result<Rational> {
    let len = w.len();
    if len % 2 == 1 {
        return Ok(Rational::zero());
    }
    if len == 0 {
        return Ok(Rational::one());
    }
    let cap = length_cap(w.model);
    if len > cap {
        return Err(Error::LengthCap { len, cap, model: w.model.name() });
    }
    let variant = Variant::for_kind(w.model);
    let rows = w.rows();
    let cols = w.cols();
    let ps: Vec<usize>;
    let qs: Vec<usize>;
    {
        let pairings = enumerate_pairings(len / 2, variant);
        ps = (0..pairings.len()).filter(|&i| pairings[i].respects(&rows)).collect();
        if ps.is_empty() {
            return Ok(Rational::zero());
        }
        qs = (0..pairings.len()).filter(|&i| pairings[i].respects(&cols)).collect();
        if qs.is_empty() {
            return Ok(Rational::zero());
        }
    }
    let wg = weingarten(len / 2, variant, w.n)?;
    let mut total = Rational::zero();
    for &p in &ps {
        for &q in &qs {
            total += &wg.matrix[p][q];
        }
    }
    Ok(total)
}

/// Bi-invariant conditional expectation of `w` onto polynomials of degree
/// at most `smax` in `u_11`, returned as a polynomial in `x = u_11`.
pub fn ebi(w: &Word, smax: usize) -> Result<Poly> {
    let family = w.family();
    let mf = MomentFunctional::new(family);
    let mut out = Poly::zero();
    for k in 0..=smax {
        let qk = family_q(family, k);
        if (k + w.len()) % 2 == 1 {
            continue;
        }
        let mut inner = Rational::zero();
        for (j, c) in qk.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            inner += c * haar_moment(&w.after_u11_power(j))?;
        }
        if inner.is_zero() {
            continue;
        }
        let norm = mf.integrate_poly(&(&qk * &qk));
        out = out + qk.scale(&(inner / norm));
    }
    Ok(out)
}

/// The idempotent state: `E_bi(w)` evaluated at `u_11 = 1`.
pub fn phi(w: &Word) -> Result<Rational> {
    Ok(ebi(w, w.len())?.eval(&Rational::one()))
}

/// `phi` extended linearly to a combination of words.
pub fn phi_combination(terms: &[(Rational, Word)]) -> Result<Rational> {
    let mut total = Rational::zero();
    for (c, w) in terms {
        if !c.is_zero() {
            total += c * phi(w)?;
        }
    }
    Ok(total)
}

/// A polynomial in `u_11` written as a combination of words.
pub fn poly_in_u11(p: &Poly, model: SphereKind, n: u32) -> Result<Vec<(Rational, Word)>> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| Ok((c.clone(), Word::u11_power(j, model, n)?)))
        .collect()
}

/// Closed-form half-liberated integral of `x_{i1} ... x_{ik}`.
pub fn star_word_moment(indices: &[u32], n: u32) -> Rational {
    if indices.len() % 2 == 1 {
        return Rational::zero();
    }
    let mut counts: HashMap<u32, (u64, u64)> = HashMap::new();
    for (pos, &i) in indices.iter().enumerate() {
        let entry = counts.entry(i).or_default();
        if pos % 2 == 0 {
            entry.0 += 1;
        } else {
            entry.1 += 1;
        }
    }
    if counts.values().any(|&(odd, even)| odd != even) {
        return Rational::zero();
    }
    let total: u64 = counts.values().map(|&(l, _)| l).sum();
    let numer = counts
        .values()
        .fold(factorial(u64::from(n) - 1), |acc, &(l, _)| acc * factorial(l));
    Rational::new(numer, factorial(u64::from(n) + total - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{catalan, double_factorial_odd};
    use crate::measures::Moments;
    use crate::ratpoly::{int, ratio};

    fn word(text: &str, model: SphereKind, n: u32) -> Word {
        Word::parse(text, model, n).unwrap()
    }

    #[test]
    fn pairing_counts() {
        for k in 1..=5 {
            assert_eq!(
                BigInt::from(enumerate_pairings(k, Variant::All).len()),
                double_factorial_odd(k as u64)
            );
            assert_eq!(
                BigInt::from(enumerate_pairings(k, Variant::NonCrossing).len()),
                catalan(k as u64)
            );
            assert_eq!(
                BigInt::from(enumerate_pairings(k, Variant::Balanced).len()),
                factorial(k as u64)
            );
        }
        for p in enumerate_pairings(5, Variant::NonCrossing) {
            assert!(p.is_non_crossing());
        }
        for p in enumerate_pairings(4, Variant::Balanced) {
            assert!(p.is_balanced());
        }
    }

    #[test]
    fn small_pairing_lists() {
        let show = |v: Variant| -> Vec<String> {
            enumerate_pairings(2, v).iter().map(|p| p.to_string()).collect()
        };
        assert_eq!(show(Variant::NonCrossing), ["(12)(34)", "(14)(23)"]);
        assert_eq!(show(Variant::Balanced), ["(12)(34)", "(14)(23)"]);
        assert_eq!(show(Variant::All), ["(12)(34)", "(13)(24)", "(14)(23)"]);
    }

    #[test]
    fn loop_examples() {
        let a = Pairing::from_pairs(&[(1, 2), (3, 4)]).unwrap();
        let b = Pairing::from_pairs(&[(1, 4), (2, 3)]).unwrap();
        assert_eq!(loops(&a, &a), 2);
        assert_eq!(loops(&a, &b), 1);
        for p in enumerate_pairings(4, Variant::All) {
            assert_eq!(loops(&p, &p), 4);
        }
    }

    #[test]
    fn weingarten_examples() {
        for n in 2..6 {
            for v in [Variant::All, Variant::Balanced, Variant::NonCrossing] {
                assert_eq!(weingarten_matrix(1, v, n).unwrap(), vec![vec![ratio(1, n as i64)]]);
            }
            let n = n as i64;
            let wg = weingarten_matrix(2, Variant::NonCrossing, n as u32).unwrap();
            let d = n.pow(4) - n * n;
            assert_eq!(wg, vec![vec![ratio(n * n, d), ratio(-n, d)], vec![ratio(-n, d), ratio(n * n, d)]]);
            let all: Rational = weingarten_matrix(2, Variant::All, n as u32)
                .unwrap()
                .iter()
                .flatten()
                .sum();
            assert_eq!(all, ratio(3, n * (n + 2)));
        }
    }

    #[test]
    fn singular_gram_is_reported() {
        let w = word("u11^6", SphereKind::HalfLiberated, 2);
        assert!(matches!(haar_moment(&w), Err(Error::SingularGram { .. })));
    }

    #[test]
    fn free_golden_values() {
        for n in 3..=6u32 {
            let ni = n as i64;
            assert_eq!(haar_moment(&word("u22^2", SphereKind::Free, n)).unwrap(), ratio(1, ni));
            assert_eq!(
                haar_moment(&word("u11^2 u22^2", SphereKind::Free, n)).unwrap(),
                ratio(1, ni * ni - 1)
            );
            for k in 0..=3 {
                let w = Word::new(vec![(2, 2), (1, 1), (2, 2)], SphereKind::Free, n)
                    .unwrap()
                    .after_u11_power(k);
                assert_eq!(haar_moment(&w).unwrap(), int(0));
            }
        }
    }

    #[test]
    fn classical_fourth_moment() {
        for n in 2..=6i64 {
            let w = word("u11^4", SphereKind::Classical, n as u32);
            assert_eq!(haar_moment(&w).unwrap(), ratio(3, n * (n + 2)));
        }
    }

    #[test]
    fn odd_words_vanish() {
        for kind in SphereKind::ALL {
            assert_eq!(haar_moment(&word("u11 u12 u21", kind, 3)).unwrap(), int(0));
        }
    }

    #[test]
    fn length_cap_applies() {
        let w = word("u11^10", SphereKind::Classical, 5);
        assert!(matches!(haar_moment(&w), Err(Error::LengthCap { .. })));
    }

    #[test]
    fn free_moments_match_functional() {
        for n in 2..=5u32 {
            let mf = MomentFunctional::new(Family::free(n).unwrap());
            let moments = mf.moments(8);
            for k in 1..=4 {
                let w = Word::u11_power(2 * k, SphereKind::Free, n).unwrap();
                assert_eq!(haar_moment(&w).unwrap(), moments[2 * k]);
            }
        }
    }

    #[test]
    fn star_word_examples() {
        for n in 2..=6i64 {
            assert_eq!(star_word_moment(&[1, 1], n as u32), ratio(1, n));
            assert_eq!(star_word_moment(&[1, 2], n as u32), int(0));
            assert_eq!(star_word_moment(&[1, 2, 2, 1], n as u32), ratio(1, n * (n + 1)));
            assert_eq!(star_word_moment(&[1, 2, 1, 2], n as u32), int(0));
        }
    }

    #[test]
    fn row_one_words_match_closed_form() {
        let n = 3u32;
        for len in [2usize, 4, 6] {
            let total = (n as usize).pow(len as u32);
            for code in 0..total {
                let mut c = code;
                let cols: Vec<u32> = (0..len)
                    .map(|_| {
                        let i = (c % n as usize) as u32 + 1;
                        c /= n as usize;
                        i
                    })
                    .collect();
                let letters = cols.iter().map(|&c| (1, c)).collect();
                let w = Word::new(letters, SphereKind::HalfLiberated, n).unwrap();
                assert_eq!(haar_moment(&w).unwrap(), star_word_moment(&cols, n), "{cols:?}");
            }
        }
    }

    #[test]
    fn traciality_small() {
        for kind in SphereKind::ALL {
            let w = word("u11 u12 u22 u21", kind, 3);
            let h = haar_moment(&w).unwrap();
            for s in 1..4 {
                assert_eq!(haar_moment(&w.rotated(s)).unwrap(), h);
            }
        }
    }

    #[test]
    fn ebi_examples() {
        for n in 3..=5u32 {
            let ni = n as i64;
            let e = ebi(&word("u11 u22^2", SphereKind::Free, n), 3).unwrap();
            let expected = Poly::from_coeffs(vec![int(0), int(ni - 2), int(0), int(1)])
                .scale(&ratio(1, (ni - 1) * (ni - 1)));
            assert_eq!(e, expected);
            assert!(ebi(&word("u22 u11 u22", SphereKind::Free, n), 3).unwrap().is_zero());
            for kind in SphereKind::ALL {
                let e = ebi(&word("u11^3", kind, n), 3).unwrap();
                assert_eq!(e, Poly::monomial(int(1), 3));
            }
        }
    }

    #[test]
    fn phi_examples() {
        for n in 3..=5u32 {
            for kind in [SphereKind::Free, SphereKind::HalfLiberated] {
                assert_eq!(phi(&word("u11 u22^2", kind, n)).unwrap(), ratio(1, n as i64 - 1));
                assert_eq!(phi(&word("u22 u11 u22", kind, n)).unwrap(), int(0));
            }
            for kind in SphereKind::ALL {
                assert_eq!(phi(&word("u11^2", kind, n)).unwrap(), int(1));
            }
        }
    }

    #[test]
    fn phi_of_family_polynomials_is_one() {
        let n = 4u32;
        for (kind, smax) in [
            (SphereKind::Free, 6),
            (SphereKind::HalfLiberated, 5),
            (SphereKind::Classical, 4),
        ] {
            // Balanced pairings need N at least half the word length.
            let n = if kind == SphereKind::HalfLiberated { 5 } else { n };
            let family = Family::new(kind, n).unwrap();
            for s in 0..=smax {
                let terms = poly_in_u11(&family_q(family, s), kind, n).unwrap();
                assert_eq!(phi_combination(&terms).unwrap(), int(1), "{kind} s={s}");
            }
        }
    }

    #[test]
    fn word_parsing() {
        let w = word("u11^2 u22^2", SphereKind::Free, 5);
        assert_eq!(w.letters(), &[(1, 1), (1, 1), (2, 2), (2, 2)]);
        let w = Word::parse("u{1,12} u{12,1}^2", SphereKind::Free, 12).unwrap();
        assert_eq!(w.letters(), &[(1, 12), (12, 1), (12, 1)]);
        assert_eq!(w.to_string(), "u{1,12} u{12,1} u{12,1}");
        assert!(Word::parse("u13", SphereKind::Free, 2).is_err());
        assert!(Word::parse("x11", SphereKind::Free, 2).is_err());
        assert!(Word::parse("u1", SphereKind::Free, 2).is_err());
        assert!(Word::parse("u11^a", SphereKind::Free, 2).is_err());
        assert!(Word::parse("u11", SphereKind::Free, 12).is_err());
    }
}
