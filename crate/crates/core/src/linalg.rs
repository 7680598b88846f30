//! Exact matrix routines: fraction-free Gauss–Jordan inversion of integer
//! matrices and a positive-semidefiniteness test for rational symmetric
//! matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ratpoly::Rational;

pub type RationalMatrix = Vec<Vec<Rational>>;

/// Inverse of a square integer matrix, or `None` when it is singular.
///
/// Fraction-free (Bareiss) Gauss–Jordan on `[A | I]`: every intermediate
/// division is exact, so the only rationals formed are the final entries.
pub fn invert_integer_matrix(a: &[Vec<BigInt>]) -> Option<RationalMatrix> {
    let n = a.len();
    let width = 2 * n;
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            r
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot_row = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(k, pivot_row);
        let (before, rest) = m.split_at_mut(k);
        let (pivot, after) = rest.split_first_mut().expect("row k exists");
        for row in before.iter_mut().chain(after.iter_mut()) {
            let factor = row[k].clone();
            for j in 0..width {
                if j == k {
                    continue;
                }
                let num = &pivot[k] * &row[j] - &factor * &pivot[j];
                debug_assert!(num.is_multiple_of(&prev));
                row[j] = num / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = pivot[k].clone();
    }
    // Left block is now d·I with d = ±det(A); rows carry d·A^{-1}.
    Some(
        m.into_iter()
            .enumerate()
            .map(|(i, row)| {
                let d = row[i].clone();
                row[n..]
                    .iter()
                    .map(|x| Rational::new(x.clone(), d.clone()))
                    .collect()
            })
            .collect(),
    )
}

/// Symmetric pivoting test: `true` iff the rational symmetric matrix is
/// positive semidefinite.
///
/// Eliminates along the diagonal; a negative pivot refutes, a zero pivot is
/// only admissible when its whole remaining row is zero.
pub fn is_positive_semidefinite(m: &RationalMatrix) -> bool {
    let n = m.len();
    let mut a = m.clone();
    for k in 0..n {
        let pivot = a[k][k].clone();
        if pivot.is_negative() {
            return false;
        }
        if pivot.is_zero() {
            if (k + 1..n).any(|j| !a[k][j].is_zero() || !a[j][k].is_zero()) {
                return false;
            }
            continue;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..n {
                let delta = &f * &a[k][j];
                a[i][j] -= delta;
            }
        }
    }
    true
}
