//! Fraction-free (Bareiss) elimination over the integers.
//!
//! Every intermediate entry after step `k` is a `(k+1)×(k+1)` minor of the
//! input, so the divisions below are exact and entries stay as small as the
//! determinants they represent.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Dense row-major integer matrix.
pub type IntMatrix = Vec<Vec<BigInt>>;

#[inline]
fn exact_div(num: &BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    debug_assert!(r.is_zero(), "Bareiss division was not exact");
    q
}

/// Runs Bareiss forward elimination on the first `pivot_cols` columns of
/// `m` in place. Returns the number of row swaps, or `None` when a zero
/// pivot column is met (the leading square block is singular).
fn eliminate(m: &mut IntMatrix, pivot_cols: usize) -> Option<usize> {
    let rows = m.len();
    let mut swaps = 0;
    let mut prev = BigInt::one();
    for k in 0..pivot_cols.min(rows) {
        // Smallest nonzero pivot keeps products small.
        let pivot_row = (k..rows)
            .filter(|&r| !m[r][k].is_zero())
            .min_by(|&a, &b| m[a][k].magnitude().cmp(m[b][k].magnitude()))?;
        if pivot_row != k {
            m.swap(pivot_row, k);
            swaps += 1;
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_line = &head[k];
        let pivot = &pivot_line[k];
        for row in tail.iter_mut() {
            let factor = row[k].clone();
            for j in (k + 1)..row.len() {
                let t = pivot * &row[j] - &factor * &pivot_line[j];
                row[j] = exact_div(&t, &prev);
            }
            row[k] = BigInt::zero();
        }
        prev = pivot.clone();
    }
    Some(swaps)
}

/// Determinant of a square integer matrix.
pub fn determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: IntMatrix = matrix.to_vec();
    match eliminate(&mut m, n) {
        None => BigInt::zero(),
        Some(swaps) => {
            let det = m[n - 1][n - 1].clone();
            if swaps % 2 == 1 {
                -det
            } else {
                det
            }
        }
    }
}

/// Solves `A x = b` exactly for square `A`. Returns `None` if `A` is
/// singular.
pub fn solve(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = a.len();
    assert_eq!(b.len(), n, "right-hand side length mismatch");
    let mut m: IntMatrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    eliminate(&mut m, n)?;
    if n > 0 && m[n - 1][n - 1].is_zero() {
        return None;
    }

    // Back substitution on the fraction-free upper triangle.
    let mut x: Vec<BigRational> = alloc::vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from_integer(m[i][n].clone());
        for j in (i + 1)..n {
            if !m[i][j].is_zero() {
                acc -= &x[j] * BigRational::from_integer(m[i][j].clone());
            }
        }
        x[i] = acc / BigRational::from_integer(m[i][i].clone());
    }
    Some(x)
}

/// Rank-revealing helper used by tests: true if the matrix has a zero
/// determinant.
pub fn is_singular(matrix: &[Vec<BigInt>]) -> bool {
    determinant(matrix).is_zero()
}
