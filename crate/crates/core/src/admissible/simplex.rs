//! Integer-preserving tableau simplex for `max 1ᵀx` subject to
//! `A x ≤ b`, `x ≥ 0`, with `b ≥ 0` so the slack basis is feasible.
//!
//! Entries are kept as integers scaled by the determinant of the current
//! basis (Edmonds–Bareiss pivoting): a pivot on `(r, c)` updates every other
//! row by `(p·t[i][j] − t[i][c]·t[r][j]) / D` with `D` the previous pivot,
//! and the division is exact. Entering and leaving variables follow Bland's
//! rule.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Optimum {
    pub values: Vec<BigRational>,
    pub objective: BigRational,
    pub pivots: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Unbounded;

/// `a` holds `m` rows of `n` structural coefficients.
pub(crate) fn maximize_sum(a: &[Vec<BigInt>], b: &[BigInt]) -> Result<Optimum, Unbounded> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    assert!(b.iter().all(|v| !v.is_negative()), "origin must be feasible");
    let width = n + m + 1;
    let rhs = n + m;

    // Constraint rows [A | I | b]; objective row [−1 … | 0 … | 0].
    let mut rows: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (coeffs, bi))| {
            let mut row = vec![BigInt::zero(); width];
            row[..n].clone_from_slice(coeffs);
            row[n + i] = BigInt::one();
            row[rhs] = bi.clone();
            row
        })
        .collect();
    let mut obj = vec![BigInt::zero(); width];
    for v in obj.iter_mut().take(n) {
        *v = -BigInt::one();
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    let mut det = BigInt::one();
    let mut pivots = 0;

    loop {
        let Some(enter) = (0..rhs).find(|&j| obj[j].is_negative()) else {
            break;
        };

        // Ratio test rhs_i / t[i][enter] over positive entries; ties go to
        // the smallest basic index.
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !rows[i][enter].is_positive() {
                continue;
            }
            leave = Some(match leave {
                None => i,
                Some(best) => {
                    let lhs = &rows[i][rhs] * &rows[best][enter];
                    let rhs_v = &rows[best][rhs] * &rows[i][enter];
                    match lhs.cmp(&rhs_v) {
                        Ordering::Less => i,
                        Ordering::Equal if basis[i] < basis[best] => i,
                        _ => best,
                    }
                }
            });
        }
        let Some(r) = leave else {
            return Err(Unbounded);
        };

        let pivot_row = rows[r].clone();
        let p = pivot_row[enter].clone();
        let update = |row: &mut Vec<BigInt>| {
            let factor = row[enter].clone();
            for (j, v) in row.iter_mut().enumerate() {
                let t = &p * &*v - &factor * &pivot_row[j];
                let (q, rem) = t.div_rem(&det);
                debug_assert!(rem.is_zero(), "integer pivot division was not exact");
                *v = q;
            }
        };
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r {
                update(row);
            }
        }
        update(&mut obj);
        det = p;
        basis[r] = enter;
        pivots += 1;
    }

    let denom = det;
    let mut values = vec![BigRational::zero(); n];
    for (i, &var) in basis.iter().enumerate() {
        if var < n {
            values[var] = BigRational::new(rows[i][rhs].clone(), denom.clone());
        }
    }
    let objective = BigRational::new(obj[rhs].clone(), denom);
    Ok(Optimum {
        values,
        objective,
        pivots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_lp() {
        // max x + y s.t. x + 2y ≤ 4, 3x + y ≤ 6 → (8/5, 6/5), value 14/5
        let a = vec![ints(&[1, 2]), ints(&[3, 1])];
        let b = ints(&[4, 6]);
        let opt = maximize_sum(&a, &b).unwrap();
        assert_eq!(opt.values, vec![q(8, 5), q(6, 5)]);
        assert_eq!(opt.objective, q(14, 5));
    }

    #[test]
    fn unbounded_is_reported() {
        // x − y ≤ 1 leaves y free to grow.
        let a = vec![ints(&[1, -1])];
        let b = ints(&[1]);
        assert_eq!(maximize_sum(&a, &b), Err(Unbounded));
    }

    #[test]
    fn degenerate_vertex_terminates() {
        // Several constraints through the origin; Bland's rule must not cycle.
        let a = vec![ints(&[1, -1, 0]), ints(&[-1, 1, 0]), ints(&[0, 1, -1]), ints(&[1, 1, 1])];
        let b = ints(&[0, 0, 0, 3]);
        let opt = maximize_sum(&a, &b).unwrap();
        assert_eq!(opt.objective, q(3, 1));
    }

    // Enumerates all vertices of a 2-D polytope as an independent oracle.
    fn brute_force_2d(a: &[Vec<BigInt>], b: &[BigInt]) -> BigRational {
        let mut lines: Vec<(BigRational, BigRational, BigRational)> = a
            .iter()
            .zip(b)
            .map(|(r, bi)| {
                (
                    BigRational::from_integer(r[0].clone()),
                    BigRational::from_integer(r[1].clone()),
                    BigRational::from_integer(bi.clone()),
                )
            })
            .collect();
        lines.push((q(1, 1), q(0, 1), q(0, 1)));
        lines.push((q(0, 1), q(1, 1), q(0, 1)));
        let mut best: Option<BigRational> = None;
        for i in 0..lines.len() {
            for j in (i + 1)..lines.len() {
                let (a1, b1, c1) = &lines[i];
                let (a2, b2, c2) = &lines[j];
                let det = a1 * b2 - a2 * b1;
                if det.is_zero() {
                    continue;
                }
                let x = (c1 * b2 - c2 * b1) / &det;
                let y = (a1 * c2 - a2 * c1) / &det;
                if x.is_negative() || y.is_negative() {
                    continue;
                }
                let feasible = a.iter().zip(b).all(|(r, bi)| {
                    BigRational::from_integer(r[0].clone()) * &x
                        + BigRational::from_integer(r[1].clone()) * &y
                        <= BigRational::from_integer(bi.clone())
                });
                if feasible {
                    let v = &x + &y;
                    if best.as_ref().is_none_or(|b| &v > b) {
                        best = Some(v);
                    }
                }
            }
        }
        best.unwrap()
    }

    proptest::proptest! {
        #[test]
        fn matches_vertex_enumeration(
            coeffs in proptest::collection::vec(1i64..9, 8),
            rhs in proptest::collection::vec(0i64..20, 4),
        ) {
            // Positive coefficients keep the region bounded.
            let a: Vec<Vec<BigInt>> = coeffs.chunks(2).map(|c| ints(c)).collect();
            let b = ints(&rhs);
            let opt = maximize_sum(&a, &b).unwrap();
            proptest::prop_assert_eq!(opt.objective, brute_force_2d(&a, &b));
        }
    }
}
