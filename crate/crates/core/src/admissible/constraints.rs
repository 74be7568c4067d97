use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rows `0..d` of binomial coefficients, `table[n][r] = C(n, r)`.
fn binomials(d: usize) -> Vec<Vec<BigInt>> {
    let mut table: Vec<Vec<BigInt>> = Vec::with_capacity(d + 1);
    for n in 0..=d {
        let mut row = vec![BigInt::one(); n + 1];
        for r in 1..n {
            row[r] = &table[n - 1][r - 1] + &table[n - 1][r];
        }
        table.push(row);
    }
    table
}

/// The linear forms `C_{2j}(a) = Σ_k M[j][k]·a_k`, `j = 0..d`, obtained by
/// expanding `Σ_k a_k (1+y²)^(d−k) Re{(1−iy)^k}` in powers of `y²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSystem {
    degree: usize,
    rows: Vec<Vec<BigInt>>,
}

impl ConstraintSystem {
    /// `M[j][k] = Σ_{i=0}^{min(⌊k/2⌋, j)} (−1)^i C(k, 2i) C(d−k, j−i)`.
    pub fn build(degree: usize) -> Self {
        assert!(degree >= 1, "constraint system needs degree ≥ 1");
        let d = degree;
        let binom = binomials(d);
        let c = |n: usize, r: usize| -> Option<&BigInt> { binom[n].get(r) };
        let rows = (0..d)
            .map(|j| {
                (1..=d)
                    .map(|k| {
                        let mut entry = BigInt::zero();
                        for i in 0..=(k / 2).min(j) {
                            let (Some(a), Some(b)) = (c(k, 2 * i), c(d - k, j - i)) else {
                                continue;
                            };
                            if i % 2 == 0 {
                                entry += a * b;
                            } else {
                                entry -= a * b;
                            }
                        }
                        entry
                    })
                    .collect()
            })
            .collect();
        Self { degree, rows }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Row `j` as coefficients of `(a_1, …, a_d)`.
    pub fn row(&self, j: usize) -> &[BigInt] {
        &self.rows[j]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Entry multiplying `a_k` (1-based `k`) in `C_{2j}`.
    pub fn entry(&self, j: usize, k: usize) -> &BigInt {
        &self.rows[j][k - 1]
    }

    /// Values `C_0(a), C_2(a), …, C_{2(d−1)}(a)` for `a = (a_1, …, a_d)`.
    pub fn evaluate(&self, coeffs: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(coeffs.len(), self.degree, "coefficient count must equal degree");
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(coeffs)
                    .filter(|(m, a)| !m.is_zero() && !a.is_zero())
                    .fold(BigRational::zero(), |acc, (m, a)| {
                        acc + a * BigRational::from_integer(m.clone())
                    })
            })
            .collect()
    }
}
