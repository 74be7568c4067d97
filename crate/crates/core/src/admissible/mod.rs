//! Admissible weight polynomials `P(x) = Σ_{k=1}^d a_k x^k`.
//!
//! By Heath-Brown's boundary criterion, `P` (with nonnegative coefficients,
//! `P(0) = 0`, `P'(0) = 1`) is admissible as soon as
//! `Re P(1/(1+iy)) ≥ 0` for all `y ≥ 0`. Clearing the denominator
//! `(1+y²)^d` turns this into nonnegativity of an even polynomial in `y`
//! whose coefficients `C_{2j}(a)` are linear in `a`; see
//! [`ConstraintSystem`].
//!
//! The extremal polynomial `P_d` maximizes `P(1)` under those constraints.
//! It is computed twice, by a square solve of `C_{2j} = 0` and by an exact
//! simplex, and the two answers must agree exactly.

mod certify;
mod constraints;
mod simplex;

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use certify::{
    certify_constraint_polynomial, constraint_polynomial, evaluate_constraint_polynomial,
    verify_admissible, AdmissibilityCertificate, CertificateMethod, Verdict,
};
pub use constraints::ConstraintSystem;

use crate::{linalg, Error, ExactRational, Result};

/// Largest degree accepted by [`generate_extremal`].
pub const DEFAULT_DEGREE_CAP: usize = 200;

/// Coefficients `(a_1, …, a_d)` with `a_1 = 1` and every `a_k ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdmissiblePolynomial {
    coeffs: Vec<ExactRational>,
}

impl AdmissiblePolynomial {
    pub fn new(coeffs: Vec<ExactRational>) -> Result<Self> {
        match coeffs.first() {
            None => return Err(Error::InvalidPolynomial("no coefficients")),
            Some(a1) if !a1.is_one() => {
                return Err(Error::InvalidPolynomial("a_1 must equal 1"));
            }
            _ => {}
        }
        if coeffs.iter().any(Signed::is_negative) {
            return Err(Error::InvalidPolynomial("coefficients must be nonnegative"));
        }
        Ok(Self { coeffs })
    }

    /// `P(x) = x`.
    pub fn linear() -> Self {
        Self {
            coeffs: vec![BigRational::one()],
        }
    }

    /// `P(x) = x + x²`, the polynomial behind the closed-form lower bound.
    pub fn quadratic() -> Self {
        Self {
            coeffs: vec![BigRational::one(), BigRational::one()],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `(a_1, …, a_d)`.
    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// `P(1) = Σ a_k`.
    pub fn value_at_one(&self) -> ExactRational {
        self.coeffs.iter().sum()
    }

    /// `P(x)` at a rational point.
    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, a| (acc + a) * x)
    }
}

/// A polynomial together with the certificate that it passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedPolynomial {
    pub polynomial: AdmissiblePolynomial,
    pub certificate: AdmissibilityCertificate,
}

/// Optimal vertex of the `P(1)` linear program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    /// `(a_2, …, a_d)`.
    pub values: Vec<ExactRational>,
    /// `P(1) = 1 + Σ a_k`.
    pub objective: ExactRational,
    pub pivots: usize,
}

/// Solves `C_{2j}(1, a_2, …, a_d) = 0` for `j = 1..d` and returns
/// `(a_2, …, a_d)`.
pub fn solve_square_system(degree: usize) -> Result<Vec<ExactRational>> {
    if degree < 2 {
        return Err(Error::DegreeOutOfRange {
            degree,
            cap: DEFAULT_DEGREE_CAP,
        });
    }
    let system = ConstraintSystem::build(degree);
    solve_square_with(&system)
}

fn solve_square_with(system: &ConstraintSystem) -> Result<Vec<ExactRational>> {
    let degree = system.degree();
    let (a, b): (Vec<Vec<BigInt>>, Vec<BigInt>) = system.rows()[1..]
        .iter()
        .map(|row| (row[1..].to_vec(), -&row[0]))
        .unzip();
    linalg::solve(&a, &b).ok_or(Error::SingularSystem { degree })
}

/// Maximizes `P(1)` subject to `C_{2j}(a) ≥ 0` (`j = 1..d`) and `a_k ≥ 0`
/// (`k = 2..=d`) by exact simplex with Bland's rule.
pub fn solve_lp(degree: usize) -> Result<LpSolution> {
    if degree < 2 {
        return Err(Error::DegreeOutOfRange {
            degree,
            cap: DEFAULT_DEGREE_CAP,
        });
    }
    solve_lp_with(&ConstraintSystem::build(degree))
}

fn solve_lp_with(system: &ConstraintSystem) -> Result<LpSolution> {
    let degree = system.degree();
    // C_{2j} ≥ 0  ⇔  −Σ_{k≥2} M[j][k] a_k ≤ M[j][1], and M[j][1] = C(d−1, j) > 0.
    let (a, b): (Vec<Vec<BigInt>>, Vec<BigInt>) = system.rows()[1..]
        .iter()
        .map(|row| (row[1..].iter().map(|v| -v).collect(), row[0].clone()))
        .unzip();
    let opt = simplex::maximize_sum(&a, &b).map_err(|_| Error::UnboundedLp { degree })?;
    Ok(LpSolution {
        objective: opt.objective + BigRational::one(),
        values: opt.values,
        pivots: opt.pivots,
    })
}

/// Which solver(s) [`generate_extremal_with`] runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolveMethod {
    Square,
    Lp,
    /// Run both and require exact agreement.
    #[default]
    Both,
}

/// The extremal admissible polynomial `P_d`, cross-checked by both solvers.
pub fn generate_extremal(degree: usize) -> Result<CertifiedPolynomial> {
    generate_extremal_with(degree, SolveMethod::Both, DEFAULT_DEGREE_CAP)
}

pub fn generate_extremal_with(
    degree: usize,
    method: SolveMethod,
    cap: usize,
) -> Result<CertifiedPolynomial> {
    if degree == 0 || degree > cap {
        return Err(Error::DegreeOutOfRange { degree, cap });
    }
    let tail = if degree == 1 {
        Vec::new()
    } else {
        let system = ConstraintSystem::build(degree);
        match method {
            SolveMethod::Square => solve_square_with(&system)?,
            SolveMethod::Lp => solve_lp_with(&system)?.values,
            SolveMethod::Both => {
                let square = solve_square_with(&system)?;
                let lp = solve_lp_with(&system)?;
                if square != lp.values {
                    return Err(Error::SolverMismatch { degree });
                }
                square
            }
        }
    };
    if let Some(pos) = tail.iter().position(Signed::is_negative) {
        return Err(Error::NegativeCoefficient {
            degree,
            index: pos + 2,
        });
    }
    let mut coeffs = Vec::with_capacity(degree);
    coeffs.push(BigRational::one());
    coeffs.extend(tail);
    let polynomial = AdmissiblePolynomial::new(coeffs)?;
    let certificate = verify_admissible(&polynomial)?;
    if !certificate.is_admissible() {
        return Err(Error::NotCertified { degree });
    }
    Ok(CertifiedPolynomial {
        polynomial,
        certificate,
    })
}
