use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{AdmissiblePolynomial, ConstraintSystem};
use crate::poly::{IntPoly, SturmChain};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Admissible,
    NotAdmissible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertificateMethod {
    /// Every coefficient of `Q(u)` is nonnegative.
    AllConstraintsNonnegative,
    /// `Q` has no root in `(0, ∞)` and is positive at `0`.
    SturmNoPositiveRoot,
    /// Roots were isolated and `Q` sampled between them.
    SturmRootSignAnalysis,
}

impl CertificateMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateMethod::AllConstraintsNonnegative => "all-constraints-nonnegative",
            CertificateMethod::SturmNoPositiveRoot => "sturm-no-positive-root",
            CertificateMethod::SturmRootSignAnalysis => "sturm-root-sign-analysis",
        }
    }
}

impl fmt::Display for CertificateMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of checking `Q(u) = Σ_j C_{2j}(a) u^j ≥ 0` on `u ≥ 0`, where
/// `u = y²`.
///
/// A `NotAdmissible` verdict always carries a witness `u₀ ≥ 0` at which `Q`
/// is exactly negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityCertificate {
    pub verdict: Verdict,
    pub method: CertificateMethod,
    pub witness: Option<BigRational>,
}

impl AdmissibilityCertificate {
    pub fn is_admissible(&self) -> bool {
        self.verdict == Verdict::Admissible
    }
}

/// Coefficients of `Q(u)`, lowest degree first.
pub fn constraint_polynomial(p: &AdmissiblePolynomial) -> Vec<BigRational> {
    ConstraintSystem::build(p.degree()).evaluate(p.coeffs())
}

/// Exact `Q(u)` for the given constraint coefficients.
pub fn evaluate_constraint_polynomial(q: &[BigRational], u: &BigRational) -> BigRational {
    q.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * u + c)
}

pub fn verify_admissible(p: &AdmissiblePolynomial) -> Result<AdmissibilityCertificate> {
    certify_constraint_polynomial(&constraint_polynomial(p))
}

/// Certifies `Q(u) ≥ 0` for all `u ≥ 0`.
pub fn certify_constraint_polynomial(q: &[BigRational]) -> Result<AdmissibilityCertificate> {
    if q.iter().all(Zero::is_zero) {
        return Err(Error::DegenerateConstraint);
    }
    if q.iter().all(|c| !c.is_negative()) {
        return Ok(AdmissibilityCertificate {
            verdict: Verdict::Admissible,
            method: CertificateMethod::AllConstraintsNonnegative,
            witness: None,
        });
    }

    let int_q = IntPoly::from_rationals(q);
    let sturm = SturmChain::new(&int_q.squarefree_part());
    let roots = sturm.isolate_positive_roots();

    // One sample in every component of [0, ∞) minus the roots: 0 itself,
    // the left end of the first isolating interval, and every right end
    // (each lies strictly between consecutive roots, the last one beyond
    // the largest root).
    let mut samples: Vec<BigRational> = Vec::with_capacity(roots.len() + 2);
    samples.push(BigRational::zero());
    if let Some((l, r)) = roots.first() {
        if l.is_positive() {
            samples.push(l.clone());
        } else if int_q.sign_at(l) == Ordering::Equal {
            samples.push(sturm.point_left_of_root(l, r));
        }
    }
    samples.extend(roots.iter().map(|(_, r)| r.clone()));
    if roots.is_empty() {
        samples.push(int_q.root_bound());
    }

    let method = if roots.is_empty() {
        CertificateMethod::SturmNoPositiveRoot
    } else {
        CertificateMethod::SturmRootSignAnalysis
    };
    let witness = samples
        .into_iter()
        .find(|u| int_q.sign_at(u) == Ordering::Less);
    if let Some(u) = &witness {
        debug_assert!(evaluate_constraint_polynomial(q, u).is_negative());
    }
    Ok(AdmissibilityCertificate {
        verdict: if witness.is_some() {
            Verdict::NotAdmissible
        } else {
            Verdict::Admissible
        },
        method,
        witness,
    })
}
