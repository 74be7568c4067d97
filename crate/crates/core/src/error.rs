use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degree {degree} is outside the supported range 1..={cap}")]
    DegreeOutOfRange { degree: usize, cap: usize },

    #[error("constraint system for degree {degree} is singular")]
    SingularSystem { degree: usize },

    #[error("linear program for degree {degree} is unbounded")]
    UnboundedLp { degree: usize },

    #[error("square-system and simplex solutions disagree at degree {degree}")]
    SolverMismatch { degree: usize },

    #[error("extremal candidate for degree {degree} has a negative coefficient a_{index}")]
    NegativeCoefficient { degree: usize, index: usize },

    #[error("extremal candidate for degree {degree} failed admissibility certification")]
    NotCertified { degree: usize },

    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(&'static str),

    #[error("constraint polynomial is identically zero")]
    DegenerateConstraint,

    #[error("maximizer of a(λ) reached the search boundary at λ ≈ {lambda:e}")]
    PeakAtBoundary { lambda: f64 },

    #[error("grid scan found a(λ) = {grid:e} above the line-search maximum {line:e}")]
    GridDisagreement { grid: f64, line: f64 },

    #[error("parameter {name} out of range: {reason}")]
    InvalidParameter {
        name: &'static str,
        reason: &'static str,
    },

    #[error("polynomial discriminant is zero (input is not squarefree)")]
    ZeroDiscriminant,

    #[error("no qualifying prime up to {cap}")]
    NotFound { cap: u64 },
}

impl Error {
    /// Internal consistency failures: the computation contradicted itself
    /// rather than receiving bad input.
    pub fn is_consistency_failure(&self) -> bool {
        matches!(
            self,
            Error::SolverMismatch { .. }
                | Error::PeakAtBoundary { .. }
                | Error::GridDisagreement { .. }
                | Error::UnboundedLp { .. }
                | Error::SingularSystem { .. }
                | Error::NegativeCoefficient { .. }
                | Error::NotCertified { .. }
        )
    }
}
