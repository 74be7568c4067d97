//! Explicit field constants and the exponents they feed.
//!
//! Quantities that can be astronomically large (`X_0`, `C_F`) are carried as
//! natural logarithms. Parameters the theory leaves unspecified (`c_1`, the
//! implied `O`-constants) are inputs, and any output depending on them is
//! flagged as non-rigorous.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::admissible::AdmissiblePolynomial;
use crate::exponent::maximize_a;
use crate::real::Precision;
use crate::{Error, Result};

/// Base field `F` described by its degree, discriminant and whether it sits
/// atop a tower of normal extensions from `ℚ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaseFieldParams {
    pub degree: u32,
    /// `log D_F`.
    pub log_disc: f64,
    pub normal_tower: bool,
}

impl BaseFieldParams {
    pub const RATIONALS: BaseFieldParams = BaseFieldParams {
        degree: 1,
        log_disc: 0.0,
        normal_tower: true,
    };

    pub fn new(degree: u32, log_disc: f64, normal_tower: bool) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameter {
                name: "n_F",
                reason: "degree must be at least 1",
            });
        }
        if !(log_disc >= 0.0) || !log_disc.is_finite() {
            return Err(Error::InvalidParameter {
                name: "log D_F",
                reason: "must be finite and nonnegative",
            });
        }
        if degree == 1 && (log_disc != 0.0 || !normal_tower) {
            return Err(Error::InvalidParameter {
                name: "n_F",
                reason: "F = ℚ has D_F = 1 and is trivially normal",
            });
        }
        Ok(Self {
            degree,
            log_disc,
            normal_tower,
        })
    }

    /// From an integer discriminant `D_F ≥ 1`.
    pub fn with_discriminant(degree: u32, disc: f64, normal_tower: bool) -> Result<Self> {
        if !(disc >= 1.0) {
            return Err(Error::InvalidParameter {
                name: "D_F",
                reason: "discriminant must be at least 1",
            });
        }
        Self::new(degree, libm::log(disc), normal_tower)
    }
}

/// The implied constants in `C_F = e^{O(n_F (log D_F)²)} + e^{O(B_F)}`.
/// Nothing determines them; the defaults of 1 only fix a scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImpliedConstants {
    pub field_log_disc: f64,
    pub siegel: f64,
}

impl Default for ImpliedConstants {
    fn default() -> Self {
        Self {
            field_log_disc: 1.0,
            siegel: 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundConfig {
    pub epsilon: f64,
    pub eta: f64,
    pub c1: f64,
    pub implied: ImpliedConstants,
}

impl Default for BoundConfig {
    fn default() -> Self {
        Self {
            epsilon: 0.01,
            eta: 0.25,
            c1: 0.5,
            implied: ImpliedConstants::default(),
        }
    }
}

impl BoundConfig {
    /// `ε ∈ [0, 1/8)`, `η ∈ (0, 1/2)`, `c_1 > 0`, implied constants `> 0`.
    /// `ε = 0` is accepted to report the limiting exponent.
    pub fn validate(&self) -> Result<()> {
        if !(0.0..0.125).contains(&self.epsilon) {
            return Err(Error::InvalidParameter {
                name: "epsilon",
                reason: "must lie in [0, 1/8)",
            });
        }
        if !(self.eta > 0.0 && self.eta < 0.5) {
            return Err(Error::InvalidParameter {
                name: "eta",
                reason: "must lie in (0, 1/2)",
            });
        }
        if !(self.c1 > 0.0) || !self.c1.is_finite() {
            return Err(Error::InvalidParameter {
                name: "c_1",
                reason: "must be positive",
            });
        }
        if !(self.implied.field_log_disc > 0.0 && self.implied.siegel > 0.0) {
            return Err(Error::InvalidParameter {
                name: "implied constants",
                reason: "must be positive",
            });
        }
        Ok(())
    }
}

/// `N_F = 16` over a normal tower, else `4·n_F!`.
pub fn n_f_constant(base: &BaseFieldParams) -> BigUint {
    if base.normal_tower {
        return BigUint::from(16u32);
    }
    let factorial = (1..=base.degree).fold(BigUint::one(), |acc, k| acc * k);
    factorial * 4u32
}

/// `B_F = min{N_F log D_F, c_1 D_F^(1/n_F)}`.
pub fn b_f(base: &BaseFieldParams, cfg: &BoundConfig) -> f64 {
    let n_f = n_f_constant(base).to_f64().unwrap_or(f64::INFINITY);
    let first = if base.log_disc == 0.0 {
        0.0
    } else {
        n_f * base.log_disc
    };
    let second = cfg.c1 * libm::exp(base.log_disc / f64::from(base.degree));
    first.min(second)
}

/// `log(e^x + e^y)` without overflow.
fn log_add_exp(x: f64, y: f64) -> f64 {
    let (hi, lo) = if x >= y { (x, y) } else { (y, x) };
    hi + libm::log1p(libm::exp(lo - hi))
}

/// `X_0 = exp(10 n_F (log D_F)²) + exp(B_F log(1/η))`, carried as `log X_0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct X0 {
    pub log_value: f64,
    /// `X_0` itself when it fits in an `f64`.
    pub value: Option<f64>,
}

pub fn x0(base: &BaseFieldParams, eta: f64, cfg: &BoundConfig) -> Result<X0> {
    if !(eta > 0.0 && eta < 0.5) {
        return Err(Error::InvalidParameter {
            name: "eta",
            reason: "must lie in (0, 1/2)",
        });
    }
    let first = 10.0 * f64::from(base.degree) * base.log_disc * base.log_disc;
    let second = b_f(base, cfg) * libm::log(1.0 / eta);
    let log_value = log_add_exp(first, second);
    let value = Some(libm::exp(log_value)).filter(|v| v.is_finite());
    Ok(X0 { log_value, value })
}

/// `(1 + ε) / (4A(n−1))`.
pub fn theorem1_exponent(n: u64, a: f64, epsilon: f64) -> f64 {
    assert!(n >= 2 && a > 0.0 && epsilon >= 0.0);
    (1.0 + epsilon) / (4.0 * a * (n - 1) as f64)
}

/// Exponents of the earlier bounds, for comparison at the same `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonExponents {
    pub n: u64,
    /// `1/(4√e)`, the quadratic-nonresidue exponent; only for `n = 2`.
    pub burgess: Option<f64>,
    /// `4A(n, P_1)`; the classical bound has exponent `1/(4A(n,P_1)(n−1))`.
    pub li_four_a: f64,
    /// `4/(n−1)`.
    pub murty_patankar: f64,
}

pub fn comparison_exponents(n: u64, prec: Precision) -> Result<ComparisonExponents> {
    let li = maximize_a(n, &AdmissiblePolynomial::linear(), prec)?;
    Ok(ComparisonExponents {
        n,
        burgess: (n == 2).then(|| 1.0 / (4.0 * libm::sqrt(core::f64::consts::E))),
        li_four_a: li.four_a_f64(),
        murty_patankar: murty_patankar_exponent(n),
    })
}

pub fn murty_patankar_exponent(n: u64) -> f64 {
    assert!(n >= 2);
    4.0 / (n - 1) as f64
}

/// `log` of the extra factor `n^(3P(1)/A)` for unramified primes in
/// non-Galois extensions.
pub fn non_galois_factor(n: u64, p: &AdmissiblePolynomial, a: f64) -> f64 {
    assert!(n >= 2 && a > 0.0);
    let p1 = p.value_at_one().to_f64().unwrap_or(f64::INFINITY);
    3.0 * p1 / a * libm::log(n as f64)
}

/// `log C_F` at the scale fixed by the implied constants. Never rigorous.
pub fn log_c_f_scale(base: &BaseFieldParams, cfg: &BoundConfig) -> f64 {
    let first = cfg.implied.field_log_disc * f64::from(base.degree) * base.log_disc * base.log_disc;
    let second = cfg.implied.siegel * b_f(base, cfg);
    log_add_exp(first, second)
}

/// Notes about stated example exponents that do not match computed values.
/// `four_a` is the computed `4A(n, P)` for the given polynomial degree.
pub fn consistency_notes(n: u64, degree: usize, four_a: f64) -> Vec<&'static str> {
    let mut notes = Vec::new();
    if n == 5 && degree == 100 {
        let denom = four_a * 4.0;
        // A bound D_K^(1/8.7) has been stated for quintic fields with P_100.
        if (denom - 8.7).abs() > 0.1 {
            notes.push(
                "the exponent 1/8.7 claimed for quintic fields with P_100 is inconsistent \
                 with 4A(5,P_100) = 3.021, which gives 1/(4A(n-1)) = 1/12.08; 8.7 matches \
                 P_1 instead (4 x 4A(5,P_1) = 4 x 2.193 = 8.77)",
            );
        }
    }
    notes
}
