//! The exponent quantity
//!
//! ```text
//! a(λ; n, P) = [P(1) − n/(n−1) · e^(−λ) · Σ_k a_k E_{k−1}(λ)] / λ
//! A(n, P)    = sup_{λ>0} a(λ; n, P)
//! ```
//!
//! with `E_{k−1}(t) = Σ_{j<k} t^j / j!`, and its `n → ∞` companion `b(λ; P)`
//! which drops the `n/(n−1)` factor. The least-prime exponent is
//! `(1+ε) / (4A(n−1))`, so larger `A` is better.

use alloc::vec;
use alloc::vec::Vec;

use dashu_float::ops::{CubicRoot, SquareRoot};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::admissible::AdmissiblePolynomial;
use crate::real::{to_f64, Precision, Real};
use crate::{Error, Result};

/// The `n` values tabulated for `P_1` and `P_100`.
pub const TABLE_N_GRID: [u64; 18] = [
    2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 50, 100, 200, 500, 1000, 2000, 5000, 10000,
];

/// Lower end of the `λ` search range.
const LAMBDA_MIN: (i64, i64) = (1, 1_000_000);
/// Upper end of the `λ` search range.
const LAMBDA_MAX: i64 = 1000;
/// Relative width at which golden-section search stops.
const LAMBDA_REL_TOL: f64 = 1e-12;
const GRID_POINTS: usize = 10_000;
/// How far a grid value may exceed the line-search maximum.
const GRID_SLACK: f64 = 1e-10;

/// `E_{k−1}(t) = Σ_{j=0}^{k−1} t^j / j!`.
pub fn partial_exp(k: usize, t: &Real, prec: Precision) -> Real {
    assert!(k >= 1, "partial_exp needs k ≥ 1");
    let mut sum = prec.int(0);
    let mut term = prec.int(1);
    for j in 0..k {
        sum += &term;
        term = term * t / prec.int(j as i64 + 1);
    }
    sum
}

/// `λ ↦ [P(1) − c · e^(−λ) Σ a_k E_{k−1}(λ)] / λ` with the coefficients
/// lifted once to the working precision. `c = n/(n−1)` gives `a`, `c = 1`
/// gives `b`.
#[derive(Debug, Clone)]
struct Objective {
    prec: Precision,
    scale: Real,
    p_at_one: Real,
    /// `Σ_k a_k E_{k−1}(λ) = Σ_j (Σ_{k>j} a_k / j!) λ^j`; these are the
    /// bracketed coefficients, lowest power first.
    series: Vec<Real>,
}

impl Objective {
    fn new(p: &AdmissiblePolynomial, scale: Real, prec: Precision) -> Self {
        let d = p.degree();
        let mut tail = BigRational::zero();
        let mut tails = vec![BigRational::zero(); d];
        for j in (0..d).rev() {
            tail += &p.coeffs()[j];
            tails[j] = tail.clone();
        }
        let mut factorial = BigInt::one();
        let series = tails
            .iter()
            .enumerate()
            .map(|(j, t)| {
                if j > 0 {
                    factorial *= j;
                }
                prec.rational(&(t / BigRational::from_integer(factorial.clone())))
            })
            .collect();
        Self {
            prec,
            scale,
            p_at_one: prec.rational(&p.value_at_one()),
            series,
        }
    }

    fn for_a(n: u64, p: &AdmissiblePolynomial, prec: Precision) -> Self {
        assert!(n >= 2, "a(λ; n, P) needs n ≥ 2");
        let n = n as i64;
        Self::new(p, prec.ratio(n, n - 1), prec)
    }

    fn for_b(p: &AdmissiblePolynomial, prec: Precision) -> Self {
        Self::new(p, prec.int(1), prec)
    }

    /// `Σ_k a_k E_{k−1}(λ)` by Horner's rule on `series`.
    fn weighted_partial_exp(&self, lambda: &Real) -> Real {
        let mut acc = self.prec.int(0);
        for c in self.series.iter().rev() {
            acc = acc * lambda + c;
        }
        acc
    }

    fn eval(&self, lambda: &Real) -> Real {
        let decay = (-lambda).exp();
        let drop = &self.scale * decay * self.weighted_partial_exp(lambda);
        (&self.p_at_one - drop) / lambda
    }
}

/// `a(λ; n, P)`.
pub fn a_of_lambda(n: u64, p: &AdmissiblePolynomial, lambda: &Real, prec: Precision) -> Real {
    Objective::for_a(n, p, prec).eval(lambda)
}

/// `b(λ; P)`; pointwise `b ≥ a` for every `n`.
pub fn b_of_lambda(p: &AdmissiblePolynomial, lambda: &Real, prec: Precision) -> Real {
    Objective::for_b(p, prec).eval(lambda)
}

/// `A(n, P)` together with its maximizer.
#[derive(Debug, Clone)]
pub struct ExponentResult {
    pub n: u64,
    /// Degree of the weight polynomial (`d` in `P_d`).
    pub degree: usize,
    pub a: Real,
    pub lambda_star: Real,
    pub four_a: Real,
    pub precision_bits: usize,
}

impl ExponentResult {
    pub fn a_f64(&self) -> f64 {
        to_f64(&self.a)
    }

    pub fn four_a_f64(&self) -> f64 {
        to_f64(&self.four_a)
    }

    pub fn lambda_f64(&self) -> f64 {
        to_f64(&self.lambda_star)
    }
}

/// Supremum over `λ > 0` of an objective, with its maximizer.
#[derive(Debug, Clone)]
pub struct Maximum {
    pub value: Real,
    pub argmax: Real,
}

/// `left_limit`, when given, is `lim_{λ→0⁺}` of the objective; a maximizer
/// at the left edge then means the supremum is that limit rather than an
/// error.
fn maximize(f: &Objective, left_limit: Option<Real>) -> Result<Maximum> {
    let prec = f.prec;
    let lo = prec.ratio(LAMBDA_MIN.0, LAMBDA_MIN.1);
    let lambda_cap = prec.int(LAMBDA_MAX);
    let two = prec.int(2);

    // Double the upper end until a(2·hi) < a(hi).
    let mut hi = prec.int(1);
    let mut f_hi = f.eval(&hi);
    loop {
        let next = &hi * &two;
        if next > lambda_cap {
            return Err(Error::PeakAtBoundary {
                lambda: to_f64(&hi),
            });
        }
        let f_next = f.eval(&next);
        hi = next;
        if f_next < f_hi {
            break;
        }
        f_hi = f_next;
    }

    let golden = (prec.int(5).sqrt() - prec.int(1)) / &two; // 1/φ
    let tol = prec.from_f64(LAMBDA_REL_TOL);
    let (mut left, mut right) = (lo.clone(), hi.clone());
    let mut x1 = &right - &golden * (&right - &left);
    let mut x2 = &left + &golden * (&right - &left);
    let mut f1 = f.eval(&x1);
    let mut f2 = f.eval(&x2);
    while &right - &left > &tol * (&left + &right) / &two {
        if f1 < f2 {
            left = x1;
            x1 = x2;
            f1 = f2;
            x2 = &left + &golden * (&right - &left);
            f2 = f.eval(&x2);
        } else {
            right = x2;
            x2 = x1;
            f2 = f1;
            x1 = &right - &golden * (&right - &left);
            f1 = f.eval(&x1);
        }
    }
    let argmax = (&left + &right) / &two;
    let value = f.eval(&argmax);

    let edge = &tol * prec.int(1000);
    let at_left = (&argmax - &lo) <= &edge * &lo;
    let limit_wins = left_limit.as_ref().is_some_and(|l| at_left || *l > value);
    if let (true, Some(limit)) = (limit_wins, left_limit) {
        let grid = grid_maximum(f);
        if grid > &limit + prec.from_f64(GRID_SLACK) {
            return Err(Error::GridDisagreement {
                grid: to_f64(&grid),
                line: to_f64(&limit),
            });
        }
        return Ok(Maximum {
            value: limit,
            argmax: prec.int(0),
        });
    }
    if at_left || (&hi - &argmax) <= &edge * &hi {
        return Err(Error::PeakAtBoundary {
            lambda: to_f64(&argmax),
        });
    }

    let grid = grid_maximum(f);
    let excess = &grid - &value;
    if excess > prec.from_f64(GRID_SLACK) {
        return Err(Error::GridDisagreement {
            grid: to_f64(&grid),
            line: to_f64(&value),
        });
    }
    Ok(Maximum { value, argmax })
}

/// Largest value over `GRID_POINTS` log-spaced points in
/// `[LAMBDA_MIN, LAMBDA_MAX]`.
fn grid_maximum(f: &Objective) -> Real {
    let prec = f.prec;
    let lo = prec.ratio(LAMBDA_MIN.0, LAMBDA_MIN.1);
    let span = prec.int(LAMBDA_MAX) / &lo;
    let step = (span.ln() / prec.int(GRID_POINTS as i64 - 1)).exp();
    let mut lambda = lo;
    let mut best = f.eval(&lambda);
    for _ in 1..GRID_POINTS {
        lambda = lambda * &step;
        let v = f.eval(&lambda);
        if v > best {
            best = v;
        }
    }
    best
}

/// `A(n, P) = sup_{λ>0} a(λ; n, P)` and the maximizer `λ_{n,P}`.
///
/// The search doubles the right end of `[10⁻⁶, 1]` until `a` decreases,
/// runs golden-section search to a relative width of `10⁻¹²`, and then
/// cross-checks against a `10⁴`-point log grid over `[10⁻⁶, 10³]`. A
/// maximizer at the search boundary, or a grid point above the line-search
/// maximum, is an error rather than a silent answer.
pub fn maximize_a(n: u64, p: &AdmissiblePolynomial, prec: Precision) -> Result<ExponentResult> {
    if n < 2 {
        return Err(Error::InvalidParameter {
            name: "n",
            reason: "relative degree must be at least 2",
        });
    }
    let m = maximize(&Objective::for_a(n, p, prec), None)?;
    let four_a = &m.value * prec.int(4);
    Ok(ExponentResult {
        n,
        degree: p.degree(),
        a: m.value,
        lambda_star: m.argmax,
        four_a,
        precision_bits: prec.get(),
    })
}

/// `sup_{λ>0} b(λ; P)`, the `n → ∞` limit of `A(n, P)`.
///
/// Unlike `a`, `b` tends to `a_1 = 1` as `λ → 0⁺`; when nothing in the
/// interior beats that limit (as for `P = x`) the supremum is reported with
/// `argmax = 0`.
pub fn maximize_b(p: &AdmissiblePolynomial, prec: Precision) -> Result<Maximum> {
    maximize(&Objective::for_b(p, prec), Some(prec.int(1)))
}

/// The closed-form lower bound for `P(x) = x + x²`.
#[derive(Debug, Clone)]
pub struct QuadraticBound {
    /// `1 − 2 n^(−2/3)`.
    pub bound: Real,
    /// `∛(6/n)`, the `λ` used to derive it.
    pub lambda: Real,
    /// `a(∛(6/n); n, x + x²)`, which the bound underestimates.
    pub chain_value: Real,
}

pub fn quadratic_lower_bound(n: u64, prec: Precision) -> QuadraticBound {
    assert!(n >= 2, "quadratic lower bound needs n ≥ 2");
    let n_real = prec.int(n as i64);
    let cbrt_n = n_real.cbrt();
    let bound = prec.int(1) - prec.int(2) / (&cbrt_n * &cbrt_n);
    let lambda = (prec.int(6) / &n_real).cbrt();
    let chain_value = a_of_lambda(n, &AdmissiblePolynomial::quadratic(), &lambda, prec);
    QuadraticBound {
        bound,
        lambda,
        chain_value,
    }
}

/// `1 − √(2/(n−1))`, the classical lower bound for `A(n, x)`.
pub fn li_lower_bound(n: u64, prec: Precision) -> Real {
    assert!(n >= 2, "Li lower bound needs n ≥ 2");
    prec.int(1) - (prec.int(2) / prec.int(n as i64 - 1)).sqrt()
}
