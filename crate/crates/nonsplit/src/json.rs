//! Serialized forms. Rationals are `{"num": "...", "den": "..."}` decimal
//! strings and high-precision reals are decimal strings; neither ever goes
//! through a float.

use nonsplit_core::admissible::{
    AdmissibilityCertificate, AdmissiblePolynomial, CertificateMethod, Verdict,
};
use nonsplit_core::exponent::ExponentResult;
use nonsplit_core::numfield::SplitReport;
use nonsplit_core::real::to_sig_digits;
use nonsplit_core::ExactRational;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// Significant digits written for `A` and `4A`.
pub const VALUE_DIGITS: usize = 30;
/// Significant digits written for `λ`; the line search stops at relative
/// width `10⁻¹²`.
pub const LAMBDA_DIGITS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&ExactRational> for RationalJson {
    fn from(q: &ExactRational) -> Self {
        Self {
            num: q.numer().to_string(),
            den: q.denom().to_string(),
        }
    }
}

impl TryFrom<&RationalJson> for ExactRational {
    type Error = String;

    fn try_from(r: &RationalJson) -> Result<Self, String> {
        let num: BigInt = r.num.parse().map_err(|_| format!("bad numerator {:?}", r.num))?;
        let den: BigInt = r.den.parse().map_err(|_| format!("bad denominator {:?}", r.den))?;
        if den == BigInt::from(0) {
            return Err("zero denominator".into());
        }
        Ok(ExactRational::new(num, den))
    }
}

/// `coeffs[0]` is `a_1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub degree: usize,
    pub coeffs: Vec<RationalJson>,
}

impl From<&AdmissiblePolynomial> for PolynomialJson {
    fn from(p: &AdmissiblePolynomial) -> Self {
        Self {
            degree: p.degree(),
            coeffs: p.coeffs().iter().map(RationalJson::from).collect(),
        }
    }
}

impl TryFrom<&PolynomialJson> for AdmissiblePolynomial {
    type Error = String;

    fn try_from(p: &PolynomialJson) -> Result<Self, String> {
        if p.coeffs.len() != p.degree {
            return Err(format!(
                "degree {} but {} coefficients",
                p.degree,
                p.coeffs.len()
            ));
        }
        let coeffs = p
            .coeffs
            .iter()
            .map(ExactRational::try_from)
            .collect::<Result<Vec<_>, _>>()?;
        AdmissiblePolynomial::new(coeffs).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub verdict: String,
    pub method: String,
    /// `u₀ = y₀²` with `Q(u₀) < 0`.
    pub witness: Option<RationalJson>,
}

impl From<&AdmissibilityCertificate> for CertificateJson {
    fn from(c: &AdmissibilityCertificate) -> Self {
        Self {
            verdict: verdict_str(c.verdict).into(),
            method: c.method.as_str().into(),
            witness: c.witness.as_ref().map(RationalJson::from),
        }
    }
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Admissible => "admissible",
        Verdict::NotAdmissible => "not-admissible",
    }
}

pub fn method_from_str(s: &str) -> Option<CertificateMethod> {
    [
        CertificateMethod::AllConstraintsNonnegative,
        CertificateMethod::SturmNoPositiveRoot,
        CertificateMethod::SturmRootSignAnalysis,
    ]
    .into_iter()
    .find(|m| m.as_str() == s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentJson {
    pub n: u64,
    pub degree: usize,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "four_A")]
    pub four_a: String,
    pub lambda: String,
    pub precision_bits: usize,
}

impl From<&ExponentResult> for ExponentJson {
    fn from(r: &ExponentResult) -> Self {
        Self {
            n: r.n,
            degree: r.degree,
            a: to_sig_digits(&r.a, VALUE_DIGITS),
            four_a: to_sig_digits(&r.four_a, VALUE_DIGITS),
            lambda: to_sig_digits(&r.lambda_star, LAMBDA_DIGITS),
            precision_bits: r.precision_bits,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundComparisonJson {
    pub weight_degree: usize,
    pub epsilon: f64,
    pub four_a: f64,
    pub exponent: f64,
    /// `exponent · ln|disc f|`.
    pub log_bound: f64,
    pub within_bound: bool,
    /// The comparison ignores implied constants.
    pub rigorous: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplitReportJson {
    pub polynomial: String,
    pub degree: usize,
    pub disc_f: String,
    pub variant: String,
    pub least_prime: Option<u64>,
    pub prime_cap: u64,
    pub flags: Vec<String>,
    pub bound: Option<BoundComparisonJson>,
}

impl From<&SplitReport> for SplitReportJson {
    fn from(r: &SplitReport) -> Self {
        Self {
            polynomial: r.polynomial.to_string(),
            degree: r.polynomial.degree(),
            disc_f: r.disc.to_string(),
            variant: r.variant.as_str().into(),
            least_prime: Some(r.least_prime),
            prime_cap: r.prime_cap,
            flags: r.flags.clone(),
            bound: r.bound.as_ref().map(|b| BoundComparisonJson {
                weight_degree: b.weight_degree,
                epsilon: b.epsilon,
                four_a: b.four_a,
                exponent: b.exponent,
                log_bound: b.log_bound,
                within_bound: b.within_bound,
                rigorous: false,
            }),
        }
    }
}
