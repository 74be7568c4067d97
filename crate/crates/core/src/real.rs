//! Arbitrary-precision binary floating point used by the exponent module.
//!
//! Binary operations between [`Real`] values take the larger of the two
//! operand precisions, so every constant must be created through a
//! [`Precision`] to keep the whole computation at the working precision.

use alloc::string::{String, ToString};

use dashu_float::ops::SquareRoot;
use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::{IBig, Sign, UBig};
use num_bigint::BigInt;
use num_rational::BigRational;

/// High-precision real: binary significand, round-half-even.
pub type Real = FBig<HalfEven, 2>;

/// Working precision in bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Precision(usize);

impl Default for Precision {
    fn default() -> Self {
        Self::DEFAULT
    }
}

impl Precision {
    pub const DEFAULT: Precision = Precision(256);

    pub fn bits(bits: usize) -> Self {
        assert!(bits >= 53, "working precision below f64 is not supported");
        Self(bits)
    }

    pub fn get(self) -> usize {
        self.0
    }

    fn lift(self, v: Real) -> Real {
        v.with_precision(self.0).value()
    }

    pub fn int(self, v: i64) -> Real {
        self.lift(Real::from(v))
    }

    pub fn big_int(self, v: &BigInt) -> Real {
        self.lift(Real::from(to_ibig(v)))
    }

    /// `n / d` rounded once to the working precision.
    pub fn ratio(self, n: i64, d: i64) -> Real {
        self.int(n) / self.int(d)
    }

    pub fn rational(self, v: &BigRational) -> Real {
        self.big_int(v.numer()) / self.big_int(v.denom())
    }

    /// Exact conversion of a finite `f64`, then rounded to the working
    /// precision.
    pub fn from_f64(self, v: f64) -> Real {
        self.lift(Real::try_from(v).expect("finite f64"))
    }
}

pub fn to_ibig(v: &BigInt) -> IBig {
    let (sign, bytes) = v.to_bytes_le();
    let mag = UBig::from_le_bytes(&bytes);
    let sign = match sign {
        num_bigint::Sign::Minus => Sign::Negative,
        _ => Sign::Positive,
    };
    IBig::from_parts(sign, mag)
}

pub fn to_f64(v: &Real) -> f64 {
    v.to_f64().value()
}

pub fn sqrt(v: &Real) -> Real {
    v.sqrt()
}

/// Decimal digits of `v` rounded half-to-even to `digits` significant
/// digits: sign, exactly `digits` digit characters, and the power of ten of
/// the last digit.
fn decimal_digits(v: &Real, digits: usize) -> (bool, String, isize) {
    let dec = v.clone().with_base_and_precision::<10>(digits).value();
    let repr = dec.repr();
    let negative = repr.significand().sign() == Sign::Negative;
    let mut s = repr.significand().to_string().trim_start_matches('-').to_string();
    let mut exp = repr.exponent();
    if repr.significand().is_zero() {
        s = String::from("0");
        exp = 0;
    }
    while s.len() < digits {
        s.push('0');
        exp -= 1;
    }
    (negative, s, exp)
}

fn place_point(negative: bool, s: &str, exp: isize) -> String {
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    let int_len = s.len() as isize + exp;
    if exp >= 0 {
        out.push_str(s);
        out.extend(core::iter::repeat_n('0', exp as usize));
    } else if int_len > 0 {
        out.push_str(&s[..int_len as usize]);
        out.push('.');
        out.push_str(&s[int_len as usize..]);
    } else {
        out.push_str("0.");
        out.extend(core::iter::repeat_n('0', (-int_len) as usize));
        out.push_str(s);
    }
    out
}

/// Decimal rendering rounded half-to-even to `digits` significant digits,
/// trailing zeros kept (`15.50`, not `15.5`).
pub fn to_sig_digits(v: &Real, digits: usize) -> String {
    let (neg, s, exp) = decimal_digits(v, digits);
    place_point(neg, &s, exp)
}

/// Decimal rendering rounded half-to-even to `places` digits after the point.
pub fn to_fixed_decimals(v: &Real, places: usize) -> String {
    if v.repr().is_zero() {
        return place_point(false, &"0".repeat(places + 1), -(places as isize));
    }
    // Position of the leading digit, from a generous first conversion.
    let (_, s, exp) = decimal_digits(v, 40);
    let lead = s.len() as isize - 1 + exp;
    let sig = lead + 1 + places as isize;
    if sig <= 0 {
        let neg = v.repr().significand().sign() == Sign::Negative;
        return place_point(neg, &"0".repeat(places + 1), -(places as isize));
    }
    let (neg, mut s, mut exp) = decimal_digits(v, sig as usize);
    // A carry into a new leading digit leaves one decimal short.
    while exp > -(places as isize) {
        s.push('0');
        exp -= 1;
    }
    place_point(neg, &s, exp)
}
