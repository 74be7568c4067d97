//! Sparse polynomial expressions such as `x^3 - x - 1` or `2*x^2 + 3x - 7`.
//!
//! Only integer coefficients and the single variable `x` are accepted. Like
//! powers are summed, so `x^2 + x^2` is `2x^2`.

use std::collections::BTreeMap;
use std::fmt;

use nonsplit_core::numfield::IntPolynomial;
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 0-based character offset into the input.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (at column {})", self.message, self.offset + 1)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

/// Whitespace separates tokens but may not split a number.
impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            chars: src.char_indices().collect(),
            pos: 0,
            src,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            offset: self.offset(),
            message: message.into(),
        }
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let mut s = String::new();
        while let Some(&(_, c)) = self.chars.get(self.pos).filter(|(_, c)| c.is_ascii_digit()) {
            s.push(c);
            self.pos += 1;
        }
        (!s.is_empty()).then_some(s)
    }
}

/// Coefficients lowest degree first, with trailing zeros removed.
pub fn parse_coefficients(src: &str) -> Result<Vec<BigInt>, ParseError> {
    let mut cur = Cursor::new(src);
    if cur.peek().is_none() {
        return Err(cur.error("empty polynomial"));
    }
    let mut terms: BTreeMap<usize, BigInt> = BTreeMap::new();
    let mut first = true;
    while cur.peek().is_some() {
        let negative = match cur.peek() {
            Some('+') => {
                cur.bump();
                false
            }
            Some('-') => {
                cur.bump();
                true
            }
            _ if first => false,
            Some(c) => return Err(cur.error(format!("expected '+' or '-', found '{c}'"))),
            None => unreachable!(),
        };
        first = false;

        let coeff = cur.digits();
        let mut has_var = false;
        if coeff.is_some() && cur.peek() == Some('*') {
            cur.bump();
            if cur.peek() != Some('x') {
                return Err(cur.error("expected 'x' after '*'"));
            }
        }
        let mut power = 0usize;
        if cur.peek() == Some('x') {
            cur.bump();
            has_var = true;
            power = 1;
            if cur.peek() == Some('^') {
                cur.bump();
                let exp = cur.digits().ok_or_else(|| cur.error("expected exponent after '^'"))?;
                power = exp
                    .parse()
                    .map_err(|_| cur.error("exponent too large"))?;
            }
        }
        if coeff.is_none() && !has_var {
            return Err(match cur.peek() {
                Some(c) => cur.error(format!("unexpected '{c}'")),
                None => cur.error("dangling sign"),
            });
        }
        let mut value: BigInt = match coeff {
            Some(d) => d.parse().expect("digit string"),
            None => BigInt::from(1),
        };
        if negative {
            value = -value;
        }
        *terms.entry(power).or_insert_with(BigInt::zero) += value;
    }

    let degree = terms.keys().next_back().copied().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); degree + 1];
    for (k, v) in terms {
        coeffs[k] = v;
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    Ok(coeffs)
}

/// Parses and validates a monic polynomial of degree at least 2.
pub fn parse_polynomial(src: &str) -> Result<IntPolynomial, ParseError> {
    let coeffs = parse_coefficients(src)?;
    IntPolynomial::new(coeffs).map_err(|e| ParseError {
        offset: 0,
        message: e.to_string(),
    })
}
