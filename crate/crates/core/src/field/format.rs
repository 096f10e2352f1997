//! Text form of coefficients.
//!
//! A Laurent polynomial prints its terms by descending exponent as `c*v^k`,
//! writing `v^k` for unit coefficients, `v` for `v^1` and bare constants for
//! `k = 0`, e.g. `v^2-2+v^-2` or `1/2*v-3`.  A non-polynomial element prints
//! as `(num)/(den)` with `den` an integer polynomial in `v`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPolynomial;
use super::poly::IntPoly;
use super::rational::RationalFunction;
use crate::error::FieldError;

fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (i64, &'a BigRational)>,
{
    let mut first = true;
    for (k, c) in terms {
        if c.is_negative() {
            f.write_str("-")?;
        } else if !first {
            f.write_str("+")?;
        }
        first = false;
        let a = c.abs();
        if k == 0 {
            write!(f, "{a}")?;
            continue;
        }
        if !a.is_one() {
            write!(f, "{a}*")?;
        }
        if k == 1 {
            f.write_str("v")?;
        } else {
            write!(f, "v^{k}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms().rev())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<BigRational> =
            self.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let terms = coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i as i64, c));
        write_terms(f, terms.rev())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "({})/({})", self.numerator(), self.denominator())
        }
    }
}

fn parse_err(s: &str) -> FieldError {
    FieldError::Parse(s.to_string())
}

fn parse_rational(s: &str) -> Result<BigRational, FieldError> {
    let bad = || parse_err(s);
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    match s.split_once('/') {
        Some((n, d)) if digits(n) && digits(d) => {
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(FieldError::DivisionByZero);
            }
            Ok(BigRational::new(n.parse().map_err(|_| bad())?, d))
        }
        None if digits(s) => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
        _ => Err(bad()),
    }
}

fn parse_term(body: &str) -> Result<(i64, BigRational), FieldError> {
    let (coeff, power) = match body.find('v') {
        None => return Ok((0, parse_rational(body)?)),
        Some(0) => ("1", body),
        Some(i) => {
            let c = body[..i].strip_suffix('*').ok_or_else(|| parse_err(body))?;
            (c, &body[i..])
        }
    };
    let c = parse_rational(coeff)?;
    let k = match power {
        "v" => 1,
        _ => {
            let e = power.strip_prefix("v^").ok_or_else(|| parse_err(body))?;
            e.parse::<i64>().map_err(|_| parse_err(body))?
        }
    };
    Ok((k, c))
}

/// Parses a sum of terms such as `v^2-2+1/3*v^-2`.  Repeated exponents are
/// added together.
pub fn parse_laurent(s: &str) -> Result<LaurentPolynomial, FieldError> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(parse_err(&s));
    }
    let bytes = s.as_bytes();
    let mut acc = LaurentPolynomial::zero();
    let mut start = 0;
    while start < bytes.len() {
        let mut sign = BigRational::one();
        let mut i = start;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        } else if start != 0 {
            return Err(parse_err(&s));
        }
        let body_start = i;
        // A sign ends the term unless it belongs to an exponent (`^-`).
        while i < bytes.len() && !((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^') {
            i += 1;
        }
        let (k, c) = parse_term(&s[body_start..i])?;
        acc = acc.add(&LaurentPolynomial::monomial(sign * c, k));
        start = i;
    }
    Ok(acc)
}

fn strip_parens(s: &str) -> Option<&str> {
    let inner = s.strip_prefix('(')?.strip_suffix(')')?;
    let mut depth = 0i32;
    for b in inner.bytes() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return None;
        }
    }
    (depth == 0).then_some(inner)
}

impl FromStr for RationalFunction {
    type Err = FieldError;

    /// Accepts `laurent`, `(laurent)`, `laurent/(laurent)` and
    /// `(laurent)/(laurent)`.
    fn from_str(s: &str) -> Result<Self, FieldError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(inner) = strip_parens(&s) {
            return Self::from_str(inner);
        }
        if let Some(idx) = s.find("/(") {
            let num = &s[..idx];
            let den = strip_parens(&s[idx + 1..]).ok_or_else(|| parse_err(&s))?;
            let num = strip_parens(num).unwrap_or(num);
            return RationalFunction::from_fraction(&parse_laurent(num)?, &parse_laurent(den)?);
        }
        Ok(RationalFunction::from_laurent(&parse_laurent(&s)?))
    }
}

/// Prints a coefficient in the canonical text form.
pub fn to_coefficient_string(x: &RationalFunction) -> String {
    format!("{x}")
}
