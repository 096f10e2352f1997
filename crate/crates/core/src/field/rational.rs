use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPolynomial;
use super::poly::IntPoly;
use crate::error::FieldError;

/// An element of the rational function field `Q(v)` in canonical form.
///
/// The value is `scale * v^shift * num(v) / den(v)` where
/// * `num` and `den` are primitive integer polynomials with positive leading
///   coefficient and nonzero constant term,
/// * `gcd(num, den) = 1`,
/// * zero is stored as `scale = 0`, `shift = 0`, `num = den = 1`.
///
/// Under these rules two elements are equal exactly when their fields are.
/// The numerator seen from outside is the Laurent polynomial
/// `scale * v^shift * num`, and the denominator is `den`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    scale: BigRational,
    shift: i64,
    num: IntPoly,
    den: IntPoly,
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction {
            scale: BigRational::zero(),
            shift: 0,
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(c))
    }

    pub fn from_rational(c: BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { scale: c, shift: 0, num: IntPoly::one(), den: IntPoly::one() }
    }

    /// The monomial `v^k`.
    pub fn v_pow(k: i64) -> Self {
        RationalFunction {
            scale: BigRational::one(),
            shift: k,
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }

    /// `c * v^k`.
    pub fn monomial(c: i64, k: i64) -> Self {
        Self::from_int(c).mul_v_pow(k)
    }

    /// Builds `sum coeffs[i] * v^(low + i)` from integer coefficients.
    pub fn from_int_laurent(low: i64, coeffs: &[i64]) -> Self {
        let poly = IntPoly::from_i64s(coeffs);
        Self::canonical(BigRational::one(), low, poly, IntPoly::one())
    }

    pub fn from_laurent(p: &LaurentPolynomial) -> Self {
        let Some(low) = p.low_exp() else {
            return Self::zero();
        };
        let (poly, denom) = clear_denominators(p);
        Self::canonical(BigRational::new(BigInt::one(), denom), low, poly, IntPoly::one())
    }

    /// Builds `num / den` from two Laurent polynomials.
    pub fn from_fraction(num: &LaurentPolynomial, den: &LaurentPolynomial) -> Result<Self, FieldError> {
        let d = Self::from_laurent(den);
        Self::from_laurent(num).checked_div(&d)
    }

    /// A polynomial in `v` (no negative powers) with integer coefficients.
    pub fn from_int_poly(p: &IntPoly) -> Self {
        Self::canonical(BigRational::one(), 0, p.clone(), IntPoly::one())
    }

    fn canonical(scale: BigRational, shift: i64, num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in canonical form");
        if scale.is_zero() || num.is_zero() {
            return Self::zero();
        }
        let mut scale = scale;
        let mut shift = shift;
        let mut num = num;
        let mut den = den;

        let cn = num.content();
        let cd = den.content();
        if !cn.is_one() {
            num = num.div_scalar(&cn);
        }
        if !cd.is_one() {
            den = den.div_scalar(&cd);
        }
        if cn != cd {
            scale *= BigRational::new(cn, cd);
        }

        let tn = num.trailing_zeros();
        if tn > 0 {
            num = num.shift_down(tn);
            shift += tn as i64;
        }
        let td = den.trailing_zeros();
        if td > 0 {
            den = den.shift_down(td);
            shift -= td as i64;
        }

        if num.leading().unwrap().is_negative() {
            num = num.neg();
            scale = -scale;
        }
        if den.leading().unwrap().is_negative() {
            den = den.neg();
            scale = -scale;
        }

        if !den.is_constant() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        RationalFunction { scale, shift, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.scale.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.scale.is_one() && self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn numerator(&self) -> LaurentPolynomial {
        if self.is_zero() {
            return LaurentPolynomial::zero();
        }
        LaurentPolynomial::new(
            self.shift,
            self.num.coeffs().iter().map(|c| &self.scale * BigRational::from_integer(c.clone())).collect(),
        )
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn to_laurent(&self) -> Option<LaurentPolynomial> {
        self.is_laurent().then(|| self.numerator())
    }

    /// The value as a rational constant, if it has no `v` dependence.
    pub fn to_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        (self.shift == 0 && self.num.is_one() && self.den.is_one()).then(|| self.scale.clone())
    }

    /// Evaluates at a rational point; `None` if the denominator vanishes there.
    pub fn eval(&self, v: &BigRational) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        let d = self.den.eval(v);
        if d.is_zero() || (v.is_zero() && self.shift < 0) {
            return None;
        }
        let vp = if self.shift == 0 { BigRational::one() } else { v.pow(self.shift as i32) };
        Some(&self.scale * vp * self.num.eval(v) / d)
    }

    pub fn mul_v_pow(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        out.shift += k;
        out
    }

    pub fn scale_by(&self, c: &BigRational) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        out.scale = &out.scale * c;
        out
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let shift = self.shift.min(other.shift);
        let n1 = self.num.shift_up((self.shift - shift) as usize);
        let n2 = other.num.shift_up((other.shift - shift) as usize);
        // Bring both scales onto a common integer footing.
        let l = self.scale.denom().lcm(other.scale.denom());
        let c1 = self.scale.numer() * (&l / self.scale.denom());
        let c2 = other.scale.numer() * (&l / other.scale.denom());
        let scale = BigRational::new(BigInt::one(), l);
        if self.den == other.den {
            let num = n1.scale(&c1).add(&n2.scale(&c2));
            return Self::canonical(scale, shift, num, self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        let (d1, d2) = if g.is_one() {
            (self.den.clone(), other.den.clone())
        } else {
            (self.den.div_exact(&g).unwrap(), other.den.div_exact(&g).unwrap())
        };
        let num = n1.scale(&c1).mul(&d2).add(&n2.scale(&c2).mul(&d1));
        let den = d1.mul(&d2).mul(&g);
        Self::canonical(scale, shift, num, den)
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let scale = &self.scale * &other.scale;
        let shift = self.shift + other.shift;
        if self.den.is_one() && other.den.is_one() {
            // Products of primitive polynomials stay primitive (Gauss).
            return RationalFunction { scale, shift, num: self.num.mul(&other.num), den: IntPoly::one() };
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = if g1.is_one() { self.num.clone() } else { self.num.div_exact(&g1).unwrap() };
        let d2 = if g1.is_one() { other.den.clone() } else { other.den.div_exact(&g1).unwrap() };
        let n2 = if g2.is_one() { other.num.clone() } else { other.num.div_exact(&g2).unwrap() };
        let d1 = if g2.is_one() { self.den.clone() } else { self.den.div_exact(&g2).unwrap() };
        Self::canonical(scale, shift, n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(RationalFunction {
            scale: self.scale.recip(),
            shift: -self.shift,
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self.mul_ref(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, FieldError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_ref(&sq);
            }
        }
        Ok(acc)
    }
}

/// Splits a rational-coefficient Laurent polynomial into an integer polynomial
/// (exponents shifted to start at 0) and the common denominator.
fn clear_denominators(p: &LaurentPolynomial) -> (IntPoly, BigInt) {
    let low = p.low_exp().unwrap_or(0);
    let high = p.high_exp().unwrap_or(0);
    let mut l = BigInt::one();
    for (_, c) in p.terms() {
        l = l.lcm(c.denom());
    }
    let coeffs: Vec<BigInt> =
        (low..=high).map(|e| (p.coeff(e) * BigRational::from_integer(l.clone())).to_integer()).collect();
    (IntPoly::from_coeffs(coeffs), l)
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl $tr<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                self.$imp(rhs)
            }
        }
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$imp(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$imp(rhs)
            }
        }
        impl $tr<RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                self.$imp(&rhs)
            }
        }
    };
}

impl RationalFunction {
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&-other)
    }

    /// Division that panics on a zero divisor; use [`checked_div`](Self::checked_div)
    /// when the divisor is not known to be nonzero.
    fn div_ref(&self, other: &Self) -> Self {
        self.checked_div(other).expect("division by zero in Q(v)")
    }
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        if self.is_zero() {
            return RationalFunction::zero();
        }
        let mut out = self.clone();
        out.scale = -out.scale;
        out
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl AddAssign<&RationalFunction> for RationalFunction {
    fn add_assign(&mut self, rhs: &RationalFunction) {
        *self = self.add_ref(rhs);
    }
}

impl AddAssign for RationalFunction {
    fn add_assign(&mut self, rhs: RationalFunction) {
        *self = self.add_ref(&rhs);
    }
}

impl SubAssign<&RationalFunction> for RationalFunction {
    fn sub_assign(&mut self, rhs: &RationalFunction) {
        *self = self.sub_ref(rhs);
    }
}

impl MulAssign<&RationalFunction> for RationalFunction {
    fn mul_assign(&mut self, rhs: &RationalFunction) {
        *self = self.mul_ref(rhs);
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl core::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl core::iter::Product for RationalFunction {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| a * b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(low: i64, cs: &[i64]) -> RationalFunction {
        RationalFunction::from_int_laurent(low, cs)
    }

    #[test]
    fn self_division_is_one() {
        let x = l(-1, &[-1, 0, 1]); // v - v^-1
        assert!(x.checked_div(&x).unwrap().is_one());
    }

    #[test]
    fn quantum_two_from_division() {
        let num = l(-2, &[-1, 0, 0, 0, 1]); // v^2 - v^-2
        let den = l(-1, &[-1, 0, 1]);
        assert_eq!(num.checked_div(&den).unwrap(), l(-1, &[1, 0, 1]));
    }

    #[test]
    fn difference_of_squares() {
        let a = l(-1, &[1, 0, 1]);
        let b = l(-1, &[-1, 0, 1]);
        assert_eq!(a * b, l(-2, &[-1, 0, 0, 0, 1]));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(RationalFunction::one().checked_div(&RationalFunction::zero()), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn canonical_form_absorbs_v_powers_and_content() {
        // (2v^3 - 2v) / (4v^2 + 4v) = (v - 1) / 2
        let num = l(1, &[-2, 0, 2]);
        let den = l(1, &[4, 4]);
        let q = num.checked_div(&den).unwrap();
        assert!(q.is_laurent());
        assert_eq!(q, l(0, &[-1, 1]) * RationalFunction::from_rational(BigRational::new(1.into(), 2.into())));
        // 1 / (v^2 - v) keeps a v^-1 in the numerator and (v - 1) below.
        let r = RationalFunction::one().checked_div(&l(1, &[-1, 1])).unwrap();
        assert_eq!(r.denominator(), &IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(r.numerator().low_exp(), Some(-1));
    }

    #[test]
    fn eval_and_pow() {
        let x = l(-1, &[1, 0, 1]);
        assert_eq!(x.eval(&BigRational::one()), Some(BigRational::from_integer(2.into())));
        let inv = x.pow(-2).unwrap();
        assert_eq!(inv * x.pow(2).unwrap(), RationalFunction::one());
    }
}
