//! Interpolation of integer polynomials in `q` from point values, and the
//! passage `q -> v^2`.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::IntPoly;
use super::rational::RationalFunction;
use crate::error::InterpolationError;

/// Fits the unique polynomial of degree at most `degree_bound` through the
/// first `degree_bound + 1` points, checks it against every point, and
/// requires integer coefficients.
pub fn lagrange_interpolate(
    points: &[(BigRational, BigRational)],
    degree_bound: usize,
) -> Result<IntPoly, InterpolationError> {
    let needed = degree_bound + 1;
    if points.len() < needed {
        return Err(InterpolationError::InsufficientPoints { needed, got: points.len() });
    }
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(InterpolationError::RepeatedAbscissa);
        }
    }
    let used = &points[..needed];
    // Newton divided differences.
    let mut table: Vec<BigRational> = used.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..needed {
        for i in (level..needed).rev() {
            let num = &table[i] - &table[i - 1];
            let den = &used[i].0 - &used[i - level].0;
            table[i] = num / den;
        }
    }
    // Expand the Newton form into monomial coefficients.
    let mut coeffs: Vec<BigRational> = Vec::from([table[needed - 1].clone()]);
    for i in (0..needed - 1).rev() {
        let x = &used[i].0;
        let mut next = alloc::vec![BigRational::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * x;
        }
        next[0] += &table[i];
        coeffs = next;
    }
    let eval = |q: &BigRational| coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * q + c);
    for (x, y) in points {
        if &eval(x) != y {
            return Err(InterpolationError::NotThroughAllPoints(x.to_string()));
        }
    }
    let mut ints: Vec<BigInt> = Vec::with_capacity(coeffs.len());
    for c in &coeffs {
        if !c.is_integer() {
            return Err(InterpolationError::NonIntegral(c.to_string()));
        }
        ints.push(c.to_integer());
    }
    Ok(IntPoly::from_coeffs(ints))
}

/// Replaces `q` by `v^2`.
pub fn substitute_q(p: &IntPoly) -> RationalFunction {
    let mut spread = Vec::with_capacity(2 * p.coeffs().len());
    for (i, c) in p.coeffs().iter().enumerate() {
        if i > 0 {
            spread.push(BigInt::zero());
        }
        spread.push(c.clone());
    }
    RationalFunction::from_int_poly(&IntPoly::from_coeffs(spread))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<(BigRational, BigRational)> {
        v.iter().map(|&(x, y)| (BigRational::from_integer(x.into()), BigRational::from_integer(y.into()))).collect()
    }

    #[test]
    fn recovers_small_polynomials() {
        assert_eq!(lagrange_interpolate(&pts(&[(2, 1), (3, 1), (5, 1)]), 2).unwrap(), IntPoly::one());
        assert_eq!(lagrange_interpolate(&pts(&[(2, 3), (3, 4), (5, 6)]), 2).unwrap(), IntPoly::from_i64s(&[1, 1]));
        assert_eq!(lagrange_interpolate(&pts(&[(2, 3), (3, 8), (5, 24)]), 2).unwrap(), IntPoly::from_i64s(&[-1, 0, 1]));
    }

    #[test]
    fn reports_failures() {
        assert_eq!(
            lagrange_interpolate(&pts(&[(2, 1), (3, 1)]), 2),
            Err(InterpolationError::InsufficientPoints { needed: 3, got: 2 })
        );
        assert!(matches!(
            lagrange_interpolate(&pts(&[(2, 3), (3, 8), (5, 24), (7, 0)]), 2),
            Err(InterpolationError::NotThroughAllPoints(_))
        ));
        assert!(matches!(lagrange_interpolate(&pts(&[(0, 0), (2, 1)]), 1), Err(InterpolationError::NonIntegral(_))));
    }

    #[test]
    fn substitution() {
        assert_eq!(substitute_q(&IntPoly::from_i64s(&[-1, 1])), RationalFunction::from_int_laurent(0, &[-1, 0, 1]));
        assert_eq!(substitute_q(&IntPoly::from_i64s(&[0, 1, 1])).to_string(), "v^4+v^2");
        assert_eq!(substitute_q(&IntPoly::one()), RationalFunction::one());
    }
}
