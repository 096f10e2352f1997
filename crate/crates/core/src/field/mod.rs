//! The coefficient field `Q(v)`.

mod format;
mod interp;
mod laurent;
mod poly;
mod rational;

pub use format::{parse_laurent, to_coefficient_string};
pub use interp::{lagrange_interpolate, substitute_q};
pub use laurent::LaurentPolynomial;
pub use poly::IntPoly;
pub use rational::RationalFunction;

/// Shorthand for the coefficient type.
pub type Rf = RationalFunction;

/// The quantum integer `[m] = v^(m-1) + v^(m-3) + ... + v^(1-m)`.
pub fn quantum_integer(m: u32) -> RationalFunction {
    if m == 0 {
        return RationalFunction::zero();
    }
    let mut coeffs = alloc::vec![0i64; 2 * m as usize - 1];
    for c in coeffs.iter_mut().step_by(2) {
        *c = 1;
    }
    RationalFunction::from_int_laurent(1 - m as i64, &coeffs)
}

/// `[m]! = [1][2]...[m]`, with `[0]! = 1`.
pub fn quantum_factorial(m: u32) -> RationalFunction {
    (1..=m).map(quantum_integer).product()
}

/// Signed quantum integer: `[m]` for any integer `m`, using `[-m] = -[m]`.
pub fn quantum_integer_signed(m: i64) -> RationalFunction {
    let q = quantum_integer(m.unsigned_abs() as u32);
    if m < 0 {
        -q
    } else {
        q
    }
}

/// `q^k = v^(2k)`.
pub fn q_pow(k: i64) -> RationalFunction {
    RationalFunction::v_pow(2 * k)
}

/// The q-integer `1 + q + ... + q^(n-1)` with `q = v^2` (zero for `n = 0`).
pub fn q_integer(n: u32) -> RationalFunction {
    if n == 0 {
        return RationalFunction::zero();
    }
    let mut coeffs = alloc::vec![0i64; 2 * n as usize - 1];
    for c in coeffs.iter_mut().step_by(2) {
        *c = 1;
    }
    RationalFunction::from_int_laurent(0, &coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::One;

    #[test]
    fn quantum_numbers() {
        assert!(quantum_integer(0).is_zero());
        assert_eq!(quantum_integer(2).to_string(), "v+v^-1");
        assert_eq!(quantum_integer(3).to_string(), "v^2+1+v^-2");
        assert!(quantum_factorial(0).is_one());
        assert!(quantum_factorial(1).is_one());
        assert_eq!(quantum_factorial(2), quantum_integer(2));
    }

    #[test]
    fn quantum_integer_at_one() {
        for m in 0..10u32 {
            let val = quantum_integer(m).eval(&BigRational::one()).unwrap();
            assert_eq!(val, BigRational::from_integer(m.into()));
        }
    }

    #[test]
    fn quantum_integer_matches_quotient() {
        let denom = RationalFunction::from_int_laurent(-1, &[-1, 0, 1]);
        for m in 1..8i64 {
            let num = RationalFunction::v_pow(m) - RationalFunction::v_pow(-m);
            assert_eq!(num.checked_div(&denom).unwrap(), quantum_integer(m as u32));
        }
    }

    #[test]
    fn q_integer_relates_to_quantum_integer() {
        for n in 0..6u32 {
            assert_eq!(q_integer(n), quantum_integer(n).mul_v_pow(n as i64 - 1));
        }
    }
}
