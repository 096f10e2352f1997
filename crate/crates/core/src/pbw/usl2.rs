//! Straightening in `U_v(sl_2)`, in both orders `f^a e^b k^t` and
//! `e^a f^b k^t`.

use alloc::collections::BTreeMap;

use crate::field::{quantum_integer, RationalFunction as Rf};

/// `(a, b, t) -> c`, read as `c f^a e^b k^t` or `c e^a f^b k^t` depending on
/// the order in use.
pub(crate) type UTerms = BTreeMap<(u32, u32, i64), Rf>;

pub(crate) fn add(map: &mut UTerms, key: (u32, u32, i64), c: Rf) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(key).or_default();
    *e = &*e + &c;
    if e.is_zero() {
        map.remove(&key);
    }
}

fn bracket_scale(n: u32) -> Rf {
    quantum_integer(n) / (Rf::v_pow(1) - Rf::v_pow(-1))
}

/// `e * x` for `x` in the order `f^r e^s k^t`, using
/// `e f^r = f^r e + [r] f^(r-1) (v^(1-r) k - v^(r-1) k^-1)/(v - v^-1)`.
pub(crate) fn fe_left_e(x: &UTerms) -> UTerms {
    let mut out = UTerms::new();
    for (&(r, s, t), c) in x {
        add(&mut out, (r, s + 1, t), c.clone());
        if r > 0 {
            let (ri, si) = (r as i64, s as i64);
            let b = c * &bracket_scale(r);
            add(&mut out, (r - 1, s, t + 1), &b * &Rf::v_pow(1 - ri + 2 * si));
            add(&mut out, (r - 1, s, t - 1), -(&b * &Rf::v_pow(ri - 1 - 2 * si)));
        }
    }
    out
}

/// `f * x` for `x` in the order `e^s f^r k^t`, using
/// `f e^s = e^s f - [s] e^(s-1) (v^(s-1) k - v^(1-s) k^-1)/(v - v^-1)`.
pub(crate) fn ef_left_f(x: &UTerms) -> UTerms {
    let mut out = UTerms::new();
    for (&(s, r, t), c) in x {
        add(&mut out, (s, r + 1, t), c.clone());
        if s > 0 {
            let (ri, si) = (r as i64, s as i64);
            let b = c * &bracket_scale(s);
            add(&mut out, (s - 1, r, t + 1), -(&b * &Rf::v_pow(si - 1 - 2 * ri)));
            add(&mut out, (s - 1, r, t - 1), &b * &Rf::v_pow(1 - si + 2 * ri));
        }
    }
    out
}

/// `e^s f^r` in the order `f^a e^b k^t`.
pub(crate) fn ef_to_fe(s: u32, r: u32) -> UTerms {
    let mut x = UTerms::new();
    x.insert((r, 0, 0), Rf::one());
    for _ in 0..s {
        x = fe_left_e(&x);
    }
    x
}

/// `f^r e^s` in the order `e^a f^b k^t`.
pub(crate) fn fe_to_ef(r: u32, s: u32) -> UTerms {
    let mut x = UTerms::new();
    x.insert((s, 0, 0), Rf::one());
    for _ in 0..r {
        x = ef_left_f(&x);
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_between_orders() {
        for r in 0..4 {
            for s in 0..4 {
                let ef = fe_to_ef(r, s);
                let mut back = UTerms::new();
                for (&(a, b, t), c) in &ef {
                    for (&(x, y, u), d) in &ef_to_fe(a, b) {
                        add(&mut back, (x, y, u + t), c * d);
                    }
                }
                let mut expect = UTerms::new();
                expect.insert((r, s, 0), Rf::one());
                assert_eq!(back, expect, "r = {r}, s = {s}");
            }
        }
    }
}
