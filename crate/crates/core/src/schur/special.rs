//! Left multiplication by the special basis elements `T_{B,∅}` (`B - E12`
//! diagonal), `T_{C,∅}` (`C - E21` diagonal) and `T_{D,∅}`, `T_{D,{(1,1)}}`,
//! `T_{D,{(2,2)}}` (`D` diagonal).  Coefficients are polynomials in
//! `q = v^2`; output labels outside `Ξ_{2,d}` are dropped.

use crate::decorated::{Deco, Label2};
use crate::error::AlgebraError;
use crate::field::{q_integer, q_pow, RationalFunction as Rf};

use super::element::SchurElement;

/// The shape of a special left factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpecialKind {
    /// `[[b1, 1], [0, b2]]`, no decoration.
    ERow,
    /// `[[c1, 0], [1, c2]]`, no decoration.
    FRow,
    /// Diagonal, no decoration: a weight projector.
    Projector,
    /// Diagonal with `{(1,1)}`.
    X11,
    /// Diagonal with `{(2,2)}`.
    X22,
}

pub fn special_kind(key: &Label2) -> Option<SpecialKind> {
    let [_, a12, a21, _] = key.a;
    if !key.is_valid() {
        return None;
    }
    match (a12, a21, key.deco) {
        (1, 0, Deco::Empty) => Some(SpecialKind::ERow),
        (0, 1, Deco::Empty) => Some(SpecialKind::FRow),
        (0, 0, Deco::Empty) => Some(SpecialKind::Projector),
        (0, 0, Deco::D11) => Some(SpecialKind::X11),
        (0, 0, Deco::D22) => Some(SpecialKind::X22),
        _ => None,
    }
}

fn qi(n: i64) -> Rf {
    q_integer(n.max(0) as u32)
}

fn q(k: i64) -> Rf {
    q_pow(k)
}

struct Out<'a> {
    out: &'a mut SchurElement,
}

impl Out<'_> {
    fn push(&mut self, a: [i64; 4], deco: Deco, c: Rf) {
        if c.is_zero() {
            return;
        }
        if let Some(l) = Label2::checked(a, deco) {
            self.out.add_term(l, c);
        }
    }
}

fn e_row(a: [i64; 4], deco: Deco, o: &mut Out<'_>) {
    let [a11, a12, a21, a22] = a;
    let p = [a11 + 1, a12, a21 - 1, a22];
    let qq = [a11, a12 + 1, a21, a22 - 1];
    use Deco::*;
    match deco {
        Empty => {
            o.push(p, Empty, q(a12) * qi(a11 + 1));
            o.push(qq, Empty, qi(a12 + 1));
        }
        D11 => {
            o.push(p, D11, q(a12) * qi(a11));
            o.push(qq, D11, qi(a12 + 1));
        }
        D12 => {
            o.push(p, D12, q(a12 - 1) * qi(a11 + 1));
            o.push(qq, D12, qi(a12));
        }
        D21 => {
            o.push(p, D11, q(a12 + a11));
            o.push(p, D21, q(a12) * qi(a11 + 1));
            o.push(qq, D21, qi(a12 + 1));
        }
        D12D21 => {
            o.push(p, D12, q(a12 - 1) * (q(a11 + 1) - Rf::one()));
            o.push(p, D12D21, q(a12) * qi(a11 + 1));
            o.push(qq, D12D21, qi(a12));
        }
        D22 => {
            o.push(qq, D12, q(a12));
            o.push(qq, D12D21, q(a12));
            o.push(p, D22, q(a12) * qi(a11 + 1));
            o.push(qq, D22, qi(a12 + 1));
        }
    }
}

fn f_row(a: [i64; 4], deco: Deco, o: &mut Out<'_>) {
    let [a11, a12, a21, a22] = a;
    let p = [a11 - 1, a12, a21 + 1, a22];
    let qq = [a11, a12 - 1, a21, a22 + 1];
    let one = Rf::one;
    use Deco::*;
    match deco {
        Empty => {
            o.push(p, Empty, qi(a21 + 1));
            o.push(qq, Empty, q(a21) * qi(a22 + 1));
        }
        D11 => {
            o.push(p, D11, qi(a21 + 1));
            o.push(qq, D11, q(a21) * qi(a22 + 1));
            o.push(p, D21, one());
        }
        D12 => {
            o.push(p, D12, qi(a21 + 1));
            o.push(qq, D12, q(a21) * qi(a22 + 1));
            o.push(p, D12D21, one());
            o.push(qq, D22, one());
        }
        D21 => {
            o.push(p, D21, q(1) * qi(a21));
            o.push(qq, D21, q(a21) * qi(a22 + 1));
        }
        D12D21 => {
            o.push(p, D12D21, q(1) * qi(a21));
            o.push(qq, D12D21, q(a21) * qi(a22 + 1));
            o.push(qq, D22, q(a21) - one());
        }
        D22 => {
            o.push(p, D22, qi(a21 + 1));
            o.push(qq, D22, q(a21 + 1) * qi(a22));
        }
    }
}

fn x11(a: [i64; 4], deco: Deco, o: &mut Out<'_>) {
    let [a11, a12, _, _] = a;
    let one = Rf::one;
    use Deco::*;
    match deco {
        Empty => {
            o.push(a, D11, one());
            o.push(a, D12, one());
        }
        D11 => {
            o.push(a, Empty, q(a11) - one());
            o.push(a, D11, q(a11) - Rf::from_int(2));
            o.push(a, D12, q(a11) - one());
        }
        D12 => {
            let c = q(a11) * (q(a12) - one());
            o.push(a, Empty, c.clone());
            o.push(a, D11, c.clone());
            o.push(a, D12, c - one());
        }
        D21 => {
            o.push(a, D21, q(a11) - one());
            o.push(a, D12D21, q(a11));
        }
        D12D21 => {
            let c = q(a11) * (q(a12) - one());
            o.push(a, D21, c.clone());
            o.push(a, D12D21, c - one());
        }
        D22 => {
            o.push(a, D22, q(a11 + a12) - one());
        }
    }
}

fn x22(a: [i64; 4], deco: Deco, o: &mut Out<'_>) {
    let [a11, a12, a21, a22] = a;
    let one = Rf::one;
    let two = || Rf::from_int(2);
    use Deco::*;
    let lower = |c: Rf, o: &mut Out<'_>| {
        for dd in [D21, D12D21, D22] {
            o.push(a, dd, c.clone());
        }
    };
    match deco {
        Empty => lower(one(), o),
        D11 => lower(q(a11) - one(), o),
        D12 => lower(q(a11) * (q(a12) - one()), o),
        D21 | D12D21 => {
            let base = if deco == D21 { q(a11) } else { q(a11) * (q(a12) - one()) };
            let c1 = &base * &(q(a21) - one());
            let c2 = &base * &(q(a21) - two());
            for dd in [Empty, D11, D12, D22] {
                o.push(a, dd, c1.clone());
            }
            for dd in [D21, D12D21] {
                o.push(a, dd, c2.clone());
            }
        }
        D22 => {
            let base = q(a11 + a12 + a21);
            o.push(a, D22, &base * &(q(a22) - one()) - q(a11 + a12));
            let c = &base * &(q(a22) - one());
            for dd in [Empty, D11, D12, D21, D12D21] {
                o.push(a, dd, c.clone());
            }
        }
    }
}

/// Accumulates `scale * T_key * x` into `out`.
pub(crate) fn left_mul_special_into(
    key: &Label2,
    kind: SpecialKind,
    x: &SchurElement,
    scale: &Rf,
    out: &mut SchurElement,
) {
    let co = key.co();
    for (label, c) in x.terms() {
        if label.ro() != co {
            continue;
        }
        if kind == SpecialKind::Projector {
            out.add_term(*label, c * scale);
            continue;
        }
        let a = label.a.map(i64::from);
        let mut tmp = SchurElement::zero(x.d());
        {
            let mut t = Out { out: &mut tmp };
            match kind {
                SpecialKind::ERow => e_row(a, label.deco, &mut t),
                SpecialKind::FRow => f_row(a, label.deco, &mut t),
                SpecialKind::X11 => x11(a, label.deco, &mut t),
                SpecialKind::X22 => x22(a, label.deco, &mut t),
                SpecialKind::Projector => unreachable!(),
            }
        }
        out.add_scaled(&tmp, &(c * scale));
    }
}

/// `T_key * x` for a special left factor `key`.
pub fn left_mul_special(key: &Label2, x: &SchurElement) -> Result<SchurElement, AlgebraError> {
    let kind = special_kind(key).ok_or(AlgebraError::NotSpecial)?;
    if key.d() != x.d() {
        return Err(AlgebraError::DegreeMismatch(key.d(), x.d()));
    }
    let mut out = SchurElement::zero(x.d());
    left_mul_special_into(key, kind, x, &Rf::one(), &mut out);
    Ok(out)
}

/// `x * T_key`, computed as `(T_key^* x^*)^*`; the transpose of a special
/// label is special.
pub fn right_mul_special(x: &SchurElement, key: &Label2) -> Result<SchurElement, AlgebraError> {
    Ok(left_mul_special(&key.transpose(), &x.star())?.star())
}
