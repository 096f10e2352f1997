//! Chevalley generators of `MU_v(2,d)` and evaluation of generator words.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::decorated::{Deco, Label2};
use crate::field::RationalFunction as Rf;
use crate::word::{GeneratorWord, Letter};

use super::element::SchurElement;
use super::special::{left_mul_special_into, SpecialKind};

/// `e_r = T_{D(r,d-r-1)+E12,∅}`.
pub fn e_r(d: u32, r: u32) -> Label2 {
    Label2::new(r, 1, 0, d - r - 1, Deco::Empty)
}

/// `f_r = T_{D(r,d-r-1)+E21,∅}`.
pub fn f_r(d: u32, r: u32) -> Label2 {
    Label2::new(r, 0, 1, d - r - 1, Deco::Empty)
}

/// `1_r = T_{D(r,d-r),∅}`.
pub fn one_r(d: u32, r: u32) -> Label2 {
    Label2::diag(r, d - r, Deco::Empty)
}

/// `x_r = T_{D(r,d-r),{(1,1)}}`, defined for `r >= 1`.
pub fn x_r(d: u32, r: u32) -> Label2 {
    Label2::diag(r, d - r, Deco::D11)
}

/// `T_{D(r,d-r),{(2,2)}}`, defined for `r <= d - 1`.
pub fn y_r(d: u32, r: u32) -> Label2 {
    Label2::diag(r, d - r, Deco::D22)
}

/// The expansion of a generator as `(scalar, special label)` pairs.
fn components(d: u32, g: Letter) -> Vec<(Rf, Label2, SpecialKind)> {
    let d64 = d as i64;
    let mut out = Vec::new();
    match g {
        Letter::E => {
            for r in 0..d {
                out.push((Rf::v_pow(-(r as i64)), e_r(d, r), SpecialKind::ERow));
            }
        }
        Letter::F => {
            for r in 0..d {
                out.push((Rf::v_pow(1 + r as i64 - d64), f_r(d, r), SpecialKind::FRow));
            }
        }
        Letter::K | Letter::KInv => {
            let sign = if g == Letter::K { 1 } else { -1 };
            for r in 0..=d {
                out.push((Rf::v_pow(sign * (2 * r as i64 - d64)), one_r(d, r), SpecialKind::Projector));
            }
        }
        Letter::L => {
            out.push((Rf::one(), one_r(d, 0), SpecialKind::Projector));
            for r in 1..=d {
                let c = Rf::v_pow(-2 * r as i64);
                out.push((c.clone(), one_r(d, r), SpecialKind::Projector));
                out.push((c, x_r(d, r), SpecialKind::X11));
            }
        }
    }
    out
}

/// The generator `g` as an element of `MU_v(2,d)`.
pub fn chevalley(d: u32, g: Letter) -> SchurElement {
    SchurElement::from_terms(d, components(d, g).into_iter().map(|(c, l, _)| (l, c)))
}

/// `g * x` for a single generator.
pub fn apply_letter(g: Letter, x: &SchurElement) -> SchurElement {
    let mut out = SchurElement::zero(x.d());
    for (c, key, kind) in components(x.d(), g) {
        left_mul_special_into(&key, kind, x, &c, &mut out);
    }
    out
}

/// `w * x`: the letters act from right to left, then the scalar.
pub fn apply_word(w: &GeneratorWord, x: &SchurElement) -> SchurElement {
    let mut acc = x.clone();
    for &g in w.letters.iter().rev() {
        if acc.is_zero() {
            break;
        }
        acc = apply_letter(g, &acc);
    }
    acc.scale(&w.scalar)
}

/// `Σ w * x` over a list of words, sharing work between words with a common
/// suffix.
pub fn apply_words(words: &[GeneratorWord], x: &SchurElement) -> SchurElement {
    #[derive(Default)]
    struct Node {
        children: BTreeMap<Letter, Node>,
        coeff: Rf,
    }
    let mut root = Node::default();
    for w in words {
        let mut node = &mut root;
        for &g in w.letters.iter().rev() {
            node = node.children.entry(g).or_default();
        }
        node.coeff = &node.coeff + &w.scalar;
    }
    fn walk(node: &Node, value: &SchurElement, out: &mut SchurElement) {
        out.add_scaled(value, &node.coeff);
        for (&g, child) in &node.children {
            let next = apply_letter(g, value);
            if !next.is_zero() {
                walk(child, &next, out);
            }
        }
    }
    let mut out = SchurElement::zero(x.d());
    walk(&root, x, &mut out);
    out
}

/// Evaluates a word as an element of `MU_v(2,d)`.
pub fn word_element(d: u32, w: &GeneratorWord) -> SchurElement {
    apply_word(w, &SchurElement::identity(d))
}
