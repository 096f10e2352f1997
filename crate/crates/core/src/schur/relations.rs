//! The defining relations among `e, f, k, k^-1, l`.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::{quantum_integer, RationalFunction as Rf};
use crate::word::{GeneratorWord, Letter};

use super::chevalley::apply_words;
use super::element::SchurElement;

/// `Σ lhs = Σ rhs`.
#[derive(Debug, Clone)]
pub struct Relation {
    pub name: &'static str,
    pub lhs: Vec<GeneratorWord>,
    pub rhs: Vec<GeneratorWord>,
}

fn w(c: Rf, letters: &[Letter]) -> GeneratorWord {
    GeneratorWord::new(c, letters.to_vec())
}

fn one(letters: &[Letter]) -> GeneratorWord {
    GeneratorWord::letters(letters)
}

/// The ten relations, in the usual order.
pub fn relations() -> Vec<Relation> {
    use Letter::*;
    let v = Rf::v_pow;
    let vv = v(1) - v(-1);
    let rel = |name, lhs, rhs| Relation { name, lhs, rhs };
    vec![
        rel("k k^-1 = 1", vec![one(&[K, KInv])], vec![one(&[])]),
        rel("k e k^-1 = v^2 e", vec![one(&[K, E, KInv])], vec![w(v(2), &[E])]),
        rel("k f k^-1 = v^-2 f", vec![one(&[K, F, KInv])], vec![w(v(-2), &[F])]),
        rel(
            "e f - f e = (k - k^-1)/(v - v^-1)",
            vec![one(&[E, F]), w(Rf::from_int(-1), &[F, E])],
            vec![w(Rf::one() / &vv, &[K]), w(-(Rf::one() / &vv), &[KInv])],
        ),
        rel("l^2 = l", vec![one(&[L, L])], vec![one(&[L])]),
        rel("k l = l k", vec![one(&[K, L])], vec![one(&[L, K])]),
        rel("l e l = l e", vec![one(&[L, E, L])], vec![one(&[L, E])]),
        rel("l f l = f l", vec![one(&[L, F, L])], vec![one(&[F, L])]),
        rel(
            "[2] e l e = v^-1 e^2 l + v l e^2",
            vec![w(quantum_integer(2), &[E, L, E])],
            vec![w(v(-1), &[E, E, L]), w(v(1), &[L, E, E])],
        ),
        rel(
            "[2] f l f = v^-1 l f^2 + v f^2 l",
            vec![w(quantum_integer(2), &[F, L, F])],
            vec![w(v(-1), &[L, F, F]), w(v(1), &[F, F, L])],
        ),
    ]
}

/// Checks every relation in `MU_v(2,d)` by evaluating both sides on the
/// identity through chains of special left multiplications.
pub fn check_relations(d: u32) -> Vec<(&'static str, bool)> {
    let id = SchurElement::identity(d);
    relations()
        .into_iter()
        .map(|r| (r.name, apply_words(&r.lhs, &id) == apply_words(&r.rhs, &id)))
        .collect()
}
