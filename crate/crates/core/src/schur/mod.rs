//! The mirabolic quantum Schur algebra `MU_v(2,d)` in its standard basis
//! `T_{A,Δ}`, `(A,Δ) ∈ Ξ_{2,d}`.

mod chevalley;
mod element;
mod express;
mod relations;
mod special;

pub use chevalley::{apply_letter, apply_word, apply_words, chevalley, e_r, f_r, one_r, word_element, x_r, y_r};
pub use element::SchurElement;
pub use express::{apply_keys, KeyExpr, SchurAlgebra, SpecialKey};
pub use relations::{check_relations, relations, Relation};
pub use special::{left_mul_special, right_mul_special, special_kind, SpecialKind};

#[cfg(test)]
mod tests;
