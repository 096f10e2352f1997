use super::*;
use crate::decorated::{Deco, Label2};
use crate::field::{quantum_factorial, RationalFunction as Rf};
use crate::word::{GeneratorWord, Letter};

fn rf(s: &str) -> Rf {
    s.parse().unwrap()
}

#[test]
fn relations_hold_for_small_d() {
    for d in 1..=4 {
        for (name, ok) in check_relations(d) {
            assert!(ok, "relation {name} fails for d = {d}");
        }
    }
}

#[test]
fn chevalley_elements_d2() {
    let k = chevalley(2, Letter::K);
    let expect = SchurElement::from_terms(
        2,
        [(one_r(2, 0), rf("v^-2")), (one_r(2, 1), rf("1")), (one_r(2, 2), rf("v^2"))],
    );
    assert_eq!(k, expect);
    let e = chevalley(2, Letter::E);
    let expect = SchurElement::from_terms(2, [(e_r(2, 0), rf("1")), (e_r(2, 1), rf("v^-1"))]);
    assert_eq!(e, expect);
}

#[test]
fn x_squared() {
    let x = SchurElement::basis(x_r(2, 1));
    let sq = left_mul_special(&x_r(2, 1), &x).unwrap();
    let expect = SchurElement::from_terms(2, [(x_r(2, 1), rf("v^2-2")), (one_r(2, 1), rf("v^2-1"))]);
    assert_eq!(sq, expect);
}

#[test]
fn projector_product() {
    let a = Label2::new(1, 1, 0, 0, Deco::Empty);
    let b = Label2::diag(1, 1, Deco::Empty);
    let alg = SchurAlgebra::new(2);
    let p = alg.mul(&SchurElement::basis(a), &SchurElement::basis(b));
    assert_eq!(p, SchurElement::basis(a));
}

#[test]
fn star_of_e() {
    let d = 3;
    let e = chevalley(d, Letter::E);
    let rhs = word_element(d, &"(v^-1) k^-1 f".parse::<GeneratorWord>().unwrap());
    assert_eq!(e.star(), rhs);
}

#[test]
fn express_round_trip() {
    for d in 1..=3 {
        let alg = SchurAlgebra::new(d);
        for l in alg.labels() {
            let words = alg.express_in_generators(l);
            let value = apply_words(&words, &SchurElement::identity(d));
            assert_eq!(value, SchurElement::basis(*l), "label {l}, d = {d}");
        }
    }
}

#[test]
fn express_divided_power() {
    use SpecialKey::*;
    let alg = SchurAlgebra::new(2);
    let l = Label2::new(0, 2, 0, 0, Deco::Empty);
    let graded = apply_keys(2, &[E(1), E(0)], &SchurElement::identity(2));
    assert_eq!(graded.scale(&(Rf::v_pow(-1) / quantum_factorial(2))), SchurElement::basis(l));
    let words = alg.express_in_generators(&l);
    assert_eq!(apply_words(&words, &SchurElement::identity(2)), SchurElement::basis(l));
}

#[test]
fn key_table_evaluates_to_basis() {
    for d in 1..=4 {
        let alg = SchurAlgebra::new(d);
        let id = SchurElement::identity(d);
        for l in alg.labels() {
            let mut value = SchurElement::zero(d);
            for (w, c) in alg.key_expression(l).unwrap() {
                value.add_scaled(&apply_keys(d, w, &id), c);
            }
            assert_eq!(value, SchurElement::basis(*l), "label {l}, d = {d}");
        }
    }
}

#[test]
fn t22_lemma() {
    for d in 1..=4 {
        let alg = SchurAlgebra::new(d);
        for r in 0..d {
            assert_eq!(alg.t22_diagonal(r), SchurElement::basis(y_r(d, r)), "d = {d}, r = {r}");
        }
    }
}

#[test]
fn mul_is_associative_d2() {
    let alg = SchurAlgebra::new(2);
    let labels = alg.labels().to_vec();
    for a in labels.iter().step_by(3) {
        for b in labels.iter().step_by(2) {
            for c in labels.iter().step_by(5) {
                let (x, y, z) = (SchurElement::basis(*a), SchurElement::basis(*b), SchurElement::basis(*c));
                assert_eq!(alg.mul(&alg.mul(&x, &y), &z), alg.mul(&x, &alg.mul(&y, &z)));
            }
        }
    }
}

#[test]
fn mul_agrees_with_special_and_star() {
    let alg = SchurAlgebra::new(3);
    for a in alg.labels() {
        for b in alg.labels() {
            let x = SchurElement::basis(*a);
            let y = SchurElement::basis(*b);
            let p = alg.mul(&x, &y);
            if special_kind(a).is_some() {
                assert_eq!(p, left_mul_special(a, &y).unwrap());
            }
            assert_eq!(p.star(), alg.mul(&y.star(), &x.star()));
        }
    }
}

