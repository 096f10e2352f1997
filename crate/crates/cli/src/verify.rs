//! Named verification suites run by `mirabolic verify`.

use std::collections::BTreeSet;

use mirabolic_core::decorated::{count_xi_tensor, enumerate_xi2, enumerate_xi_tensor};
use mirabolic_core::field::RationalFunction as Rf;
use mirabolic_core::oracle::{first_primes, structure_constants};
use mirabolic_core::pbw::{
    casimir_element, commutator, left_mul_generator, move_out, normalize_letters, project_to_schur, PbwClass,
    PbwElement, PbwMonomial, Side,
};
use mirabolic_core::rep::{build_module, casimir_scalar, ModuleKind, Sign};
use mirabolic_core::schur::{apply_letter, apply_words, check_relations, relations, SchurAlgebra, SchurElement};
use mirabolic_core::tensor::{rhs_closed_form, weight_multiplicities};
use mirabolic_core::word::Letter;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SUITES: &[&str] = &["relations", "oracle", "express", "t22", "pbw", "casimir", "rep", "weights", "combinatorics"];

/// Outcome of one named check.
pub struct Check {
    pub name: String,
    pub ok: bool,
}

fn check(name: impl Into<String>, ok: bool) -> Check {
    Check { name: name.into(), ok }
}

pub fn run(suite: &str, d: u32, samples: usize) -> Option<Vec<Check>> {
    Some(match suite {
        "relations" => check_relations(d).into_iter().map(|(n, ok)| check(n, ok)).collect(),
        "oracle" => oracle(d, samples),
        "express" => express(d),
        "t22" => t22(d),
        "pbw" => pbw(d),
        "casimir" => casimir(d),
        "rep" => rep(d),
        "weights" => weights(d as usize),
        "combinatorics" => combinatorics(d as usize),
        _ => return None,
    })
}

fn oracle(d: u32, samples: usize) -> Vec<Check> {
    let alg = SchurAlgebra::new(d);
    let labels = enumerate_xi2(d);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..labels.len() {
        for j in 0..labels.len() {
            if labels[i].co() == labels[j].ro() {
                pairs.push((i, j));
            }
        }
    }
    if pairs.len() > samples {
        let mut rng = ChaCha8Rng::seed_from_u64(u64::from(d));
        let mut picked = BTreeSet::new();
        while picked.len() < samples {
            picked.insert(pairs[rng.gen_range(0..pairs.len())]);
        }
        pairs = picked.into_iter().collect();
    }
    let primes = first_primes((d * d + 2) as usize);
    pairs
        .into_iter()
        .map(|(i, j)| {
            let (x, y) = (labels[i], labels[j]);
            let engine = alg.mul(&SchurElement::basis(x), &SchurElement::basis(y));
            let ok = structure_constants(&x, &y, &primes).map(|(o, _)| o == engine).unwrap_or(false);
            check(format!("{x} * {y}"), ok)
        })
        .collect()
}

fn express(d: u32) -> Vec<Check> {
    let alg = SchurAlgebra::new(d);
    let id = SchurElement::identity(d);
    alg.labels()
        .iter()
        .map(|l| check(l.to_string(), apply_words(&alg.express_in_generators(l), &id) == SchurElement::basis(*l)))
        .collect()
}

fn t22(d: u32) -> Vec<Check> {
    let alg = SchurAlgebra::new(d);
    (0..d)
        .map(|r| {
            let expect = SchurElement::basis(mirabolic_core::schur::y_r(d, r));
            check(format!("r = {r}"), alg.t22_diagonal(r) == expect)
        })
        .collect()
}

fn small_monomials() -> Vec<PbwMonomial> {
    let mut out = Vec::new();
    for class in PbwClass::ALL {
        for r in 0..=2 {
            for s in 0..=2 {
                for t in -2..=2 {
                    out.extend(PbwMonomial::new(class, r, s, t));
                }
            }
        }
    }
    out
}

fn pbw(d: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for a in 0..=5u32 {
        for b in 0..=5u32 {
            if a + b == 0 {
                continue;
            }
            for (side, x) in [(Side::E, Letter::E), (Side::F, Letter::F)] {
                let mut letters = vec![x; a as usize];
                letters.push(Letter::L);
                letters.extend(vec![x; b as usize]);
                out.push(check(format!("move-out {x} {a} {b}"), normalize_letters(&letters) == move_out(side, a, b)));
            }
        }
    }
    for m in small_monomials() {
        let x = PbwElement::monomial(m);
        let img = project_to_schur(d, &x);
        let ok = Letter::ALL.iter().all(|&g| project_to_schur(d, &left_mul_generator(g, &x)) == apply_letter(g, &img));
        out.push(check(format!("projection of {m}"), ok));
    }
    out
}

fn casimir_formula(kind: ModuleKind, sign: Sign, n: i64) -> Rf {
    let num = match kind {
        ModuleKind::L0 => Rf::v_pow(n) + Rf::v_pow(-n - 2),
        ModuleKind::L1 => Rf::v_pow(n + 2) + Rf::v_pow(-n),
        ModuleKind::L01 => Rf::v_pow(n) + Rf::v_pow(-n),
    };
    &sign.as_rf() * &(num / (Rf::v_pow(1) - Rf::v_pow(-1)))
}

fn casimir(d: u32) -> Vec<Check> {
    let c = casimir_element();
    let mut out: Vec<Check> = Letter::ALL
        .iter()
        .map(|&g| check(format!("[C, {g}] = 0"), commutator(&c, &PbwElement::generator(g)).is_zero()))
        .collect();
    let mut scalars = Vec::new();
    for kind in [ModuleKind::L0, ModuleKind::L1, ModuleKind::L01] {
        for sign in [Sign::Plus, Sign::Minus] {
            for n in 0..=d {
                let Ok(m) = build_module(kind, sign, n) else { continue };
                let got = casimir_scalar(&m).ok();
                let ok = got.as_ref() == Some(&casimir_formula(kind, sign, n as i64));
                out.push(check(format!("scalar on {}", m.spec), ok));
                scalars.extend(got);
            }
        }
    }
    let distinct = scalars.iter().enumerate().all(|(i, x)| scalars[..i].iter().all(|y| y != x));
    out.push(check("scalars pairwise distinct", distinct));
    out
}

fn rep(d: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for kind in [ModuleKind::L0, ModuleKind::L1, ModuleKind::L01] {
        for sign in [Sign::Plus, Sign::Minus] {
            for n in 0..=d {
                let Ok(m) = build_module(kind, sign, n) else { continue };
                for rel in relations() {
                    let ok = m.word_sum_matrix(&rel.lhs) == m.word_sum_matrix(&rel.rhs);
                    out.push(check(format!("{} on {}", rel.name, m.spec), ok));
                }
            }
        }
    }
    out
}

fn weights(d: usize) -> Vec<Check> {
    let w = weight_multiplicities(d);
    let mut out = Vec::new();
    for r in 0..=d {
        for eps in [0u8, 1] {
            let got = w.get(&(d as i64 - 2 * r as i64, eps)).copied().unwrap_or(0);
            out.push(check(format!("r = {r}, eps = {eps}"), u128::from(got) == rhs_closed_form(d as u64, r as u64, eps)));
        }
    }
    let total: u64 = w.values().sum();
    out.push(check("total dimension", u128::from(total) == count_xi_tensor(2, d as u64)));
    out
}

fn combinatorics(d: usize) -> Vec<Check> {
    (1..=4u8)
        .map(|n| {
            let ok = enumerate_xi_tensor(n, d).len() as u128 == count_xi_tensor(u64::from(n), d as u64);
            check(format!("n = {n}"), ok)
        })
        .collect()
}
