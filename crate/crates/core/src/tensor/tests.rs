use super::*;
use crate::decorated::{count_xi_tensor, enumerate_xi_tensor, Deco, Label2};
use crate::oracle::{first_primes, tensor_canonical_representative, tensor_orbit_invariant, tensor_structure_constants};

fn ms(seq: &[u8], marks: &[usize]) -> MarkedSequence {
    MarkedSequence::new(seq.to_vec(), marks.to_vec())
}

fn basis(seq: &[u8], marks: &[usize]) -> TensorElement {
    TensorElement::basis(ms(seq, marks))
}

fn spec(s: &str) -> ModuleSpec {
    s.parse().unwrap()
}

#[test]
fn k_examples() {
    for marks in [&[][..], &[1], &[2], &[1, 2]] {
        assert_eq!(k_action(&basis(&[2, 1], marks)), basis(&[2, 1], marks));
    }
    assert_eq!(k_action(&basis(&[1, 1, 1], &[])), basis(&[1, 1, 1], &[]).scale(&Rf::v_pow(3)));
    assert_eq!(k_action(&basis(&[2], &[])), basis(&[2], &[]).scale(&Rf::v_pow(-1)));
}

#[test]
fn ell_examples() {
    let sum = |extra: &[&[usize]]| {
        let mut t = TensorElement::zero(2);
        for m in extra {
            t.add_term(ms(&[2, 1], m), Rf::one());
        }
        t
    };
    let v2 = Rf::v_pow(-2);
    assert_eq!(ell_basis(&ms(&[2, 1], &[])), sum(&[&[], &[2]]).scale(&v2));
    assert_eq!(ell_basis(&ms(&[2, 1], &[1])), sum(&[&[1], &[1, 2]]).scale(&v2));
    let q1 = Rf::v_pow(2) - Rf::one();
    assert_eq!(ell_basis(&ms(&[2, 1], &[2])), sum(&[&[], &[2]]).scale(&(&v2 * &q1)));
}

#[test]
fn ell_is_idempotent_and_commutes_with_k() {
    for d in 1..=5 {
        for x in enumerate_xi_tensor(2, d) {
            let t = TensorElement::basis(x.clone());
            let l = ell_action(&t);
            assert_eq!(ell_action(&l), l, "{x}");
            assert_eq!(k_action(&l), ell_action(&k_action(&t)), "{x}");
            assert!(l.terms().all(|(y, _)| y.seq == x.seq), "{x} leaves its block");
        }
    }
}

#[test]
fn ell_matches_point_counts() {
    for d in 1..=3usize {
        let primes = first_primes(d + 3);
        for x in enumerate_xi_tensor(2, d) {
            let a = x.seq.iter().filter(|&&c| c == 1).count() as u32;
            let mut expect = TensorElement::basis(x.clone());
            if a > 0 {
                let key = Label2::diag(a, d as u32 - a, Deco::D11);
                let (terms, _) = tensor_structure_constants(&key, &x, &primes, d + 1).unwrap();
                for (y, c) in terms {
                    expect.add_term(y, c);
                }
                expect = expect.scale(&Rf::v_pow(-2 * a as i64));
            }
            assert_eq!(ell_basis(&x), expect, "{x}");
        }
    }
}

#[test]
fn tensor_representatives_round_trip() {
    for d in 1..=3 {
        for x in enumerate_xi_tensor(2, d) {
            for p in [2, 3] {
                assert_eq!(tensor_orbit_invariant(&tensor_canonical_representative(&x, p)).unwrap(), x);
            }
        }
    }
}

#[test]
fn block_ranks_match_formulas() {
    for d in 1..=6 {
        for b in block_ranks(d) {
            let st = sequence_stats(&b.seq);
            assert_eq!(b.dim, d + 1 + st.inversions);
            assert_eq!(b.rank, 1 + st.twos);
            assert_eq!(b.dim - b.rank, d - st.twos + st.inversions);
        }
    }
}

#[test]
fn weight_examples() {
    let w1 = weight_multiplicities(1);
    let expect: BTreeMap<(i64, u8), u64> = [((1, 1), 1), ((-1, 1), 2), ((1, 0), 1), ((-1, 0), 0)].into_iter().collect();
    assert_eq!(w1, expect);
    let w3 = weight_multiplicities(3);
    assert_eq!((w3[&(1, 1)], w3[&(1, 0)]), (6, 9));
    assert_eq!(weight_multiplicities(2).values().sum::<u64>(), 13);
    assert_eq!(rhs_closed_form(3, 1, 1), 6);
    assert_eq!(rhs_closed_form(3, 0, 1), 1);
    assert_eq!(rhs_closed_form(4, 2, 0), 24);
    for d in 1..=6 {
        let w = weight_multiplicities(d);
        for r in 0..=d {
            for eps in [0, 1] {
                assert_eq!(w[&(d as i64 - 2 * r as i64, eps)] as u128, rhs_closed_form(d as u64, r as u64, eps));
            }
        }
        assert_eq!(w.values().sum::<u64>() as u128, count_xi_tensor(2, d as u64));
    }
}

#[test]
fn inversion_sums() {
    for d in 2..=8usize {
        for r in 1..d {
            let closed = binomial(r as u64 + 1, 2) * binomial(d as u64, r as u64 + 1);
            assert_eq!(inversion_sum(d, r), closed);
            assert_eq!(closed, binomial(d as u64, 2) * binomial(d as u64 - 2, r as u64 - 1));
        }
    }
}

#[test]
fn syt_examples() {
    assert_eq!(syt_count(&[1]), BigUint::from(1u32));
    assert_eq!(syt_count(&[2, 1]), BigUint::from(2u32));
    assert_eq!(syt_count(&[3, 2]), BigUint::from(5u32));
    assert_eq!(syt_count(&[]), BigUint::from(1u32));
}

#[test]
fn conjecture_tables() {
    assert_eq!(conjecture_table(1), vec![(spec("L+(1,1)"), 1), (spec("L+(1,01)"), 1)]);
    let mut two = vec![(spec("L+(2,1)"), 1), (spec("L+(0,1)"), 1), (spec("L+(2,01)"), 2), (spec("L+(0,0)"), 1)];
    two.sort();
    assert_eq!(conjecture_table(2), two);
    for d in 1..=3 {
        let report = check_left_module(d);
        assert!(report.conjecture_match, "{:?}", report.mismatches);
        assert_eq!(report.status(), "conjecture-consistent");
        assert_eq!(report.decomposition, report.predicted);
        let dims: u64 = report.decomposition.iter().map(|(s, m)| s.dim() as u64 * m).sum();
        assert_eq!(dims, report.total_dim);
    }
    assert_eq!(check_left_module(2).total_dim, 13);
    assert_eq!(check_left_module(3).total_dim, 38);
}
