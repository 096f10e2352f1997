use super::*;
use alloc::collections::BTreeMap;
use alloc::format;
use crate::field::quantum_integer_signed;
use crate::schur::relations;
use alloc::vec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_specs(max_n: u32) -> Vec<ModuleSpec> {
    let mut out = Vec::new();
    for kind in [ModuleKind::L0, ModuleKind::L1, ModuleKind::L01] {
        for sign in [Sign::Plus, Sign::Minus] {
            for n in 0..=max_n {
                if let Ok(s) = ModuleSpec::new(kind, sign, n) {
                    out.push(s);
                }
            }
        }
    }
    out
}

fn w(sign: Sign, a: i64, eps: u8) -> Weight {
    Weight { sign, a, eps }
}

fn spec(s: &str) -> ModuleSpec {
    s.parse().unwrap()
}

#[test]
fn names_round_trip() {
    for s in all_specs(4) {
        assert_eq!(spec(&s.to_string()), s);
    }
    assert!("L+(0,01)".parse::<ModuleSpec>().is_err());
    assert!("L*(1,0)".parse::<ModuleSpec>().is_err());
    assert_eq!(build(spec("L+(3,01)")).dim(), 6);
}

#[test]
fn relations_hold_as_matrices() {
    for s in all_specs(4) {
        let m = build(s);
        for rel in relations() {
            assert_eq!(m.word_sum_matrix(&rel.lhs), m.word_sum_matrix(&rel.rhs), "{} on {s}", rel.name);
        }
    }
}

#[test]
fn action_examples() {
    let m = build(spec("L+(1,01)"));
    let e = GeneratorWord::new(Rf::one(), vec![Letter::E]);
    assert_eq!(m.act_word(&e, &m.basis_vector(1, 1).unwrap()).unwrap(), m.basis_vector(0, 0).unwrap());
    for n in 1..=4 {
        let m = build(spec(&format!("L+({n},01)")));
        let f = GeneratorWord::new(Rf::one(), vec![Letter::F]);
        let got = m.act_word(&f, &m.basis_vector(0, 0).unwrap()).unwrap();
        let expect: Vec<Rf> =
            m.basis_vector(1, 0).unwrap_or_else(|| vec![Rf::zero(); m.dim()]).iter().zip(m.basis_vector(1, 1).unwrap()).map(|(a, b)| a + &b).collect();
        assert_eq!(got, expect, "n = {n}");
        let l = GeneratorWord::new(Rf::one(), vec![Letter::L]);
        for i in 0..n {
            let x = m.basis_vector(i, 0).unwrap();
            assert!(m.act_word(&l, &x).unwrap().iter().all(Rf::is_zero));
        }
    }
    let m = build(spec("L+(3,1)"));
    assert_eq!(m.ell, Matrix::identity(4));
    assert!(matches!(m.act_word(&GeneratorWord::new(Rf::one(), vec![]), &[Rf::one()]), Err(RepError::DimensionMismatch { .. })));
}

#[test]
fn ef_minus_fe_on_l01() {
    for sign in [Sign::Plus, Sign::Minus] {
        for n in 1..=5 {
            let m = build_module(ModuleKind::L01, sign, n).unwrap();
            let comm = m.e.mul(&m.f).sub(&m.f.mul(&m.e));
            for (col, &(i, _)) in m.basis.iter().enumerate() {
                let expect = &sign.as_rf() * &quantum_integer_signed(n as i64 - 2 * i as i64);
                for row in 0..m.dim() {
                    let c = if row == col { expect.clone() } else { Rf::zero() };
                    assert_eq!(comm.get(row, col), &c);
                }
            }
        }
    }
}

#[test]
fn pbw_action_is_multiplicative() {
    use crate::pbw::{multiply, normalize_letters};
    let m = build(spec("L-(3,01)"));
    let x = normalize_letters(&[Letter::E, Letter::L, Letter::F, Letter::F]);
    let y = normalize_letters(&[Letter::F, Letter::K, Letter::E, Letter::L, Letter::E]);
    assert_eq!(m.pbw_matrix(&multiply(&x, &y)), m.pbw_matrix(&x).mul(&m.pbw_matrix(&y)));
}

#[test]
fn weight_tables() {
    let t = weight_table(&build(spec("L+(2,01)"))).unwrap();
    let expect: WeightTable =
        [(w(Sign::Plus, 2, 0), 1), (w(Sign::Plus, 0, 0), 1), (w(Sign::Plus, 0, 1), 1), (w(Sign::Plus, -2, 1), 1)]
            .into_iter()
            .collect();
    assert_eq!(t, expect);
    let t = weight_table(&build(spec("L+(0,0)"))).unwrap();
    assert_eq!(t, [(w(Sign::Plus, 0, 0), 1)].into_iter().collect());
    let t = weight_table(&build(spec("L-(1,1)"))).unwrap();
    assert_eq!(t, [(w(Sign::Minus, 1, 1), 1), (w(Sign::Minus, -1, 1), 1)].into_iter().collect());
    for s in all_specs(4) {
        assert_eq!(weight_table(&build(s)).unwrap(), s.weights(), "{s}");
    }
}

fn casimir_formula(s: ModuleSpec) -> Rf {
    let n = s.n as i64;
    let num = match s.kind {
        ModuleKind::L0 => Rf::v_pow(n) + Rf::v_pow(-n - 2),
        ModuleKind::L1 => Rf::v_pow(n + 2) + Rf::v_pow(-n),
        ModuleKind::L01 => Rf::v_pow(n) + Rf::v_pow(-n),
    };
    &s.sign.as_rf() * &(num / (Rf::v_pow(1) - Rf::v_pow(-1)))
}

#[test]
fn casimir_scalars() {
    let one01 = casimir_scalar(&build(spec("L+(1,01)"))).unwrap();
    assert_eq!(one01, (Rf::v_pow(1) + Rf::v_pow(-1)) / (Rf::v_pow(1) - Rf::v_pow(-1)));
    for s in all_specs(4) {
        assert_eq!(casimir_scalar(&build(s)).unwrap(), casimir_formula(s), "{s}");
    }
}

#[test]
fn restriction_to_usl2() {
    for sign in [Sign::Plus, Sign::Minus] {
        for n in 2..=5 {
            let k_weights = |t: &WeightTable| {
                let mut out: BTreeMap<(Sign, i64), u64> = BTreeMap::new();
                for (wt, m) in t.iter() {
                    *out.entry((wt.sign, wt.a)).or_insert(0) += m;
                }
                out
            };
            let lhs = k_weights(&weight_table(&build_module(ModuleKind::L01, sign, n).unwrap()).unwrap());
            let mut sum = weight_table(&build_module(ModuleKind::L0, sign, n).unwrap()).unwrap();
            sum.merge(&weight_table(&build_module(ModuleKind::L0, sign, n - 2).unwrap()).unwrap(), 1);
            assert_eq!(lhs, k_weights(&sum));
        }
    }
}

#[test]
fn simplicity_probe() {
    for s in all_specs(3) {
        let m = build(s);
        let one_minus_l = Matrix::identity(m.dim()).sub(&m.ell);
        let ops = [m.e.clone(), m.f.clone(), m.ell.mul(&m.f), one_minus_l.mul(&m.f)];
        for &(i, eps) in &m.basis {
            assert_eq!(closure_dim(&ops, &m.basis_vector(i, eps).unwrap()), m.dim(), "{s} from m_({i},{eps})");
        }
    }
}

#[test]
fn decomposition_examples() {
    let mut t = spec("L+(1,1)").weights();
    t.merge(&spec("L+(1,01)").weights(), 1);
    let expect: WeightTable =
        [(w(Sign::Plus, 1, 1), 1), (w(Sign::Plus, -1, 1), 2), (w(Sign::Plus, 1, 0), 1)].into_iter().collect();
    assert_eq!(t, expect);
    assert_eq!(decompose_weight_table(&t).unwrap(), vec![(spec("L+(1,1)"), 1), (spec("L+(1,01)"), 1)]);
    assert_eq!(decompose_weight_table(&spec("L+(0,0)").weights()).unwrap(), vec![(spec("L+(0,0)"), 1)]);
    let bad: WeightTable = [(w(Sign::Plus, 1, 1), 1)].into_iter().collect();
    assert!(matches!(decompose_weight_table(&bad), Err(RepError::NotAModuleTable(_))));
}

#[test]
fn decomposition_recovers_random_sums() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let specs = all_specs(6);
    for _ in 0..40 {
        let mut want: BTreeMap<ModuleSpec, u64> = BTreeMap::new();
        for _ in 0..rng.gen_range(1..=6) {
            *want.entry(specs[rng.gen_range(0..specs.len())]).or_insert(0) += 1;
        }
        let mut t = WeightTable::new();
        for (s, m) in &want {
            t.merge(&s.weights(), *m);
        }
        let got = decompose_weight_table(&t).unwrap();
        assert_eq!(got, want.into_iter().collect::<Vec<_>>());
    }
}
