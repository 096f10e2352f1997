//! Acceptance checks, one line per criterion.  Every comparison is exact.
//!
//! Run with `cargo test -p mirabolic-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use mirabolic_core::decorated::{
    binomial, count_xi_tensor, enumerate_xi2, enumerate_xi_tensor, DecoratedMatrix, Label2, MarkedSequence,
};
use mirabolic_core::field::{quantum_integer_signed, RationalFunction as Rf};
use mirabolic_core::linalg;
use mirabolic_core::oracle::{first_primes, structure_constants};
use mirabolic_core::pbw::{
    casimir_element, commutator, left_mul_generator, move_out, normalize_letters, project_to_schur, PbwClass,
    PbwElement, PbwMonomial, Side,
};
use mirabolic_core::rep::{build_module, casimir_scalar, IrreducibleModule, ModuleKind, Sign};
use mirabolic_core::schur::{apply_letter, apply_words, check_relations, relations, y_r, SchurAlgebra, SchurElement};
use mirabolic_core::tensor::{check_left_module, inversion_sum, rhs_closed_form, weight_multiplicities};
use mirabolic_core::word::{GeneratorWord, Letter};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_relations() -> Outcome {
    for d in 1..=5 {
        for (name, ok) in check_relations(d) {
            ensure(ok, || format!("relation {name} fails at d = {d}"))?;
        }
    }
    Ok("10 relations, d = 1..5".into())
}

fn oracle_pair(alg: &SchurAlgebra, primes: &[u64], x: &Label2, y: &Label2) -> Result<(), String> {
    let engine = alg.mul(&SchurElement::basis(*x), &SchurElement::basis(*y));
    let (oracle, _) = structure_constants(x, y, primes).map_err(|e| format!("{x} * {y}: {e}"))?;
    ensure(engine == oracle, || format!("{x} * {y}: engine {engine}, oracle {oracle}"))
}

fn c2_oracle() -> Outcome {
    let labels = enumerate_xi2(2);
    let alg = SchurAlgebra::new(2);
    let primes = first_primes(6);
    let mut all = 0;
    for x in &labels {
        for y in labels.iter().filter(|y| x.co() == y.ro()) {
            oracle_pair(&alg, &primes, x, y)?;
            all += 1;
        }
    }
    let labels = enumerate_xi2(3);
    let alg = SchurAlgebra::new(3);
    let primes = first_primes(11);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut sampled = 0;
    while sampled < 50 {
        let x = labels[rng.gen_range(0..labels.len())];
        let y = labels[rng.gen_range(0..labels.len())];
        if x.co() != y.ro() {
            continue;
        }
        oracle_pair(&alg, &primes, &x, &y)?;
        sampled += 1;
    }
    Ok(format!("d = 2: {all} pairs, d = 3: {sampled} random pairs"))
}

fn c3_express() -> Outcome {
    let mut n = 0;
    for d in 1..=3 {
        let alg = SchurAlgebra::new(d);
        let id = SchurElement::identity(d);
        for l in alg.labels() {
            let value = apply_words(&alg.express_in_generators(l), &id);
            ensure(value == SchurElement::basis(*l), || format!("label {l}, d = {d}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} labels, d = 1..3"))
}

fn c4_t22() -> Outcome {
    for d in 1..=4 {
        let alg = SchurAlgebra::new(d);
        for r in 0..d {
            ensure(alg.t22_diagonal(r) == SchurElement::basis(y_r(d, r)), || format!("d = {d}, r = {r}"))?;
        }
    }
    Ok("0 <= r < d, d = 1..4".into())
}

fn monomial_set() -> Vec<PbwMonomial> {
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

fn c5a_move_out() -> Outcome {
    let id = SchurElement::identity(6);
    for a in 0..=5u32 {
        for b in 0..=5u32 {
            if a + b == 0 {
                continue;
            }
            for (side, x) in [(Side::E, Letter::E), (Side::F, Letter::F)] {
                let mut letters = vec![x; a as usize];
                letters.push(Letter::L);
                letters.extend(vec![x; b as usize]);
                let rhs = move_out(side, a, b);
                ensure(normalize_letters(&letters) == rhs, || format!("{x}^{a} l {x}^{b} in PBW form"))?;
                // Second route: both sides evaluated in MU_v(2,6).
                let lhs6 = apply_words(&[GeneratorWord::letters(&letters)], &id);
                ensure(lhs6 == project_to_schur(6, &rhs), || format!("{x}^{a} l {x}^{b} in MU_v(2,6)"))?;
            }
        }
    }
    Ok("a, b <= 5, PBW engine and MU_v(2,6)".into())
}

/// Rank of the images of [`monomial_set`] in `MU_v(2,d)`.  The rank over
/// `Q(v)` is at least the rank after putting `v = 3`, so full rank at `v = 3`
/// proves independence.
fn image_rank(d: u32) -> Result<(usize, usize), String> {
    let labels = enumerate_xi2(d);
    let monomials = monomial_set();
    let images: Vec<SchurElement> = monomials.iter().map(|m| project_to_schur(d, &PbwElement::monomial(*m))).collect();
    let at = BigRational::from_integer(BigInt::from(3));
    let mut rows = Vec::with_capacity(images.len());
    for (m, x) in monomials.iter().zip(&images) {
        let mut row = Vec::with_capacity(labels.len());
        for l in &labels {
            row.push(x.coeff(l).eval(&at).ok_or_else(|| format!("coefficient of {m} has a pole at v = 3"))?);
        }
        rows.push(row);
    }
    Ok((linalg::rank(&rows), monomials.len()))
}

fn c5b_independence() -> Outcome {
    let (rank, n) = image_rank(6)?;
    ensure(rank == n, || format!("rank {rank} of {n} images in MU_v(2,6)"))?;
    Ok(format!("{n} monomials, rank {rank} in MU_v(2,6)"))
}

/// The same monomials at the first degree with enough weight spaces.
fn c5b_at_d7() -> Outcome {
    let (rank, n) = image_rank(7)?;
    ensure(rank == n, || format!("rank {rank} of {n} images in MU_v(2,7)"))?;
    Ok(format!("{n} monomials, rank {rank} in MU_v(2,7)"))
}

fn c5c_projection() -> Outcome {
    let d = 5;
    let monomials = monomial_set();
    for m in &monomials {
        let x = PbwElement::monomial(*m);
        let img = project_to_schur(d, &x);
        for g in Letter::ALL {
            let lhs = project_to_schur(d, &left_mul_generator(g, &x));
            ensure(lhs == apply_letter(g, &img), || format!("{g} * {m}"))?;
        }
    }
    Ok(format!("{} monomials x 5 generators, d = 5", monomials.len()))
}

fn all_modules(max_n: u32) -> Vec<IrreducibleModule> {
    let mut out = Vec::new();
    for kind in [ModuleKind::L0, ModuleKind::L1, ModuleKind::L01] {
        for sign in [Sign::Plus, Sign::Minus] {
            for n in 0..=max_n {
                if let Ok(m) = build_module(kind, sign, n) {
                    out.push(m);
                }
            }
        }
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

fn c6_casimir() -> Outcome {
    let c = casimir_element();
    for g in Letter::ALL {
        ensure(commutator(&c, &PbwElement::generator(g)).is_zero(), || format!("[C, {g}] != 0"))?;
    }
    let mut scalars: Vec<(String, Rf)> = Vec::new();
    for m in all_modules(8) {
        let s = casimir_scalar(&m).map_err(|e| format!("{}: {e}", m.spec))?;
        if m.spec.n <= 6 {
            let expect = casimir_formula(m.spec.kind, m.spec.sign, m.spec.n as i64);
            ensure(s == expect, || format!("{}: scalar {s}, formula {expect}", m.spec))?;
        }
        scalars.push((m.spec.to_string(), s));
    }
    for (i, (a, x)) in scalars.iter().enumerate() {
        for (b, y) in &scalars[..i] {
            ensure(x != y, || format!("{a} and {b} share the scalar {x}"))?;
        }
    }
    Ok(format!("central; formulas for n <= 6; {} scalars distinct for n <= 8", scalars.len()))
}

/// Highest weights `(sign, a)` of the restriction to `U_v(sl2)`, with
/// multiplicity: the dimension of `ker e` inside each `k`-eigenspace.
fn highest_weights(m: &IrreducibleModule) -> Vec<(i64, usize)> {
    let dim = m.dim() as i64;
    let s = m.spec.sign.as_rf();
    let mut out = Vec::new();
    for a in -dim..=dim {
        let lambda = &s * &Rf::v_pow(a);
        let shifted = m.k.sub(&mirabolic_core::rep::Matrix::scalar(m.dim(), &lambda));
        let mut rows: Vec<Vec<Rf>> = shifted.rows().to_vec();
        rows.extend(m.e.rows().iter().cloned());
        let nullity = m.dim() - linalg::rank(&rows);
        if nullity > 0 {
            out.push((a, nullity));
        }
    }
    out
}

fn c7_representations() -> Outcome {
    let modules = all_modules(6);
    for m in &modules {
        for rel in relations() {
            ensure(m.word_sum_matrix(&rel.lhs) == m.word_sum_matrix(&rel.rhs), || format!("{} on {}", rel.name, m.spec))?;
        }
    }
    for m in modules.iter().filter(|m| m.spec.kind == ModuleKind::L01) {
        let comm = m.e.mul(&m.f).sub(&m.f.mul(&m.e));
        let n = m.spec.n as i64;
        for (col, &(i, eps)) in m.basis.iter().enumerate() {
            let expect = &m.spec.sign.as_rf() * &quantum_integer_signed(n - 2 * i as i64);
            for row in 0..m.dim() {
                let want = if row == col { expect.clone() } else { Rf::zero() };
                ensure(comm.get(row, col) == &want, || format!("(ef - fe) m_({i},{eps}) on {}", m.spec))?;
            }
        }
        if (2..=6).contains(&m.spec.n) {
            let got = highest_weights(m);
            let expect = vec![(n - 2, 1), (n, 1)];
            ensure(got == expect, || format!("{} restricts with highest weights {got:?}", m.spec))?;
        }
    }
    Ok(format!("{} modules, n <= 6", modules.len()))
}

fn c8_weights() -> Outcome {
    for d in 1..=8usize {
        let w = weight_multiplicities(d);
        for r in 0..=d {
            for eps in [0u8, 1] {
                let got = w.get(&(d as i64 - 2 * r as i64, eps)).copied().unwrap_or(0);
                let closed = rhs_closed_form(d as u64, r as u64, eps);
                ensure(u128::from(got) == closed, || format!("d = {d}, r = {r}, eps = {eps}: {got} vs {closed}"))?;
            }
        }
        let total: u64 = w.values().sum();
        ensure(u128::from(total) == count_xi_tensor(2, d as u64), || format!("total at d = {d}"))?;
    }
    for d in 2..=10usize {
        for r in 1..d {
            let (d64, r64) = (d as u64, r as u64);
            let lhs = inversion_sum(d, r);
            let mid = binomial(r64 + 1, 2) * binomial(d64, r64 + 1);
            let right = binomial(d64, 2) * binomial(d64 - 2, r64 - 1);
            ensure(lhs == mid && mid == right, || format!("inversion sum d = {d}, r = {r}"))?;
        }
    }
    Ok("weights and totals d <= 8, inversion sums d <= 10".into())
}

fn c9_conjecture() -> Outcome {
    let mut totals = Vec::new();
    for d in 1..=3 {
        let report = check_left_module(d);
        ensure(report.conjecture_match, || format!("d = {d}: {:?}", report.mismatches))?;
        ensure(report.decomposition == report.predicted, || format!("d = {d}: tables differ"))?;
        ensure(report.status() == "conjecture-consistent", || format!("d = {d}: label {}", report.status()))?;
        totals.push(report.total_dim);
    }
    ensure(totals[1] == 13 && totals[2] == 38, || format!("totals {totals:?}"))?;
    Ok(format!("conjecture-consistent for d = 1, 2, 3; totals {totals:?}"))
}

fn c10_combinatorics() -> Outcome {
    for n in 1..=4u8 {
        for d in 0..=6usize {
            let listed = enumerate_xi_tensor(n, d).len() as u128;
            let formula = count_xi_tensor(u64::from(n), d as u64);
            ensure(listed == formula, || format!("n = {n}, d = {d}: {listed} listed, formula {formula}"))?;
        }
    }
    let x = MarkedSequence::new(vec![2, 3, 3, 1, 2], vec![2, 4]);
    let rows = vec![vec![0, 0, 0, 1, 0], vec![1, 0, 0, 0, 1], vec![0, 1, 1, 0, 0]];
    let expect = DecoratedMatrix::from_rows(&rows, vec![(1, 4), (3, 2)]).map_err(|e| e.to_string())?;
    ensure(x.to_matrix(3) == expect, || "(23312,{2,4}) maps to the wrong matrix".into())?;
    ensure(MarkedSequence::from_matrix(&expect).as_ref() == Ok(&x), || "matrix does not map back".into())?;
    Ok("n <= 4, d <= 6; (23312,{2,4}) round-trips".into())
}

/// Criteria that fail for a documented reason.  At d = 6 there are too few
/// weight spaces: `l 1_0 = 1_0` gives `e^2 l 1_0 = e^2 1_0`, so the fifteen
/// monomials `e^2 k^t`, `l e^2 k^t`, `e^2 l k^t` span only fourteen
/// dimensions (19 relations in all).  Full rank holds from d = 7 on.
const KNOWN_FAILURES: &[&str] = &["5b"];

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Option<Duration>); 13] = [
        ("1", c1_relations, None),
        ("2", c2_oracle, None),
        ("3", c3_express, None),
        ("4", c4_t22, None),
        ("5a", c5a_move_out, None),
        ("5b", c5b_independence, None),
        ("5b+", c5b_at_d7, None),
        ("5c", c5c_projection, None),
        ("6", c6_casimir, None),
        ("7", c7_representations, None),
        ("8", c8_weights, Some(Duration::from_secs(30))),
        ("9", c9_conjecture, None),
        ("10", c10_combinatorics, None),
    ];
    let mut failed = Vec::new();
    let mut unexpected = Vec::new();
    for (id, f, limit) in criteria {
        let start = Instant::now();
        let mut outcome = f();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(limit)) = (&outcome, limit) {
            if elapsed > limit {
                outcome = Err(format!("took {elapsed:.1?}, limit {limit:?}"));
            }
        }
        let known = KNOWN_FAILURES.contains(&id);
        match outcome {
            Ok(msg) => {
                println!("PASS criterion {id:<4} {msg} ({elapsed:.1?})");
                if known {
                    unexpected.push(format!("{id} passed but is listed as a known failure"));
                }
            }
            Err(msg) => {
                let tag = if known { " [known]" } else { "" };
                println!("FAIL criterion {id:<4} {msg} ({elapsed:.1?}){tag}");
                failed.push(id);
                if !known {
                    unexpected.push(format!("{id} failed"));
                }
            }
        }
    }
    println!("{} of {} criteria failed: {:?}", failed.len(), criteria.len(), failed);
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        for u in &unexpected {
            println!("unexpected: {u}");
        }
        ExitCode::FAILURE
    }
}
