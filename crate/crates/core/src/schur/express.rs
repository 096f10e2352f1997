//! Expressing every basis element of `MU_v(2,d)` through the generators.
//!
//! Basis elements are first written as combinations of words in the special
//! elements `1_r, e_r, f_r, x_r, T_{D(r,d-r),{(2,2)}}`, following the
//! constructive generation argument: diagonal labels are special, upper
//! triangular labels come from products of `e_r` and `x_r`, and the rest by
//! induction on `a21` using `f_r`.  Each step picks a product containing the
//! target with nonzero coefficient, whose other terms are already known, and
//! solves for the target.  Special words are then rewritten in `e, f, k, l`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::decorated::{enumerate_xi2, Deco, Label2};
use crate::field::{quantum_integer, RationalFunction as Rf};
use crate::linalg;
use crate::word::{GeneratorWord, Letter};

use super::chevalley::{e_r, f_r, one_r, x_r, y_r};
use super::element::SchurElement;
use super::special::{left_mul_special, left_mul_special_into, right_mul_special, special_kind};

/// A special element of `MU_v(2,d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpecialKey {
    One(u32),
    E(u32),
    F(u32),
    X(u32),
    Y(u32),
}

impl SpecialKey {
    pub fn label(self, d: u32) -> Label2 {
        match self {
            SpecialKey::One(r) => one_r(d, r),
            SpecialKey::E(r) => e_r(d, r),
            SpecialKey::F(r) => f_r(d, r),
            SpecialKey::X(r) => x_r(d, r),
            SpecialKey::Y(r) => y_r(d, r),
        }
    }

    /// The `r` with `T_key = T_key 1_r`.
    fn source_weight(self) -> u32 {
        match self {
            SpecialKey::F(r) => r + 1,
            SpecialKey::One(r) | SpecialKey::E(r) | SpecialKey::X(r) | SpecialKey::Y(r) => r,
        }
    }

    fn target_weight(self) -> u32 {
        match self {
            SpecialKey::E(r) => r + 1,
            SpecialKey::One(r) | SpecialKey::F(r) | SpecialKey::X(r) | SpecialKey::Y(r) => r,
        }
    }
}

/// A combination of products of special elements; a word `[k1, k2, ...]`
/// stands for `T_k1 T_k2 ...`.
pub type KeyExpr = BTreeMap<Vec<SpecialKey>, Rf>;

fn add_word(expr: &mut KeyExpr, word: Vec<SpecialKey>, c: Rf) {
    if c.is_zero() {
        return;
    }
    // Adjacent factors must have matching weights, else the product vanishes.
    if word.windows(2).any(|w| w[0].source_weight() != w[1].target_weight()) {
        return;
    }
    let word: Vec<SpecialKey> = if word.len() > 1 {
        let kept: Vec<SpecialKey> = word.iter().copied().filter(|k| !matches!(k, SpecialKey::One(_))).collect();
        if kept.is_empty() {
            vec![word[0]]
        } else {
            kept
        }
    } else {
        word
    };
    let entry = expr.entry(word);
    match entry {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

fn add_expr(target: &mut KeyExpr, src: &KeyExpr, c: &Rf) {
    for (w, x) in src {
        add_word(target, w.clone(), x * c);
    }
}

fn prefix(key: SpecialKey, src: &KeyExpr) -> KeyExpr {
    let mut out = KeyExpr::new();
    for (w, c) in src {
        let mut word = vec![key];
        word.extend_from_slice(w);
        add_word(&mut out, word, c.clone());
    }
    out
}

fn suffix(src: &KeyExpr, key: SpecialKey) -> KeyExpr {
    let mut out = KeyExpr::new();
    for (w, c) in src {
        let mut word = w.clone();
        word.push(key);
        add_word(&mut out, word, c.clone());
    }
    out
}

/// How a non-special label is reached: `left * T_base * right`.
struct Recipe {
    left: Option<SpecialKey>,
    base: Label2,
    right: Option<SpecialKey>,
}

fn deco_rank(d: Deco) -> u8 {
    match d {
        Deco::Empty => 0,
        Deco::D11 => 1,
        Deco::D12 => 2,
        Deco::D21 => 3,
        Deco::D12D21 => 4,
        Deco::D22 => 5,
    }
}

fn recipe(l: &Label2) -> Recipe {
    let [a11, a12, a21, a22] = l.a;
    let at = |a: [u32; 4], deco| Label2 { a, deco };
    use Deco::*;
    use SpecialKey::*;
    if a21 == 0 {
        let (r, m, s) = (a11, a12, a22);
        debug_assert!(m >= 1);
        let plain = l.with_deco(Empty);
        return match l.deco {
            Empty => Recipe { left: Some(E(r + m - 1)), base: at([r, m - 1, 0, s + 1], Empty), right: None },
            D11 => Recipe { left: None, base: plain, right: Some(X(r)) },
            D12 => Recipe { left: Some(X(r + m)), base: plain, right: None },
            D22 => Recipe { left: Some(Y(r + m)), base: plain, right: None },
            D21 | D12D21 => unreachable!("decoration needs a21 > 0"),
        };
    }
    let a1 = [a11, a12, a21 - 1, a22 + 1];
    let a3 = [a11 + 1, a12, a21 - 1, a22];
    let j = a11 + a21 - 1;
    match l.deco {
        Empty | D11 | D12 => Recipe { left: None, base: at(a1, l.deco), right: Some(F(j)) },
        D21 => Recipe { left: Some(F(a11 + a12)), base: at(a3, D11), right: None },
        D12D21 if a21 == 1 => Recipe { left: Some(F(a11 + a12)), base: at(a3, D12), right: None },
        D12D21 => Recipe { left: None, base: at(a1, D12D21), right: Some(F(j)) },
        D22 => Recipe { left: Some(Y(a11 + a12)), base: l.with_deco(Empty), right: None },
    }
}

/// Applies `T_w1 T_w2 ... * x`.
pub fn apply_keys(d: u32, word: &[SpecialKey], x: &SchurElement) -> SchurElement {
    let mut acc = x.clone();
    for k in word.iter().rev() {
        if acc.is_zero() {
            break;
        }
        let label = k.label(d);
        let kind = special_kind(&label).expect("special key");
        let mut next = SchurElement::zero(d);
        left_mul_special_into(&label, kind, &acc, &Rf::one(), &mut next);
        acc = next;
    }
    acc
}

/// Per-`d` table of special-word expressions for all of `Ξ_{2,d}`, plus the
/// data needed to rewrite special words in the Chevalley generators.
///
/// The table is built once and is read-only afterwards, so it can be shared
/// freely between threads.
#[derive(Debug, Clone)]
pub struct SchurAlgebra {
    d: u32,
    labels: Vec<Label2>,
    exprs: BTreeMap<Label2, KeyExpr>,
    /// `projector[r][m]`: coefficient of `k^m` in `1_r`.
    projector: Vec<Vec<Rf>>,
}

impl SchurAlgebra {
    pub fn new(d: u32) -> Self {
        assert!(d >= 1, "d must be positive");
        let labels = enumerate_xi2(d);
        let mut order = labels.clone();
        order.sort_by_key(|l| (l.a21(), l.a12(), l.a11(), deco_rank(l.deco)));

        let mut exprs: BTreeMap<Label2, KeyExpr> = BTreeMap::new();
        for l in &order {
            let mut single = KeyExpr::new();
            if l.is_diagonal() {
                let key = match l.deco {
                    Deco::Empty => SpecialKey::One(l.a11()),
                    Deco::D11 => SpecialKey::X(l.a11()),
                    Deco::D22 => SpecialKey::Y(l.a11()),
                    _ => unreachable!(),
                };
                single.insert(vec![key], Rf::one());
                exprs.insert(*l, single);
                continue;
            }
            let rec = recipe(l);
            let mut value = SchurElement::basis(rec.base);
            let mut expr = exprs.get(&rec.base).expect("recipe base is processed first").clone();
            if let Some(k) = rec.right {
                value = right_mul_special(&value, &k.label(d)).expect("special key");
                expr = suffix(&expr, k);
            }
            if let Some(k) = rec.left {
                value = left_mul_special(&k.label(d), &value).expect("special key");
                expr = prefix(k, &expr);
            }
            let lead = value.coeff(l);
            assert!(!lead.is_zero(), "recipe for {l} does not reach it");
            for (other, c) in value.terms() {
                if other == l {
                    continue;
                }
                let known = exprs.get(other).unwrap_or_else(|| panic!("recipe for {l} meets unknown {other}"));
                add_expr(&mut expr, known, &-c);
            }
            let inv = Rf::one() / lead;
            let mut scaled = KeyExpr::new();
            add_expr(&mut scaled, &expr, &inv);
            exprs.insert(*l, scaled);
        }

        // 1_r = Σ_m c_{r,m} k^m from k^m = Σ_r (v^(2r-d))^m 1_r.
        let n = d as usize + 1;
        let lambda: Vec<Rf> = (0..=d).map(|r| Rf::v_pow(2 * r as i64 - d as i64)).collect();
        let vander: Vec<Vec<Rf>> =
            (0..n).map(|s| (0..n).map(|m| lambda[s].pow(m as i64).expect("nonzero")).collect()).collect();
        let projector = (0..n)
            .map(|r| {
                let mut rhs = vec![Rf::zero(); n];
                rhs[r] = Rf::one();
                linalg::solve(&vander, &rhs).expect("Vandermonde matrix is invertible")
            })
            .collect();

        SchurAlgebra { d, labels, exprs, projector }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// `Ξ_{2,d}` in tie-break order.
    pub fn labels(&self) -> &[Label2] {
        &self.labels
    }

    pub fn identity(&self) -> SchurElement {
        SchurElement::identity(self.d)
    }

    /// The special-word expression of a basis element.
    pub fn key_expression(&self, label: &Label2) -> Option<&KeyExpr> {
        self.exprs.get(label)
    }

    /// `x * y` for arbitrary elements, by writing each basis element of `x` as
    /// special words and applying them to `y`.
    pub fn mul(&self, x: &SchurElement, y: &SchurElement) -> SchurElement {
        let mut out = SchurElement::zero(self.d);
        for (l, c) in x.terms() {
            let expr = &self.exprs[l];
            for (w, wc) in expr {
                let part = apply_keys(self.d, w, y);
                out.add_scaled(&part, &(c * wc));
            }
        }
        out
    }

    /// `1_r` as a combination of the words `k^m`, `0 <= m <= d`.
    pub fn projector_words(&self, r: u32) -> Vec<GeneratorWord> {
        self.projector[r as usize]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| GeneratorWord::new(c.clone(), vec![Letter::K; m]))
            .collect()
    }

    /// A special element with its weight projector stripped, in generator
    /// words: `e_r -> v^r e`, `f_r -> v^(d-1-r) f`, `x_r -> v^(2r) l - 1`,
    /// `1_r -> 1`, and `T_{D(r,d-r),{(2,2)}}` through the identity relating it
    /// to `f_r x_{r+1} e_r` and friends.
    fn bare_words(&self, key: SpecialKey) -> Vec<GeneratorWord> {
        let d = self.d as i64;
        let w = |c: Rf, ls: &[Letter]| GeneratorWord::new(c, ls.to_vec());
        match key {
            SpecialKey::One(_) => vec![w(Rf::one(), &[])],
            SpecialKey::E(r) => vec![w(Rf::v_pow(r as i64), &[Letter::E])],
            SpecialKey::F(r) => vec![w(Rf::v_pow(d - 1 - r as i64), &[Letter::F])],
            SpecialKey::X(r) => vec![w(Rf::v_pow(2 * r as i64), &[Letter::L]), w(Rf::from_int(-1), &[])],
            SpecialKey::Y(r) => {
                let f = self.bare_words(SpecialKey::F(r));
                let e = self.bare_words(SpecialKey::E(r));
                let x_up = self.bare_words(SpecialKey::X(r + 1));
                let fe = product(&f, &e);
                let mut out = product(&product(&f, &x_up), &e);
                out.extend(fe.iter().cloned());
                let ri = r as i64;
                let c = (Rf::v_pow(d - ri + 1) - Rf::v_pow(d - ri - 1)) * quantum_integer((d - ri) as u32);
                out.push(w(c.clone(), &[]));
                if r >= 1 {
                    let x = self.bare_words(SpecialKey::X(r));
                    let xfe = product(&x, &fe);
                    let mut inner = product(&xfe, &x);
                    inner.extend(xfe);
                    inner.extend(product(&fe, &x));
                    inner.extend(fe.iter().cloned());
                    let s = -Rf::v_pow(2 - 2 * ri);
                    out.extend(inner.into_iter().map(|g| GeneratorWord::new(&g.scalar * &s, g.letters)));
                    out.extend(x.into_iter().map(|g| GeneratorWord::new(&g.scalar * &c, g.letters)));
                } else {
                    let s = -Rf::v_pow(2);
                    out.extend(fe.into_iter().map(|g| GeneratorWord::new(&g.scalar * &s, g.letters)));
                }
                out
            }
        }
    }

    /// A special word rewritten in the generators.
    fn key_word_in_generators(&self, word: &[SpecialKey]) -> Vec<GeneratorWord> {
        let mut acc = vec![GeneratorWord::letters(&[])];
        for &k in word {
            acc = product(&acc, &self.bare_words(k));
        }
        let last = *word.last().expect("nonempty word");
        product(&acc, &self.projector_words(last.source_weight()))
    }

    /// Generator words whose sum equals `T_label`.
    pub fn express_in_generators(&self, label: &Label2) -> Vec<GeneratorWord> {
        let Some(expr) = self.exprs.get(label) else {
            return Vec::new();
        };
        let mut merged: BTreeMap<Vec<Letter>, Rf> = BTreeMap::new();
        for (w, c) in expr {
            for g in self.key_word_in_generators(w) {
                let e = merged.entry(normalize_k(&g.letters)).or_default();
                *e = &*e + &(&g.scalar * c);
            }
        }
        merged.into_iter().filter(|(_, c)| !c.is_zero()).map(|(ls, c)| GeneratorWord::new(c, ls)).collect()
    }

    /// `T_{D(r,d-r),{(2,2)}}` evaluated from
    /// `f_r x_{r+1} e_r - v^(2-2r)(x_r f_r e_r x_r + x_r f_r e_r + f_r e_r x_r + f_r e_r)
    ///  + f_r e_r + (v^(d-r+1) - v^(d-r-1))[d-r](1_r + x_r)`,
    /// where terms containing `x_0` are absent.
    pub fn t22_diagonal(&self, r: u32) -> SchurElement {
        assert!(r < self.d, "r must be below d");
        let d = self.d;
        let id = SchurElement::identity(d);
        let chain = |keys: &[SpecialKey]| apply_keys(d, keys, &id);
        use SpecialKey::*;
        let ri = r as i64;
        let di = d as i64;
        let mut out = chain(&[F(r), X(r + 1), E(r)]);
        let fe = chain(&[F(r), E(r)]);
        let c = (Rf::v_pow(di - ri + 1) - Rf::v_pow(di - ri - 1)) * quantum_integer(d - r);
        let mut bracket = fe.clone();
        let mut tail = chain(&[One(r)]);
        if r >= 1 {
            bracket = bracket.add(&chain(&[X(r), F(r), E(r), X(r)]));
            bracket = bracket.add(&chain(&[X(r), F(r), E(r)]));
            bracket = bracket.add(&chain(&[F(r), E(r), X(r)]));
            tail = tail.add(&chain(&[X(r)]));
        }
        out.add_scaled(&bracket, &-Rf::v_pow(2 - 2 * ri));
        out.add_scaled(&fe, &Rf::one());
        out.add_scaled(&tail, &c);
        out
    }
}

/// Concatenates every word of `a` with every word of `b`.
fn product(a: &[GeneratorWord], b: &[GeneratorWord]) -> Vec<GeneratorWord> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.then(y));
        }
    }
    out
}

/// Cancels adjacent `k k^-1` pairs.
fn normalize_k(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        match (out.last(), l) {
            (Some(Letter::K), Letter::KInv) | (Some(Letter::KInv), Letter::K) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}
