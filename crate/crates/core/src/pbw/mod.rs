//! The algebra `MU_v(2)` in its PBW basis.
//!
//! Elements are combinations of the monomials
//! `f^r e^s k^t`, `l f^r e^s k^t`, `f^r e^s l k^t`, `l f^r e^s l k^t`,
//! `f^r l e^s k^t`, `e^s l f^r k^t`.  Products are computed by left
//! multiplication with single generators, case by case: `k` is pushed to the
//! right, `e f` is straightened as in `U_v(sl_2)`, `l` collisions use
//! `l^2 = l`, `l e l = l e`, `l f l = f l`, and an `l` between two powers of
//! `e` (or of `f`) is moved out with the two-term identity of
//! [`move_out`].

mod usl2;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{quantum_integer, RationalFunction as Rf};
use crate::schur::{apply_words, SchurElement};
use crate::word::{GeneratorWord, Letter};

use usl2::{ef_to_fe, fe_left_e, fe_to_ef, UTerms};

/// Shape of a PBW monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PbwClass {
    /// `f^r e^s k^t`
    B0,
    /// `l f^r e^s k^t`
    B1,
    /// `f^r e^s l k^t`, `(r, s) != (0, 0)`
    B2,
    /// `l f^r e^s l k^t`, `r, s >= 1`
    B3,
    /// `f^r l e^s k^t`, `r, s >= 1`
    B4,
    /// `e^s l f^r k^t`, `r, s >= 1`
    B5,
}

impl PbwClass {
    pub const ALL: [PbwClass; 6] =
        [PbwClass::B0, PbwClass::B1, PbwClass::B2, PbwClass::B3, PbwClass::B4, PbwClass::B5];

    pub fn index(self) -> usize {
        self as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwMonomial {
    pub class: PbwClass,
    pub r: u32,
    pub s: u32,
    pub t: i64,
}

impl PbwMonomial {
    /// Returns `None` if the exponents violate the class constraints.
    pub fn new(class: PbwClass, r: u32, s: u32, t: i64) -> Option<Self> {
        let ok = match class {
            PbwClass::B0 | PbwClass::B1 => true,
            PbwClass::B2 => (r, s) != (0, 0),
            PbwClass::B3 | PbwClass::B4 | PbwClass::B5 => r >= 1 && s >= 1,
        };
        ok.then_some(PbwMonomial { class, r, s, t })
    }

    pub fn one() -> Self {
        PbwMonomial { class: PbwClass::B0, r: 0, s: 0, t: 0 }
    }

    /// The monomial as a word in the generators.
    pub fn letters(&self) -> Vec<Letter> {
        use Letter::*;
        let pow = |l: Letter, n: u32| core::iter::repeat_n(l, n as usize);
        let mut w: Vec<Letter> = Vec::new();
        match self.class {
            PbwClass::B0 => w.extend(pow(F, self.r).chain(pow(E, self.s))),
            PbwClass::B1 => w.extend(pow(L, 1).chain(pow(F, self.r)).chain(pow(E, self.s))),
            PbwClass::B2 => w.extend(pow(F, self.r).chain(pow(E, self.s)).chain(pow(L, 1))),
            PbwClass::B3 => w.extend(pow(L, 1).chain(pow(F, self.r)).chain(pow(E, self.s)).chain(pow(L, 1))),
            PbwClass::B4 => w.extend(pow(F, self.r).chain(pow(L, 1)).chain(pow(E, self.s))),
            PbwClass::B5 => w.extend(pow(E, self.s).chain(pow(L, 1)).chain(pow(F, self.r))),
        }
        let k = if self.t >= 0 { K } else { KInv };
        w.extend(pow(k, self.t.unsigned_abs() as u32));
        w
    }

    pub fn word(&self) -> GeneratorWord {
        GeneratorWord::new(Rf::one(), self.letters())
    }

    /// Weight: `k m = v^(2 * weight) m k`.
    fn weight(&self) -> i64 {
        self.s as i64 - self.r as i64
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.class == PbwClass::B0 && self.r == 0 && self.s == 0 && self.t == 0 {
            return f.write_str("1");
        }
        write!(f, "{}", self.word())
    }
}

/// A `Q(v)`-combination of PBW monomials; zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PbwElement {
    terms: BTreeMap<PbwMonomial, Rf>,
}

impl PbwElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(PbwMonomial::one())
    }

    pub fn monomial(m: PbwMonomial) -> Self {
        Self::term(m, Rf::one())
    }

    pub fn term(m: PbwMonomial, c: Rf) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (PbwMonomial, Rf)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    /// A single generator.
    pub fn generator(g: Letter) -> Self {
        left_mul_generator(g, &Self::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Rf)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Rf {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Rf) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_default();
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, other: &PbwElement, c: &Rf) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(*m, x * c);
        }
    }

    pub fn add(&self, other: &PbwElement) -> PbwElement {
        let mut out = self.clone();
        out.add_scaled(other, &Rf::one());
        out
    }

    pub fn sub(&self, other: &PbwElement) -> PbwElement {
        let mut out = self.clone();
        out.add_scaled(other, &Rf::from_int(-1));
        out
    }

    pub fn scale(&self, c: &Rf) -> PbwElement {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Normal form of a sum of generator words.
    pub fn from_words(words: &[GeneratorWord]) -> PbwElement {
        let mut out = Self::zero();
        for w in words {
            out.add_scaled(&normalize_letters(&w.letters), &w.scalar);
        }
        out
    }
}

impl fmt::Debug for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| alloc::format!("({c})*{m}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Accumulator for monomials written as `(class, r, s)` times `k^t`, where
/// some shapes collapse to others (`f^0 e^0 l = l`).
struct Acc {
    out: PbwElement,
}

impl Acc {
    fn new() -> Self {
        Acc { out: PbwElement::zero() }
    }

    fn push(&mut self, class: PbwClass, r: u32, s: u32, t: i64, c: Rf) {
        use PbwClass::*;
        let (class, r, s) = match (class, r, s) {
            (B2, 0, 0) => (B1, 0, 0),
            (B3, 0, _) => (B1, 0, s),
            (B3, _, 0) => (B2, r, 0),
            (B4, 0, _) => (B1, 0, s),
            (B4, _, 0) => (B2, r, 0),
            (B5, 0, _) => (B2, 0, s),
            (B5, _, 0) => (B1, r, 0),
            other => other,
        };
        let m = PbwMonomial::new(class, r, s, t).expect("collapsed shape is valid");
        self.out.add_term(m, c);
    }

    /// `c * u * l * k^t` for `u` in the order `f^a e^b k^u`.
    fn push_fe_then_l(&mut self, u: &UTerms, t: i64, c: &Rf) {
        for (&(a, b, tu), x) in u {
            self.push(PbwClass::B2, a, b, tu + t, c * x);
        }
    }

    /// `c * l * u * k^t` for `u` in the order `f^a e^b k^u`.
    fn push_l_then_fe(&mut self, u: &UTerms, t: i64, c: &Rf) {
        for (&(a, b, tu), x) in u {
            self.push(PbwClass::B1, a, b, tu + t, c * x);
        }
    }

    fn push_fe(&mut self, u: &UTerms, t: i64, c: &Rf) {
        for (&(a, b, tu), x) in u {
            self.push(PbwClass::B0, a, b, tu + t, c * x);
        }
    }
}

/// Which power surrounds the interior `l` in [`move_out`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    E,
    F,
}

/// `e^a l e^b = v^-b [a]/[a+b] e^(a+b) l + v^a [b]/[a+b] l e^(a+b)`, and
/// `f^a l f^b = v^b [a]/[a+b] f^(a+b) l + v^-a [b]/[a+b] l f^(a+b)`.
/// Returns the coefficients of `x^(a+b) l` and `l x^(a+b)`.
pub fn move_out_coefficients(side: Side, a: u32, b: u32) -> (Rf, Rf) {
    assert!(a + b >= 1, "a + b must be positive");
    let n = quantum_integer(a + b);
    let (ai, bi) = (a as i64, b as i64);
    let (pa, pb) = match side {
        Side::E => (Rf::v_pow(-bi), Rf::v_pow(ai)),
        Side::F => (Rf::v_pow(bi), Rf::v_pow(-ai)),
    };
    (pa * quantum_integer(a) / &n, pb * quantum_integer(b) / n)
}

/// The right-hand side of the move-out identity as a PBW element.
pub fn move_out(side: Side, a: u32, b: u32) -> PbwElement {
    let (c1, c2) = move_out_coefficients(side, a, b);
    let n = a + b;
    let mut acc = Acc::new();
    match side {
        Side::E => {
            acc.push(PbwClass::B2, 0, n, 0, c1);
            acc.push(PbwClass::B1, 0, n, 0, c2);
        }
        Side::F => {
            acc.push(PbwClass::B2, n, 0, 0, c1);
            acc.push(PbwClass::B1, n, 0, 0, c2);
        }
    }
    acc.out
}

fn single(r: u32, s: u32) -> UTerms {
    let mut u = UTerms::new();
    u.insert((r, s, 0), Rf::one());
    u
}

/// `c * e * m`.
fn left_e(m: &PbwMonomial, c: &Rf, acc: &mut Acc) {
    use PbwClass::*;
    let (r, s, t) = (m.r, m.s, m.t);
    match m.class {
        B0 => acc.push_fe(&fe_left_e(&single(r, s)), t, c),
        B1 => {
            // e l f^r e^s = Σ e l e^a f^b k^u, then move the l out of e l e^a.
            for (&(a, b, u), x) in &fe_to_ef(r, s) {
                let cx = c * x;
                if a == 0 {
                    acc.push(B5, b, 1, u + t, cx);
                    continue;
                }
                let (c1, c2) = move_out_coefficients(Side::E, 1, a);
                acc.push(B5, b, a + 1, u + t, &cx * &c1);
                acc.push_l_then_fe(&ef_to_fe(a + 1, b), u + t, &(&cx * &c2));
            }
        }
        B2 => acc.push_fe_then_l(&fe_left_e(&single(r, s)), t, c),
        B3 => {
            let mut inner = Acc::new();
            left_e(&PbwMonomial { class: B1, r, s, t: 0 }, c, &mut inner);
            for (m2, x) in inner.out.terms() {
                right_l(m2, x, t, acc);
            }
        }
        B4 => {
            // e f^r = f^r e + [r] f^(r-1) (v^(1-r) k - v^(r-1) k^-1)/(v - v^-1).
            let (c1, c2) = move_out_coefficients(Side::E, 1, s);
            acc.push(B2, r, s + 1, t, c * &c1);
            acc.push(B4, r, s + 1, t, c * &c2);
            let b = c * &(quantum_integer(r) / (Rf::v_pow(1) - Rf::v_pow(-1)));
            let (ri, si) = (r as i64, s as i64);
            acc.push(B4, r - 1, s, t + 1, &b * &Rf::v_pow(1 - ri + 2 * si));
            acc.push(B4, r - 1, s, t - 1, -(&b * &Rf::v_pow(ri - 1 - 2 * si)));
        }
        B5 => acc.push(B5, r, s + 1, t, c.clone()),
    }
}

/// `c * f * m`.
fn left_f(m: &PbwMonomial, c: &Rf, acc: &mut Acc) {
    use PbwClass::*;
    let (r, s, t) = (m.r, m.s, m.t);
    match m.class {
        B0 => acc.push(B0, r + 1, s, t, c.clone()),
        B1 => {
            if r == 0 {
                acc.push(B4, 1, s, t, c.clone());
            } else {
                let (c1, c2) = move_out_coefficients(Side::F, 1, r);
                acc.push(B4, r + 1, s, t, c * &c1);
                acc.push(B1, r + 1, s, t, c * &c2);
            }
        }
        B2 => acc.push(B2, r + 1, s, t, c.clone()),
        B3 => {
            let mut inner = Acc::new();
            left_f(&PbwMonomial { class: B1, r, s, t: 0 }, c, &mut inner);
            for (m2, x) in inner.out.terms() {
                right_l(m2, x, t, acc);
            }
        }
        B4 => acc.push(B4, r + 1, s, t, c.clone()),
        B5 => {
            // f e^s = e^s f - [s] e^(s-1) (v^(s-1) k - v^(1-s) k^-1)/(v - v^-1).
            let (c1, c2) = move_out_coefficients(Side::F, 1, r);
            acc.push_fe_then_l(&ef_to_fe(s, r + 1), t, &(c * &c1));
            acc.push(B5, r + 1, s, t, c * &c2);
            let b = c * &(quantum_integer(s) / (Rf::v_pow(1) - Rf::v_pow(-1)));
            let (ri, si) = (r as i64, s as i64);
            acc.push(B5, r, s - 1, t + 1, -(&b * &Rf::v_pow(si - 1 - 2 * ri)));
            acc.push(B5, r, s - 1, t - 1, &b * &Rf::v_pow(1 - si + 2 * ri));
        }
    }
}

/// `c * l * m`.
fn left_l(m: &PbwMonomial, c: &Rf, acc: &mut Acc) {
    use PbwClass::*;
    let (r, s, t) = (m.r, m.s, m.t);
    match m.class {
        B0 => acc.push(B1, r, s, t, c.clone()),
        B1 | B3 | B4 => acc.push(m.class, r, s, t, c.clone()),
        B2 => acc.push(B3, r, s, t, c.clone()),
        B5 => acc.push_l_then_fe(&ef_to_fe(s, r), t, c),
    }
}

/// `c * m * l * k^t` for a monomial `m`.
fn right_l(m: &PbwMonomial, c: &Rf, t: i64, acc: &mut Acc) {
    use PbwClass::*;
    let (r, s, tm) = (m.r, m.s, m.t + t);
    match m.class {
        B0 => acc.push(B2, r, s, tm, c.clone()),
        B1 => acc.push(B3, r, s, tm, c.clone()),
        B2 | B3 | B4 => acc.push(m.class, r, s, tm, c.clone()),
        B5 => acc.push_fe_then_l(&ef_to_fe(s, r), tm, c),
    }
}

/// `g * x` in normal form.
pub fn left_mul_generator(g: Letter, x: &PbwElement) -> PbwElement {
    let mut acc = Acc::new();
    for (m, c) in x.terms() {
        match g {
            Letter::K | Letter::KInv => {
                let sign = if g == Letter::K { 1 } else { -1 };
                let c2 = c * &Rf::v_pow(2 * sign * m.weight());
                acc.push(m.class, m.r, m.s, m.t + sign, c2);
            }
            Letter::E => left_e(m, c, &mut acc),
            Letter::F => left_f(m, c, &mut acc),
            Letter::L => left_l(m, c, &mut acc),
        }
    }
    acc.out
}

fn apply_letters(letters: &[Letter], x: &PbwElement) -> PbwElement {
    let mut acc = x.clone();
    for &g in letters.iter().rev() {
        if acc.is_zero() {
            break;
        }
        acc = left_mul_generator(g, &acc);
    }
    acc
}

/// Normal form of a product of generators.
pub fn normalize_letters(letters: &[Letter]) -> PbwElement {
    apply_letters(letters, &PbwElement::one())
}

/// `x * y`.
pub fn multiply(x: &PbwElement, y: &PbwElement) -> PbwElement {
    let mut out = PbwElement::zero();
    for (m, c) in x.terms() {
        out.add_scaled(&apply_letters(&m.letters(), y), c);
    }
    out
}

/// `x y - y x`.
pub fn commutator(x: &PbwElement, y: &PbwElement) -> PbwElement {
    multiply(x, y).sub(&multiply(y, x))
}

/// The image of `x` in `MU_v(2,d)`.
pub fn project_to_schur(d: u32, x: &PbwElement) -> SchurElement {
    let words: Vec<GeneratorWord> = x.terms().map(|(m, c)| GeneratorWord::new(c.clone(), m.letters())).collect();
    apply_words(&words, &SchurElement::identity(d))
}

/// The image under `l -> eps` in `U_v(sl_2)`, written in the monomials
/// `f^r e^s k^t`.
pub fn specialize_ell(eps: u8, x: &PbwElement) -> PbwElement {
    let mut acc = Acc::new();
    for (m, c) in x.terms() {
        match (m.class, eps) {
            (PbwClass::B0, _) => acc.push(PbwClass::B0, m.r, m.s, m.t, c.clone()),
            (_, 0) => {}
            (PbwClass::B5, _) => acc.push_fe(&ef_to_fe(m.s, m.r), m.t, c),
            _ => acc.push(PbwClass::B0, m.r, m.s, m.t, c.clone()),
        }
    }
    acc.out
}

/// The anti-automorphism fixing `k` and `l` and swapping `e` and `f`.
pub fn antiautomorphism(x: &PbwElement) -> PbwElement {
    let mut out = PbwElement::zero();
    for (m, c) in x.terms() {
        let letters: Vec<Letter> = m
            .letters()
            .into_iter()
            .rev()
            .map(|l| match l {
                Letter::E => Letter::F,
                Letter::F => Letter::E,
                other => other,
            })
            .collect();
        out.add_scaled(&normalize_letters(&letters), c);
    }
    out
}

/// `(k v^a + k^-1 v^-a) / (v - v^-1)^2`.
fn k_fraction(a: i64) -> PbwElement {
    let den = (Rf::v_pow(1) - Rf::v_pow(-1)).pow(2).expect("nonzero");
    let mut acc = Acc::new();
    acc.push(PbwClass::B0, 0, 0, 1, Rf::v_pow(a) / &den);
    acc.push(PbwClass::B0, 0, 0, -1, Rf::v_pow(-a) / den);
    acc.out
}

/// The central element
/// `(1 - v^-2)(fe + K_1) - fel - lfe + v^2 fle + v^-2 elf
///  + (v^2 - 2) l K_1 + v^-2 l K_-1`, with `K_a = (k v^a + k^-1 v^-a)/(v - v^-1)^2`.
pub fn casimir_element() -> PbwElement {
    use Letter::*;
    let w = |c: Rf, ls: &[Letter]| normalize_letters(ls).scale(&c);
    let one = Rf::one;
    let l = PbwElement::generator(L);
    let mut c = w(one() - Rf::v_pow(-2), &[F, E]).add(&k_fraction(1).scale(&(one() - Rf::v_pow(-2))));
    c = c.sub(&w(one(), &[F, E, L]));
    c = c.sub(&w(one(), &[L, F, E]));
    c = c.add(&w(Rf::v_pow(2), &[F, L, E]));
    c = c.add(&w(Rf::v_pow(-2), &[E, L, F]));
    c = c.add(&multiply(&l, &k_fraction(1)).scale(&(Rf::v_pow(2) - Rf::from_int(2))));
    c = c.add(&multiply(&l, &k_fraction(-1)).scale(&Rf::v_pow(-2)));
    c
}
