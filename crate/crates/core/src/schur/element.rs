use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::decorated::{Deco, Label2};
use crate::field::RationalFunction;

/// A `Q(v)`-linear combination of basis elements `T_{A,Δ}` of `MU_v(2,d)`.
///
/// Terms are kept in the label tie-break order and zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurElement {
    d: u32,
    terms: BTreeMap<Label2, RationalFunction>,
}

impl SchurElement {
    pub fn zero(d: u32) -> Self {
        SchurElement { d, terms: BTreeMap::new() }
    }

    /// The basis element `T_{A,Δ}`.
    pub fn basis(label: Label2) -> Self {
        Self::term(label, RationalFunction::one())
    }

    pub fn term(label: Label2, c: RationalFunction) -> Self {
        let mut out = Self::zero(label.d());
        out.add_term(label, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Label2, RationalFunction)>>(d: u32, terms: I) -> Self {
        let mut out = Self::zero(d);
        for (l, c) in terms {
            out.add_term(l, c);
        }
        out
    }

    /// `1 = Σ_r T_{D(r,d-r),∅}`.
    pub fn identity(d: u32) -> Self {
        Self::from_terms(d, (0..=d).map(|r| (Label2::diag(r, d - r, Deco::Empty), RationalFunction::one())))
    }

    pub fn d(&self) -> u32 {
        self.d
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

    pub fn terms(&self) -> impl Iterator<Item = (&Label2, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn coeff(&self, label: &Label2) -> RationalFunction {
        self.terms.get(label).cloned().unwrap_or_default()
    }

    /// Adds `c * T_label`.  Labels outside `Ξ_{2,d}` must not be passed.
    pub fn add_term(&mut self, label: Label2, c: RationalFunction) {
        debug_assert!(label.is_valid() && label.d() == self.d, "label {label} not in Xi(2,{})", self.d);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(label) {
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

    pub fn add_scaled(&mut self, other: &SchurElement, c: &RationalFunction) {
        if c.is_zero() {
            return;
        }
        for (l, x) in &other.terms {
            self.add_term(*l, x * c);
        }
    }

    pub fn add(&self, other: &SchurElement) -> SchurElement {
        let mut out = self.clone();
        out.add_scaled(other, &RationalFunction::one());
        out
    }

    pub fn sub(&self, other: &SchurElement) -> SchurElement {
        let mut out = self.clone();
        out.add_scaled(other, &RationalFunction::from_int(-1));
        out
    }

    pub fn scale(&self, c: &RationalFunction) -> SchurElement {
        let mut out = SchurElement::zero(self.d);
        out.add_scaled(self, c);
        out
    }

    /// The anti-involution `T_{A,Δ} -> T_{tA,tΔ}`.
    pub fn star(&self) -> SchurElement {
        SchurElement { d: self.d, terms: self.terms.iter().map(|(l, c)| (l.transpose(), c.clone())).collect() }
    }

    /// Part supported on labels with `Δ = ∅`.
    pub fn undecorated_part(&self) -> SchurElement {
        SchurElement {
            d: self.d,
            terms: self.terms.iter().filter(|(l, _)| l.deco == Deco::Empty).map(|(l, c)| (*l, c.clone())).collect(),
        }
    }

    pub fn labels(&self) -> Vec<Label2> {
        self.terms.keys().copied().collect()
    }
}

impl fmt::Debug for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*T{l}")?;
        }
        Ok(())
    }
}
