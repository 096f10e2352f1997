use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::RepError;
use crate::field::Rf;
use crate::linalg;

use super::{IrreducibleModule, ModuleKind, ModuleSpec, Sign};

/// A weight `(±v^a, ε)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub sign: Sign,
    pub a: i64,
    pub eps: u8,
}

/// Weight multiplicities; only positive entries are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightTable {
    entries: BTreeMap<Weight, u64>,
}

impl WeightTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, w: Weight, mult: u64) {
        if mult > 0 {
            *self.entries.entry(w).or_insert(0) += mult;
        }
    }

    pub fn get(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &u64)> {
        self.entries.iter()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn merge(&mut self, other: &WeightTable, times: u64) {
        for (w, m) in other.iter() {
            self.add(*w, m * times);
        }
    }
}

impl FromIterator<(Weight, u64)> for WeightTable {
    fn from_iter<I: IntoIterator<Item = (Weight, u64)>>(iter: I) -> Self {
        let mut t = WeightTable::new();
        for (w, m) in iter {
            t.add(w, m);
        }
        t
    }
}

/// Dimensions of the simultaneous eigenspaces of `k` and `ℓ`, computed by
/// exact elimination.  Fails if they do not add up to the dimension.
pub fn weight_table(m: &IrreducibleModule) -> Result<WeightTable, RepError> {
    let dim = m.dim();
    let mut t = WeightTable::new();
    let range = dim as i64;
    for sign in [Sign::Plus, Sign::Minus] {
        for a in -range..=range {
            let lambda = &sign.as_rf() * &Rf::v_pow(a);
            let k_shift: Vec<Vec<Rf>> =
                m.k.rows().iter().enumerate().map(|(i, row)| shift_row(row, i, &lambda)).collect();
            if dim - linalg::rank(&k_shift) == 0 {
                continue;
            }
            for eps in [0u8, 1] {
                let mu = if eps == 1 { Rf::one() } else { Rf::zero() };
                let mut rows = k_shift.clone();
                rows.extend(m.ell.rows().iter().enumerate().map(|(i, row)| shift_row(row, i, &mu)));
                let null = dim - linalg::rank(&rows);
                t.add(Weight { sign, a, eps }, null as u64);
            }
        }
    }
    if t.total() != dim as u64 {
        return Err(RepError::NotDiagonalizable);
    }
    Ok(t)
}

fn shift_row(row: &[Rf], i: usize, c: &Rf) -> Vec<Rf> {
    let mut r = row.to_vec();
    r[i] = &r[i] - c;
    r
}

/// The unique multiset of simple modules whose weight tables add up to `t`.
///
/// Each chain of weights with a fixed sign and parity of `a` is solved as an
/// exact linear system whose unknowns are the multiplicities of `L(n,0)`,
/// `L(n,1)` and `L(n,01)`; the solution must be unique, integral and
/// nonnegative.
pub fn decompose_weight_table(t: &WeightTable) -> Result<Vec<(ModuleSpec, u64)>, RepError> {
    let mut chains: BTreeMap<(Sign, i64), i64> = BTreeMap::new();
    for (w, _) in t.iter() {
        let top = chains.entry((w.sign, w.a.rem_euclid(2))).or_insert(0);
        *top = (*top).max(w.a.abs());
    }
    let mut out = Vec::new();
    for (&(sign, parity), &top) in &chains {
        let mut unknowns = Vec::new();
        for n in (parity..=top + 1).step_by(2) {
            let n = n as u32;
            for kind in [ModuleKind::L0, ModuleKind::L1, ModuleKind::L01] {
                if let Ok(spec) = ModuleSpec::new(kind, sign, n) {
                    unknowns.push(spec);
                }
            }
        }
        let mut rows_index: Vec<Weight> = Vec::new();
        for a in (-top - 1..=top + 1).filter(|a| a.rem_euclid(2) == parity) {
            for eps in [0u8, 1] {
                rows_index.push(Weight { sign, a, eps });
            }
        }
        let tables: Vec<WeightTable> = unknowns.iter().map(ModuleSpec::weights).collect();
        let int = |n: u64| BigRational::from_integer(BigInt::from(n));
        let a: Vec<Vec<BigRational>> =
            rows_index.iter().map(|w| tables.iter().map(|tab| int(tab.get(w))).collect()).collect();
        let b: Vec<BigRational> = rows_index.iter().map(|w| int(t.get(w))).collect();
        let chain = format!("sign {}, parity {parity}", sign.symbol());
        let (x, free) = linalg::solve_general(&a, &b)
            .ok_or_else(|| RepError::NotAModuleTable(format!("no solution on the chain {chain}")))?;
        if free > 0 {
            return Err(RepError::NotAModuleTable(format!("solution is not unique on the chain {chain}")));
        }
        for (spec, m) in unknowns.iter().zip(x) {
            if m.is_zero() {
                continue;
            }
            if !m.is_integer() || m.is_negative() {
                return Err(RepError::NotAModuleTable(format!("{spec} would have multiplicity {m}")));
            }
            let m = m.to_integer().to_u64().ok_or_else(|| RepError::NotAModuleTable(format!("{spec}: {m}")))?;
            out.push((*spec, m));
        }
    }
    out.sort();
    Ok(out)
}
