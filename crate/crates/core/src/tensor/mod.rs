//! The mirabolic tensor space `MT_v(2,d)`, spanned by `T_{i,J}` for marked
//! sequences `(i, J)` in `Ξ_{2,1^d}`, with the actions of `k` and `ℓ` and the
//! bookkeeping of its weight decomposition.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::decorated::{admissible_marks, binomial, binomial_signed, sequence_stats, sequences, MarkedSequence};
use crate::field::Rf;
use crate::linalg;
use crate::rep::{decompose_weight_table, ModuleKind, ModuleSpec, Sign, Weight, WeightTable};

/// A `Q(v)`-combination of basis elements `T_{i,J}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    d: usize,
    terms: BTreeMap<MarkedSequence, Rf>,
}

impl TensorElement {
    pub fn zero(d: usize) -> Self {
        TensorElement { d, terms: BTreeMap::new() }
    }

    pub fn basis(x: MarkedSequence) -> Self {
        let mut t = Self::zero(x.d());
        t.terms.insert(x, Rf::one());
        t
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MarkedSequence, &Rf)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x: &MarkedSequence) -> Rf {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, x: MarkedSequence, c: Rf) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(x.clone()).or_default();
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&x);
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, c: &Rf) {
        for (x, a) in &other.terms {
            self.add_term(x.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &Rf) -> TensorElement {
        let mut out = Self::zero(self.d);
        out.add_scaled(self, c);
        out
    }

    fn map_basis(&self, f: impl Fn(&MarkedSequence) -> TensorElement) -> TensorElement {
        let mut out = Self::zero(self.d);
        for (x, c) in &self.terms {
            out.add_scaled(&f(x), c);
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (x, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*T{x}")?;
        }
        Ok(())
    }
}

/// The basis of the block `V_i`: all admissible mark sets on `seq`.
pub fn block_basis(seq: &[u8]) -> Vec<MarkedSequence> {
    admissible_marks(seq).into_iter().map(|marks| MarkedSequence::new(seq.to_vec(), marks)).collect()
}

/// `k T_{i,J} = v^(2 i(1) - d) T_{i,J}`.
pub fn k_action(x: &TensorElement) -> TensorElement {
    x.map_basis(|b| {
        let ones = sequence_stats(&b.seq).ones as i64;
        TensorElement::basis(b.clone()).scale(&Rf::v_pow(2 * ones - b.d() as i64))
    })
}

/// `ℓ T_{i,J}` on a basis element.
pub fn ell_basis(x: &MarkedSequence) -> TensorElement {
    let st = sequence_stats(&x.seq);
    let d = x.d();
    let base = -2 * st.ones as i64;
    let with = |marks: Vec<usize>| MarkedSequence::new(x.seq.clone(), marks);
    let ones_after = |j: usize| (j + 1..=d).filter(|&m| x.seq[m - 1] == 1);
    let mut out = TensorElement::zero(d);
    // T_{i,∅} + Σ_{i_j = 1} T_{i,{j}}, or T_{i,{j}} + Σ_{m > j, i_m = 1} T_{i,{j,m}}.
    let mut head = |c: Rf, j: Option<usize>| match j {
        None => {
            out.add_term(with(vec![]), c.clone());
            for m in ones_after(0) {
                out.add_term(with(vec![m]), c.clone());
            }
        }
        Some(j) => {
            out.add_term(with(vec![j]), c.clone());
            for m in ones_after(j) {
                out.add_term(with(vec![j, m]), c.clone());
            }
        }
    };
    let q1 = Rf::v_pow(2) - Rf::one();
    match x.marks.as_slice() {
        [] => head(Rf::v_pow(base), None),
        &[j] if x.seq[j - 1] == 1 => head(Rf::v_pow(base + 2 * st.phi[j - 1] as i64) * &q1, None),
        &[j] => head(Rf::v_pow(base + 2 * st.phi[j - 1] as i64), Some(j)),
        &[j, m] => head(Rf::v_pow(base + 2 * st.phi[m - 1] as i64) * &q1, Some(j)),
        _ => {}
    }
    out
}

pub fn ell_action(x: &TensorElement) -> TensorElement {
    x.map_basis(ell_basis)
}

/// Rank of `ℓ` on one block, by exact elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockRank {
    pub seq: Vec<u8>,
    pub dim: usize,
    pub rank: usize,
}

pub fn block_rank(seq: &[u8]) -> BlockRank {
    let basis = block_basis(seq);
    let rows: Vec<Vec<Rf>> = basis
        .iter()
        .map(|b| {
            let img = ell_basis(b);
            basis.iter().map(|c| img.coeff(c)).collect()
        })
        .collect();
    BlockRank { seq: seq.to_vec(), dim: basis.len(), rank: linalg::rank(&rows) }
}

pub fn block_ranks(d: usize) -> Vec<BlockRank> {
    sequences(2, d).iter().map(|s| block_rank(s)).collect()
}

/// Weight multiplicities of `MT_v(2,d)`: `(a, ε) -> dim`, with `a = d - 2 i(2)`.
/// Since `ℓ` is idempotent, the `ε = 1` part of a block is the image of `ℓ`
/// and the `ε = 0` part its kernel.
pub fn weight_multiplicities(d: usize) -> BTreeMap<(i64, u8), u64> {
    let mut out = BTreeMap::new();
    for r in 0..=d {
        out.insert((d as i64 - 2 * r as i64, 0), 0);
        out.insert((d as i64 - 2 * r as i64, 1), 0);
    }
    for b in block_ranks(d) {
        let a = d as i64 - 2 * sequence_stats(&b.seq).twos as i64;
        *out.entry((a, 1)).or_insert(0) += b.rank as u64;
        *out.entry((a, 0)).or_insert(0) += (b.dim - b.rank) as u64;
    }
    out
}

/// The predicted multiplicity of the weight `(v^(d-2r), ε)`:
/// `C(d,r) + d C(d-1,r-1)` for `ε = 1` and
/// `d C(d-1,r) + C(d,2) C(d-2,r-1)` for `ε = 0`.
pub fn rhs_closed_form(d: u64, r: u64, eps: u8) -> u128 {
    let (d, r) = (d as i64, r as i64);
    let b = binomial_signed;
    let d128 = d as u128;
    if eps == 1 {
        b(d, r) + d128 * b(d - 1, r - 1)
    } else {
        d128 * b(d - 1, r) + b(d, 2) * b(d - 2, r - 1)
    }
}

/// `Σ inv(i)` over sequences with `i(2) = r`, by enumeration.
pub fn inversion_sum(d: usize, r: usize) -> u128 {
    sequences(2, d)
        .iter()
        .map(|s| sequence_stats(s))
        .filter(|st| st.twos == r)
        .map(|st| st.inversions as u128)
        .sum()
}

/// Number of standard Young tableaux of shape `lambda`, by the hook length
/// formula.
pub fn syt_count(lambda: &[u32]) -> BigUint {
    let n: u32 = lambda.iter().sum();
    let mut num: BigUint = (1..=n).map(BigUint::from).product();
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = lambda[i + 1..].iter().filter(|&&r| r > j).count() as u32;
            hooks *= BigUint::from(arm + leg + 1);
        }
    }
    num /= hooks;
    num
}

/// A bipartition `(λ, 1^s)` with `λ` of at most two parts and `s ≤ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct BipartitionLabel {
    pub lambda: (u32, u32),
    pub s: u8,
}

impl fmt::Display for BipartitionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.lambda;
        let col = ["∅", "1", "11"][self.s as usize];
        match (a, b) {
            (0, _) => write!(f, "(∅,{col})"),
            (_, 0) => write!(f, "(({a}),{col})"),
            _ => write!(f, "(({a},{b}),{col})"),
        }
    }
}

pub fn bipartitions(d: u32) -> Vec<BipartitionLabel> {
    let mut out = Vec::new();
    for s in 0..=2u8.min(d as u8) {
        let m = d - s as u32;
        for l2 in 0..=m / 2 {
            out.push(BipartitionLabel { lambda: (m - l2, l2), s });
        }
    }
    out
}

/// The multiset of simple modules predicted for `MT_v(2,d)`: `L+(λ1-λ2,1)`
/// with multiplicity `f_λ` for `(λ,∅)`, `L+(λ1-λ2+1,01)` with `C(d,1) f_λ`
/// for `(λ,1)` and `L+(λ1-λ2,0)` with `C(d,2) f_λ` for `(λ,11)`.
pub fn conjecture_table(d: u32) -> Vec<(ModuleSpec, u64)> {
    let mut out: BTreeMap<ModuleSpec, u64> = BTreeMap::new();
    for bp in bipartitions(d) {
        let (l1, l2) = bp.lambda;
        let parts: Vec<u32> = [l1, l2].into_iter().filter(|&x| x > 0).collect();
        let f = syt_count(&parts).to_u64().unwrap_or(u64::MAX);
        let (kind, n) = match bp.s {
            0 => (ModuleKind::L1, l1 - l2),
            1 => (ModuleKind::L01, l1 - l2 + 1),
            _ => (ModuleKind::L0, l1 - l2),
        };
        let mult = f * binomial(d as u64, bp.s as u64) as u64;
        let spec = ModuleSpec { kind, sign: Sign::Plus, n };
        *out.entry(spec).or_insert(0) += mult;
    }
    out.into_iter().collect()
}

/// One row of the weight comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightRow {
    pub r: usize,
    pub a: i64,
    pub eps: u8,
    pub computed: u64,
    pub closed_form: u64,
}

/// The outcome of checking `MT_v(2,d)` as a left module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftModuleReport {
    pub d: usize,
    pub weights: Vec<WeightRow>,
    pub decomposition: Vec<(ModuleSpec, u64)>,
    pub predicted: Vec<(ModuleSpec, u64)>,
    pub total_dim: u64,
    pub mismatches: Vec<String>,
    pub conjecture_match: bool,
}

impl LeftModuleReport {
    /// Matching tables support the conjecture; they do not prove it.
    pub fn status(&self) -> &'static str {
        if self.conjecture_match {
            "conjecture-consistent"
        } else {
            "mismatch"
        }
    }
}

pub fn check_left_module(d: usize) -> LeftModuleReport {
    let computed = weight_multiplicities(d);
    let mut weights = Vec::new();
    let mut mismatches = Vec::new();
    let mut table = WeightTable::new();
    for r in 0..=d {
        let a = d as i64 - 2 * r as i64;
        for eps in [1u8, 0] {
            let c = computed.get(&(a, eps)).copied().unwrap_or(0);
            let closed = rhs_closed_form(d as u64, r as u64, eps) as u64;
            if c != closed {
                mismatches.push(format!("weight (r={r}, eps={eps}): computed {c}, closed form {closed}"));
            }
            table.add(Weight { sign: Sign::Plus, a, eps }, c);
            weights.push(WeightRow { r, a, eps, computed: c, closed_form: closed });
        }
    }
    let predicted = conjecture_table(d as u32);
    let decomposition = match decompose_weight_table(&table) {
        Ok(x) => x,
        Err(e) => {
            mismatches.push(format!("decomposition failed: {e}"));
            Vec::new()
        }
    };
    if !decomposition.is_empty() && decomposition != predicted {
        mismatches.push(String::from("decomposition differs from the predicted table"));
    }
    let conjecture_match = mismatches.is_empty();
    LeftModuleReport { d, weights, decomposition, predicted, total_dim: table.total(), mismatches, conjecture_match }
}

#[cfg(test)]
mod tests;
