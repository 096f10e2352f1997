//! Orbit labels: decorated matrices `(A, Δ)` and marked sequences `(i, J)`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Why a label fails validation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LabelError {
    #[error("matrix has {got} entries, expected {rows}x{cols}")]
    Shape { rows: usize, cols: usize, got: usize },
    #[error("decoration ({0},{1}) lies outside the matrix")]
    OutOfRange(usize, usize),
    #[error("decorated entry ({0},{1}) is zero")]
    ZeroEntry(usize, usize),
    #[error("decoration rows are not strictly increasing")]
    RowsNotIncreasing,
    #[error("decoration columns are not strictly decreasing")]
    ColumnsNotDecreasing,
    #[error("entries sum to {got}, expected {expected}")]
    WrongSum { expected: u64, got: u64 },
    #[error("sequence entry {0} is outside 1..={1}")]
    SequenceEntry(u8, u8),
    #[error("mark {0} is outside 1..={1}")]
    MarkOutOfRange(usize, usize),
    #[error("marks are not strictly increasing positions")]
    MarksNotSorted,
    #[error("marked values are not strictly decreasing")]
    MarkedValuesNotDecreasing,
    #[error("row and column sums differ")]
    MarginMismatch,
    #[error("operation needs a 2x2 label")]
    NotTwoByTwo,
    #[error("matrix is not a 0/1 matrix with a single 1 per column")]
    NotASequenceMatrix,
}

/// A matrix of nonnegative integers with a set of marked positions.
///
/// Positions are 1-based `(row, col)` pairs kept sorted by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecoratedMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
    delta: Vec<(usize, usize)>,
}

impl DecoratedMatrix {
    /// Builds a label from row-major entries; the decoration is sorted but
    /// otherwise not checked (see [`validate`](Self::validate)).
    pub fn new(rows: usize, cols: usize, entries: Vec<u64>, mut delta: Vec<(usize, usize)>) -> Result<Self, LabelError> {
        if entries.len() != rows * cols {
            return Err(LabelError::Shape { rows, cols, got: entries.len() });
        }
        delta.sort_unstable();
        Ok(DecoratedMatrix { rows, cols, entries, delta })
    }

    pub fn from_rows(a: &[Vec<u64>], delta: Vec<(usize, usize)>) -> Result<Self, LabelError> {
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        let entries: Vec<u64> = a.iter().flatten().copied().collect();
        Self::new(rows, cols, entries, delta)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry `a_{ij}` with 1-based indices.
    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn delta(&self) -> &[(usize, usize)] {
        &self.delta
    }

    pub fn matrix_rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.cols.max(1)).map(<[u64]>::to_vec).collect()
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// Checks the decoration conditions: positions inside the matrix,
    /// strictly increasing rows, strictly decreasing columns, and positive
    /// entries at every marked position.
    pub fn validate(&self) -> Result<(), LabelError> {
        for &(i, j) in &self.delta {
            if i == 0 || j == 0 || i > self.rows || j > self.cols {
                return Err(LabelError::OutOfRange(i, j));
            }
        }
        for w in self.delta.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(LabelError::RowsNotIncreasing);
            }
            if w[0].1 <= w[1].1 {
                return Err(LabelError::ColumnsNotDecreasing);
            }
        }
        for &(i, j) in &self.delta {
            if self.entry(i, j) == 0 {
                return Err(LabelError::ZeroEntry(i, j));
            }
        }
        Ok(())
    }

    /// Validity plus membership in `Ξ_{n,d}`.
    pub fn validate_in_xi(&self, d: u64) -> Result<(), LabelError> {
        self.validate()?;
        let got = self.total();
        if got != d {
            return Err(LabelError::WrongSum { expected: d, got });
        }
        Ok(())
    }

    /// `(ro(A), co(A))`.
    pub fn row_col_sums(&self) -> (Vec<u64>, Vec<u64>) {
        row_col_sums(&self.matrix_rows())
    }

    pub fn transpose(&self) -> DecoratedMatrix {
        let mut entries = vec![0; self.entries.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                entries[j * self.rows + i] = self.entries[i * self.cols + j];
            }
        }
        let mut delta: Vec<(usize, usize)> = self.delta.iter().map(|&(i, j)| (j, i)).collect();
        delta.sort_unstable();
        DecoratedMatrix { rows: self.cols, cols: self.rows, entries, delta }
    }

    /// Deterministic ordering key: entries row-major, then the decoration.
    pub fn tie_break_key(&self) -> (&[u64], &[(usize, usize)]) {
        (&self.entries, &self.delta)
    }
}

impl PartialOrd for DecoratedMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order by shape, then [`DecoratedMatrix::tie_break_key`].  Used for
/// output ordering only.
impl Ord for DecoratedMatrix {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rows, self.cols)
            .cmp(&(other.rows, other.cols))
            .then_with(|| self.tie_break_key().cmp(&other.tie_break_key()))
    }
}

pub fn row_col_sums(a: &[Vec<u64>]) -> (Vec<u64>, Vec<u64>) {
    let ro = a.iter().map(|r| r.iter().sum()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let co = (0..cols).map(|j| a.iter().map(|r| r[j]).sum()).collect();
    (ro, co)
}

/// The six decorations possible on a 2x2 matrix, in the lexicographic order
/// of their sorted position lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Deco {
    Empty,
    D11,
    D12,
    D12D21,
    D21,
    D22,
}

impl Deco {
    pub const ALL: [Deco; 6] = [Deco::Empty, Deco::D11, Deco::D12, Deco::D12D21, Deco::D21, Deco::D22];

    /// Marked positions, 1-based and sorted.
    pub fn positions(self) -> &'static [(usize, usize)] {
        match self {
            Deco::Empty => &[],
            Deco::D11 => &[(1, 1)],
            Deco::D12 => &[(1, 2)],
            Deco::D12D21 => &[(1, 2), (2, 1)],
            Deco::D21 => &[(2, 1)],
            Deco::D22 => &[(2, 2)],
        }
    }

    pub fn from_positions(ps: &[(usize, usize)]) -> Option<Deco> {
        let mut v = ps.to_vec();
        v.sort_unstable();
        Deco::ALL.into_iter().find(|d| d.positions() == v.as_slice())
    }

    pub fn transpose(self) -> Deco {
        match self {
            Deco::D12 => Deco::D21,
            Deco::D21 => Deco::D12,
            other => other,
        }
    }

    /// Height in the Hasse diagram `∅ < {11} < {12},{21} < {12,21} < {22}`.
    fn level(self) -> u8 {
        match self {
            Deco::Empty => 0,
            Deco::D11 => 1,
            Deco::D12 | Deco::D21 => 2,
            Deco::D12D21 => 3,
            Deco::D22 => 4,
        }
    }

    /// The order `⊑`.
    pub fn le(self, other: Deco) -> bool {
        if self == other {
            return true;
        }
        if matches!((self, other), (Deco::D12, Deco::D21) | (Deco::D21, Deco::D12)) {
            return false;
        }
        self.level() < other.level()
    }
}

impl fmt::Display for Deco {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (i, j)) in self.positions().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({i},{j})")?;
        }
        f.write_str("}")
    }
}

/// A compact element of `Ξ_{2,d}`: entries `[a11, a12, a21, a22]` and a
/// decoration.  The derived order is the deterministic tie-break order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label2 {
    pub a: [u32; 4],
    pub deco: Deco,
}

impl Label2 {
    pub const fn new(a11: u32, a12: u32, a21: u32, a22: u32, deco: Deco) -> Self {
        Label2 { a: [a11, a12, a21, a22], deco }
    }

    /// The diagonal matrix `D(r, s) = diag(r, s)`.
    pub const fn diag(r: u32, s: u32, deco: Deco) -> Self {
        Label2::new(r, 0, 0, s, deco)
    }

    /// Builds the label when every entry is nonnegative and the decoration
    /// sits on positive entries; `None` otherwise.
    pub fn checked(a: [i64; 4], deco: Deco) -> Option<Self> {
        if a.iter().any(|&x| x < 0) {
            return None;
        }
        let l = Label2 { a: a.map(|x| x as u32), deco };
        l.is_valid().then_some(l)
    }

    pub fn a11(&self) -> u32 {
        self.a[0]
    }
    pub fn a12(&self) -> u32 {
        self.a[1]
    }
    pub fn a21(&self) -> u32 {
        self.a[2]
    }
    pub fn a22(&self) -> u32 {
        self.a[3]
    }

    pub fn d(&self) -> u32 {
        self.a.iter().sum()
    }

    pub fn is_valid(&self) -> bool {
        self.deco.positions().iter().all(|&(i, j)| self.a[2 * (i - 1) + (j - 1)] > 0)
    }

    pub fn ro(&self) -> [u32; 2] {
        [self.a[0] + self.a[1], self.a[2] + self.a[3]]
    }

    pub fn co(&self) -> [u32; 2] {
        [self.a[0] + self.a[2], self.a[1] + self.a[3]]
    }

    pub fn is_diagonal(&self) -> bool {
        self.a[1] == 0 && self.a[2] == 0
    }

    pub fn transpose(&self) -> Label2 {
        Label2 { a: [self.a[0], self.a[2], self.a[1], self.a[3]], deco: self.deco.transpose() }
    }

    pub fn with_deco(&self, deco: Deco) -> Label2 {
        Label2 { a: self.a, deco }
    }

    pub fn to_matrix(&self) -> DecoratedMatrix {
        DecoratedMatrix {
            rows: 2,
            cols: 2,
            entries: self.a.iter().map(|&x| x as u64).collect(),
            delta: self.deco.positions().to_vec(),
        }
    }

    pub fn from_matrix(m: &DecoratedMatrix) -> Result<Label2, LabelError> {
        if m.rows != 2 || m.cols != 2 {
            return Err(LabelError::NotTwoByTwo);
        }
        m.validate()?;
        let deco = Deco::from_positions(&m.delta).ok_or(LabelError::ColumnsNotDecreasing)?;
        let a = [m.entries[0], m.entries[1], m.entries[2], m.entries[3]].map(|x| x as u32);
        Ok(Label2 { a, deco })
    }
}

impl fmt::Display for Label2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.a;
        write!(f, "[[{a},{b}],[{c},{d}]]{}", self.deco)
    }
}

/// Result of comparing two labels in the partial order `⪯`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// Compares `(A, Δ)` and `(B, Γ)`: `A ≤ B` iff `a12 ≤ b12` and `a21 ≤ b21`,
/// combined with `⊑` on decorations.  Labels must share row and column sums.
pub fn order_compare(x: &Label2, y: &Label2) -> Result<Comparison, LabelError> {
    if x.ro() != y.ro() || x.co() != y.co() {
        return Err(LabelError::MarginMismatch);
    }
    let le = |p: &Label2, q: &Label2| p.a12() <= q.a12() && p.a21() <= q.a21() && p.deco.le(q.deco);
    Ok(match (x == y, le(x, y), le(y, x)) {
        (true, _, _) => Comparison::Equal,
        (false, true, _) => Comparison::Less,
        (false, _, true) => Comparison::Greater,
        _ => Comparison::Incomparable,
    })
}

/// All nonnegative integer vectors of length `len` with the given sum, in
/// lexicographic order.
pub fn compositions(total: u64, len: usize) -> Vec<Vec<u64>> {
    fn go(total: u64, len: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if len == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for x in 0..=total {
            prefix.push(x);
            go(total - x, len - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, len, &mut Vec::new(), &mut out);
    out
}

/// All decorations compatible with a matrix: chains of positive entries with
/// strictly increasing rows and strictly decreasing columns.
fn decorations(rows: usize, cols: usize, entries: &[u64]) -> Vec<Vec<(usize, usize)>> {
    fn go(
        rows: usize,
        cols: usize,
        entries: &[u64],
        next_row: usize,
        col_bound: usize,
        acc: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        out.push(acc.clone());
        for i in next_row..=rows {
            for j in 1..col_bound {
                if entries[(i - 1) * cols + (j - 1)] > 0 {
                    acc.push((i, j));
                    go(rows, cols, entries, i + 1, j, acc, out);
                    acc.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(rows, cols, entries, 1, cols + 1, &mut Vec::new(), &mut out);
    out
}

/// `Ξ_{n,d}` as decorated `n x n` matrices, sorted by the tie-break order.
pub fn enumerate_xi(n: usize, d: u64) -> Vec<DecoratedMatrix> {
    let mut out = Vec::new();
    for entries in compositions(d, n * n) {
        for delta in decorations(n, n, &entries) {
            out.push(DecoratedMatrix { rows: n, cols: n, entries: entries.clone(), delta });
        }
    }
    out.sort();
    out
}

/// `Ξ_{2,d}` in compact form, sorted.
pub fn enumerate_xi2(d: u32) -> Vec<Label2> {
    let mut out = Vec::new();
    for c in compositions(d as u64, 4) {
        let a = [c[0] as u32, c[1] as u32, c[2] as u32, c[3] as u32];
        for deco in Deco::ALL {
            let l = Label2 { a, deco };
            if l.is_valid() {
                out.push(l);
            }
        }
    }
    out.sort();
    out
}

/// A sequence `i = (i_1, ..., i_d)` over `{1..n}` with a set `J` of marked
/// positions (1-based, sorted) whose values strictly decrease.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedSequence {
    pub seq: Vec<u8>,
    pub marks: Vec<usize>,
}

impl MarkedSequence {
    pub fn new(seq: Vec<u8>, mut marks: Vec<usize>) -> Self {
        marks.sort_unstable();
        MarkedSequence { seq, marks }
    }

    pub fn d(&self) -> usize {
        self.seq.len()
    }

    pub fn validate(&self, n: u8) -> Result<(), LabelError> {
        for &x in &self.seq {
            if x == 0 || x > n {
                return Err(LabelError::SequenceEntry(x, n));
            }
        }
        for &m in &self.marks {
            if m == 0 || m > self.seq.len() {
                return Err(LabelError::MarkOutOfRange(m, self.seq.len()));
            }
        }
        for w in self.marks.windows(2) {
            if w[0] >= w[1] {
                return Err(LabelError::MarksNotSorted);
            }
            if self.seq[w[0] - 1] <= self.seq[w[1] - 1] {
                return Err(LabelError::MarkedValuesNotDecreasing);
            }
        }
        Ok(())
    }

    /// The `n x d` matrix with `a_{m r} = 1` iff `i_r = m`, and
    /// `Δ = {(i_j, j) : j ∈ J}`.
    pub fn to_matrix(&self, n: usize) -> DecoratedMatrix {
        let d = self.seq.len();
        let mut entries = vec![0u64; n * d];
        for (r, &m) in self.seq.iter().enumerate() {
            entries[(m as usize - 1) * d + r] = 1;
        }
        let mut delta: Vec<(usize, usize)> = self.marks.iter().map(|&j| (self.seq[j - 1] as usize, j)).collect();
        delta.sort_unstable();
        DecoratedMatrix { rows: n, cols: d, entries, delta }
    }

    pub fn from_matrix(m: &DecoratedMatrix) -> Result<MarkedSequence, LabelError> {
        m.validate()?;
        let mut seq = Vec::with_capacity(m.cols);
        for r in 1..=m.cols {
            let ones: Vec<usize> = (1..=m.rows).filter(|&i| m.entry(i, r) != 0).collect();
            if ones.len() != 1 || m.entry(ones[0], r) != 1 {
                return Err(LabelError::NotASequenceMatrix);
            }
            seq.push(ones[0] as u8);
        }
        let marks = m.delta.iter().map(|&(_, j)| j).collect();
        Ok(MarkedSequence::new(seq, marks))
    }
}

impl fmt::Display for MarkedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for x in &self.seq {
            write!(f, "{x}")?;
        }
        f.write_str(",{")?;
        for (k, m) in self.marks.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("})")
    }
}

/// All sequences in `{1..n}^d`, lexicographic.
pub fn sequences(n: u8, d: usize) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|s| {
                (1..=n).map(move |x| {
                    let mut t = s.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

/// Mark sets allowed on a sequence: positions whose values strictly decrease.
pub fn admissible_marks(seq: &[u8]) -> Vec<Vec<usize>> {
    fn go(seq: &[u8], start: usize, bound: u8, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(acc.clone());
        for j in start..seq.len() {
            if seq[j] < bound {
                acc.push(j + 1);
                go(seq, j + 1, seq[j], acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(seq, 0, u8::MAX, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `Ξ_{n,1^d}` as marked sequences, sorted.
pub fn enumerate_xi_tensor(n: u8, d: usize) -> Vec<MarkedSequence> {
    let mut out = Vec::new();
    for seq in sequences(n, d) {
        for marks in admissible_marks(&seq) {
            out.push(MarkedSequence { seq: seq.clone(), marks });
        }
    }
    out.sort();
    out
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Binomial coefficient that is zero for negative arguments.
pub fn binomial_signed(n: i64, k: i64) -> u128 {
    if n < 0 || k < 0 {
        0
    } else {
        binomial(n as u64, k as u64)
    }
}

/// `|Ξ_{n,1^d}| = Σ_k C(d,k) C(n,k) n^(d-k)`.
pub fn count_xi_tensor(n: u64, d: u64) -> u128 {
    (0..=n.min(d)).map(|k| binomial(d, k) * binomial(n, k) * (n as u128).pow((d - k) as u32)).sum()
}

/// Counting data of a sequence over `{1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceStats {
    /// `i(1)`: number of entries equal to 1.
    pub ones: usize,
    /// `i(2)`: number of entries equal to 2.
    pub twos: usize,
    /// Pairs `j < m` with `i_j > i_m`.
    pub inversions: usize,
    /// `φ_j = #{p < j : i_p = 1}` for `j = 1..d`.
    pub phi: Vec<usize>,
}

pub fn sequence_stats(seq: &[u8]) -> SequenceStats {
    let mut phi = Vec::with_capacity(seq.len());
    let mut ones = 0;
    let mut twos_before = 0;
    let mut inversions = 0;
    for &x in seq {
        phi.push(ones);
        if x == 1 {
            ones += 1;
            inversions += twos_before;
        } else {
            twos_before += 1;
        }
    }
    SequenceStats { ones, twos: seq.len() - ones, inversions, phi }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_diagnostics() {
        let ok = DecoratedMatrix::from_rows(&[vec![1, 0, 2], vec![1, 1, 0], vec![0, 3, 0]], vec![(1, 3), (2, 1)]).unwrap();
        assert_eq!(ok.validate(), Ok(()));
        let zero = DecoratedMatrix::from_rows(&[vec![1, 0], vec![0, 1]], vec![(1, 2)]).unwrap();
        assert_eq!(zero.validate(), Err(LabelError::ZeroEntry(1, 2)));
        let order = DecoratedMatrix::from_rows(&[vec![1, 1], vec![1, 0]], vec![(1, 1), (2, 2)]).unwrap();
        assert_eq!(order.validate(), Err(LabelError::ColumnsNotDecreasing));
    }

    #[test]
    fn transpose_rule() {
        let x = DecoratedMatrix::from_rows(&[vec![1, 1], vec![0, 0]], vec![(1, 2)]).unwrap();
        let t = DecoratedMatrix::from_rows(&[vec![1, 0], vec![1, 0]], vec![(2, 1)]).unwrap();
        assert_eq!(x.transpose(), t);
        let y = DecoratedMatrix::from_rows(&[vec![0, 1], vec![1, 0]], vec![(1, 2), (2, 1)]).unwrap();
        assert_eq!(y.transpose(), y);
    }

    #[test]
    fn hasse_diagram() {
        assert!(Deco::Empty.le(Deco::D22));
        assert!(Deco::D11.le(Deco::D12));
        assert!(!Deco::D12.le(Deco::D21));
        assert!(!Deco::D22.le(Deco::D12D21));
        assert!(Deco::D21.le(Deco::D12D21));
    }

    #[test]
    fn order_examples() {
        let a = Label2::new(2, 0, 0, 1, Deco::D22);
        let b = Label2::new(1, 1, 1, 0, Deco::D12D21);
        assert_eq!(order_compare(&a, &b), Ok(Comparison::Incomparable));
        let c = Label2::new(1, 0, 0, 1, Deco::Empty);
        assert_eq!(order_compare(&c, &c.with_deco(Deco::D11)), Ok(Comparison::Less));
        assert_eq!(order_compare(&c, &Label2::new(0, 1, 1, 0, Deco::Empty)), Ok(Comparison::Less));
        assert_eq!(order_compare(&c, &Label2::new(2, 0, 0, 0, Deco::Empty)), Err(LabelError::MarginMismatch));
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_xi(2, 1).len(), 8);
        assert_eq!(enumerate_xi2(1).len(), 8);
        assert_eq!(enumerate_xi_tensor(2, 2).len(), 13);
        let ex = MarkedSequence::new(vec![2, 3, 3, 1, 2], vec![2, 4]);
        assert!(enumerate_xi_tensor(3, 5).contains(&ex));
    }

    #[test]
    fn stats() {
        let s = sequence_stats(&[2, 1, 1]);
        assert_eq!((s.ones, s.inversions, s.phi.clone()), (2, 2, vec![0, 0, 1]));
        assert_eq!(sequence_stats(&[1, 1, 2]).inversions, 0);
        let t = sequence_stats(&[2, 1]);
        assert_eq!((t.twos, t.inversions, t.phi), (1, 1, vec![0, 0]));
    }

    #[test]
    fn tensor_counts() {
        assert_eq!(count_xi_tensor(2, 1), 4);
        assert_eq!(count_xi_tensor(2, 3), 38);
        assert_eq!(count_xi_tensor(3, 5), 2358);
    }
}
