//! Finite-dimensional simple `MU_v(2)`-modules: the pullbacks `L±(n,0)`,
//! `L±(n,1)` of simple `U_v(sl2)`-modules and the modules `L±(n,01)`.

mod matrix;
mod weights;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::RepError;
use crate::field::{quantum_integer, Rf};
use crate::pbw::{casimir_element, PbwElement};
use crate::word::{GeneratorWord, Letter};

pub use matrix::Matrix;
pub use weights::{decompose_weight_table, weight_table, Weight, WeightTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModuleKind {
    /// `ℓ` acts as zero.
    L0,
    /// `ℓ` acts as the identity.
    L1,
    L01,
}

impl ModuleKind {
    fn tag(self) -> &'static str {
        match self {
            ModuleKind::L0 => "0",
            ModuleKind::L1 => "1",
            ModuleKind::L01 => "01",
        }
    }

    fn min_n(self) -> u32 {
        match self {
            ModuleKind::L01 => 1,
            _ => 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_rf(self) -> Rf {
        match self {
            Sign::Plus => Rf::one(),
            Sign::Minus => -Rf::one(),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// The name `L±(n, kind)` of a simple module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleSpec {
    pub kind: ModuleKind,
    pub sign: Sign,
    pub n: u32,
}

impl ModuleSpec {
    pub fn new(kind: ModuleKind, sign: Sign, n: u32) -> Result<Self, RepError> {
        if n < kind.min_n() {
            return Err(RepError::InvalidN { kind: kind_name(kind), n, min: kind.min_n() });
        }
        Ok(ModuleSpec { kind, sign, n })
    }

    pub fn dim(&self) -> usize {
        match self.kind {
            ModuleKind::L01 => 2 * self.n as usize,
            _ => self.n as usize + 1,
        }
    }

    /// The basis as pairs `(i, ε)`: `m_i` for the pullbacks, and
    /// `m_{0,0}, ..., m_{n-1,0}, m_{1,1}, ..., m_{n,1}` for `L01`.
    pub fn basis(&self) -> Vec<(u32, u8)> {
        let n = self.n;
        match self.kind {
            ModuleKind::L0 => (0..=n).map(|i| (i, 0)).collect(),
            ModuleKind::L1 => (0..=n).map(|i| (i, 1)).collect(),
            ModuleKind::L01 => (0..n).map(|i| (i, 0)).chain((1..=n).map(|j| (j, 1))).collect(),
        }
    }

    /// The weights read off the basis: `m_{i,ε}` has weight `(±v^(n-2i), ε)`.
    pub fn weights(&self) -> WeightTable {
        let mut t = WeightTable::new();
        for (i, eps) in self.basis() {
            t.add(Weight { sign: self.sign, a: self.n as i64 - 2 * i as i64, eps }, 1);
        }
        t
    }
}

fn kind_name(kind: ModuleKind) -> &'static str {
    match kind {
        ModuleKind::L0 => "L(n,0)",
        ModuleKind::L1 => "L(n,1)",
        ModuleKind::L01 => "L(n,01)",
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}({},{})", self.sign.symbol(), self.n, self.kind.tag())
    }
}

impl FromStr for ModuleSpec {
    type Err = RepError;

    /// Parses `L+(n,0)`, `L-(n,1)`, `L+(n,01)`.
    fn from_str(s: &str) -> Result<Self, RepError> {
        let bad = || RepError::Parse(String::from(s));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let rest = t.strip_prefix('L').ok_or_else(bad)?;
        let mut chars = rest.chars();
        let sign = match chars.next() {
            Some('+') => Sign::Plus,
            Some('-') => Sign::Minus,
            _ => return Err(bad()),
        };
        let inner = chars.as_str().strip_prefix('(').and_then(|x| x.strip_suffix(')')).ok_or_else(bad)?;
        let (n, kind) = inner.split_once(',').ok_or_else(bad)?;
        let n: u32 = n.parse().map_err(|_| bad())?;
        let kind = match kind {
            "0" => ModuleKind::L0,
            "1" => ModuleKind::L1,
            "01" => ModuleKind::L01,
            _ => return Err(bad()),
        };
        ModuleSpec::new(kind, sign, n)
    }
}

/// A simple module with the matrices of `e, f, k, k^-1, ℓ` on the basis of
/// its [`ModuleSpec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleModule {
    pub spec: ModuleSpec,
    pub basis: Vec<(u32, u8)>,
    pub e: Matrix,
    pub f: Matrix,
    pub k: Matrix,
    pub k_inv: Matrix,
    pub ell: Matrix,
}

pub fn build_module(kind: ModuleKind, sign: Sign, n: u32) -> Result<IrreducibleModule, RepError> {
    let spec = ModuleSpec::new(kind, sign, n)?;
    let basis = spec.basis();
    let dim = basis.len();
    let index = |i: i64, eps: u8| basis.iter().position(|&b| b == (i as u32, eps)).filter(|_| i >= 0);
    let s = sign.as_rf();
    let qi = |m: i64| quantum_integer(m.max(0) as u32);
    let mut e = Matrix::zero(dim);
    let mut f = Matrix::zero(dim);
    let mut k = Matrix::zero(dim);
    let mut k_inv = Matrix::zero(dim);
    let mut ell = Matrix::zero(dim);
    let n64 = n as i64;
    let put = |m: &mut Matrix, to: Option<usize>, from: usize, c: Rf| {
        if let Some(r) = to {
            if !c.is_zero() {
                m.set(r, from, &m.get(r, from).clone() + &c);
            }
        }
    };
    for (col, &(i, eps)) in basis.iter().enumerate() {
        let i = i as i64;
        put(&mut k, Some(col), col, &s * &Rf::v_pow(n64 - 2 * i));
        put(&mut k_inv, Some(col), col, &s * &Rf::v_pow(2 * i - n64));
        if eps == 1 {
            put(&mut ell, Some(col), col, Rf::one());
        }
        match kind {
            ModuleKind::L0 | ModuleKind::L1 => {
                put(&mut f, index(i + 1, eps), col, Rf::one());
                put(&mut e, index(i - 1, eps), col, &s * &(qi(i) * qi(n64 + 1 - i)));
            }
            ModuleKind::L01 if eps == 0 => {
                put(&mut f, index(i + 1, 0), col, Rf::one());
                put(&mut f, index(i + 1, 1), col, Rf::v_pow(i) / qi(i + 1));
                put(&mut e, index(i - 1, 0), col, &s * &(Rf::v_pow(1) * qi(i) * qi(n64 - i)));
            }
            ModuleKind::L01 => {
                put(&mut f, index(i + 1, 1), col, Rf::v_pow(-1) * qi(i) / qi(i + 1));
                put(&mut e, index(i - 1, 1), col, &s * &(qi(i) * qi(n64 + 1 - i)));
                put(&mut e, index(i - 1, 0), col, &s * &(Rf::v_pow(i - n64) * qi(i)));
            }
        }
    }
    Ok(IrreducibleModule { spec, basis, e, f, k, k_inv, ell })
}

pub fn build(spec: ModuleSpec) -> IrreducibleModule {
    build_module(spec.kind, spec.sign, spec.n).expect("spec is validated on construction")
}

impl IrreducibleModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn generator(&self, g: Letter) -> &Matrix {
        match g {
            Letter::E => &self.e,
            Letter::F => &self.f,
            Letter::K => &self.k,
            Letter::KInv => &self.k_inv,
            Letter::L => &self.ell,
        }
    }

    /// The matrix of a word; letters act from right to left.
    pub fn word_matrix(&self, w: &GeneratorWord) -> Matrix {
        let mut m = Matrix::identity(self.dim());
        for &g in &w.letters {
            m = m.mul(self.generator(g));
        }
        m.scale(&w.scalar)
    }

    pub fn word_sum_matrix(&self, words: &[GeneratorWord]) -> Matrix {
        words.iter().fold(Matrix::zero(self.dim()), |acc, w| acc.add(&self.word_matrix(w)))
    }

    pub fn pbw_matrix(&self, x: &PbwElement) -> Matrix {
        let mut out = Matrix::zero(self.dim());
        for (m, c) in x.terms() {
            out = out.add(&self.word_matrix(&m.word()).scale(c));
        }
        out
    }

    fn check_len(&self, x: &[Rf]) -> Result<(), RepError> {
        if x.len() != self.dim() {
            return Err(RepError::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        Ok(())
    }

    pub fn act_word(&self, w: &GeneratorWord, x: &[Rf]) -> Result<Vec<Rf>, RepError> {
        self.check_len(x)?;
        let mut y = x.to_vec();
        for &g in w.letters.iter().rev() {
            y = self.generator(g).apply(&y);
        }
        Ok(y.into_iter().map(|c| c * &w.scalar).collect())
    }

    pub fn act_pbw(&self, x: &PbwElement, vec: &[Rf]) -> Result<Vec<Rf>, RepError> {
        self.check_len(vec)?;
        Ok(self.pbw_matrix(x).apply(vec))
    }

    /// The unit vector of the basis element `m_{i,ε}`.
    pub fn basis_vector(&self, i: u32, eps: u8) -> Option<Vec<Rf>> {
        let pos = self.basis.iter().position(|&b| b == (i, eps))?;
        Some((0..self.dim()).map(|j| if j == pos { Rf::one() } else { Rf::zero() }).collect())
    }
}

/// The scalar by which the Casimir element acts.
pub fn casimir_scalar(m: &IrreducibleModule) -> Result<Rf, RepError> {
    m.pbw_matrix(&casimir_element()).as_scalar().ok_or(RepError::NotScalar)
}

/// Dimension of the smallest subspace containing `start` and stable under
/// the given operators.
pub fn closure_dim(ops: &[Matrix], start: &[Rf]) -> usize {
    let mut span: Vec<Vec<Rf>> = Vec::new();
    let mut queue = alloc::vec![start.to_vec()];
    while let Some(x) = queue.pop() {
        let mut trial = span.clone();
        trial.push(x.clone());
        if crate::linalg::rank(&trial) > span.len() {
            span = trial;
            queue.extend(ops.iter().map(|op| op.apply(&x)));
        }
    }
    span.len()
}

/// A short description used in error messages and reports.
pub fn describe(specs: &[(ModuleSpec, u64)]) -> String {
    let parts: Vec<String> = specs.iter().map(|(s, m)| format!("{s}:{m}")).collect();
    parts.join(", ")
}

#[cfg(test)]
mod tests;
