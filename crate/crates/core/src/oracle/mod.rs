//! Brute-force verification over prime fields: flags and vectors in
//! `F_p^d`, their orbit invariants, convolution counts, and structure
//! constants interpolated as polynomials in `q`.
//!
//! Only the case of two-step flags (`n = 2`) is covered, plus complete flags
//! for the tensor space.

mod fp;

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::decorated::{enumerate_xi2, enumerate_xi_tensor, Deco, Label2, MarkedSequence};
use crate::error::OracleError;
use crate::field::{lagrange_interpolate, substitute_q};
use crate::schur::SchurElement;

pub use fp::{all_vectors, apply, random_invertible, sub, subspaces, FpVector, Subspace};

/// Enumeration is refused when `p^d` exceeds this.
pub const SIZE_GUARD: u64 = 1 << 20;

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| !p.is_multiple_of(k))
}

fn guard(p: u64, d: usize) -> Result<(), OracleError> {
    if !is_prime(p) {
        return Err(OracleError::NotPrime(p));
    }
    match p.checked_pow(d as u32) {
        Some(n) if n <= SIZE_GUARD => Ok(()),
        _ => Err(OracleError::SizeGuard { p, d }),
    }
}

/// A partial flag `0 ⊂ F_1 ⊂ ... ⊂ F_{n-1} ⊂ F_p^d`; only the proper steps
/// are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    pub steps: Vec<Subspace>,
}

impl Flag {
    pub fn two_step(f1: Subspace) -> Self {
        Flag { steps: vec![f1] }
    }

    pub fn transform(&self, g: &[FpVector]) -> Flag {
        Flag { steps: self.steps.iter().map(|s| s.transform(g)).collect() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlagType {
    /// `0 ⊂ F_1 ⊂ F_p^d` with `dim F_1 = r`.
    TwoStep(usize),
    /// `F_1 ⊂ F_2 ⊂ ... ⊂ F_{d-1}` with `dim F_i = i`.
    Complete,
}

/// `(F, F', v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagTriple {
    pub p: u64,
    pub f: Flag,
    pub fp: Flag,
    pub v: FpVector,
}

impl FlagTriple {
    pub fn transform(&self, g: &[FpVector]) -> FlagTriple {
        FlagTriple { p: self.p, f: self.f.transform(g), fp: self.fp.transform(g), v: apply(self.p, g, &self.v) }
    }
}

/// All flags of the given type in `F_p^d`, in canonical echelon form.
pub fn enumerate_flags(d: usize, p: u64, ty: FlagType) -> Result<Vec<Flag>, OracleError> {
    guard(p, d)?;
    match ty {
        FlagType::TwoStep(r) => {
            if r > d {
                return Err(OracleError::Shape);
            }
            Ok(subspaces(p, d, r).into_iter().map(Flag::two_step).collect())
        }
        FlagType::Complete => {
            let mut flags: Vec<Vec<Subspace>> = vec![Vec::new()];
            for k in 1..d {
                let candidates = subspaces(p, d, k);
                flags = flags
                    .into_iter()
                    .flat_map(|chain| {
                        let below = chain.last().cloned().unwrap_or_else(|| Subspace::zero(p, d));
                        candidates
                            .iter()
                            .filter(|s| s.sum(&below).dim() == k)
                            .map(|s| {
                                let mut c = chain.clone();
                                c.push(s.clone());
                                c
                            })
                            .collect::<Vec<_>>()
                    })
                    .collect();
            }
            Ok(flags.into_iter().map(|steps| Flag { steps }).collect())
        }
    }
}

fn pair_matrix(x: &Subspace, y: &Subspace) -> [u32; 4] {
    let a11 = x.intersect(y).dim();
    let a22 = x.d - x.sum(y).dim();
    [a11, x.dim() - a11, y.dim() - a11, a22].map(|n| n as u32)
}

fn pair_decoration(x: &Subspace, y: &Subspace, v: &[u64]) -> Deco {
    if v.iter().all(|&c| c == 0) {
        return Deco::Empty;
    }
    let (in_x, in_y) = (x.contains(v), y.contains(v));
    match (in_x, in_y) {
        (true, true) => Deco::D11,
        (true, false) => Deco::D12,
        (false, true) => Deco::D21,
        (false, false) if x.sum(y).contains(v) => Deco::D12D21,
        _ => Deco::D22,
    }
}

/// The label `(A, Δ)` of the orbit of a triple of two-step flags and a vector.
pub fn orbit_invariant(t: &FlagTriple) -> Result<Label2, OracleError> {
    let ([x], [y]) = (t.f.steps.as_slice(), t.fp.steps.as_slice()) else {
        return Err(OracleError::Shape);
    };
    Ok(Label2 { a: pair_matrix(x, y), deco: pair_decoration(x, y, &t.v) })
}

/// The standard triple in the orbit of `label`: the basis `e_{ijk}` is laid
/// out in lexicographic order of `(i, j, k)`, `F_1` is spanned by the
/// `e_{1jk}`, `F'_1` by the `e_{i1k}`, and `v = Σ_{(i,j) ∈ Δ} e_{ij1}`.
pub fn canonical_representative(label: &Label2, p: u64) -> FlagTriple {
    let d = label.d() as usize;
    let unit = |i: usize| {
        let mut e = vec![0u64; d];
        e[i] = 1;
        e
    };
    let mut first: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut f1 = Vec::new();
    let mut fp1 = Vec::new();
    let mut next = 0;
    for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let n = label.a[(i - 1) * 2 + (j - 1)] as usize;
        for k in 0..n {
            if k == 0 {
                first.insert((i, j), next);
            }
            if i == 1 {
                f1.push(unit(next));
            }
            if j == 1 {
                fp1.push(unit(next));
            }
            next += 1;
        }
    }
    let mut v = vec![0u64; d];
    for pos in label.deco.positions() {
        v[first[pos]] = 1;
    }
    FlagTriple {
        p,
        f: Flag::two_step(Subspace::span(p, d, &f1)),
        fp: Flag::two_step(Subspace::span(p, d, &fp1)),
        v,
    }
}

/// The set `{u : (X, Y, u) has decoration deco}` as a signed combination of
/// indicator functions of subspaces.
fn cell(x: &Subspace, y: &Subspace, deco: Deco) -> Vec<(i64, Subspace)> {
    let zero = Subspace::zero(x.p, x.d);
    let meet = x.intersect(y);
    let join = x.sum(y);
    match deco {
        Deco::Empty => vec![(1, zero)],
        Deco::D11 => vec![(1, meet), (-1, zero)],
        Deco::D12 => vec![(1, x.clone()), (-1, meet)],
        Deco::D21 => vec![(1, y.clone()), (-1, meet)],
        Deco::D12D21 => vec![(1, join), (-1, x.clone()), (-1, y.clone()), (1, meet)],
        Deco::D22 => vec![(1, Subspace::full(x.p, x.d)), (-1, join)],
    }
}

fn margins_compatible(left: &Label2, right: &Label2, out: &Label2) -> bool {
    left.co() == right.ro() && out.ro() == left.ro() && out.co() == right.co() && left.d() == right.d()
}

/// The coefficient of `T_out` in `T_left * T_right` over `F_p`: the number
/// of `(H, u)` with `(F, H, u)` in the left orbit and `(H, F', v - u)` in the
/// right orbit, for `(F, F', v)` the standard triple of `out`.
///
/// For each `H` the vectors `u` are counted through the subspace-cell
/// description of both decorations: `#{u ∈ U : v - u ∈ W}` is `|U ∩ W|` when
/// `v ∈ U + W` and `0` otherwise.
pub fn convolution_count(left: &Label2, right: &Label2, out: &Label2, p: u64) -> Result<u64, OracleError> {
    if !margins_compatible(left, right, out) {
        return Ok(0);
    }
    let d = out.d() as usize;
    guard(p, d)?;
    let t = canonical_representative(out, p);
    let (x, y) = (&t.f.steps[0], &t.fp.steps[0]);
    let mut total: i128 = 0;
    for h in subspaces(p, d, left.co()[0] as usize) {
        if pair_matrix(x, &h) != left.a || pair_matrix(&h, y) != right.a {
            continue;
        }
        let lc = cell(x, &h, left.deco);
        let rc = cell(&h, y, right.deco);
        for (s1, u) in &lc {
            for (s2, w) in &rc {
                if u.sum(w).contains(&t.v) {
                    total += (*s1 * *s2) as i128 * u.intersect(w).size() as i128;
                }
            }
        }
    }
    u64::try_from(total).map_err(|_| OracleError::Inconsistent("negative count".to_string()))
}

/// The same count by direct enumeration of all `H` and all `u`.
pub fn convolution_count_naive(left: &Label2, right: &Label2, out: &Label2, p: u64) -> Result<u64, OracleError> {
    if !margins_compatible(left, right, out) {
        return Ok(0);
    }
    let d = out.d() as usize;
    guard(p, d)?;
    let t = canonical_representative(out, p);
    let vectors = all_vectors(p, d);
    let mut n = 0;
    for h in subspaces(p, d, left.co()[0] as usize) {
        let hf = Flag::two_step(h);
        for u in &vectors {
            let a = FlagTriple { p, f: t.f.clone(), fp: hf.clone(), v: u.clone() };
            let b = FlagTriple { p, f: hf.clone(), fp: t.fp.clone(), v: sub(p, &t.v, u) };
            if orbit_invariant(&a)? == *left && orbit_invariant(&b)? == *right {
                n += 1;
            }
        }
    }
    Ok(n)
}

/// One entry of the per-prime count log.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRecord {
    pub label: Label2,
    pub p: u64,
    pub count: u64,
}

/// `T_left * T_right` in `MU_v(2,d)`, with each coefficient interpolated
/// from point counts at the given primes as a polynomial in `q` of degree at
/// most `d^2` (retrying once with `2 d^2`), then evaluated at `q = v^2`.
pub fn structure_constants(
    left: &Label2,
    right: &Label2,
    primes: &[u64],
) -> Result<(SchurElement, Vec<CountRecord>), OracleError> {
    let d = left.d() as usize;
    structure_constants_with_bound(left, right, primes, d * d)
}

/// As [`structure_constants`] with an explicit degree bound; points beyond
/// the first `bound + 1` are used as checks.
pub fn structure_constants_with_bound(
    left: &Label2,
    right: &Label2,
    primes: &[u64],
    bound: usize,
) -> Result<(SchurElement, Vec<CountRecord>), OracleError> {
    let d = left.d();
    let mut log = Vec::new();
    let mut out = SchurElement::zero(d);
    if left.co() != right.ro() {
        return Ok((out, log));
    }
    for label in enumerate_xi2(d) {
        if label.ro() != left.ro() || label.co() != right.co() {
            continue;
        }
        let mut points = Vec::with_capacity(primes.len());
        for &p in primes {
            let count = convolution_count(left, right, &label, p)?;
            log.push(CountRecord { label, p, count });
            points.push((BigRational::from_integer(BigInt::from(p)), BigRational::from_integer(BigInt::from(count))));
        }
        let poly = lagrange_interpolate(&points, bound)
            .or_else(|_| lagrange_interpolate(&points, 2 * bound))
            .map_err(|source| OracleError::Interpolation { label: label.to_string(), source })?;
        out.add_term(label, substitute_q(&poly));
    }
    Ok((out, log))
}

/// The first `n` primes.
pub fn first_primes(n: usize) -> Vec<u64> {
    (2..).filter(|&p| is_prime(p)).take(n).collect()
}

/// The label in `Ξ_{2,1^d}` of a triple `(F, F', v)` with `F` two-step and
/// `F'` complete.
///
/// The sequence records at which steps of `F'` the intersection with `F_1`
/// grows.  For the marks: if `v ∈ F_1` the only mark is at the first step
/// of `F'` containing `v`; otherwise `j_2` is the first step `s` with
/// `v ∈ F_1 + F'_s`, and a second mark sits at the first step containing
/// `v` when that step lies beyond `j_2`.
pub fn tensor_orbit_invariant(t: &FlagTriple) -> Result<MarkedSequence, OracleError> {
    let [f1] = t.f.steps.as_slice() else {
        return Err(OracleError::Shape);
    };
    let (p, d) = (t.p, f1.d);
    if t.fp.steps.len() + 1 != d {
        return Err(OracleError::Shape);
    }
    let mut chain = vec![Subspace::zero(p, d)];
    chain.extend(t.fp.steps.iter().cloned());
    chain.push(Subspace::full(p, d));
    let seq: Vec<u8> =
        (1..=d).map(|s| if chain[s].intersect(f1).dim() > chain[s - 1].intersect(f1).dim() { 1 } else { 2 }).collect();
    let v = &t.v;
    if v.iter().all(|&c| c == 0) {
        return Ok(MarkedSequence::new(seq, Vec::new()));
    }
    let first_containing = |sp: &dyn Fn(usize) -> Subspace| (1..=d).find(|&s| sp(s).contains(v)).unwrap_or(d);
    let s0 = first_containing(&|s| chain[s].clone());
    let marks = if f1.contains(v) {
        vec![s0]
    } else {
        let j2 = first_containing(&|s| chain[s].sum(f1));
        if s0 == j2 {
            vec![j2]
        } else {
            vec![j2, s0]
        }
    };
    let label = MarkedSequence::new(seq, marks);
    label.validate(2).map_err(|e| OracleError::Inconsistent(alloc::format!("{label}: {e}")))?;
    Ok(label)
}

/// The standard triple of a marked sequence: `F'` is the coordinate flag,
/// `F_1` is spanned by the `e_s` with `i_s = 1`, and `v = Σ_{j ∈ J} e_j`.
pub fn tensor_canonical_representative(x: &MarkedSequence, p: u64) -> FlagTriple {
    let d = x.d();
    let unit = |i: usize| {
        let mut e = vec![0u64; d];
        e[i] = 1;
        e
    };
    let f1: Vec<FpVector> = (0..d).filter(|&s| x.seq[s] == 1).map(unit).collect();
    let steps = (1..d).map(|s| Subspace::span(p, d, &(0..s).map(unit).collect::<Vec<_>>())).collect();
    let mut v = vec![0u64; d];
    for &j in &x.marks {
        v[j - 1] = 1;
    }
    FlagTriple { p, f: Flag::two_step(Subspace::span(p, d, &f1)), fp: Flag { steps }, v }
}

/// The coefficient of `T_out` in `T_key * T_x`, where `key` labels an orbit
/// of two-step flag pairs and `x`, `out` label orbits in `Ξ_{2,1^d}`: the
/// number of `(H, u)` with `(F, H, u)` in the orbit of `key` and
/// `(H, F', v - u)` in the orbit of `x`, for `(F, F', v)` the standard triple
/// of `out`.
pub fn tensor_convolution_count(key: &Label2, x: &MarkedSequence, out: &MarkedSequence, p: u64) -> Result<u64, OracleError> {
    let d = out.d();
    if x.d() != d || key.d() as usize != d {
        return Err(OracleError::Shape);
    }
    guard(p, d)?;
    let ones = |m: &MarkedSequence| m.seq.iter().filter(|&&c| c == 1).count() as u32;
    if key.ro()[0] != ones(out) || key.co()[0] != ones(x) {
        return Ok(0);
    }
    let t = tensor_canonical_representative(out, p);
    let f1 = &t.f.steps[0];
    let mut total: i64 = 0;
    for h in subspaces(p, d, key.co()[0] as usize) {
        if pair_matrix(f1, &h) != key.a {
            continue;
        }
        let hf = Flag::two_step(h.clone());
        let zero = FlagTriple { p, f: hf.clone(), fp: t.fp.clone(), v: vec![0; d] };
        if tensor_orbit_invariant(&zero)?.seq != x.seq {
            continue;
        }
        for (sign, u_space) in cell(f1, &h, key.deco) {
            for u in u_space.elements() {
                let w = FlagTriple { p, f: hf.clone(), fp: t.fp.clone(), v: sub(p, &t.v, &u) };
                if tensor_orbit_invariant(&w)? == *x {
                    total += sign;
                }
            }
        }
    }
    u64::try_from(total).map_err(|_| OracleError::Inconsistent("negative count".to_string()))
}

/// `T_key * T_x` in the tensor space, as `(output label, coefficient)`
/// pairs, interpolated from counts at the given primes with the given
/// degree bound in `q`; surplus points serve as checks.
pub fn tensor_structure_constants(
    key: &Label2,
    x: &MarkedSequence,
    primes: &[u64],
    bound: usize,
) -> Result<(Vec<(MarkedSequence, crate::field::RationalFunction)>, Vec<TensorCountRecord>), OracleError> {
    let d = x.d();
    let mut out = Vec::new();
    let mut log = Vec::new();
    for label in enumerate_xi_tensor(2, d) {
        let mut points = Vec::with_capacity(primes.len());
        for &p in primes {
            let count = tensor_convolution_count(key, x, &label, p)?;
            log.push(TensorCountRecord { label: label.clone(), p, count });
            points.push((BigRational::from_integer(BigInt::from(p)), BigRational::from_integer(BigInt::from(count))));
        }
        let poly = lagrange_interpolate(&points, bound)
            .map_err(|source| OracleError::Interpolation { label: label.to_string(), source })?;
        let c = substitute_q(&poly);
        if !c.is_zero() {
            out.push((label, c));
        }
    }
    Ok((out, log))
}

/// One entry of the per-prime count log for tensor products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorCountRecord {
    pub label: MarkedSequence,
    pub p: u64,
    pub count: u64,
}
