//! Subspaces of `F_p^d` in reduced row echelon form.

use alloc::vec;
use alloc::vec::Vec;

/// A vector over `F_p`, entries in `0..p`.
pub type FpVector = Vec<u64>;

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse.
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Reduces rows to RREF over `F_p`, dropping zero rows.
fn rref(p: u64, mut rows: Vec<FpVector>, cols: usize) -> Vec<FpVector> {
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..rows[i].len() {
                    rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    rows
}

/// A subspace of `F_p^d`, stored by its canonical RREF basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    pub p: u64,
    pub d: usize,
    pub basis: Vec<FpVector>,
}

impl Subspace {
    pub fn zero(p: u64, d: usize) -> Self {
        Subspace { p, d, basis: Vec::new() }
    }

    pub fn full(p: u64, d: usize) -> Self {
        let basis = (0..d)
            .map(|i| {
                let mut v = vec![0; d];
                v[i] = 1;
                v
            })
            .collect();
        Subspace { p, d, basis }
    }

    pub fn span(p: u64, d: usize, vectors: &[FpVector]) -> Self {
        let rows = vectors.iter().map(|v| v.iter().map(|x| x % p).collect()).collect();
        Subspace { p, d, basis: rref(p, rows, d) }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Number of vectors, `p^dim`.
    pub fn size(&self) -> u64 {
        self.p.pow(self.dim() as u32)
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rref(self.p, rows, self.d).len() == self.dim()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace { p: self.p, d: self.d, basis: rref(self.p, rows, self.d) }
    }

    /// Intersection by the Zassenhaus algorithm.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let d = self.d;
        let mut rows: Vec<FpVector> = Vec::new();
        for u in &self.basis {
            let mut r = u.clone();
            r.extend_from_slice(u);
            rows.push(r);
        }
        for w in &other.basis {
            let mut r = w.clone();
            r.extend(core::iter::repeat_n(0, d));
            rows.push(r);
        }
        let red = rref(self.p, rows, 2 * d);
        let inter: Vec<FpVector> =
            red.into_iter().filter(|r| r[..d].iter().all(|&x| x == 0)).map(|r| r[d..].to_vec()).collect();
        Subspace::span(self.p, d, &inter)
    }

    /// All vectors of the subspace.
    pub fn elements(&self) -> Vec<FpVector> {
        all_vectors(self.p, self.dim())
            .into_iter()
            .map(|c| {
                let mut v = vec![0u64; self.d];
                for (a, b) in c.iter().zip(&self.basis) {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x = (*x + a * y) % self.p;
                    }
                }
                v
            })
            .collect()
    }

    /// `g * self` for an invertible matrix `g` given by rows.
    pub fn transform(&self, g: &[FpVector]) -> Subspace {
        let images: Vec<FpVector> = self.basis.iter().map(|b| apply(self.p, g, b)).collect();
        Subspace::span(self.p, self.d, &images)
    }
}

/// `g v` for a matrix `g` given by rows.
pub fn apply(p: u64, g: &[FpVector], v: &[u64]) -> FpVector {
    g.iter().map(|row| row.iter().zip(v).fold(0, |acc, (a, b)| (acc + a * b) % p)).collect()
}

pub fn sub(p: u64, a: &[u64], b: &[u64]) -> FpVector {
    a.iter().zip(b).map(|(x, y)| (x + p - y) % p).collect()
}

/// All vectors of `F_p^d` in lexicographic order.
pub fn all_vectors(p: u64, d: usize) -> Vec<FpVector> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|v: FpVector| {
                (0..p).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// All subspaces of `F_p^d` of dimension `k`, one RREF matrix per pivot set
/// and filling of the free entries.
pub fn subspaces(p: u64, d: usize, k: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    let mut pivots = Vec::new();
    fn choose(d: usize, k: usize, start: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for c in start..d {
            acc.push(c);
            choose(d, k, c + 1, acc, out);
            acc.pop();
        }
    }
    choose(d, k, 0, &mut Vec::new(), &mut pivots);
    for piv in pivots {
        // Free positions: (row i, column c) with c > piv[i] and c not a pivot.
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| ((piv[i] + 1)..d).filter(|c| !piv.contains(c)).map(move |c| (i, c)))
            .collect();
        for fill in all_vectors(p, free.len()) {
            let mut basis = vec![vec![0u64; d]; k];
            for (i, &c) in piv.iter().enumerate() {
                basis[i][c] = 1;
            }
            for (&(i, c), &x) in free.iter().zip(&fill) {
                basis[i][c] = x;
            }
            out.push(Subspace { p, d, basis });
        }
    }
    out
}

/// A random invertible matrix over `F_p`, drawn by rejection from a
/// caller-supplied stream of residues.
pub fn random_invertible(p: u64, d: usize, mut next: impl FnMut() -> u64) -> Vec<FpVector> {
    loop {
        let g: Vec<FpVector> = (0..d).map(|_| (0..d).map(|_| next() % p).collect()).collect();
        if rref(p, g.clone(), d).len() == d {
            return g;
        }
    }
}
