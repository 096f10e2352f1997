use alloc::vec;
use alloc::vec::Vec;

use crate::field::Rf;
use crate::linalg;

/// A square matrix over `Q(v)`; `rows[i][j]` is the coefficient of basis
/// vector `i` in the image of basis vector `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: Vec<Vec<Rf>>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Matrix { rows: vec![vec![Rf::zero(); n]; n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Rf::one())
    }

    pub fn scalar(n: usize, c: &Rf) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.rows[i][i] = c.clone();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rf {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: Rf) {
        self.rows[i][j] = c;
    }

    pub fn rows(&self) -> &[Vec<Rf>] {
        &self.rows
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.rows[k][j];
                    if !b.is_zero() {
                        out.rows[i][j] = &out.rows[i][j] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, x: &[Rf]) -> Vec<Rf> {
        self.rows
            .iter()
            .map(|row| {
                row.iter().zip(x).filter(|(a, b)| !a.is_zero() && !b.is_zero()).fold(Rf::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rf) -> Matrix {
        Matrix { rows: self.rows.iter().map(|r| r.iter().map(|x| x * c).collect()).collect() }
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&Rf, &Rf) -> Rf) -> Matrix {
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect()).collect();
        Matrix { rows }
    }

    /// `Some(c)` if the matrix is `c` times the identity.
    pub fn as_scalar(&self) -> Option<Rf> {
        let n = self.dim();
        let c = if n == 0 { Rf::zero() } else { self.rows[0][0].clone() };
        for i in 0..n {
            for j in 0..n {
                let expect = if i == j { &c } else { &Rf::zero() };
                if &self.rows[i][j] != expect {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.rows)
    }
}
