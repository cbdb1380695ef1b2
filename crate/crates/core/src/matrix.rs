//! Dense matrices over a [`GaloisField`] with exact elimination.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::{Fe, GaloisField};

/// Row-major dense matrix of field elements.
///
/// The matrix does not own its field; every operation that needs arithmetic
/// takes the field explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Fe::ZERO; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Fe>>, cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::ShapeMismatch(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Fe) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Fe::ONE } else { Fe::ZERO })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Fe] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Fe]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<Fe> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.row(i).iter().all(|x| x.is_zero())
    }

    pub fn map(&self, f: impl Fn(Fe) -> Fe) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| f(x)).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Stacks matrices with equal column counts.
    pub fn vstack(parts: &[&Matrix]) -> Result<Self> {
        let cols = parts.first().map_or(0, |m| m.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for m in parts {
            if m.cols != cols {
                return Err(Error::ShapeMismatch(format!("{} columns vs {cols}", m.cols)));
            }
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Pads with zero rows at the bottom up to `rows` rows.
    pub fn pad_rows(&self, rows: usize) -> Self {
        let mut out = self.clone();
        out.data.resize(rows.max(self.rows) * self.cols, Fe::ZERO);
        out.rows = rows.max(self.rows);
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix { rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    /// `self · otherᵀ`.
    pub fn mul_transpose(&self, f: &GaloisField, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!("{} vs {} columns", self.cols, other.cols)));
        }
        Ok(Self::from_fn(self.rows, other.rows, |i, j| dot(f, self.row(i), other.row(j))))
    }

    /// Row vector times matrix: `Σ_i v_i · row_i`.
    pub fn left_mul(&self, f: &GaloisField, v: &[Fe]) -> Vec<Fe> {
        let mut out = vec![Fe::ZERO; self.cols];
        for (i, &c) in v.iter().enumerate() {
            if !c.is_zero() {
                axpy(f, &mut out, c, self.row(i));
            }
        }
        out
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self, f: &GaloisField) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c));
            for x in m.row_mut(r) {
                *x = f.mul(*x, inv);
            }
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i != r {
                    let factor = m.get(i, c);
                    if !factor.is_zero() {
                        axpy(f, m.row_mut(i), f.neg(factor), &pivot_row);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, f: &GaloisField) -> usize {
        let mut basis = EchelonBasis::new(self.cols);
        self.iter_rows().filter(|r| basis.insert(f, r.to_vec())).count()
    }

    /// Determinant of a square matrix.
    pub fn det(&self, f: &GaloisField) -> Fe {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = Fe::ONE;
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return Fe::ZERO;
            };
            if p != c {
                m.swap_rows(c, p);
                det = f.neg(det);
            }
            let pivot = m.get(c, c);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot);
            let pivot_row = m.row(c).to_vec();
            for i in c + 1..m.rows {
                let factor = m.get(i, c);
                if !factor.is_zero() {
                    axpy(f, m.row_mut(i), f.neg(f.mul(factor, inv)), &pivot_row);
                }
            }
        }
        det
    }

    /// Basis (as rows) of `{x : self · xᵀ = 0}`.
    pub fn nullspace(&self, f: &GaloisField) -> Matrix {
        let (r, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, Fe::ONE);
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(k, pc, f.neg(r.get(i, fc)));
            }
        }
        out
    }

    /// Keeps each row that is independent of the rows kept before it.
    /// Returns the reduced matrix and the indices of the kept rows.
    pub fn independent_rows(&self, f: &GaloisField) -> (Matrix, Vec<usize>) {
        let mut basis = EchelonBasis::new(self.cols);
        let kept: Vec<usize> = (0..self.rows).filter(|&i| basis.insert(f, self.row(i).to_vec())).collect();
        (self.select_rows(&kept), kept)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

pub fn dot(f: &GaloisField, a: &[Fe], b: &[Fe]) -> Fe {
    a.iter().zip(b).fold(Fe::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// `y += c · x`.
pub fn axpy(f: &GaloisField, y: &mut [Fe], c: Fe, x: &[Fe]) {
    for (yi, &xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = f.add(*yi, f.mul(c, xi));
        }
    }
}

pub fn weight(v: &[Fe]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// Incrementally built echelon basis; each stored vector is reduced against
/// its predecessors and has its pivot normalised to one.
///
/// Supports stack-like use via [`EchelonBasis::truncate`].
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    len: usize,
    vecs: Vec<(usize, Vec<Fe>)>,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        EchelonBasis { len, vecs: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.vecs.len()
    }

    pub fn vector_len(&self) -> usize {
        self.len
    }

    /// Reduces `v` in place; afterwards `v` is zero iff it was in the span.
    pub fn reduce(&self, f: &GaloisField, v: &mut [Fe]) {
        for (pivot, b) in &self.vecs {
            let c = v[*pivot];
            if !c.is_zero() {
                axpy(f, v, f.neg(c), b);
            }
        }
    }

    pub fn contains(&self, f: &GaloisField, v: &[Fe]) -> bool {
        let mut w = v.to_vec();
        self.reduce(f, &mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Adds `v` if it is independent; returns whether it was added.
    pub fn insert(&mut self, f: &GaloisField, mut v: Vec<Fe>) -> bool {
        debug_assert_eq!(v.len(), self.len);
        self.reduce(f, &mut v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(v[pivot]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        self.vecs.push((pivot, v));
        true
    }

    pub fn truncate(&mut self, rank: usize) {
        self.vecs.truncate(rank);
    }
}
