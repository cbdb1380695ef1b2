use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::{Fe, GaloisField};
use crate::matrix::Matrix;
use crate::polyring::DensePolynomial;

/// `G(D) = G₀ + G₁D + … + G_μ D^μ` with constant `k × n` coefficients.
///
/// Trailing zero coefficients are dropped, so `G_μ` is nonzero unless the
/// whole matrix is zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyMatrix {
    shape: (usize, usize),
    mu: usize,
    mats: Vec<Matrix>,
}

impl PolyMatrix {
    pub fn new(mut mats: Vec<Matrix>) -> Result<Self> {
        let first = mats.first().ok_or_else(|| Error::ShapeMismatch("no coefficient matrices".into()))?;
        let shape = (first.rows(), first.cols());
        for (i, m) in mats.iter().enumerate() {
            if (m.rows(), m.cols()) != shape {
                return Err(Error::ShapeMismatch(format!(
                    "coefficient {i} is {}×{}, expected {}×{}",
                    m.rows(),
                    m.cols(),
                    shape.0,
                    shape.1
                )));
            }
        }
        while mats.len() > 1 && mats.last().is_some_and(Matrix::is_zero) {
            mats.pop();
        }
        Ok(PolyMatrix { shape, mu: mats.len() - 1, mats })
    }

    pub fn rows(&self) -> usize {
        self.shape.0
    }

    pub fn cols(&self) -> usize {
        self.shape.1
    }

    /// Highest power of `D` with a nonzero coefficient.
    pub fn memory(&self) -> usize {
        self.mu
    }

    pub fn coefficients(&self) -> &[Matrix] {
        &self.mats
    }

    /// `G_j`, or `None` outside `0..=μ`.
    pub fn coefficient(&self, j: isize) -> Option<&Matrix> {
        usize::try_from(j).ok().and_then(|j| self.mats.get(j))
    }

    /// Highest power of `D` in row `r`; `None` for a zero row.
    pub fn row_degree(&self, r: usize) -> Option<usize> {
        (0..self.mats.len()).rev().find(|&j| !self.mats[j].is_zero_row(r))
    }

    pub fn row_degrees(&self) -> Vec<Option<usize>> {
        (0..self.rows()).map(|r| self.row_degree(r)).collect()
    }

    pub fn entry(&self, r: usize, c: usize) -> DensePolynomial {
        DensePolynomial::new(self.mats.iter().map(|m| m.get(r, c)).collect())
    }

    /// Coefficients of row `r` as `[G₀[r], …, G_ν[r]]` up to its row degree.
    pub fn row_coefficients(&self, r: usize) -> Vec<&[Fe]> {
        let deg = self.row_degree(r).unwrap_or(0);
        self.mats[..=deg].iter().map(|m| m.row(r)).collect()
    }

    /// The constant matrix whose row `r` is the coefficient of `D^(ν_r)` in
    /// row `r`.
    pub fn leading_row_coefficients(&self) -> Matrix {
        let degs = self.row_degrees();
        Matrix::from_fn(self.rows(), self.cols(), |r, c| self.mats[degs[r].unwrap_or(0)].get(r, c))
    }

    pub fn map(&self, f: impl Fn(Fe) -> Fe) -> Self {
        PolyMatrix { shape: self.shape, mu: self.mu, mats: self.mats.iter().map(|m| m.map(&f)).collect() }
    }

    /// Builds a matrix from rows given as coefficient lists `[v₀, v₁, …]`.
    pub fn from_row_polys(rows: &[Vec<Vec<Fe>>], cols: usize) -> Result<Self> {
        let len = rows.iter().map(Vec::len).max().unwrap_or(1).max(1);
        let mut mats = vec![Matrix::zeros(rows.len(), cols); len];
        for (r, coeffs) in rows.iter().enumerate() {
            for (j, v) in coeffs.iter().enumerate() {
                if v.len() != cols {
                    return Err(Error::ShapeMismatch(format!("row {r} coefficient {j} has {} entries", v.len())));
                }
                mats[j].row_mut(r).copy_from_slice(v);
            }
        }
        Self::new(mats)
    }
}

/// `G(D) = Σ H̃_i D^i`, each part padded with zero rows at the bottom to the
/// largest row count.
pub fn split_and_pad(parts: &[Matrix]) -> Result<PolyMatrix> {
    let cols = parts.first().map(Matrix::cols).ok_or_else(|| Error::ShapeMismatch("no parts".into()))?;
    if let Some(bad) = parts.iter().find(|m| m.cols() != cols) {
        return Err(Error::ShapeMismatch(format!("part with {} columns, expected {cols}", bad.cols())));
    }
    let kappa = parts.iter().map(Matrix::rows).max().unwrap_or(0);
    PolyMatrix::new(parts.iter().map(|m| m.pad_rows(kappa)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankConditions {
    pub kappa: usize,
    pub ranks: Vec<usize>,
    pub pass: bool,
}

/// `rank H₀ = κ` and `rank H_i ≤ κ` for `i ≥ 1`, where `κ` is the largest
/// row count among the parts.
pub fn check_rank_conditions(field: &GaloisField, parts: &[Matrix]) -> RankConditions {
    let kappa = parts.iter().map(Matrix::rows).max().unwrap_or(0);
    let ranks: Vec<usize> = parts.iter().map(|m| m.rank(field)).collect();
    let pass = ranks.first() == Some(&kappa) && ranks.iter().all(|&r| r <= kappa);
    RankConditions { kappa, ranks, pass }
}

/// `(n - k)(⌊γ/k⌋ + 1) + γ + 1`.
pub fn generalized_singleton(n: usize, k: usize, gamma: usize) -> Result<usize> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParameter(format!("need 0 < k < n, got n = {n}, k = {k}")));
    }
    Ok((n - k) * (gamma / k + 1) + gamma + 1)
}

/// A convolutional code given by a polynomial generator matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvolutionalCode {
    pub n: usize,
    pub k: usize,
    /// Sum of the row degrees.
    pub gamma: usize,
    /// Largest row degree.
    pub mu: usize,
    pub row_degrees: Vec<usize>,
    pub generator: PolyMatrix,
}

impl ConvolutionalCode {
    /// Fails if `G(D)` has a zero row or is not of full row rank.
    pub fn new(field: &GaloisField, generator: PolyMatrix) -> Result<Self> {
        let degs = generator.row_degrees();
        if let Some(r) = degs.iter().position(Option::is_none) {
            return Err(Error::InvalidParameter(format!("row {r} of G(D) is zero")));
        }
        let row_degrees: Vec<usize> = degs.into_iter().map(|d| d.unwrap_or(0)).collect();
        let k = super::basic::polynomial_rank(field, &generator);
        if k != generator.rows() {
            return Err(Error::RankMismatch { expected: generator.rows(), got: k });
        }
        Ok(ConvolutionalCode {
            n: generator.cols(),
            k,
            gamma: row_degrees.iter().sum(),
            mu: row_degrees.iter().copied().max().unwrap_or(0),
            row_degrees,
            generator,
        })
    }

    pub fn singleton(&self) -> Result<usize> {
        generalized_singleton(self.n, self.k, self.gamma)
    }
}
