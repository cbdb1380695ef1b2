use serde::{Deserialize, Serialize};

use super::polymatrix::PolyMatrix;
use crate::fields::{Fe, GaloisField};
use crate::matrix::Matrix;
use crate::polyring::DensePolynomial;

type PolyRows = Vec<Vec<DensePolynomial>>;

fn to_rows(g: &PolyMatrix, cols: &[usize]) -> PolyRows {
    (0..g.rows()).map(|r| cols.iter().map(|&c| g.entry(r, c)).collect()).collect()
}

/// Fraction-free elimination. Returns the rank and the last pivot, which for
/// a square matrix of full rank is the determinant up to sign.
fn bareiss(f: &GaloisField, mut a: PolyRows) -> (usize, DensePolynomial) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = DensePolynomial::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for i in rank + 1..rows {
            let factor = a[i][col].clone();
            for j in col + 1..cols {
                let num = pivot.mul(f, &a[i][j]).sub(f, &factor.mul(f, &a[rank][j]));
                let (quot, rem) = num.divmod(f, &prev).expect("pivot is nonzero");
                debug_assert!(rem.is_zero(), "inexact fraction-free division");
                a[i][j] = quot;
            }
            a[i][col] = DensePolynomial::zero();
        }
        prev = pivot;
        rank += 1;
    }
    (rank, prev)
}

/// Rank of `G(D)` over the field of rational functions.
pub fn polynomial_rank(f: &GaloisField, g: &PolyMatrix) -> usize {
    let k = g.rows();
    // either constant matrix of full rank settles it
    if g.coefficients()[0].rank(f) == k || g.leading_row_coefficients().rank(f) == k {
        return k;
    }
    let all: Vec<usize> = (0..g.cols()).collect();
    bareiss(f, to_rows(g, &all)).0
}

/// Determinant (up to sign) of the square submatrix on the given columns.
///
/// The determinant has degree at most the sum of the row degrees, so when
/// the field has enough points it is recovered exactly by evaluation and
/// interpolation; otherwise fraction-free elimination is used.
pub fn minor(f: &GaloisField, g: &PolyMatrix, cols: &[usize]) -> DensePolynomial {
    let bound: usize = g.row_degrees().iter().map(|d| d.unwrap_or(0)).sum();
    if (bound as u64) < f.order() {
        let points: Vec<Fe> = (0..=bound as u32).map(Fe).collect();
        let values: Vec<Fe> = points.iter().map(|&x| evaluate(f, g, cols, x).det(f)).collect();
        return interpolate(f, &points, &values);
    }
    let (rank, last) = bareiss(f, to_rows(g, cols));
    if rank < g.rows() {
        DensePolynomial::zero()
    } else {
        last
    }
}

/// `G(x)` restricted to the given columns.
fn evaluate(f: &GaloisField, g: &PolyMatrix, cols: &[usize], x: Fe) -> Matrix {
    let mats = g.coefficients();
    Matrix::from_fn(g.rows(), cols.len(), |r, c| {
        mats.iter().rev().fold(Fe::ZERO, |acc, m| f.add(f.mul(acc, x), m.get(r, cols[c])))
    })
}

/// Lagrange interpolation through distinct points.
fn interpolate(f: &GaloisField, xs: &[Fe], ys: &[Fe]) -> DensePolynomial {
    let mut out = DensePolynomial::zero();
    for (j, (&xj, &yj)) in xs.iter().zip(ys).enumerate() {
        if yj.is_zero() {
            continue;
        }
        let mut term = DensePolynomial::constant(yj);
        for (m, &xm) in xs.iter().enumerate() {
            if m != j {
                let denom = f.inv(f.sub(xj, xm));
                let lin = DensePolynomial::new(vec![f.neg(f.mul(xm, denom)), denom]);
                term = term.mul(f, &lin);
            }
        }
        out = out.add(f, &term);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasicStatus {
    /// The full-size minors have a nonzero constant gcd.
    Verified,
    /// The gcd of the full-size minors is zero or has positive degree.
    NotBasic,
    /// The minor budget ran out before the gcd became constant.
    Deferred,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicReport {
    pub status: BasicStatus,
    pub minors_computed: u64,
    /// Running gcd when the search stopped.
    pub gcd: DensePolynomial,
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Accumulates the gcd of the `k × k` minors in lexicographic column order,
/// stopping as soon as it is a nonzero constant.
pub fn verify_basic(f: &GaloisField, g: &PolyMatrix, budget: u64) -> BasicReport {
    let (k, n) = (g.rows(), g.cols());
    let mut gcd = DensePolynomial::zero();
    if k > n {
        return BasicReport { status: BasicStatus::NotBasic, minors_computed: 0, gcd };
    }
    let mut cols: Vec<usize> = (0..k).collect();
    let mut count = 0u64;
    loop {
        if count >= budget {
            return BasicReport { status: BasicStatus::Deferred, minors_computed: count, gcd };
        }
        count += 1;
        gcd = gcd.gcd(f, &minor(f, g, &cols));
        if gcd.degree() == Some(0) {
            return BasicReport { status: BasicStatus::Verified, minors_computed: count, gcd };
        }
        if !next_combination(&mut cols, n) {
            break;
        }
    }
    BasicReport { status: BasicStatus::NotBasic, minors_computed: count, gcd }
}

/// The leading row-coefficient matrix has full row rank.
pub fn is_reduced(f: &GaloisField, g: &PolyMatrix) -> bool {
    g.leading_row_coefficients().rank(f) == g.rows()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf9() -> GaloisField {
        GaloisField::new(3, 2).unwrap()
    }

    #[test]
    fn one_d_is_basic() {
        let f = gf9();
        let g = PolyMatrix::new(vec![
            Matrix::from_rows(vec![vec![Fe(1), Fe(0)]], 2).unwrap(),
            Matrix::from_rows(vec![vec![Fe(0), Fe(1)]], 2).unwrap(),
        ])
        .unwrap();
        let rep = verify_basic(&f, &g, 100);
        assert_eq!(rep.status, BasicStatus::Verified);
        assert!(is_reduced(&f, &g));
    }

    #[test]
    fn common_factor_d_is_not_basic() {
        let f = gf9();
        let g = PolyMatrix::new(vec![Matrix::zeros(1, 2), Matrix::from_rows(vec![vec![Fe(1), Fe(2)]], 2).unwrap()])
            .unwrap();
        let rep = verify_basic(&f, &g, 100);
        assert_eq!(rep.status, BasicStatus::NotBasic);
        assert_eq!(rep.gcd.degree(), Some(1));
        assert_eq!(verify_basic(&f, &g, 0).status, BasicStatus::Deferred);
    }

    #[test]
    fn rank_needs_elimination() {
        // rows (1, D) and (D, D²) are dependent over F(D) although G₀ and the
        // leading coefficients alone do not show it
        let f = gf9();
        let g = PolyMatrix::from_row_polys(
            &[
                vec![vec![Fe(1), Fe(0)], vec![Fe(0), Fe(1)]],
                vec![vec![Fe(0), Fe(0)], vec![Fe(1), Fe(0)], vec![Fe(0), Fe(1)]],
            ],
            2,
        )
        .unwrap();
        assert_eq!(polynomial_rank(&f, &g), 1);
        let h = PolyMatrix::from_row_polys(
            &[
                vec![vec![Fe(1), Fe(3), Fe(0)], vec![Fe(0), Fe(1), Fe(5)]],
                vec![vec![Fe(2), Fe(0), Fe(1)], vec![Fe(7), Fe(0), Fe(1)]],
            ],
            3,
        )
        .unwrap();
        for cols in [[0, 1], [0, 2], [1, 2]] {
            let (_, by_elimination) = bareiss(&f, to_rows(&h, &cols));
            let by_interpolation = minor(&f, &h, &cols);
            assert_eq!(by_interpolation.monic(&f), by_elimination.monic(&f));
        }
        assert!(minor(&f, &g, &[0, 1]).is_zero());
    }
}
