use serde::{Deserialize, Serialize};

use super::polymatrix::PolyMatrix;
use crate::error::{Error, Result};
use crate::fields::{Fe, Tower};
use crate::matrix::{EchelonBasis, Matrix};

/// Largest degree cap tried when looking for a dual basis.
pub const MAX_DUAL_CAP: usize = 4;

/// Every row of `a` is Hermitian-orthogonal to every shift of every row of `b`:
/// `Σ_j a_j[r] · b_{j+t}[s]^q = 0` for all `r, s, t`.
pub fn cross_orthogonal(tower: &Tower, a: &PolyMatrix, b: &PolyMatrix) -> bool {
    let small = tower.small();
    let b_conj = b.map(|x| tower.conj(x));
    let (mu_a, mu_b) = (a.memory() as isize, b.memory() as isize);
    for t in -mu_a..=mu_b {
        for r in 0..a.rows() {
            for s in 0..b.rows() {
                let mut acc = Fe::ZERO;
                for j in 0..=mu_a {
                    if let (Some(aj), Some(bj)) = (a.coefficient(j), b_conj.coefficient(j + t)) {
                        acc = small.add(acc, crate::matrix::dot(small, aj.row(r), bj.row(s)));
                    }
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether the code generated by `G(D)` lies in its Hermitian dual, checked
/// on all row pairs and all shifts `|t| ≤ μ`.
pub fn shifted_hermitian_orthogonal(tower: &Tower, g: &PolyMatrix) -> bool {
    cross_orthogonal(tower, g, g)
}

/// Constraint matrix on `w = Σ_{l ≤ d} w_l D^l`: one equation per row of `G`
/// and shift `t ∈ [-μ, d]`, namely `Σ_l w_l · G_{l-t}[r]^q = 0`.
fn constraints(tower: &Tower, g: &PolyMatrix, d: usize) -> Matrix {
    let n = g.cols();
    let mu = g.memory() as isize;
    let g_conj = g.map(|x| tower.conj(x));
    let mut rows = Vec::new();
    for t in -mu..=d as isize {
        for r in 0..g.rows() {
            let mut eq = vec![Fe::ZERO; n * (d + 1)];
            for l in 0..=d {
                if let Some(m) = g_conj.coefficient(l as isize - t) {
                    eq[l * n..(l + 1) * n].copy_from_slice(m.row(r));
                }
            }
            rows.push(eq);
        }
    }
    Matrix::from_rows(rows, n * (d + 1)).expect("uniform rows")
}

fn degree_of(v: &[Fe], n: usize) -> usize {
    let last = v.iter().rposition(|x| !x.is_zero()).expect("nonzero vector");
    last / n
}

fn shifted(v: &[Fe], n: usize, s: usize, len: usize) -> Vec<Fe> {
    let mut out = vec![Fe::ZERO; len];
    out[s * n..s * n + v.len()].copy_from_slice(v);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualBasis {
    pub basis: PolyMatrix,
    /// The cap at which `n - k` rows were found.
    pub cap: usize,
}

/// A minimal basis of `V^⊥h` with rows of degree at most `cap`, found degree
/// by degree: at each degree the shifts of rows already chosen are placed
/// first and any further independent solutions become new rows.
pub fn dual_basis_bounded(tower: &Tower, g: &PolyMatrix, k: usize, cap: usize) -> Result<PolyMatrix> {
    let small = tower.small();
    let n = g.cols();
    let target = n - k;
    let mut selected: Vec<Vec<Fe>> = Vec::new();
    if target == 0 {
        return Err(Error::InvalidParameter("the dual of a full-rank code of dimension n is zero".into()));
    }
    for d in 0..=cap {
        let len = n * (d + 1);
        let kernel = constraints(tower, g, d).nullspace(small);
        let mut span = EchelonBasis::new(len);
        for v in &selected {
            let dv = degree_of(v, n);
            for s in 0..=d - dv {
                if !span.insert(small, shifted(v, n, s, len)) {
                    return Err(Error::Internal("shifts of dual basis rows are dependent".into()));
                }
            }
        }
        for row in kernel.iter_rows() {
            if span.insert(small, row.to_vec()) {
                let deg = degree_of(row, n);
                selected.push(row[..(deg + 1) * n].to_vec());
                if selected.len() == target {
                    let rows: Vec<Vec<Vec<Fe>>> =
                        selected.iter().map(|v| v.chunks(n).map(<[Fe]>::to_vec).collect()).collect();
                    return PolyMatrix::from_row_polys(&rows, n);
                }
            }
        }
    }
    Err(Error::DualRankDeficient { expected: target, got: selected.len(), cap })
}

/// Tries caps `μ + 1, μ + 2, …` up to [`MAX_DUAL_CAP`].
pub fn dual_basis(tower: &Tower, g: &PolyMatrix, k: usize) -> Result<DualBasis> {
    let start = (g.memory() + 1).min(MAX_DUAL_CAP);
    let mut last = None;
    for cap in start..=MAX_DUAL_CAP {
        match dual_basis_bounded(tower, g, k, cap) {
            Ok(basis) => return Ok(DualBasis { basis, cap }),
            Err(e @ Error::DualRankDeficient { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one cap tried"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convolutional::ConvolutionalCode;

    #[test]
    fn memory_zero_dual_is_constant() {
        let t = Tower::new(3).unwrap();
        let g = PolyMatrix::new(vec![Matrix::from_rows(vec![vec![Fe(1), Fe(1), Fe(0)]], 3).unwrap()]).unwrap();
        let dual = dual_basis_bounded(&t, &g, 1, 1).unwrap();
        assert_eq!(dual.memory(), 0);
        assert_eq!(dual.rows(), 2);
        assert!(cross_orthogonal(&t, &g, &dual));
    }

    #[test]
    fn zero_matrix_is_self_orthogonal() {
        let t = Tower::new(3).unwrap();
        let g = PolyMatrix::new(vec![Matrix::zeros(2, 4)]).unwrap();
        assert!(shifted_hermitian_orthogonal(&t, &g));
    }

    #[test]
    fn unit_memory_dual() {
        let t = Tower::new(3).unwrap();
        let f = t.small();
        // G(D) = (1, D, 0, 1 + D)
        let g =
            PolyMatrix::from_row_polys(&[vec![vec![Fe(1), Fe(0), Fe(0), Fe(1)], vec![Fe(0), Fe(1), Fe(0), Fe(1)]]], 4)
                .unwrap();
        let dual = dual_basis(&t, &g, 1).unwrap();
        assert_eq!(dual.basis.rows(), 3);
        assert!(cross_orthogonal(&t, &g, &dual.basis));
        let code = ConvolutionalCode::new(f, dual.basis).unwrap();
        assert_eq!(code.gamma, 1);
    }
}
