use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::{Fe, GaloisField};
use crate::matrix::{axpy, weight, EchelonBasis, Matrix};
use crate::numtheory::{binomial, saturating_pow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DistanceMode {
    /// Minimum weight over all nonzero codewords.
    Enumerate,
    /// Whether every `n - k` columns of the parity-check matrix are independent.
    MdsColumns,
    /// Size of the smallest dependent set of parity-check columns.
    DependentColumns,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DistanceMethod {
    Enumerate,
    MdsColumns,
    DependentColumns,
    /// Designed distance combined with the Singleton bound.
    DesignedDistance,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DistanceStatus {
    /// Computed by exhaustive search.
    Exact,
    /// Designed distance equals the Singleton bound, so the value is pinned.
    BoundCertified,
    /// Only the designed distance is known; the true value may be larger.
    LowerBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceReport {
    /// The distance, or a lower bound when `status` is `LowerBound`.
    pub value: usize,
    pub method: DistanceMethod,
    pub status: DistanceStatus,
    /// Words enumerated or column subsets visited (upper estimate).
    pub work: u128,
}

impl DistanceReport {
    pub fn is_pinned(&self) -> bool {
        self.status != DistanceStatus::LowerBound
    }
}

/// Number of codewords `(q²)^k`.
pub fn enumeration_cost(field: &GaloisField, k: usize) -> u128 {
    saturating_pow(field.order(), k as u64)
}

/// `C(n, r)` column subsets.
pub fn mds_columns_cost(n: usize, r: usize) -> u128 {
    binomial(n as u64, r as u64)
}

/// Column subsets of size at most `up_to`.
pub fn dependent_columns_cost(n: usize, up_to: usize) -> u128 {
    (1..=up_to).fold(0u128, |acc, w| acc.saturating_add(binomial(n as u64, w as u64)))
}

fn check_budget(needed: u128, budget: u64) -> Result<()> {
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Minimum nonzero weight of the row space of `g`, by enumeration.
///
/// The row space is walked as a GF(p)-space: each generator is `x^t · row`,
/// and an odometer in base `p` adds one generator per step; a digit wrapping
/// from `p - 1` to `0` has added its generator `p` times, which is zero.
pub fn enumerate_min_weight(field: &GaloisField, g: &Matrix, budget: u64) -> Result<usize> {
    let k = g.rows();
    let n = g.cols();
    check_budget(enumeration_cost(field, k), budget)?;
    let p = field.characteristic() as usize;
    let e = field.degree() as usize;
    let mut gens: Vec<Vec<Fe>> = Vec::with_capacity(k * e);
    for r in g.iter_rows() {
        let mut basis_elt = Fe::ONE;
        for _ in 0..e {
            gens.push(r.iter().map(|&x| field.mul(x, basis_elt)).collect());
            basis_elt = field.mul(basis_elt, field.x());
        }
    }
    if gens.is_empty() {
        return Ok(n + 1);
    }
    // split on the top digits so that there are enough chunks to share out
    let mut top = 0;
    while top < gens.len() && saturating_pow(p as u64, top as u64) < 64 {
        top += 1;
    }
    let low = gens.len() - top;
    let chunks = saturating_pow(p as u64, top as u64) as usize;
    let best = AtomicUsize::new(n + 1);
    (0..chunks).into_par_iter().for_each(|chunk| {
        let mut word = vec![Fe::ZERO; n];
        let mut c = chunk;
        for gen in &gens[low..] {
            let digit = c % p;
            c /= p;
            for _ in 0..digit {
                axpy(field, &mut word, Fe::ONE, gen);
            }
        }
        let mut local = best.load(Ordering::Relaxed);
        let mut digits = vec![0usize; low];
        loop {
            let w = weight(&word);
            if w > 0 && w < local {
                local = w;
            }
            let mut d = 0;
            while d < low {
                axpy(field, &mut word, Fe::ONE, &gens[d]);
                digits[d] += 1;
                if digits[d] < p {
                    break;
                }
                digits[d] = 0;
                d += 1;
            }
            if d == low {
                break;
            }
        }
        best.fetch_min(local, Ordering::Relaxed);
    });
    Ok(best.into_inner())
}

/// Searches for `size` columns of `h` that are linearly dependent.
fn has_dependent_subset(field: &GaloisField, cols: &[Vec<Fe>], size: usize) -> bool {
    let n = cols.len();
    if size == 0 || size > n {
        return false;
    }
    let found = AtomicBool::new(false);
    (0..=n - size).into_par_iter().for_each(|first| {
        if found.load(Ordering::Relaxed) {
            return;
        }
        let mut basis = EchelonBasis::new(cols[0].len());
        if !basis.insert(field, cols[first].clone()) {
            found.store(true, Ordering::Relaxed);
            return;
        }
        if dfs(field, cols, &mut basis, first + 1, size - 1, &found) {
            found.store(true, Ordering::Relaxed);
        }
    });
    found.into_inner()
}

fn dfs(
    field: &GaloisField,
    cols: &[Vec<Fe>],
    basis: &mut EchelonBasis,
    from: usize,
    left: usize,
    stop: &AtomicBool,
) -> bool {
    if left == 0 {
        return false;
    }
    if stop.load(Ordering::Relaxed) {
        return true;
    }
    let rank = basis.rank();
    for c in from..=cols.len() - left {
        if !basis.insert(field, cols[c].clone()) {
            return true;
        }
        if dfs(field, cols, basis, c + 1, left - 1, stop) {
            return true;
        }
        basis.truncate(rank);
    }
    false
}

fn columns(h: &Matrix) -> Vec<Vec<Fe>> {
    (0..h.cols()).map(|j| h.column(j)).collect()
}

/// True iff every `rank(h)` columns of the full-row-rank matrix `h` are
/// independent, i.e. the code with parity-check `h` is MDS. The same test on
/// a generator matrix decides whether the dual code, and so the code, is MDS.
pub fn mds_columns(field: &GaloisField, h: &Matrix, budget: u64) -> Result<bool> {
    let r = h.rows();
    check_budget(mds_columns_cost(h.cols(), r), budget)?;
    Ok(!has_dependent_subset(field, &columns(h), r))
}

/// Size of the smallest dependent column set of the full-row-rank matrix
/// `h`, which is the minimum distance of its null space; `r + 1` if none.
pub fn dependent_columns(field: &GaloisField, h: &Matrix, budget: u64) -> Result<usize> {
    let r = h.rows();
    let cols = columns(h);
    for w in 1..=r {
        check_budget(dependent_columns_cost(h.cols(), w), budget)?;
        if has_dependent_subset(field, &cols, w) {
            return Ok(w);
        }
    }
    Ok(r + 1)
}

/// Column test on whichever of `g`, `h` has fewer rows.
fn is_mds(field: &GaloisField, g: &Matrix, h: &Matrix, budget: u64) -> Result<bool> {
    if g.rows() < h.rows() {
        mds_columns(field, g, budget)
    } else {
        mds_columns(field, h, budget)
    }
}

/// Exact minimum distance by the requested method.
///
/// `g` is a generator matrix and `h` a full-row-rank parity-check matrix of
/// the same code.
pub fn min_distance_exact(
    field: &GaloisField,
    g: &Matrix,
    h: &Matrix,
    mode: DistanceMode,
    budget: u64,
) -> Result<DistanceReport> {
    let n = h.cols();
    let k = n - h.rows();
    match mode {
        DistanceMode::Enumerate => Ok(DistanceReport {
            value: enumerate_min_weight(field, g, budget)?,
            method: DistanceMethod::Enumerate,
            status: DistanceStatus::Exact,
            work: enumeration_cost(field, k),
        }),
        DistanceMode::MdsColumns => {
            if is_mds(field, g, h, budget)? {
                Ok(DistanceReport {
                    value: n - k + 1,
                    method: DistanceMethod::MdsColumns,
                    status: DistanceStatus::Exact,
                    work: mds_columns_cost(n, n - k),
                })
            } else {
                Err(Error::InvalidParameter("code is not MDS; use DependentColumns".into()))
            }
        }
        DistanceMode::DependentColumns => {
            let d = dependent_columns(field, h, budget)?;
            Ok(DistanceReport {
                value: d,
                method: DistanceMethod::DependentColumns,
                status: DistanceStatus::Exact,
                work: dependent_columns_cost(n, d.min(n - k)),
            })
        }
    }
}

/// Picks the cheapest exhaustive method within budget, else falls back to
/// the designed distance and the Singleton bound.
pub fn certify_distance(
    field: &GaloisField,
    g: &Matrix,
    h: &Matrix,
    designed: usize,
    budget: u64,
) -> Result<DistanceReport> {
    let n = h.cols();
    let r = h.rows();
    let k = n - r;
    if enumeration_cost(field, k) <= budget as u128 {
        return min_distance_exact(field, g, h, DistanceMode::Enumerate, budget);
    }
    if mds_columns_cost(n, r) <= budget as u128 {
        if is_mds(field, g, h, budget)? {
            return Ok(DistanceReport {
                value: r + 1,
                method: DistanceMethod::MdsColumns,
                status: DistanceStatus::Exact,
                work: mds_columns_cost(n, r),
            });
        }
        match min_distance_exact(field, g, h, DistanceMode::DependentColumns, budget) {
            Ok(rep) => return Ok(rep),
            Err(Error::BudgetExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
    } else if dependent_columns_cost(n, designed) <= budget as u128 {
        // searching up to the designed distance either finds d or proves
        // d > designed
        let cols = columns(h);
        for w in 1..=designed.min(r) {
            if has_dependent_subset(field, &cols, w) {
                return Ok(DistanceReport {
                    value: w,
                    method: DistanceMethod::DependentColumns,
                    status: DistanceStatus::Exact,
                    work: dependent_columns_cost(n, w),
                });
            }
        }
    }
    let status = if designed == r + 1 { DistanceStatus::BoundCertified } else { DistanceStatus::LowerBound };
    Ok(DistanceReport { value: designed, method: DistanceMethod::DesignedDistance, status, work: 0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::Tower;
    use crate::negacyclic::{build_bch_code, default_parity_check, generator_matrix};

    #[test]
    fn q3_distances() {
        let t = Tower::new(3).unwrap();
        let f = t.small();
        let beta = t.primitive_2n_root(5).unwrap();
        for (b, delta, d) in [(1u64, 2usize, 3usize), (1, 3, 5), (3, 2, 3)] {
            let code = build_bch_code(&t, 5, b, delta, beta).unwrap();
            let g = generator_matrix(&code);
            let h = default_parity_check(&t, &code).unwrap().matrix;
            assert_eq!(enumerate_min_weight(f, &g, 1_000_000).unwrap(), d);
            assert_eq!(dependent_columns(f, &h, 1_000_000).unwrap(), d);
            assert_eq!(mds_columns(f, &h, 1_000_000).unwrap(), d == h.rows() + 1);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let f = GaloisField::new(3, 2).unwrap();
        let g = Matrix::identity(4);
        assert!(matches!(enumerate_min_weight(&f, &g, 100), Err(Error::BudgetExceeded { .. })));
        assert_eq!(enumerate_min_weight(&f, &g, 10_000).unwrap(), 1);
    }
}
