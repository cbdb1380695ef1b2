use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::cosets::{check_length, check_residue, coset_of, CyclotomicCoset};
use crate::error::{Error, Result};
use crate::fields::{BasisExpansion, Fe, Tower};
use crate::matrix::Matrix;
use crate::polyring::{generator_from_cosets, DensePolynomial};

/// A union of odd cosets mod `2n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DefiningSet {
    n: u64,
    q: u64,
    residues: Vec<u64>,
}

impl DefiningSet {
    pub fn empty(n: u64, q: u64) -> Result<Self> {
        check_length(n, q)?;
        Ok(DefiningSet { n, q, residues: Vec::new() })
    }

    /// Validates oddness, range and closure under `z ↦ q²z`.
    pub fn from_residues(n: u64, q: u64, residues: impl IntoIterator<Item = u64>) -> Result<Self> {
        check_length(n, q)?;
        let set: BTreeSet<u64> = residues.into_iter().collect();
        for &z in &set {
            check_residue(z, n)?;
        }
        for &z in &set {
            let c = coset_of(z, n, q)?;
            if let Some(&missing) = c.members().iter().find(|m| !set.contains(m)) {
                return Err(Error::InvalidParameter(format!(
                    "defining set is not closed: {z} is present but {missing} is not"
                )));
            }
        }
        Ok(DefiningSet { n, q, residues: set.into_iter().collect() })
    }

    /// Union of the cosets of the given odd residues.
    pub fn from_coset_reps(n: u64, q: u64, reps: impl IntoIterator<Item = u64>) -> Result<Self> {
        check_length(n, q)?;
        let mut set = BTreeSet::new();
        for r in reps {
            set.extend(coset_of(r, n, q)?.members().iter().copied());
        }
        Ok(DefiningSet { n, q, residues: set.into_iter().collect() })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn contains(&self, z: u64) -> bool {
        self.residues.binary_search(&z).is_ok()
    }

    /// Decomposition into cosets, sorted by representative.
    pub fn cosets(&self) -> Vec<CyclotomicCoset> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &z in &self.residues {
            if seen.contains(&z) {
                continue;
            }
            let c = coset_of(z, self.n, self.q).expect("validated residue");
            seen.extend(c.members().iter().copied());
            out.push(c);
        }
        out
    }
}

/// Exponents `b, b + 2, …, b + 2(δ - 2)` mod `2n`.
pub fn bch_exponents(n: u64, b: u64, delta: usize) -> Vec<u64> {
    let two_n = 2 * n;
    (0..delta.saturating_sub(1) as u64).map(|j| (b + 2 * j) % two_n).collect()
}

/// Defining set of the negacyclic BCH code with odd start `b` and designed
/// distance `δ`.
pub fn bch_defining_set(n: u64, q: u64, b: u64, delta: usize) -> Result<DefiningSet> {
    if delta < 2 {
        return Err(Error::InvalidParameter(format!("designed distance {delta} < 2")));
    }
    if b.is_multiple_of(2) {
        return Err(Error::EvenResidue(b));
    }
    DefiningSet::from_coset_reps(n, q, bch_exponents(n, b, delta))
}

/// `1 +` the longest cyclic run `z, z + 2, …` inside `Z`; `1` for `Z = ∅`
/// and `n + 1` when `Z` holds every odd residue.
pub fn bch_designed_distance(z: &DefiningSet) -> usize {
    let n = z.n as usize;
    if z.is_empty() {
        return 1;
    }
    if z.len() == n {
        return n + 1;
    }
    // odd residue 2j + 1 sits at slot j
    let inside: Vec<bool> = (0..n).map(|j| z.contains(2 * j as u64 + 1)).collect();
    let start = inside.iter().position(|&x| !x).expect("some residue is missing");
    let (mut best, mut run) = (0, 0);
    for t in 1..=n {
        if inside[(start + t) % n] {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    best + 1
}

/// Start and designed distance of a BCH-type code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BchParams {
    pub b: u64,
    pub delta: usize,
}

/// A negacyclic code of length `n` over GF(q²).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegacyclicCode {
    pub q: u64,
    pub n: u64,
    pub defining_set: DefiningSet,
    pub generator: DensePolynomial,
    pub k: usize,
    pub designed_distance: usize,
    /// The primitive `2n`-th root of unity in GF(q⁴).
    pub beta: Fe,
    pub bch: Option<BchParams>,
}

impl NegacyclicCode {
    pub fn redundancy(&self) -> usize {
        self.n as usize - self.k
    }

    /// Classical Singleton bound `n - k + 1`.
    pub fn singleton(&self) -> usize {
        self.redundancy() + 1
    }
}

pub fn build_code(tower: &Tower, z: &DefiningSet, beta: Fe) -> Result<NegacyclicCode> {
    if z.q != tower.q() {
        return Err(Error::InvalidParameter(format!("defining set for q = {} used with q = {}", z.q, tower.q())));
    }
    let generator = generator_from_cosets(tower, &z.cosets(), beta)?;
    let n = z.n;
    if generator.degree() != Some(z.len()) {
        return Err(Error::Internal(format!("deg g = {:?} but |Z| = {}", generator.degree(), z.len())));
    }
    let (_, rem) = DensePolynomial::x_n_plus_one(n as usize).divmod(tower.small(), &generator)?;
    if !rem.is_zero() {
        return Err(Error::Internal("g does not divide x^n + 1".into()));
    }
    Ok(NegacyclicCode {
        q: z.q,
        n,
        defining_set: z.clone(),
        generator,
        k: n as usize - z.len(),
        designed_distance: bch_designed_distance(z),
        beta,
        bch: None,
    })
}

pub fn build_bch_code(tower: &Tower, n: u64, b: u64, delta: usize, beta: Fe) -> Result<NegacyclicCode> {
    let z = bch_defining_set(n, tower.q(), b, delta)?;
    let mut code = build_code(tower, &z, beta)?;
    code.bch = Some(BchParams { b, delta });
    Ok(code)
}

/// `k × n` matrix with rows `x^j g(x)`.
pub fn generator_matrix(code: &NegacyclicCode) -> Matrix {
    let n = code.n as usize;
    let g = code.generator.coeffs();
    Matrix::from_fn(code.k, n, |j, c| if c >= j && c - j < g.len() { g[c - j] } else { Fe::ZERO })
}

/// True iff the word, read as `Σ w_c x^c`, vanishes at `β^z` for all `z ∈ Z`.
pub fn is_codeword(tower: &Tower, code: &NegacyclicCode, word: &[Fe]) -> bool {
    let big = tower.big();
    let lifted: Vec<Fe> = word.iter().map(|&w| tower.embed(w)).collect();
    code.defining_set.residues().iter().all(|&z| {
        let x = big.pow(code.beta, z);
        lifted.iter().rev().fold(Fe::ZERO, |acc, &c| big.add(big.mul(acc, x), c)).is_zero()
    })
}

/// Expanded and reduced parity-check matrix with its bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityCheck {
    pub matrix: Matrix,
    /// Rows of the expanded matrix before removal, `2(δ - 1)`.
    pub expanded_rows: usize,
    pub kept_rows: Vec<usize>,
    pub removed_rows: usize,
}

/// The `(δ-1) × n` matrix with entries `β^((b+2j)c)`, each entry expanded
/// into two rows over GF(q²), dependent rows then dropped in order.
///
/// The result has rank `|Z|` or an error is returned.
pub fn parity_check_matrix(
    tower: &Tower,
    code: &NegacyclicCode,
    b: u64,
    delta: usize,
    basis: &BasisExpansion,
) -> Result<ParityCheck> {
    let z = bch_defining_set(code.n, code.q, b, delta)?;
    if z != code.defining_set {
        return Err(Error::InvalidParameter(format!("b = {b}, δ = {delta} do not describe this code's defining set")));
    }
    let big = tower.big();
    let n = code.n as usize;
    let mut rows = Vec::with_capacity(2 * (delta - 1));
    for e in bch_exponents(code.n, b, delta) {
        let step = big.pow(code.beta, e);
        let mut r1 = Vec::with_capacity(n);
        let mut r2 = Vec::with_capacity(n);
        let mut x = Fe::ONE;
        for _ in 0..n {
            let (c1, c2) = basis.expand(tower, x)?;
            r1.push(c1);
            r2.push(c2);
            x = big.mul(x, step);
        }
        rows.push(r1);
        rows.push(r2);
    }
    let expanded = Matrix::from_rows(rows, n)?;
    let (matrix, kept_rows) = expanded.independent_rows(tower.small());
    if matrix.rows() != code.defining_set.len() {
        return Err(Error::RankMismatch { expected: code.defining_set.len(), got: matrix.rows() });
    }
    Ok(ParityCheck { expanded_rows: expanded.rows(), removed_rows: expanded.rows() - matrix.rows(), kept_rows, matrix })
}

/// Parity-check matrix of a BCH-type code built with [`build_bch_code`],
/// using the tower's default basis.
pub fn default_parity_check(tower: &Tower, code: &NegacyclicCode) -> Result<ParityCheck> {
    let bch = code.bch.ok_or_else(|| Error::InvalidParameter("code was not built from BCH parameters".into()))?;
    parity_check_matrix(tower, code, bch.b, bch.delta, tower.default_basis())
}
