use std::fmt;

use serde::{Deserialize, Serialize};

use crate::convolutional::PolyMatrix;
use crate::fields::{Fe, GaloisField};
use crate::negacyclic::{DistanceReport, NegacyclicCode};

/// `(n, k, γ; μ, d_f)` over GF(q²).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalParams {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub gamma: usize,
    pub mu: usize,
    pub d_f: usize,
}

impl ClassicalParams {
    pub fn tuple(&self) -> String {
        format!("({}, {}, {}; {}, {})", self.n, self.k, self.gamma, self.mu, self.d_f)
    }
}

impl fmt::Display for ClassicalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over GF({})", self.tuple(), self.q * self.q)
    }
}

fn coords(field: &GaloisField, x: Fe) -> Vec<u64> {
    field.coords(x)
}

/// A block code with field elements written as coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockCodeRecord {
    pub label: String,
    pub q: u64,
    pub n: u64,
    pub defining_set: Vec<u64>,
    /// Coefficients of `g(x)`, constant term first.
    pub generator: Vec<Vec<u64>>,
    pub k: usize,
    pub designed_distance: usize,
    pub parity_rows_expanded: usize,
    pub parity_rows_removed: usize,
    pub distance: Option<DistanceReport>,
}

impl BlockCodeRecord {
    pub fn new(label: &str, field: &GaloisField, code: &NegacyclicCode, expanded: usize, removed: usize) -> Self {
        BlockCodeRecord {
            label: label.to_string(),
            q: code.q,
            n: code.n,
            defining_set: code.defining_set.residues().to_vec(),
            generator: code.generator.coeffs().iter().map(|&c| coords(field, c)).collect(),
            k: code.k,
            designed_distance: code.designed_distance,
            parity_rows_expanded: expanded,
            parity_rows_removed: removed,
            distance: None,
        }
    }

    pub fn params(&self) -> String {
        match &self.distance {
            Some(d) => format!("[{}, {}, {}]", self.n, self.k, d.value),
            None => format!("[{}, {}, ≥{}]", self.n, self.k, self.designed_distance),
        }
    }
}

/// `{shape, mu, mats}` with each matrix row-major and each entry a
/// coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyMatrixRecord {
    pub shape: (usize, usize),
    pub mu: usize,
    pub mats: Vec<Vec<Vec<u64>>>,
}

impl PolyMatrixRecord {
    pub fn new(field: &GaloisField, g: &PolyMatrix) -> Self {
        PolyMatrixRecord {
            shape: (g.rows(), g.cols()),
            mu: g.memory(),
            mats: g
                .coefficients()
                .iter()
                .map(|m| m.iter_rows().flatten().map(|&x| coords(field, x)).collect())
                .collect(),
        }
    }
}
