//! The five code families, their parameter ranges, the per-instance
//! verification pipeline and table reproduction.

mod certificate;
mod pipeline;
mod records;
mod tables;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::negacyclic::BchParams;
use crate::numtheory;

pub use certificate::{Check, CheckStatus, VerificationCertificate};
pub use pipeline::{
    build_instance, family_I, family_II, family_III, family_IV, family_V, run_instance, ConvParams, Depth,
    FamilyInstance,
};
pub use records::{BlockCodeRecord, ClassicalParams, PolyMatrixRecord};
pub use tables::{paper_rows, reproduce_table, DiffCategory, DiffEntry, PaperRow, RowStatus, TableReport, TableRow};

/// Default work budget for every exhaustive search.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilyId {
    I,
    II,
    III,
    IV,
    V,
}

impl FamilyId {
    pub const ALL: [FamilyId; 5] = [FamilyId::I, FamilyId::II, FamilyId::III, FamilyId::IV, FamilyId::V];

    pub fn is_quantum(self) -> bool {
        matches!(self, FamilyId::IV | FamilyId::V)
    }

    /// The classical family whose construction a quantum family reuses.
    pub fn classical_base(self) -> FamilyId {
        match self {
            FamilyId::IV => FamilyId::I,
            FamilyId::V => FamilyId::II,
            f => f,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyId::I => "I",
            FamilyId::II => "II",
            FamilyId::III => "III",
            FamilyId::IV => "IV",
            FamilyId::V => "V",
        };
        f.write_str(s)
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(FamilyId::I),
            "II" | "2" => Ok(FamilyId::II),
            "III" | "3" => Ok(FamilyId::III),
            "IV" | "4" => Ok(FamilyId::IV),
            "V" | "5" => Ok(FamilyId::V),
            _ => Err(Error::InvalidParameter(format!("unknown family {s:?}"))),
        }
    }
}

/// Length and the BCH parameters of `C₂`, `C₁` and `C₀` for one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Layout {
    pub family: FamilyId,
    pub q: u64,
    pub i: u64,
    pub n: u64,
    pub c2: BchParams,
    pub c1: BchParams,
    pub c0: BchParams,
}

fn bch(b: u64, delta: u64) -> BchParams {
    BchParams { b, delta: delta as usize }
}

fn odd_prime_power(q: u64) -> Result<()> {
    match numtheory::prime_power(q) {
        Some((p, _)) if p != 2 => Ok(()),
        _ => Err(Error::NotOddPrimePower(q)),
    }
}

fn out_of_range(family: FamilyId, q: u64, i: u64, lo: u64, hi: u64) -> Error {
    Error::InvalidParameter(format!("family {family} at q = {q} needs {lo} ≤ i ≤ {hi}, got i = {i}"))
}

/// Allowed range of `i` for a family at `q`, after the congruence checks.
pub fn i_range(family: FamilyId, q: u64) -> Result<(u64, u64)> {
    odd_prime_power(q)?;
    let q2 = q * q;
    let range = match family {
        FamilyId::I => {
            if q % 4 != 1 {
                return Err(Error::InvalidParameter(format!("family I needs q ≡ 1 mod 4, got q = {q}")));
            }
            (2, (q2 + 1) / 2 - 1)
        }
        FamilyId::II => (2, ((q2 + 1) / 2 - 1) / 2),
        FamilyId::III => {
            if q < 5 {
                return Err(Error::InvalidParameter(format!("family III needs q ≥ 5, got q = {q}")));
            }
            (2, ((q2 + 1) / 2 - 1) / 2 - 1)
        }
        FamilyId::IV => {
            if q % 4 != 1 {
                return Err(Error::InvalidParameter(format!("family IV needs q ≡ 1 mod 4, got q = {q}")));
            }
            (2, (q - 1) / 2)
        }
        FamilyId::V => {
            if q < 7 {
                return Err(Error::InvalidParameter(format!("family V needs q ≥ 7, got q = {q}")));
            }
            (2, (q - 1) / 2)
        }
    };
    Ok(range)
}

/// Layout of an in-range instance.
pub fn layout(family: FamilyId, q: u64, i: u64) -> Result<Layout> {
    let (lo, hi) = i_range(family, q)?;
    if i < lo || i > hi {
        return Err(out_of_range(family, q, i, lo, hi));
    }
    layout_unchecked(family, q, i)
}

/// Layout without the range checks on `i`; the congruence conditions that
/// make the cosets well defined are still enforced.
pub fn layout_unchecked(family: FamilyId, q: u64, i: u64) -> Result<Layout> {
    odd_prime_power(q)?;
    if i == 0 {
        return Err(Error::InvalidParameter("i must be positive".into()));
    }
    let q2 = q * q;
    let base = family.classical_base();
    let (n, c2, c1, c0) = match base {
        FamilyId::I => {
            if q % 4 != 1 {
                return Err(Error::InvalidParameter(format!("q = {q} is not 1 mod 4")));
            }
            let n = q2 + 1;
            let s = n / 2;
            (n, bch(s, i + 2), bch(s, i + 1), bch(s + 2 * i, 2))
        }
        FamilyId::II => {
            if i < 2 {
                return Err(Error::InvalidParameter("family II needs i ≥ 2".into()));
            }
            let n = (q2 + 1) / 2;
            (n, bch(1, i + 1), bch(1, i), bch(2 * i - 1, 2))
        }
        FamilyId::III => {
            let n = (q2 + 1) / 2;
            (n, bch(n, i + 2), bch(n, i + 1), bch(n + 2 * i, 2))
        }
        _ => unreachable!("classical base"),
    };
    let two_n = 2 * n;
    let c0 = BchParams { b: c0.b % two_n, ..c0 };
    if c2.delta as u64 > n + 1 || c0.b.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("i = {i} is too large for n = {n}")));
    }
    Ok(Layout { family, q, i, n, c2, c1, c0 })
}

/// The closed-form classical parameters `(n, k, γ; μ, d_f)` of the dual code.
pub fn expected_classical(family: FamilyId, q: u64, i: u64) -> ClassicalParams {
    let q2 = q * q;
    let (n, k, d) = match family.classical_base() {
        FamilyId::I => (q2 + 1, q2 + 2 - 2 * i, 2 * i + 2),
        FamilyId::II => ((q2 + 1) / 2, (q2 + 1) / 2 + 2 - 2 * i, 2 * i + 1),
        _ => ((q2 + 1) / 2, (q2 + 1) / 2 + 1 - 2 * i, 2 * i + 2),
    };
    ClassicalParams { q, n: n as usize, k: k as usize, gamma: 2, mu: 1, d_f: d as usize }
}

/// The closed-form quantum parameters `(n, k, μ, γ, d_f)`.
pub fn expected_quantum(family: FamilyId, q: u64, i: u64) -> Option<(usize, usize, usize, usize, usize)> {
    let q2 = q * q;
    match family {
        FamilyId::IV => {
            let n = q2 + 1;
            Some((n as usize, (n + 2 - 4 * i) as usize, 1, 2, (2 * i + 2) as usize))
        }
        FamilyId::V => {
            let n = (q2 + 1) / 2;
            Some((n as usize, (n + 4 - 4 * i) as usize, 1, 2, (2 * i + 1) as usize))
        }
        _ => None,
    }
}
