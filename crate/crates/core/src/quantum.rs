//! Parameters of convolutional stabilizer codes obtained from Hermitian
//! self-orthogonal classical convolutional codes over GF(q²).

use serde::{Deserialize, Serialize};

use crate::convolutional::{ConvolutionalCode, FreeDistanceResult};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DfStatus {
    Exact,
    /// `d_f` is the free distance of `V^⊥h`, a lower bound on the weight of
    /// `V^⊥h \ V`.
    LowerBound,
}

/// Whether no nonzero word of `V` is lighter than `d_f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PurityNote {
    /// The free distance of `V` was computed by state search.
    VerifiedBySearch,
    /// `d_f(V)` is bounded below by the distance of the Euclidean dual of the
    /// block code, which exceeds `d_f`.
    CertifiedByDualDistance,
    AssumedPerPaper,
}

/// `[(n, k, μ; γ, d_f)]_q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumConvParams {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub mu: usize,
    pub gamma: usize,
    pub d_f: usize,
    pub d_f_status: DfStatus,
    pub purity_note: PurityNote,
    pub mds: bool,
}

impl QuantumConvParams {
    pub fn tuple(&self) -> String {
        format!("[({}, {}, {}; {}, {})]_{}", self.n, self.k, self.mu, self.gamma, self.d_f, self.q)
    }
}

/// `(n - k)/2 · (⌊2γ/(n + k)⌋ + 1) + γ + 1`.
pub fn quantum_singleton(n: usize, k: usize, gamma: usize) -> Result<usize> {
    if k >= n || !(n - k).is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("need k < n and n - k even, got n = {n}, k = {k}")));
    }
    Ok((n - k) / 2 * (2 * gamma / (n + k) + 1) + gamma + 1)
}

/// Maps a Hermitian self-orthogonal `(n, (n-k)/2, γ; μ)` code `V` to
/// `[(n, k, μ; γ, d_f)]_q` with `d_f` taken from `V^⊥h`.
///
/// `v_lower` is a lower bound on the free distance of `V` itself, with the
/// method that produced it.
pub fn from_selforthogonal(
    q: u64,
    v: &ConvolutionalCode,
    self_orthogonal: bool,
    dual_df: &FreeDistanceResult,
    v_lower: Option<(usize, PurityNote)>,
) -> Result<QuantumConvParams> {
    if !self_orthogonal {
        return Err(Error::NotSelfOrthogonal);
    }
    if 2 * v.k > v.n {
        return Err(Error::InvalidParameter(format!("dim V = {} exceeds n/2 for n = {}", v.k, v.n)));
    }
    let k = v.n - 2 * v.k;
    let d_f = dual_df.lower;
    let dual_exact = dual_df.exact().is_some();
    let (d_f_status, purity_note) = match v_lower {
        Some((bound, note)) if dual_exact && bound > d_f => (DfStatus::Exact, note),
        Some((bound, note)) if bound >= d_f => (DfStatus::LowerBound, note),
        _ => (DfStatus::LowerBound, PurityNote::AssumedPerPaper),
    };
    let mut params =
        QuantumConvParams { q, n: v.n, k, mu: v.mu, gamma: v.gamma, d_f, d_f_status, purity_note, mds: false };
    params.mds = quantum_mds_check(&params);
    Ok(params)
}

/// `d_f` equals the quantum Singleton bound. A lower bound that reaches the
/// bound pins the value.
pub fn quantum_mds_check(params: &QuantumConvParams) -> bool {
    quantum_singleton(params.n, params.k, params.gamma).is_ok_and(|b| params.d_f == b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_values() {
        assert_eq!(quantum_singleton(26, 20, 2).unwrap(), 6);
        assert_eq!(quantum_singleton(25, 21, 2).unwrap(), 5);
        assert_eq!(quantum_singleton(10, 4, 0).unwrap(), 4);
        assert!(quantum_singleton(10, 5, 1).is_err());
    }

    #[test]
    fn lower_bound_below_singleton_is_not_mds() {
        let p = QuantumConvParams {
            q: 5,
            n: 26,
            k: 20,
            mu: 1,
            gamma: 2,
            d_f: 5,
            d_f_status: DfStatus::LowerBound,
            purity_note: PurityNote::AssumedPerPaper,
            mds: false,
        };
        assert!(!quantum_mds_check(&p));
        assert!(quantum_mds_check(&QuantumConvParams { d_f: 6, ..p }));
    }
}
