use serde::{Deserialize, Serialize};

use super::code::{generator_matrix, is_codeword, NegacyclicCode};
use crate::error::{Error, Result};
use crate::fields::Tower;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainmentReport {
    /// `Z ∩ (-qZ mod 2n) = ∅`.
    pub by_defining_set: bool,
    /// Every basis row of the Hermitian dual is a codeword.
    pub explicit: bool,
    /// Residues `z ∈ Z` with `-qz mod 2n ∈ Z`.
    pub witnesses: Vec<u64>,
    /// Dimension of the Hermitian dual that was checked row by row.
    pub dual_dimension: usize,
}

impl ContainmentReport {
    pub fn contained(&self) -> bool {
        self.by_defining_set && self.explicit
    }
}

/// Decides `C^⊥h ⊆ C` from the defining set and again from an explicit basis
/// of the Hermitian dual.
pub fn hermitian_dual_containment(tower: &Tower, code: &NegacyclicCode) -> Result<ContainmentReport> {
    let two_n = 2 * code.n;
    let q = code.q % two_n;
    let z = &code.defining_set;
    let witnesses: Vec<u64> = z
        .residues()
        .iter()
        .copied()
        .filter(|&r| {
            let image = (two_n - (q * r) % two_n) % two_n;
            z.contains(image)
        })
        .collect();
    let by_defining_set = witnesses.is_empty();

    // C^⊥h is the null space of the entrywise conjugate of G
    let small = tower.small();
    let g_conj = generator_matrix(code).map(|x| tower.conj(x));
    let dual = g_conj.nullspace(small);
    let explicit = dual.iter_rows().all(|row| is_codeword(tower, code, row));

    if by_defining_set != explicit {
        return Err(Error::ContainmentDisagreement { by_defining_set, explicit });
    }
    Ok(ContainmentReport { by_defining_set, explicit, witnesses, dual_dimension: dual.rows() })
}
