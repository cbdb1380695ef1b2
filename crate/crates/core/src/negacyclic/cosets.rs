use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory;

/// Orbit of an odd residue under multiplication by `q²` mod `2n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclotomicCoset {
    modulus: u64,
    members: Vec<u64>,
}

impl CyclotomicCoset {
    /// The modulus `2n`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Smallest member.
    pub fn representative(&self) -> u64 {
        self.members[0]
    }

    /// Members in increasing order.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, z: u64) -> bool {
        self.members.binary_search(&z).is_ok()
    }
}

pub(crate) fn check_length(n: u64, q: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("length must be positive".into()));
    }
    if numtheory::gcd(q, 2 * n) != 1 {
        return Err(Error::InvalidParameter(format!("gcd(q, 2n) ≠ 1 for q = {q}, n = {n}")));
    }
    Ok(())
}

pub(crate) fn check_residue(i: u64, n: u64) -> Result<()> {
    if i == 0 || i >= 2 * n {
        return Err(Error::ResidueOutOfRange { residue: i, two_n: 2 * n });
    }
    if i.is_multiple_of(2) {
        return Err(Error::EvenResidue(i));
    }
    Ok(())
}

/// The coset of the odd residue `i` mod `2n` under `z ↦ q²z`.
pub fn coset_of(i: u64, n: u64, q: u64) -> Result<CyclotomicCoset> {
    check_length(n, q)?;
    check_residue(i, n)?;
    let two_n = 2 * n;
    let mult = ((q as u128 * q as u128) % two_n as u128) as u64;
    let mut members = vec![i];
    let mut z = ((i as u128 * mult as u128) % two_n as u128) as u64;
    while z != i {
        members.push(z);
        z = ((z as u128 * mult as u128) % two_n as u128) as u64;
    }
    members.sort_unstable();
    Ok(CyclotomicCoset { modulus: two_n, members })
}

/// Every odd coset mod `2n`, sorted by representative.
pub fn all_odd_cosets(n: u64, q: u64) -> Result<Vec<CyclotomicCoset>> {
    check_length(n, q)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for i in (1..2 * n).step_by(2) {
        if seen.contains(&i) {
            continue;
        }
        let c = coset_of(i, n, q)?;
        seen.extend(c.members().iter().copied());
        out.push(c);
    }
    Ok(out)
}

/// The two closed-form coset descriptions that the families rely on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CosetLemma {
    /// `n = q² + 1`, `q ≡ 1 mod 4`, `s = n/2`: `{s}`, `{3s}` and
    /// `{s - 2i, s + 2i}` for `1 ≤ i ≤ s - 1`.
    HalfLength,
    /// `n = (q² + 1)/2`: `{n}` and `{2i - 1, 1 - 2i}` for `1 ≤ i ≤ (n - 1)/2`.
    OddLength,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetReport {
    pub lemma: CosetLemma,
    pub q: u64,
    pub n: u64,
    pub cosets_found: usize,
    pub cosets_expected: usize,
    /// Every odd residue mod `2n` lies in exactly one predicted coset.
    pub covers_exactly_once: bool,
    pub mismatches: Vec<String>,
    pub pass: bool,
}

fn reduce(z: i64, two_n: u64) -> u64 {
    z.rem_euclid(two_n as i64) as u64
}

/// Enumerates all odd cosets mod `2n` and compares them with the closed form
/// of `lemma`.
pub fn verify_coset_structure(q: u64, lemma: CosetLemma) -> Result<CosetReport> {
    match numtheory::prime_power(q) {
        Some((p, _)) if p != 2 => {}
        _ => return Err(Error::NotOddPrimePower(q)),
    }
    let q2 = q * q;
    let (n, predicted): (u64, Vec<Vec<u64>>) = match lemma {
        CosetLemma::HalfLength => {
            if q % 4 != 1 {
                return Err(Error::InvalidParameter(format!("q = {q} is not 1 mod 4")));
            }
            let n = q2 + 1;
            let s = n / 2;
            let two_n = 2 * n;
            let mut pred = vec![vec![s], vec![3 * s]];
            for i in 1..s {
                let a = reduce(s as i64 - 2 * i as i64, two_n);
                let b = reduce(s as i64 + 2 * i as i64, two_n);
                pred.push(vec![a, b]);
            }
            (n, pred)
        }
        CosetLemma::OddLength => {
            let n = (q2 + 1) / 2;
            let two_n = 2 * n;
            let mut pred = vec![vec![n]];
            for i in 1..=(n - 1) / 2 {
                pred.push(vec![2 * i - 1, reduce(1 - 2 * i as i64, two_n)]);
            }
            (n, pred)
        }
    };
    let two_n = 2 * n;

    let mut predicted: Vec<Vec<u64>> = predicted
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c.dedup();
            c
        })
        .collect();
    predicted.sort();

    let mut hits = vec![0usize; two_n as usize];
    for c in &predicted {
        for &z in c {
            hits[z as usize] += 1;
        }
    }
    let covers_exactly_once = (0..two_n).all(|z| hits[z as usize] == (z % 2) as usize);

    let actual = all_odd_cosets(n, q)?;
    let mut actual_sets: Vec<Vec<u64>> = actual.iter().map(|c| c.members().to_vec()).collect();
    actual_sets.sort();

    let mut mismatches = Vec::new();
    for c in &predicted {
        if !actual_sets.contains(c) {
            mismatches.push(format!("predicted {c:?} is not a coset"));
        }
    }
    for c in &actual_sets {
        if !predicted.contains(c) {
            mismatches.push(format!("coset {c:?} is not predicted"));
        }
    }
    let pass = covers_exactly_once && mismatches.is_empty() && predicted.len() == actual_sets.len();
    Ok(CosetReport {
        lemma,
        q,
        n,
        cosets_found: actual_sets.len(),
        cosets_expected: predicted.len(),
        covers_exactly_once,
        mismatches,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cosets() {
        assert_eq!(coset_of(13, 26, 5).unwrap().members(), &[13]);
        assert_eq!(coset_of(11, 26, 5).unwrap().members(), &[11, 15]);
        assert_eq!(coset_of(3, 5, 3).unwrap().members(), &[3, 7]);
        assert_eq!(coset_of(5, 5, 3).unwrap().members(), &[5]);
        assert_eq!(coset_of(4, 5, 3), Err(Error::EvenResidue(4)));
        assert!(coset_of(11, 5, 3).is_err());
    }

    #[test]
    fn lemma_checks() {
        let r = verify_coset_structure(5, CosetLemma::HalfLength).unwrap();
        assert!(r.pass);
        assert_eq!(r.cosets_found, 14);
        let r = verify_coset_structure(3, CosetLemma::OddLength).unwrap();
        assert!(r.pass);
        assert_eq!(r.cosets_found, 3);
        assert!(verify_coset_structure(7, CosetLemma::HalfLength).is_err());
    }
}
