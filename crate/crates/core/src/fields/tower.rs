use std::collections::HashMap;
use std::sync::Arc;

use super::{Fe, GaloisField};
use crate::error::{Error, Result};
use crate::numtheory;

/// Injective map GF(q²) → GF(q⁴) determined by the image of the power-basis
/// generator of GF(q²).
#[derive(Debug, Clone)]
pub struct SubfieldEmbedding {
    generator_image: Fe,
    image: Vec<Fe>,
    preimage: HashMap<Fe, Fe>,
}

impl SubfieldEmbedding {
    fn new(small: &GaloisField, big: &GaloisField, generator_image: Fe) -> Self {
        let image: Vec<Fe> = small
            .elements()
            .map(|x| {
                // Σ c_i r^i, Horner from the top coordinate
                small
                    .coords(x)
                    .iter()
                    .rev()
                    .fold(Fe::ZERO, |acc, &c| big.add(big.mul(acc, generator_image), big.from_int(c as i64)))
            })
            .collect();
        let preimage = image.iter().enumerate().map(|(i, &y)| (y, Fe(i as u32))).collect();
        SubfieldEmbedding { generator_image, image, preimage }
    }

    pub fn generator_image(&self) -> Fe {
        self.generator_image
    }

    pub fn embed(&self, x: Fe) -> Fe {
        self.image[x.0 as usize]
    }

    /// Inverse of [`SubfieldEmbedding::embed`] on its image.
    pub fn pull(&self, y: Fe) -> Option<Fe> {
        self.preimage.get(&y).copied()
    }
}

/// The tower GF(q²) ⊂ GF(q⁴), both built directly over GF(p).
#[derive(Debug)]
pub struct Tower {
    q: u64,
    small: Arc<GaloisField>,
    big: Arc<GaloisField>,
    embedding: SubfieldEmbedding,
    basis: BasisExpansion,
}

impl Tower {
    pub fn new(q: u64) -> Result<Self> {
        let (p, e) = numtheory::prime_power(q).ok_or(Error::NotOddPrimePower(q))?;
        if p == 2 {
            return Err(Error::NotOddPrimePower(q));
        }
        let small = Arc::new(GaloisField::new(p, 2 * e)?);
        let big = Arc::new(GaloisField::new(p, 4 * e)?);
        let q2 = small.order();

        // the subfield of GF(q⁴) is {0} ∪ <g^(q²+1)>; take the first root of
        // the small field's modulus met while walking that cyclic group
        let omega = big.pow(big.generator(), q2 + 1);
        let modulus = &small.spec().modulus;
        let mut root = None;
        let mut r = Fe::ONE;
        for _ in 0..q2 - 1 {
            let value = modulus.iter().rev().fold(Fe::ZERO, |acc, &c| big.add(big.mul(acc, r), big.from_int(c as i64)));
            if value.is_zero() {
                root = Some(r);
                break;
            }
            r = big.mul(r, omega);
        }
        let root = root.ok_or_else(|| Error::Internal("subfield modulus has no root".into()))?;
        let embedding = SubfieldEmbedding::new(&small, &big, root);
        let mut tower = Tower { q, small, big, embedding, basis: BasisExpansion::placeholder() };
        tower.basis = BasisExpansion::new(&tower, Fe::ONE, tower.big.x())?;
        Ok(tower)
    }

    /// The base prime power `q`.
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn q_squared(&self) -> u64 {
        self.q * self.q
    }

    /// GF(q²), the symbol field of every code.
    pub fn small(&self) -> &GaloisField {
        &self.small
    }

    pub fn small_arc(&self) -> Arc<GaloisField> {
        Arc::clone(&self.small)
    }

    /// GF(q⁴), home of the primitive 2n-th roots of unity.
    pub fn big(&self) -> &GaloisField {
        &self.big
    }

    pub fn big_arc(&self) -> Arc<GaloisField> {
        Arc::clone(&self.big)
    }

    pub fn embedding(&self) -> &SubfieldEmbedding {
        &self.embedding
    }

    pub fn embed(&self, x: Fe) -> Fe {
        self.embedding.embed(x)
    }

    pub fn pull(&self, y: Fe) -> Option<Fe> {
        self.embedding.pull(y)
    }

    /// The generator of Gal(GF(q⁴)/GF(q²)): `y ↦ y^(q²)`.
    pub fn sigma(&self, y: Fe) -> Fe {
        self.big.frobenius(y, self.q_squared())
    }

    /// Hermitian conjugation on GF(q²): `x ↦ x^q`.
    pub fn conj(&self, x: Fe) -> Fe {
        self.small.frobenius(x, self.q)
    }

    /// The default GF(q²)-basis `(1, x)` of GF(q⁴).
    pub fn default_basis(&self) -> &BasisExpansion {
        &self.basis
    }

    /// `β = g^((q⁴-1)/2n)` for the least primitive element `g` of GF(q⁴).
    pub fn primitive_2n_root(&self, n: u64) -> Result<Fe> {
        let order = self.big.order() - 1;
        let two_n = 2 * n;
        if n == 0 || !order.is_multiple_of(two_n) {
            return Err(Error::NoPrimitiveRoot { two_n, order });
        }
        let beta = self.big.pow(self.big.generator(), order / two_n);
        let minus_one = self.big.neg(Fe::ONE);
        if self.big.pow(beta, n) != minus_one || self.big.pow(beta, two_n) != Fe::ONE {
            return Err(Error::Internal("β fails β^n = -1".into()));
        }
        Ok(beta)
    }
}

/// An ordered GF(q²)-basis `(b₁, b₂)` of GF(q⁴) with the data needed to solve
/// `x = c₁b₁ + c₂b₂`.
#[derive(Debug, Clone)]
pub struct BasisExpansion {
    b1: Fe,
    b2: Fe,
    sigma_b1: Fe,
    sigma_b2: Fe,
    det_inv: Fe,
}

impl BasisExpansion {
    fn placeholder() -> Self {
        BasisExpansion { b1: Fe::ZERO, b2: Fe::ZERO, sigma_b1: Fe::ZERO, sigma_b2: Fe::ZERO, det_inv: Fe::ZERO }
    }

    /// Fails unless `b1, b2` are linearly independent over GF(q²).
    pub fn new(tower: &Tower, b1: Fe, b2: Fe) -> Result<Self> {
        let big = tower.big();
        let (sigma_b1, sigma_b2) = (tower.sigma(b1), tower.sigma(b2));
        // applying σ to x = c₁b₁ + c₂b₂ gives a second equation; the system is
        // solvable iff b₁σ(b₂) - b₂σ(b₁) ≠ 0
        let det = big.sub(big.mul(b1, sigma_b2), big.mul(b2, sigma_b1));
        if det.is_zero() {
            return Err(Error::InvalidParameter(format!("{b1:?}, {b2:?} is not a GF(q²)-basis")));
        }
        Ok(BasisExpansion { b1, b2, sigma_b1, sigma_b2, det_inv: big.inv(det) })
    }

    pub fn basis(&self) -> (Fe, Fe) {
        (self.b1, self.b2)
    }

    /// Coordinates `(c₁, c₂)` in GF(q²) of `x` ∈ GF(q⁴).
    pub fn expand(&self, tower: &Tower, x: Fe) -> Result<(Fe, Fe)> {
        let big = tower.big();
        let sx = tower.sigma(x);
        let c1 = big.mul(big.sub(big.mul(x, self.sigma_b2), big.mul(self.b2, sx)), self.det_inv);
        let c2 = big.mul(big.sub(big.mul(self.b1, sx), big.mul(self.sigma_b1, x)), self.det_inv);
        match (tower.pull(c1), tower.pull(c2)) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(Error::OutsideSubfield),
        }
    }

    pub fn reconstruct(&self, tower: &Tower, c1: Fe, c2: Fe) -> Fe {
        let big = tower.big();
        big.add(big.mul(tower.embed(c1), self.b1), big.mul(tower.embed(c2), self.b2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_is_a_homomorphism() {
        let t = Tower::new(3).unwrap();
        let (s, b) = (t.small(), t.big());
        assert_eq!(t.embed(Fe::ZERO), Fe::ZERO);
        assert_eq!(t.embed(Fe::ONE), Fe::ONE);
        for x in s.elements() {
            let ex = t.embed(x);
            assert_eq!(t.sigma(ex), ex);
            for y in s.elements() {
                assert_eq!(t.embed(s.add(x, y)), b.add(ex, t.embed(y)));
                assert_eq!(t.embed(s.mul(x, y)), b.mul(ex, t.embed(y)));
            }
        }
    }

    #[test]
    fn fixed_points_of_sigma_are_the_subfield() {
        let t = Tower::new(3).unwrap();
        let fixed: Vec<Fe> = t.big().elements().filter(|&x| t.sigma(x) == x).collect();
        assert_eq!(fixed.len(), 9);
        assert!(fixed.iter().all(|&x| t.pull(x).is_some()));
    }

    #[test]
    fn primitive_roots() {
        let t = Tower::new(3).unwrap();
        let beta = t.primitive_2n_root(5).unwrap();
        let big = t.big();
        assert_eq!(big.pow(beta, 10), Fe::ONE);
        assert_eq!(big.pow(beta, 5), big.neg(Fe::ONE));
        assert!(!(big.pow(beta, 2) == Fe::ONE));

        let t5 = Tower::new(5).unwrap();
        assert!(matches!(t5.primitive_2n_root(27), Err(Error::NoPrimitiveRoot { two_n: 54, order: 624 })));
    }

    #[test]
    fn expansion_of_basis_vectors() {
        let t = Tower::new(5).unwrap();
        let basis = t.default_basis();
        let (b1, b2) = basis.basis();
        assert_eq!(basis.expand(&t, b1).unwrap(), (Fe::ONE, Fe::ZERO));
        assert_eq!(basis.expand(&t, b2).unwrap(), (Fe::ZERO, Fe::ONE));
        assert_eq!(basis.expand(&t, Fe::ZERO).unwrap(), (Fe::ZERO, Fe::ZERO));
        for x in t.big().elements() {
            let (c1, c2) = basis.expand(&t, x).unwrap();
            assert_eq!(basis.reconstruct(&t, c1, c2), x);
        }
    }

    #[test]
    fn dependent_pair_is_rejected() {
        let t = Tower::new(3).unwrap();
        let two = t.big().from_int(2);
        assert!(BasisExpansion::new(&t, Fe::ONE, two).is_err());
    }

    #[test]
    fn non_prime_power_rejected() {
        assert_eq!(Tower::new(15).unwrap_err(), Error::NotOddPrimePower(15));
        assert_eq!(Tower::new(8).unwrap_err(), Error::NotOddPrimePower(8));
    }
}
