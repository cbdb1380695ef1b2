//! Univariate polynomials over a finite field, minimal polynomials, and
//! generator polynomials assembled from cyclotomic cosets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::{Fe, GaloisField, Tower};
use crate::negacyclic::CyclotomicCoset;

/// Dense polynomial, constant term first. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DensePolynomial {
    coeffs: Vec<Fe>,
}

impl DensePolynomial {
    pub fn new(mut coeffs: Vec<Fe>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePolynomial { coeffs }
    }

    pub fn zero() -> Self {
        DensePolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Fe::ONE)
    }

    pub fn constant(c: Fe) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Fe, degree: usize) -> Self {
        let mut coeffs = vec![Fe::ZERO; degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `X^n + 1`.
    pub fn x_n_plus_one(n: usize) -> Self {
        let mut coeffs = vec![Fe::ZERO; n + 1];
        coeffs[0] = Fe::ONE;
        coeffs[n] = Fe::ONE;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Fe::ONE
    }

    pub fn add(&self, f: &GaloisField, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, f: &GaloisField, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn scale(&self, f: &GaloisField, c: Fe) -> Self {
        Self::new(self.coeffs.iter().map(|&x| f.mul(x, c)).collect())
    }

    pub fn mul(&self, f: &GaloisField, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::new(out)
    }

    /// Quotient and remainder.
    pub fn divmod(&self, f: &GaloisField, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.leading());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Fe::ZERO; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul(rem[top], lead_inv);
            if c.is_zero() {
                continue;
            }
            let shift = top - dd;
            quot[shift] = c;
            for (j, &dj) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] = f.sub(rem[shift + j], f.mul(c, dj));
            }
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn monic(&self, f: &GaloisField) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(f, f.inv(self.leading()))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, f: &GaloisField, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divmod(f, &b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn lcm(&self, f: &GaloisField, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(f, other);
        let (q, _) = self.mul(f, other).divmod(f, &g).expect("gcd is nonzero");
        q.monic(f)
    }

    /// Horner evaluation at a point of the same field.
    pub fn eval(&self, f: &GaloisField, x: Fe) -> Fe {
        self.coeffs.iter().rev().fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn map_coeffs(&self, g: impl Fn(Fe) -> Fe) -> Self {
        Self::new(self.coeffs.iter().map(|&c| g(c)).collect())
    }
}

/// Minimal polynomial over GF(q²) of `x` ∈ GF(q⁴): the product of `X - y`
/// over the Frobenius orbit `{x, x^(q²)}`.
pub fn minimal_polynomial(tower: &Tower, x: Fe) -> Result<DensePolynomial> {
    let big = tower.big();
    let mut orbit = vec![x];
    let mut y = tower.sigma(x);
    while y != x {
        orbit.push(y);
        y = tower.sigma(y);
    }
    let mut prod = DensePolynomial::one();
    for &r in &orbit {
        prod = prod.mul(big, &DensePolynomial::new(vec![big.neg(r), Fe::ONE]));
    }
    let coeffs: Option<Vec<Fe>> = prod.coeffs().iter().map(|&c| tower.pull(c)).collect();
    coeffs.map(DensePolynomial::new).ok_or(Error::OutsideSubfield)
}

/// Product of the minimal polynomials of `β^r` over pairwise disjoint cosets.
///
/// For distinct cosets the minimal polynomials are coprime, so this is their lcm.
pub fn generator_from_cosets(tower: &Tower, cosets: &[CyclotomicCoset], beta: Fe) -> Result<DensePolynomial> {
    let mut seen = std::collections::BTreeSet::new();
    for c in cosets {
        for &z in c.members() {
            if !seen.insert(z) {
                return Err(Error::OverlappingCosets(z));
            }
        }
    }
    let small = tower.small();
    let mut g = DensePolynomial::one();
    for c in cosets {
        let m = minimal_polynomial(tower, tower.big().pow(beta, c.representative()))?;
        if m.degree() != Some(c.len()) {
            return Err(Error::Internal(format!(
                "minimal polynomial of β^{} has degree {:?}, coset size {}",
                c.representative(),
                m.degree(),
                c.len()
            )));
        }
        g = g.mul(small, &m);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::negacyclic::{all_odd_cosets, coset_of};

    #[test]
    fn arithmetic_identities() {
        let f = GaloisField::new(3, 2).unwrap();
        let a = DensePolynomial::new(vec![Fe(1), Fe(4), Fe(0), Fe(7)]);
        assert_eq!(a.mul(&f, &DensePolynomial::one()), a);
        assert_eq!(a.gcd(&f, &DensePolynomial::zero()), a.monic(&f));
        assert_eq!(a.divmod(&f, &DensePolynomial::zero()), Err(Error::DivisionByZero));
        let (q, r) = a.divmod(&f, &DensePolynomial::new(vec![Fe(2), Fe(1)])).unwrap();
        assert_eq!(q.mul(&f, &DensePolynomial::new(vec![Fe(2), Fe(1)])).add(&f, &r), a);
    }

    #[test]
    fn x5_plus_1_over_gf9_divisible_by_x_plus_1() {
        // -1 is a root of X^5 + 1, so X + 1 divides it
        let f = GaloisField::new(3, 2).unwrap();
        let x5 = DensePolynomial::x_n_plus_one(5);
        let d = DensePolynomial::new(vec![Fe::ONE, Fe::ONE]);
        let (q, r) = x5.divmod(&f, &d).unwrap();
        assert_eq!(q.degree(), Some(4));
        assert!(r.is_zero());
        assert_eq!(q.mul(&f, &d), x5);
    }

    #[test]
    fn minimal_polynomials_q3() {
        let t = Tower::new(3).unwrap();
        let beta = t.primitive_2n_root(5).unwrap();
        let m5 = minimal_polynomial(&t, t.big().pow(beta, 5)).unwrap();
        // β^5 = -1, so the minimal polynomial is X + 1
        assert_eq!(m5, DensePolynomial::new(vec![Fe::ONE, Fe::ONE]));
        // elements of the subfield have linear minimal polynomials
        for x in t.small().elements() {
            let m = minimal_polynomial(&t, t.embed(x)).unwrap();
            assert_eq!(m, DensePolynomial::new(vec![t.small().neg(x), Fe::ONE]));
        }
    }

    #[test]
    fn minimal_polynomial_q5_b11_roots() {
        let t = Tower::new(5).unwrap();
        let big = t.big();
        let beta = t.primitive_2n_root(26).unwrap();
        let m = minimal_polynomial(&t, big.pow(beta, 11)).unwrap();
        assert_eq!(m.degree(), Some(2));
        let lifted = m.map_coeffs(|c| t.embed(c));
        let roots: Vec<u64> = (0..52).filter(|&j| lifted.eval(big, big.pow(beta, j)).is_zero()).collect();
        assert_eq!(roots, vec![11, 15]);
    }

    #[test]
    fn generator_products() {
        let t = Tower::new(3).unwrap();
        let beta = t.primitive_2n_root(5).unwrap();
        assert_eq!(generator_from_cosets(&t, &[], beta).unwrap(), DensePolynomial::one());
        let c = coset_of(1, 5, 3).unwrap();
        let g = generator_from_cosets(&t, std::slice::from_ref(&c), beta).unwrap();
        assert_eq!(g.degree(), Some(2));
        let (_, r) = DensePolynomial::x_n_plus_one(5).divmod(t.small(), &g).unwrap();
        assert!(r.is_zero());
        assert_eq!(generator_from_cosets(&t, &[c.clone(), c], beta), Err(Error::OverlappingCosets(1)));

        let t5 = Tower::new(5).unwrap();
        let beta = t5.primitive_2n_root(26).unwrap();
        let cs: Vec<_> = [13, 11, 9].iter().map(|&i| coset_of(i, 26, 5).unwrap()).collect();
        let g = generator_from_cosets(&t5, &cs, beta).unwrap();
        assert_eq!(g.degree(), Some(5));
        let (_, r) = DensePolynomial::x_n_plus_one(26).divmod(t5.small(), &g).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn all_cosets_factor_x_n_plus_one() {
        for (q, n) in [(3u64, 5u64), (5, 26), (5, 13), (3, 4), (7, 25)] {
            let t = Tower::new(q).unwrap();
            let beta = t.primitive_2n_root(n).unwrap();
            let g = generator_from_cosets(&t, &all_odd_cosets(n, q).unwrap(), beta).unwrap();
            assert_eq!(g, DensePolynomial::x_n_plus_one(n as usize), "q={q} n={n}");
        }
    }

    #[test]
    fn product_matches_lcm() {
        let t = Tower::new(5).unwrap();
        let beta = t.primitive_2n_root(26).unwrap();
        let small = t.small();
        let a = minimal_polynomial(&t, t.big().pow(beta, 11)).unwrap();
        let b = minimal_polynomial(&t, t.big().pow(beta, 13)).unwrap();
        assert_eq!(a.lcm(small, &b), a.mul(small, &b));
        assert_eq!(a.lcm(small, &a), a);
    }
}
