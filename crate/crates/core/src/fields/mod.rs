//! Odd-characteristic finite fields GF(p^m) and the GF(q²) ⊂ GF(q⁴) tower.
//!
//! Elements are stored as [`Fe`], the integer encoding `Σ c_i p^i` of the
//! coordinate vector `(c_0, …, c_{m-1})` in the power basis of the modulus
//! root. The encoding is canonical, so equality of elements is equality of
//! encodings. Arithmetic goes through a [`GaloisField`], which owns the
//! modulus and (for fields with fewer than 2²⁰ elements) log/antilog tables
//! that are cross-checked against coordinate arithmetic when built.

mod element;
mod primepoly;
mod tower;

pub use element::{arith, ArithOp, FieldElement};
pub use tower::{BasisExpansion, SubfieldEmbedding, Tower};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory;

/// Fields with fewer elements than this get log/antilog tables.
pub const TABLE_LIMIT: u64 = 1 << 20;
/// Fields with at most this many elements also get a full addition table.
const ADD_TABLE_LIMIT: u64 = 1 << 10;
/// Largest field order the `u32` encoding supports.
const MAX_ORDER: u64 = 1 << 31;
/// Number of pairs used to validate tables against coordinate arithmetic.
const TABLE_CHECKS: u64 = 10_000;

/// A field element in its canonical integer encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The pinned representation of a field: characteristic, degree and modulus.
///
/// The modulus is monic, irreducible of degree `m`, with coefficients listed
/// constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub m: u32,
    pub modulus: Vec<u64>,
}

/// Coordinates of the `t`-th vector in lexicographic order, comparing
/// `c_0` first.
fn lex_coords(t: u64, p: u64, m: usize) -> Vec<u64> {
    let mut c = vec![0u64; m];
    let mut t = t;
    for slot in c.iter_mut().rev() {
        *slot = t % p;
        t /= p;
    }
    c
}

impl FieldSpec {
    /// Picks the lexicographically smallest monic irreducible modulus of degree `m`.
    pub fn create(p: u64, m: u32) -> Result<Self> {
        if p == 2 || !numtheory::is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let order = numtheory::saturating_pow(p, m as u64);
        if order > MAX_ORDER as u128 {
            return Err(Error::FieldTooLarge { p, m });
        }
        let m_us = m as usize;
        for t in 0..order as u64 {
            let mut f = lex_coords(t, p, m_us);
            f.push(1);
            if primepoly::is_irreducible(&f, p) {
                return Ok(FieldSpec { p, m, modulus: f });
            }
        }
        Err(Error::NoIrreducible { p, m })
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.m)
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
}

/// Arithmetic context for one finite field.
pub struct GaloisField {
    spec: FieldSpec,
    p: u32,
    m: usize,
    order: u32,
    pows: Vec<u32>,
    generator: Fe,
    tables: Option<Tables>,
}

impl std::fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GaloisField")
            .field("spec", &self.spec)
            .field("generator", &self.generator)
            .field("tables", &self.tables.is_some())
            .finish()
    }
}

impl GaloisField {
    pub fn new(p: u64, m: u32) -> Result<Self> {
        Self::from_spec(FieldSpec::create(p, m)?)
    }

    pub fn from_spec(spec: FieldSpec) -> Result<Self> {
        let order = spec.order();
        let m = spec.m as usize;
        let pows = (0..=m).map(|i| (spec.p as u32).pow(i as u32)).collect();
        let mut field =
            GaloisField { p: spec.p as u32, m, order: order as u32, pows, generator: Fe::ZERO, tables: None, spec };
        field.generator = field.find_generator()?;
        if order < TABLE_LIMIT {
            field.tables = Some(field.build_tables()?);
        }
        Ok(field)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.m as u32
    }

    pub fn order(&self) -> u64 {
        self.order as u64
    }

    /// The least primitive element in coordinate-lexicographic order.
    pub fn generator(&self) -> Fe {
        self.generator
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.order).map(Fe)
    }

    /// Coordinates `(c_0, …, c_{m-1})` of `a`.
    pub fn coords(&self, a: Fe) -> Vec<u64> {
        let p = self.p;
        let mut v = a.0;
        (0..self.m)
            .map(|_| {
                let c = v % p;
                v /= p;
                c as u64
            })
            .collect()
    }

    pub fn from_coords(&self, coords: &[u64]) -> Fe {
        let p = self.p as u64;
        Fe(coords.iter().rev().fold(0u64, |acc, &c| acc * p + c % p) as u32)
    }

    /// Embeds an integer into the prime subfield.
    pub fn from_int(&self, x: i64) -> Fe {
        Fe(x.rem_euclid(self.p as i64) as u32)
    }

    /// The class of the indeterminate, i.e. the power-basis generator.
    pub fn x(&self) -> Fe {
        if self.m == 1 {
            // in a prime field the modulus is x - c with root c
            self.from_int(-(self.spec.modulus[0] as i64))
        } else {
            Fe(self.p)
        }
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if let Some(t) = &self.tables {
            if let Some(add) = &t.add {
                return Fe(add[a.0 as usize * self.order as usize + b.0 as usize]);
            }
        }
        self.coord_add(a, b)
    }

    pub fn neg(&self, a: Fe) -> Fe {
        match &self.tables {
            Some(t) => Fe(t.neg[a.0 as usize]),
            None => self.coord_neg(a),
        }
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        match &self.tables {
            Some(t) => Fe(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => self.coord_mul(a, b),
        }
    }

    /// Multiplicative inverse. Panics on zero; see [`GaloisField::checked_inv`].
    pub fn inv(&self, a: Fe) -> Fe {
        self.checked_inv(a).expect("inverse of zero")
    }

    pub fn checked_inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.order - 1;
        Ok(match &self.tables {
            Some(t) => Fe(t.exp[((n - t.log[a.0 as usize]) % n) as usize]),
            None => self.coord_pow(a, n as u64 - 1),
        })
    }

    pub fn div(&self, a: Fe, b: Fe) -> Fe {
        self.mul(a, self.inv(b))
    }

    pub fn checked_div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.checked_inv(b)?))
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.is_zero() {
            return Fe::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let n = (self.order - 1) as u128;
                let k = (t.log[a.0 as usize] as u128 * (e as u128 % n)) % n;
                Fe(t.exp[k as usize])
            }
            None => self.coord_pow(a, e),
        }
    }

    /// `x ↦ x^e`; for `e` a power of the characteristic this is a field automorphism.
    pub fn frobenius(&self, x: Fe, e: u64) -> Fe {
        self.pow(x, e)
    }

    /// Discrete logarithm base [`GaloisField::generator`], when tables exist.
    pub fn log(&self, a: Fe) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        self.tables.as_ref().map(|t| t.log[a.0 as usize] as u64)
    }

    // --- coordinate arithmetic -------------------------------------------

    fn coord_add(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p;
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        for i in 0..self.m {
            let d = (x % p + y % p) % p;
            out += d * self.pows[i];
            x /= p;
            y /= p;
        }
        Fe(out)
    }

    fn coord_neg(&self, a: Fe) -> Fe {
        let p = self.p;
        let mut x = a.0;
        let mut out = 0u32;
        for i in 0..self.m {
            let d = (p - x % p) % p;
            out += d * self.pows[i];
            x /= p;
        }
        Fe(out)
    }

    fn coord_mul(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p as u64;
        let (ca, cb) = (self.coords(a), self.coords(b));
        let mut prod = vec![0u64; 2 * self.m - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let modulus = &self.spec.modulus;
        for d in (self.m..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            let shift = d - self.m;
            for (j, &mj) in modulus.iter().enumerate() {
                prod[shift + j] = (prod[shift + j] + p - c * mj % p) % p;
            }
        }
        prod.truncate(self.m);
        self.from_coords(&prod)
    }

    fn coord_pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut acc = Fe::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.coord_mul(acc, base);
            }
            base = self.coord_mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn find_generator(&self) -> Result<Fe> {
        let n = self.order as u64 - 1;
        if n == 1 {
            return Ok(Fe::ONE);
        }
        let primes: Vec<u64> = numtheory::factor(n).into_iter().map(|(r, _)| r).collect();
        for t in 1..self.order as u64 {
            let g = self.from_coords(&lex_coords(t, self.p as u64, self.m));
            if g.is_zero() {
                continue;
            }
            if primes.iter().all(|r| self.coord_pow(g, n / r) != Fe::ONE) {
                return Ok(g);
            }
        }
        Err(Error::Internal("no primitive element found".into()))
    }

    fn build_tables(&self) -> Result<Tables> {
        let order = self.order as usize;
        let n = order - 1;
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![0u32; order];
        let mut cur = Fe::ONE;
        for k in 0..n {
            exp[k] = cur.0;
            exp[k + n] = cur.0;
            log[cur.0 as usize] = k as u32;
            cur = self.coord_mul(cur, self.generator);
        }
        if cur != Fe::ONE {
            return Err(Error::Internal("generator order mismatch".into()));
        }
        let neg = (0..order as u32).map(|a| self.coord_neg(Fe(a)).0).collect();
        let add = if (order as u64) <= ADD_TABLE_LIMIT {
            let mut t = vec![0u32; order * order];
            for a in 0..order {
                for b in 0..order {
                    t[a * order + b] = self.coord_add(Fe(a as u32), Fe(b as u32)).0;
                }
            }
            Some(t)
        } else {
            None
        };
        let tables = Tables { exp, log, neg, add };
        self.validate_tables(&tables)?;
        Ok(tables)
    }

    fn validate_tables(&self, t: &Tables) -> Result<()> {
        let order = self.order as u64;
        for i in 0..TABLE_CHECKS {
            let a = Fe(((i * 7919 + 1) % order) as u32);
            let b = Fe(((i * 104_729 + 3) % order) as u32);
            let tm = if a.is_zero() || b.is_zero() {
                Fe::ZERO
            } else {
                Fe(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
            };
            if tm != self.coord_mul(a, b) {
                return Err(Error::Internal(format!("log table disagrees at {a:?}*{b:?}")));
            }
            if let Some(add) = &t.add {
                if Fe(add[(a.0 * self.order + b.0) as usize]) != self.coord_add(a, b) {
                    return Err(Error::Internal(format!("add table disagrees at {a:?}+{b:?}")));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn create_specs() {
        let s = FieldSpec::create(3, 4).unwrap();
        assert_eq!(s.modulus.len(), 5);
        assert_eq!(s.order(), 81);
        // GF(5): smallest monic linear polynomial is x itself
        let s = FieldSpec::create(5, 1).unwrap();
        assert_eq!(s.modulus, vec![0, 1]);
        assert_eq!(FieldSpec::create(2, 3), Err(Error::NotOddPrime(2)));
        assert_eq!(FieldSpec::create(9, 1), Err(Error::NotOddPrime(9)));
        assert_eq!(FieldSpec::create(5, 0), Err(Error::ZeroDegree));
    }

    #[test]
    fn modulus_is_lexicographically_first() {
        // over GF(3), degree 2: x^2 + 1 has c_0 = 1, and no monic quadratic with
        // c_0 = 0 is irreducible, so x^2 + 1 is the first hit
        assert_eq!(FieldSpec::create(3, 2).unwrap().modulus, vec![1, 0, 1]);
        // over GF(5): x^2 + 1 = (x-2)(x+2), next candidate x^2 + x + 1 has
        // discriminant 2, a non-residue
        assert_eq!(FieldSpec::create(5, 2).unwrap().modulus, vec![1, 1, 1]);
    }

    #[test]
    fn table_and_coordinate_paths_agree() {
        let f = GaloisField::new(5, 2).unwrap();
        assert!(f.has_tables());
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.mul(a, b), f.coord_mul(a, b));
                assert_eq!(f.add(a, b), f.coord_add(a, b));
            }
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a)), Fe::ONE);
                assert_eq!(f.pow(a, 24), Fe::ONE);
            }
        }
    }

    #[test]
    fn prime_field_x_is_root_of_modulus() {
        let f = GaloisField::new(7, 1).unwrap();
        assert_eq!(f.x(), Fe(0));
        let g = GaloisField::new(7, 3).unwrap();
        assert_eq!(g.x(), Fe(7));
        assert_eq!(g.coords(g.x()), vec![0, 1, 0]);
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        let f = GaloisField::new(3, 2).unwrap();
        assert_eq!(f.checked_inv(Fe::ZERO), Err(Error::DivisionByZero));
        assert_eq!(f.checked_div(Fe::ONE, Fe::ZERO), Err(Error::DivisionByZero));
    }
}
