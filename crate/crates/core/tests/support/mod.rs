//! Oracles and property bodies shared by the property suite and the
//! acceptance harness. The oracles avoid the library's search routines and
//! use only field arithmetic.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use negaconv::convolutional::{cross_orthogonal, dual_basis_bounded, ConvolutionalCode, PolyMatrix};
use negaconv::fields::{BasisExpansion, Fe, GaloisField, Tower};
use negaconv::matrix::Matrix;
use negaconv::negacyclic::{
    all_odd_cosets, bch_defining_set, build_bch_code, build_code, default_parity_check, enumerate_min_weight,
    generator_matrix, parity_check_matrix, DefiningSet, NegacyclicCode,
};
use negaconv::polyring::DensePolynomial;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

pub const CASES: u32 = 1000;

/// Towers for q = 3, 5, 7, 9.
pub fn towers() -> &'static [Tower] {
    static T: OnceLock<Vec<Tower>> = OnceLock::new();
    T.get_or_init(|| [3, 5, 7, 9].iter().map(|&q| Tower::new(q).unwrap()).collect())
}

pub fn tower(q: u64) -> &'static Tower {
    towers().iter().find(|t| t.q() == q).expect("tower for q")
}

/// `(q, n)` with `gcd(q, 2n) = 1` and `2n | q⁴ - 1`.
pub const LENGTHS: [(u64, u64); 8] = [(3, 5), (3, 4), (3, 10), (5, 13), (5, 26), (5, 12), (7, 25), (7, 12)];

pub fn config() -> Config {
    Config { cases: CASES, max_global_rejects: 1_000_000, failure_persistence: None, ..Config::default() }
}

pub fn runner() -> TestRunner {
    TestRunner::new(config())
}

// ---- oracles ----

/// Orbits of odd residues mod `2n` under `z ↦ q²z`, by direct iteration.
pub fn naive_cosets(n: u64, q: u64) -> Vec<BTreeSet<u64>> {
    let two_n = 2 * n;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for z in (1..two_n).step_by(2) {
        if seen.contains(&z) {
            continue;
        }
        let mut orbit = BTreeSet::new();
        let mut x = z;
        while orbit.insert(x) {
            x = x * q * q % two_n;
        }
        seen.extend(orbit.iter().copied());
        out.push(orbit);
    }
    out
}

/// `m(x)·g(x) mod xⁿ + 1` by schoolbook multiplication.
pub fn negacyclic_product(f: &GaloisField, m: &[Fe], g: &[Fe], n: usize) -> Vec<Fe> {
    let mut out = vec![Fe::ZERO; n];
    for (i, &a) in m.iter().enumerate() {
        for (j, &b) in g.iter().enumerate() {
            let t = f.mul(a, b);
            let e = i + j;
            if e < n {
                out[e] = f.add(out[e], t);
            } else {
                out[e - n] = f.sub(out[e - n], t);
            }
        }
    }
    out
}

/// Minimum nonzero weight over all messages `m(x)` of degree below `k`.
pub fn naive_min_distance(f: &GaloisField, code: &NegacyclicCode) -> usize {
    let n = code.n as usize;
    let k = code.k;
    let g = code.generator.coeffs();
    let order = f.order() as u32;
    let mut m = vec![Fe::ZERO; k];
    let mut best = n + 1;
    loop {
        let mut d = 0;
        while d < k {
            m[d] = Fe(m[d].0 + 1);
            if m[d].0 < order {
                break;
            }
            m[d] = Fe::ZERO;
            d += 1;
        }
        if d == k {
            return best;
        }
        let w = negacyclic_product(f, &m, g, n).iter().filter(|x| !x.is_zero()).count();
        best = best.min(w);
    }
}

/// Minimum weight of `u(D)G(D)` over nonzero inputs of degree at most `len - 1`.
/// An upper bound on the free distance.
pub fn truncated_free_distance(f: &GaloisField, g: &PolyMatrix, len: usize) -> usize {
    let (k, n) = (g.rows(), g.cols());
    let mats = g.coefficients();
    let symbols = k * len;
    let order = f.order() as u32;
    let mut u = vec![Fe::ZERO; symbols];
    let mut best = usize::MAX;
    loop {
        let mut d = 0;
        while d < symbols {
            u[d] = Fe(u[d].0 + 1);
            if u[d].0 < order {
                break;
            }
            u[d] = Fe::ZERO;
            d += 1;
        }
        if d == symbols {
            return best;
        }
        let mut weight = 0;
        for t in 0..len + mats.len() - 1 {
            for c in 0..n {
                let mut v = Fe::ZERO;
                for s in 0..len {
                    if t < s || t - s >= mats.len() {
                        continue;
                    }
                    for r in 0..k {
                        v = f.add(v, f.mul(u[s * k + r], mats[t - s].get(r, c)));
                    }
                }
                if !v.is_zero() {
                    weight += 1;
                }
            }
        }
        best = best.min(weight);
    }
}

/// `Σ_j a_j · conj(b_{j+t})` for every shift, evaluated entrywise.
pub fn naive_hermitian_orthogonal(t: &Tower, a: &PolyMatrix, b: &PolyMatrix) -> bool {
    let f = t.small();
    let (am, bm) = (a.coefficients(), b.coefficients());
    let span = am.len() as isize + bm.len() as isize;
    for shift in -span..=span {
        for r in 0..a.rows() {
            for s in 0..b.rows() {
                let mut acc = Fe::ZERO;
                for (j, aj) in am.iter().enumerate() {
                    let idx = j as isize + shift;
                    if idx < 0 || idx as usize >= bm.len() {
                        continue;
                    }
                    let bj = &bm[idx as usize];
                    for c in 0..a.cols() {
                        acc = f.add(acc, f.mul(aj.get(r, c), t.conj(bj.get(s, c))));
                    }
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

type DistanceCache = Mutex<HashMap<(u64, u64, u64, usize), usize>>;

fn cached_distance(q: u64, n: u64, b: u64, delta: usize, code: &NegacyclicCode) -> usize {
    static CACHE: OnceLock<DistanceCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(&d) = cache.lock().unwrap().get(&(q, n, b, delta)) {
        return d;
    }
    let d = naive_min_distance(tower(q).small(), code);
    cache.lock().unwrap().insert((q, n, b, delta), d);
    d
}

// ---- strategies ----

fn length() -> impl Strategy<Value = (u64, u64)> {
    prop::sample::select(LENGTHS.to_vec())
}

/// A random union of cosets for a random admissible length.
pub fn defining_set() -> impl Strategy<Value = (u64, u64, Vec<bool>)> {
    length().prop_flat_map(|(q, n)| {
        let count = all_odd_cosets(n, q).unwrap().len();
        (Just(q), Just(n), prop::collection::vec(any::<bool>(), count))
    })
}

pub fn bch_params() -> impl Strategy<Value = (u64, u64, u64, usize)> {
    length().prop_flat_map(|(q, n)| (Just(q), Just(n), (0..n).prop_map(|j| 2 * j + 1), 2..=(n as usize).min(6)))
}

fn build(q: u64, n: u64, chosen: &[bool]) -> NegacyclicCode {
    let t = tower(q);
    let reps: Vec<u64> =
        all_odd_cosets(n, q).unwrap().iter().zip(chosen).filter(|(_, &c)| c).map(|(c, _)| c.representative()).collect();
    let z = DefiningSet::from_coset_reps(n, q, reps).unwrap();
    build_code(t, &z, t.primitive_2n_root(n).unwrap()).unwrap()
}

// ---- property bodies ----

pub fn field_axioms(q: u64, a: u32, b: u32, c: u32) -> Result<(), TestCaseError> {
    let t = tower(q);
    for f in [t.small(), t.big()] {
        let o = f.order() as u32;
        let (a, b, c) = (Fe(a % o), Fe(b % o), Fe(c % o));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
        prop_assert_eq!(f.mul(a, Fe::ONE), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a)), Fe::ONE);
        }
        // Frobenius is additive and multiplicative
        let p = f.characteristic();
        prop_assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
        prop_assert_eq!(f.pow(a, f.order()), a);
    }
    Ok(())
}

pub fn expand_round_trip(q: u64, x: u32, b1: u32, b2: u32) -> Result<(), TestCaseError> {
    let t = tower(q);
    let o = t.big().order() as u32;
    let x = Fe(x % o);
    let (c1, c2) = t.default_basis().expand(t, x).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(t.default_basis().reconstruct(t, c1, c2), x);
    if let Ok(basis) = BasisExpansion::new(t, Fe(b1 % o), Fe(b2 % o)) {
        let (c1, c2) = basis.expand(t, x).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(basis.reconstruct(t, c1, c2), x);
    }
    Ok(())
}

pub fn generator_divides(q: u64, n: u64, chosen: &[bool]) -> Result<(), TestCaseError> {
    let t = tower(q);
    let f = t.small();
    let code = build(q, n, chosen);
    let (_, rem) = DensePolynomial::x_n_plus_one(n as usize).divmod(f, &code.generator).unwrap();
    prop_assert!(rem.is_zero());
    prop_assert_eq!(code.generator.degree(), Some(code.defining_set.len()));
    prop_assert!(code.generator.is_monic());
    // every root β^z with z ∈ Z is a root of g
    let beta = code.beta;
    for &z in code.defining_set.residues() {
        let x = t.big().pow(beta, z);
        let v =
            code.generator.coeffs().iter().rev().fold(Fe::ZERO, |acc, &c| t.big().add(t.big().mul(acc, x), t.embed(c)));
        prop_assert!(v.is_zero());
    }
    Ok(())
}

pub fn parity_orthogonal(q: u64, n: u64, b: u64, delta: usize) -> Result<(), TestCaseError> {
    let t = tower(q);
    let code = build_bch_code(t, n, b, delta, t.primitive_2n_root(n).unwrap()).unwrap();
    let h = default_parity_check(t, &code).map_err(|e| TestCaseError::fail(e.to_string()))?.matrix;
    prop_assert_eq!(h.rows(), code.defining_set.len());
    let g = generator_matrix(&code);
    prop_assert!(g.mul_transpose(t.small(), &h).unwrap().is_zero());
    Ok(())
}

pub fn bch_bound(q: u64, n: u64, b: u64, delta: usize) -> Result<(), TestCaseError> {
    let t = tower(q);
    let code = build_bch_code(t, n, b, delta, t.primitive_2n_root(n).unwrap()).unwrap();
    let words = (t.small().order() as f64).powi(code.k as i32);
    prop_assume!(words <= 1e5);
    let d = cached_distance(q, n, b, delta, &code);
    let lib = enumerate_min_weight(t.small(), &generator_matrix(&code), 100_000).unwrap();
    prop_assert_eq!(lib, d);
    prop_assert!(d >= code.designed_distance, "d = {} below designed {}", d, code.designed_distance);
    prop_assert_eq!(code.designed_distance, negaconv::negacyclic::bch_designed_distance(&code.defining_set));
    Ok(())
}

pub fn basis_independent_rank(q: u64, n: u64, b: u64, delta: usize, b1: u32, b2: u32) -> Result<(), TestCaseError> {
    let t = tower(q);
    let o = t.big().order() as u32;
    let Ok(basis) = BasisExpansion::new(t, Fe(b1 % o), Fe(b2 % o)) else {
        return Ok(());
    };
    let code = build_bch_code(t, n, b, delta, t.primitive_2n_root(n).unwrap()).unwrap();
    let z = bch_defining_set(n, q, b, delta).unwrap();
    let default = parity_check_matrix(t, &code, b, delta, t.default_basis()).unwrap();
    let other = parity_check_matrix(t, &code, b, delta, &basis).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(other.matrix.rows(), z.len());
    prop_assert_eq!(default.matrix.rows(), z.len());
    // same row space: stacking does not raise the rank
    let both = Matrix::vstack(&[&default.matrix, &other.matrix]).unwrap();
    prop_assert_eq!(both.rank(t.small()), z.len());
    Ok(())
}

/// A random `k × n` polynomial matrix of memory at most 1 over GF(q²).
pub fn poly_matrix() -> impl Strategy<Value = (u64, usize, usize, Vec<u32>)> {
    (prop::sample::select(vec![3u64, 5]), 1usize..=2, 2usize..=4)
        .prop_filter("k < n", |(_, k, n)| k < n)
        .prop_flat_map(|(q, k, n)| (Just(q), Just(k), Just(n), prop::collection::vec(any::<u32>(), 2 * k * n)))
}

pub fn dual_orthogonality(q: u64, k: usize, n: usize, raw: &[u32]) -> Result<(), TestCaseError> {
    let t = tower(q);
    let f = t.small();
    let o = f.order() as u32;
    let mats: Vec<Matrix> = raw.chunks(k * n).map(|c| Matrix::from_fn(k, n, |r, j| Fe(c[r * n + j] % o))).collect();
    let Ok(g) = PolyMatrix::new(mats) else {
        return Ok(());
    };
    prop_assume!(g.row_degrees().iter().all(Option::is_some));
    let Ok(code) = ConvolutionalCode::new(f, g.clone()) else {
        return Ok(());
    };
    let dual = dual_basis_bounded(t, &code.generator, code.k, 3).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(dual.rows(), n - k);
    prop_assert!(cross_orthogonal(t, &code.generator, &dual));
    prop_assert!(naive_hermitian_orthogonal(t, &code.generator, &dual));
    let dual_code = ConvolutionalCode::new(f, dual).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(dual_code.k, n - k);
    Ok(())
}

// ---- runners used by the acceptance harness ----

fn ok<T: std::fmt::Debug>(r: Result<(), proptest::test_runner::TestError<T>>) -> Result<(), String> {
    r.map_err(|e| format!("{e}"))
}

pub fn run_all() -> Vec<(&'static str, Result<(), String>)> {
    let mut out = Vec::new();
    let fe = (prop::sample::select(vec![3u64, 5, 7, 9]), any::<u32>(), any::<u32>(), any::<u32>());
    out.push(("field axioms", ok(runner().run(&fe, |(q, a, b, c)| field_axioms(q, a, b, c)))));
    out.push((
        "expand/reconstruct round trip",
        ok(runner().run(
            &(prop::sample::select(vec![3u64, 5, 7, 9]), any::<u32>(), any::<u32>(), any::<u32>()),
            |(q, x, b1, b2)| expand_round_trip(q, x, b1, b2),
        )),
    ));
    out.push((
        "g divides x^n + 1",
        ok(runner().run(&defining_set(), |(q, n, chosen)| generator_divides(q, n, &chosen))),
    ));
    out.push(("G·Hᵀ = 0", ok(runner().run(&bch_params(), |(q, n, b, d)| parity_orthogonal(q, n, b, d)))));
    out.push(("BCH bound", ok(runner().run(&bch_params(), |(q, n, b, d)| bch_bound(q, n, b, d)))));
    out.push((
        "basis-independent parity-check rank",
        ok(runner().run(&(bch_params(), any::<u32>(), any::<u32>()), |((q, n, b, d), b1, b2)| {
            basis_independent_rank(q, n, b, d, b1, b2)
        })),
    ));
    out.push((
        "dual basis orthogonality",
        ok(runner().run(&poly_matrix(), |(q, k, n, raw)| dual_orthogonality(q, k, n, &raw))),
    ));
    out
}
