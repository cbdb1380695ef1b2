//! Polynomials over a prime field GF(p), used only to pick field moduli.

pub(crate) type PrimePoly = Vec<u64>;

fn trim(mut a: PrimePoly) -> PrimePoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

pub(crate) fn rem(a: &[u64], m: &[u64], p: u64) -> PrimePoly {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] * lead_inv % p;
        let shift = top - dm;
        for (j, &mj) in m.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p - c * mj % p) % p;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> PrimePoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    rem(&out, m, p)
}

fn pow_mod(a: &[u64], mut e: u64, m: &[u64], p: u64) -> PrimePoly {
    let mut acc = vec![1u64];
    let mut base = rem(a, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &base, m, p);
        }
        base = mul_mod(&base, &base, m, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> PrimePoly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn sub(a: &[u64], b: &[u64], p: u64) -> PrimePoly {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

/// Rabin's irreducibility test for a monic `f` of degree `m` over GF(p).
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    if m == 1 {
        return true;
    }
    if f[0] == 0 {
        return false;
    }
    let x = vec![0u64, 1];
    // x^(p^j) mod f for j = 0..=m
    let mut frob = vec![rem(&x, f, p)];
    for j in 0..m {
        let next = pow_mod(&frob[j], p, f, p);
        frob.push(next);
    }
    if sub(&frob[m], &x, p) != Vec::<u64>::new() {
        return false;
    }
    for (r, _) in crate::numtheory::factor(m as u64) {
        let h = sub(&frob[m / r as usize], &x, p);
        if gcd(f, &h, p).len() != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_irreducibles() {
        // x^2 + 1 over GF(3) is irreducible; over GF(5) it is not
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[1, 0, 1], 5));
        // x^2 + 2 over GF(5)
        assert!(is_irreducible(&[2, 0, 1], 5));
        // (x^2 + 1)^2 over GF(3) is reducible
        assert!(!is_irreducible(&[1, 0, 2, 0, 1], 3));
    }
}
