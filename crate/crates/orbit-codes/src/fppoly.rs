//! Scalar, polynomial and matrix kernels over the prime field F_p.
//!
//! Polynomials are coefficient vectors in ascending degree order with entries
//! reduced mod p. Everything here is exact integer arithmetic; p stays below
//! 2^24 so products fit comfortably in u64.

pub(crate) fn padd(a: u32, b: u32, p: u64) -> u32 {
    ((a as u64 + b as u64) % p) as u32
}

pub(crate) fn psub(a: u32, b: u32, p: u64) -> u32 {
    ((a as u64 + p - b as u64) % p) as u32
}

pub(crate) fn pmul(a: u32, b: u32, p: u64) -> u32 {
    ((a as u64 * b as u64) % p) as u32
}

pub(crate) fn ppow(mut base: u64, mut exp: u64, p: u64) -> u32 {
    base %= p;
    let mut acc: u64 = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc as u32
}

/// Inverse of a nonzero element mod p via Fermat.
pub(crate) fn pinv(a: u32, p: u64) -> u32 {
    debug_assert!(a != 0);
    if p == 2 {
        return 1;
    }
    ppow(a as u64, p - 2, p)
}

pub(crate) fn poly_trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn poly_deg(v: &[u32]) -> Option<usize> {
    v.iter().rposition(|&c| c != 0)
}

/// Remainder of `a` modulo a nonzero polynomial `b` (not necessarily monic).
pub(crate) fn poly_rem(mut a: Vec<u32>, b: &[u32], p: u64) -> Vec<u32> {
    let db = poly_deg(b).expect("divisor must be nonzero");
    let lead_inv = pinv(b[db], p);
    poly_trim(&mut a);
    while let Some(da) = poly_deg(&a) {
        if da < db {
            break;
        }
        let factor = pmul(a[da], lead_inv, p);
        let shift = da - db;
        for j in 0..=db {
            if b[j] != 0 {
                a[shift + j] = psub(a[shift + j], pmul(factor, b[j], p), p);
            }
        }
        poly_trim(&mut a);
    }
    a
}

pub(crate) fn poly_gcd(mut a: Vec<u32>, mut b: Vec<u32>, p: u64) -> Vec<u32> {
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Product of two degree-< d residues modulo a monic degree-d polynomial.
/// Inputs and output are fixed-length (d) coefficient vectors.
pub(crate) fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u64) -> Vec<u32> {
    let d = modulus.len() - 1;
    debug_assert_eq!(modulus[d], 1, "modulus must be monic");
    let mut buf = vec![0u32; 2 * d.max(1)];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if bj != 0 {
                buf[i + j] = ((buf[i + j] as u64 + ai as u64 * bj as u64) % p) as u32;
            }
        }
    }
    // Reduce from the top: X^t = X^(t-d) * (X^d mod modulus).
    for t in (d..2 * d.max(1)).rev() {
        let c = buf[t];
        if c == 0 {
            continue;
        }
        buf[t] = 0;
        let shift = t - d;
        for j in 0..d {
            if modulus[j] != 0 {
                buf[shift + j] = psub(buf[shift + j], pmul(c, modulus[j], p), p);
            }
        }
    }
    buf.truncate(d);
    buf
}

/// `base^exp` modulo a monic polynomial; `base` is a fixed-length residue.
pub(crate) fn poly_pow_mod(base: &[u32], mut exp: u64, modulus: &[u32], p: u64) -> Vec<u32> {
    let d = modulus.len() - 1;
    let mut result = vec![0u32; d.max(1)];
    if d == 0 {
        return result; // the zero ring; unused in practice
    }
    result[0] = 1;
    let mut sq = base.to_vec();
    while exp > 0 {
        if exp & 1 == 1 {
            result = poly_mul_mod(&result, &sq, modulus, p);
        }
        sq = poly_mul_mod(&sq, &sq, modulus, p);
        exp >>= 1;
    }
    result
}

/// Rabin's criterion: f (monic, trimmed, degree >= 1) is irreducible over F_p
/// iff X^(p^d) = X mod f and gcd(X^(p^(d/l)) - X, f) = 1 for each prime l | d.
pub(crate) fn poly_is_irreducible(f: &[u32], p: u64) -> bool {
    let d = f.len() - 1;
    debug_assert!(d >= 1 && f[d] == 1);
    if d == 1 {
        return true;
    }
    let x: Vec<u32> = {
        let mut v = vec![0u32; d];
        v[1] = 1;
        v
    };
    let pd = p.checked_pow(d as u32).expect("p^d below the size cap");
    let xq = poly_pow_mod(&x, pd, f, p);
    if xq != x {
        return false;
    }
    for l in prime_factors(d as u64) {
        let e = d / l as usize;
        let h = poly_pow_mod(&x, p.pow(e as u32), f, p);
        let mut diff: Vec<u32> = h
            .iter()
            .zip(x.iter())
            .map(|(&a, &b)| psub(a, b, p))
            .collect();
        poly_trim(&mut diff);
        if diff.is_empty() {
            return false;
        }
        let g = poly_gcd(diff, f.to_vec(), p);
        if poly_deg(&g) != Some(0) {
            return false;
        }
    }
    true
}

pub(crate) fn pack(digits: &[u32], p: u64) -> u32 {
    let mut v: u64 = 0;
    for &d in digits.iter().rev() {
        v = v * p + d as u64;
    }
    v as u32
}

pub(crate) fn unpack(mut v: u32, p: u64, len: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    for slot in out.iter_mut() {
        *slot = (v as u64 % p) as u32;
        v = (v as u64 / p) as u32;
    }
    out
}

/// Row-major matrix times vector over F_p.
pub(crate) fn mat_mul_vec(m: &[u32], v: &[u32], dim: usize, p: u64) -> Vec<u32> {
    let mut out = vec![0u32; dim];
    for r in 0..dim {
        let mut acc: u64 = 0;
        let row = &m[r * dim..(r + 1) * dim];
        for (c, &x) in v.iter().enumerate() {
            if x != 0 && row[c] != 0 {
                acc += row[c] as u64 * x as u64;
            }
        }
        out[r] = (acc % p) as u32;
    }
    out
}

/// Invert a row-major dim x dim matrix over F_p; None if singular.
pub(crate) fn mat_invert(mut m: Vec<u32>, dim: usize, p: u64) -> Option<Vec<u32>> {
    let mut inv = vec![0u32; dim * dim];
    for i in 0..dim {
        inv[i * dim + i] = 1;
    }
    for col in 0..dim {
        let pivot = (col..dim).find(|&r| m[r * dim + col] != 0)?;
        if pivot != col {
            for j in 0..dim {
                m.swap(col * dim + j, pivot * dim + j);
                inv.swap(col * dim + j, pivot * dim + j);
            }
        }
        let f = pinv(m[col * dim + col], p);
        for j in 0..dim {
            m[col * dim + j] = pmul(m[col * dim + j], f, p);
            inv[col * dim + j] = pmul(inv[col * dim + j], f, p);
        }
        for r in 0..dim {
            if r == col {
                continue;
            }
            let c = m[r * dim + col];
            if c == 0 {
                continue;
            }
            for j in 0..dim {
                m[r * dim + j] = psub(m[r * dim + j], pmul(c, m[col * dim + j], p), p);
                inv[r * dim + j] = psub(inv[r * dim + j], pmul(c, inv[col * dim + j], p), p);
            }
        }
    }
    Some(inv)
}

pub(crate) fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    if x.is_multiple_of(2) {
        return x == 2;
    }
    let mut d = 3u64;
    while d * d <= x {
        if x.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors in increasing order.
pub(crate) fn prime_factors(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= x {
        if x.is_multiple_of(d) {
            out.push(d);
            while x.is_multiple_of(d) {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

/// All divisors of x in increasing order.
pub(crate) fn divisors(x: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 1u32;
    while (d as u64) * (d as u64) <= x as u64 {
        if x.is_multiple_of(d) {
            out.push(d);
            if d != x / d {
                out.push(x / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}
