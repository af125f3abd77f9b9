//! Deliberately naive baselines: a weight distribution computed by sweeping
//! every scalar of F_{q^n}^*, and exhaustive coprime-pair counting for small
//! polynomial sets. These validate the optimized orbit machinery and the
//! counting identities the closed forms rest on, so they avoid the orbit
//! module's coset shortcuts entirely.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::orbit::WeightDistribution;
use crate::subspace::Subspace;

/// Cap on |F_{q^n}| for the full scalar sweep.
const NAIVE_CAP: u64 = 1 << 14;

/// Weight distribution by brute force: enumerate αS for every α in F_{q^n}^*,
/// dedup by canonical form, then histogram distances to S.
pub fn naive_weight_distribution(s: &Subspace) -> Result<WeightDistribution> {
    let field = s.field().clone();
    if field.size() > NAIVE_CAP {
        return Err(Error::SizeCapExceeded);
    }
    if s.is_zero() {
        return Err(Error::ZeroDimensional);
    }
    let mut members = BTreeSet::new();
    for j in 0..field.mult_order() {
        members.insert(s.scalar_mul(field.element_from_exp(j))?);
    }
    let k = s.dim();
    let mut counts = vec![0u64; k + 1];
    for member in &members {
        let d = s.distance(member)?;
        counts[d / 2] += 1;
    }
    Ok(WeightDistribution::new(counts))
}

// ---------------------------------------------------------------------------
// Coprime-pair counting over tiny fields. The field arithmetic here is an
// independent re-implementation: tables built from a brute-force irreducible,
// not the gfext tower.
// ---------------------------------------------------------------------------

/// Multiplication/addition tables for GF(q), q = p^e <= 16.
struct SmallGf {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
}

impl SmallGf {
    fn new(q: u64) -> Result<SmallGf> {
        let (p, e) = split_prime_power(q)
            .ok_or_else(|| Error::BadParams(format!("{q} is not a prime power")))?;
        let q = q as usize;
        let modulus = small_irreducible(p, e);
        let elems: Vec<Vec<u8>> = (0..q).map(|v| small_digits(v, p, e)).collect();
        let index = |digits: &[u8]| -> usize {
            digits
                .iter()
                .rev()
                .fold(0usize, |acc, &d| acc * p as usize + d as usize)
        };
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let sum: Vec<u8> = elems[a]
                    .iter()
                    .zip(&elems[b])
                    .map(|(&x, &y)| ((x as u64 + y as u64) % p) as u8)
                    .collect();
                add[a * q + b] = index(&sum) as u8;
                let prod = small_poly_mul_mod(&elems[a], &elems[b], &modulus, p);
                mul[a * q + b] = index(&prod) as u8;
            }
        }
        Ok(SmallGf { q, add, mul })
    }

    fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    fn neg(&self, a: u8) -> u8 {
        (0..self.q as u8)
            .find(|&b| self.add(a, b) == 0)
            .expect("additive inverse exists")
    }

    fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0);
        (1..self.q as u8)
            .find(|&b| self.mul(a, b) == 1)
            .expect("multiplicative inverse exists")
    }
}

fn split_prime_power(q: u64) -> Option<(u64, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn small_digits(mut v: usize, p: u64, e: u32) -> Vec<u8> {
    let mut out = vec![0u8; e as usize];
    for d in out.iter_mut() {
        *d = (v % p as usize) as u8;
        v /= p as usize;
    }
    out
}

fn small_poly_mul_mod(a: &[u8], b: &[u8], modulus: &[u8], p: u64) -> Vec<u8> {
    let e = a.len();
    let mut buf = vec![0u64; 2 * e];
    for i in 0..e {
        for j in 0..e {
            buf[i + j] += a[i] as u64 * b[j] as u64;
        }
    }
    for slot in buf.iter_mut() {
        *slot %= p;
    }
    for t in (e..2 * e).rev() {
        let c = buf[t];
        if c == 0 {
            continue;
        }
        buf[t] = 0;
        for j in 0..e {
            let sub = c * modulus[j] as u64 % p;
            buf[t - e + j] = (buf[t - e + j] + p - sub) % p;
        }
    }
    buf[..e].iter().map(|&x| x as u8).collect()
}

/// First monic irreducible of degree e over F_p, by trial division.
fn small_irreducible(p: u64, e: u32) -> Vec<u8> {
    let e = e as usize;
    if e == 1 {
        return vec![0]; // X: never used for reduction since products stay short
    }
    'cand: for low in 0..(p as usize).pow(e as u32) {
        let f = small_digits(low, p, e as u32);
        // trial divide by every monic polynomial of degree 1..=e/2
        for gdeg in 1..=e / 2 {
            for glow in 0..(p as usize).pow(gdeg as u32) {
                let mut g = small_digits(glow, p, gdeg as u32);
                g.push(1);
                if small_divides(&g, &f, e, p) {
                    continue 'cand;
                }
            }
        }
        return f;
    }
    unreachable!("irreducibles of every degree exist")
}

/// Does monic g divide X^e + f(X)?
fn small_divides(g: &[u8], f_low: &[u8], e: usize, p: u64) -> bool {
    let mut rem: Vec<u64> = f_low.iter().map(|&c| c as u64).collect();
    rem.resize(e + 1, 0);
    rem[e] = 1;
    let dg = g.len() - 1;
    for t in (dg..=e).rev() {
        let c = rem[t];
        if c == 0 {
            continue;
        }
        rem[t] = 0;
        for j in 0..dg {
            let sub = c * g[j] as u64 % p;
            rem[t - dg + j] = (rem[t - dg + j] + p - sub) % p;
        }
    }
    rem.iter().all(|&c| c == 0)
}

fn small_poly_deg(v: &[u8]) -> Option<usize> {
    v.iter().rposition(|&c| c != 0)
}

fn small_poly_rem(gf: &SmallGf, mut a: Vec<u8>, b: &[u8]) -> Vec<u8> {
    let db = small_poly_deg(b).expect("divisor nonzero");
    let lead_inv = gf.inv(b[db]);
    while let Some(da) = small_poly_deg(&a) {
        if da < db {
            break;
        }
        let factor = gf.mul(a[da], lead_inv);
        for j in 0..=db {
            if b[j] != 0 {
                let sub = gf.mul(factor, b[j]);
                a[da - db + j] = gf.add(a[da - db + j], gf.neg(sub));
            }
        }
    }
    a
}

fn small_gcd_is_unit(gf: &SmallGf, mut a: Vec<u8>, mut b: Vec<u8>) -> bool {
    while small_poly_deg(&b).is_some() {
        let r = small_poly_rem(gf, a, &b);
        a = b;
        b = r;
    }
    // b is zero here; gcd = a. Coprime iff a is a nonzero constant.
    small_poly_deg(&a) == Some(0)
}

/// Exhaustively count coprime pairs of polynomials over GF(q) with the exact
/// degrees and monicity constraints given. Degree-0 operands without the
/// monic constraint range over all q constants, zero included; that is the
/// set for which the coprime probability is exactly 1 - 1/q even when the
/// other degree is positive.
pub fn count_coprime_pairs(
    q: u64,
    deg_a: usize,
    deg_b: usize,
    monic_a: bool,
    monic_b: bool,
) -> Result<(u64, u64)> {
    if q > 16 {
        return Err(Error::TooLarge(format!(
            "q = {q} exceeds the small-field cap"
        )));
    }
    if deg_a == 0 && deg_b == 0 {
        return Err(Error::BadParams("degrees must not both be zero".into()));
    }
    let gf = SmallGf::new(q)?;
    let set_a = poly_set(q as usize, deg_a, monic_a);
    let set_b = poly_set(q as usize, deg_b, monic_b);
    let total = (set_a.len() as u64)
        .checked_mul(set_b.len() as u64)
        .filter(|&t| t <= 1 << 32)
        .ok_or_else(|| Error::TooLarge("pair count exceeds 2^32".into()))?;
    let mut coprime = 0u64;
    for a in &set_a {
        for b in &set_b {
            if small_gcd_is_unit(&gf, a.clone(), b.clone()) {
                coprime += 1;
            }
        }
    }
    Ok((coprime, total))
}

fn poly_set(q: usize, deg: usize, monic: bool) -> Vec<Vec<u8>> {
    if deg == 0 {
        return if monic {
            vec![vec![1]]
        } else {
            (0..q as u8).map(|c| vec![c]).collect()
        };
    }
    let leads: Vec<u8> = if monic {
        vec![1]
    } else {
        (1..q as u8).collect()
    };
    let mut out = Vec::with_capacity(leads.len() * q.pow(deg as u32));
    for &lead in &leads {
        for low in 0..q.pow(deg as u32) {
            let mut v = Vec::with_capacity(deg + 1);
            let mut rest = low;
            for _ in 0..deg {
                v.push((rest % q) as u8);
                rest /= q;
            }
            v.push(lead);
            out.push(v);
        }
    }
    out
}
