//! Arithmetic in the extension tower F_p ⊂ F_q ⊂ F_{q^n}, q = p^e.
//!
//! F_{q^n} is realized as `F_p[X]/(f)` for a deterministic monic irreducible f
//! of degree e·n: the lexicographically smallest one, comparing coefficient
//! sequences from the highest degree down. The multiplicative generator
//! `gamma` is likewise the smallest primitive element in that ordering, so
//! exponent labels reproduce across runs and across implementations.
//!
//! Elements are stored by exponent (`gamma^j`, plus a zero marker) and can be
//! viewed as F_p coefficient sequences. Fields of size up to 2^20 carry full
//! exponent/discrete-log tables; larger fields (up to the 2^24 cap) convert
//! on the fly, with a baby-step/giant-step table for the rare discrete logs.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fppoly::{
    divisors, is_prime, mat_invert, mat_mul_vec, pack, padd, pinv, poly_is_irreducible,
    poly_mul_mod, poly_pow_mod, prime_factors, psub, unpack,
};

/// Hard cap on |F_{q^n}|.
pub const SIZE_CAP: u64 = 1 << 24;
/// Fields up to this size carry full exponent/discrete-log tables.
const TABLE_CAP: u64 = 1 << 20;
/// F_q code arithmetic is table-backed up to this q.
const FQ_TABLE_CAP: u64 = 1 << 16;

const ZERO_SENTINEL: u32 = u32::MAX;

/// An element of F_{q^n}, identified by its discrete logarithm base `gamma`
/// (or a zero marker). Only meaningful relative to the `FieldSpec` it came
/// from.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(ZERO_SENTINEL);

    pub fn is_zero(self) -> bool {
        self.0 == ZERO_SENTINEL
    }

    /// The exponent j with self = gamma^j, or None for zero.
    pub fn exponent(self) -> Option<u64> {
        (!self.is_zero()).then_some(self.0 as u64)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "g^{}", self.0)
        }
    }
}

/// The ambient field F_{q^n} with its deterministic modulus, generator and
/// conversion tables. Immutable after construction; safe to share.
pub struct FieldSpec {
    p: u64,
    e: u32,
    n: u32,
    deg: u32,
    q: u64,
    size: u64,
    mult_order: u64,
    modulus: Vec<u32>,
    gamma_digits: Vec<u32>,
    // exponent <-> packed-coefficient conversion
    exp_table: Vec<u32>,
    log_table: Vec<u32>,
    bsgs_m: u64,
    bsgs_baby: HashMap<u32, u32>,
    bsgs_giant: Vec<u32>,
    // F_q coordinate machinery: B has columns gamma^i * g1^j (i < n, j < e),
    // column index i*e+j, stored column-major; b_inv row-major.
    b_cols: Vec<u32>,
    b_inv: Vec<u32>,
    frob_p: Vec<u32>,
    gamma_pow_n_fq: Vec<u32>,
    g1_exp: u64,
    fq_exp: Vec<u32>,
    fq_log: Vec<u32>,
    divisors_n: Vec<u32>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        // Construction is deterministic in (p, e, n).
        self.p == other.p && self.e == other.e && self.n == other.n
    }
}
impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FieldSpec(p={}, e={}, n={}, size={})",
            self.p, self.e, self.n, self.size
        )
    }
}

/// Deterministically construct F_{q^n} with q = p^e.
pub fn build_field(p: u64, e: u32, n: u32) -> Result<Arc<FieldSpec>> {
    FieldSpec::build(p, e, n)
}

impl FieldSpec {
    pub fn build(p: u64, e: u32, n: u32) -> Result<Arc<FieldSpec>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 || n == 0 {
            return Err(Error::BadParams("e and n must be positive".into()));
        }
        let deg = e.checked_mul(n).ok_or(Error::SizeCapExceeded)?;
        let mut size: u64 = 1;
        for _ in 0..deg {
            size = size.checked_mul(p).ok_or(Error::SizeCapExceeded)?;
            if size > SIZE_CAP {
                return Err(Error::SizeCapExceeded);
            }
        }
        let q = p.pow(e);
        let mult_order = size - 1;

        let modulus = smallest_irreducible(p, deg as usize);
        let gamma_digits = smallest_generator(p, &modulus, mult_order);

        let mut spec = FieldSpec {
            p,
            e,
            n,
            deg,
            q,
            size,
            mult_order,
            modulus,
            gamma_digits,
            exp_table: Vec::new(),
            log_table: Vec::new(),
            bsgs_m: 0,
            bsgs_baby: HashMap::new(),
            bsgs_giant: Vec::new(),
            b_cols: Vec::new(),
            b_inv: Vec::new(),
            frob_p: Vec::new(),
            gamma_pow_n_fq: Vec::new(),
            g1_exp: if q > 1 { mult_order / (q - 1) } else { 0 },
            fq_exp: Vec::new(),
            fq_log: Vec::new(),
            divisors_n: divisors(n),
        };

        if size <= TABLE_CAP {
            spec.build_tables();
        } else {
            spec.build_bsgs();
        }
        spec.build_fq_view();
        Ok(Arc::new(spec))
    }

    fn build_tables(&mut self) {
        let d = self.deg as usize;
        let mut exp = Vec::with_capacity(self.mult_order as usize);
        let mut log = vec![ZERO_SENTINEL; self.size as usize];
        let mut cur = vec![0u32; d];
        cur[0] = 1;
        for j in 0..self.mult_order {
            let packed = pack(&cur, self.p);
            exp.push(packed);
            log[packed as usize] = j as u32;
            cur = poly_mul_mod(&cur, &self.gamma_digits, &self.modulus, self.p);
        }
        debug_assert_eq!(
            pack(&cur, self.p),
            1,
            "gamma order must be exactly size - 1"
        );
        self.exp_table = exp;
        self.log_table = log;
    }

    fn build_bsgs(&mut self) {
        let m = (self.mult_order as f64).sqrt().ceil() as u64;
        let d = self.deg as usize;
        let mut baby = HashMap::with_capacity(m as usize);
        let mut cur = vec![0u32; d];
        cur[0] = 1;
        for s in 0..m {
            baby.entry(pack(&cur, self.p)).or_insert(s as u32);
            cur = poly_mul_mod(&cur, &self.gamma_digits, &self.modulus, self.p);
        }
        let giant = poly_pow_mod(
            &self.gamma_digits,
            self.mult_order - m,
            &self.modulus,
            self.p,
        );
        self.bsgs_m = m;
        self.bsgs_baby = baby;
        self.bsgs_giant = giant;
    }

    fn build_fq_view(&mut self) {
        let d = self.deg as usize;
        let n = self.n as usize;
        let e = self.e as usize;
        let g1 = poly_pow_mod(&self.gamma_digits, self.g1_exp, &self.modulus, self.p);

        // B: column i*e+j holds the F_p coordinates of gamma^i * g1^j.
        let mut b_cols = vec![0u32; d * d];
        let mut gpow = vec![0u32; d];
        gpow[0] = 1;
        for i in 0..n {
            let mut cell = gpow.clone();
            for j in 0..e {
                let col = i * e + j;
                for r in 0..d {
                    b_cols[col * d + r] = cell[r];
                }
                if j + 1 < e {
                    cell = poly_mul_mod(&cell, &g1, &self.modulus, self.p);
                }
            }
            if i + 1 < n {
                gpow = poly_mul_mod(&gpow, &self.gamma_digits, &self.modulus, self.p);
            }
        }
        // Row-major copy for inversion.
        let mut b_rows = vec![0u32; d * d];
        for c in 0..d {
            for r in 0..d {
                b_rows[r * d + c] = b_cols[c * d + r];
            }
        }
        self.b_inv = mat_invert(b_rows, d, self.p)
            .expect("power basis of gamma over F_q must be linearly independent");
        self.b_cols = b_cols;

        // Frobenius x -> x^p as an F_p matrix: column i = digits of X^(i*p).
        let xp = {
            let mut x = vec![0u32; d];
            if d >= 2 {
                x[1] = 1;
            } else {
                // degree-1 field: X reduces to a constant
                x[0] = psub(0, self.modulus[0], self.p);
            }
            poly_pow_mod(&x, self.p, &self.modulus, self.p)
        };
        let mut frob = vec![0u32; d * d];
        let mut cur = vec![0u32; d];
        cur[0] = 1;
        for i in 0..d {
            for r in 0..d {
                frob[r * d + i] = cur[r];
            }
            if i + 1 < d {
                cur = poly_mul_mod(&cur, &xp, &self.modulus, self.p);
            }
        }
        self.frob_p = frob;

        // F_q code tables (skipped for e = 1, where codes are plain residues).
        if e > 1 && self.q <= FQ_TABLE_CAP {
            let span = (self.q - 1) as usize;
            let mut fq_exp = Vec::with_capacity(span);
            let mut fq_log = vec![ZERO_SENTINEL; self.q as usize];
            let mut cur = vec![0u32; d];
            cur[0] = 1;
            for j in 0..span {
                let code = self.fp_vec_to_codes(&cur)[0];
                fq_exp.push(code);
                fq_log[code as usize] = j as u32;
                cur = poly_mul_mod(&cur, &g1, &self.modulus, self.p);
            }
            self.fq_exp = fq_exp;
            self.fq_log = fq_log;
        }

        // F_q coordinates of gamma^n, the column the shift map wraps on.
        let gn = poly_pow_mod(
            &self.gamma_digits,
            self.n as u64 % self.mult_order.max(1),
            &self.modulus,
            self.p,
        );
        self.gamma_pow_n_fq = self.fp_vec_to_codes(&gn);
    }

    // --- accessors ---

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn e(&self) -> u32 {
        self.e
    }
    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn size(&self) -> u64 {
        self.size
    }
    /// Order of the multiplicative group, q^n - 1.
    pub fn mult_order(&self) -> u64 {
        self.mult_order
    }
    /// Degree of the extension over F_p, e*n.
    pub fn extension_degree(&self) -> u32 {
        self.deg
    }
    /// Modulus coefficients, constant term first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    pub fn divisors_of_n(&self) -> &[u32] {
        &self.divisors_n
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }
    pub fn one(&self) -> FieldElement {
        FieldElement(0)
    }
    pub fn gamma(&self) -> FieldElement {
        FieldElement((1 % self.mult_order.max(1)) as u32)
    }

    /// gamma^j for any j (reduced mod q^n - 1).
    pub fn element_from_exp(&self, j: u64) -> FieldElement {
        FieldElement((j % self.mult_order.max(1)) as u32)
    }

    /// All elements: zero first, then gamma^0 .. gamma^(q^n-2).
    pub fn all_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        std::iter::once(FieldElement::ZERO)
            .chain((0..self.mult_order).map(|j| FieldElement(j as u32)))
    }

    // --- arithmetic ---

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let mut va = self.exp_digits(a.0);
        let vb = self.exp_digits(b.0);
        for (x, y) in va.iter_mut().zip(vb.iter()) {
            *x = padd(*x, *y, self.p);
        }
        self.digits_to_element(&va)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if a.is_zero() || self.p == 2 {
            return a;
        }
        // -1 = gamma^((q^n-1)/2) for odd p
        let half = self.mult_order / 2;
        FieldElement(((a.0 as u64 + half) % self.mult_order) as u32)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        FieldElement(((a.0 as u64 + b.0 as u64) % self.mult_order) as u32)
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldElement(
            ((self.mult_order - a.0 as u64) % self.mult_order) as u32,
        ))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^k for integer k; negative k requires a nonzero base.
    pub fn pow(&self, a: FieldElement, k: i64) -> Result<FieldElement> {
        if a.is_zero() {
            return match k.cmp(&0) {
                std::cmp::Ordering::Greater => Ok(FieldElement::ZERO),
                std::cmp::Ordering::Equal => Ok(self.one()),
                std::cmp::Ordering::Less => Err(Error::DivisionByZero),
            };
        }
        let n = self.mult_order as i128;
        let j = (a.0 as i128 * (k as i128).rem_euclid(n)).rem_euclid(n);
        Ok(FieldElement(j as u32))
    }

    /// x^(q^i), the Galois action over F_q; i is taken mod n.
    pub fn frobenius(&self, x: FieldElement, i: i64) -> FieldElement {
        if x.is_zero() {
            return x;
        }
        let i = i.rem_euclid(self.n as i64) as u32;
        let factor = {
            let mut f: u64 = 1;
            for _ in 0..i {
                f = f * (self.q % self.mult_order.max(1)) % self.mult_order.max(1);
            }
            f
        };
        FieldElement(((x.0 as u64 * factor) % self.mult_order.max(1)) as u32)
    }

    // --- subfields ---

    /// Generator g_m = gamma^((q^n-1)/(q^m-1)) of F_{q^m}^*, for m | n.
    pub fn subfield_generator(&self, m: u32) -> Result<FieldElement> {
        self.check_divisor(m)?;
        let qm = self.q.pow(m) - 1;
        Ok(FieldElement(
            (self.mult_order / qm % self.mult_order.max(1)) as u32,
        ))
    }

    /// Whether x lies in the subfield F_{q^m}, for m | n.
    pub fn is_in_subfield(&self, x: FieldElement, m: u32) -> Result<bool> {
        self.check_divisor(m)?;
        if x.is_zero() {
            return Ok(true);
        }
        let step = self.mult_order / (self.q.pow(m) - 1);
        Ok((x.0 as u64).is_multiple_of(step))
    }

    /// [F_q(x) : F_q], the smallest m | n with x in F_{q^m}.
    pub fn degree_over_fq(&self, x: FieldElement) -> u32 {
        for &m in &self.divisors_n {
            if self.is_in_subfield(x, m).expect("divisor of n") {
                return m.max(1);
            }
        }
        self.n
    }

    fn check_divisor(&self, m: u32) -> Result<()> {
        if m == 0 || !self.n.is_multiple_of(m) {
            return Err(Error::NotADivisor { m, n: self.n });
        }
        Ok(())
    }

    // --- F_q coordinate view ---

    /// Coordinates of x in the basis {1, gamma, ..., gamma^(n-1)} over F_q,
    /// each entry an integer code in 0..q.
    pub fn fq_coordinates(&self, x: FieldElement) -> Vec<u32> {
        if x.is_zero() {
            return vec![0; self.n as usize];
        }
        let v = self.exp_digits(x.0);
        self.fp_vec_to_codes(&v)
    }

    /// Inverse of `fq_coordinates`.
    pub fn element_from_fq_coords(&self, codes: &[u32]) -> FieldElement {
        debug_assert_eq!(codes.len(), self.n as usize);
        let v = self.codes_to_fp_vec(codes);
        self.digits_to_element(&v)
    }

    /// F_p coefficient sequence of x (ascending), the serialization view.
    pub fn element_digits(&self, x: FieldElement) -> Vec<u32> {
        if x.is_zero() {
            return vec![0; self.deg as usize];
        }
        self.exp_digits(x.0)
    }

    /// Element with the given F_p coefficient sequence.
    pub fn element_from_digits(&self, digits: &[u32]) -> Result<FieldElement> {
        if digits.len() != self.deg as usize || digits.iter().any(|&d| d as u64 >= self.p) {
            return Err(Error::BadParams("bad coefficient sequence".into()));
        }
        Ok(self.digits_to_element(digits))
    }

    // --- F_q code arithmetic (entries of subspace matrices) ---

    #[inline]
    pub(crate) fn fq_add(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            let s = a as u64 + b as u64;
            (if s >= self.p { s - self.p } else { s }) as u32
        } else {
            self.fq_add_digits(a, b)
        }
    }

    fn fq_add_digits(&self, a: u32, b: u32) -> u32 {
        let mut out: u64 = 0;
        let mut w: u64 = 1;
        let (mut a, mut b) = (a as u64, b as u64);
        for _ in 0..self.e {
            let s = (a % self.p + b % self.p) % self.p;
            out += s * w;
            w *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out as u32
    }

    #[inline]
    pub(crate) fn fq_neg(&self, a: u32) -> u32 {
        if self.e == 1 {
            (if a == 0 { 0 } else { self.p - a as u64 }) as u32
        } else {
            let mut out: u64 = 0;
            let mut w: u64 = 1;
            let mut a = a as u64;
            for _ in 0..self.e {
                let d = a % self.p;
                out += (if d == 0 { 0 } else { self.p - d }) * w;
                w *= self.p;
                a /= self.p;
            }
            out as u32
        }
    }

    #[inline]
    pub(crate) fn fq_sub(&self, a: u32, b: u32) -> u32 {
        self.fq_add(a, self.fq_neg(b))
    }

    #[inline]
    pub(crate) fn fq_mul(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            ((a as u64 * b as u64) % self.p) as u32
        } else if a == 0 || b == 0 {
            0
        } else if !self.fq_exp.is_empty() {
            let la = self.fq_log[a as usize] as u64;
            let lb = self.fq_log[b as usize] as u64;
            self.fq_exp[((la + lb) % (self.q - 1)) as usize]
        } else {
            self.fq_mul_cold(a, b)
        }
    }

    #[inline]
    pub(crate) fn fq_inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        if self.e == 1 {
            pinv(a, self.p)
        } else if !self.fq_exp.is_empty() {
            let la = self.fq_log[a as usize] as u64;
            self.fq_exp[((self.q - 1 - la) % (self.q - 1)) as usize]
        } else {
            let x = self.fq_code_to_element(a);
            let inv = self.inv(x).expect("nonzero code");
            self.fq_coordinates(inv)[0]
        }
    }

    // Only reachable for n = 1 fields whose q exceeds the code-table cap.
    fn fq_mul_cold(&self, a: u32, b: u32) -> u32 {
        let x = self.fq_code_to_element(a);
        let y = self.fq_code_to_element(b);
        self.fq_coordinates(self.mul(x, y))[0]
    }

    fn fq_code_to_element(&self, code: u32) -> FieldElement {
        let mut coords = vec![0u32; self.n as usize];
        coords[0] = code;
        self.element_from_fq_coords(&coords)
    }

    /// F_q coordinates of gamma^n (what gamma^(n-1) shifts onto).
    pub(crate) fn gamma_pow_n_fq(&self) -> &[u32] {
        &self.gamma_pow_n_fq
    }

    // --- coefficient-space plumbing (crate-internal) ---

    /// F_p coordinate vector of an F_q-coordinate row.
    pub(crate) fn codes_to_fp_vec(&self, codes: &[u32]) -> Vec<u32> {
        let d = self.deg as usize;
        let e = self.e as usize;
        let mut v = vec![0u32; d];
        for (i, &code) in codes.iter().enumerate() {
            let mut c = code as u64;
            for j in 0..e {
                let dg = (c % self.p) as u32;
                c /= self.p;
                if dg == 0 {
                    continue;
                }
                let col = &self.b_cols[(i * e + j) * d..(i * e + j + 1) * d];
                for r in 0..d {
                    if col[r] != 0 {
                        v[r] = ((v[r] as u64 + dg as u64 * col[r] as u64) % self.p) as u32;
                    }
                }
            }
        }
        v
    }

    /// F_q-coordinate row of an F_p coordinate vector.
    pub(crate) fn fp_vec_to_codes(&self, v: &[u32]) -> Vec<u32> {
        let d = self.deg as usize;
        let e = self.e as usize;
        let w = mat_mul_vec(&self.b_inv, v, d, self.p);
        let mut codes = vec![0u32; self.n as usize];
        for i in 0..self.n as usize {
            let mut c: u64 = 0;
            for j in (0..e).rev() {
                c = c * self.p + w[i * e + j] as u64;
            }
            codes[i] = c as u32;
        }
        codes
    }

    /// Product of two F_p coordinate vectors in the quotient ring.
    pub(crate) fn fp_mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        poly_mul_mod(a, b, &self.modulus, self.p)
    }

    /// F_p coordinates of gamma^j.
    pub(crate) fn exp_digits(&self, j: u32) -> Vec<u32> {
        if !self.exp_table.is_empty() {
            unpack(self.exp_table[j as usize], self.p, self.deg as usize)
        } else {
            poly_pow_mod(&self.gamma_digits, j as u64, &self.modulus, self.p)
        }
    }

    /// Element with the given F_p coordinates (discrete log when untabled).
    pub(crate) fn digits_to_element(&self, v: &[u32]) -> FieldElement {
        if v.iter().all(|&c| c == 0) {
            return FieldElement::ZERO;
        }
        if !self.log_table.is_empty() {
            return FieldElement(self.log_table[pack(v, self.p) as usize]);
        }
        // baby-step giant-step
        let mut cur = v.to_vec();
        let mut g: u64 = 0;
        loop {
            if let Some(&s) = self.bsgs_baby.get(&pack(&cur, self.p)) {
                return FieldElement(((g * self.bsgs_m + s as u64) % self.mult_order) as u32);
            }
            cur = poly_mul_mod(&cur, &self.bsgs_giant, &self.modulus, self.p);
            g += 1;
            debug_assert!(g <= self.bsgs_m + 1, "discrete log must terminate");
        }
    }

    /// Apply x -> x^(p^times) to an F_p coordinate vector.
    pub(crate) fn frob_fp_vec(&self, v: &[u32], times: u32) -> Vec<u32> {
        let d = self.deg as usize;
        let mut out = v.to_vec();
        for _ in 0..(times % self.deg.max(1)) {
            out = mat_mul_vec(&self.frob_p, &out, d, self.p);
        }
        out
    }
}

/// Lexicographically smallest monic irreducible of the given degree,
/// comparing coefficient sequences high-degree-first.
fn smallest_irreducible(p: u64, deg: usize) -> Vec<u32> {
    let bound = p.checked_pow(deg as u32).expect("within cap");
    for low in 0..bound {
        let mut f = unpack(low as u32, p, deg);
        f.push(1);
        if poly_is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

/// Smallest primitive element in the packed-coefficient order.
fn smallest_generator(p: u64, modulus: &[u32], mult_order: u64) -> Vec<u32> {
    let deg = modulus.len() - 1;
    let primes = prime_factors(mult_order);
    let one = {
        let mut v = vec![0u32; deg];
        v[0] = 1;
        v
    };
    for v in 1..=(mult_order) {
        let cand = unpack(v as u32, p, deg);
        let full_order = primes
            .iter()
            .all(|&l| poly_pow_mod(&cand, mult_order / l, modulus, p) != one);
        if full_order {
            return cand;
        }
    }
    unreachable!("the multiplicative group of a finite field is cyclic")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2_10() -> Arc<FieldSpec> {
        FieldSpec::build(2, 1, 10).unwrap()
    }

    #[test]
    fn prime_field_is_degenerate() {
        let f = FieldSpec::build(2, 1, 1).unwrap();
        assert_eq!(f.size(), 2);
        assert_eq!(f.gamma(), f.one());
        assert_eq!(f.modulus(), &[0, 1]); // X itself
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FieldSpec::build(4, 1, 3).unwrap_err(), Error::NotPrime(4));
        assert_eq!(
            FieldSpec::build(2, 1, 25).unwrap_err(),
            Error::SizeCapExceeded
        );
        assert!(FieldSpec::build(2, 0, 3).is_err());
    }

    #[test]
    fn gamma_of_f2_10_has_order_1023() {
        let f = f2_10();
        assert_eq!(f.size(), 1024);
        let g = f.gamma();
        assert_eq!(f.pow(g, 1023).unwrap(), f.one());
        for l in [3u64, 11, 31] {
            assert_ne!(f.pow(g, (1023 / l) as i64).unwrap(), f.one(), "1023/{l}");
        }
    }

    #[test]
    fn gamma_of_f3_10_has_order_59048() {
        let f = FieldSpec::build(3, 1, 10).unwrap();
        assert_eq!(f.size(), 59049);
        let g = f.gamma();
        assert_eq!(f.pow(g, 59048).unwrap(), f.one());
        for l in prime_factors(59048) {
            assert_ne!(f.pow(g, (59048 / l) as i64).unwrap(), f.one());
        }
    }

    #[test]
    fn modulus_is_the_smallest_irreducible() {
        // Naive oracle: every smaller candidate factors; the chosen one does not.
        for (p, e, n) in [(2u64, 1u32, 10u32), (3, 1, 4), (2, 2, 3)] {
            let f = FieldSpec::build(p, e, n).unwrap();
            let deg = (e * n) as usize;
            let low = pack(&f.modulus()[..deg], p);
            for v in 0..low {
                let mut cand = unpack(v, p, deg);
                cand.push(1);
                assert!(!naive_irreducible(&cand, p), "candidate {v} below modulus");
            }
            let full = f.modulus().to_vec();
            assert!(naive_irreducible(&full, p));
        }
    }

    #[test]
    fn gamma_is_the_smallest_primitive_element() {
        let f = f2_10();
        let gamma_packed = pack(&f.exp_digits(1), 2);
        for v in 1..gamma_packed {
            let cand = unpack(v, 2, 10);
            // naive multiplicative order
            let mut cur = cand.clone();
            let one = f.exp_digits(0);
            let mut order = 1u64;
            while cur != one {
                cur = poly_mul_mod(&cur, &cand, f.modulus(), 2);
                order += 1;
            }
            assert!(
                order < 1023,
                "element {v} below gamma must not be primitive"
            );
        }
    }

    fn naive_irreducible(f: &[u32], p: u64) -> bool {
        let d = f.len() - 1;
        if d == 1 {
            return true;
        }
        for gdeg in 1..=d / 2 {
            for low in 0..(p as u32).pow(gdeg as u32) {
                let mut g = unpack(low, p, gdeg);
                g.push(1);
                let r = crate::fppoly::poly_rem(f.to_vec(), &g, p);
                if r.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn exponent_arithmetic_wraps() {
        let f = f2_10();
        let a = f.element_from_exp(500);
        let b = f.element_from_exp(600);
        assert_eq!(f.mul(a, b), f.element_from_exp(77));
    }

    #[test]
    fn additive_identities() {
        let f = f2_10();
        for j in [0u64, 1, 57, 300, 1022] {
            let a = f.element_from_exp(j);
            assert_eq!(f.add(a, f.zero()), a);
            assert_eq!(f.mul(a, f.one()), a);
            assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            assert_eq!(f.add(a, f.neg(a)), f.zero());
        }
        assert_eq!(f.inv(f.zero()).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn addition_matches_in_prime_power_base() {
        // q = 4 tower: e = 2, n = 3
        let f = FieldSpec::build(2, 2, 3).unwrap();
        for a in 0..f.mult_order() {
            let x = f.element_from_exp(a);
            assert_eq!(f.add(x, f.neg(x)), f.zero());
            assert_eq!(f.sub(x, x), f.zero());
        }
    }

    #[test]
    fn frobenius_examples() {
        let f = f2_10();
        let g = f.gamma();
        assert_eq!(f.frobenius(g, 1), f.pow(g, 2).unwrap());
        for j in [0u64, 5, 123, 1000] {
            let x = f.element_from_exp(j);
            assert_eq!(f.frobenius(x, 0), x);
            assert_eq!(f.frobenius(x, 10), x);
            assert_eq!(f.frobenius(f.frobenius(x, 3), 4), f.frobenius(x, 7));
        }
    }

    #[test]
    fn frobenius_is_a_ring_map() {
        let f = FieldSpec::build(3, 1, 6).unwrap();
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let x = f.element_from_exp(next() % f.mult_order());
            let y = f.element_from_exp(next() % f.mult_order());
            let i = (next() % 6) as i64;
            assert_eq!(
                f.frobenius(f.add(x, y), i),
                f.add(f.frobenius(x, i), f.frobenius(y, i))
            );
            assert_eq!(
                f.frobenius(f.mul(x, y), i),
                f.mul(f.frobenius(x, i), f.frobenius(y, i))
            );
        }
    }

    #[test]
    fn subfield_generators_have_the_right_orders() {
        let f = f2_10();
        assert_eq!(f.subfield_generator(10).unwrap(), f.gamma());
        let g2 = f.subfield_generator(2).unwrap();
        assert_eq!(g2, f.element_from_exp(341));
        assert_eq!(f.pow(g2, 3).unwrap(), f.one());
        assert_ne!(g2, f.one());
        // order exactly 31: 31 is prime and g5 != 1
        let g5 = f.subfield_generator(5).unwrap();
        assert_eq!(f.pow(g5, 31).unwrap(), f.one());
        assert_ne!(g5, f.one());
        assert!(f.subfield_generator(3).is_err());
    }

    #[test]
    fn subfield_membership() {
        let f = f2_10();
        assert!(f.is_in_subfield(f.zero(), 1).unwrap());
        assert!(f.is_in_subfield(f.one(), 1).unwrap());
        let g2 = f.subfield_generator(2).unwrap();
        assert!(f.is_in_subfield(g2, 2).unwrap());
        assert!(!f.is_in_subfield(g2, 1).unwrap());
        assert!(!f.is_in_subfield(f.gamma(), 5).unwrap());
        assert_eq!(f.degree_over_fq(g2), 2);
        assert_eq!(f.degree_over_fq(f.gamma()), 10);
    }

    #[test]
    fn subfield_sizes_are_exact() {
        let f = f2_10();
        for &m in f.divisors_of_n() {
            let count = f
                .all_elements()
                .filter(|&x| f.is_in_subfield(x, m).unwrap())
                .count() as u64;
            assert_eq!(count, 2u64.pow(m), "|F_(2^{m})|");
        }
    }

    #[test]
    fn subfield_membership_respects_gcd() {
        let f = FieldSpec::build(2, 1, 12).unwrap();
        for x in f.all_elements() {
            let in4 = f.is_in_subfield(x, 4).unwrap();
            let in6 = f.is_in_subfield(x, 6).unwrap();
            if in4 && in6 {
                assert!(f.is_in_subfield(x, 2).unwrap());
            }
        }
    }

    #[test]
    fn coordinates_round_trip() {
        let f = f2_10();
        assert_eq!(f.fq_coordinates(f.zero()), vec![0; 10]);
        for j in 0..10u64 {
            let mut expect = vec![0u32; 10];
            expect[j as usize] = 1;
            assert_eq!(f.fq_coordinates(f.element_from_exp(j)), expect);
        }
        let mut state = 12345u64;
        for _ in 0..1000 {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let x = f.element_from_exp(state % f.mult_order());
            assert_eq!(f.element_from_fq_coords(&f.fq_coordinates(x)), x);
        }
    }

    #[test]
    fn coordinates_round_trip_in_a_tower() {
        let f = FieldSpec::build(2, 2, 3).unwrap(); // F_4 ⊂ F_64
        for x in f.all_elements() {
            let coords = f.fq_coordinates(x);
            assert_eq!(coords.len(), 3);
            assert!(coords.iter().all(|&c| c < 4));
            assert_eq!(f.element_from_fq_coords(&coords), x);
        }
    }

    #[test]
    fn coordinates_are_fq_linear() {
        let f = FieldSpec::build(3, 1, 4).unwrap();
        let g1 = f.subfield_generator(1).unwrap();
        for a_exp in 0..2u64 {
            let a = f.pow(g1, a_exp as i64).unwrap();
            for j in (0..f.mult_order()).step_by(7) {
                let x = f.element_from_exp(j);
                let ax = f.mul(a, x);
                let ca = f.fq_coordinates(a);
                let code_a = ca[0];
                let cx = f.fq_coordinates(x);
                let expect: Vec<u32> = cx.iter().map(|&c| f.fq_mul(code_a, c)).collect();
                assert_eq!(f.fq_coordinates(ax), expect);
            }
        }
    }

    #[test]
    fn untabled_field_arithmetic_round_trips() {
        // 5^10 is above the table threshold: exercises powmod + BSGS paths.
        let f = FieldSpec::build(5, 1, 10).unwrap();
        assert_eq!(f.size(), 9_765_625);
        let x = f.element_from_exp(123_456);
        let y = f.element_from_exp(7_654_321 % f.mult_order());
        let s = f.add(x, y);
        assert_eq!(f.sub(s, y), x);
        assert_eq!(f.sub(s, x), y);
        let coords = f.fq_coordinates(x);
        assert_eq!(f.element_from_fq_coords(&coords), x);
    }

    #[test]
    fn negative_powers_invert() {
        let f = f2_10();
        let a = f.element_from_exp(700);
        assert_eq!(f.pow(a, -1).unwrap(), f.inv(a).unwrap());
        assert_eq!(f.mul(f.pow(a, -3).unwrap(), f.pow(a, 3).unwrap()), f.one());
        assert_eq!(f.pow(f.zero(), 0).unwrap(), f.one());
        assert_eq!(f.pow(f.zero(), 5).unwrap(), f.zero());
        assert_eq!(f.pow(f.zero(), -1).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn element_digit_views_agree() {
        let f = f2_10();
        let x = f.element_from_exp(700);
        let d = f.element_digits(x);
        assert_eq!(f.element_from_digits(&d).unwrap(), x);
    }
}
