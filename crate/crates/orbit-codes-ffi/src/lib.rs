//! C ABI for the orbit-codes library.
//!
//! Handles are opaque pointers owned by Rust; every constructor has a
//! matching `_free`. Functions return `OcStatus` and write results through
//! out-pointers. The header `include/orbit_codes.h` is regenerated by
//! cbindgen on every build.

use std::sync::Arc;

use orbit_codes::{
    constructions, formulas, gfext::FieldSpec, isometry, orbit, Error, FieldElement, Subspace,
};

/// Status codes mirrored into the generated header.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OcStatus {
    Ok = 0,
    NullPointer = 1,
    NotPrime = 2,
    SizeCapExceeded = 3,
    BadParams = 4,
    DivisionByZero = 5,
    FieldMismatch = 6,
    DimensionMismatch = 7,
    BufferTooSmall = 8,
    TooLarge = 9,
}

fn status_of(e: &Error) -> OcStatus {
    match e {
        Error::NotPrime(_) => OcStatus::NotPrime,
        Error::SizeCapExceeded => OcStatus::SizeCapExceeded,
        Error::DivisionByZero => OcStatus::DivisionByZero,
        Error::FieldMismatch => OcStatus::FieldMismatch,
        Error::DimensionMismatch => OcStatus::DimensionMismatch,
        Error::TooLarge(_) => OcStatus::TooLarge,
        _ => OcStatus::BadParams,
    }
}

/// Opaque field handle.
pub struct OcField {
    inner: Arc<FieldSpec>,
}

/// Opaque subspace handle.
pub struct OcSubspace {
    inner: Subspace,
}

/// Weight distribution result; counts are written into a caller buffer.
#[repr(C)]
pub struct OcWeights {
    /// Dimension k; counts[0..=k] are valid.
    pub k: u32,
    pub stab_degree: u32,
    pub orbit_size: u64,
    /// r of the r-FWS verdict, or -1 when the pattern fails.
    pub rfws_r: i32,
}

/// Build F_(p^(e*n)); on success writes a handle the caller must free with
/// `oc_field_free`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn oc_field_build(
    p: u64,
    e: u32,
    n: u32,
    out: *mut *mut OcField,
) -> OcStatus {
    if out.is_null() {
        return OcStatus::NullPointer;
    }
    match FieldSpec::build(p, e, n) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(OcField { inner }));
            OcStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// # Safety
/// `field` must be null or a pointer returned by `oc_field_build`.
#[no_mangle]
pub unsafe extern "C" fn oc_field_free(field: *mut OcField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Number of elements of the field, or 0 on null.
///
/// # Safety
/// `field` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn oc_field_size(field: *const OcField) -> u64 {
    field.as_ref().map_or(0, |f| f.inner.size())
}

/// # Safety
/// `subspace` must be null or a pointer returned by a constructor here.
#[no_mangle]
pub unsafe extern "C" fn oc_subspace_free(subspace: *mut OcSubspace) {
    if !subspace.is_null() {
        drop(Box::from_raw(subspace));
    }
}

/// Dimension over F_q, or 0 on null.
///
/// # Safety
/// `subspace` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn oc_subspace_dim(subspace: *const OcSubspace) -> u32 {
    subspace.as_ref().map_or(0, |s| s.inner.dim() as u32)
}

unsafe fn build_into(out: *mut *mut OcSubspace, r: Result<Subspace, Error>) -> OcStatus {
    match r {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(OcSubspace { inner }));
            OcStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// b<1, λ, ..., λ^(k-1)>_{F_q}; b is given by its exponent, b_exp < 0 means
/// b = 1.
///
/// # Safety
/// `field` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn oc_polynomial_basis_code(
    field: *const OcField,
    t: u32,
    k: u32,
    b_exp: i64,
    out: *mut *mut OcSubspace,
) -> OcStatus {
    let (Some(f), false) = (field.as_ref(), out.is_null()) else {
        return OcStatus::NullPointer;
    };
    let b = (b_exp >= 0).then(|| f.inner.element_from_exp(b_exp as u64));
    build_into(out, constructions::polynomial_basis_code(&f.inner, t, k, b))
}

/// <1, λ, ..., λ^(l-1)>_{F_{q^2}} ⊕ λ^l F_q.
///
/// # Safety
/// `field` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn oc_mixed_q2_code(
    field: *const OcField,
    t: u32,
    l: u32,
    out: *mut *mut OcSubspace,
) -> OcStatus {
    let (Some(f), false) = (field.as_ref(), out.is_null()) else {
        return OcStatus::NullPointer;
    };
    build_into(out, constructions::mixed_q2_code(&f.inner, t, l))
}

/// S̄ ⊕ b<1, λ, ..., λ^(m-1)>_{F_q} with n = t(l+1); b_exp < 0 means b = 1.
///
/// # Safety
/// `field` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn oc_rfws_mixed_code(
    field: *const OcField,
    t: u32,
    l: u32,
    m: u32,
    b_exp: i64,
    out: *mut *mut OcSubspace,
) -> OcStatus {
    let (Some(f), false) = (field.as_ref(), out.is_null()) else {
        return OcStatus::NullPointer;
    };
    let b = (b_exp >= 0).then(|| f.inner.element_from_exp(b_exp as u64));
    build_into(out, constructions::rfws_mixed_code(&f.inner, t, l, m, b))
}

/// Subspace distance dim U + dim V - 2 dim(U ∩ V).
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn oc_subspace_distance(
    u: *const OcSubspace,
    v: *const OcSubspace,
    out: *mut u32,
) -> OcStatus {
    let (Some(u), Some(v), false) = (u.as_ref(), v.as_ref(), out.is_null()) else {
        return OcStatus::NullPointer;
    };
    match u.inner.distance(&v.inner) {
        Ok(d) => {
            *out = d as u32;
            OcStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Exhaustive weight distribution of Orb(S). `counts` must hold at least
/// dim(S)+1 entries; `counts_len` is the capacity on input.
///
/// # Safety
/// `subspace`, `counts` (with the stated capacity) and `meta` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oc_weight_distribution(
    subspace: *const OcSubspace,
    counts: *mut u64,
    counts_len: usize,
    meta: *mut OcWeights,
) -> OcStatus {
    let (Some(s), false, false) = (subspace.as_ref(), counts.is_null(), meta.is_null()) else {
        return OcStatus::NullPointer;
    };
    if counts_len < s.inner.dim() + 1 {
        return OcStatus::BufferTooSmall;
    }
    let code = match orbit::OrbitCode::new(s.inner.clone()) {
        Ok(c) => c,
        Err(e) => return status_of(&e),
    };
    let wd = code.weight_distribution();
    let out = std::slice::from_raw_parts_mut(counts, counts_len);
    out[..wd.counts().len()].copy_from_slice(wd.counts());
    *meta = OcWeights {
        k: wd.k() as u32,
        stab_degree: code.stab_degree(),
        orbit_size: code.orbit_size(),
        rfws_r: match orbit::rfws_index(&wd) {
            orbit::RfwsVerdict::Rfws(r) => r as i32,
            orbit::RfwsVerdict::NotRfws => -1,
        },
    };
    OcStatus::Ok
}

unsafe fn formula_into(
    counts: *mut u64,
    counts_len: usize,
    k_out: *mut u32,
    r: Result<orbit::WeightDistribution, Error>,
) -> OcStatus {
    if counts.is_null() || k_out.is_null() {
        return OcStatus::NullPointer;
    }
    match r {
        Ok(wd) => {
            if counts_len < wd.counts().len() {
                return OcStatus::BufferTooSmall;
            }
            let out = std::slice::from_raw_parts_mut(counts, counts_len);
            out[..wd.counts().len()].copy_from_slice(wd.counts());
            *k_out = wd.k() as u32;
            OcStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Closed-form distribution of the polynomial-basis family.
///
/// # Safety
/// `counts` (with the stated capacity) and `k_out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oc_family1_wd_formula(
    q: u64,
    n: u32,
    t: u32,
    k: u32,
    counts: *mut u64,
    counts_len: usize,
    k_out: *mut u32,
) -> OcStatus {
    formula_into(
        counts,
        counts_len,
        k_out,
        formulas::family1_wd_formula(q, n, t, k),
    )
}

/// Closed-form distribution of the mixed family.
///
/// # Safety
/// `counts` (with the stated capacity) and `k_out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oc_family2_wd_formula(
    q: u64,
    n: u32,
    l: u32,
    counts: *mut u64,
    counts_len: usize,
    k_out: *mut u32,
) -> OcStatus {
    formula_into(
        counts,
        counts_len,
        k_out,
        formulas::family2_wd_formula(q, n, l),
    )
}

/// Closed-form distribution of the r-FWS family.
///
/// # Safety
/// `counts` (with the stated capacity) and `k_out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn oc_rfws_wd_formula(
    q: u64,
    n: u32,
    t: u32,
    l: u32,
    m: u32,
    counts: *mut u64,
    counts_len: usize,
    k_out: *mut u32,
) -> OcStatus {
    formula_into(
        counts,
        counts_len,
        k_out,
        formulas::rfws_wd_formula(q, n, t, l, m),
    )
}

/// Frobenius-equivalence test between two subspaces of the same field.
/// Writes 1/0 to `equivalent`; when equivalent, `frob_out` and `alpha_exp`
/// receive a witness x ↦ α x^(q^i) with ψ(S1) = S2.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn oc_frobenius_equivalent(
    s1: *const OcSubspace,
    s2: *const OcSubspace,
    equivalent: *mut i32,
    frob_out: *mut u32,
    alpha_exp: *mut u64,
) -> OcStatus {
    let (Some(a), Some(b)) = (s1.as_ref(), s2.as_ref()) else {
        return OcStatus::NullPointer;
    };
    if equivalent.is_null() || frob_out.is_null() || alpha_exp.is_null() {
        return OcStatus::NullPointer;
    }
    match isometry::frobenius_equivalent(&a.inner, &b.inner) {
        Ok(Some(psi)) => {
            *equivalent = 1;
            *frob_out = psi.frob;
            *alpha_exp = psi.mult.exponent().unwrap_or(0);
            OcStatus::Ok
        }
        Ok(None) => {
            *equivalent = 0;
            OcStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// The scalar translate gamma^j * S as a new handle.
///
/// # Safety
/// `subspace` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn oc_scalar_translate(
    subspace: *const OcSubspace,
    gamma_exp: u64,
    out: *mut *mut OcSubspace,
) -> OcStatus {
    let (Some(s), false) = (subspace.as_ref(), out.is_null()) else {
        return OcStatus::NullPointer;
    };
    let field = s.inner.field().clone();
    let alpha: FieldElement = field.element_from_exp(gamma_exp);
    build_into(out, s.inner.scalar_mul(alpha))
}
