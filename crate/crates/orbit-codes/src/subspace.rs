//! F_q-linear subspaces of F_{q^n} in canonical reduced row-echelon form.
//!
//! The canonical form makes set equality of subspaces equal to byte equality
//! of their basis matrices, which is what orbit deduplication and isometry
//! tests key on. Entries are F_q codes (integers in 0..q) in the fixed
//! F_p-tower encoding of the field module.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gfext::{FieldElement, FieldSpec};

/// An F_q-subspace of F_{q^n}; rows of `data` are the canonical basis in the
/// coordinate system {1, gamma, ..., gamma^(n-1)}.
#[derive(Clone)]
pub struct Subspace {
    field: Arc<FieldSpec>,
    k: usize,
    n: usize,
    data: Vec<u32>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.k == other.k && self.data == other.data
    }
}
impl Eq for Subspace {}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (
            self.field.p(),
            self.field.e(),
            self.field.n(),
            self.k,
            &self.data,
        )
            .cmp(&(
                other.field.p(),
                other.field.e(),
                other.field.n(),
                other.k,
                &other.data,
            ))
    }
}

impl std::hash::Hash for Subspace {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.k.hash(state);
        self.data.hash(state);
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Subspace(dim {} of F_q^{})", self.k, self.n)?;
        for r in 0..self.k {
            writeln!(f, "  {:?}", &self.data[r * self.n..(r + 1) * self.n])?;
        }
        Ok(())
    }
}

impl Subspace {
    /// The zero subspace.
    pub fn zero(field: &Arc<FieldSpec>) -> Subspace {
        Subspace {
            field: field.clone(),
            k: 0,
            n: field.n() as usize,
            data: Vec::new(),
        }
    }

    /// The whole field as a subspace of itself.
    pub fn full(field: &Arc<FieldSpec>) -> Subspace {
        let n = field.n() as usize;
        let mut data = vec![0u32; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Subspace {
            field: field.clone(),
            k: n,
            n,
            data,
        }
    }

    /// F_q-span of the given elements, in canonical form.
    pub fn span_fq(field: &Arc<FieldSpec>, elements: &[FieldElement]) -> Subspace {
        let n = field.n() as usize;
        let mut data = Vec::with_capacity(elements.len() * n);
        for &x in elements {
            data.extend(field.fq_coordinates(x));
        }
        Self::from_rows(field, data, elements.len())
    }

    /// F_{q^m}-span of the given elements (m | n), returned as an F_q-subspace:
    /// the F_q-span of {g_m^j * x : 0 <= j < m}.
    pub fn span_subfield(
        field: &Arc<FieldSpec>,
        elements: &[FieldElement],
        m: u32,
    ) -> Result<Subspace> {
        let gm = field.subfield_generator(m)?;
        let n = field.n() as usize;
        let mut data = Vec::with_capacity(elements.len() * m as usize * n);
        let mut rows = 0;
        for &x in elements {
            let mut cur = x;
            for _ in 0..m {
                data.extend(field.fq_coordinates(cur));
                rows += 1;
                cur = field.mul(cur, gm);
            }
        }
        let s = Self::from_rows(field, data, rows);
        debug_assert!(
            s.k % m as usize == 0,
            "an F_{{q^m}}-span has F_q-dimension divisible by m"
        );
        Ok(s)
    }

    /// Canonicalize a stack of coordinate rows into a subspace.
    pub(crate) fn from_rows(field: &Arc<FieldSpec>, mut data: Vec<u32>, rows: usize) -> Subspace {
        let n = field.n() as usize;
        let rank = rref_in_place(field, &mut data, rows, n);
        Subspace {
            field: field.clone(),
            k: rank,
            n,
            data,
        }
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.k == 0
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    /// The canonical basis matrix, row-major, k x n.
    pub fn rows(&self) -> &[u32] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Basis rows decoded back to field elements.
    pub fn basis_elements(&self) -> Vec<FieldElement> {
        (0..self.k)
            .map(|i| self.field.element_from_fq_coords(self.row(i)))
            .collect()
    }

    /// Pivot column of each canonical basis row.
    pub(crate) fn pivots(&self) -> Vec<usize> {
        (0..self.k)
            .map(|r| {
                self.row(r)
                    .iter()
                    .position(|&c| c != 0)
                    .expect("canonical rows are nonzero")
            })
            .collect()
    }

    /// Membership test by reduction against the canonical basis.
    pub fn contains(&self, x: FieldElement) -> bool {
        let mut v = self.field.fq_coordinates(x);
        for r in 0..self.k {
            let row = self.row(r);
            let pc = row.iter().position(|&c| c != 0).unwrap();
            let f = v[pc];
            if f != 0 {
                for j in pc..self.n {
                    v[j] = self.field.fq_sub(v[j], self.field.fq_mul(f, row[j]));
                }
            }
        }
        v.iter().all(|&c| c == 0)
    }

    fn check_same_field(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// Canonical intersection, computed Zassenhaus-style on [S | S; T | 0].
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_field(other)?;
        let n = self.n;
        let rows = self.k + other.k;
        let mut data = vec![0u32; rows * 2 * n];
        for r in 0..self.k {
            let src = self.row(r);
            data[r * 2 * n..r * 2 * n + n].copy_from_slice(src);
            data[r * 2 * n + n..(r + 1) * 2 * n].copy_from_slice(src);
        }
        for r in 0..other.k {
            let dst = (self.k + r) * 2 * n;
            data[dst..dst + n].copy_from_slice(other.row(r));
        }
        rref_in_place(&self.field, &mut data, rows, 2 * n);
        let mut out = Vec::new();
        let mut out_rows = 0;
        for r in 0..rows.min(data.len() / (2 * n)) {
            let row = &data[r * 2 * n..(r + 1) * 2 * n];
            if row[..n].iter().all(|&c| c == 0) {
                out.extend_from_slice(&row[n..]);
                out_rows += 1;
            }
        }
        Ok(Subspace::from_rows(&self.field, out, out_rows))
    }

    /// Canonical sum S + T, with a direct-sum flag (true iff S ∩ T = 0).
    pub fn sum(&self, other: &Subspace) -> Result<(Subspace, bool)> {
        self.check_same_field(other)?;
        let mut data = Vec::with_capacity((self.k + other.k) * self.n);
        data.extend_from_slice(&self.data);
        data.extend_from_slice(&other.data);
        let s = Subspace::from_rows(&self.field, data, self.k + other.k);
        let direct = s.k == self.k + other.k;
        Ok((s, direct))
    }

    /// The scalar translate αS in canonical form; α must be nonzero.
    pub fn scalar_mul(&self, alpha: FieldElement) -> Result<Subspace> {
        if alpha.is_zero() {
            return Err(Error::ZeroScalar);
        }
        let alpha_fp = self.field.exp_digits(alpha.exponent().unwrap() as u32);
        let mut data = Vec::with_capacity(self.k * self.n);
        for r in 0..self.k {
            let fp = self.field.codes_to_fp_vec(self.row(r));
            let prod = self.field.fp_mul(&fp, &alpha_fp);
            data.extend(self.field.fp_vec_to_codes(&prod));
        }
        Ok(Subspace::from_rows(&self.field, data, self.k))
    }

    /// Subspace distance d(U, V) = dim U + dim V - 2 dim(U ∩ V).
    pub fn distance(&self, other: &Subspace) -> Result<usize> {
        self.check_same_field(other)?;
        let inter = self.intersect(other)?;
        Ok(self.k + other.k - 2 * inter.k)
    }
}

/// Convenience free function mirroring `Subspace::distance`.
pub fn subspace_distance(u: &Subspace, v: &Subspace) -> Result<usize> {
    u.distance(v)
}

/// In-place reduced row-echelon form over F_q codes. Returns the rank and
/// truncates `data` to the nonzero rows, sorted by pivot column.
pub(crate) fn rref_in_place(
    field: &FieldSpec,
    data: &mut Vec<u32>,
    rows: usize,
    cols: usize,
) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| data[r * cols + col] != 0) else {
            continue;
        };
        if pr != rank {
            for j in col..cols {
                data.swap(rank * cols + j, pr * cols + j);
            }
        }
        let piv = data[rank * cols + col];
        if piv != 1 {
            let inv = field.fq_inv(piv);
            for j in col..cols {
                data[rank * cols + j] = field.fq_mul(data[rank * cols + j], inv);
            }
        }
        for r in 0..rows {
            if r == rank {
                continue;
            }
            let f = data[r * cols + col];
            if f == 0 {
                continue;
            }
            for j in col..cols {
                let sub = field.fq_mul(f, data[rank * cols + j]);
                data[r * cols + j] = field.fq_sub(data[r * cols + j], sub);
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    data.truncate(rank * cols);
    rank
}

/// Rank of a row stack without normalization (scaled elimination only).
pub(crate) fn rank_only(field: &FieldSpec, data: &mut [u32], rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| data[r * cols + col] != 0) else {
            continue;
        };
        if pr != rank {
            for j in col..cols {
                data.swap(rank * cols + j, pr * cols + j);
            }
        }
        let piv = data[rank * cols + col];
        for r in rank + 1..rows {
            let f = data[r * cols + col];
            if f == 0 {
                continue;
            }
            for j in col..cols {
                let a = field.fq_mul(piv, data[r * cols + j]);
                let b = field.fq_mul(f, data[rank * cols + j]);
                data[r * cols + j] = field.fq_sub(a, b);
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
