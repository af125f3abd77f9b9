//! Orbit codes Orb(S) = {αS : α ∈ F_{q^n}^*}: stabilizer degree, orbit
//! enumeration, exhaustive weight distributions and r-FWS verdicts.
//!
//! The orbit is walked over stabilizer-coset representatives gamma^j,
//! j < (q^n-1)/(q^d-1), where F_{q^d} = H(S). Each step multiplies the
//! current basis rows by gamma, which in the power-basis coordinate system is
//! a shift feeding the top coordinate into the column of gamma^n. The
//! intersection dimension against S is then a small rank computation, so no
//! discrete logarithms are taken inside the loop.

use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fppoly::divisors;
use crate::gfext::FieldSpec;
use crate::subspace::{rank_only, Subspace};

/// Orbits longer than this refuse to materialize as sets.
const ENUM_CAP: u64 = 1 << 20;
/// Orbits at least this long are histogrammed in parallel chunks.
const PAR_THRESHOLD: u64 = 1 << 13;

/// A one-orbit cyclic subspace code: representative, stabilizer degree d with
/// H(S) = F_{q^d}, and the orbit length (q^n-1)/(q^d-1).
#[derive(Clone, Debug)]
pub struct OrbitCode {
    rep: Subspace,
    stab_degree: u32,
    orbit_size: u64,
}

/// Distance histogram of an orbit code: `counts[i]` = ω_{2i} for i up to k,
/// with `counts[0]` = 1 for the representative itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    k: usize,
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn new(counts: Vec<u64>) -> WeightDistribution {
        assert!(!counts.is_empty());
        WeightDistribution {
            k: counts.len() - 1,
            counts,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// FWS / r-FWS verdict for a weight distribution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RfwsVerdict {
    /// The positive entries are exactly w[1..=k-r]; r = 0 is a FWS code.
    Rfws(usize),
    /// An interior zero is followed by a positive entry.
    NotRfws,
}

impl RfwsVerdict {
    pub fn is_fws(self) -> bool {
        self == RfwsVerdict::Rfws(0)
    }
}

impl OrbitCode {
    pub fn new(rep: Subspace) -> Result<OrbitCode> {
        let d = stabilizer_degree(&rep)?;
        let field = rep.field();
        let stab_order = field.q().pow(d) - 1;
        let orbit_size = field.mult_order() / stab_order;
        debug_assert_eq!(orbit_size * stab_order, field.mult_order());
        Ok(OrbitCode {
            rep,
            stab_degree: d,
            orbit_size,
        })
    }

    pub fn representative(&self) -> &Subspace {
        &self.rep
    }

    pub fn stab_degree(&self) -> u32 {
        self.stab_degree
    }

    pub fn orbit_size(&self) -> u64 {
        self.orbit_size
    }

    /// The orbit as a set of canonical subspaces.
    pub fn enumerate(&self) -> Result<BTreeSet<Subspace>> {
        Ok(self
            .enumerate_with_scalars()?
            .into_iter()
            .map(|(s, _)| s)
            .collect())
    }

    /// Orbit members with the smallest exponent j such that gamma^j S is that
    /// member. Used by the isometry search to report witnesses.
    pub fn enumerate_with_scalars(&self) -> Result<Vec<(Subspace, u64)>> {
        if self.orbit_size > ENUM_CAP {
            return Err(Error::SizeCapExceeded);
        }
        let field = self.rep.field();
        let k = self.rep.dim();
        let n = self.rep.ambient_dim();
        let mut rows = self.rep.rows().to_vec();
        let mut out = Vec::with_capacity(self.orbit_size as usize);
        for j in 0..self.orbit_size {
            out.push((Subspace::from_rows(field, rows.clone(), k), j));
            advance_rows(field, &mut rows, k, n);
        }
        debug_assert_eq!(
            out.iter().map(|(s, _)| s).collect::<BTreeSet<_>>().len(),
            self.orbit_size as usize,
            "coset representatives must be pairwise distinct"
        );
        Ok(out)
    }

    /// Exhaustive weight distribution over the whole orbit.
    pub fn weight_distribution(&self) -> WeightDistribution {
        let field = self.rep.field();
        let k = self.rep.dim();
        let pivots = self.rep.pivots();

        let counts = if self.orbit_size >= PAR_THRESHOLD {
            let chunk = 1u64 << 12;
            let starts: Vec<u64> = (0..self.orbit_size).step_by(chunk as usize).collect();
            starts
                .par_iter()
                .map(|&j0| {
                    let hi = (j0 + chunk).min(self.orbit_size);
                    self.histogram_range(field, &pivots, j0, hi)
                })
                .reduce(
                    || vec![0u64; k + 1],
                    |mut a, b| {
                        for (x, y) in a.iter_mut().zip(b) {
                            *x += y;
                        }
                        a
                    },
                )
        } else {
            self.histogram_range(field, &pivots, 0, self.orbit_size)
        };

        debug_assert_eq!(counts.iter().sum::<u64>(), self.orbit_size);
        debug_assert_eq!(counts[0], 1);
        WeightDistribution::new(counts)
    }

    fn histogram_range(
        &self,
        field: &Arc<FieldSpec>,
        pivots: &[usize],
        lo: u64,
        hi: u64,
    ) -> Vec<u64> {
        let k = self.rep.dim();
        let n = self.rep.ambient_dim();
        let s_rows = self.rep.rows();
        let mut rows = rows_at(field, self.rep.rows(), k, n, lo);
        let mut scratch = vec![0u32; k * n];
        let mut counts = vec![0u64; k + 1];
        for _ in lo..hi {
            let dim = intersection_dim(field, s_rows, pivots, &rows, &mut scratch, k, n);
            counts[k - dim] += 1;
            advance_rows(field, &mut rows, k, n);
        }
        counts
    }
}

/// The degree d with H(S) = F_{q^d}: the largest divisor d of gcd(n, k) such
/// that the subfield generator g_d fixes S.
pub fn stabilizer_degree(s: &Subspace) -> Result<u32> {
    if s.is_zero() {
        return Err(Error::ZeroDimensional);
    }
    let field = s.field();
    let g = gcd(field.n() as u64, s.dim() as u64) as u32;
    for d in divisors(g).into_iter().rev() {
        let gd = field.subfield_generator(d)?;
        if &s.scalar_mul(gd)? == s {
            return Ok(d);
        }
    }
    unreachable!("d = 1 always stabilizes an F_q-linear subspace")
}

/// Orbit of S as a set of canonical subspaces.
pub fn orbit_enumerate(s: &Subspace) -> Result<BTreeSet<Subspace>> {
    OrbitCode::new(s.clone())?.enumerate()
}

/// Exhaustive weight distribution of Orb(S).
pub fn weight_distribution(s: &Subspace) -> Result<WeightDistribution> {
    Ok(OrbitCode::new(s.clone())?.weight_distribution())
}

/// Scan w[1..=k] for the r-FWS pattern: positive exactly on 1..=k-r.
pub fn rfws_index(wd: &WeightDistribution) -> RfwsVerdict {
    let k = wd.k();
    let w = wd.counts();
    let last_pos = (1..=k).rev().find(|&i| w[i] > 0);
    match last_pos {
        None => RfwsVerdict::Rfws(k),
        Some(lp) => {
            if (1..=lp).all(|i| w[i] > 0) {
                RfwsVerdict::Rfws(k - lp)
            } else {
                RfwsVerdict::NotRfws
            }
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Coordinate rows of gamma^j0 * S, computed through coefficient space.
fn rows_at(field: &Arc<FieldSpec>, s_rows: &[u32], k: usize, n: usize, j0: u64) -> Vec<u32> {
    if j0 == 0 {
        return s_rows.to_vec();
    }
    let alpha = field.exp_digits((j0 % field.mult_order()) as u32);
    let mut rows = Vec::with_capacity(k * n);
    for r in 0..k {
        let fp = field.codes_to_fp_vec(&s_rows[r * n..(r + 1) * n]);
        let prod = field.fp_mul(&fp, &alpha);
        rows.extend(field.fp_vec_to_codes(&prod));
    }
    rows
}

/// Replace the rows of gamma^j * S with those of gamma^(j+1) * S.
#[inline]
fn advance_rows(field: &FieldSpec, rows: &mut [u32], k: usize, n: usize) {
    let wrap = field.gamma_pow_n_fq();
    for r in 0..k {
        let row = &mut rows[r * n..(r + 1) * n];
        let carry = row[n - 1];
        for i in (1..n).rev() {
            row[i] = row[i - 1];
        }
        row[0] = 0;
        if carry != 0 {
            for i in 0..n {
                if wrap[i] != 0 {
                    row[i] = field.fq_add(row[i], field.fq_mul(carry, wrap[i]));
                }
            }
        }
    }
}

/// dim(S ∩ T) where S is given by its RREF rows/pivots and T by any row
/// basis: reduce T's rows against S, then rank the residue.
fn intersection_dim(
    field: &FieldSpec,
    s_rows: &[u32],
    pivots: &[usize],
    t_rows: &[u32],
    scratch: &mut [u32],
    k: usize,
    n: usize,
) -> usize {
    scratch.copy_from_slice(t_rows);
    for r in 0..k {
        let base = r * n;
        for (pi, &pc) in pivots.iter().enumerate() {
            let f = scratch[base + pc];
            if f == 0 {
                continue;
            }
            let s_base = pi * n;
            for j in pc..n {
                let sub = field.fq_mul(f, s_rows[s_base + j]);
                scratch[base + j] = field.fq_sub(scratch[base + j], sub);
            }
        }
    }
    let residual_rank = rank_only(field, scratch, k, n);
    k - residual_rank
}
