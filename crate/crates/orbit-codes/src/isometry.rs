//! The semilinear maps x ↦ α·x^(q^i) — the normalizer of F_{q^n}^* in
//! GL_n(q), isomorphic to Gal(F_{q^n}|F_q) ⋊ F_{q^n}^* — acting on subspaces
//! and orbit codes, and decidable Frobenius-equivalence testing.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::constructions::{ConstructionSpec, Family};
use crate::error::{Error, Result};
use crate::gfext::{FieldElement, FieldSpec};
use crate::orbit::OrbitCode;
use crate::subspace::Subspace;

/// x ↦ mult · x^(q^frob). Identity is (0, 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SemilinearMap {
    pub frob: u32,
    pub mult: FieldElement,
}

impl SemilinearMap {
    pub fn new(field: &FieldSpec, frob: i64, mult: FieldElement) -> Result<SemilinearMap> {
        if mult.is_zero() {
            return Err(Error::ZeroScalar);
        }
        Ok(SemilinearMap {
            frob: frob.rem_euclid(field.n() as i64) as u32,
            mult,
        })
    }

    pub fn identity(field: &FieldSpec) -> SemilinearMap {
        SemilinearMap {
            frob: 0,
            mult: field.one(),
        }
    }

    pub fn apply(&self, field: &FieldSpec, x: FieldElement) -> FieldElement {
        field.mul(self.mult, field.frobenius(x, self.frob as i64))
    }

    /// self ∘ other: (i1, α1)(i2, α2) = (i1 + i2, α1 · α2^(q^i1)).
    pub fn compose(&self, field: &FieldSpec, other: &SemilinearMap) -> SemilinearMap {
        SemilinearMap {
            frob: (self.frob + other.frob) % field.n(),
            mult: field.mul(self.mult, field.frobenius(other.mult, self.frob as i64)),
        }
    }

    pub fn inverse(&self, field: &FieldSpec) -> SemilinearMap {
        let i = (field.n() - self.frob) % field.n();
        let mult = field
            .inv(field.frobenius(self.mult, i as i64))
            .expect("multiplier is nonzero");
        SemilinearMap { frob: i, mult }
    }
}

/// Image {α · x^(q^i) : x ∈ S} in canonical form. The q^i power is F_q-linear
/// on F_{q^n}, so images of basis elements span the image.
pub fn apply_map(psi: &SemilinearMap, s: &Subspace) -> Subspace {
    let field = s.field();
    let n = s.ambient_dim();
    let e_times = psi.frob * field.e();
    let alpha_fp = field.exp_digits(psi.mult.exponent().unwrap() as u32);
    let mut data = Vec::with_capacity(s.dim() * n);
    for r in 0..s.dim() {
        let fp = field.codes_to_fp_vec(s.row(r));
        let powed = field.frob_fp_vec(&fp, e_times);
        let prod = field.fp_mul(&powed, &alpha_fp);
        data.extend(field.fp_vec_to_codes(&prod));
    }
    Subspace::from_rows(field, data, s.dim())
}

/// The image subspace the normalizer action predicts for a polynomial-basis
/// or mixed construction: rebuild from λ^(q^i) with the composed multiplier,
/// then compare with `apply_map`.
pub fn predicted_image(
    field: &Arc<FieldSpec>,
    spec: &ConstructionSpec,
    psi: &SemilinearMap,
) -> Result<Subspace> {
    let lambda = spec.resolved_lambda(field)?;
    let lam_i = field.frobenius(lambda, psi.frob as i64);
    match spec.family {
        Family::PolyBasis => {
            let b = spec.b.unwrap_or_else(|| field.one());
            let composed = field.mul(psi.mult, field.frobenius(b, psi.frob as i64));
            let gens: Vec<FieldElement> = (0..spec.k)
                .map(|j| field.pow(lam_i, j as i64))
                .collect::<Result<_>>()?;
            Subspace::span_fq(field, &gens).scalar_mul(composed)
        }
        Family::MixedQ2 => {
            let gens: Vec<FieldElement> = (0..spec.l)
                .map(|j| field.pow(lam_i, j as i64))
                .collect::<Result<_>>()?;
            let head = Subspace::span_subfield(field, &gens, 2)?;
            let tail = Subspace::span_fq(field, &[field.pow(lam_i, spec.l as i64)?]);
            let (s, _) = head.sum(&tail)?;
            s.scalar_mul(psi.mult)
        }
        Family::RfwsMixed => Err(Error::UnsupportedFamily),
    }
}

/// Does ψ map Orb(S) onto Orb(ψ(S)) member by member?
pub fn orbit_image_check(psi: &SemilinearMap, s: &Subspace) -> Result<bool> {
    let orbit = OrbitCode::new(s.clone())?.enumerate()?;
    let image_orbit = OrbitCode::new(apply_map(psi, s))?.enumerate()?;
    let mapped: std::collections::BTreeSet<Subspace> =
        orbit.iter().map(|v| apply_map(psi, v)).collect();
    Ok(mapped == image_orbit)
}

/// Search for a Frobenius isometry with ψ(S1) = S2; the multiplier component
/// is absorbed by the orbit, so scanning the Galois exponent suffices.
pub fn frobenius_equivalent(s1: &Subspace, s2: &Subspace) -> Result<Option<SemilinearMap>> {
    if s1.field() != s2.field() {
        return Err(Error::FieldMismatch);
    }
    if s1.dim() != s2.dim() {
        return Err(Error::DimensionMismatch);
    }
    let field = s1.field().clone();
    let orbit2: BTreeMap<Subspace, u64> = OrbitCode::new(s2.clone())?
        .enumerate_with_scalars()?
        .into_iter()
        .collect();
    for i in 0..field.n() {
        let psi = SemilinearMap {
            frob: i,
            mult: field.one(),
        };
        let image = apply_map(&psi, s1);
        if let Some(&j) = orbit2.get(&image) {
            // gamma^j * S2 = image, so (i, gamma^-j) sends S1 to S2 exactly.
            let alpha = field.element_from_exp(field.mult_order() - j % field.mult_order());
            let witness = SemilinearMap {
                frob: i,
                mult: alpha,
            };
            debug_assert_eq!(&apply_map(&witness, s1), s2);
            return Ok(Some(witness));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{mixed_q2_code, polynomial_basis_code};
    use crate::gfext::build_field;
    use crate::orbit::weight_distribution;

    #[test]
    fn identity_and_base_scalars_fix_subspaces() {
        let f = build_field(2, 1, 10).unwrap();
        let s = mixed_q2_code(&f, 5, 2).unwrap();
        assert_eq!(apply_map(&SemilinearMap::identity(&f), &s), s);
        // scaling by an element of F_q^* fixes any F_q-subspace
        let g1 = f.subfield_generator(1).unwrap();
        let psi = SemilinearMap::new(&f, 0, g1).unwrap();
        assert_eq!(apply_map(&psi, &s), s);
    }

    #[test]
    fn zero_multiplier_is_rejected() {
        let f = build_field(2, 1, 10).unwrap();
        assert_eq!(
            SemilinearMap::new(&f, 1, f.zero()).unwrap_err(),
            Error::ZeroScalar
        );
    }

    #[test]
    fn composition_law_holds_pointwise_and_on_subspaces() {
        let f = build_field(3, 1, 4).unwrap();
        let psi1 = SemilinearMap::new(&f, 1, f.element_from_exp(7)).unwrap();
        let psi2 = SemilinearMap::new(&f, 3, f.element_from_exp(29)).unwrap();
        let comp = psi1.compose(&f, &psi2);
        for j in (0..f.mult_order()).step_by(5) {
            let x = f.element_from_exp(j);
            assert_eq!(comp.apply(&f, x), psi1.apply(&f, psi2.apply(&f, x)));
        }
        let s = polynomial_basis_code(&f, 4, 2, None).unwrap();
        assert_eq!(
            apply_map(&comp, &s),
            apply_map(&psi1, &apply_map(&psi2, &s))
        );
        // inverse composes to the identity
        let inv = psi1.inverse(&f);
        assert_eq!(psi1.compose(&f, &inv), SemilinearMap::identity(&f));
    }

    #[test]
    fn predicted_image_matches_semilinear_action() {
        let f = build_field(2, 1, 10).unwrap();
        let spec = ConstructionSpec::poly_basis(5, 3);
        let s = spec.build(&f).unwrap();
        for i in 0..10i64 {
            let psi = SemilinearMap::new(&f, i, f.element_from_exp(123)).unwrap();
            assert_eq!(
                predicted_image(&f, &spec, &psi).unwrap(),
                apply_map(&psi, &s)
            );
        }
        let mspec = ConstructionSpec::mixed_q2(5, 2);
        let ms = mspec.build(&f).unwrap();
        let psi = SemilinearMap::new(&f, 1, f.gamma()).unwrap();
        assert_eq!(
            predicted_image(&f, &mspec, &psi).unwrap(),
            apply_map(&psi, &ms)
        );
        // the r-FWS family has no predicted-image form here
        let rspec = ConstructionSpec::rfws_mixed(5, 1, 2);
        assert_eq!(
            predicted_image(&f, &rspec, &psi).unwrap_err(),
            Error::UnsupportedFamily
        );
    }

    #[test]
    fn orbits_map_onto_orbits() {
        let f = build_field(2, 1, 10).unwrap();
        let s = mixed_q2_code(&f, 5, 2).unwrap();
        for (i, a) in [(0i64, 0u64), (1, 77), (3, 500), (7, 1000)] {
            let psi = SemilinearMap::new(&f, i, f.element_from_exp(a)).unwrap();
            assert!(orbit_image_check(&psi, &s).unwrap());
        }
    }

    #[test]
    fn weight_distribution_is_isometry_invariant() {
        let f = build_field(2, 1, 10).unwrap();
        let s = mixed_q2_code(&f, 5, 2).unwrap();
        let wd = weight_distribution(&s).unwrap();
        for (i, a) in [(1i64, 3u64), (5, 900)] {
            let psi = SemilinearMap::new(&f, i, f.element_from_exp(a)).unwrap();
            assert_eq!(weight_distribution(&apply_map(&psi, &s)).unwrap(), wd);
        }
    }

    #[test]
    fn lines_and_pure_scalings_fix_the_whole_code() {
        // Orbit-level fixed points: k = 1, and any map with trivial Galois part.
        let f = build_field(2, 1, 10).unwrap();
        let line = polynomial_basis_code(&f, 5, 1, None).unwrap();
        let orbit = crate::orbit::orbit_enumerate(&line).unwrap();
        let psi = SemilinearMap::new(&f, 3, f.element_from_exp(41)).unwrap();
        assert_eq!(
            crate::orbit::orbit_enumerate(&apply_map(&psi, &line)).unwrap(),
            orbit
        );

        let s = polynomial_basis_code(&f, 5, 3, None).unwrap();
        let scaling = SemilinearMap::new(&f, 0, f.element_from_exp(999)).unwrap();
        assert_eq!(
            crate::orbit::orbit_enumerate(&apply_map(&scaling, &s)).unwrap(),
            crate::orbit::orbit_enumerate(&s).unwrap()
        );
    }

    #[test]
    fn same_orbit_members_are_equivalent_with_the_orbit_scalar() {
        let f = build_field(2, 1, 10).unwrap();
        let s = mixed_q2_code(&f, 5, 2).unwrap();
        let alpha = f.element_from_exp(321);
        let s2 = s.scalar_mul(alpha).unwrap();
        let psi = frobenius_equivalent(&s, &s2).unwrap().expect("same orbit");
        assert_eq!(psi.frob, 0);
        assert_eq!(psi.mult, alpha);
    }

    #[test]
    fn constructed_frobenius_images_are_found() {
        let f = build_field(2, 1, 10).unwrap();
        let s = polynomial_basis_code(&f, 5, 3, None).unwrap();
        let image = apply_map(&SemilinearMap::new(&f, 1, f.one()).unwrap(), &s);
        let psi = frobenius_equivalent(&s, &image)
            .unwrap()
            .expect("conjugate");
        assert_eq!(apply_map(&psi, &s), image);
        // and the reverse query also succeeds
        assert!(frobenius_equivalent(&image, &s).unwrap().is_some());
    }

    #[test]
    fn galois_conjugate_constructions_are_equivalent() {
        // family built from λ and from λ^q give Frobenius-isometric orbits
        let f = build_field(2, 1, 4).unwrap();
        let g = f.subfield_generator(4).unwrap();
        let s1 = ConstructionSpec::poly_basis(4, 2).build(&f).unwrap();
        let s2 = ConstructionSpec::poly_basis(4, 2)
            .with_lambda(f.frobenius(g, 1))
            .build(&f)
            .unwrap();
        assert!(frobenius_equivalent(&s1, &s2).unwrap().is_some());
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let f = build_field(2, 1, 10).unwrap();
        let s1 = polynomial_basis_code(&f, 5, 2, None).unwrap();
        let s2 = polynomial_basis_code(&f, 5, 3, None).unwrap();
        assert_eq!(
            frobenius_equivalent(&s1, &s2).unwrap_err(),
            Error::DimensionMismatch
        );
    }
}
