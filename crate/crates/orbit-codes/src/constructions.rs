//! Builders for the three subspace families whose orbits have controlled
//! weight spectra: the polynomial-basis family b<1, λ, ..., λ^(k-1)>_{F_q},
//! the mixed family <1, λ, ..., λ^(l-1)>_{F_{q^2}} ⊕ λ^l F_q, and the r-FWS
//! family S̄ ⊕ b<1, λ, ..., λ^(m-1)>_{F_q} with S̄ an F_{q^t}-subspace.
//!
//! Defaults are deterministic: λ is the subfield generator of the right
//! degree, S̄ is spanned by the first powers of gamma over F_{q^t}, and b = 1.
//! Callers may override λ (its degree is validated) and b.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gfext::{FieldElement, FieldSpec};
use crate::subspace::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    PolyBasis,
    MixedQ2,
    RfwsMixed,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::PolyBasis => "polybasis",
            Family::MixedQ2 => "mixedq2",
            Family::RfwsMixed => "rfwsmixed",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        match s {
            "polybasis" => Ok(Family::PolyBasis),
            "mixedq2" => Ok(Family::MixedQ2),
            "rfwsmixed" => Ok(Family::RfwsMixed),
            other => Err(Error::BadParams(format!("unknown family '{other}'"))),
        }
    }
}

/// A fully parameterized construction. `k` is used by PolyBasis, `l` by
/// MixedQ2 and RfwsMixed, `m` by RfwsMixed; `b` and `lambda` are optional
/// overrides with deterministic defaults.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub family: Family,
    pub t: u32,
    pub k: u32,
    pub l: u32,
    pub m: u32,
    pub b: Option<FieldElement>,
    pub lambda: Option<FieldElement>,
}

impl ConstructionSpec {
    pub fn poly_basis(t: u32, k: u32) -> ConstructionSpec {
        ConstructionSpec {
            family: Family::PolyBasis,
            t,
            k,
            l: 0,
            m: 0,
            b: None,
            lambda: None,
        }
    }

    pub fn mixed_q2(t: u32, l: u32) -> ConstructionSpec {
        ConstructionSpec {
            family: Family::MixedQ2,
            t,
            k: 0,
            l,
            m: 0,
            b: None,
            lambda: None,
        }
    }

    pub fn rfws_mixed(t: u32, l: u32, m: u32) -> ConstructionSpec {
        ConstructionSpec {
            family: Family::RfwsMixed,
            t,
            k: 0,
            l,
            m,
            b: None,
            lambda: None,
        }
    }

    pub fn with_b(mut self, b: FieldElement) -> ConstructionSpec {
        self.b = Some(b);
        self
    }

    pub fn with_lambda(mut self, lambda: FieldElement) -> ConstructionSpec {
        self.lambda = Some(lambda);
        self
    }

    /// Dimension of the subspace this spec produces.
    pub fn dimension(&self) -> u32 {
        match self.family {
            Family::PolyBasis => self.k,
            Family::MixedQ2 => 2 * self.l + 1,
            Family::RfwsMixed => self.t * self.l + self.m,
        }
    }

    /// The λ this spec resolves to: the caller's override (degree-checked) or
    /// the deterministic subfield generator.
    pub fn resolved_lambda(&self, field: &Arc<FieldSpec>) -> Result<FieldElement> {
        match self.family {
            Family::PolyBasis | Family::RfwsMixed => match self.lambda {
                None => field.subfield_generator(self.t),
                Some(l) => {
                    if field.degree_over_fq(l) != self.t {
                        return Err(Error::BadParams(format!(
                            "lambda must have degree {} over F_q",
                            self.t
                        )));
                    }
                    Ok(l)
                }
            },
            Family::MixedQ2 => match self.lambda {
                None => field.subfield_generator(2 * self.t),
                Some(l) => {
                    // [F_{q^2}(λ) : F_{q^2}] = lcm(2, deg λ) / 2 must be t.
                    let d = field.degree_over_fq(l);
                    if lcm(2, d) / 2 != self.t {
                        return Err(Error::BadParams(format!(
                            "lambda must have degree {} over F_(q^2)",
                            self.t
                        )));
                    }
                    Ok(l)
                }
            },
        }
    }

    pub fn build(&self, field: &Arc<FieldSpec>) -> Result<Subspace> {
        match self.family {
            Family::PolyBasis => {
                polynomial_basis_code_with(field, self.t, self.k, self.b, self.lambda)
            }
            Family::MixedQ2 => mixed_q2_code_with(field, self.t, self.l, self.lambda),
            Family::RfwsMixed => {
                Ok(
                    rfws_mixed_parts_with(field, self.t, self.l, self.m, self.b, self.lambda)?
                        .subspace,
                )
            }
        }
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// b<1, λ, ..., λ^(k-1)>_{F_q} with λ the generator of F_{q^t}; 1 <= k <= t.
pub fn polynomial_basis_code(
    field: &Arc<FieldSpec>,
    t: u32,
    k: u32,
    b: Option<FieldElement>,
) -> Result<Subspace> {
    polynomial_basis_code_with(field, t, k, b, None)
}

fn polynomial_basis_code_with(
    field: &Arc<FieldSpec>,
    t: u32,
    k: u32,
    b: Option<FieldElement>,
    lambda: Option<FieldElement>,
) -> Result<Subspace> {
    if k == 0 || k > t {
        return Err(Error::BadK { k, t });
    }
    let spec = ConstructionSpec {
        family: Family::PolyBasis,
        t,
        k,
        l: 0,
        m: 0,
        b,
        lambda,
    };
    let lambda = spec.resolved_lambda(field)?;
    let b = b.unwrap_or_else(|| field.one());
    if b.is_zero() {
        return Err(Error::ZeroScalar);
    }
    let gens = lambda_powers(field, lambda, k);
    let s = Subspace::span_fq(field, &gens).scalar_mul(b)?;
    debug_assert_eq!(
        s.dim(),
        k as usize,
        "powers of lambda below t are independent"
    );
    Ok(s)
}

/// <1, λ, ..., λ^(l-1)>_{F_{q^2}} ⊕ λ^l F_q with λ of degree t over F_{q^2};
/// requires n even, 2t | n and 1 <= l < t/2. Dimension 2l + 1.
pub fn mixed_q2_code(field: &Arc<FieldSpec>, t: u32, l: u32) -> Result<Subspace> {
    mixed_q2_code_with(field, t, l, None)
}

fn mixed_q2_code_with(
    field: &Arc<FieldSpec>,
    t: u32,
    l: u32,
    lambda: Option<FieldElement>,
) -> Result<Subspace> {
    let n = field.n();
    if !n.is_multiple_of(2) {
        return Err(Error::OddN);
    }
    if t == 0 || !n.is_multiple_of(2 * t) {
        return Err(Error::NotADivisor { m: 2 * t, n });
    }
    if l == 0 || 2 * l >= t {
        return Err(Error::BadL { l, t });
    }
    let spec = ConstructionSpec {
        family: Family::MixedQ2,
        t,
        k: 0,
        l,
        m: 0,
        b: None,
        lambda,
    };
    let lambda = spec.resolved_lambda(field)?;
    let head = Subspace::span_subfield(field, &lambda_powers(field, lambda, l), 2)?;
    let tail = Subspace::span_fq(field, &[field.pow(lambda, l as i64)?]);
    let (s, direct) = head.sum(&tail)?;
    if !direct {
        return Err(Error::DirectSumFailure);
    }
    debug_assert_eq!(s.dim(), 2 * l as usize + 1);
    Ok(s)
}

/// The pieces of an r-FWS construction, kept separate because the
/// decomposition and bound checks quantify over them.
#[derive(Clone, Debug)]
pub struct RfwsParts {
    /// S = S̄ ⊕ b<1, λ, ..., λ^(m-1)>_{F_q}, dimension tl + m.
    pub subspace: Subspace,
    /// S̄ = <gamma, gamma^2, ..., gamma^l>_{F_{q^t}}, dimension tl over F_q.
    pub sbar: Subspace,
    /// S_m = b<1, λ, ..., λ^(m-1)>_{F_q}.
    pub sm: Subspace,
    /// Y = S̄ ⊕ b F_{q^t}; must be the whole field.
    pub y: Subspace,
    pub lambda: FieldElement,
}

/// S̄ ⊕ b<1, λ, ..., λ^(m-1)>_{F_q} with n = t(l+1), 0 < m < t, 2m >= t-1.
pub fn rfws_mixed_code(
    field: &Arc<FieldSpec>,
    t: u32,
    l: u32,
    m: u32,
    b: Option<FieldElement>,
) -> Result<Subspace> {
    Ok(rfws_mixed_parts(field, t, l, m, b)?.subspace)
}

pub fn rfws_mixed_parts(
    field: &Arc<FieldSpec>,
    t: u32,
    l: u32,
    m: u32,
    b: Option<FieldElement>,
) -> Result<RfwsParts> {
    rfws_mixed_parts_with(field, t, l, m, b, None)
}

fn rfws_mixed_parts_with(
    field: &Arc<FieldSpec>,
    t: u32,
    l: u32,
    m: u32,
    b: Option<FieldElement>,
    lambda: Option<FieldElement>,
) -> Result<RfwsParts> {
    let n = field.n();
    if t == 0 || !n.is_multiple_of(t) {
        return Err(Error::NotADivisor { m: t, n });
    }
    if l == 0 || n != t * (l + 1) {
        return Err(Error::BadShape(format!(
            "n = {n} must equal t(l+1) = {}",
            t * (l + 1)
        )));
    }
    if m == 0 || m >= t || 2 * m + 1 < t {
        return Err(Error::BadM { m, t });
    }
    let spec = ConstructionSpec {
        family: Family::RfwsMixed,
        t,
        k: 0,
        l,
        m,
        b,
        lambda,
    };
    let lambda = spec.resolved_lambda(field)?;
    let b = b.unwrap_or_else(|| field.one());
    if b.is_zero() {
        return Err(Error::ZeroScalar);
    }

    // S̄ = <gamma, ..., gamma^l> over F_{q^t}; gamma is primitive, so
    // F_{q^t}(gamma) is the whole field and the powers are independent.
    let alpha = field.gamma();
    let sbar_gens: Vec<FieldElement> = (1..=l)
        .map(|i| field.pow(alpha, i as i64))
        .collect::<Result<_>>()?;
    let sbar = Subspace::span_subfield(field, &sbar_gens, t)?;
    debug_assert_eq!(sbar.dim(), (t * l) as usize);

    let subfield_t = Subspace::span_subfield(field, &[field.one()], t)?;
    let b_subfield = subfield_t.scalar_mul(b)?;
    if !sbar.intersect(&b_subfield)?.is_zero() {
        return Err(Error::DirectSumFailure);
    }
    let (y, y_direct) = sbar.sum(&b_subfield)?;
    debug_assert!(y_direct);
    if y.dim() != n as usize {
        return Err(Error::YNotFull);
    }

    let sm = Subspace::span_fq(field, &lambda_powers(field, lambda, m)).scalar_mul(b)?;
    let (subspace, direct) = sbar.sum(&sm)?;
    if !direct {
        return Err(Error::DirectSumFailure);
    }
    debug_assert_eq!(subspace.dim(), (t * l + m) as usize);

    Ok(RfwsParts {
        subspace,
        sbar,
        sm,
        y,
        lambda,
    })
}

fn lambda_powers(field: &FieldSpec, lambda: FieldElement, count: u32) -> Vec<FieldElement> {
    (0..count)
        .map(|i| field.pow(lambda, i as i64).expect("nonnegative power"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfext::build_field;
    use crate::orbit::{rfws_index, stabilizer_degree, weight_distribution, RfwsVerdict};

    #[test]
    fn one_dimensional_polynomial_basis_code_is_a_line() {
        let f = build_field(2, 1, 10).unwrap();
        let s = polynomial_basis_code(&f, 5, 1, None).unwrap();
        assert_eq!(s.dim(), 1);
        let b = f.element_from_exp(9);
        let sb = polynomial_basis_code(&f, 5, 1, Some(b)).unwrap();
        assert_eq!(sb, Subspace::span_fq(&f, &[b]));
    }

    #[test]
    fn polynomial_basis_code_rejects_bad_k() {
        let f = build_field(2, 1, 10).unwrap();
        assert!(matches!(
            polynomial_basis_code(&f, 5, 0, None),
            Err(Error::BadK { .. })
        ));
        assert!(matches!(
            polynomial_basis_code(&f, 5, 6, None),
            Err(Error::BadK { .. })
        ));
        assert!(matches!(
            polynomial_basis_code(&f, 3, 2, None),
            Err(Error::NotADivisor { .. })
        ));
        assert_eq!(
            polynomial_basis_code(&f, 5, 2, Some(f.zero())).unwrap_err(),
            Error::ZeroScalar
        );
    }

    #[test]
    fn family1_one_fws_example() {
        // q=2, t=n=5, k=3: distribution (1, 6, 24, 0), a 1-FWS code.
        let f = build_field(2, 1, 5).unwrap();
        let s = polynomial_basis_code(&f, 5, 3, None).unwrap();
        let wd = weight_distribution(&s).unwrap();
        assert_eq!(wd.counts(), &[1, 6, 24, 0]);
        assert_eq!(rfws_index(&wd), RfwsVerdict::Rfws(1));
    }

    #[test]
    fn family1_fws_example_in_f16() {
        let f = build_field(2, 1, 4).unwrap();
        let s = polynomial_basis_code(&f, 4, 2, None).unwrap();
        let wd = weight_distribution(&s).unwrap();
        assert_eq!(wd.counts(), &[1, 6, 8]);
        assert!(rfws_index(&wd).is_fws());
    }

    #[test]
    fn family1_weight_two_witness() {
        // For k < t, d(S, λS) = 2.
        let f = build_field(2, 1, 10).unwrap();
        for (t, k) in [(5u32, 2u32), (5, 3), (10, 4)] {
            let s = polynomial_basis_code(&f, t, k, None).unwrap();
            let lambda = f.subfield_generator(t).unwrap();
            assert_eq!(s.distance(&s.scalar_mul(lambda).unwrap()).unwrap(), 2);
        }
    }

    #[test]
    fn mixed_q2_code_shape_and_stabilizer() {
        let f = build_field(2, 1, 10).unwrap();
        let s = mixed_q2_code(&f, 5, 2).unwrap();
        assert_eq!(s.dim(), 5);
        assert_eq!(stabilizer_degree(&s).unwrap(), 1);
    }

    #[test]
    fn mixed_q2_code_rejects_bad_shapes() {
        let f9 = build_field(3, 1, 9).unwrap();
        assert_eq!(mixed_q2_code(&f9, 3, 1).unwrap_err(), Error::OddN);
        let f = build_field(2, 1, 10).unwrap();
        assert!(matches!(
            mixed_q2_code(&f, 4, 1),
            Err(Error::NotADivisor { .. })
        ));
        assert!(matches!(mixed_q2_code(&f, 5, 3), Err(Error::BadL { .. })));
        assert!(matches!(mixed_q2_code(&f, 5, 0), Err(Error::BadL { .. })));
    }

    #[test]
    fn mixed_q2_small_fws_case() {
        // l = 1 in F_2^12 with t = 3: k = 3, FWS.
        let f = build_field(2, 1, 12).unwrap();
        let s = mixed_q2_code(&f, 3, 1).unwrap();
        assert_eq!(s.dim(), 3);
        let wd = weight_distribution(&s).unwrap();
        assert!(rfws_index(&wd).is_fws());
    }

    #[test]
    fn quadratic_subfield_scalars_sit_at_distance_two() {
        // d(S, αS) = 2 exactly when α is in F_(q^2) \ F_q.
        let f = build_field(2, 1, 10).unwrap();
        let s = mixed_q2_code(&f, 5, 2).unwrap();
        let alpha = f.subfield_generator(2).unwrap();
        assert!(!f.is_in_subfield(alpha, 1).unwrap());
        assert_eq!(s.distance(&s.scalar_mul(alpha).unwrap()).unwrap(), 2);
    }

    #[test]
    fn intersection_with_lambda_translate_has_dimension_three() {
        let f = build_field(2, 1, 10).unwrap();
        let s = mixed_q2_code(&f, 5, 2).unwrap();
        let lambda = f.subfield_generator(10).unwrap();
        let t = s.scalar_mul(lambda).unwrap();
        assert_eq!(s.intersect(&t).unwrap().dim(), 3);
    }

    #[test]
    fn rfws_parts_shape() {
        let f = build_field(2, 1, 10).unwrap();
        let parts = rfws_mixed_parts(&f, 5, 1, 2, None).unwrap();
        assert_eq!(parts.subspace.dim(), 7);
        assert_eq!(parts.sbar.dim(), 5);
        assert_eq!(parts.sm.dim(), 2);
        assert_eq!(parts.y.dim(), 10);
        assert_eq!(stabilizer_degree(&parts.sbar).unwrap(), 5);
        assert_eq!(stabilizer_degree(&parts.subspace).unwrap(), 1);
    }

    #[test]
    fn rfws_rejects_bad_shapes() {
        let f = build_field(2, 1, 10).unwrap();
        assert!(matches!(
            rfws_mixed_parts(&f, 5, 2, 2, None),
            Err(Error::BadShape(_))
        ));
        assert!(matches!(
            rfws_mixed_parts(&f, 5, 1, 0, None),
            Err(Error::BadM { .. })
        ));
        assert!(matches!(
            rfws_mixed_parts(&f, 5, 1, 5, None),
            Err(Error::BadM { .. })
        ));
        // 2m < t - 1
        assert!(matches!(
            rfws_mixed_parts(&f, 5, 1, 1, None),
            Err(Error::BadM { .. })
        ));
    }

    #[test]
    fn rfws_detects_bad_b() {
        let f = build_field(2, 1, 10).unwrap();
        // b = gamma makes bF_{q^t} = S̄ itself, so the sum degenerates.
        let err = rfws_mixed_parts(&f, 5, 1, 2, Some(f.gamma())).unwrap_err();
        assert_eq!(err, Error::DirectSumFailure);
    }

    #[test]
    fn rfws_examples_match_published_distributions() {
        let f = build_field(2, 1, 10).unwrap();
        let s = rfws_mixed_code(&f, 5, 1, 2, None).unwrap();
        let wd = weight_distribution(&s).unwrap();
        assert_eq!(wd.counts(), &[1, 6, 24, 992, 0, 0, 0, 0]);
        assert_eq!(rfws_index(&wd), RfwsVerdict::Rfws(4));

        let f9 = build_field(3, 1, 9).unwrap();
        let s9 = rfws_mixed_code(&f9, 3, 2, 2, None).unwrap();
        let wd9 = weight_distribution(&s9).unwrap();
        assert_eq!(wd9.counts(), &[1, 9840, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(rfws_index(&wd9), RfwsVerdict::Rfws(7));
    }

    #[test]
    fn intersection_dim_is_constant_off_the_subfield() {
        // For the constructed r-FWS code, every μ outside F_{q^t} gives
        // dim(S ∩ μS) = t(l-1) + 2m.
        let f = build_field(2, 1, 10).unwrap();
        let s = rfws_mixed_code(&f, 5, 1, 2, None).unwrap();
        let step = f.mult_order() / (2u64.pow(5) - 1);
        let expect = 2 * 2; // t(l-1) + 2m
        for j in 0..f.mult_order() {
            if j % step == 0 {
                continue; // μ in F_{q^t}
            }
            let mu = f.element_from_exp(j);
            let dim = s.intersect(&s.scalar_mul(mu).unwrap()).unwrap().dim();
            assert_eq!(dim, expect, "exponent {j}");
        }
    }

    #[test]
    fn family2_shape_outside_the_rfws_regime_is_not_rfws() {
        // n > t(l+1) with m < t-1 and H(Y) = F_{q^t}: no r-FWS pattern can
        // appear. Built from raw parts because the constructor refuses it.
        let f = build_field(2, 1, 15).unwrap();
        let t = 5u32;
        let m = 2u32;
        let sub5 = Subspace::span_subfield(&f, &[f.gamma()], t).unwrap();
        let lambda = f.subfield_generator(t).unwrap();
        let sm = Subspace::span_fq(&f, &[f.one(), lambda]);
        let (s, direct) = sub5.sum(&sm).unwrap();
        assert!(direct);
        assert_eq!(s.dim(), (t + m) as usize);
        let wd = weight_distribution(&s).unwrap();
        assert_eq!(wd.counts()[(m + 1) as usize], 0, "ω_(2m+2) must vanish");
        assert_eq!(rfws_index(&wd), RfwsVerdict::NotRfws);
    }
}
