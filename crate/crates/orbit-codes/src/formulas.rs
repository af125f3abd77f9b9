//! Closed-form weight distributions and classification predicates for the
//! three families, evaluated in exact integer arithmetic (u128 internally,
//! with explicit errors on overflow or non-exact division), plus the
//! rational-form predictor for intersection dimensions of the mixed family.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gfext::{FieldElement, FieldSpec};
use crate::orbit::WeightDistribution;

fn upow(base: u64, exp: u32) -> Result<u128> {
    (base as u128).checked_pow(exp).ok_or(Error::Overflow)
}

fn exact_div(a: u128, b: u128) -> Result<u128> {
    if b == 0 || !a.is_multiple_of(b) {
        return Err(Error::InexactDivision);
    }
    Ok(a / b)
}

fn to_u64(x: u128) -> Result<u64> {
    u64::try_from(x).map_err(|_| Error::Overflow)
}

/// Weight distribution of Orb(b<1, λ, ..., λ^(k-1)>_{F_q}) for λ of degree t
/// over F_q, 1 <= k < t, t | n.
pub fn family1_wd_formula(q: u64, n: u32, t: u32, k: u32) -> Result<WeightDistribution> {
    if q < 2 || t == 0 || n == 0 || !n.is_multiple_of(t) || k == 0 || k >= t {
        return Err(Error::BadParams(format!(
            "need t | n and 1 <= k < t; got q={q}, n={n}, t={t}, k={k}"
        )));
    }
    let qm1 = (q - 1) as u128;
    let mut w = vec![0u64; k as usize + 1];
    w[0] = 1;
    if 2 * k <= t {
        for i in 1..k {
            w[i as usize] = to_u64((q as u128 + 1) * upow(q, 2 * i - 1)?)?;
        }
        w[k as usize] = to_u64(exact_div(upow(q, n)? - upow(q, 2 * k - 1)?, qm1)?)?;
    } else {
        for i in 1..t - k {
            w[i as usize] = to_u64((q as u128 + 1) * upow(q, 2 * i - 1)?)?;
        }
        w[(t - k) as usize] = to_u64(exact_div(upow(q, t)? - upow(q, 2 * (t - k) - 1)?, qm1)?)?;
        // indices t-k+1 ..= k-1 stay zero
        w[k as usize] = to_u64(exact_div(upow(q, n)? - upow(q, t)?, qm1)?)?;
    }
    Ok(WeightDistribution::new(w))
}

/// Weight distribution of Orb(<1, λ, ..., λ^(l-1)>_{F_{q^2}} ⊕ λ^l F_q) for
/// even n; k = 2l + 1. The parameter t drops out of the closed form.
pub fn family2_wd_formula(q: u64, n: u32, l: u32) -> Result<WeightDistribution> {
    if q < 2 || l == 0 || n == 0 || !n.is_multiple_of(2) {
        return Err(Error::BadParams(format!(
            "need even n and l >= 1; got q={q}, n={n}, l={l}"
        )));
    }
    let k = 2 * l + 1;
    let qm1 = (q - 1) as u128;
    let qp1 = (q + 1) as u128;
    let mut w = vec![0u64; k as usize + 1];
    w[0] = 1;
    w[1] = q;
    for r in 1..l {
        w[(2 * r + 1) as usize] = to_u64(upow(q, 4 * r - 1)? * (upow(q, 2)? - 1))?;
    }
    for r in 1..=l {
        w[(2 * r) as usize] = to_u64(upow(q, 4 * r - 2)? * qp1 * qp1)?;
    }
    let total = exact_div(upow(q, n)? - 1, qm1)?;
    let blob = (upow(q, 4 * l - 3)? - q as u128) * qm1 + qp1 * (upow(q, 4 * l)? - 1);
    let tail = qp1 * upow(q, 2)? * exact_div(blob, upow(q, 4)? - 1)?;
    let top = total
        .checked_sub(qp1)
        .and_then(|x| x.checked_sub(tail))
        .ok_or(Error::InexactDivision)?;
    w[k as usize] = to_u64(top)?;
    Ok(WeightDistribution::new(w))
}

/// Weight distribution of the r-FWS family S̄ ⊕ b<1, λ, ..., λ^(m-1)>_{F_q}
/// with n = t(l+1), 0 < m < t and 2m >= t-1; k = tl + m. Case split on 2m
/// against t.
pub fn rfws_wd_formula(q: u64, n: u32, t: u32, l: u32, m: u32) -> Result<WeightDistribution> {
    if q < 2 || t == 0 || l == 0 || n != t * (l + 1) || m == 0 || m >= t {
        return Err(Error::BadParams(format!(
            "need n = t(l+1) and 0 < m < t; got q={q}, n={n}, t={t}, l={l}, m={m}"
        )));
    }
    if 2 * m + 1 < t {
        return Err(Error::BadParams(format!(
            "no r-FWS code exists for 2m = {} < t - 1 = {}",
            2 * m,
            t - 1
        )));
    }
    let k = t * l + m;
    let qm1 = (q - 1) as u128;
    let qp1 = (q + 1) as u128;
    let mut w = vec![0u64; k as usize + 1];
    w[0] = 1;
    if 2 * m + 1 == t {
        // r = tl - 1
        for i in 1..m {
            w[i as usize] = to_u64(qp1 * upow(q, 2 * i - 1)?)?;
        }
        w[m as usize] = to_u64(exact_div(upow(q, t)? - upow(q, 2 * m - 1)?, qm1)?)?;
        w[(m + 1) as usize] = to_u64(exact_div(upow(q, n)? - upow(q, t)?, qm1)?)?;
    } else if 2 * m == t {
        // r = tl
        for i in 1..m {
            w[i as usize] = to_u64(qp1 * upow(q, 2 * i - 1)?)?;
        }
        w[m as usize] = to_u64(exact_div(upow(q, n)? - upow(q, 2 * m - 1)?, qm1)?)?;
    } else {
        // 2m > t: r = 2m + t(l-1)
        for i in 1..t - m {
            w[i as usize] = to_u64(qp1 * upow(q, 2 * i - 1)?)?;
        }
        w[(t - m) as usize] = to_u64(exact_div(upow(q, n)? - upow(q, 2 * (t - m) - 1)?, qm1)?)?;
    }
    Ok(WeightDistribution::new(w))
}

/// The congruence constraint tied to the stabilizer: every positive entry
/// `w[i]`, i >= 1, must satisfy k ≡ i (mod d).
pub fn congruence_filter(wd: &WeightDistribution, d: u32) -> bool {
    assert!(d >= 1);
    let k = wd.k();
    wd.counts()
        .iter()
        .enumerate()
        .skip(1)
        .all(|(i, &w)| w == 0 || (k as i64 - i as i64).rem_euclid(d as i64) == 0)
}

// ---------------------------------------------------------------------------
// Rational-form prediction of dim(S ∩ μS) for the mixed family
// ---------------------------------------------------------------------------

/// A coprime pair (p1, p2) of polynomials with coefficients in F_{q^2},
/// p1 monic of degree r >= deg p2, defining μ = p1(λ)/p2(λ).
#[derive(Clone, Debug)]
pub struct PolyPair {
    p1: Vec<FieldElement>,
    p2: Vec<FieldElement>,
}

impl PolyPair {
    /// Validates subfield membership of the coefficients, monicity of p1, the
    /// degree pattern and coprimality.
    pub fn new(
        field: &Arc<FieldSpec>,
        p1: Vec<FieldElement>,
        p2: Vec<FieldElement>,
    ) -> Result<PolyPair> {
        let mut p1 = p1;
        let mut p2 = p2;
        trim(&mut p1);
        trim(&mut p2);
        for &c in p1.iter().chain(p2.iter()) {
            if !field.is_in_subfield(c, 2)? {
                return Err(Error::BadParams("coefficients must lie in F_(q^2)".into()));
            }
        }
        let Some(d1) = deg(&p1) else {
            return Err(Error::BadDegree("p1 must be nonzero".into()));
        };
        if p1[d1] != field.one() {
            return Err(Error::BadParams("p1 must be monic".into()));
        }
        let Some(d2) = deg(&p2) else {
            return Err(Error::NotCoprime);
        };
        if d2 > d1 {
            return Err(Error::BadDegree(format!(
                "deg p2 = {d2} exceeds deg p1 = {d1}"
            )));
        }
        let g = poly2_gcd(field, p1.clone(), p2.clone());
        if deg(&g) != Some(0) {
            return Err(Error::NotCoprime);
        }
        Ok(PolyPair { p1, p2 })
    }

    /// r = deg p1.
    pub fn degree(&self) -> usize {
        deg(&self.p1).unwrap()
    }

    /// Coefficient of x^r in p2 (zero when deg p2 < r).
    pub fn top_coeff(&self) -> FieldElement {
        let r = self.degree();
        self.p2.get(r).copied().unwrap_or(FieldElement::ZERO)
    }

    /// μ = p1(λ) / p2(λ).
    pub fn mu(&self, field: &Arc<FieldSpec>, lambda: FieldElement) -> Result<FieldElement> {
        let num = poly2_eval(field, &self.p1, lambda);
        let den = poly2_eval(field, &self.p2, lambda);
        field.div(num, den)
    }
}

/// Predicted dim(S ∩ μS) for the mixed family with parameter l, from the
/// shape of the pair alone: 2(l-r) when the x^r coefficient of p2 lies
/// outside F_q, 2(l-r)+1 when it lies in F_q (zero included).
pub fn predict_mu_dim(field: &Arc<FieldSpec>, pair: &PolyPair, l: u32) -> Result<usize> {
    let r = pair.degree();
    let top = pair.top_coeff();
    let in_fq = field.is_in_subfield(top, 1)?;
    if in_fq {
        if r < 1 || r > l as usize {
            return Err(Error::BadDegree(format!(
                "odd case needs 1 <= r <= l; got r = {r}, l = {l}"
            )));
        }
        Ok(2 * (l as usize - r) + 1)
    } else {
        if r < 1 || r + 1 > l as usize {
            return Err(Error::BadDegree(format!(
                "even case needs 1 <= r <= l - 1; got r = {r}, l = {l}"
            )));
        }
        Ok(2 * (l as usize - r))
    }
}

fn trim(v: &mut Vec<FieldElement>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn deg(v: &[FieldElement]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

fn poly2_rem(field: &FieldSpec, mut a: Vec<FieldElement>, b: &[FieldElement]) -> Vec<FieldElement> {
    let db = deg(b).expect("divisor nonzero");
    let lead_inv = field.inv(b[db]).unwrap();
    loop {
        trim(&mut a);
        let Some(da) = deg(&a) else { break };
        if da < db {
            break;
        }
        let factor = field.mul(a[da], lead_inv);
        for j in 0..=db {
            let sub = field.mul(factor, b[j]);
            a[da - db + j] = field.sub(a[da - db + j], sub);
        }
    }
    a
}

fn poly2_gcd(
    field: &FieldSpec,
    mut a: Vec<FieldElement>,
    mut b: Vec<FieldElement>,
) -> Vec<FieldElement> {
    trim(&mut a);
    trim(&mut b);
    while deg(&b).is_some() {
        let r = poly2_rem(field, a, &b);
        a = b;
        b = r;
        trim(&mut b);
    }
    a
}

fn poly2_eval(field: &FieldSpec, p: &[FieldElement], x: FieldElement) -> FieldElement {
    let mut acc = FieldElement::ZERO;
    for &c in p.iter().rev() {
        acc = field.add(field.mul(acc, x), c);
    }
    acc
}

// ---------------------------------------------------------------------------
// r-FWS classification
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Exists(u32),
    NotExists(NonExistenceReason),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NonExistenceReason {
    /// 2m < t - 1.
    SmallM,
    /// n != t(l+1), so Y cannot be the whole field.
    YNotFull,
}

/// Existence and the value of r for the mixed r-FWS family with parameters
/// (t, l, m) inside F_{q^n}.
pub fn rfws_classify(q: u64, n: u32, t: u32, l: u32, m: u32) -> Result<Classification> {
    if q < 2 || t == 0 || !n.is_multiple_of(t) || m == 0 || m >= t || l == 0 {
        return Err(Error::BadParams(format!(
            "need t | n, 0 < m < t, l > 0; got q={q}, n={n}, t={t}, l={l}, m={m}"
        )));
    }
    if 2 * m + 1 < t {
        return Ok(Classification::NotExists(NonExistenceReason::SmallM));
    }
    if n != t * (l + 1) {
        return Ok(Classification::NotExists(NonExistenceReason::YNotFull));
    }
    let r = if 2 * m + 1 == t {
        t * l - 1
    } else if 2 * m == t {
        t * l
    } else {
        2 * m + t * (l - 1)
    };
    Ok(Classification::Exists(r))
}

/// r for the polynomial-basis family with t = n and t/2 < k < t: r = 2k - t.
pub fn family1_rfws_r(n: u32, t: u32, k: u32) -> Result<u32> {
    if t != n || 2 * k <= t || k >= t {
        return Err(Error::BadParams(format!(
            "need t = n and t/2 < k < t; got n={n}, t={t}, k={k}"
        )));
    }
    Ok(2 * k - t)
}

/// Stabilizer hypothesis on Y = `<S>_(F_(q^t))` for the zero-entry predictions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YStabilizer {
    /// H(Y) = F_{q^t}.
    Eq,
    /// F_{q^t} is a proper subfield of H(Y).
    Strict,
}

/// Indices i with ω_{2i} predicted zero for a mixed-family shape with
/// parameters (t, l, m), k = tl + m, under the given stabilizer hypothesis.
pub fn th64_zero_predictions(
    q: u64,
    t: u32,
    l: u32,
    m: u32,
    hy: YStabilizer,
) -> Result<BTreeSet<usize>> {
    if q < 2 || t == 0 || m == 0 || m >= t || l == 0 {
        return Err(Error::BadParams(format!(
            "need 0 < m < t and l > 0; got q={q}, t={t}, l={l}, m={m}"
        )));
    }
    let k = (t * l + m) as usize;
    let mut out = BTreeSet::new();
    if m + 1 < t && hy == YStabilizer::Eq {
        out.insert(m as usize + 1);
    }
    if 2 * m > t + 1 {
        for j in 1..=(2 * m - t - 1) as usize {
            out.insert(k - j);
        }
    }
    if hy == YStabilizer::Strict {
        for j in 1..=(2 * m - 1) as usize {
            out.insert(k - j);
        }
    }
    if t == 3 && m == 2 && hy == YStabilizer::Eq {
        out.insert(2);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfext::build_field;

    #[test]
    fn family1_known_values() {
        assert_eq!(family1_wd_formula(2, 4, 4, 2).unwrap().counts(), &[1, 6, 8]);
        assert_eq!(
            family1_wd_formula(2, 8, 4, 3).unwrap().counts(),
            &[1, 14, 0, 240]
        );
        assert_eq!(
            family1_wd_formula(2, 5, 5, 3).unwrap().counts(),
            &[1, 6, 24, 0]
        );
        assert!(family1_wd_formula(2, 8, 4, 4).is_err());
        assert!(family1_wd_formula(2, 9, 4, 2).is_err());
    }

    #[test]
    fn family2_published_examples() {
        assert_eq!(
            family2_wd_formula(2, 10, 2).unwrap().counts(),
            &[1, 2, 36, 24, 576, 384]
        );
        assert_eq!(
            family2_wd_formula(3, 10, 2).unwrap().counts(),
            &[1, 3, 144, 216, 11664, 17496]
        );
        assert_eq!(
            family2_wd_formula(5, 10, 2).unwrap().counts(),
            &[1, 5, 900, 3000, 562500, 1875000]
        );
    }

    #[test]
    fn family2_sums_telescope() {
        // The closed form for the top entry equals total minus the rest.
        for (q, n, l) in [
            (2u64, 10u32, 2u32),
            (3, 10, 2),
            (5, 10, 2),
            (2, 12, 2),
            (2, 14, 3),
        ] {
            let wd = family2_wd_formula(q, n, l).unwrap();
            let total = (q as u128).pow(n) - 1;
            assert_eq!(
                wd.counts().iter().map(|&x| x as u128).sum::<u128>() * (q as u128 - 1),
                total,
                "q={q} n={n} l={l}"
            );
        }
    }

    #[test]
    fn rfws_published_examples() {
        assert_eq!(
            rfws_wd_formula(2, 10, 5, 1, 2).unwrap().counts(),
            &[1, 6, 24, 992, 0, 0, 0, 0]
        );
        let ex2 = rfws_wd_formula(2, 16, 4, 3, 2).unwrap();
        let mut expect = [0u64; 15];
        expect[0] = 1;
        expect[1] = 6;
        expect[2] = 65528;
        assert_eq!(ex2.counts(), &expect[..]);
        let ex3 = rfws_wd_formula(3, 9, 3, 2, 2).unwrap();
        let mut expect3 = [0u64; 9];
        expect3[0] = 1;
        expect3[1] = 9840;
        assert_eq!(ex3.counts(), &expect3[..]);
        assert!(rfws_wd_formula(2, 15, 5, 1, 1).is_err());
    }

    #[test]
    fn congruence_filter_cases() {
        let any = WeightDistribution::new(vec![1, 5, 7]);
        assert!(congruence_filter(&any, 1));
        // k = 2, d = 2: only even distance indices may be positive.
        let sub = WeightDistribution::new(vec![1, 0, 4]);
        assert!(congruence_filter(&sub, 2));
        let bad = WeightDistribution::new(vec![1, 3, 4]);
        assert!(!congruence_filter(&bad, 2));
    }

    #[test]
    fn classification_cases() {
        assert_eq!(
            rfws_classify(2, 10, 5, 1, 2).unwrap(),
            Classification::Exists(4)
        );
        assert_eq!(
            rfws_classify(2, 16, 4, 3, 2).unwrap(),
            Classification::Exists(12)
        );
        assert_eq!(
            rfws_classify(3, 9, 3, 2, 2).unwrap(),
            Classification::Exists(7)
        );
        // small m wins over the shape check
        assert_eq!(
            rfws_classify(2, 15, 5, 1, 1).unwrap(),
            Classification::NotExists(NonExistenceReason::SmallM)
        );
        assert_eq!(
            rfws_classify(2, 15, 5, 1, 2).unwrap(),
            Classification::NotExists(NonExistenceReason::YNotFull)
        );
        assert_eq!(family1_rfws_r(5, 5, 3).unwrap(), 1);
        assert_eq!(family1_rfws_r(10, 10, 7).unwrap(), 4);
        assert!(family1_rfws_r(10, 5, 3).is_err());
    }

    #[test]
    fn zero_predictions() {
        use YStabilizer::*;
        let s = th64_zero_predictions(2, 5, 1, 2, Eq).unwrap();
        assert_eq!(s, BTreeSet::from([3]));
        // m > (t+1)/2: j ranges over 1..=2m-t-1
        let s2 = th64_zero_predictions(2, 4, 1, 3, Eq).unwrap();
        let k = 7usize;
        assert_eq!(s2, BTreeSet::from([k - 1]));
        let s3 = th64_zero_predictions(2, 3, 2, 2, Eq).unwrap();
        assert!(s3.contains(&2));
        // strict stabilizer: only the k-j family applies, j in 1..=2m-1
        let strict = th64_zero_predictions(2, 5, 1, 2, Strict).unwrap();
        let k5 = 7usize;
        assert_eq!(strict, BTreeSet::from([k5 - 1, k5 - 2, k5 - 3]));
    }

    #[test]
    fn poly_pair_validation_and_prediction() {
        let f = build_field(2, 1, 10).unwrap();
        let one = f.one();
        // p1 = x, p2 = 1: odd case, r = 1, predicts 2(l-1)+1
        let pair = PolyPair::new(&f, vec![FieldElement::ZERO, one], vec![one]).unwrap();
        assert_eq!(pair.degree(), 1);
        assert!(pair.top_coeff().is_zero());
        assert_eq!(predict_mu_dim(&f, &pair, 2).unwrap(), 3);

        // p2 with leading coefficient outside F_2: even case
        let g2 = f.subfield_generator(2).unwrap();
        let pair2 = PolyPair::new(&f, vec![FieldElement::ZERO, one], vec![one, g2]).unwrap();
        assert_eq!(predict_mu_dim(&f, &pair2, 2).unwrap(), 2);
        // but with l = 1 the even case has no valid r
        assert!(predict_mu_dim(&f, &pair2, 1).is_err());

        // non-coprime pair: p1 = x, p2 = x
        let x = vec![FieldElement::ZERO, one];
        assert_eq!(
            PolyPair::new(&f, x.clone(), x).unwrap_err(),
            Error::NotCoprime
        );

        // coefficient outside F_4
        assert!(PolyPair::new(&f, vec![f.gamma(), one], vec![one]).is_err());
    }

    #[test]
    fn mu_evaluation_matches_direct_arithmetic() {
        let f = build_field(2, 1, 10).unwrap();
        let lambda = f.subfield_generator(10).unwrap();
        let one = f.one();
        let pair = PolyPair::new(&f, vec![FieldElement::ZERO, one], vec![one]).unwrap();
        assert_eq!(pair.mu(&f, lambda).unwrap(), lambda);
    }
}
