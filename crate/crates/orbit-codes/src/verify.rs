//! Named verification suites: exhaustive cross-checks of the optimized
//! machinery against oracles, the closed forms against enumerated
//! distributions, and the structural lemmas the classifications rest on.
//! The CLI `verify` subcommand runs these; the acceptance tests run larger
//! standalone versions of the same sweeps.

use std::sync::Arc;

use crate::constructions::{mixed_q2_code, rfws_mixed_parts, ConstructionSpec, Family};
use crate::error::{Error, Result};
use crate::formulas::{
    congruence_filter, family1_wd_formula, family2_wd_formula, predict_mu_dim, rfws_wd_formula,
    PolyPair,
};
use crate::gfext::{build_field, FieldElement, FieldSpec};
use crate::isometry::{
    apply_map, frobenius_equivalent, orbit_image_check, predicted_image, SemilinearMap,
};
use crate::oracles::{count_coprime_pairs, naive_weight_distribution};
use crate::orbit::{rfws_index, OrbitCode, RfwsVerdict, WeightDistribution};
use crate::subspace::Subspace;

#[derive(Debug, Clone)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(
        suite: &'static str,
        name: impl Into<String>,
        pass: bool,
        detail: impl Into<String>,
    ) -> Check {
        Check {
            suite,
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

pub const SUITES: &[&str] = &[
    "trivial",
    "paper-examples",
    "oracle",
    "congruence",
    "decomposition",
    "mu-prediction",
    "isometry",
    "coprime",
    "all",
];

pub fn run_suite(name: &str) -> Result<Vec<Check>> {
    match name {
        "trivial" => Ok(suite_trivial()),
        "paper-examples" => Ok(suite_paper_examples()),
        "oracle" => Ok(suite_oracle()),
        "congruence" => Ok(suite_congruence()),
        "decomposition" => Ok(suite_decomposition()),
        "mu-prediction" => Ok(suite_mu_prediction()),
        "isometry" => Ok(suite_isometry()),
        "coprime" => Ok(suite_coprime()),
        "all" => {
            let mut out = Vec::new();
            for s in SUITES.iter().filter(|&&s| s != "all") {
                out.extend(run_suite(s)?);
            }
            Ok(out)
        }
        other => Err(Error::BadParams(format!(
            "unknown suite '{other}'; available: {}",
            SUITES.join(", ")
        ))),
    }
}

// ---------------------------------------------------------------------------
// Sweep enumeration shared with the CLI and the acceptance tests
// ---------------------------------------------------------------------------

/// One parameter point of a family sweep.
#[derive(Debug, Clone)]
pub struct SweepPoint {
    pub q: u64,
    pub n: u32,
    pub spec: ConstructionSpec,
}

/// Largest n with q^n <= cap.
fn max_n(q: u64, cap: u64) -> u32 {
    let mut n = 0;
    let mut v: u64 = 1;
    while v.checked_mul(q).is_some_and(|next| next <= cap) {
        v *= q;
        n += 1;
    }
    n
}

/// Every valid parameter point of the family with q^n <= cap, in
/// lexicographic (q, n, t, k/l/m) order.
pub fn family_sweep(family: Family, qs: &[u64], cap: u64) -> Vec<SweepPoint> {
    let mut out = Vec::new();
    for &q in qs {
        let nmax = max_n(q, cap);
        match family {
            Family::PolyBasis => {
                for n in 2..=nmax {
                    for t in 2..=n {
                        if n % t != 0 {
                            continue;
                        }
                        for k in 1..t {
                            out.push(SweepPoint {
                                q,
                                n,
                                spec: ConstructionSpec::poly_basis(t, k),
                            });
                        }
                    }
                }
            }
            Family::MixedQ2 => {
                for n in (2..=nmax).filter(|n| n % 2 == 0) {
                    for t in 3..=n {
                        if n % (2 * t) != 0 {
                            continue;
                        }
                        for l in 1..t {
                            if 2 * l < t {
                                out.push(SweepPoint {
                                    q,
                                    n,
                                    spec: ConstructionSpec::mixed_q2(t, l),
                                });
                            }
                        }
                    }
                }
            }
            Family::RfwsMixed => {
                for n in 2..=nmax {
                    for t in 2..n {
                        if n % t != 0 {
                            continue;
                        }
                        let l = n / t - 1;
                        if l == 0 {
                            continue;
                        }
                        for m in 1..t {
                            if 2 * m + 1 >= t {
                                out.push(SweepPoint {
                                    q,
                                    n,
                                    spec: ConstructionSpec::rfws_mixed(t, l, m),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// The closed-form distribution for a sweep point.
pub fn formula_for(q: u64, n: u32, spec: &ConstructionSpec) -> Result<WeightDistribution> {
    match spec.family {
        Family::PolyBasis => family1_wd_formula(q, n, spec.t, spec.k),
        Family::MixedQ2 => family2_wd_formula(q, n, spec.l),
        Family::RfwsMixed => rfws_wd_formula(q, n, spec.t, spec.l, spec.m),
    }
}

/// Build the field for a prime-power q (errors on non-prime-powers).
pub fn field_for(q: u64, n: u32) -> Result<Arc<FieldSpec>> {
    let (p, e) = split_prime_power(q)
        .ok_or_else(|| Error::BadParams(format!("q = {q} is not a prime power")))?;
    build_field(p, e, n)
}

pub fn split_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// Deterministic xorshift generator for reproducible sampling.
pub(crate) struct DetRng(u64);

impl DetRng {
    pub(crate) fn new(seed: u64) -> DetRng {
        DetRng(seed | 1)
    }

    pub(crate) fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    pub(crate) fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

fn suite_trivial() -> Vec<Check> {
    const S: &str = "trivial";
    let mut out = Vec::new();
    let f = build_field(2, 1, 10).unwrap();
    let a = f.element_from_exp(123);
    out.push(Check::new(
        S,
        "additive-identity",
        f.add(a, f.zero()) == a,
        "a + 0 = a",
    ));
    out.push(Check::new(
        S,
        "multiplicative-identity",
        f.mul(a, f.one()) == a,
        "a * 1 = a",
    ));
    out.push(Check::new(
        S,
        "inverse-law",
        f.mul(a, f.inv(a).unwrap()) == f.one(),
        "a * a^-1 = 1",
    ));
    out.push(Check::new(
        S,
        "frobenius-fixes-at-0-and-n",
        f.frobenius(a, 0) == a && f.frobenius(a, 10) == a,
        "x^(q^0) = x = x^(q^n)",
    ));
    let s = mixed_q2_code(&f, 5, 2).unwrap();
    out.push(Check::new(
        S,
        "self-distance",
        s.distance(&s).unwrap() == 0,
        "d(S, S) = 0",
    ));
    out.push(Check::new(
        S,
        "unit-scaling",
        s.scalar_mul(f.one()).unwrap() == s,
        "1 * S = S",
    ));
    let re = Subspace::span_fq(&f, &s.basis_elements());
    out.push(Check::new(
        S,
        "canonical-idempotence",
        re == s,
        "re-spanning reproduces the matrix",
    ));
    out
}

struct KnownExample {
    name: &'static str,
    q: u64,
    n: u32,
    spec: ConstructionSpec,
    counts: &'static [u64],
    verdict: RfwsVerdict,
}

fn known_examples() -> Vec<KnownExample> {
    vec![
        KnownExample {
            name: "mixed-q2-n10-l2",
            q: 2,
            n: 10,
            spec: ConstructionSpec::mixed_q2(5, 2),
            counts: &[1, 2, 36, 24, 576, 384],
            verdict: RfwsVerdict::Rfws(0),
        },
        KnownExample {
            name: "mixed-q3-n10-l2",
            q: 3,
            n: 10,
            spec: ConstructionSpec::mixed_q2(5, 2),
            counts: &[1, 3, 144, 216, 11664, 17496],
            verdict: RfwsVerdict::Rfws(0),
        },
        KnownExample {
            name: "mixed-q5-n10-l2",
            q: 5,
            n: 10,
            spec: ConstructionSpec::mixed_q2(5, 2),
            counts: &[1, 5, 900, 3000, 562500, 1875000],
            verdict: RfwsVerdict::Rfws(0),
        },
        KnownExample {
            name: "rfws-q2-n10",
            q: 2,
            n: 10,
            spec: ConstructionSpec::rfws_mixed(5, 1, 2),
            counts: &[1, 6, 24, 992, 0, 0, 0, 0],
            verdict: RfwsVerdict::Rfws(4),
        },
        KnownExample {
            name: "rfws-q2-n16",
            q: 2,
            n: 16,
            spec: ConstructionSpec::rfws_mixed(4, 3, 2),
            counts: &[1, 6, 65528, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            verdict: RfwsVerdict::Rfws(12),
        },
        KnownExample {
            name: "rfws-q3-n9",
            q: 3,
            n: 9,
            spec: ConstructionSpec::rfws_mixed(3, 2, 2),
            counts: &[1, 9840, 0, 0, 0, 0, 0, 0, 0],
            verdict: RfwsVerdict::Rfws(7),
        },
    ]
}

fn suite_paper_examples() -> Vec<Check> {
    const S: &str = "paper-examples";
    let mut out = Vec::new();
    for ex in known_examples() {
        let run = || -> Result<(WeightDistribution, WeightDistribution)> {
            let field = field_for(ex.q, ex.n)?;
            let s = ex.spec.build(&field)?;
            let wd = crate::orbit::weight_distribution(&s)?;
            let formula = formula_for(ex.q, ex.n, &ex.spec)?;
            Ok((wd, formula))
        };
        match run() {
            Ok((wd, formula)) => {
                let pass = wd.counts() == ex.counts
                    && formula.counts() == ex.counts
                    && rfws_index(&wd) == ex.verdict;
                out.push(Check::new(
                    S,
                    ex.name,
                    pass,
                    format!("counts {:?}", wd.counts()),
                ));
            }
            Err(e) => out.push(Check::new(S, ex.name, false, format!("error: {e}"))),
        }
    }
    out
}

/// Oracle cap used by the CLI suite.
const ORACLE_CAP: u64 = 1 << 12;

fn suite_oracle() -> Vec<Check> {
    const S: &str = "oracle";
    let mut out = Vec::new();
    for family in [Family::PolyBasis, Family::MixedQ2, Family::RfwsMixed] {
        let points = family_sweep(family, &[2, 3], ORACLE_CAP);
        let mut mismatches = Vec::new();
        let total = points.len();
        for pt in points {
            let field = field_for(pt.q, pt.n).unwrap();
            let s = pt.spec.build(&field).unwrap();
            let fast = crate::orbit::weight_distribution(&s).unwrap();
            let naive = naive_weight_distribution(&s).unwrap();
            if fast != naive {
                mismatches.push(format!("q={} n={} {:?}", pt.q, pt.n, pt.spec));
            }
        }
        out.push(Check::new(
            S,
            format!("naive-vs-coset-{}", family.name()),
            mismatches.is_empty(),
            format!("{total} points, mismatches: {mismatches:?}"),
        ));
    }
    out
}

fn suite_congruence() -> Vec<Check> {
    const S: &str = "congruence";
    let mut out = Vec::new();
    for family in [Family::PolyBasis, Family::MixedQ2, Family::RfwsMixed] {
        let points = family_sweep(family, &[2, 3], ORACLE_CAP);
        let mut bad = Vec::new();
        let total = points.len();
        for pt in points {
            let field = field_for(pt.q, pt.n).unwrap();
            let s = pt.spec.build(&field).unwrap();
            let code = OrbitCode::new(s).unwrap();
            let wd = code.weight_distribution();
            if !congruence_filter(&wd, code.stab_degree()) {
                bad.push(format!("congruence q={} n={}", pt.q, pt.n));
            }
            let expect_total = field.mult_order() / (field.q().pow(code.stab_degree()) - 1);
            if wd.total() != expect_total {
                bad.push(format!("sum q={} n={}", pt.q, pt.n));
            }
        }
        out.push(Check::new(
            S,
            format!("stabilizer-constraints-{}", family.name()),
            bad.is_empty(),
            format!("{total} points, violations: {bad:?}"),
        ));
    }
    out
}

fn suite_decomposition() -> Vec<Check> {
    const S: &str = "decomposition";
    let mut out = Vec::new();
    for (q, n, t, l, m) in [(2u64, 10u32, 5u32, 1u32, 2u32), (3, 9, 3, 2, 2)] {
        let field = field_for(q, n).unwrap();
        let parts = rfws_mixed_parts(&field, t, l, m, None).unwrap();
        let s = &parts.subspace;

        // S ∩ bS = S̄ ⊕ (S_m ∩ b S_m) for every b in F_{q^t}^*
        let step = field.mult_order() / (q.pow(t) - 1);
        let mut ok = true;
        for idx in 0..(q.pow(t) - 1) {
            let b = field.element_from_exp(idx * step);
            let lhs = s.intersect(&s.scalar_mul(b).unwrap()).unwrap();
            let (rhs, _) = parts
                .sbar
                .sum(
                    &parts
                        .sm
                        .intersect(&parts.sm.scalar_mul(b).unwrap())
                        .unwrap(),
                )
                .unwrap();
            if lhs != rhs {
                ok = false;
                break;
            }
        }
        out.push(Check::new(
            S,
            format!("subfield-scalar-decomposition-q{q}-n{n}"),
            ok,
            format!("all {} subfield scalars", q.pow(t) - 1),
        ));

        // dim(S ∩ αS) <= 2m + t * dim_(F_q^t)(S̄ ∩ αS̄) for random α
        let mut rng = DetRng::new(0x5eed + q);
        let mut bound_ok = true;
        for _ in 0..500 {
            let alpha = field.element_from_exp(rng.below(field.mult_order()));
            let lhs = s.intersect(&s.scalar_mul(alpha).unwrap()).unwrap().dim();
            let sbar_dim = parts
                .sbar
                .intersect(&parts.sbar.scalar_mul(alpha).unwrap())
                .unwrap()
                .dim();
            if !sbar_dim.is_multiple_of(t as usize) || lhs > 2 * m as usize + sbar_dim {
                bound_ok = false;
                break;
            }
        }
        out.push(Check::new(
            S,
            format!("intersection-bound-q{q}-n{n}"),
            bound_ok,
            "500 random scalars",
        ));

        // dim(S ∩ μS) = t(l-1) + 2m for every μ outside F_{q^t}
        let expect = (t * (l - 1) + 2 * m) as usize;
        let mut const_ok = true;
        for j in 0..field.mult_order() {
            if j % step == 0 {
                continue;
            }
            let mu = field.element_from_exp(j);
            if s.intersect(&s.scalar_mul(mu).unwrap()).unwrap().dim() != expect {
                const_ok = false;
                break;
            }
        }
        out.push(Check::new(
            S,
            format!("off-subfield-intersection-q{q}-n{n}"),
            const_ok,
            format!("dim = {expect} off F_(q^{t})"),
        ));
    }
    out
}

/// Sample a nonzero element of F_{q^m} (as a subfield of `field`).
fn random_subfield_element(
    field: &FieldSpec,
    rng: &mut DetRng,
    m: u32,
    allow_zero: bool,
) -> FieldElement {
    let count = field.q().pow(m) - 1;
    let step = field.mult_order() / count;
    let span = if allow_zero { count + 1 } else { count };
    let idx = rng.below(span);
    if allow_zero && idx == count {
        FieldElement::ZERO
    } else {
        field.element_from_exp(idx * step)
    }
}

/// One random valid pair for the given case; resamples until coprime.
fn random_poly_pair(
    field: &Arc<FieldSpec>,
    rng: &mut DetRng,
    r: usize,
    even_case: bool,
) -> PolyPair {
    loop {
        let mut p1: Vec<FieldElement> = (0..r)
            .map(|_| random_subfield_element(field, rng, 2, true))
            .collect();
        p1.push(field.one());
        let p2 = if even_case {
            // leading coefficient in F_{q^2} \ F_q
            let mut v: Vec<FieldElement> = (0..r)
                .map(|_| random_subfield_element(field, rng, 2, true))
                .collect();
            let lead = loop {
                let c = random_subfield_element(field, rng, 2, false);
                if !field.is_in_subfield(c, 1).unwrap() {
                    break c;
                }
            };
            v.push(lead);
            v
        } else if rng.below(2) == 0 && r >= 1 {
            // degree exactly r with leading coefficient in F_q^*
            let mut v: Vec<FieldElement> = (0..r)
                .map(|_| random_subfield_element(field, rng, 2, true))
                .collect();
            v.push(random_subfield_element(field, rng, 1, false));
            v
        } else {
            // degree strictly below r
            let s = rng.below(r as u64) as usize;
            let mut v: Vec<FieldElement> = (0..s)
                .map(|_| random_subfield_element(field, rng, 2, true))
                .collect();
            v.push(random_subfield_element(field, rng, 2, false));
            v
        };
        if let Ok(pair) = PolyPair::new(field, p1, p2) {
            if pair.degree() == r {
                return pair;
            }
        }
    }
}

fn suite_mu_prediction() -> Vec<Check> {
    const S: &str = "mu-prediction";
    let mut out = Vec::new();
    for q in [2u64, 3] {
        for l in [1u32, 2] {
            let field = field_for(q, 10).unwrap();
            let s = mixed_q2_code(&field, 5, l).unwrap();
            let lambda = field.subfield_generator(10).unwrap();
            let sbar_gens: Vec<FieldElement> = (0..l)
                .map(|j| field.pow(lambda, j as i64).unwrap())
                .collect();
            let sbar = Subspace::span_subfield(&field, &sbar_gens, 2).unwrap();
            let mut rng = DetRng::new(0xabcd + q * 100 + l as u64);
            let mut failures = Vec::new();
            for trial in 0..200 {
                let even_case = l >= 2 && trial % 2 == 0;
                let max_r = if even_case { l - 1 } else { l } as u64;
                let r = 1 + rng.below(max_r) as usize;
                let pair = random_poly_pair(&field, &mut rng, r, even_case);
                let mu = pair.mu(&field, lambda).unwrap();
                let predicted = predict_mu_dim(&field, &pair, l).unwrap();
                let inter = s.intersect(&s.scalar_mul(mu).unwrap()).unwrap();
                if inter.dim() != predicted {
                    failures.push(format!(
                        "trial {trial}: predicted {predicted}, got {}",
                        inter.dim()
                    ));
                    continue;
                }
                if even_case {
                    let bar_inter = sbar.intersect(&sbar.scalar_mul(mu).unwrap()).unwrap();
                    if bar_inter != inter {
                        failures.push(format!("trial {trial}: S∩μS != S̄∩μS̄ in the even case"));
                    }
                }
            }
            // degenerate case: μ in F_{q^2} \ F_q gives dim 2l
            let step = field.mult_order() / (q * q - 1);
            let substep = field.mult_order() / (q - 1);
            for idx in 0..(q * q - 1) {
                let mu = field.element_from_exp(idx * step);
                if mu.exponent().unwrap().is_multiple_of(substep) {
                    continue; // μ in F_q
                }
                let d = s.intersect(&s.scalar_mul(mu).unwrap()).unwrap().dim();
                if d != 2 * l as usize {
                    failures.push(format!("μ in F_(q^2)\\F_q gave dim {d}"));
                }
            }
            out.push(Check::new(
                S,
                format!("rational-form-prediction-q{q}-l{l}"),
                failures.is_empty(),
                format!("200 sampled pairs; failures: {failures:?}"),
            ));
        }
    }
    out
}

fn suite_isometry() -> Vec<Check> {
    const S: &str = "isometry";
    let mut out = Vec::new();
    let cases: Vec<(u64, u32, ConstructionSpec)> = vec![
        (2, 10, ConstructionSpec::poly_basis(5, 3)),
        (2, 10, ConstructionSpec::mixed_q2(5, 2)),
        (2, 10, ConstructionSpec::rfws_mixed(5, 1, 2)),
        (3, 6, ConstructionSpec::poly_basis(3, 2)),
        (3, 6, ConstructionSpec::mixed_q2(3, 1)),
        (3, 6, ConstructionSpec::rfws_mixed(3, 1, 2)),
    ];
    for (q, n, spec) in cases {
        let field = field_for(q, n).unwrap();
        let s = spec.build(&field).unwrap();
        let mut rng = DetRng::new(0x150 + q * 31 + n as u64);
        let name = format!("{}-q{q}-n{n}", spec.family.name());

        if spec.family != Family::RfwsMixed {
            let mut pred_ok = true;
            for i in 0..n {
                for _ in 0..20 {
                    let alpha = field.element_from_exp(rng.below(field.mult_order()));
                    let psi = SemilinearMap::new(&field, i as i64, alpha).unwrap();
                    if predicted_image(&field, &spec, &psi).unwrap() != apply_map(&psi, &s) {
                        pred_ok = false;
                    }
                }
            }
            out.push(Check::new(
                S,
                format!("predicted-image-{name}"),
                pred_ok,
                "all Galois exponents, 20 multipliers each",
            ));
        }

        let wd = crate::orbit::weight_distribution(&s).unwrap();
        let mut orbit_ok = true;
        let mut wd_ok = true;
        for trial in 0..3u32 {
            let psi = SemilinearMap::new(
                &field,
                rng.below(n as u64) as i64,
                field.element_from_exp(rng.below(field.mult_order())),
            )
            .unwrap();
            if !orbit_image_check(&psi, &s).unwrap() {
                orbit_ok = false;
            }
            if crate::orbit::weight_distribution(&apply_map(&psi, &s)).unwrap() != wd {
                wd_ok = false;
            }
            let _ = trial;
        }
        out.push(Check::new(
            S,
            format!("orbit-image-{name}"),
            orbit_ok,
            "3 random maps",
        ));
        out.push(Check::new(
            S,
            format!("wd-invariance-{name}"),
            wd_ok,
            "3 random maps",
        ));

        // reflexivity / symmetry of the equivalence test
        let refl = frobenius_equivalent(&s, &s).unwrap().is_some();
        let image = apply_map(&SemilinearMap::new(&field, 1, field.gamma()).unwrap(), &s);
        let fwd = frobenius_equivalent(&s, &image).unwrap().is_some();
        let back = frobenius_equivalent(&image, &s).unwrap().is_some();
        out.push(Check::new(
            S,
            format!("equivalence-{name}"),
            refl && fwd && back,
            "reflexive and symmetric on a constructed image",
        ));
    }
    out
}

fn suite_coprime() -> Vec<Check> {
    const S: &str = "coprime";
    let mut out = Vec::new();
    let mut ratio_ok = true;
    let mut detail = String::new();
    for q in [2u64, 3, 4, 5] {
        for da in 0..=3usize {
            for db in 0..=3usize {
                if da == 0 && db == 0 {
                    continue;
                }
                let (coprime, total) = count_coprime_pairs(q, da, db, false, false).unwrap();
                if coprime * q != total * (q - 1) {
                    ratio_ok = false;
                    detail = format!("q={q} degrees ({da},{db}): {coprime}/{total}");
                }
            }
        }
    }
    out.push(Check::new(
        S,
        "ratio-one-minus-one-over-q",
        ratio_ok,
        if detail.is_empty() {
            "q in 2..=5, degrees 0..=3".into()
        } else {
            detail
        },
    ));
    let mut monic_ok = true;
    for q in [2u64, 3, 4, 5] {
        for r in [1u32, 2] {
            let (coprime, _) = count_coprime_pairs(q, r as usize, r as usize, true, true).unwrap();
            if coprime != q.pow(2 * r - 1) * (q - 1) {
                monic_ok = false;
            }
        }
    }
    out.push(Check::new(
        S,
        "monic-equal-degree-count",
        monic_ok,
        "q^(2r-1) (q-1) for r in {1, 2}",
    ));
    out
}

// ---------------------------------------------------------------------------
// Helper shared with the acceptance tests: stabilizer-aware invariant check
// ---------------------------------------------------------------------------

/// Sum and congruence invariants that every enumerated distribution obeys.
pub fn distribution_invariants_hold(
    field: &FieldSpec,
    code: &OrbitCode,
    wd: &WeightDistribution,
) -> bool {
    let d = code.stab_degree();
    let expect_total = field.mult_order() / (field.q().pow(d) - 1);
    wd.total() == expect_total && wd.counts()[0] == 1 && congruence_filter(wd, d)
}

/// Convenience used by tests: enumerate, histogram and sanity-check one spec.
pub fn checked_distribution(
    q: u64,
    n: u32,
    spec: &ConstructionSpec,
) -> Result<(Arc<FieldSpec>, OrbitCode, WeightDistribution)> {
    let field = field_for(q, n)?;
    let s = spec.build(&field)?;
    let code = OrbitCode::new(s)?;
    let wd = code.weight_distribution();
    if !distribution_invariants_hold(&field, &code, &wd) {
        return Err(Error::BadParams(format!(
            "distribution invariants violated at q={q}, n={n}, {:?}",
            spec
        )));
    }
    Ok((field, code, wd))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_enumerations_are_sorted_and_valid() {
        let pts = family_sweep(Family::PolyBasis, &[2, 3], 1 << 10);
        assert!(!pts.is_empty());
        let mut prev = (0u64, 0u32, 0u32, 0u32);
        for pt in &pts {
            let key = (pt.q, pt.n, pt.spec.t, pt.spec.k);
            assert!(key > prev, "sweep must be lexicographically increasing");
            prev = key;
            assert!(pt.spec.k < pt.spec.t && pt.n % pt.spec.t == 0);
        }
        for pt in family_sweep(Family::RfwsMixed, &[2], 1 << 12) {
            assert_eq!(pt.n, pt.spec.t * (pt.spec.l + 1));
            assert!(2 * pt.spec.m + 1 >= pt.spec.t);
        }
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nope").is_err());
    }

    #[test]
    fn trivial_suite_passes() {
        assert!(suite_trivial().iter().all(|c| c.pass));
    }

    #[test]
    fn coprime_suite_passes() {
        assert!(suite_coprime().iter().all(|c| c.pass));
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(split_prime_power(8), Some((2, 3)));
        assert_eq!(split_prime_power(9), Some((3, 2)));
        assert_eq!(split_prime_power(12), None);
        assert_eq!(split_prime_power(1), None);
    }
}
