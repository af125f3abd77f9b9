//! Serialization shapes for the CLI: versioned JSON records and CSV rows.

use serde::{Deserialize, Serialize};

use crate::constructions::{ConstructionSpec, Family};
use crate::error::{Error, Result};
use crate::gfext::{FieldElement, FieldSpec};
use crate::orbit::{RfwsVerdict, WeightDistribution};
use crate::subspace::Subspace;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
pub struct FieldJson {
    pub schema_version: u32,
    pub p: u64,
    pub e: u32,
    pub n: u32,
    /// Modulus coefficients over F_p, constant term first, monic.
    pub modulus: Vec<u32>,
    /// Coefficient sequence of the multiplicative generator.
    pub gamma: Vec<u32>,
    pub size: u64,
    /// Degrees of the subfields F_{q^m} ⊆ F_{q^n}: the divisors of n.
    pub subfield_degrees: Vec<u32>,
}

impl FieldJson {
    pub fn from_field(field: &FieldSpec) -> FieldJson {
        FieldJson {
            schema_version: SCHEMA_VERSION,
            p: field.p(),
            e: field.e(),
            n: field.n(),
            modulus: field.modulus().to_vec(),
            gamma: field.element_digits(field.gamma()),
            size: field.size(),
            subfield_degrees: field.divisors_of_n().to_vec(),
        }
    }
}

/// {"exp": j} for gamma^j, {"zero": true} for zero.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementJson {
    Exp { exp: u64 },
    Zero { zero: bool },
}

impl ElementJson {
    pub fn from_element(x: FieldElement) -> ElementJson {
        match x.exponent() {
            Some(exp) => ElementJson::Exp { exp },
            None => ElementJson::Zero { zero: true },
        }
    }

    pub fn to_element(self, field: &FieldSpec) -> FieldElement {
        match self {
            ElementJson::Exp { exp } => field.element_from_exp(exp),
            ElementJson::Zero { .. } => FieldElement::ZERO,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub k: usize,
    pub basis: Vec<Vec<u32>>,
}

impl SubspaceJson {
    pub fn from_subspace(s: &Subspace) -> SubspaceJson {
        SubspaceJson {
            k: s.dim(),
            basis: (0..s.dim()).map(|r| s.row(r).to_vec()).collect(),
        }
    }
}

/// "FWS" for r = 0, {"r": r} for r > 0, "none" when the pattern fails.
#[derive(Debug, Clone, Copy, Serialize)]
#[serde(untagged)]
pub enum VerdictJson {
    Named(&'static str),
    R { r: usize },
}

impl VerdictJson {
    pub fn from_verdict(v: RfwsVerdict) -> VerdictJson {
        match v {
            RfwsVerdict::Rfws(0) => VerdictJson::Named("FWS"),
            RfwsVerdict::Rfws(r) => VerdictJson::R { r },
            RfwsVerdict::NotRfws => VerdictJson::Named("none"),
        }
    }

    pub fn as_csv(&self) -> String {
        match self {
            VerdictJson::Named(s) => (*s).to_string(),
            VerdictJson::R { r } => format!("rFWS({r})"),
        }
    }
}

/// The canonical wire form of a computed distribution.
#[derive(Debug, Serialize)]
pub struct WeightDistributionJson {
    pub k: usize,
    pub counts: Vec<u64>,
    pub orbit_size: u64,
    pub stab_degree: u32,
    pub verdict: VerdictJson,
}

#[derive(Debug, Serialize)]
pub struct WeightsJson {
    pub schema_version: u32,
    pub q: u64,
    pub n: u32,
    pub family: &'static str,
    pub t: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    pub distribution: WeightDistributionJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula_counts: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula_match: Option<bool>,
    pub runtime_ms: u64,
}

#[derive(Debug, Serialize)]
pub struct EquivJson {
    pub schema_version: u32,
    pub equivalent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frob: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_exp: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct CheckJson {
    pub suite: String,
    pub check: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct VerifyJson {
    pub schema_version: u32,
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckJson>,
}

/// One sweep row; the CSV header is
/// `schema_version,family,q,n,t,k,l,m,match,verdict,orbit_size,runtime_ms`.
#[derive(Debug, Serialize)]
pub struct SweepRow {
    pub schema_version: u32,
    pub family: &'static str,
    pub q: u64,
    pub n: u32,
    pub t: u32,
    pub k: Option<u32>,
    pub l: Option<u32>,
    pub m: Option<u32>,
    pub formula_match: bool,
    pub verdict: VerdictJson,
    pub orbit_size: u64,
    pub runtime_ms: u64,
}

pub const SWEEP_CSV_HEADER: &str =
    "schema_version,family,q,n,t,k,l,m,match,verdict,orbit_size,runtime_ms";

impl SweepRow {
    pub fn as_csv(&self) -> String {
        fn opt(v: Option<u32>) -> String {
            v.map(|x| x.to_string()).unwrap_or_default()
        }
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.schema_version,
            self.family,
            self.q,
            self.n,
            self.t,
            opt(self.k),
            opt(self.l),
            opt(self.m),
            self.formula_match,
            self.verdict.as_csv(),
            self.orbit_size,
            self.runtime_ms
        )
    }
}

/// Wire form of a construction spec: optional exponents instead of elements.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConstructionJson {
    pub family: String,
    pub t: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_exp: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_exp: Option<u64>,
}

impl ConstructionJson {
    pub fn to_spec(&self, field: &FieldSpec) -> Result<ConstructionSpec> {
        let family = Family::parse(&self.family)?;
        let need = |v: Option<u32>, name: &str| {
            v.ok_or_else(|| Error::BadParams(format!("family {} needs --{name}", self.family)))
        };
        let mut spec = match family {
            Family::PolyBasis => ConstructionSpec::poly_basis(self.t, need(self.k, "k")?),
            Family::MixedQ2 => ConstructionSpec::mixed_q2(self.t, need(self.l, "l")?),
            Family::RfwsMixed => {
                ConstructionSpec::rfws_mixed(self.t, need(self.l, "l")?, need(self.m, "m")?)
            }
        };
        if let Some(b) = self.b_exp {
            spec = spec.with_b(field.element_from_exp(b));
        }
        if let Some(le) = self.lambda_exp {
            spec = spec.with_lambda(field.element_from_exp(le));
        }
        Ok(spec)
    }
}

/// Assemble the weights report for a built construction.
pub fn weights_report(
    field: &FieldSpec,
    spec: &ConstructionSpec,
    stab_degree: u32,
    orbit_size: u64,
    wd: &WeightDistribution,
    formula: Option<&WeightDistribution>,
    runtime_ms: u64,
) -> WeightsJson {
    let verdict = VerdictJson::from_verdict(crate::orbit::rfws_index(wd));
    WeightsJson {
        schema_version: SCHEMA_VERSION,
        q: field.q(),
        n: field.n(),
        family: spec.family.name(),
        t: spec.t,
        k: (spec.family == Family::PolyBasis).then_some(spec.k),
        l: (spec.family != Family::PolyBasis).then_some(spec.l),
        m: (spec.family == Family::RfwsMixed).then_some(spec.m),
        distribution: WeightDistributionJson {
            k: wd.k(),
            counts: wd.counts().to_vec(),
            orbit_size,
            stab_degree,
            verdict,
        },
        formula_counts: formula.map(|f| f.counts().to_vec()),
        formula_match: formula.map(|f| f == wd),
        runtime_ms,
    }
}
