//! The certificate document: `{schema_version, payload, checksum}`.
//!
//! Canonical bytes are compact JSON with object keys sorted; the checksum is
//! the SHA-256 of the canonical payload, hex encoded.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use unram_core::extalg::PureElement;
use unram_core::pipeline::{Certificate, CheckResult, CitedClaim, DimensionSummary, Varieties};
use unram_core::plans::{NormEquation, PlanNode, PlanStep, RostPlan};
use unram_core::quadforms::{DiagonalForm, QuadricEquation, SignedMonomial};
use unram_core::{binomial, Blade, Monomial, MonomialSymbol, Multivector, Prime, Space, Subspace, Vector};

use crate::CliError;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    pub schema_version: String,
    pub payload: Value,
    pub checksum: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Params {
    pub n: usize,
    pub ell: u32,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FieldSetup {
    pub base_generators: Vec<String>,
    pub extension_generators: Vec<String>,
}

/// Terms are `[[i_1, …, i_p], c]` with 1-based increasing indices.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct MultivectorDto {
    pub dim: usize,
    pub degree: usize,
    pub space: String,
    pub terms: Vec<(Vec<usize>, u32)>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SubspaceDto {
    pub dim: usize,
    pub degree: usize,
    pub space: String,
    pub dimension: usize,
    /// Reduced row-echelon basis.
    pub basis: Vec<MultivectorDto>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PureElementDto {
    pub element: MultivectorDto,
    /// Coordinates of each dual factor.
    pub factors: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SymbolDto {
    /// Exponent matrix over the generators `s_j = t_j^ℓ`.
    pub exponents: Vec<Vec<i64>>,
    pub text: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SignedMonomialDto {
    pub sign: i8,
    pub exponents: Vec<i64>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct QuadricDto {
    /// Symbol entries over `t_j`.
    pub entries: Vec<Vec<i64>>,
    pub coefficients: Vec<SignedMonomialDto>,
    pub variables: usize,
    pub projective_dimension: usize,
    pub polynomial: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum PlanNodeDto {
    SeveriBrauer {
        covers: usize,
        first: Vec<i64>,
        second: Vec<i64>,
        dim: u64,
    },
    Norm {
        covers: usize,
        parameter: Vec<i64>,
        multiplicity: u32,
        stated_quotient_degree: u32,
        split_model: String,
        dim: u64,
    },
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RostPlanDto {
    pub slots: Vec<Vec<i64>>,
    pub nodes: Vec<PlanNodeDto>,
    pub dimension: u64,
    pub description: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(tag = "kind", content = "items", rename_all = "kebab-case", deny_unknown_fields)]
pub enum VarietiesDto {
    SmallPfisterQuadrics(Vec<QuadricDto>),
    RostPlans(Vec<RostPlanDto>),
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct DimsDto {
    pub per_variety: Vec<u64>,
    pub base: u64,
    pub total: u64,
    pub lower_bound: u64,
    pub meets_lower_bound: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CheckDto {
    pub name: String,
    pub passed: bool,
    pub evidence: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ClaimDto {
    pub id: String,
    pub statement: String,
    pub reference: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Payload {
    pub params: Params,
    pub field_setup: FieldSetup,
    pub omega: MultivectorDto,
    pub s_perp: SubspaceDto,
    #[serde(rename = "basis_I")]
    pub basis_i: Vec<PureElementDto>,
    pub symbols: Vec<SymbolDto>,
    pub varieties: VarietiesDto,
    pub dims: DimsDto,
    pub checks: Vec<CheckDto>,
    pub conventions: std::collections::BTreeMap<String, String>,
    /// 1-based positions in `basis_I`, in the order the varieties are adjoined.
    pub induction_order: Vec<usize>,
    pub cited_claims: Vec<ClaimDto>,
}

/// Compact JSON with sorted keys.
pub fn canonical_bytes(value: &Value) -> Vec<u8> {
    // serde_json's Map is ordered by key unless `preserve_order` is enabled
    serde_json::to_vec(value).expect("a Value always serializes")
}

pub fn checksum(payload: &Value) -> String {
    hex::encode(Sha256::digest(canonical_bytes(payload)))
}

fn space_tag(space: Space) -> String {
    space.tag().to_string()
}

fn parse_space(tag: &str) -> Result<Space, CliError> {
    match tag {
        "V" => Ok(Space::Primal),
        "V-dual" => Ok(Space::Dual),
        other => Err(CliError::Malformed(format!("unknown space tag `{other}`"))),
    }
}

fn mv_to_dto(w: &Multivector) -> MultivectorDto {
    MultivectorDto {
        dim: w.dim(),
        degree: w.degree(),
        space: space_tag(w.space()),
        terms: w.terms().map(|(b, c)| (b.indices().map(|i| i + 1).collect(), c)).collect(),
    }
}

fn mv_from_dto(d: &MultivectorDto, p: Prime) -> Result<Multivector, CliError> {
    let space = parse_space(&d.space)?;
    let mut terms = Vec::with_capacity(d.terms.len());
    let mut last: Option<Blade> = None;
    for (idx, c) in &d.terms {
        if idx.len() != d.degree {
            return Err(CliError::Malformed(format!("term {idx:?} does not have degree {}", d.degree)));
        }
        if idx.iter().any(|&i| i == 0 || i > d.dim) {
            return Err(CliError::Malformed(format!("term {idx:?} has an index outside 1..={}", d.dim)));
        }
        let zero_based: Vec<usize> = idx.iter().map(|i| i - 1).collect();
        let blade = Blade::from_indices(&zero_based)
            .map_err(|_| CliError::Malformed(format!("term {idx:?} is not strictly increasing")))?;
        if *c == 0 || *c >= p.get() {
            return Err(CliError::Malformed(format!("coefficient {c} of {idx:?} is not a nonzero residue mod {p}")));
        }
        if last.is_some_and(|l| l >= blade) {
            return Err(CliError::Malformed("terms are not in increasing key order".into()));
        }
        last = Some(blade);
        terms.push((blade, *c as i64));
    }
    Multivector::from_terms(p, d.dim, d.degree, space, terms).map_err(|e| CliError::Malformed(e.to_string()))
}

fn subspace_to_dto(s: &Subspace) -> SubspaceDto {
    SubspaceDto {
        dim: s.dim(),
        degree: s.degree(),
        space: space_tag(s.space()),
        dimension: s.dimension(),
        basis: s.basis().iter().map(mv_to_dto).collect(),
    }
}

fn subspace_from_dto(d: &SubspaceDto, p: Prime) -> Result<Subspace, CliError> {
    let space = parse_space(&d.space)?;
    let rows = d.basis.iter().map(|b| mv_from_dto(b, p)).collect::<Result<Vec<_>, _>>()?;
    let s = Subspace::span(p, d.dim, d.degree, space, &rows).map_err(|e| CliError::Malformed(e.to_string()))?;
    if s.basis() != rows || s.dimension() != d.dimension {
        return Err(CliError::Malformed("subspace basis is not in reduced row-echelon form".into()));
    }
    Ok(s)
}

fn monomial_exps(m: &Monomial) -> Vec<i64> {
    m.exponents().to_vec()
}

fn monomial_from(exps: &[i64], m: usize) -> Result<Monomial, CliError> {
    if exps.len() != m {
        return Err(CliError::Malformed(format!("exponent vector of length {} in {m} variables", exps.len())));
    }
    Ok(Monomial::new(exps.to_vec()))
}

fn quadric_to_dto(q: &QuadricEquation) -> QuadricDto {
    QuadricDto {
        entries: q.entries.iter().map(monomial_exps).collect(),
        coefficients: q
            .form
            .coeffs()
            .iter()
            .map(|c| SignedMonomialDto {
                sign: if c.negative { -1 } else { 1 },
                exponents: monomial_exps(&c.monomial),
            })
            .collect(),
        variables: q.variables(),
        projective_dimension: q.projective_dimension(),
        polynomial: q.form.to_string(),
    }
}

fn quadric_from_dto(d: &QuadricDto, m: usize) -> Result<QuadricEquation, CliError> {
    let coeffs = d
        .coefficients
        .iter()
        .map(|c| {
            let negative = match c.sign {
                1 => false,
                -1 => true,
                s => return Err(CliError::Malformed(format!("coefficient sign {s} is not ±1"))),
            };
            Ok(SignedMonomial {
                negative,
                monomial: monomial_from(&c.exponents, m)?,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.len() < 2 {
        return Err(CliError::Malformed("a quadric needs at least two coefficients".into()));
    }
    Ok(QuadricEquation {
        form: DiagonalForm::new(m, coeffs).map_err(|e| CliError::Malformed(e.to_string()))?,
        entries: d.entries.iter().map(|e| monomial_from(e, m)).collect::<Result<_, _>>()?,
    })
}

fn plan_to_dto(plan: &RostPlan) -> RostPlanDto {
    let names = unram_core::monomial::t_names(plan.num_vars);
    RostPlanDto {
        slots: plan.slots.iter().map(monomial_exps).collect(),
        nodes: plan
            .nodes
            .iter()
            .map(|node| match &node.step {
                PlanStep::SeveriBrauer { first, second } => PlanNodeDto::SeveriBrauer {
                    covers: node.covers,
                    first: monomial_exps(first),
                    second: monomial_exps(second),
                    dim: node.dim,
                },
                PlanStep::Norm { equation } => PlanNodeDto::Norm {
                    covers: node.covers,
                    parameter: monomial_exps(&equation.parameter),
                    multiplicity: equation.multiplicity,
                    stated_quotient_degree: equation.stated_quotient_degree,
                    split_model: equation.polynomial(&names),
                    dim: node.dim,
                },
            })
            .collect(),
        dimension: plan.dimension(),
        description: plan.describe(),
    }
}

fn plan_from_dto(d: &RostPlanDto, p: Prime, m: usize) -> Result<RostPlan, CliError> {
    let nodes = d
        .nodes
        .iter()
        .map(|node| {
            Ok(match node {
                PlanNodeDto::SeveriBrauer {
                    covers,
                    first,
                    second,
                    dim,
                } => PlanNode {
                    covers: *covers,
                    step: PlanStep::SeveriBrauer {
                        first: monomial_from(first, m)?,
                        second: monomial_from(second, m)?,
                    },
                    dim: *dim,
                },
                PlanNodeDto::Norm {
                    covers,
                    parameter,
                    multiplicity,
                    stated_quotient_degree,
                    dim,
                    ..
                } => {
                    if *multiplicity == 0 {
                        return Err(CliError::Malformed("norm multiplicity 0".into()));
                    }
                    PlanNode {
                        covers: *covers,
                        step: PlanStep::Norm {
                            equation: NormEquation {
                                multiplicity: *multiplicity,
                                parameter: monomial_from(parameter, m)?,
                                stated_quotient_degree: *stated_quotient_degree,
                            },
                        },
                        dim: *dim,
                    }
                }
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    if nodes.is_empty() {
        return Err(CliError::Malformed("a plan needs at least one node".into()));
    }
    Ok(RostPlan {
        ell: p,
        num_vars: m,
        slots: d.slots.iter().map(|s| monomial_from(s, m)).collect::<Result<_, _>>()?,
        nodes,
    })
}

pub fn payload_from_certificate(c: &Certificate) -> Payload {
    Payload {
        params: Params {
            n: c.n,
            ell: c.ell.get(),
        },
        field_setup: FieldSetup {
            base_generators: c.base_generators.clone(),
            extension_generators: c.extension_generators.clone(),
        },
        omega: mv_to_dto(&c.omega),
        s_perp: subspace_to_dto(&c.s_perp),
        basis_i: c
            .basis
            .iter()
            .map(|b| PureElementDto {
                element: mv_to_dto(&b.element),
                factors: b.factors.iter().map(|f| f.coords().to_vec()).collect(),
            })
            .collect(),
        symbols: c
            .symbols
            .iter()
            .map(|s| SymbolDto {
                exponents: s.exponent_matrix(),
                text: symbol_text(s),
            })
            .collect(),
        varieties: match &c.varieties {
            Varieties::Quadrics(q) => VarietiesDto::SmallPfisterQuadrics(q.iter().map(quadric_to_dto).collect()),
            Varieties::RostPlans(r) => VarietiesDto::RostPlans(r.iter().map(plan_to_dto).collect()),
        },
        dims: DimsDto {
            per_variety: c.dims.per_variety.clone(),
            base: c.dims.base,
            total: c.dims.total,
            lower_bound: c.dims.lower_bound,
            meets_lower_bound: c.dims.meets_lower_bound,
        },
        checks: c
            .checks
            .iter()
            .map(|k| CheckDto {
                name: k.name.clone(),
                passed: k.passed,
                evidence: k.evidence.clone(),
            })
            .collect(),
        conventions: c.conventions.iter().cloned().collect(),
        induction_order: (1..=c.basis.len()).collect(),
        cited_claims: c
            .cited_claims
            .iter()
            .map(|k| ClaimDto {
                id: k.id.clone(),
                statement: k.statement.clone(),
                reference: k.reference.clone(),
            })
            .collect(),
    }
}

/// `{s1*s3, s2}`-style text over the generators `s_j = t_j^ℓ` of `k`.
fn symbol_text(s: &MonomialSymbol) -> String {
    let names: Vec<String> = (1..=s.num_vars()).map(|j| format!("s{j}")).collect();
    let parts: Vec<String> = s.slots().iter().map(|m| m.display_with(&names).to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn certificate_from_payload(d: &Payload) -> Result<Certificate, CliError> {
    let n = d.params.n;
    let p = Prime::new(d.params.ell)
        .map_err(|_| CliError::Malformed(format!("ell = {} is not prime", d.params.ell)))?;
    if n < 2 || 2 * n > unram_core::extalg::MAX_DIM {
        return Err(CliError::Malformed(format!("n = {n} is out of range")));
    }
    let m = 2 * n;
    let omega = mv_from_dto(&d.omega, p)?;
    let s_perp = subspace_from_dto(&d.s_perp, p)?;
    let basis = d
        .basis_i
        .iter()
        .map(|b| {
            let element = mv_from_dto(&b.element, p)?;
            let factors = b
                .factors
                .iter()
                .map(|f| {
                    if f.len() != m || f.iter().any(|&c| c >= p.get()) {
                        return Err(CliError::Malformed(format!("factor {f:?} is not a vector of F_{p}^{m}")));
                    }
                    Ok(Vector::from_residues(p, Space::Dual, f.clone()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(PureElement { element, factors })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let symbols = d
        .symbols
        .iter()
        .map(|s| {
            if s.exponents.iter().any(|r| r.len() != m) {
                return Err(CliError::Malformed(format!("symbol exponent rows must have length {m}")));
            }
            MonomialSymbol::from_exponents(p, m, s.exponents.clone()).map_err(|e| CliError::Malformed(e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let varieties = match &d.varieties {
        VarietiesDto::SmallPfisterQuadrics(q) => {
            Varieties::Quadrics(q.iter().map(|x| quadric_from_dto(x, m)).collect::<Result<_, _>>()?)
        }
        VarietiesDto::RostPlans(r) => {
            Varieties::RostPlans(r.iter().map(|x| plan_from_dto(x, p, m)).collect::<Result<_, _>>()?)
        }
    };
    let cert = Certificate {
        n,
        ell: p,
        base_generators: d.field_setup.base_generators.clone(),
        extension_generators: d.field_setup.extension_generators.clone(),
        omega,
        s_perp,
        basis,
        symbols,
        varieties,
        dims: DimensionSummary {
            per_variety: d.dims.per_variety.clone(),
            base: d.dims.base,
            total: d.dims.total,
            lower_bound: d.dims.lower_bound,
            meets_lower_bound: d.dims.meets_lower_bound,
        },
        checks: d
            .checks
            .iter()
            .map(|k| CheckResult {
                name: k.name.clone(),
                passed: k.passed,
                evidence: k.evidence.clone(),
            })
            .collect(),
        conventions: d.conventions.clone().into_iter().collect(),
        cited_claims: d
            .cited_claims
            .iter()
            .map(|k| CitedClaim {
                id: k.id.clone(),
                statement: k.statement.clone(),
                reference: k.reference.clone(),
            })
            .collect(),
    };
    Ok(cert)
}

/// Names the first payload section whose display-only fields (polynomials,
/// descriptions, symbol text, induction order) disagree with the data they
/// are derived from.
pub fn display_mismatch(d: &Payload, cert: &Certificate) -> Option<String> {
    let fresh = payload_from_certificate(cert);
    if fresh == *d {
        return None;
    }
    let a = serde_json::to_value(&fresh).expect("payload serializes");
    let b = serde_json::to_value(d).expect("payload serializes");
    let key = a
        .as_object()
        .and_then(|a| a.iter().find(|(k, v)| b.get(k.as_str()) != Some(v)).map(|(k, _)| k.clone()))
        .unwrap_or_default();
    Some(format!("display fields in `{key}` do not match their data"))
}

pub fn document_from_certificate(c: &Certificate) -> CertificateDocument {
    let payload = serde_json::to_value(payload_from_certificate(c)).expect("payload serializes");
    let checksum = checksum(&payload);
    CertificateDocument {
        schema_version: SCHEMA_VERSION.into(),
        payload,
        checksum,
    }
}

impl CertificateDocument {
    pub fn to_canonical_string(&self) -> String {
        let value = serde_json::to_value(self).expect("document serializes");
        String::from_utf8(canonical_bytes(&value)).expect("JSON is UTF-8")
    }

    pub fn parse(text: &str) -> Result<CertificateDocument, CliError> {
        let doc: CertificateDocument =
            serde_json::from_str(text).map_err(|e| CliError::Malformed(format!("invalid document: {e}")))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(CliError::Malformed(format!("unsupported schema_version `{}`", doc.schema_version)));
        }
        Ok(doc)
    }

    pub fn checksum_matches(&self) -> bool {
        checksum(&self.payload) == self.checksum
    }

    pub fn decode(&self) -> Result<(Payload, Certificate), CliError> {
        let payload: Payload = serde_json::from_value(self.payload.clone())
            .map_err(|e| CliError::Malformed(format!("invalid payload: {e}")))?;
        if payload.omega.dim != 2 * payload.params.n {
            return Err(CliError::Malformed("omega lives in the wrong dimension".into()));
        }
        if payload.s_perp.dimension > binomial(2 * payload.params.n, payload.params.n) {
            return Err(CliError::Malformed("s_perp is larger than its ambient space".into()));
        }
        let cert = certificate_from_payload(&payload)?;
        Ok((payload, cert))
    }
}
