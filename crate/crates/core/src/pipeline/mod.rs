//! The degree-n construction: `V = F_ℓ^{2n}`,
//! `ω = v_1∧…∧v_n + v_{n+1}∧…∧v_{2n}`, `S = span ω`, a pure-wedge basis `I` of
//! `S^⊥`, the symbols `φ̂^n(s)` over `k = ℂ(t_1^ℓ, …, t_{2n}^ℓ)`, and one
//! splitting variety per symbol (small Pfister quadrics for ℓ = 2, Rost
//! plans otherwise).
//!
//! A [`Certificate`] records all of it. [`verify_certificate`] re-derives every
//! computable hypothesis from `(n, ℓ)` alone and compares; the theorems that
//! turn those hypotheses into non-vanishing of unramified cohomology are
//! listed as [`CitedClaim`]s.

mod verify;

use alloc::string::String;
use alloc::vec::Vec;

pub use verify::{verify_certificate, CheckResult, VerificationReport};

use crate::error::{Error, Result};
use crate::extalg::{pure_wedge_basis, Blade, Multivector, PureElement, Space, Subspace, DEFAULT_SEARCH_CAP, DEFAULT_S_DEC_CAP};
use crate::field::Prime;
use crate::monomial::Monomial;
use crate::plans::{plan_dimension, rost_plan, RostPlan};
use crate::quadforms::{small_pfister_quadric, QuadricEquation};
use crate::symbols::{symbol_from_factors, MonomialSymbol};

/// Size and search limits.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Largest `n` accepted; `C(2n, n)` is the dimension of `Λ^n V`.
    pub max_n: usize,
    pub search_cap: u64,
    pub s_dec_cap: u128,
}

pub const DEFAULT_MAX_N: usize = 6;

impl Default for Config {
    fn default() -> Self {
        Config {
            max_n: DEFAULT_MAX_N,
            search_cap: DEFAULT_SEARCH_CAP,
            s_dec_cap: DEFAULT_S_DEC_CAP,
        }
    }
}

impl Config {
    pub fn check_size(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::CapExceeded {
                what: "construction size n",
                needed: n as u128,
                cap: self.max_n as u128,
            });
        }
        if 2 * n > crate::extalg::MAX_DIM {
            return Err(Error::DimensionTooLarge(2 * n));
        }
        Ok(())
    }
}

/// The splitting varieties attached to the symbols, in basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Varieties {
    Quadrics(Vec<QuadricEquation>),
    RostPlans(Vec<RostPlan>),
}

impl Varieties {
    pub fn len(&self) -> usize {
        match self {
            Varieties::Quadrics(q) => q.len(),
            Varieties::RostPlans(r) => r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dimensions(&self) -> Vec<u64> {
        match self {
            Varieties::Quadrics(q) => q.iter().map(|q| q.projective_dimension() as u64).collect(),
            Varieties::RostPlans(r) => r.iter().map(plan_dimension).collect(),
        }
    }
}

/// Dimension bookkeeping for the total space `X` with `ℂ(X) = K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionSummary {
    pub per_variety: Vec<u64>,
    /// Transcendence degree of `k` over `ℂ`, i.e. `2n`.
    pub base: u64,
    /// `base + Σ per_variety`.
    pub total: u64,
    /// `ℓ^n − 1 + 2n`.
    pub lower_bound: u64,
    pub meets_lower_bound: bool,
}

/// A theorem the certificate relies on without computing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CitedClaim {
    pub id: String,
    pub statement: String,
    pub reference: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub n: usize,
    pub ell: Prime,
    /// Generators of `k` and of `k'`, as text.
    pub base_generators: Vec<String>,
    pub extension_generators: Vec<String>,
    pub omega: Multivector,
    pub s_perp: Subspace,
    pub basis: Vec<PureElement>,
    /// `φ̂^n(s)` for `s` in `basis`, written over the generators `s_j = t_j^ℓ`.
    pub symbols: Vec<MonomialSymbol>,
    pub varieties: Varieties,
    pub dims: DimensionSummary,
    pub checks: Vec<CheckResult>,
    pub conventions: Vec<(String, String)>,
    pub cited_claims: Vec<CitedClaim>,
}

pub fn omega(n: usize, ell: Prime) -> Result<Multivector> {
    let m = 2 * n;
    let first = Multivector::basis(ell, m, Space::Primal, Blade::range(0, n))?;
    let second = Multivector::basis(ell, m, Space::Primal, Blade::range(n, m))?;
    first.add(&second)
}

/// The explicit spanning set of `S^⊥`: index wedges `e_J^∨` for
/// `J ∉ {(1..n), (n+1..2n)}` together with `e_{1..n}^∨ − e_{n+1..2n}^∨`.
pub fn displayed_s_perp(n: usize, ell: Prime) -> Result<Vec<Multivector>> {
    let m = 2 * n;
    let low = Blade::range(0, n);
    let high = Blade::range(n, m);
    let mut out = Vec::new();
    for b in crate::extalg::blades(m, n) {
        if b != low && b != high {
            out.push(Multivector::basis(ell, m, Space::Dual, b)?);
        }
    }
    out.push(
        Multivector::basis(ell, m, Space::Dual, low)?.sub(&Multivector::basis(ell, m, Space::Dual, high)?)?,
    );
    Ok(out)
}

pub fn field_generators(n: usize, ell: Prime) -> (Vec<String>, Vec<String>) {
    let base = (1..=2 * n).map(|j| alloc::format!("t{j}^{ell}")).collect();
    let ext = (1..=2 * n).map(|j| alloc::format!("t{j}")).collect();
    (base, ext)
}

/// Entries of a symbol over `k` rewritten in the variables `t_j`.
pub fn t_entries(symbol: &MonomialSymbol) -> Vec<Monomial> {
    let l = symbol.modulus().get() as i64;
    symbol.slots().iter().map(|s| s.pow(l)).collect()
}

pub fn varieties_for(ell: Prime, symbols: &[MonomialSymbol]) -> Result<Varieties> {
    if ell.get() == 2 {
        symbols
            .iter()
            .map(|s| small_pfister_quadric(s.num_vars(), &t_entries(s)))
            .collect::<Result<_>>()
            .map(Varieties::Quadrics)
    } else {
        symbols
            .iter()
            .map(|s| rost_plan(s.num_vars(), &t_entries(s), ell))
            .collect::<Result<_>>()
            .map(Varieties::RostPlans)
    }
}

/// Dimension of each variety from its closed form: `2^{n−1} − 1` for small
/// Pfister quadrics, `ℓ^{n−1} − 1` for Rost varieties.
pub fn closed_form_variety_dimension(n: usize, ell: Prime) -> u64 {
    if ell.get() == 2 {
        (1u64 << (n - 1)) - 1
    } else {
        crate::plans::rost_dimension(n as u32, ell.get() as u64)
    }
}

pub fn dimension_summary(n: usize, ell: Prime, per_variety: Vec<u64>) -> DimensionSummary {
    let base = 2 * n as u64;
    let total = base + per_variety.iter().sum::<u64>();
    let lower_bound = (ell.get() as u64).pow(n as u32) - 1 + base;
    DimensionSummary {
        per_variety,
        base,
        total,
        lower_bound,
        meets_lower_bound: total >= lower_bound,
    }
}

/// Per-variety dimensions, the total `2n + Σ dims`, and the comparison with
/// `ℓ^n − 1 + 2n`, recomputed from the certificate's varieties.
pub fn expected_dimension(cert: &Certificate) -> DimensionSummary {
    dimension_summary(cert.n, cert.ell, cert.varieties.dimensions())
}

pub fn conventions(n: usize, ell: Prime) -> Vec<(String, String)> {
    let pairs: [(&str, String); 4] = [
        (
            "duality",
            "Λ^i(V^∨) ≅ (Λ^i V)^∨ via f_1∧…∧f_i ↦ Σ_σ sgn(σ) f_1(v_σ(1))⋯f_i(v_σ(i)); \
             index bases are dual"
                .into(),
        ),
        (
            "s-perp-basis",
            alloc::format!(
                "e_J^∨ for J ∉ {{(1..{n}), ({}..{})}} and e_1..{n}^∨ − e_{}..{}^∨",
                n + 1,
                2 * n,
                n + 1,
                2 * n
            ),
        ),
        ("symbol-generators", alloc::format!("symbol exponents are over s_j = t_j^{ell}")),
        (
            "induction-order",
            "varieties are adjoined to k in basis order".into(),
        ),
    ];
    let mut out: Vec<(String, String)> = pairs.into_iter().map(|(k, v)| (String::from(k), v)).collect();
    out.sort();
    out
}

pub fn cited_claims(n: usize, ell: Prime) -> Vec<CitedClaim> {
    let claim = |id: &str, statement: String, reference: &str| CitedClaim {
        id: id.into(),
        statement,
        reference: reference.into(),
    };
    let mut out = Vec::new();
    if ell.get() == 2 {
        out.push(claim(
            "quadric-kernel",
            alloc::format!(
                "for a nontrivial symbol a of length {n}, H^i(k, Z/2) → H^i_ur(Q_a/k) is an \
                 isomorphism for i < {n} and its kernel in degree {n} is Z/2 generated by a"
            ),
            "Orlov–Vishik–Voevodsky",
        ));
        out.push(claim(
            "low-degree-vanishing",
            alloc::format!("H^i_ur(X/C, μ_m^{{⊗i}}) = 0 for i < {n} and every m ≥ 2"),
            "vanishing for products of small Pfister quadrics; transfer for odd m",
        ));
        out.push(claim(
            "unirational",
            "each Q_s has a k'-point, so K has a degree-2 extension purely transcendental over C".into(),
            "rationality of isotropic quadrics",
        ));
    } else {
        out.push(claim(
            "rost-variety-kernel",
            alloc::format!(
                "for a symbol a of length {n}, the kernel of H^{n}(k, μ_{ell}^{{⊗{n}}}) → \
                 H^{n}_ur(Y_a/k) is generated by the class of a"
            ),
            "Merkurjev–Suslin; Rost variety existence",
        ));
        out.push(claim(
            "rationally-connected",
            "smooth projective models of K over C are rationally connected".into(),
            "norm-variety construction preserves rational connectivity",
        ));
    }
    out.push(claim(
        "product-kernel",
        "adjoining the varieties one at a time in basis order, the kernel of \
         H^n(k) → H^n(K) is generated by the symbols of I, so ker φ^n_K = S^⊥"
            .into(),
        "induction on the number of symbols",
    ));
    out.push(claim(
        "unramified-criterion",
        "a functional on S vanishing on S_dec maps to an unramified class; \
         S_dec ≠ S gives H^n_ur(K/C, μ_ℓ^{⊗n}) ≠ 0"
            .into(),
        "Peyre",
    ));
    out.push(claim(
        "not-a1-connected",
        "a smooth proper model X of K is not A^1-connected".into(),
        "non-vanishing unramified cohomology obstructs A^1-connectedness",
    ));
    out
}

/// Builds the full certificate for `(n, ℓ)` and embeds the verifier's checks.
pub fn build_construction(n: usize, ell: Prime, config: &Config) -> Result<Certificate> {
    if n < 2 {
        return Err(Error::InvalidInput(alloc::format!("n must be at least 2, got {n}")));
    }
    config.check_size(n)?;
    let m = 2 * n;
    let omega = omega(n, ell)?;
    let s = Subspace::span(ell, m, n, Space::Primal, core::slice::from_ref(&omega))?;
    let s_perp = s.orthogonal_complement();
    let basis = pure_wedge_basis(&s_perp, config.search_cap)?;
    let symbols = basis
        .iter()
        .map(|b| symbol_from_factors(&b.factors))
        .collect::<Result<Vec<_>>>()?;
    let varieties = varieties_for(ell, &symbols)?;
    let dims = dimension_summary(n, ell, varieties.dimensions());
    let (base_generators, extension_generators) = field_generators(n, ell);
    let mut cert = Certificate {
        n,
        ell,
        base_generators,
        extension_generators,
        omega,
        s_perp,
        basis,
        symbols,
        varieties,
        dims,
        checks: Vec::new(),
        conventions: conventions(n, ell),
        cited_claims: cited_claims(n, ell),
    };
    cert.checks = verify_certificate(&cert, config)?.checks;
    Ok(cert)
}
