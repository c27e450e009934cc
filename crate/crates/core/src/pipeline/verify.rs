//! Independent re-derivation of a [`Certificate`] from `(n, ℓ)`.
//!
//! Nothing stored in the certificate is trusted: each check recomputes its
//! object from scratch and compares with exact equality.

use alloc::string::String;
use alloc::vec::Vec;

use super::{
    closed_form_variety_dimension, dimension_summary, displayed_s_perp, field_generators, omega, t_entries,
    varieties_for, Certificate, Config, Varieties,
};
use crate::error::{Error, Result};
use crate::extalg::{
    divisibility_kernel, dual_pairing, is_pure_wedge, s_dec, wedge_all, Blade, Decomposition, Multivector, Space,
    Subspace,
};
use crate::field::Prime;
use crate::plans::plan_dimension;
use crate::symbols::{independence_rank, symbol_from_factors};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub evidence: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// Sorted by name.
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn accepted(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }
}

type Outcome = core::result::Result<String, String>;

fn same_ambient(w: &Multivector, p: Prime, m: usize, degree: usize, space: Space) -> bool {
    w.modulus() == p && w.dim() == m && w.degree() == degree && w.space() == space
}

fn err(e: Error) -> String {
    alloc::format!("{e}")
}

/// Verifies the certificate. Only size caps produce `Err`; every other
/// inconsistency is reported as a failed check.
pub fn verify_certificate(cert: &Certificate, config: &Config) -> Result<VerificationReport> {
    let n = cert.n;
    if n < 2 {
        return Err(Error::InvalidInput(alloc::format!("n must be at least 2, got {n}")));
    }
    config.check_size(n)?;
    let p = cert.ell;
    let m = 2 * n;
    let omega = omega(n, p)?;
    let s = Subspace::span(p, m, n, Space::Primal, core::slice::from_ref(&omega))?;
    let s_dec_space = s_dec(&s, config.s_dec_cap)?;
    let s_perp = s.orthogonal_complement();

    let results: [(&str, Outcome); 7] = [
        ("C1-s-dec", check_s_dec(cert, &omega, &s, &s_dec_space)),
        ("C2-s-perp", check_s_perp(cert, &s_perp)),
        ("C3-pure-wedges", check_pure(cert)),
        ("C4-symbol-independence", check_symbols(cert)),
        ("C5-functional", check_functional(n, p, &omega, &s_dec_space)),
        ("C6-restriction", check_restriction(cert)),
        ("C7-dimensions", check_dimensions(cert)),
    ];
    let mut checks: Vec<CheckResult> = results
        .into_iter()
        .map(|(name, r)| {
            let (passed, evidence) = match r {
                Ok(e) => (true, e),
                Err(e) => (false, e),
            };
            CheckResult {
                name: name.into(),
                passed,
                evidence,
            }
        })
        .collect();
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(VerificationReport { checks })
}

fn check_s_dec(cert: &Certificate, omega: &Multivector, s: &Subspace, s_dec_space: &Subspace) -> Outcome {
    if &cert.omega != omega {
        return Err(alloc::format!("stored omega {} differs from {}", cert.omega, omega));
    }
    let kernel = divisibility_kernel(omega);
    if !kernel.is_zero() {
        return Err(alloc::format!("omega is divisible (kernel dimension {})", kernel.dimension()));
    }
    if !s_dec_space.is_zero() || s_dec_space == s {
        return Err(alloc::format!(
            "S_dec has dimension {}, S has dimension {}",
            s_dec_space.dimension(),
            s.dimension()
        ));
    }
    Ok(alloc::format!(
        "omega = {omega}; divisibility kernel 0; dim S_dec = 0 < dim S = {}",
        s.dimension()
    ))
}

fn check_s_perp(cert: &Certificate, s_perp: &Subspace) -> Outcome {
    let (n, p) = (cert.n, cert.ell);
    let m = 2 * n;
    let displayed = displayed_s_perp(n, p).map_err(err)?;
    let displayed_span = Subspace::span(p, m, n, Space::Dual, &displayed).map_err(err)?;
    if &displayed_span != s_perp {
        return Err("displayed spanning set does not span the orthogonal complement".into());
    }
    let expected = crate::binomial(m, n) - 1;
    if s_perp.dimension() != expected {
        return Err(alloc::format!("dim S^perp = {}, expected {expected}", s_perp.dimension()));
    }
    if &cert.s_perp != s_perp {
        return Err("stored S^perp differs from the recomputed complement".into());
    }
    if cert.basis.len() != expected {
        return Err(alloc::format!("|I| = {}, expected {expected}", cert.basis.len()));
    }
    if let Some(i) = cert
        .basis
        .iter()
        .position(|b| !same_ambient(&b.element, p, m, n, Space::Dual))
    {
        return Err(alloc::format!("basis[{}] is not in Λ^{n}(V^∨) over F_{p}", i + 1));
    }
    let elements: Vec<Multivector> = cert.basis.iter().map(|b| b.element.clone()).collect();
    let span = Subspace::span(p, m, n, Space::Dual, &elements).map_err(err)?;
    if span.dimension() != elements.len() {
        return Err(alloc::format!(
            "basis has rank {} but {} elements",
            span.dimension(),
            elements.len()
        ));
    }
    if &span != s_perp {
        return Err("basis does not span S^perp".into());
    }
    Ok(alloc::format!("dim S^perp = {expected} = C({m},{n}) - 1; basis independent and spanning"))
}

fn check_pure(cert: &Certificate) -> Outcome {
    let (n, p) = (cert.n, cert.ell);
    let m = 2 * n;
    for (i, b) in cert.basis.iter().enumerate() {
        let k = i + 1;
        if !same_ambient(&b.element, p, m, n, Space::Dual) {
            return Err(alloc::format!("basis[{k}] has the wrong ambient"));
        }
        if let Decomposition::NotPure(w) = is_pure_wedge(&b.element) {
            return Err(alloc::format!(
                "basis[{k}] is not pure: xi = {} gives (xi ⌟ w) ∧ w = {}",
                w.xi,
                w.relation
            ));
        }
        if b.factors.len() != n {
            return Err(alloc::format!("basis[{k}] stores {} factors, expected {n}", b.factors.len()));
        }
        if b
            .factors
            .iter()
            .any(|f| f.modulus() != p || f.dim() != m || f.space() != Space::Dual)
        {
            return Err(alloc::format!("basis[{k}] has a factor outside V^∨"));
        }
        let product = wedge_all(p, m, Space::Dual, &b.factors).map_err(err)?;
        if product != b.element {
            return Err(alloc::format!(
                "basis[{k}]: stored factors wedge to {product}, not {}",
                b.element
            ));
        }
    }
    Ok(alloc::format!("{} elements factor as wedges of {n} vectors", cert.basis.len()))
}

fn check_symbols(cert: &Certificate) -> Outcome {
    let (n, p) = (cert.n, cert.ell);
    let m = 2 * n;
    if cert.symbols.len() != cert.basis.len() {
        return Err(alloc::format!(
            "{} symbols for {} basis elements",
            cert.symbols.len(),
            cert.basis.len()
        ));
    }
    if let Some(i) = cert
        .symbols
        .iter()
        .position(|s| s.modulus() != p || s.num_vars() != m || s.n_slots() != n)
    {
        return Err(alloc::format!("symbol[{}] has the wrong shape", i + 1));
    }
    let classes: Vec<_> = cert.symbols.iter().map(|s| s.normalize()).collect();
    let rank = independence_rank(&classes).map_err(err)?;
    let size = classes.len();
    if rank != size {
        return Err(alloc::format!("rank {rank} of {size} (deficit {})", size - rank));
    }
    for (i, ((sym, class), b)) in cert.symbols.iter().zip(&classes).zip(&cert.basis).enumerate() {
        let k = i + 1;
        let expected = symbol_from_factors(&b.factors).map_err(|e| alloc::format!("symbol[{k}]: {e}"))?;
        if &expected != sym {
            return Err(alloc::format!("symbol[{k}] = {sym}, expected {expected}"));
        }
        if class.canonical() != &b.element.with_space(Space::Primal) {
            return Err(alloc::format!(
                "symbol[{k}] has class {}, basis element is {}",
                class,
                b.element
            ));
        }
    }
    Ok(alloc::format!("{size} symbols, rank {rank}"))
}

fn check_functional(n: usize, p: Prime, omega: &Multivector, s_dec_space: &Subspace) -> Outcome {
    let m = 2 * n;
    let f = Multivector::basis(p, m, Space::Dual, Blade::range(0, n)).map_err(err)?;
    let value = dual_pairing(&f, omega).map_err(err)?;
    if value.value() != 1 {
        return Err(alloc::format!("f(omega) = {value}, expected 1"));
    }
    for (i, w) in s_dec_space.basis().iter().enumerate() {
        let v = dual_pairing(&f, w).map_err(err)?;
        if !v.is_zero() {
            return Err(alloc::format!("f is {v} on S_dec basis[{}]", i + 1));
        }
    }
    Ok(alloc::format!("f = {f}: f(omega) = 1, f vanishes on S_dec"))
}

fn check_restriction(cert: &Certificate) -> Outcome {
    let (base, ext) = field_generators(cert.n, cert.ell);
    if cert.base_generators != base || cert.extension_generators != ext {
        return Err("field generators differ from k = C(t_j^ℓ), k' = C(t_j)".into());
    }
    for (i, sym) in cert.symbols.iter().enumerate() {
        let restricted = sym.restrict_to_extension().normalize();
        if !restricted.is_zero() {
            return Err(alloc::format!("symbol[{}] restricts to {} over k'", i + 1, restricted));
        }
    }
    Ok(alloc::format!("{} symbols vanish over k'", cert.symbols.len()))
}

fn check_dimensions(cert: &Certificate) -> Outcome {
    let (n, p) = (cert.n, cert.ell);
    let quadrics = p.get() == 2;
    match (&cert.varieties, quadrics) {
        (Varieties::Quadrics(_), true) | (Varieties::RostPlans(_), false) => {}
        _ => return Err(alloc::format!("wrong variety kind for ℓ = {p}")),
    }
    if cert.varieties.len() != cert.symbols.len() {
        return Err(alloc::format!(
            "{} varieties for {} symbols",
            cert.varieties.len(),
            cert.symbols.len()
        ));
    }
    let expected = varieties_for(p, &cert.symbols).map_err(err)?;
    if expected != cert.varieties {
        let i = match (&expected, &cert.varieties) {
            (Varieties::Quadrics(a), Varieties::Quadrics(b)) => a.iter().zip(b).position(|(x, y)| x != y),
            (Varieties::RostPlans(a), Varieties::RostPlans(b)) => a.iter().zip(b).position(|(x, y)| x != y),
            _ => None,
        };
        return Err(match i {
            Some(i) => alloc::format!("variety[{}] does not match its symbol", i + 1),
            None => "varieties do not match their symbols".into(),
        });
    }
    if let Varieties::RostPlans(plans) = &cert.varieties {
        for (i, plan) in plans.iter().enumerate() {
            if plan.nodes.last().map(|node| node.dim) != Some(plan_dimension(plan)) {
                return Err(alloc::format!("plan[{}] stores an inconsistent dimension", i + 1));
            }
            if plan.slots != t_entries(&cert.symbols[i]) {
                return Err(alloc::format!("plan[{}] slots differ from its symbol", i + 1));
            }
        }
    }
    let closed = closed_form_variety_dimension(n, p);
    let dims = cert.varieties.dimensions();
    if let Some(i) = dims.iter().position(|&d| d != closed) {
        return Err(alloc::format!("variety[{}] has dimension {}, expected {closed}", i + 1, dims[i]));
    }
    let summary = dimension_summary(n, p, dims);
    if summary != cert.dims {
        return Err(alloc::format!(
            "stored dimensions (total {}) differ from recomputed (total {})",
            cert.dims.total,
            summary.total
        ));
    }
    Ok(alloc::format!(
        "{} varieties of dimension {closed}; total {} = {} + {}·{closed}",
        summary.per_variety.len(),
        summary.total,
        summary.base,
        summary.per_variety.len()
    ))
}
