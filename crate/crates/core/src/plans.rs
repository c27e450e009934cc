//! Recursive construction plans for Rost varieties.
//!
//! A plan for `{a_1, …, a_n}` starts at the Severi–Brauer variety of the
//! cyclic algebra attached to `{a_1, a_2}` (dimension `ℓ − 1`) and then takes
//! `Y ↦ N(Y, a_{j+1}, ℓ)` once per remaining slot. `N(Y, a, m)` compactifies
//! the locus `N − a = 0` in the rank-`m` algebra over the configuration space
//! of `m` points on `Y`, so `dim N(Y, a, m) = m·dim Y + m − 1`. Plans are
//! symbolic records only.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Prime;
use crate::monomial::{t_names, Monomial};

/// `dim N(Y, a, m)` for `dim Y = base_dim`.
pub fn norm_variety_dimension(base_dim: u64, multiplicity: u64) -> u64 {
    multiplicity * base_dim + multiplicity - 1
}

/// `ℓ^{n−1} − 1`.
pub fn rost_dimension(n: u32, ell: u64) -> u64 {
    ell.pow(n - 1) - 1
}

/// The split model of the norm equation: `z_1 ⋯ z_m − a` in `m` variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormEquation {
    pub multiplicity: u32,
    pub parameter: Monomial,
    /// Degree of `Y^m∖Δ × E_a → W` as stated with the construction (`m`),
    /// recorded without adjudicating it against the `S_m` quotient.
    pub stated_quotient_degree: u32,
}

impl NormEquation {
    pub fn variables(&self) -> usize {
        self.multiplicity as usize
    }

    /// Degree of the leading product `z_1 ⋯ z_m`.
    pub fn total_degree(&self) -> u32 {
        self.multiplicity
    }

    /// E.g. `z1*z2 - t1^2`.
    pub fn polynomial(&self, names: &[String]) -> String {
        let mut out = String::new();
        for i in 1..=self.multiplicity {
            if i > 1 {
                out.push('*');
            }
            out.push_str(&alloc::format!("z{i}"));
        }
        out.push_str(&alloc::format!(" - {}", self.parameter.display_with(names)));
        out
    }
}

pub fn split_model_equation(parameter: Monomial, multiplicity: u32) -> Result<NormEquation> {
    if multiplicity == 0 {
        return Err(Error::InvalidInput("norm equation multiplicity must be at least 1".into()));
    }
    Ok(NormEquation {
        multiplicity,
        parameter,
        stated_quotient_degree: multiplicity,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PlanStep {
    /// Severi–Brauer variety of the degree-ℓ cyclic algebra of `{a_1, a_2}`.
    SeveriBrauer { first: Monomial, second: Monomial },
    /// `N(previous, parameter, ℓ)`.
    Norm { equation: NormEquation },
}

/// One recursion level; `covers` is the number of symbol slots handled so far.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanNode {
    pub covers: usize,
    pub step: PlanStep,
    pub dim: u64,
}

/// Facts attached to every plan that are cited rather than computed.
pub const PLAN_NOTES: &[(&str, &str)] = &[
    (
        "rationally-connected",
        "over an algebraically closed field containing C, N(Y, a, m) is unirational \
         (resp. rationally connected) whenever Y is",
    ),
    (
        "function-field-models-rationally-connected",
        "smooth proper models over C of k(N(Y, a, m)) are rationally connected when k is \
         the function field of a rationally connected complex variety",
    ),
    (
        "finer-rationality-open",
        "whether Rost varieties inherit finer rationality properties (e.g. retract \
         rationality) is open",
    ),
];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RostPlan {
    pub ell: Prime,
    pub num_vars: usize,
    pub slots: Vec<Monomial>,
    /// Root (base case) first.
    pub nodes: Vec<PlanNode>,
}

impl RostPlan {
    pub fn dimension(&self) -> u64 {
        plan_dimension(self)
    }

    /// Human-readable node lines, root to leaf.
    pub fn describe(&self) -> Vec<String> {
        let names = t_names(self.num_vars);
        self.nodes
            .iter()
            .map(|node| match &node.step {
                PlanStep::SeveriBrauer { first, second } => alloc::format!(
                    "Y_1..2 = SB(cyclic algebra of {{{}, {}}}), dim {}",
                    first.display_with(&names),
                    second.display_with(&names),
                    node.dim
                ),
                PlanStep::Norm { equation } => alloc::format!(
                    "Y_1..{} = N(Y_1..{}, {}, {}), split model {}, dim {}",
                    node.covers,
                    node.covers - 1,
                    equation.parameter.display_with(&names),
                    equation.multiplicity,
                    equation.polynomial(&names),
                    node.dim
                ),
            })
            .collect()
    }
}

pub fn rost_plan(num_vars: usize, slots: &[Monomial], ell: Prime) -> Result<RostPlan> {
    if slots.len() < 2 {
        return Err(Error::InvalidInput(alloc::format!(
            "a Rost plan needs a symbol of length at least 2, got {}",
            slots.len()
        )));
    }
    if let Some(bad) = slots.iter().find(|s| s.num_vars() != num_vars) {
        return Err(Error::DimensionMismatch(num_vars, bad.num_vars()));
    }
    let l = ell.get() as u64;
    let mut nodes = Vec::with_capacity(slots.len() - 1);
    let mut dim = l - 1;
    nodes.push(PlanNode {
        covers: 2,
        step: PlanStep::SeveriBrauer {
            first: slots[0].clone(),
            second: slots[1].clone(),
        },
        dim,
    });
    for (j, a) in slots.iter().enumerate().skip(2) {
        dim = norm_variety_dimension(dim, l);
        nodes.push(PlanNode {
            covers: j + 1,
            step: PlanStep::Norm {
                equation: split_model_equation(a.clone(), ell.get())?,
            },
            dim,
        });
    }
    Ok(RostPlan {
        ell,
        num_vars,
        slots: slots.to_vec(),
        nodes,
    })
}

/// Re-evaluates the dimension recurrence along the plan's steps, ignoring the
/// stored per-node dimensions.
pub fn plan_dimension(plan: &RostPlan) -> u64 {
    let mut dim = 0;
    for node in &plan.nodes {
        dim = match &node.step {
            PlanStep::SeveriBrauer { .. } => plan.ell.get() as u64 - 1,
            PlanStep::Norm { equation } => norm_variety_dimension(dim, equation.multiplicity as u64),
        };
    }
    dim
}
