//! Mod-ℓ Milnor symbols with monomial entries over `ℂ(t_1, …, t_m)`.
//!
//! Every constant of `ℂ` is an ℓ-th power, so a symbol `{a_1, …, a_n}` with
//! monomial entries depends only on the exponent rows mod ℓ, and the class is
//! the wedge of those rows in `Λ^n (ℤ/ℓ)^m`. Residues at the coordinate
//! valuations `ord_{t_j}` become contraction with `e_j^∨`.

mod parse;

use alloc::vec::Vec;
use core::fmt;

pub use parse::{parse_symbol, SymbolText};

use crate::error::{Error, Result};
use crate::extalg::{contract, is_pure_wedge, Blade, Decomposition, Multivector, Space, Vector};
use crate::field::Prime;
use crate::linalg;
use crate::monomial::Monomial;

/// `{a_1, …, a_n}` with `a_i = ∏_j t_j^{e_ij}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialSymbol {
    modulus: Prime,
    num_vars: usize,
    slots: Vec<Monomial>,
}

/// The class of a symbol in `K^M_n / ℓ`, as a multivector in `Λ^n (ℤ/ℓ)^m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolClass(Multivector);

impl MonomialSymbol {
    pub fn new(modulus: Prime, num_vars: usize, slots: Vec<Monomial>) -> Result<MonomialSymbol> {
        if let Some(bad) = slots.iter().find(|s| s.num_vars() != num_vars) {
            return Err(Error::DimensionMismatch(num_vars, bad.num_vars()));
        }
        if num_vars > crate::extalg::MAX_DIM {
            return Err(Error::DimensionTooLarge(num_vars));
        }
        Ok(MonomialSymbol {
            modulus,
            num_vars,
            slots,
        })
    }

    /// From an `n × m` exponent matrix.
    pub fn from_exponents(modulus: Prime, num_vars: usize, rows: Vec<Vec<i64>>) -> Result<MonomialSymbol> {
        MonomialSymbol::new(modulus, num_vars, rows.into_iter().map(Monomial::new).collect())
    }

    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn n_slots(&self) -> usize {
        self.slots.len()
    }

    pub fn slots(&self) -> &[Monomial] {
        &self.slots
    }

    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.slots.iter().map(|s| s.exponents().to_vec()).collect()
    }

    fn row_vector(&self, i: usize) -> Vector {
        Vector::new(self.modulus, Space::Primal, self.slots[i].exponents())
    }

    /// The class: wedge of the exponent rows reduced mod ℓ.
    pub fn normalize(&self) -> SymbolClass {
        let p = self.modulus;
        let mut acc = Multivector::scalar(p, self.num_vars, Space::Primal, 1).expect("dimension checked");
        for i in 0..self.slots.len() {
            acc = acc
                .wedge(&Multivector::from_vector(&self.row_vector(i)))
                .expect("same ambient");
        }
        SymbolClass(acc)
    }

    pub fn swap_slots(&self, i: usize, j: usize) -> MonomialSymbol {
        let mut out = self.clone();
        out.slots.swap(i, j);
        out
    }

    /// The symbol over `ℂ(t_1, …)` obtained from one written in the generators
    /// `s_j = t_j^ℓ`: every exponent is multiplied by ℓ, so the class vanishes.
    pub fn restrict_to_extension(&self) -> MonomialSymbol {
        let l = self.modulus.get() as i64;
        MonomialSymbol {
            slots: self.slots.iter().map(|s| s.pow(l)).collect(),
            ..self.clone()
        }
    }

    /// An equivalent symbol whose first `n − 1` entries are units at
    /// `ord_{t_j}` (0-based `j`).
    ///
    /// The last slot with nonzero `t_j`-exponent mod ℓ becomes the pivot; its
    /// multiples are divided out of the other slots (a transvection, which
    /// preserves the class), those slots are reduced to exponents in
    /// `0..ℓ`, and the pivot is moved last. The move is a transposition, so
    /// the moved slot is raised to the power `ℓ − 1` to undo the sign. The
    /// class is preserved exactly.
    pub fn normalize_at_valuation(&self, j: usize) -> Result<MonomialSymbol> {
        if j >= self.num_vars {
            return Err(Error::IndexOutOfRange {
                index: j,
                dim: self.num_vars,
            });
        }
        let p = self.modulus;
        let l = p.get() as i64;
        let n = self.slots.len();
        let valuation = |m: &Monomial| p.reduce(m.exponent(j));
        let Some(pivot) = (0..n).rev().find(|&i| valuation(&self.slots[i]) != 0) else {
            return Ok(self.clone());
        };
        let mut slots = self.slots.clone();
        let pivot_inv = p.inv(valuation(&slots[pivot])).expect("nonzero") as i64;
        for i in (0..n).filter(|&i| i != pivot) {
            let v = valuation(&slots[i]) as i64;
            if v == 0 {
                continue;
            }
            let c = (v * pivot_inv) % l;
            let reduced = slots[i].mul(&slots[pivot].pow(-c));
            slots[i] = Monomial::new(reduced.exponents().iter().map(|e| e.rem_euclid(l)).collect());
        }
        if pivot != n - 1 {
            slots.swap(pivot, n - 1);
            // the transposition negated the class; ℓ = 2 has no sign
            if l != 2 {
                slots[pivot] = slots[pivot].pow(l - 1);
            }
        }
        Ok(MonomialSymbol { slots, ..self.clone() })
    }
}

impl fmt::Display for MonomialSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.slots.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

impl SymbolClass {
    /// Wraps a primal multivector as a class.
    pub fn new(canonical: Multivector) -> Result<SymbolClass> {
        if canonical.space() != Space::Primal {
            return Err(Error::SpaceMismatch {
                expected: Space::Primal,
                found: canonical.space(),
            });
        }
        Ok(SymbolClass(canonical))
    }

    pub fn canonical(&self) -> &Multivector {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The residue `∂_{t_j}` (0-based `j`): contraction with `e_j^∨`.
    ///
    /// On monomial symbols this is the tame symbol at `ord_{t_j}`, with unit
    /// entries specialized by deleting their `t_j`-exponent.
    pub fn residue(&self, j: usize) -> Result<SymbolClass> {
        let m = self.0.dim();
        if j >= m {
            return Err(Error::IndexOutOfRange { index: j, dim: m });
        }
        let e = Multivector::basis(self.0.modulus(), m, Space::Dual, Blade::single(j))?;
        Ok(SymbolClass(contract(&e, &self.0)?))
    }

    pub fn is_unramified_at(&self, j: usize) -> Result<bool> {
        Ok(self.residue(j)?.is_zero())
    }
}

impl fmt::Display for SymbolClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Rank of the classes as vectors over F_ℓ.
pub fn independence_rank(classes: &[SymbolClass]) -> Result<usize> {
    let Some(first) = classes.first() else {
        return Ok(0);
    };
    let (p, m, n) = (first.0.modulus(), first.0.dim(), first.0.degree());
    let mut rows = Vec::with_capacity(classes.len());
    for c in classes {
        if c.0.modulus() != p {
            return Err(Error::ModulusMismatch(p.get(), c.0.modulus().get()));
        }
        if c.0.dim() != m {
            return Err(Error::DimensionMismatch(m, c.0.dim()));
        }
        if c.0.degree() != n {
            return Err(Error::DegreeMismatch(n, c.0.degree()));
        }
        rows.push(c.0.to_dense());
    }
    Ok(linalg::rank(rows, crate::binomial(m, n), p))
}

/// The symbol attached to a pure wedge `w_1 ∧ … ∧ w_n` of dual vectors:
/// slot `i` is `∏_j s_j^{c_ij}` where `w_i = Σ_j c_ij v_j^∨`, with lifts in
/// `0..ℓ`, written over the generators `s_j = t_j^ℓ`.
pub fn symbol_from_factors(factors: &[Vector]) -> Result<MonomialSymbol> {
    let Some(first) = factors.first() else {
        return Err(Error::InvalidInput("a symbol needs at least one factor".into()));
    };
    let (p, m) = (first.modulus(), first.dim());
    let mut slots = Vec::with_capacity(factors.len());
    for w in factors {
        if w.space() != Space::Dual {
            return Err(Error::SpaceMismatch {
                expected: Space::Dual,
                found: w.space(),
            });
        }
        if w.modulus() != p {
            return Err(Error::ModulusMismatch(p.get(), w.modulus().get()));
        }
        if w.dim() != m {
            return Err(Error::DimensionMismatch(m, w.dim()));
        }
        if w.is_zero() {
            return Err(Error::InvalidInput("zero factor".into()));
        }
        slots.push(Monomial::new(w.coords().iter().map(|&c| c as i64).collect()));
    }
    MonomialSymbol::new(p, m, slots)
}

/// `φ̂^n(s)` for a pure wedge `s ∈ Λ^n V^∨`, factored by [`is_pure_wedge`].
pub fn phi_symbol(s: &Multivector) -> Result<MonomialSymbol> {
    if s.space() != Space::Dual {
        return Err(Error::SpaceMismatch {
            expected: Space::Dual,
            found: s.space(),
        });
    }
    if s.is_zero() || s.degree() == 0 {
        return Err(Error::InvalidInput("symbol map needs a nonzero wedge of vectors".into()));
    }
    match is_pure_wedge(s) {
        Decomposition::Pure(factors) => symbol_from_factors(&factors),
        Decomposition::NotPure(_) => Err(Error::NotPure),
    }
}
