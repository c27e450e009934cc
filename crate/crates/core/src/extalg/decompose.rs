//! Divisibility and decomposability of homogeneous multivectors.

use alloc::vec::Vec;

use super::blade::{blades, Blade};
use super::multivector::{contract, wedge_all, Multivector, Vector};
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::linalg;

/// Outcome of the decomposability test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    /// `w = factors[0] ∧ … ∧ factors[n−1]`. The zero element and degree-0
    /// elements report an empty factor list.
    Pure(Vec<Vector>),
    NotPure(PluckerWitness),
}

impl Decomposition {
    pub fn is_pure(&self) -> bool {
        matches!(self, Decomposition::Pure(_))
    }
}

/// A basis element `ξ` of `Λ^{n−1}` on the opposite side with
/// `(ξ ⌟ w) ∧ w ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerWitness {
    pub xi: Blade,
    pub relation: Multivector,
}

/// `{v ∈ V : v ∧ w = 0}`, a degree-1 subspace on the same side as `w`.
pub fn divisibility_kernel(w: &Multivector) -> Subspace {
    let p = w.modulus();
    let m = w.dim();
    let out_len = crate::binomial(m, w.degree() + 1);
    // column i of the matrix is e_i ∧ w
    let mut matrix = alloc::vec![alloc::vec![0u32; m]; out_len];
    #[allow(clippy::needless_range_loop)]
    for i in 0..m {
        let e = Multivector::basis(p, m, w.space(), Blade::single(i)).expect("valid basis blade");
        let col = e.wedge(w).expect("same ambient");
        for (b, c) in col.terms() {
            matrix[b.rank(m)][i] = c;
        }
    }
    let null = linalg::nullspace(matrix, m, p);
    Subspace::from_dense_rows(p, m, 1, w.space(), null).expect("ambient already validated")
}

/// Decides whether `w` is a wedge of `deg w` vectors.
///
/// The test is the Plücker criterion `(ξ ⌟ w) ∧ w = 0` over the index basis of
/// `Λ^{n−1}` on the opposite side, which holds over any field. A pure element
/// is factored through its divisibility kernel, which then has dimension `n`.
pub fn is_pure_wedge(w: &Multivector) -> Decomposition {
    let n = w.degree();
    if w.is_zero() || n == 0 {
        return Decomposition::Pure(Vec::new());
    }
    let p = w.modulus();
    let m = w.dim();
    if n == 1 {
        let coords = w.to_dense();
        return Decomposition::Pure(alloc::vec![Vector::from_residues(p, w.space(), coords)]);
    }
    for xi in blades(m, n - 1) {
        let xi_mv = Multivector::basis(p, m, w.space().opposite(), xi).expect("valid blade");
        let v = contract(&xi_mv, w).expect("degrees compatible");
        let relation = v.wedge(w).expect("same ambient");
        if !relation.is_zero() {
            return Decomposition::NotPure(PluckerWitness { xi, relation });
        }
    }
    let kernel = divisibility_kernel(w);
    debug_assert_eq!(kernel.dimension(), n);
    let mut factors: Vec<Vector> = kernel
        .rows()
        .iter()
        .map(|r| Vector::from_residues(p, w.space(), r.clone()))
        .collect();
    let product = wedge_all(p, m, w.space(), &factors).expect("same ambient");
    let (blade, target) = w.terms().next().expect("nonzero");
    let got = product.coefficient(blade);
    let scale = p.mul(target, p.inv(got).expect("kernel spans a factorization"));
    factors[0] = factors[0].scale(scale);
    debug_assert_eq!(
        wedge_all(p, m, w.space(), &factors).as_ref().ok(),
        Some(w)
    );
    Decomposition::Pure(factors)
}

/// Default enumeration cap for [`s_dec`]: `2^20` elements.
pub const DEFAULT_S_DEC_CAP: u128 = 1 << 20;

/// The span of the elements of `s` that are divisible by a nonzero vector.
///
/// Enumerates all `ℓ^{dim S}` elements, so `dim S` must stay small.
pub fn s_dec(s: &Subspace, cap: u128) -> Result<Subspace> {
    let p = s.modulus();
    let k = s.dimension();
    let count = (p.get() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if count > cap {
        return Err(Error::CapExceeded {
            what: "S_dec enumeration",
            needed: count,
            cap,
        });
    }
    let mut divisible = Vec::new();
    let mut coeffs = alloc::vec![0u32; k];
    // skip the zero element; walk the rest in base-ℓ counter order
    while advance(&mut coeffs, p.get()) {
        let sigma = s.combination(&coeffs);
        if !divisibility_kernel(&sigma).is_zero() {
            divisible.push(sigma);
        }
    }
    Subspace::span(p, s.dim(), s.degree(), s.space(), &divisible)
}

fn advance(digits: &mut [u32], base: u32) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}
