//! Exact linear and exterior algebra over F_ℓ.
//!
//! Blades are strictly increasing index tuples ordered lexicographically, and
//! every subspace is kept in reduced row-echelon form under that order.

mod blade;
mod decompose;
mod multivector;
mod search;
mod subspace;

pub use blade::{blades, Blade, MAX_DIM};
pub use decompose::{divisibility_kernel, is_pure_wedge, s_dec, Decomposition, PluckerWitness, DEFAULT_S_DEC_CAP};
pub use multivector::{contract, dual_pairing, wedge_all, Multivector, Space, Vector};
pub use search::{pure_wedge_basis, PureElement, DEFAULT_SEARCH_CAP};
pub use subspace::Subspace;

/// `S ↦ S^⊥`; see [`Subspace::orthogonal_complement`].
pub fn orthogonal_complement(s: &Subspace) -> Subspace {
    s.orthogonal_complement()
}
