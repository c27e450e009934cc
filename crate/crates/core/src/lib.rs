//! Exact exterior algebra over prime fields, mod-ℓ Milnor symbols with
//! monomial entries, Pfister forms and splitting-variety plans, assembled into
//! a checkable certificate of the degree-n unramified class construction.
//!
//! Everything here is a pure function over immutable values. The crate is
//! `no_std` and only needs `alloc`; file formats and the command line live in
//! the `unram` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod extalg;
pub mod field;
pub mod linalg;
pub mod monomial;
pub mod pipeline;
pub mod plans;
pub mod quadforms;
pub mod symbols;

pub use error::{Error, Result};
pub use extalg::{Blade, Multivector, Space, Subspace, Vector};
pub use field::{Prime, Scalar};
pub use monomial::Monomial;
pub use symbols::{MonomialSymbol, SymbolClass};

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

#[cfg(test)]
mod tests {
    use super::binomial;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(12, 6), 924);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
    }
}
