use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::blade::{Blade, MAX_DIM};
use crate::binomial;
use crate::error::{Error, Result};
use crate::field::{Prime, Scalar};

/// Which side of the duality an element lives on: `V = F_ℓ^m` or its dual.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    Primal,
    Dual,
}

impl Space {
    pub fn opposite(self) -> Space {
        match self {
            Space::Primal => Space::Dual,
            Space::Dual => Space::Primal,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Space::Primal => "V",
            Space::Dual => "V-dual",
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A vector of `V` or `V^∨` in the chosen coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    modulus: Prime,
    space: Space,
    coords: Vec<u32>,
}

impl Vector {
    pub fn new(modulus: Prime, space: Space, coords: &[i64]) -> Vector {
        Vector {
            modulus,
            space,
            coords: coords.iter().map(|&c| modulus.reduce(c)).collect(),
        }
    }

    pub fn from_residues(modulus: Prime, space: Space, coords: Vec<u32>) -> Vector {
        let coords = coords.into_iter().map(|c| c % modulus.get()).collect();
        Vector {
            modulus,
            space,
            coords,
        }
    }

    /// Standard basis vector `e_i` (0-based).
    pub fn unit(modulus: Prime, space: Space, dim: usize, i: usize) -> Vector {
        let mut coords = vec![0; dim];
        coords[i] = 1;
        Vector {
            modulus,
            space,
            coords,
        }
    }

    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, c: u32) -> Vector {
        let p = self.modulus;
        Vector {
            modulus: p,
            space: self.space,
            coords: self.coords.iter().map(|&x| p.mul(x, c)).collect(),
        }
    }

    /// Evaluation `f(v)` of a dual vector on a primal one (either order).
    pub fn pair(&self, other: &Vector) -> Result<Scalar> {
        check_modulus(self.modulus, other.modulus)?;
        check_dim(self.dim(), other.dim())?;
        if self.space != other.space.opposite() {
            return Err(Error::SpaceMismatch {
                expected: other.space.opposite(),
                found: self.space,
            });
        }
        let p = self.modulus;
        let value = self
            .coords
            .iter()
            .zip(&other.coords)
            .fold(0, |acc, (&a, &b)| p.add(acc, p.mul(a, b)));
        Ok(Scalar::new(value as i64, p))
    }
}

/// An element of `Λ^p V` or `Λ^p V^∨`, stored sparsely by blade.
///
/// No stored coefficient is zero, so equality of values is equality of
/// elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multivector {
    modulus: Prime,
    dim: usize,
    degree: usize,
    space: Space,
    terms: BTreeMap<Blade, u32>,
}

pub(crate) fn check_modulus(a: Prime, b: Prime) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::ModulusMismatch(a.get(), b.get()))
    }
}

pub(crate) fn check_dim(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(a, b))
    }
}

impl Multivector {
    pub fn zero(modulus: Prime, dim: usize, degree: usize, space: Space) -> Result<Multivector> {
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge(dim));
        }
        Ok(Multivector {
            modulus,
            dim,
            degree,
            space,
            terms: BTreeMap::new(),
        })
    }

    pub fn from_terms<I>(
        modulus: Prime,
        dim: usize,
        degree: usize,
        space: Space,
        terms: I,
    ) -> Result<Multivector>
    where
        I: IntoIterator<Item = (Blade, i64)>,
    {
        let mut out = Multivector::zero(modulus, dim, degree, space)?;
        for (blade, c) in terms {
            if blade.degree() != degree {
                return Err(Error::DegreeMismatch(degree, blade.degree()));
            }
            if blade.span() > dim {
                return Err(Error::IndexOutOfRange {
                    index: blade.span() - 1,
                    dim,
                });
            }
            out.add_term(blade, modulus.reduce(c));
        }
        Ok(out)
    }

    /// The basis element `e_J` (or `e_J^∨`).
    pub fn basis(modulus: Prime, dim: usize, space: Space, blade: Blade) -> Result<Multivector> {
        Multivector::from_terms(modulus, dim, blade.degree(), space, [(blade, 1)])
    }

    pub fn scalar(modulus: Prime, dim: usize, space: Space, c: i64) -> Result<Multivector> {
        Multivector::from_terms(modulus, dim, 0, space, [(Blade::EMPTY, c)])
    }

    pub fn from_vector(v: &Vector) -> Multivector {
        let mut out = Multivector::zero(v.modulus, v.dim(), 1, v.space).expect("dimension checked");
        for (i, &c) in v.coords.iter().enumerate() {
            out.add_term(Blade::single(i), c);
        }
        out
    }

    /// Coordinates in lexicographic blade order, length `C(dim, degree)`.
    pub fn to_dense(&self) -> Vec<u32> {
        let mut v = vec![0; binomial(self.dim, self.degree)];
        for (b, &c) in &self.terms {
            v[b.rank(self.dim)] = c;
        }
        v
    }

    pub fn from_dense(
        modulus: Prime,
        dim: usize,
        degree: usize,
        space: Space,
        coords: &[u32],
    ) -> Result<Multivector> {
        check_dim(binomial(dim, degree), coords.len())?;
        let mut out = Multivector::zero(modulus, dim, degree, space)?;
        for (r, &c) in coords.iter().enumerate() {
            if c % modulus.get() != 0 {
                out.terms.insert(Blade::unrank(r, dim, degree), c % modulus.get());
            }
        }
        Ok(out)
    }

    fn add_term(&mut self, blade: Blade, c: u32) {
        if c == 0 {
            return;
        }
        let p = self.modulus;
        let entry = self.terms.entry(blade).or_insert(0);
        *entry = p.add(*entry, c);
        if *entry == 0 {
            self.terms.remove(&blade);
        }
    }

    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, blade: Blade) -> u32 {
        self.terms.get(&blade).copied().unwrap_or(0)
    }

    /// Nonzero terms in lexicographic blade order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, u32)> + '_ {
        self.terms.iter().map(|(&b, &c)| (b, c))
    }

    /// The same coordinates read on the other side of the duality.
    pub fn with_space(&self, space: Space) -> Multivector {
        Multivector {
            space,
            ..self.clone()
        }
    }

    fn check_compatible(&self, other: &Multivector) -> Result<()> {
        check_modulus(self.modulus, other.modulus)?;
        check_dim(self.dim, other.dim)?;
        if self.space != other.space {
            return Err(Error::SpaceMismatch {
                expected: self.space,
                found: other.space,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Multivector) -> Result<Multivector> {
        self.check_compatible(other)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(b, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Multivector) -> Result<Multivector> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Multivector {
        self.scale(self.modulus.neg(1))
    }

    pub fn scale(&self, c: u32) -> Multivector {
        let p = self.modulus;
        let mut out = Multivector {
            terms: BTreeMap::new(),
            ..self.clone()
        };
        for (b, x) in self.terms() {
            out.add_term(b, p.mul(x, c % p.get()));
        }
        out
    }

    /// Exterior product. Degrees beyond the dimension give the zero element
    /// of degree `p + q`.
    pub fn wedge(&self, other: &Multivector) -> Result<Multivector> {
        self.check_compatible(other)?;
        let p = self.modulus;
        let mut out = Multivector::zero(p, self.dim, self.degree + other.degree, self.space)?;
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                if !a.is_disjoint(b) {
                    continue;
                }
                let c = p.mul(p.mul(x, y), p.sign(a.merge_is_odd(b)));
                out.add_term(a.union(b), c);
            }
        }
        Ok(out)
    }
}

/// Wedge of a list of vectors; the empty list gives the scalar `1`.
pub fn wedge_all(modulus: Prime, dim: usize, space: Space, factors: &[Vector]) -> Result<Multivector> {
    let mut acc = Multivector::scalar(modulus, dim, space, 1)?;
    for v in factors {
        acc = acc.wedge(&Multivector::from_vector(v))?;
    }
    Ok(acc)
}

/// The pairing `Λ^i V^∨ × Λ^i V → F_ℓ` fixed by
/// `f_1 ∧ … ∧ f_i ↦ (v_1 ∧ … ∧ v_i ↦ Σ_σ sgn(σ) f_1(v_σ(1)) ⋯ f_i(v_σ(i)))`.
///
/// On index bases this is the Kronecker pairing `⟨e_I^∨, e_J⟩ = δ_IJ`, so the
/// bilinear extension is the coordinate dot product. The arguments must live
/// on opposite sides of the duality.
pub fn dual_pairing(f: &Multivector, w: &Multivector) -> Result<Scalar> {
    check_modulus(f.modulus, w.modulus)?;
    check_dim(f.dim, w.dim)?;
    if f.space != w.space.opposite() {
        return Err(Error::SpaceMismatch {
            expected: w.space.opposite(),
            found: f.space,
        });
    }
    if f.degree != w.degree {
        return Err(Error::DegreeMismatch(f.degree, w.degree));
    }
    let p = f.modulus;
    let value = f
        .terms()
        .fold(0, |acc, (b, x)| p.add(acc, p.mul(x, w.coefficient(b))));
    Ok(Scalar::new(value as i64, p))
}

/// Interior product `ξ ⌟ w`, the adjoint of wedging:
/// `⟨η, ξ ⌟ w⟩ = ⟨ξ ∧ η, w⟩` for every `η` of degree `deg w − deg ξ`.
pub fn contract(xi: &Multivector, w: &Multivector) -> Result<Multivector> {
    check_modulus(xi.modulus, w.modulus)?;
    check_dim(xi.dim, w.dim)?;
    if xi.space != w.space.opposite() {
        return Err(Error::SpaceMismatch {
            expected: w.space.opposite(),
            found: xi.space,
        });
    }
    if xi.degree > w.degree {
        return Err(Error::InvalidInput(alloc::format!(
            "cannot contract degree {} into degree {}",
            xi.degree,
            w.degree
        )));
    }
    let p = xi.modulus;
    let mut out = Multivector::zero(p, w.dim, w.degree - xi.degree, w.space)?;
    for (i, x) in xi.terms() {
        for (j, y) in w.terms() {
            if !i.is_subset_of(j) {
                continue;
            }
            let rest = j.difference(i);
            let c = p.mul(p.mul(x, y), p.sign(i.merge_is_odd(rest)));
            out.add_term(rest, c);
        }
    }
    Ok(out)
}

impl fmt::Display for Multivector {
    /// `0`, a bare scalar in degree 0, or `e12 + 2*e34`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (b, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            match (b.degree(), c) {
                (0, c) => write!(f, "{c}")?,
                (_, 1) => write!(f, "{b}")?,
                (_, c) => write!(f, "{c}*{b}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn f(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    fn e(p: Prime, dim: usize, idx: &[usize]) -> Multivector {
        Multivector::basis(p, dim, Space::Primal, Blade::from_indices(idx).unwrap()).unwrap()
    }

    fn ed(p: Prime, dim: usize, idx: &[usize]) -> Multivector {
        e(p, dim, idx).with_space(Space::Dual)
    }

    #[test]
    fn basis_wedges() {
        let p = f(3);
        let e1 = e(p, 4, &[0]);
        let e2 = e(p, 4, &[1]);
        assert_eq!(e1.wedge(&e2).unwrap(), e(p, 4, &[0, 1]));
        assert_eq!(e2.wedge(&e1).unwrap(), e(p, 4, &[0, 1]).neg());
        assert!(e1.wedge(&e1).unwrap().is_zero());
    }

    #[test]
    fn square_of_two_plane_vanishes_mod_two() {
        let p = f(2);
        let w = e(p, 4, &[0, 1]).add(&e(p, 4, &[2, 3])).unwrap();
        let sq = w.wedge(&w).unwrap();
        assert!(sq.is_zero());
        assert_eq!(sq.degree(), 4);
        // over F_3 the cross terms survive as 2·e1234
        let p3 = f(3);
        let w3 = e(p3, 4, &[0, 1]).add(&e(p3, 4, &[2, 3])).unwrap();
        assert_eq!(w3.wedge(&w3).unwrap(), e(p3, 4, &[0, 1, 2, 3]).scale(2));
    }

    #[test]
    fn overflow_degree_is_zero() {
        let p = f(5);
        let a = e(p, 3, &[0, 1]);
        let b = e(p, 3, &[1, 2]);
        let w = a.wedge(&b).unwrap();
        assert!(w.is_zero());
        assert_eq!(w.degree(), 4);
    }

    #[test]
    fn mismatches_are_errors() {
        let p = f(5);
        assert!(e(p, 3, &[0]).wedge(&e(p, 4, &[1])).is_err());
        assert!(e(p, 3, &[0]).wedge(&ed(p, 3, &[1])).is_err());
        assert!(e(p, 3, &[0]).wedge(&e(f(3), 3, &[1])).is_err());
        assert!(dual_pairing(&e(p, 3, &[0]), &e(p, 3, &[0])).is_err());
        assert!(dual_pairing(&ed(p, 3, &[0]), &e(p, 3, &[0, 1])).is_err());
        assert!(contract(&ed(p, 3, &[0, 1]), &e(p, 3, &[0])).is_err());
    }

    #[test]
    fn pairing_examples() {
        let p = f(2);
        let pair = |a: &Multivector, b: &Multivector| dual_pairing(a, b).unwrap().value();
        assert_eq!(pair(&ed(p, 4, &[0, 1]), &e(p, 4, &[0, 1])), 1);
        assert_eq!(pair(&ed(p, 4, &[0, 1]), &e(p, 4, &[0, 2])), 0);
        let fsum = ed(p, 4, &[0, 1]).add(&ed(p, 4, &[2, 3])).unwrap();
        let wsum = e(p, 4, &[0, 1]).add(&e(p, 4, &[2, 3])).unwrap();
        assert_eq!(pair(&fsum, &wsum), 0);
    }

    #[test]
    fn contraction_examples() {
        let p = f(2);
        let v1 = ed(p, 4, &[0]);
        assert_eq!(contract(&v1, &e(p, 4, &[0, 1])).unwrap(), e(p, 4, &[1]));
        assert!(contract(&ed(p, 4, &[2]), &e(p, 4, &[0, 1])).unwrap().is_zero());
        let w = e(p, 4, &[0, 1]).add(&e(p, 4, &[2, 3])).unwrap();
        assert_eq!(contract(&v1, &w).unwrap(), e(p, 4, &[1]));
        // sign: e2^∨ ⌟ e12 = −e1
        let p5 = f(5);
        assert_eq!(
            contract(&ed(p5, 2, &[1]), &e(p5, 2, &[0, 1])).unwrap(),
            e(p5, 2, &[0]).neg()
        );
    }

    #[test]
    fn display() {
        let p = f(3);
        assert_eq!(format!("{}", Multivector::zero(p, 3, 2, Space::Primal).unwrap()), "0");
        let w = e(p, 4, &[0, 1]).add(&e(p, 4, &[2, 3]).scale(2)).unwrap();
        assert_eq!(format!("{w}"), "e12 + 2*e34");
        assert_eq!(format!("{}", Multivector::scalar(p, 2, Space::Primal, 1).unwrap()), "1");
    }

    #[test]
    fn dense_round_trip() {
        let p = f(3);
        let w = e(p, 5, &[0, 3]).add(&e(p, 5, &[1, 4]).scale(2)).unwrap();
        let d = w.to_dense();
        assert_eq!(d.len(), 10);
        assert_eq!(Multivector::from_dense(p, 5, 2, Space::Primal, &d).unwrap(), w);
    }
}
